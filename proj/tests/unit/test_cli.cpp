#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "padicdx/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  json doc;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "padicdx");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = padicdx::cli::main_entry(static_cast<int>(argv.size()),
                                            argv.data(), out, err);
  return {code, json::parse(out.str()), err.str()};
}

}  // namespace

TEST_CASE("charvar on the two-root fixture") {
  const auto r = invoke({"charvar", "-p", "2", "(x-p)*(x-p^2)*d^2"});
  CHECK(r.code == 0);
  CHECK(r.doc["command"] == "charvar");
  CHECK(r.doc["m0"] == 2);
  CHECK(r.doc["length"] == 4);
  REQUIRE(r.doc["vertical"].size() == 1);
  CHECK(r.doc["vertical"][0]["label"] == "x");
  CHECK(r.doc["vertical"][0]["point"] == json::array({0, 1}));
  CHECK(r.doc["vertical"][0]["mult"] == 2);
}

TEST_CASE("norm with a tie between levels") {
  const auto r = invoke({"norm", "-p", "2", "-k", "1", "p*d^2 + d"});
  CHECK(r.code == 0);
  CHECK(r.doc["norm_exp"] == 1);
  CHECK(r.doc["order"] == 2);
}

TEST_CASE("fiber-check on the two-root fixture") {
  const auto r = invoke({"fiber-check", "-p", "2", "--blowup", "c=0,m=1",
                         "(x-p)*(x-p^2)*d^2"});
  CHECK(r.code == 0);
  CHECK(r.doc["ok"] == true);
  CHECK(r.doc["base"] == json::parse(R"([["x",2]])"));
  CHECK(r.doc["blowup"] == json::parse(R"([["t",1],["t-1",1]])"));
}

TEST_CASE("the remaining subcommands") {
  auto r = invoke({"order", "-k", "0", "p*d^2 + d"});
  CHECK(r.doc["order"] == 1);
  r = invoke({"commutator", "x*d", "d"});
  CHECK(r.doc["result"] == "-d");
  r = invoke({"micro-check", "-k", "2", "-r", "1", "d + d^-1"});
  CHECK(r.doc["verdict"] == "InvertibleOnDisc");
  CHECK(r.doc["q"] == 1);
  CHECK(r.doc["norm_exp"] == 2);
  r = invoke({"micro-invert", "-k", "1", "--eps", "-4", "1 - p*p*d"});
  CHECK(r.code == 0);
  CHECK(r.doc["residual_exp"] == -5);
  CHECK(r.doc["terms"] == 5);
  r = invoke({"thm28", "-r", "1", "d - p^-3"});
  CHECK(r.doc["verdict"] == "FailsDecay");
  CHECK(r.doc["rmin"] == 4);
  r = invoke({"blowup-support", "--blowup", "c=0,m=1", "(x-p)*(x-p^2)*d^2"});
  CHECK(r.doc["points"].size() == 2);
  CHECK(r.doc["points"][0]["chart"] == "U1");
  r = invoke({"connection-level", "p^-1, x; 0, p"});
  CHECK(r.doc["level"] == 1);
  CHECK(r.doc["size"] == 2);
  r = invoke({"render", "--format", "json", "x*d - 1"});
  CHECK(r.doc["cycle"]["m0"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"norm", "x*("}).code == 1);
  CHECK(invoke({"norm", "x*("}).doc["error"]["kind"] == "SyntaxError");
  CHECK(invoke({"norm", "d^-1"}).doc["error"]["kind"] == "NegativePowerOutsideMicroMode");
  CHECK(invoke({"norm", "-p", "4", "d"}).code == 1);
  CHECK(invoke({"micro-check", "-k", "1", "-r", "2", "d"}).code == 1);
  CHECK(invoke({"micro-invert", "--eps", "2", "d"}).code == 1);
  CHECK(invoke({"fiber-check", "d"}).code == 1);
  CHECK(invoke({"norm", "--format", "png", "d"}).code == 1);
  CHECK(invoke({"frobnicate", "d"}).code == 1);

  const auto bad = invoke({"micro-invert", "x*d"});
  CHECK(bad.code == 2);
  CHECK(bad.doc["error"]["kind"] == "NotInvertibleHere");
  CHECK(invoke({"order", "0"}).code == 2);
  CHECK(invoke({"charvar", "0"}).doc["error"]["kind"] == "ZeroOperator");
}

TEST_CASE("leading minus after the separator") {
  const auto r = invoke({"norm", "--", "-x*d"});
  CHECK(r.code == 0);
  CHECK(r.doc["operator"] == "-x*d");
}

TEST_CASE("default prime from the environment") {
  ::setenv("PADICDX_DEFAULT_PRIME", "3", 1);
  const auto r = invoke({"norm", "-k", "0", "p"});
  ::unsetenv("PADICDX_DEFAULT_PRIME");
  CHECK(r.doc["p"] == 3);
  CHECK(r.doc["norm_exp"] == -1);
  CHECK(invoke({"norm", "p"}).doc["p"] == 2);
}

TEST_CASE("plots are written to the requested path") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto ascii = dir / "padicdx_cli_test.txt";
  const auto svg = dir / "padicdx_cli_test.svg";
  auto r = invoke({"render", "--plot", ascii.string(), "x*d - 1"});
  CHECK(r.code == 0);
  std::ifstream a(ascii);
  std::stringstream text;
  text << a.rdbuf();
  CHECK(text.str() == r.doc["plot"].get<std::string>());
  CHECK(text.str().find("m0=1") != std::string::npos);

  r = invoke({"charvar", "--format", "svg", "--plot", svg.string(), "x*d - 1"});
  CHECK(r.code == 0);
  CHECK(r.doc["plot_path"] == svg.string());
  std::ifstream s(svg);
  std::stringstream svg_text;
  svg_text << s.rdbuf();
  CHECK(svg_text.str().rfind("<svg", 0) == 0);
  std::filesystem::remove(ascii);
  std::filesystem::remove(svg);
}

TEST_CASE("blow-up spec parsing") {
  const padicdx::Prime p(3);
  const auto spec = padicdx::cli::parse_blowup_spec("c=p^2, m=3", p);
  CHECK(spec.center == 9);
  CHECK(spec.level == 3);
  CHECK_THROWS(padicdx::cli::parse_blowup_spec("c=0", p));
  CHECK_THROWS(padicdx::cli::parse_blowup_spec("c=0,m=x", p));
  CHECK_THROWS(padicdx::cli::parse_blowup_spec("c=0,m=0", p));
  CHECK_THROWS(padicdx::cli::parse_blowup_spec("c=0,m=1,z=2", p));
}
