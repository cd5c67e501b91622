#include "padicdx/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "padicdx/blowup.hpp"
#include "padicdx/errors.hpp"
#include "padicdx/micro_op.hpp"
#include "padicdx/parser.hpp"

namespace padicdx::cli {
namespace {

using nlohmann::json;

json norm_json(NormExp n) {
  return n.is_zero() ? json(nullptr) : json(n.exponent());
}

json residue_json(const ResiduePoly& g) { return json(g.coeffs()); }

json point_json(const ClosedPoint& pt, int mult) {
  return {{"point", residue_json(pt.minimal_poly)},
          {"label", pt.label()},
          {"degree", pt.degree()},
          {"mult", mult}};
}

json tate_json(const TatePoly& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_string(c));
  return out;
}

json cycle_json(const CharCycle& cc, long rmin) {
  json vertical = json::array();
  for (const auto& [pt, m] : cc.vertical) vertical.push_back(point_json(pt, m));
  return {{"m0", cc.m0},
          {"vertical", vertical},
          {"length", cc.length()},
          {"rmin", rmin}};
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n");
  const auto e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

void require_inputs(const std::string& cmd, const std::vector<std::string>& in,
                    std::size_t n) {
  if (in.size() != n)
    throw ConfigError(cmd + " expects " + std::to_string(n) + " input(s), got " +
                      std::to_string(in.size()));
}

MicroLevels micro_levels(const SessionConfig& cfg) {
  if (cfg.level < cfg.micro_level)
    throw ConfigError("micro commands need k >= r >= 1");
  return MicroLevels(cfg.level, cfg.micro_level);
}

BlowupModel blowup_model(const SessionConfig& cfg) {
  if (!cfg.blowup) throw ConfigError("this command needs --blowup c=<q>,m=<int>");
  return BlowupModel(cfg.blowup->center, cfg.blowup->level, cfg.prime);
}

RenderFormat plot_format(const SessionConfig& cfg) {
  return cfg.format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
}

void write_plot(const SessionConfig& cfg, const std::string& text, json& out) {
  if (!cfg.plot_path) return;
  std::ofstream file(*cfg.plot_path);
  if (!file) throw ConfigError("cannot write plot to " + *cfg.plot_path);
  file << text;
  out["plot_path"] = *cfg.plot_path;
}

json verdict_json(const Lemma24Verdict& v) {
  json out{{"verdict", verdict_name(v)}};
  if (auto* ok = std::get_if<InvertibleOnDisc>(&v)) out["q"] = ok->q;
  if (auto* bad = std::get_if<BadLocusOnly>(&v)) {
    out["q"] = bad->q;
    out["bad"] = residue_json(bad->bad);
    out["bad_label"] = bad->bad.to_string();
  }
  if (auto* no = std::get_if<NotInvertible>(&v)) out["reason"] = no->reason;
  return out;
}

json verdict_json(const Thm28Verdict& v) {
  json out{{"verdict", verdict_name(v)}};
  if (auto* bad = std::get_if<BadLocus>(&v)) {
    out["bad"] = residue_json(bad->bad);
    out["bad_label"] = bad->bad.to_string();
  }
  if (auto* fails = std::get_if<FailsDecay>(&v)) out["rmin_hint"] = fails->rmin;
  return out;
}

}  // namespace

void SessionConfig::validate() const {
  if (micro_level < 1) throw ConfigError("micro level r must be >= 1");
  if (level < 0) throw ConfigError("level k must be >= 0");
  if (eps_exp >= 0) throw ConfigError("--eps must be a negative exponent");
  if (format != "ascii" && format != "svg" && format != "json")
    throw ConfigError("--format must be ascii, svg or json");
}

BlowupSpec parse_blowup_spec(const std::string& text, Prime p) {
  BlowupSpec spec;
  bool have_c = false, have_m = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("bad --blowup item: " + item);
    const std::string key = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    if (key == "c") {
      spec.center = parse_scalar(value, p);
      have_c = true;
    } else if (key == "m") {
      try {
        std::size_t used = 0;
        spec.level = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ConfigError("bad blow-up level: " + value);
      }
      have_m = true;
    } else {
      throw ConfigError("unknown --blowup key: " + key);
    }
  }
  if (!have_c || !have_m) throw ConfigError("--blowup needs c=<q>,m=<int>");
  if (spec.level < 1) throw ConfigError("blow-up level m must be >= 1");
  return spec;
}

std::vector<std::vector<std::string>> split_matrix(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<std::string> entries;
    std::stringstream rs(row);
    std::string entry;
    while (std::getline(rs, entry, ',')) entries.push_back(trim(entry));
    rows.push_back(std::move(entries));
  }
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw ConfigError("connection matrix must be square");
  if (rows.empty()) throw ConfigError("empty connection matrix");
  return rows;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{
      "norm",    "order",    "commutator",     "micro-check",
      "micro-invert", "thm28", "charvar",      "blowup-support",
      "fiber-check",  "connection-level", "render"};
  return names;
}

json run(const std::string& command, const SessionConfig& cfg,
         const std::vector<std::string>& inputs) {
  cfg.validate();
  const Prime p = cfg.prime;
  json out{{"command", command}, {"p", p.value()}};

  if (command == "norm") {
    require_inputs(command, inputs, 1);
    const DiffOp op = parse_diff_op(inputs[0], p);
    out["k"] = cfg.level;
    out["operator"] = op.to_string();
    out["norm_exp"] = norm_json(norm_level(op, cfg.level, p));
    out["order"] = op.is_zero() ? json(nullptr) : json(order_level(op, cfg.level, p));
  } else if (command == "order") {
    require_inputs(command, inputs, 1);
    const DiffOp op = parse_diff_op(inputs[0], p);
    out["k"] = cfg.level;
    out["operator"] = op.to_string();
    out["order"] = order_level(op, cfg.level, p);
  } else if (command == "commutator") {
    require_inputs(command, inputs, 2);
    const DiffOp a = parse_diff_op(inputs[0], p);
    const DiffOp b = parse_diff_op(inputs[1], p);
    const DiffOp c = commutator(a, b);
    out["k"] = cfg.level;
    out["result"] = c.to_string();
    out["norm_exp"] = norm_json(norm_level(c, cfg.level, p));
    out["bound_exp"] = norm_json(norm_level(a, cfg.level, p) +
                                 norm_level(b, cfg.level, p) - cfg.level);
  } else if (command == "micro-check") {
    require_inputs(command, inputs, 1);
    const MicroLevels lv = micro_levels(cfg);
    const MicroOp s = parse_micro_op(inputs[0], p);
    out.update(verdict_json(check_lemma24(s, lv, p)));
    out["k"] = lv.k();
    out["r"] = lv.r();
    out["operator"] = s.to_string();
    out["norm_exp"] = norm_json(micro_norm(s, lv, p));
    json canon = json::array();
    for (const auto& t : canonical_form(s, lv, p))
      canon.push_back({{"n", t.n},
                       {"coeff", tate_json(t.coeff)},
                       {"shift", t.shift},
                       {"norm_exp", norm_json(gauss_norm(t.coeff, p))}});
    out["canonical_form"] = canon;
  } else if (command == "micro-invert") {
    require_inputs(command, inputs, 1);
    const MicroLevels lv = micro_levels(cfg);
    const MicroOp s = parse_micro_op(inputs[0], p);
    const MicroInverse inv = micro_invert(s, lv, p, NormExp(cfg.eps_exp));
    out["k"] = lv.k();
    out["r"] = lv.r();
    out["operator"] = s.to_string();
    out["inverse"] = inv.inverse.to_string();
    out["residual_exp"] = norm_json(inv.residual);
    out["eps_exp"] = cfg.eps_exp;
    out["terms"] = inv.terms;
  } else if (command == "thm28") {
    require_inputs(command, inputs, 1);
    const DiffOp op = parse_diff_op(inputs[0], p);
    out.update(verdict_json(thm28_analysis(op, cfg.micro_level, p)));
    out["r"] = cfg.micro_level;
    out["operator"] = op.to_string();
    out["rmin"] = decay_rmin(op, p);
  } else if (command == "charvar" || command == "render") {
    require_inputs(command, inputs, 1);
    const DiffOp op = parse_diff_op(inputs[0], p);
    const CharCycle cc = char_cycle(op, p);
    const long rmin = decay_rmin(op, p);
    if (command == "charvar") {
      out.update(cycle_json(cc, rmin));
      if (cfg.plot_path) write_plot(cfg, render_cc(cc, plot_format(cfg)), out);
    } else {
      out["format"] = cfg.format;
      out["cycle"] = cycle_json(cc, rmin);
      const std::string text = cfg.format == "json"
                                   ? cycle_json(cc, rmin).dump(2) + "\n"
                                   : render_cc(cc, plot_format(cfg));
      out["plot"] = text;
      write_plot(cfg, text, out);
    }
  } else if (command == "blowup-support") {
    require_inputs(command, inputs, 1);
    const BlowupModel b = blowup_model(cfg);
    const DiffOp op = parse_diff_op(inputs[0], p);
    out["blowup"] = {{"c", to_string(b.center())},
                     {"m", b.level()},
                     {"k_blowup", b.k_blowup()}};
    json pts = json::array();
    for (const auto& [pt, m] : support_on_blowup(op, b, p)) {
      json j = point_json(pt.point, m);
      j["chart"] = chart_name(pt.chart);
      pts.push_back(j);
    }
    out["points"] = pts;
  } else if (command == "fiber-check") {
    require_inputs(command, inputs, 1);
    const BlowupModel b = blowup_model(cfg);
    const DiffOp op = parse_diff_op(inputs[0], p);
    const FiberSumReport rep = fiber_sum_report(op, b, p);
    json base = json::array(), blown = json::array(), charts = json::array();
    for (const auto& [pt, m] : rep.base) base.push_back({pt.label(), m});
    for (const auto& [pt, m] : rep.blowup) {
      blown.push_back({pt.point.label(), m});
      charts.push_back(chart_name(pt.chart));
    }
    out["ok"] = rep.ok;
    out["base"] = base;
    out["blowup"] = blown;
    out["blowup_charts"] = charts;
    out["m0_base"] = rep.m0_base;
    out["m0_blowup"] = rep.m0_blowup;
  } else if (command == "connection-level") {
    require_inputs(command, inputs, 1);
    std::vector<std::vector<TatePoly>> entries;
    for (const auto& row : split_matrix(inputs[0])) {
      entries.emplace_back();
      for (const auto& e : row) entries.back().push_back(parse_function(e, p));
    }
    const ConnectionMatrix a(std::move(entries));
    out["size"] = a.size();
    out["sup_norm_exp"] = norm_json(sup_norm(a, p));
    out["level"] = connection_level(a, p);
  } else {
    throw ConfigError("unknown subcommand: " + command);
  }
  return out;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact p-adic differential operators: norms, microlocal "
               "inverses, characteristic cycles and blow-ups"};
  app.require_subcommand(1);

  unsigned long prime = 2;
  long level = -1;
  long micro_level = 1;
  long eps = -6;
  std::string blowup;
  std::string plot;
  std::string format = "ascii";
  app.add_option("-p,--prime", prime, "prime p (also the uniformizer)")
      ->envname("PADICDX_DEFAULT_PRIME");
  app.add_option("-k,--level", level, "congruence level k (default: r)");
  app.add_option("-r,--micro-level", micro_level, "microlocal level r");
  app.add_option("--eps", eps, "precision exponent: residuals below p^eps");
  app.add_option("--blowup", blowup, "blow-up c=<scalar>,m=<int>");
  app.add_option("--plot", plot, "write the rendered cycle to this path");
  app.add_option("--format", format, "ascii | svg | json");

  std::vector<std::string> inputs;
  for (const auto& name : subcommands()) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->add_option("input", inputs, "operator expression(s)")->required();
  }

  auto report = [&](const std::string& kind, const std::string& msg, int code) {
    out << json{{"error", {{"kind", kind}, {"message", msg}}}}.dump() << "\n";
    err << kind << ": " << msg << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return report("UsageError", e.what(), 1);
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();

  try {
    SessionConfig cfg;
    cfg.prime = Prime(prime);
    cfg.micro_level = micro_level;
    cfg.level = level < 0 ? std::max(1L, micro_level) : level;
    cfg.eps_exp = eps;
    cfg.format = format;
    if (!plot.empty()) cfg.plot_path = plot;
    if (!blowup.empty()) cfg.blowup = parse_blowup_spec(blowup, cfg.prime);
    out << run(command, cfg, inputs).dump() << "\n";
    return 0;
  } catch (const InvalidArgument& e) {
    // Bad prime or similar configuration value.
    return report("ConfigError", e.what(), 1);
  } catch (const InputError& e) {
    return report(e.kind(), e.what(), 1);
  } catch (const DomainError& e) {
    return report(e.kind(), e.what(), 2);
  }
}

}  // namespace padicdx::cli
