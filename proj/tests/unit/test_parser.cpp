#include "doctest.h"
#include "padicdx/errors.hpp"
#include "padicdx/parser.hpp"
#include "test_support.hpp"

using namespace padicdx;

namespace {
const Prime P2{2};
const TatePoly X = TatePoly::variable('x');
const DiffOp D = DiffOp::d_power(1);

template <class E>
std::size_t error_position(std::string_view src) {
  try {
    parse_diff_op(src, P2);
  } catch (const E& e) {
    return e.position();
  }
  FAIL("no error raised for " << src);
  return 0;
}

// Random trees restricted to shapes the printer can express unambiguously:
// sums hold terms, products hold factors, powers sit on atoms.
class TreeGen {
 public:
  explicit TreeGen(testsupport::Gen& g) : g_(g) {}

  OpExprPtr expr(int depth) {
    const long n = g_.uniform(1, 3);
    if (n == 1) return term(depth);
    std::vector<OpExprPtr> terms;
    terms.push_back(g_.coin(0.2) ? OpExpr::neg(factor(depth)) : term(depth));
    for (long i = 1; i < n; ++i)
      terms.push_back(g_.coin(0.4) ? OpExpr::neg(term(depth)) : term(depth));
    return OpExpr::sum(std::move(terms));
  }

 private:
  OpExprPtr term(int depth) {
    const long n = g_.uniform(1, 3);
    if (n == 1) return plain_factor(depth);
    std::vector<OpExprPtr> f;
    for (long i = 0; i < n; ++i) f.push_back(factor(depth));
    return OpExpr::product(std::move(f));
  }
  OpExprPtr factor(int depth) {
    return g_.coin(0.15) ? OpExpr::neg(factor(depth)) : plain_factor(depth);
  }
  OpExprPtr plain_factor(int depth) {
    OpExprPtr a = atom(depth);
    if (!g_.coin(0.3)) return a;
    const bool invertible =
        (a->kind == OpExpr::Kind::Symbol && (a->symbol == 'd' || a->symbol == 'p')) ||
        (a->kind == OpExpr::Kind::Rational && a->value != 0);
    return OpExpr::power(a, g_.uniform(invertible ? -3 : 0, 4));
  }
  OpExprPtr atom(int depth) {
    const long pick = g_.uniform(0, depth > 0 ? 5 : 4);
    switch (pick) {
      case 0: return OpExpr::symbol_node('d');
      case 1: return OpExpr::symbol_node('x');
      case 2: return OpExpr::symbol_node('p');
      case 3: return OpExpr::rational(Rational(g_.uniform(0, 30)));
      case 4: {
        Rational q(g_.uniform(1, 30), g_.uniform(1, 12));
        q.canonicalize();
        return OpExpr::rational(q);
      }
      default: return OpExpr::paren(expr(depth - 1));
    }
  }

  testsupport::Gen& g_;
};
}  // namespace

TEST_CASE("fixture expressions") {
  CHECK(parse_diff_op("(x - p)*(x - p^2)*d^2 + x*d", P2) ==
        DiffOp((X - 2) * (X - 4)) * D * D + DiffOp(X) * D);
  CHECK(parse_diff_op("x*d - 1", P2) == DiffOp(X) * D - DiffOp::scalar(1));
  CHECK(parse_diff_op("d*x", P2) == DiffOp(X) * D + DiffOp::scalar(1));
  CHECK(parse_diff_op("p^-3 + 3/4", Prime(3)) == DiffOp::scalar(Rational(1, 27) + Rational(3, 4)));
  CHECK(parse_micro_op("d^-1*x", P2) ==
        MicroOp(X) * MicroOp::d_power(-1) - MicroOp::d_power(-2));
  CHECK(parse_function("(x - p)*(x - p^2)", P2) == (X - 2) * (X - 4));
  CHECK(parse_function("t^2 - 1", P2) == TatePoly::variable('t') * TatePoly::variable('t') - TatePoly(1, 't'));
  CHECK(parse_scalar("p^2", Prime(3)) == 9);
  CHECK(parse_scalar("-3/4*p^-1", Prime(3)) == Rational(-1, 4));
  CHECK_THROWS_AS(parse_scalar("x", Prime(3)), SyntaxError);
}

TEST_CASE("products keep their written order") {
  const auto e = parse("d*x");
  REQUIRE(e->kind == OpExpr::Kind::Product);
  CHECK(e->children[0]->symbol == 'd');
  CHECK(e->children[1]->symbol == 'x');
  CHECK(print(*e) == "d*x");
}

TEST_CASE("errors carry positions") {
  CHECK(error_position<SyntaxError>("x*(") == 3);
  CHECK(error_position<SyntaxError>("x + + 1") == 4);
  CHECK(error_position<SyntaxError>("2x") == 1);
  CHECK(error_position<SyntaxError>("x^") == 2);
  CHECK(error_position<SyntaxError>("(x") == 2);
  CHECK(error_position<SyntaxError>("x^-1") == 0);
  CHECK(error_position<SyntaxError>("3/0") == 0);
  CHECK(error_position<SyntaxError>("   ") == 3);
  CHECK(error_position<NegativePowerOutsideMicroMode>("x + d^-2") == 4);
  CHECK_THROWS_AS(parse_diff_op("x*t", P2), SyntaxError);
  CHECK_THROWS_AS(parse_function("d", P2), SyntaxError);
  CHECK_NOTHROW(parse("x + d^-2", ParseMode::Micro));
}

TEST_CASE("printing and reparsing 500 random trees") {
  testsupport::Gen gen(81);
  TreeGen trees(gen);
  for (int i = 0; i < 500; ++i) {
    const OpExprPtr e = trees.expr(2);
    const std::string text = print(*e);
    const OpExprPtr back = parse(text, ParseMode::Micro);
    CHECK_MESSAGE(same_tree(*e, *back), text);
    CHECK(print(*back) == text);
  }
}

TEST_CASE("canonical operator text reparses to the same operator") {
  testsupport::Gen gen(82);
  for (std::uint64_t pv : {2, 3, 5}) {
    const Prime p(pv);
    for (int i = 0; i < 60; ++i) {
      const DiffOp P = gen.diff_op(p, 3, 3, -2, 2);
      const std::string text = P.to_string();
      const DiffOp back = parse_diff_op(text, p);
      CHECK_MESSAGE(back == P, text);
      CHECK(back.to_string() == text);

      const MicroOp S = gen.micro_op(p, -3, 3, 2, -2, 2);
      const MicroOp sback = parse_micro_op(S.to_string(), p);
      CHECK_MESSAGE(sback == S, S.to_string());
    }
  }
}
