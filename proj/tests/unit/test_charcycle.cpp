#include "doctest.h"
#include "padicdx/charcycle.hpp"
#include "padicdx/errors.hpp"
#include "test_support.hpp"

using namespace padicdx;

namespace {
const Prime P2{2};
const TatePoly X = TatePoly::variable('x');
const DiffOp D = DiffOp::d_power(1);
DiffOp op(const TatePoly& f) { return DiffOp(f); }
const DiffOp XD1 = op(X) * D - op(1);

PointMultiplicities pts(std::initializer_list<std::pair<ResiduePoly, int>> l) {
  PointMultiplicities out;
  for (const auto& [g, m] : l) out.push_back({ClosedPoint{g}, m});
  return out;
}
}  // namespace

TEST_CASE("infinite supports of the fixtures") {
  const DiffOp P = op((X - 2) * (X - 4)) * D * D + op(X) * D;
  CHECK(infinite_support(P, P2).points == pts({{ResiduePoly(P2, {0, 1}), 2}}));
  CHECK(infinite_support(XD1, P2).points == pts({{ResiduePoly(P2, {0, 1}), 1}}));
  CHECK(infinite_support(D * D * D, P2).points.empty());
  CHECK_THROWS_AS(infinite_support(DiffOp(), P2), ZeroOperator);
  CHECK_THROWS_AS(infinite_support(XD1.truncated(), P2), TruncatedOperand);
}

TEST_CASE("characteristic cycles of the fixtures") {
  const CharCycle cc = char_cycle(XD1, P2);
  CHECK(cc.m0 == 1);
  CHECK(cc.vertical == pts({{ResiduePoly(P2, {0, 1}), 1}}));
  CHECK(cc.length() == 2);
  CHECK(char_cycle(op(1), P2).is_zero());
  const CharCycle c2 = char_cycle(XD1 * D, P2);
  CHECK(c2.m0 == 2);
  CHECK(c2.vertical == cc.vertical);
}

TEST_CASE("cycle sums") {
  const CharCycle a = cc_add(char_cycle(D, P2), char_cycle(XD1, P2));
  CHECK(a.m0 == 2);
  CHECK(a.vertical == pts({{ResiduePoly(P2, {0, 1}), 1}}));
  const CharCycle c = char_cycle(XD1, P2);
  CHECK(cc_add(c, CharCycle{}) == c);
  const CharCycle xd = char_cycle(op(X) * D, P2);
  CHECK(cc_add(xd, xd) == CharCycle{2, pts({{ResiduePoly(P2, {0, 1}), 2}})});
}

TEST_CASE("zero cycles are exactly the units") {
  CHECK(bernstein_check(op(1), P2));
  CHECK(bernstein_check(XD1, P2));
  CHECK(bernstein_check(op(8), P2));
  CHECK(is_operator_unit(op(8), P2));
  CHECK(char_cycle(op(8), P2).is_zero());
  CHECK_FALSE(is_operator_unit(op(X - 2), P2));
  CHECK_FALSE(char_cycle(op(X - 2), P2).is_zero());
}

TEST_CASE("random additivity, scalar invariance and support degree") {
  testsupport::Gen gen(61);
  for (std::uint64_t pv : {2, 3, 5}) {
    const Prime p(pv);
    for (int i = 0; i < 50; ++i) {
      const DiffOp A = gen.diff_op(p, 3, 3, -2, 2);
      const DiffOp B = gen.diff_op(p, 3, 3, -2, 2);
      CHECK(char_cycle(A * B, p) == cc_add(char_cycle(A, p), char_cycle(B, p)));
      CHECK(char_cycle(A.scaled(gen.scalar(p, -4, 4)), p) == char_cycle(A, p));
      const CharCycle cc = char_cycle(A, p);
      // Multiplicities are not weighted by residue degree, so the degree of
      // the reduced leading coefficient is recovered as sum deg * mult.
      long total = 0, weighted = 0;
      for (const auto& [pt, m] : cc.vertical) total += m, weighted += pt.degree() * m;
      if (!is_operator_unit(A, p))
        CHECK(weighted == normalized_reduction(A.leading_coefficient(), p).degree());
      CHECK(cc.length() == cc.m0 + total);
      CHECK(bernstein_check(A, p));
      const long rmin = infinite_support(A, p).rmin;
      for (long r = rmin; r <= rmin + 2; ++r)
        CHECK_FALSE(std::holds_alternative<FailsDecay>(thm28_analysis(A, r, p)));
    }
  }
}

TEST_CASE("renderers") {
  const std::string zero = render_cc(CharCycle{}, RenderFormat::Ascii);
  CHECK(zero.find("Char(D/P): 0") != std::string::npos);
  CHECK(zero.find('=') == std::string::npos);

  const std::string one = render_cc(char_cycle(XD1, P2), RenderFormat::Ascii);
  CHECK(one.find("m0=1") != std::string::npos);
  CHECK(one.find("m=1") != std::string::npos);

  const std::string svg = render_cc(char_cycle(XD1, P2), RenderFormat::Svg);
  CHECK(svg.find("width=\"640\"") != std::string::npos);
  CHECK(svg.find("height=\"360\"") != std::string::npos);
}
