#include "padicdx/blowup.hpp"

#include <algorithm>
#include <map>

#include "padicdx/errors.hpp"

namespace padicdx {
namespace {

ClosedPoint base_point_at(const Rational& c, Prime p) {
  const std::uint64_t cbar = reduce_mod_pi(c, p).value;
  return ClosedPoint{ResiduePoly(p, {(p.value() - cbar) % p.value(), 1}, 'x'),
                     "X"};
}

const Rational& validated_center(const Rational& center, long level, Prime p) {
  if (level < 1) throw InvalidArgument("blow-up level m must be >= 1");
  auto v = valuation(center, p);
  if (v && *v < 0)
    throw InvalidArgument("blow-up center must be integral, got " +
                          to_string(center));
  return center;
}

}  // namespace

BlowupModel::BlowupModel(const Rational& center, long level, Prime p)
    : c_(center),
      m_(level),
      center_point_(base_point_at(validated_center(center, level, p), p)) {}

std::string chart_name(Chart c) {
  switch (c) {
    case Chart::U1: return "U1";
    case Chart::U2: return "U2";
    case Chart::Crossing: return "Crossing";
  }
  return "?";
}

TatePoly pull_function_u1(const TatePoly& f, const BlowupModel& b, Prime p) {
  return f.compose_affine(b.center(), prime_power(p, b.level()), 't');
}

DiffOp pull_operator_u1(const DiffOp& op, const BlowupModel& b, long k,
                        Prime p) {
  if (k < b.level())
    throw LevelTooSmall("level k=" + std::to_string(k) +
                        " is below k_blowup=" + std::to_string(b.level()));
  if (!op.is_finite())
    throw TruncatedOperand("cannot transport a truncated operator");
  std::map<long, TatePoly> out;
  for (const auto& [n, f] : op.terms())
    out.emplace(n, pull_function_u1(f, b, p).scaled(prime_power(p, -b.level() * n)));
  return DiffOp(std::move(out), 't');
}

NormExp chart_commutator_constant(const BlowupModel& b, long k, Prime p) {
  const DiffOp scaled_d = DiffOp::d_power(1).scaled(prime_power(p, k));
  const DiffOp pulled = pull_operator_u1(scaled_d, b, k, p);
  return norm_level(commutator(pulled, DiffOp::variable('t')), 0, p);
}

long crossing_multiplicity(const TatePoly& f, const BlowupModel& b, Prime p) {
  if (f.is_zero()) throw ZeroInput("crossing multiplicity of zero");
  const TatePoly g = f.compose_affine(b.center(), 1, 'y');
  std::vector<std::pair<long, long>> pts;  // (index, valuation)
  for (std::size_t i = 0; i < g.coeffs().size(); ++i)
    if (g.coeffs()[i] != 0)
      pts.emplace_back(static_cast<long>(i), *valuation(g.coeffs()[i], p));
  // Lower convex hull from left to right; a segment of slope s covers
  // (length) roots of valuation -s.
  long count = 0;
  std::size_t cur = 0;
  while (cur + 1 < pts.size()) {
    std::size_t best = cur + 1;
    for (std::size_t j = cur + 1; j < pts.size(); ++j) {
      // slope_j <= slope_best, compared by cross multiplication
      const long dj = pts[j].first - pts[cur].first;
      const long db = pts[best].first - pts[cur].first;
      const long lhs = (pts[j].second - pts[cur].second) * db;
      const long rhs = (pts[best].second - pts[cur].second) * dj;
      if (lhs <= rhs) best = j;
    }
    const long len = pts[best].first - pts[cur].first;
    const long drop = pts[cur].second - pts[best].second;  // = -slope * len
    if (drop > 0 && drop < b.level() * len) count += len;
    cur = best;
  }
  return count;
}

ChartMultiplicities support_on_blowup(const DiffOp& op, const BlowupModel& b,
                                      Prime p) {
  if (op.is_zero()) throw ZeroOperator("support of D/0");
  const TatePoly& lead = op.leading_coefficient();
  ChartMultiplicities out;

  const ResiduePoly u1 = normalized_reduction(pull_function_u1(lead, b, p), p);
  for (const auto& [pt, m] : factor_reduction(u1, chart_name(Chart::U1)))
    out.push_back({ChartPoint{Chart::U1, pt}, m});

  if (const long m = crossing_multiplicity(lead, b, p); m > 0) {
    ClosedPoint crossing{ResiduePoly(p, {0, 1}, 'u'), chart_name(Chart::Crossing)};
    out.push_back({ChartPoint{Chart::Crossing, crossing}, static_cast<int>(m)});
  }

  // Strict transform: base points away from the center.
  const ResiduePoly base = normalized_reduction(lead, p);
  for (const auto& [pt, m] : factor_reduction(base, chart_name(Chart::U2))) {
    if (pt.minimal_poly == b.center_point().minimal_poly) continue;
    out.push_back({ChartPoint{Chart::U2, pt}, m});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

ClosedPoint lying_under(const ChartPoint& pt, const BlowupModel& b, Prime p) {
  (void)p;
  if (pt.chart == Chart::U2) return ClosedPoint{pt.point.minimal_poly, "X"};
  return b.center_point();
}

FiberSumReport fiber_sum_report(const DiffOp& op, const BlowupModel& b,
                                Prime p) {
  FiberSumReport report;
  report.base = infinite_support(op, p).points;
  report.blowup = support_on_blowup(op, b, p);
  report.m0_base = op.degree();
  report.m0_blowup = pull_operator_u1(op, b, b.level(), p).degree();

  std::map<std::vector<std::uint64_t>, long> base, sums;
  for (const auto& [pt, m] : report.base) base[pt.minimal_poly.coeffs()] = m;
  for (const auto& [pt, m] : report.blowup)
    sums[lying_under(pt, b, p).minimal_poly.coeffs()] += m;
  report.ok = base == sums && report.m0_base == report.m0_blowup;
  return report;
}

bool fiber_sum_check(const DiffOp& op, const BlowupModel& b, Prime p) {
  return fiber_sum_report(op, b, p).ok;
}

}  // namespace padicdx
