#pragma once

// Admissible blow-ups of Spf V<x> along (x - c, p^m) and the transport of
// functions, operators and supports to the charts.
//
// Chart U1 has coordinate t with x = c + p^m t; its special fiber is the
// exceptional line. On U2 we only track the strict transform of the original
// special fiber (coordinate x, points with x != c mod p) and the crossing
// point where it meets the exceptional line.

#include <string>
#include <utility>
#include <vector>

#include "padicdx/charcycle.hpp"
#include "padicdx/diff_op.hpp"

namespace padicdx {

class BlowupModel {
 public:
  /// Throws InvalidArgument unless v(center) >= 0 and level >= 1.
  BlowupModel(const Rational& center, long level, Prime p);

  const Rational& center() const noexcept { return c_; }
  long level() const noexcept { return m_; }
  /// Least l with p^l in (x - c, p^m); the quotient by x - c is V/(p^m).
  long k_blowup() const noexcept { return m_; }
  /// The closed point x = c mod p of the base.
  const ClosedPoint& center_point() const noexcept { return center_point_; }

 private:
  Rational c_;
  long m_;
  ClosedPoint center_point_;
};

enum class Chart { U1, U2, Crossing };

std::string chart_name(Chart c);

struct ChartPoint {
  Chart chart;
  ClosedPoint point;

  friend bool operator==(const ChartPoint& a, const ChartPoint& b) {
    return a.chart == b.chart && a.point == b.point;
  }
  friend bool operator<(const ChartPoint& a, const ChartPoint& b) {
    if (a.chart != b.chart) return a.chart < b.chart;
    return a.point < b.point;
  }
};

using ChartMultiplicities = std::vector<std::pair<ChartPoint, int>>;

/// f(c + p^m t).
TatePoly pull_function_u1(const TatePoly& f, const BlowupModel& b, Prime p);

/// x -> c + p^m t, d_x -> p^{-m} d_t. Throws LevelTooSmall if k < m.
DiffOp pull_operator_u1(const DiffOp& op, const BlowupModel& b, long k, Prime p);

/// Norm exponent of [p^k d_x, t] on U1, i.e. -(k - m). Throws LevelTooSmall.
NormExp chart_commutator_constant(const BlowupModel& b, long k, Prime p);

/// Number of zeros (with multiplicity, over an algebraic closure) of f in the
/// open annulus 0 < v(x - c) < m, read off the Newton polygon of f(c + y).
/// These specialise to the crossing point.
long crossing_multiplicity(const TatePoly& f, const BlowupModel& b, Prime p);

/// Support of D/P on the blow-up, merged across charts. Throws ZeroOperator.
ChartMultiplicities support_on_blowup(const DiffOp& op, const BlowupModel& b,
                                      Prime p);

/// Base closed point under a blow-up point.
ClosedPoint lying_under(const ChartPoint& pt, const BlowupModel& b, Prime p);

struct FiberSumReport {
  bool ok = false;
  PointMultiplicities base;
  ChartMultiplicities blowup;
  long m0_base = 0;
  long m0_blowup = 0;
};

/// Compares base multiplicities with fiber sums on the blow-up and checks that
/// m0 is unchanged.
FiberSumReport fiber_sum_report(const DiffOp& op, const BlowupModel& b, Prime p);
bool fiber_sum_check(const DiffOp& op, const BlowupModel& b, Prime p);

}  // namespace padicdx
