#pragma once

// Characteristic cycles of cyclic modules D/P on the unit disc model.

#include <string>

#include "padicdx/diff_op.hpp"
#include "padicdx/residue_poly.hpp"

namespace padicdx {

/// m0 [zero section] + sum m_x [vertical line over x].
struct CharCycle {
  long m0 = 0;
  PointMultiplicities vertical;  ///< sorted, multiplicities >= 1

  long length() const;
  bool is_zero() const { return m0 == 0 && vertical.empty(); }
  friend bool operator==(const CharCycle&, const CharCycle&) = default;
};

struct SupportReport {
  long rmin = 1;  ///< least micro level from which the decay condition holds
  PointMultiplicities points;
};

/// Zeros of the reduced normalised leading coefficient, with multiplicities.
/// Throws ZeroOperator, TruncatedOperand.
SupportReport infinite_support(const DiffOp& op, Prime p);

/// m0 = order in d, vertical part from infinite_support. Units of D give 0.
CharCycle char_cycle(const DiffOp& op, Prime p);

CharCycle cc_add(const CharCycle& a, const CharCycle& b);

/// D/P is zero exactly when P is a unit: order 0 with a disc-unit
/// coefficient. Checks that this agrees with CC(P) = 0.
bool bernstein_check(const DiffOp& op, Prime p);

/// Order 0 with a unit coefficient on the closed disc.
bool is_operator_unit(const DiffOp& op, Prime p);

enum class RenderFormat { Ascii, Svg };

/// Zero section plus one vertical line per support point, annotated with
/// multiplicities. SVG output is 640x360.
std::string render_cc(const CharCycle& cc, RenderFormat format);

}  // namespace padicdx
