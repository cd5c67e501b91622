#include "padicdx/charcycle.hpp"

#include <algorithm>

#include "padicdx/errors.hpp"
#include "padicdx/micro_op.hpp"

namespace padicdx {
namespace {

void require_cyclic_input(const DiffOp& op) {
  if (!op.is_finite())
    throw TruncatedOperand(
        "sub-holonomicity is undecidable for truncated operators");
  if (op.is_zero()) throw ZeroOperator("D/0 is not a cyclic module of finite length");
}

}  // namespace

long CharCycle::length() const {
  long total = m0;
  for (const auto& [pt, m] : vertical) total += m;
  return total;
}

SupportReport infinite_support(const DiffOp& op, Prime p) {
  require_cyclic_input(op);
  SupportReport report;
  report.rmin = decay_rmin(op, p);
  report.points =
      factor_reduction(normalized_reduction(op.leading_coefficient(), p));
  return report;
}

CharCycle char_cycle(const DiffOp& op, Prime p) {
  require_cyclic_input(op);
  return CharCycle{op.degree(), infinite_support(op, p).points};
}

CharCycle cc_add(const CharCycle& a, const CharCycle& b) {
  CharCycle out{a.m0 + b.m0, a.vertical};
  for (const auto& [pt, m] : b.vertical) {
    auto it = std::find_if(out.vertical.begin(), out.vertical.end(),
                           [&](const auto& e) { return e.first == pt; });
    if (it == out.vertical.end())
      out.vertical.emplace_back(pt, m);
    else
      it->second += m;
  }
  std::sort(out.vertical.begin(), out.vertical.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

bool is_operator_unit(const DiffOp& op, Prime p) {
  return op.degree() == 0 && is_unit_on_disc(op.leading_coefficient(), p);
}

bool bernstein_check(const DiffOp& op, Prime p) {
  // D/0 = D is non-zero and 0 is not a unit; there is no cycle to compare.
  if (op.is_zero()) return true;
  return char_cycle(op, p).is_zero() == is_operator_unit(op, p);
}

}  // namespace padicdx
