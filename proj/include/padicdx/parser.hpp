#pragma once

// Operator expression language.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' ['-'] nat)?
//   atom   := 'd' | 'x' | 't' | 'p' | nat ['/' nat] | '(' expr ')'
//
// Products are kept in the order written; normalisation moves coefficients to
// the left of powers of d through the Leibniz rule.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "padicdx/diff_op.hpp"
#include "padicdx/micro_op.hpp"

namespace padicdx {

enum class ParseMode { Differential, Micro };

struct OpExpr;
using OpExprPtr = std::shared_ptr<const OpExpr>;

struct OpExpr {
  enum class Kind { Sum, Product, Power, Symbol, Rational, Neg, Paren };

  Kind kind;
  /// Sum: terms (subtraction is a Neg child); Product: ordered factors;
  /// Power / Neg / Paren: one child.
  std::vector<OpExprPtr> children;
  char symbol = 0;           ///< Symbol: 'd', 'x', 't' or 'p'
  padicdx::Rational value;   ///< Rational: non-negative literal
  long exponent = 0;         ///< Power
  std::size_t position = 0;  ///< offset in the source text

  static OpExprPtr sum(std::vector<OpExprPtr> terms);
  static OpExprPtr product(std::vector<OpExprPtr> factors);
  static OpExprPtr power(OpExprPtr base, long exponent);
  static OpExprPtr symbol_node(char s);
  static OpExprPtr rational(const padicdx::Rational& q);
  static OpExprPtr neg(OpExprPtr inner);
  static OpExprPtr paren(OpExprPtr inner);
};

/// Structural equality (positions ignored).
bool same_tree(const OpExpr& a, const OpExpr& b);

/// Throws SyntaxError or NegativePowerOutsideMicroMode.
OpExprPtr parse(std::string_view src, ParseMode mode = ParseMode::Differential);

/// Prints an AST back to source text; parse(print(e)) reproduces e.
std::string print(const OpExpr& e);

/// Normal form as a Laurent operator; the symbol p evaluates to the prime.
MicroOp normalize_micro(const OpExpr& e, Prime p);
/// Normal form as a differential operator; throws
/// NegativePowerOutsideMicroMode if negative powers of d survive.
DiffOp normalize_diff(const OpExpr& e, Prime p);

/// Convenience: parse then normalise.
DiffOp parse_diff_op(std::string_view src, Prime p);
MicroOp parse_micro_op(std::string_view src, Prime p);
/// An expression without d.
TatePoly parse_function(std::string_view src, Prime p);
/// An expression without d, x or t.
Rational parse_scalar(std::string_view src, Prime p);

}  // namespace padicdx
