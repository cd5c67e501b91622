#pragma once

// Polynomial elements of the Tate algebra K<x> with their Gauss norm.

#include <string>
#include <utility>
#include <vector>

#include "padicdx/residue_poly.hpp"
#include "padicdx/scalar.hpp"

namespace padicdx {

class TatePoly {
 public:
  TatePoly() = default;
  /// Constant polynomial.
  TatePoly(const Rational& c, char var = 'x');  // NOLINT(implicit)
  TatePoly(long c, char var = 'x') : TatePoly(Rational(c), var) {}  // NOLINT(implicit)
  TatePoly(std::vector<Rational> coeffs, char var);

  /// The coordinate function itself.
  static TatePoly variable(char var) { return TatePoly(std::vector<Rational>{0, 1}, var); }

  char var() const noexcept { return var_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  TatePoly with_var(char var) const;

  TatePoly operator-() const;
  friend TatePoly operator+(const TatePoly& a, const TatePoly& b);
  friend TatePoly operator-(const TatePoly& a, const TatePoly& b);
  friend TatePoly operator*(const TatePoly& a, const TatePoly& b);
  TatePoly& operator+=(const TatePoly& b) { return *this = *this + b; }
  TatePoly& operator*=(const TatePoly& b) { return *this = *this * b; }
  TatePoly scaled(const Rational& s) const;

  /// Substitutes var = offset + scale * new_var.
  TatePoly compose_affine(const Rational& offset, const Rational& scale,
                          char new_var) const;
  Rational eval(const Rational& x) const;

  friend bool operator==(const TatePoly& a, const TatePoly& b);

  /// Canonical text, decreasing degree: "x^2 - 3/2*x + 4".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> c_;
  char var_ = 'x';
};

/// max_i |c_i| on the exponent scale; zero() for the zero polynomial.
NormExp gauss_norm(const TatePoly& f, Prime p);

/// (g, v) with f = p^v * g and gauss_norm(g) = 0. Throws ZeroInput.
std::pair<TatePoly, long> normalize(const TatePoly& f, Prime p);

/// Coefficientwise reduction mod p. Throws NormTooLarge if |f| > 1.
ResiduePoly reduce(const TatePoly& f, Prime p);

/// Reduction of the normalisation of a non-zero f.
ResiduePoly normalized_reduction(const TatePoly& f, Prime p);

/// Unit of K<x> on the closed unit disc: the constant term strictly dominates.
bool is_unit_on_disc(const TatePoly& f, Prime p);

struct DiscInverse {
  TatePoly inverse;
  NormExp residual;  ///< exact gauss_norm(f * inverse - 1)
};

/// Truncated geometric series for f^{-1} with gauss_norm(f g - 1) < eps.
/// Throws NotAUnit; eps must be a finite norm unless f is constant.
DiscInverse invert_on_disc(const TatePoly& f, Prime p, NormExp eps);

TatePoly derivative(const TatePoly& f);

}  // namespace padicdx
