#pragma once

// Polynomials over the residue field F_p and their factorisation into monic
// irreducibles (closed points of the special fiber).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padicdx/scalar.hpp"

namespace padicdx {

class ResiduePoly {
 public:
  /// Zero polynomial in x over F_p.
  explicit ResiduePoly(Prime p) : ResiduePoly(p, {}, 'x') {}
  /// Coefficients listed from degree 0 upwards; reduced mod p and trimmed.
  ResiduePoly(Prime p, std::vector<std::uint64_t> coeffs, char var = 'x');

  static ResiduePoly zero(Prime p, char var) { return ResiduePoly(p, {}, var); }
  static ResiduePoly monomial(Prime p, std::uint64_t c, std::size_t degree,
                              char var = 'x');

  Prime prime() const noexcept { return p_; }
  char var() const noexcept { return var_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  std::uint64_t coeff(std::size_t i) const noexcept {
    return i < c_.size() ? c_[i] : 0;
  }
  std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

  ResiduePoly with_var(char var) const;
  ResiduePoly monic() const;
  ResiduePoly derivative() const;
  std::uint64_t eval(std::uint64_t x) const;

  friend ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b);
  friend ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b);
  friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
  ResiduePoly scaled(std::uint64_t c) const;

  /// Euclidean division; throws ZeroInput on division by zero.
  std::pair<ResiduePoly, ResiduePoly> divmod(const ResiduePoly& d) const;
  ResiduePoly operator/(const ResiduePoly& d) const { return divmod(d).first; }
  ResiduePoly operator%(const ResiduePoly& d) const { return divmod(d).second; }

  /// Coefficients compare exactly; the variable name is cosmetic.
  friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  /// Total order: by degree, then coefficients from the top down.
  friend bool operator<(const ResiduePoly& a, const ResiduePoly& b);

  /// Compact text with coefficients in the symmetric range, e.g. "t-1".
  std::string to_string() const;

 private:
  void trim();

  Prime p_;
  std::vector<std::uint64_t> c_;
  char var_;
};

ResiduePoly gcd(ResiduePoly a, ResiduePoly b);
/// base^e mod m, with the exponent as an arbitrary-precision integer.
ResiduePoly powmod(const ResiduePoly& base, const Integer& e,
                   const ResiduePoly& m);

/// A closed point of a special fiber: a monic irreducible polynomial over F_p
/// and the chart it lives on.
struct ClosedPoint {
  ResiduePoly minimal_poly;
  std::string chart = "X";

  long degree() const { return minimal_poly.degree(); }
  std::string label() const { return minimal_poly.to_string(); }

  friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
    return a.chart == b.chart && a.minimal_poly == b.minimal_poly;
  }
  friend bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.chart != b.chart) return a.chart < b.chart;
    return a.minimal_poly < b.minimal_poly;
  }
};

using PointMultiplicities = std::vector<std::pair<ClosedPoint, int>>;

/// Factorisation of g / lc(g) into monic irreducibles with multiplicities,
/// sorted by degree then coefficients. Throws ZeroInput for g = 0.
PointMultiplicities factor_reduction(const ResiduePoly& g,
                                     const std::string& chart = "X");

/// Squarefree decomposition of a monic polynomial: pairs (f_i, i) with
/// the f_i squarefree and pairwise coprime, prod f_i^i = f.
std::vector<std::pair<ResiduePoly, int>> squarefree_decomposition(
    const ResiduePoly& f);

/// Distinct-degree factorisation of a monic squarefree polynomial.
std::vector<std::pair<ResiduePoly, int>> distinct_degree_factorization(
    const ResiduePoly& f);

/// Splits a monic squarefree product of irreducibles of equal degree d.
std::vector<ResiduePoly> equal_degree_factorization(const ResiduePoly& f,
                                                    int d);

}  // namespace padicdx
