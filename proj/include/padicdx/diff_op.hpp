#pragma once

// Finite differential operators sum b_n d^n over K<x> and the congruence-level
// norms |.|_k. An operator is stored once in the plain basis; the level-k view
// rescales coefficients by p^{-kn}, which on the exponent scale is a shift.

#include <map>
#include <string>
#include <vector>

#include "padicdx/tate_poly.hpp"

namespace padicdx {

enum class Finiteness { Finite, TruncatedInfinite };

class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(const TatePoly& f);  // order 0
  DiffOp(std::map<long, TatePoly> coeffs, char var,
         Finiteness tag = Finiteness::Finite);

  /// p^0 d^n.
  static DiffOp d_power(long n, char var = 'x');
  static DiffOp scalar(const Rational& c, char var = 'x');
  static DiffOp variable(char var = 'x');

  Finiteness finiteness() const noexcept { return tag_; }
  bool is_finite() const noexcept { return tag_ == Finiteness::Finite; }
  DiffOp truncated() const;  ///< Same data, tagged TruncatedInfinite.
  char var() const noexcept { return var_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Order in d; -1 for the zero operator.
  long degree() const noexcept { return c_.empty() ? -1 : c_.rbegin()->first; }
  const TatePoly& leading_coefficient() const;
  TatePoly coeff(long n) const;
  const std::map<long, TatePoly>& terms() const noexcept { return c_; }

  DiffOp operator-() const;
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  /// Leibniz product; same contract as op_mul.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  DiffOp scaled(const Rational& s) const;

  friend bool operator==(const DiffOp& a, const DiffOp& b);

  /// Canonical text: coefficients left of powers of d, decreasing order.
  std::string to_string() const;

 private:
  void drop_zeros();

  std::map<long, TatePoly> c_;
  char var_ = 'x';
  Finiteness tag_ = Finiteness::Finite;
};

DiffOp op_mul(const DiffOp& a, const DiffOp& b);

/// |P|_k = max_n gauss_norm(b_n) + k n.
NormExp norm_level(const DiffOp& op, long k, Prime p);

/// Largest n attaining |P|_k. Throws ZeroOperator.
long order_level(const DiffOp& op, long k, Prime p);

DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// Action of the operator on a function: sum b_n f^{(n)}.
TatePoly apply(const DiffOp& op, const TatePoly& f);

/// j-th derivative.
TatePoly nth_derivative(TatePoly f, long j);

/// Matrix of an integrable connection d(m) = A m on a free module.
class ConnectionMatrix {
 public:
  explicit ConnectionMatrix(std::vector<std::vector<TatePoly>> entries);
  static ConnectionMatrix identity(std::size_t n, char var = 'x');

  std::size_t size() const noexcept { return e_.size(); }
  const TatePoly& at(std::size_t i, std::size_t j) const { return e_[i][j]; }
  const std::vector<std::vector<TatePoly>>& entries() const noexcept {
    return e_;
  }

  friend ConnectionMatrix operator+(const ConnectionMatrix& a,
                                    const ConnectionMatrix& b);
  friend ConnectionMatrix operator*(const ConnectionMatrix& a,
                                    const ConnectionMatrix& b);
  ConnectionMatrix scaled(const Rational& s) const;
  /// Entrywise derivative.
  ConnectionMatrix derivative() const;
  friend bool operator==(const ConnectionMatrix&,
                         const ConnectionMatrix&) = default;

  std::string to_string() const;

 private:
  std::vector<std::vector<TatePoly>> e_;
};

/// max over entries of the Gauss norm.
NormExp sup_norm(const ConnectionMatrix& a, Prime p);

/// S_n(A) with d^n(m) = S_n(A) m: S_1 = A, S_{n+1} = d(S_n) + S_n A.
ConnectionMatrix connection_matrix_power(const ConnectionMatrix& a, long n);

/// Least k >= 0 with |A| <= p^k, from which p^{kn} S_n(A) tends to 0.
long connection_level(const ConnectionMatrix& a, Prime p);

}  // namespace padicdx
