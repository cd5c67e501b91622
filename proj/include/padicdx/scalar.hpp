#pragma once

// Exact arithmetic in K = Q_p with uniformizer p.
//
// Elements of K are stored as exact rationals (GMP). Everything that depends
// on the prime (valuations, absolute values, reduction to F_p) takes the prime
// explicitly, so the same rational can be viewed over several primes.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace padicdx {

using Rational = mpq_class;
using Integer = mpz_class;

/// A validated small prime. Primes are kept below 2^31 so that residue
/// products fit comfortably in 64 bits.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint64_t value_;
};

bool is_prime(std::uint64_t n);

/// Norms on the log-p scale: the value p^exponent, or 0 (negative infinity).
class NormExp {
 public:
  constexpr explicit NormExp(long exponent) : exp_(exponent), zero_(false) {}

  /// The norm of 0.
  static constexpr NormExp zero() { return NormExp(); }

  constexpr bool is_zero() const noexcept { return zero_; }
  /// Exponent of a non-zero norm. Throws InvalidArgument for zero().
  long exponent() const;

  /// Norm multiplication: exponents add, and 0 absorbs.
  friend constexpr NormExp operator+(NormExp a, NormExp b) {
    if (a.zero_ || b.zero_) return zero();
    return NormExp(a.exp_ + b.exp_);
  }
  /// Scaling by p^shift.
  friend constexpr NormExp operator+(NormExp a, long shift) {
    return a.zero_ ? a : NormExp(a.exp_ + shift);
  }
  friend constexpr NormExp operator-(NormExp a, long shift) {
    return a + (-shift);
  }

  friend constexpr bool operator==(NormExp a, NormExp b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.exp_ == b.exp_);
  }
  friend constexpr std::strong_ordering operator<=>(NormExp a, NormExp b) {
    if (a.zero_ || b.zero_) return !a.zero_ <=> !b.zero_;
    return a.exp_ <=> b.exp_;
  }

  std::string to_string() const;

 private:
  constexpr NormExp() : exp_(0), zero_(true) {}

  long exp_;
  bool zero_;
};

std::ostream& operator<<(std::ostream& os, NormExp n);

/// An element of the residue field F_p, stored as its representative in [0, p).
struct ResidueElem {
  std::uint64_t value = 0;
  friend auto operator<=>(const ResidueElem&, const ResidueElem&) = default;
};

/// p-adic valuation; std::nullopt stands for +infinity (q = 0).
std::optional<long> valuation(const Rational& q, Prime p);

/// v_p of a non-zero integer.
long integer_valuation(const Integer& n, Prime p);

/// Normalised absolute value |q| = p^{-v(q)} on the exponent scale.
NormExp abs_exp(const Rational& q, Prime p);

/// Image of q in F_p. Throws NegativeValuation when v(q) < 0.
ResidueElem reduce_mod_pi(const Rational& q, Prime p);

/// p^e as an exact rational (e may be negative).
Rational prime_power(Prime p, long e);

/// p-adic rounding: the element p^v * m with 0 <= m < p^(n-v) that agrees
/// with q modulo p^n, where v = valuation(q). Returns 0 when v >= n.
Rational round_padic(const Rational& q, Prime p, long n);

/// Generalised binomial coefficient n(n-1)...(n-j+1)/j! for any integer n.
Integer binomial(long n, long j);

/// Canonical text for a rational: "a" or "a/b".
std::string to_string(const Rational& q);

}  // namespace padicdx
