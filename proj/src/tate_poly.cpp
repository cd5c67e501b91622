#include "padicdx/tate_poly.hpp"

#include <algorithm>

#include "padicdx/errors.hpp"

namespace padicdx {
namespace {

char merged_var(const TatePoly& a, const TatePoly& b) {
  if (a.is_constant()) return b.var();
  if (b.is_constant()) return a.var();
  if (a.var() != b.var())
    throw VariableMismatch(std::string("cannot combine polynomials in ") +
                           a.var() + " and " + b.var());
  return a.var();
}

}  // namespace

TatePoly::TatePoly(const Rational& c, char var) : var_(var) {
  if (c != 0) c_.push_back(c);
}

TatePoly::TatePoly(std::vector<Rational> coeffs, char var)
    : c_(std::move(coeffs)), var_(var) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void TatePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TatePoly TatePoly::with_var(char var) const {
  TatePoly r = *this;
  r.var_ = var;
  return r;
}

TatePoly TatePoly::operator-() const {
  TatePoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TatePoly operator+(const TatePoly& a, const TatePoly& b) {
  const char v = merged_var(a, b);
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return TatePoly(std::move(out), v);
}

TatePoly operator-(const TatePoly& a, const TatePoly& b) { return a + (-b); }

TatePoly operator*(const TatePoly& a, const TatePoly& b) {
  const char v = merged_var(a, b);
  if (a.is_zero() || b.is_zero()) return TatePoly(Rational(0), v);
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return TatePoly(std::move(out), v);
}

TatePoly TatePoly::scaled(const Rational& s) const {
  std::vector<Rational> out(c_);
  for (auto& c : out) c *= s;
  return TatePoly(std::move(out), var_);
}

TatePoly TatePoly::compose_affine(const Rational& offset, const Rational& scale,
                                  char new_var) const {
  // Horner in the substituted linear polynomial.
  const TatePoly lin(std::vector<Rational>{offset, scale}, new_var);
  TatePoly acc(Rational(0), new_var);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * lin + TatePoly(*it, new_var);
  return acc.with_var(new_var);
}

Rational TatePoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool operator==(const TatePoly& a, const TatePoly& b) {
  if (a.c_ != b.c_) return false;
  return a.is_constant() || a.var_ == b.var_;
}

std::string TatePoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0) {
      out += padicdx::to_string(mag);
      continue;
    }
    if (mag != 1) out += padicdx::to_string(mag) + "*";
    out += var_;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

NormExp gauss_norm(const TatePoly& f, Prime p) {
  NormExp best = NormExp::zero();
  for (const auto& c : f.coeffs()) best = std::max(best, abs_exp(c, p));
  return best;
}

std::pair<TatePoly, long> normalize(const TatePoly& f, Prime p) {
  if (f.is_zero()) throw ZeroInput("cannot normalise the zero function");
  const long v = -gauss_norm(f, p).exponent();
  return {f.scaled(prime_power(p, -v)), v};
}

ResiduePoly reduce(const TatePoly& f, Prime p) {
  if (gauss_norm(f, p) > NormExp(0))
    throw NormTooLarge("reduction needs |f| <= 1, got |f| = p^" +
                       gauss_norm(f, p).to_string());
  std::vector<std::uint64_t> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(reduce_mod_pi(c, p).value);
  return ResiduePoly(p, std::move(v), f.var());
}

ResiduePoly normalized_reduction(const TatePoly& f, Prime p) {
  return reduce(normalize(f, p).first, p);
}

bool is_unit_on_disc(const TatePoly& f, Prime p) {
  const NormExp c0 = abs_exp(f.coeff(0), p);
  if (c0.is_zero()) return false;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    if (abs_exp(f.coeffs()[i], p) >= c0) return false;
  return true;
}

DiscInverse invert_on_disc(const TatePoly& f, Prime p, NormExp eps) {
  if (!is_unit_on_disc(f, p))
    throw NotAUnit(f.to_string() + " is not a unit on the closed unit disc");
  const Rational c0 = f.coeff(0);
  const Rational c0_inv = 1 / c0;
  // f = c0 (1 + h) with |h| < 1; the partial sums of sum (-h)^j leave the
  // residual (-h)^{N+1}.
  const TatePoly h = (f - TatePoly(c0, f.var())).scaled(c0_inv);
  const TatePoly one(Rational(1), f.var());
  if (h.is_zero()) return {TatePoly(c0_inv, f.var()), NormExp::zero()};
  if (eps.is_zero())
    throw InvalidArgument("exact inverse requested for a non-constant unit");
  const TatePoly minus_h = -h;
  TatePoly sum = one;
  TatePoly power = one;
  for (;;) {
    const TatePoly g = sum.scaled(c0_inv);
    const NormExp residual = gauss_norm(f * g - one, p);
    if (residual < eps) return {g, residual};
    power = power * minus_h;
    sum = sum + power;
  }
}

TatePoly derivative(const TatePoly& f) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    out.push_back(f.coeffs()[i] * Rational(static_cast<long>(i)));
  return TatePoly(std::move(out), f.var());
}

}  // namespace padicdx
