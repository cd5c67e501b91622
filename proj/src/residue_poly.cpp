#include "padicdx/residue_poly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "padicdx/errors.hpp"

namespace padicdx {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (a * b) % m;  // both < 2^31
}

std::uint64_t powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ZeroInput("inverse of zero in F_p");
  return powmod_u(a, p - 2, p);
}

void check_same_field(const ResiduePoly& a, const ResiduePoly& b) {
  if (!(a.prime() == b.prime()))
    throw InvalidArgument("residue polynomials over different primes");
}

}  // namespace

ResiduePoly::ResiduePoly(Prime p, std::vector<std::uint64_t> coeffs, char var)
    : p_(p), c_(std::move(coeffs)), var_(var) {
  for (auto& c : c_) c %= p_.value();
  trim();
}

ResiduePoly ResiduePoly::monomial(Prime p, std::uint64_t c, std::size_t degree,
                                  char var) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = c;
  return ResiduePoly(p, std::move(v), var);
}

void ResiduePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ResiduePoly ResiduePoly::with_var(char var) const {
  ResiduePoly r = *this;
  r.var_ = var;
  return r;
}

ResiduePoly ResiduePoly::monic() const {
  if (is_zero()) throw ZeroInput("monic part of the zero polynomial");
  return scaled(invmod(leading(), p_.value()));
}

ResiduePoly ResiduePoly::scaled(std::uint64_t c) const {
  std::vector<std::uint64_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    v[i] = mulmod(c_[i], c % p_.value(), p_.value());
  return ResiduePoly(p_, std::move(v), var_);
}

ResiduePoly ResiduePoly::derivative() const {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 1; i < c_.size(); ++i)
    v.push_back(mulmod(c_[i], i % p_.value(), p_.value()));
  return ResiduePoly(p_, std::move(v), var_);
}

std::uint64_t ResiduePoly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = (mulmod(acc, x % p_.value(), p_.value()) + *it) % p_.value();
  return acc;
}

ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b) {
  check_same_field(a, b);
  const auto p = a.p_.value();
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = (a.coeff(i) + b.coeff(i)) % p;
  return ResiduePoly(a.p_, std::move(v), a.var_);
}

ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b) {
  check_same_field(a, b);
  const auto p = a.p_.value();
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = (a.coeff(i) + p - b.coeff(i)) % p;
  return ResiduePoly(a.p_, std::move(v), a.var_);
}

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return ResiduePoly::zero(a.p_, a.var_);
  const auto p = a.p_.value();
  std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] = (v[i + j] + mulmod(a.c_[i], b.c_[j], p)) % p;
  return ResiduePoly(a.p_, std::move(v), a.var_);
}

std::pair<ResiduePoly, ResiduePoly> ResiduePoly::divmod(
    const ResiduePoly& d) const {
  check_same_field(*this, d);
  if (d.is_zero()) throw ZeroInput("division by the zero polynomial");
  const auto p = p_.value();
  std::vector<std::uint64_t> rem = c_;
  if (rem.size() < d.c_.size())
    return {zero(p_, var_), *this};
  std::vector<std::uint64_t> quo(rem.size() - d.c_.size() + 1, 0);
  const std::uint64_t inv = invmod(d.leading(), p);
  for (std::size_t i = quo.size(); i-- > 0;) {
    const std::uint64_t c = mulmod(rem[i + d.c_.size() - 1], inv, p);
    quo[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j)
      rem[i + j] = (rem[i + j] + p - mulmod(c, d.c_[j], p)) % p;
  }
  return {ResiduePoly(p_, std::move(quo), var_),
          ResiduePoly(p_, std::move(rem), var_)};
}

bool operator<(const ResiduePoly& a, const ResiduePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(),
                                      b.c_.rbegin(), b.c_.rend());
}

std::string ResiduePoly::to_string() const {
  if (c_.empty()) return "0";
  const auto p = p_.value();
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    // Symmetric representatives; over F_2 a non-leading 1 prints as -1.
    const bool negative =
        2 * c_[i] > p || (2 * c_[i] == p && i + 1 != c_.size());
    const std::uint64_t mag = negative ? p - c_[i] : c_[i];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (i == 0 || mag != 1) out += std::to_string(mag);
    if (i > 0) {
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

ResiduePoly gcd(ResiduePoly a, ResiduePoly b) {
  while (!b.is_zero()) {
    ResiduePoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

ResiduePoly powmod(const ResiduePoly& base, const Integer& e,
                   const ResiduePoly& m) {
  ResiduePoly result(base.prime(), {1}, base.var());
  result = result % m;
  ResiduePoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

namespace {

// p-th root of a polynomial whose derivative vanishes: sum a_{ip} x^{ip}
// maps to sum a_{ip} x^i (Frobenius is the identity on F_p).
ResiduePoly pth_root(const ResiduePoly& f) {
  const auto p = f.prime().value();
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p)
    v.push_back(f.coeffs()[i]);
  return ResiduePoly(f.prime(), std::move(v), f.var());
}

void squarefree_rec(const ResiduePoly& f, int scale,
                    std::vector<std::pair<ResiduePoly, int>>& out) {
  if (f.degree() <= 0) return;
  const int p = static_cast<int>(f.prime().value());
  ResiduePoly fd = f.derivative();
  if (fd.is_zero()) {
    squarefree_rec(pth_root(f), scale * p, out);
    return;
  }
  ResiduePoly c = gcd(f, fd);
  ResiduePoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    ResiduePoly y = gcd(w, c);
    ResiduePoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_rec(pth_root(c.monic()), scale * p, out);
}

}  // namespace

std::vector<std::pair<ResiduePoly, int>> squarefree_decomposition(
    const ResiduePoly& f) {
  if (f.is_zero()) throw ZeroInput("squarefree decomposition of zero");
  std::vector<std::pair<ResiduePoly, int>> out;
  squarefree_rec(f.monic(), 1, out);
  return out;
}

std::vector<std::pair<ResiduePoly, int>> distinct_degree_factorization(
    const ResiduePoly& f) {
  std::vector<std::pair<ResiduePoly, int>> out;
  const Prime p = f.prime();
  const ResiduePoly x = ResiduePoly::monomial(p, 1, 1, f.var());
  ResiduePoly rest = f.monic();
  ResiduePoly h = x % rest;
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, Integer(static_cast<unsigned long>(p.value())), rest);
    ResiduePoly g = gcd(rest, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<int>(rest.degree()));
  return out;
}

std::vector<ResiduePoly> equal_degree_factorization(const ResiduePoly& f,
                                                    int d) {
  const Prime p = f.prime();
  if (f.degree() == d) return {f};
  std::mt19937_64 rng(0x5eed + static_cast<unsigned>(f.degree()));
  std::uniform_int_distribution<std::uint64_t> coef(0, p.value() - 1);
  const long n = f.degree();
  Integer qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), p.value(), static_cast<unsigned long>(d));
  for (;;) {
    std::vector<std::uint64_t> v(static_cast<std::size_t>(n));
    for (auto& c : v) c = coef(rng);
    ResiduePoly a(p, std::move(v), f.var());
    if (a.degree() <= 0) continue;
    ResiduePoly b = ResiduePoly::zero(p, f.var());
    if (p.value() == 2) {
      // Trace map F_{2^d} -> F_2.
      ResiduePoly term = a % f;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      b = powmod(a, (qd - 1) / 2, f) - ResiduePoly(p, {1}, f.var());
    }
    ResiduePoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < n) {
      auto left = equal_degree_factorization(g, d);
      auto right = equal_degree_factorization(f / g, d);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

PointMultiplicities factor_reduction(const ResiduePoly& g,
                                     const std::string& chart) {
  if (g.is_zero()) throw ZeroInput("factor_reduction of the zero polynomial");
  std::map<std::vector<std::uint64_t>, std::pair<ResiduePoly, int>> merged;
  for (const auto& [sqf, mult] : squarefree_decomposition(g)) {
    for (const auto& [block, d] : distinct_degree_factorization(sqf)) {
      for (const auto& irr : equal_degree_factorization(block, d)) {
        auto m = irr.monic();
        auto it = merged.find(m.coeffs());
        if (it == merged.end())
          merged.emplace(m.coeffs(), std::make_pair(m, mult));
        else
          it->second.second += mult;
      }
    }
  }
  PointMultiplicities out;
  for (auto& [key, val] : merged)
    out.emplace_back(ClosedPoint{val.first, chart}, val.second);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace padicdx
