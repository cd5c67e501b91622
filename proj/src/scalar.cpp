#include "padicdx/scalar.hpp"

#include <ostream>

#include "padicdx/errors.hpp"

namespace padicdx {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value >= (std::uint64_t{1} << 31) || !is_prime(value))
    throw InvalidArgument("not a supported prime: " + std::to_string(value));
}

long NormExp::exponent() const {
  if (zero_) throw InvalidArgument("the zero norm has no finite exponent");
  return exp_;
}

std::string NormExp::to_string() const {
  return zero_ ? std::string("-inf") : std::to_string(exp_);
}

std::ostream& operator<<(std::ostream& os, NormExp n) {
  return os << n.to_string();
}

long integer_valuation(const Integer& n, Prime p) {
  if (n == 0) throw InvalidArgument("valuation of zero integer");
  Integer rest;
  Integer prime(static_cast<unsigned long>(p.value()));
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

std::optional<long> valuation(const Rational& q, Prime p) {
  if (q == 0) return std::nullopt;
  return integer_valuation(q.get_num(), p) - integer_valuation(q.get_den(), p);
}

NormExp abs_exp(const Rational& q, Prime p) {
  auto v = valuation(q, p);
  return v ? NormExp(-*v) : NormExp::zero();
}

ResidueElem reduce_mod_pi(const Rational& q, Prime p) {
  auto v = valuation(q, p);
  if (!v) return {};
  if (*v < 0)
    throw NegativeValuation("cannot reduce " + to_string(q) +
                            " modulo p: negative valuation");
  if (*v > 0) return {};
  Integer m(static_cast<unsigned long>(p.value()));
  Integer num = q.get_num() % m;
  if (num < 0) num += m;
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), Integer(q.get_den()).get_mpz_t(),
             m.get_mpz_t());
  Integer r = (num * den_inv) % m;
  return {r.get_ui()};
}

Rational prime_power(Prime p, long e) {
  Integer base;
  mpz_ui_pow_ui(base.get_mpz_t(), p.value(),
                static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(base);
  return Rational(Integer(1), base);
}

Rational round_padic(const Rational& q, Prime p, long n) {
  const auto v = valuation(q, p);
  if (!v || *v >= n) return 0;
  const Rational unit = q * prime_power(p, -*v);
  const Integer modulus = prime_power(p, n - *v).get_num();
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), unit.get_den().get_mpz_t(), modulus.get_mpz_t());
  Integer m = unit.get_num() * den_inv;
  mpz_fdiv_r(m.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
  return Rational(m) * prime_power(p, *v);
}

Integer binomial(long n, long j) {
  if (j < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < j; ++i) {
    num *= Integer(n - i);
    den *= Integer(i + 1);
  }
  return num / den;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace padicdx
