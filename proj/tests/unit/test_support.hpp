// Seeded random generators shared by the property suites.
#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "padicdx/diff_op.hpp"
#include "padicdx/micro_op.hpp"
#include "padicdx/tate_poly.hpp"

namespace testsupport {

using padicdx::DiffOp;
using padicdx::Integer;
using padicdx::MicroOp;
using padicdx::Prime;
using padicdx::Rational;
using padicdx::TatePoly;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }
  bool coin(double prob = 0.5) {
    return std::bernoulli_distribution(prob)(rng_);
  }

  /// Integer in [1, 40] coprime to p, with a random sign.
  Integer unit_integer(Prime p) {
    long v;
    do {
      v = uniform(1, 40);
    } while (v % static_cast<long>(p.value()) == 0);
    return coin() ? Integer(v) : Integer(-v);
  }

  /// u/w * p^e for p-adic units u, w and e in [lo, hi].
  Rational scalar(Prime p, long lo, long hi) {
    Rational q(unit_integer(p), abs(unit_integer(p)));
    q.canonicalize();
    return q * padicdx::prime_power(p, uniform(lo, hi));
  }

  /// Random polynomial of degree <= max_deg; nonzero unless allow_zero.
  TatePoly poly(Prime p, long max_deg, long lo, long hi, char var = 'x',
                double density = 0.7) {
    for (;;) {
      std::vector<Rational> c(static_cast<std::size_t>(uniform(0, max_deg)) + 1);
      for (auto& x : c)
        if (coin(density)) x = scalar(p, lo, hi);
      c.back() = scalar(p, lo, hi);
      TatePoly f(std::move(c), var);
      if (!f.is_zero()) return f;
    }
  }

  /// Finite operator with ∂-degree <= max_order and nonzero top coefficient.
  DiffOp diff_op(Prime p, long max_order, long max_deg, long lo, long hi) {
    std::map<long, TatePoly> c;
    const long d = uniform(0, max_order);
    for (long n = 0; n < d; ++n)
      if (coin(0.6)) c.emplace(n, poly(p, max_deg, lo, hi));
    c.emplace(d, poly(p, max_deg, lo, hi));
    return DiffOp(std::move(c), 'x');
  }

  /// Laurent operator with powers in [lo_pow, hi_pow].
  MicroOp micro_op(Prime p, long lo_pow, long hi_pow, long max_deg, long lo,
                   long hi) {
    std::map<long, TatePoly> c;
    for (long n = lo_pow; n <= hi_pow; ++n)
      if (coin(0.6)) c.emplace(n, poly(p, max_deg, lo, hi));
    if (c.empty()) c.emplace(hi_pow, poly(p, max_deg, lo, hi));
    return MicroOp(std::move(c), 'x');
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testsupport
