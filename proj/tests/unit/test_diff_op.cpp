#include "doctest.h"
#include "padicdx/diff_op.hpp"
#include "padicdx/errors.hpp"
#include "test_support.hpp"

using namespace padicdx;

namespace {
const Prime P2{2};
const TatePoly X = TatePoly::variable('x');
const DiffOp D = DiffOp::d_power(1);
DiffOp op(const TatePoly& f) { return DiffOp(f); }

// Applies P to f by summing b_n * f^(n); used as a semantic oracle for
// products, since (PQ)(f) = P(Q(f)) characterizes the Weyl product.
TatePoly act(const DiffOp& P, const TatePoly& f) {
  TatePoly out(0);
  for (const auto& [n, b] : P.terms()) {
    TatePoly g = f;
    for (long i = 0; i < n; ++i) g = derivative(g);
    out = out + b * g;
  }
  return out;
}
}  // namespace

TEST_CASE("Leibniz products") {
  CHECK(D * op(X) == op(X) * D + op(1));
  CHECK(D * D * op(X) == op(X) * D * D + D.scaled(2));
  CHECK(op(X) * D * (op(X) * D) == op(X * X) * D * D + op(X) * D);
  CHECK((D * op(X)).to_string() == "x*d + 1");
}

TEST_CASE("level norms") {
  CHECK(norm_level(D, 2, P2) == NormExp(2));
  CHECK(norm_level(op(X), 0, P2) == NormExp(0));
  CHECK(norm_level(op(X), 3, P2) == NormExp(0));
  CHECK(norm_level(D.scaled(2), 1, P2) == NormExp(0));
  CHECK(norm_level(DiffOp(), 1, P2).is_zero());
}

TEST_CASE("orders") {
  const DiffOp P = D * D * op(2) + D;
  CHECK(order_level(P, 1, P2) == 2);
  CHECK(order_level(P, 0, P2) == 1);
  CHECK(order_level(op(X * X + 1), 4, P2) == 0);
  CHECK_THROWS_AS(order_level(DiffOp(), 1, P2), ZeroOperator);
}

TEST_CASE("commutators") {
  CHECK(commutator(D, op(X)) == op(1));
  CHECK(commutator(D, op(X * X)) == op(X * 2));
  CHECK(commutator(op(X) * D, D) == -D);
}

TEST_CASE("truncated operands are refused") {
  CHECK_THROWS_AS(D.truncated() * D, TruncatedOperand);
  CHECK_THROWS_AS(commutator(D, D.truncated()), TruncatedOperand);
}

TEST_CASE("connection recursion examples") {
  const ConnectionMatrix zero({{TatePoly(0)}});
  CHECK(connection_matrix_power(zero, 5) == zero);
  const ConnectionMatrix ax({{X}});
  CHECK(connection_matrix_power(ax, 2) == ConnectionMatrix({{X * X + 1}}));
  const Rational lam(3, 7);
  CHECK(connection_matrix_power(ConnectionMatrix({{TatePoly(lam)}}), 3) ==
        ConnectionMatrix({{TatePoly(lam * lam * lam)}}));
  CHECK(connection_level(ConnectionMatrix({{TatePoly(2)}}), P2) == 0);
  CHECK(connection_level(ConnectionMatrix({{TatePoly(Rational(1, 2))}}), P2) == 1);
  CHECK(connection_level(zero, P2) == 0);
}

TEST_CASE("connection powers stay within the linear bound") {
  testsupport::Gen gen(41);
  for (std::uint64_t pv : {2, 3}) {
    const Prime p(pv);
    for (int i = 0; i < 20; ++i) {
      const std::size_t s = gen.uniform(1, 2);
      std::vector<std::vector<TatePoly>> e(s, std::vector<TatePoly>(s));
      for (auto& row : e)
        for (auto& x : row) x = gen.poly(p, 2, -2, 2);
      const ConnectionMatrix A(e);
      const long a = std::max(0L, sup_norm(A, p).exponent());
      for (long n = 1; n <= 4; ++n) {
        const NormExp sn = sup_norm(connection_matrix_power(A, n), p);
        CHECK(sn <= NormExp(n * a));
      }
    }
  }
}

TEST_CASE("connection recursion under a change of basis") {
  // With A' = (dB + BA) B^{-1}, the iterated connection satisfies
  // S_n(A') B = sum_j C(n,j) d^{n-j}(B) S_j(A), where S_0 = 1.
  // B is taken constant-determinant so that B^{-1} stays polynomial.
  auto check = [](const ConnectionMatrix& A, const ConnectionMatrix& B,
                  const ConnectionMatrix& Binv) {
    REQUIRE(B * Binv == ConnectionMatrix::identity(B.size()));
    const ConnectionMatrix Ap = (B.derivative() + B * A) * Binv;
    for (long n = 1; n <= 3; ++n) {
      ConnectionMatrix rhs = B.derivative();
      for (long i = 1; i < n; ++i) rhs = rhs.derivative();
      for (long j = 1; j <= n; ++j) {
        ConnectionMatrix dB = B;
        for (long i = 0; i < n - j; ++i) dB = dB.derivative();
        rhs = rhs + (dB * connection_matrix_power(A, j))
                        .scaled(Rational(binomial(n, j)));
      }
      CHECK(connection_matrix_power(Ap, n) * B == rhs);
    }
  };
  // 1x1: B = 3 is the only polynomial unit shape; also use A non-constant.
  check(ConnectionMatrix({{X}}), ConnectionMatrix({{TatePoly(3)}}),
        ConnectionMatrix({{TatePoly(Rational(1, 3))}}));
  check(ConnectionMatrix({{X * X - 2}}), ConnectionMatrix({{TatePoly(-5)}}),
        ConnectionMatrix({{TatePoly(Rational(-1, 5))}}));
  // 2x2 unipotent B = [[1, x^2], [0, 1]].
  const ConnectionMatrix B({{TatePoly(1), X * X}, {TatePoly(0), TatePoly(1)}});
  const ConnectionMatrix Binv({{TatePoly(1), -(X * X)}, {TatePoly(0), TatePoly(1)}});
  check(ConnectionMatrix({{X, TatePoly(1)}, {TatePoly(2), X * X}}), B, Binv);
  check(ConnectionMatrix({{TatePoly(0), TatePoly(1)}, {X, TatePoly(0)}}), B, Binv);
}

TEST_CASE("product agrees with composition of actions") {
  testsupport::Gen gen(42);
  for (std::uint64_t pv : {2, 3, 5}) {
    const Prime p(pv);
    for (int i = 0; i < 40; ++i) {
      const DiffOp P = gen.diff_op(p, 3, 3, -2, 2);
      const DiffOp Q = gen.diff_op(p, 3, 3, -2, 2);
      const TatePoly f = gen.poly(p, 7, -2, 2);
      CHECK(act(P * Q, f) == act(P, act(Q, f)));
      CHECK(apply(P * Q, f) == act(P * Q, f));
      CHECK((P * Q).degree() == P.degree() + Q.degree());
      CHECK((P * Q).leading_coefficient() ==
            P.leading_coefficient() * Q.leading_coefficient());
    }
  }
}

TEST_CASE("associativity and level-norm multiplicativity") {
  testsupport::Gen gen(43);
  for (std::uint64_t pv : {2, 3, 5}) {
    const Prime p(pv);
    for (int i = 0; i < 30; ++i) {
      const DiffOp P = gen.diff_op(p, 2, 3, -2, 2);
      const DiffOp Q = gen.diff_op(p, 2, 3, -2, 2);
      const DiffOp R = gen.diff_op(p, 2, 3, -2, 2);
      CHECK((P * Q) * R == P * (Q * R));
      for (long k = 0; k <= 3; ++k)
        CHECK(norm_level(P * Q, k, p) == norm_level(P, k, p) + norm_level(Q, k, p));
    }
  }
}

TEST_CASE("order is scale invariant and stabilizes at the degree") {
  testsupport::Gen gen(44);
  for (std::uint64_t pv : {2, 3}) {
    const Prime p(pv);
    for (int i = 0; i < 50; ++i) {
      const DiffOp P = gen.diff_op(p, 4, 3, -3, 3);
      const Rational c = gen.scalar(p, -5, 5);
      for (long k = 0; k <= 3; ++k)
        CHECK(order_level(P.scaled(c), k, p) == order_level(P, k, p));
      // Coefficient norms lie in [p^-3, p^3], so k = 7 exceeds every gap.
      CHECK(order_level(P, 7, p) == P.degree());
    }
  }
}

TEST_CASE("canonical text round-trips through the printer") {
  CHECK((op(X * X - 1) * D * D - D + op(Rational(1, 2))).to_string() ==
        "(x^2 - 1)*d^2 - d + 1/2");
  CHECK(DiffOp().to_string() == "0");
}
