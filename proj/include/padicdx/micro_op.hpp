#pragma once

// Microlocal operators: finite Laurent sums sum_{n in Z} b_n d^n over K<x>,
// viewed in F_{k,r} where positive powers carry weight k and negative powers
// weight r.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "padicdx/diff_op.hpp"

namespace padicdx {

/// A pair of levels k >= r >= 1.
class MicroLevels {
 public:
  /// Throws BadLevels unless k >= r >= 1.
  MicroLevels(long k, long r);
  long k() const noexcept { return k_; }
  long r() const noexcept { return r_; }
  /// Weight of d^n: k n for n >= 0 and r n for n < 0.
  long weight(long n) const noexcept { return n >= 0 ? k_ * n : r_ * n; }

 private:
  long k_;
  long r_;
};

class MicroOp {
 public:
  MicroOp() = default;
  explicit MicroOp(const TatePoly& f);
  explicit MicroOp(const DiffOp& op);
  MicroOp(std::map<long, TatePoly> coeffs, char var);

  static MicroOp d_power(long n, char var = 'x');
  static MicroOp scalar(const Rational& c, char var = 'x');

  char var() const noexcept { return var_; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::map<long, TatePoly>& terms() const noexcept { return c_; }
  TatePoly coeff(long n) const;
  long min_power() const;
  long max_power() const;
  bool has_negative_powers() const { return !c_.empty() && min_power() < 0; }
  /// All coefficients are constants in K.
  bool is_constant() const;
  /// Back to a DiffOp; throws InvalidArgument on negative powers.
  DiffOp to_diff_op() const;

  MicroOp operator-() const;
  friend MicroOp operator+(const MicroOp& a, const MicroOp& b);
  friend MicroOp operator-(const MicroOp& a, const MicroOp& b);
  friend MicroOp operator*(const MicroOp& a, const MicroOp& b);
  MicroOp scaled(const Rational& s) const;

  friend bool operator==(const MicroOp& a, const MicroOp& b);

  std::string to_string() const;

 private:
  void drop_zeros();

  std::map<long, TatePoly> c_;
  char var_ = 'x';
};

/// Exact product; d^n f = sum_j binom(n, j) f^{(j)} d^{n-j} for every integer
/// n, which terminates at j = deg f.
MicroOp micro_mul(const MicroOp& a, const MicroOp& b);

/// ||S||_{k,r} = max_n gauss(b_n) + weight(n).
NormExp micro_norm(const MicroOp& s, MicroLevels lv, Prime p);

struct CanonicalTerm {
  long n;
  TatePoly coeff;  ///< a_n = b_n p^{shift}
  long shift;      ///< -k n for n >= 0, -r n for n < 0
};

/// S = sum_{n>=0} a_n (p^k d)^n + sum_{n<0} a_n (p^r d)^n.
std::vector<CanonicalTerm> canonical_form(const MicroOp& s, MicroLevels lv,
                                          Prime p);
/// Rebuilds the operator from its canonical coefficients.
MicroOp from_canonical_form(const std::vector<CanonicalTerm>& terms, Prime p,
                            char var);

struct InvertibleOnDisc {
  long q;
};
struct BadLocusOnly {
  long q;
  ResiduePoly bad;  ///< normalised reduction of the dominant coefficient
};
struct NotInvertible {
  std::string reason;
};
using Lemma24Verdict = std::variant<InvertibleOnDisc, BadLocusOnly, NotInvertible>;

/// Invertibility test in F_{k,r} on the coefficients alpha_n = b_n p^{-kn}:
/// a unique dominant alpha_q, the correction series of norm < 1, and alpha_q a
/// unit on the disc. Throws ZeroOperator.
Lemma24Verdict check_lemma24(const MicroOp& s, MicroLevels lv, Prime p);

struct MicroInverse {
  MicroOp inverse;
  NormExp residual;  ///< exact ||S T - 1||_{k,r}
  long terms;        ///< number of geometric-series terms used
};

/// Truncated inverse with ||S T - 1||_{k,r} < eps.
/// Throws NotInvertibleHere unless check_lemma24 gives InvertibleOnDisc.
MicroInverse micro_invert(const MicroOp& s, MicroLevels lv, Prime p,
                          NormExp eps);

struct EverywhereInvertible {};
struct BadLocus {
  ResiduePoly bad;
};
struct FailsDecay {
  long rmin;
};
using Thm28Verdict = std::variant<EverywhereInvertible, BadLocus, FailsDecay>;

/// Least r >= 1 such that |b_n| < |b_d| p^{r(d-n)} for all n < d.
long decay_rmin(const DiffOp& op, Prime p);

/// Invertibility of a finite operator in the microlocalisation at level r.
/// Throws ZeroOperator, TruncatedOperand.
Thm28Verdict thm28_analysis(const DiffOp& op, long r, Prime p);

std::string verdict_name(const Lemma24Verdict& v);
std::string verdict_name(const Thm28Verdict& v);

}  // namespace padicdx
