#include "padicdx/micro_op.hpp"

#include <algorithm>

#include "padicdx/errors.hpp"

namespace padicdx {
namespace {

bool has_variable(const std::map<long, TatePoly>& c) {
  return std::any_of(c.begin(), c.end(),
                     [](const auto& kv) { return !kv.second.is_constant(); });
}

char merged_var(const MicroOp& a, const MicroOp& b) {
  const bool va = has_variable(a.terms());
  const bool vb = has_variable(b.terms());
  if (va && vb && a.var() != b.var())
    throw VariableMismatch(std::string("operators in ") + a.var() + " and " +
                           b.var());
  return va ? a.var() : b.var();
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Rounds every monomial c x^i d^n so that the change has weighted norm below
// p^tau; monomials already below p^tau vanish.
MicroOp prune(const MicroOp& s, MicroLevels lv, Prime p, long tau) {
  std::map<long, TatePoly> kept;
  for (const auto& [n, f] : s.terms()) {
    std::vector<Rational> c = f.coeffs();
    for (auto& x : c) x = round_padic(x, p, lv.weight(n) - tau + 1);
    TatePoly g(std::move(c), f.var());
    if (!g.is_zero()) kept.emplace(n, std::move(g));
  }
  return MicroOp(std::move(kept), s.var());
}

}  // namespace

MicroLevels::MicroLevels(long k, long r) : k_(k), r_(r) {
  if (r < 1 || k < r)
    throw BadLevels("micro levels need k >= r >= 1, got k=" +
                    std::to_string(k) + ", r=" + std::to_string(r));
}

MicroOp::MicroOp(const TatePoly& f) : var_(f.var()) {
  if (!f.is_zero()) c_.emplace(0, f);
}

MicroOp::MicroOp(const DiffOp& op) : c_(op.terms()), var_(op.var()) {}

MicroOp::MicroOp(std::map<long, TatePoly> coeffs, char var)
    : c_(std::move(coeffs)), var_(var) {
  drop_zeros();
}

MicroOp MicroOp::d_power(long n, char var) {
  return MicroOp({{n, TatePoly(Rational(1), var)}}, var);
}

MicroOp MicroOp::scalar(const Rational& c, char var) {
  return MicroOp(TatePoly(c, var));
}

void MicroOp::drop_zeros() {
  std::erase_if(c_, [](const auto& kv) { return kv.second.is_zero(); });
  for (auto& [n, f] : c_) f = f.with_var(var_);
}

TatePoly MicroOp::coeff(long n) const {
  auto it = c_.find(n);
  return it == c_.end() ? TatePoly(Rational(0), var_) : it->second;
}

long MicroOp::min_power() const {
  if (c_.empty()) throw ZeroOperator("the zero operator has no powers");
  return c_.begin()->first;
}

long MicroOp::max_power() const {
  if (c_.empty()) throw ZeroOperator("the zero operator has no powers");
  return c_.rbegin()->first;
}

bool MicroOp::is_constant() const { return !has_variable(c_); }

DiffOp MicroOp::to_diff_op() const {
  if (has_negative_powers())
    throw InvalidArgument("operator has negative powers of d");
  return DiffOp(c_, var_);
}

MicroOp MicroOp::operator-() const {
  MicroOp r = *this;
  for (auto& [n, f] : r.c_) f = -f;
  return r;
}

MicroOp operator+(const MicroOp& a, const MicroOp& b) {
  const char v = merged_var(a, b);
  std::map<long, TatePoly> out = a.c_;
  for (const auto& [n, f] : b.c_) {
    auto it = out.find(n);
    if (it == out.end())
      out.emplace(n, f);
    else
      it->second = it->second.with_var(v) + f.with_var(v);
  }
  return MicroOp(std::move(out), v);
}

MicroOp operator-(const MicroOp& a, const MicroOp& b) { return a + (-b); }

MicroOp operator*(const MicroOp& a, const MicroOp& b) {
  const char v = merged_var(a, b);
  std::map<long, TatePoly> out;
  for (const auto& [n, fa] : a.c_) {
    for (const auto& [m, fb] : b.c_) {
      TatePoly deriv = fb.with_var(v);
      for (long j = 0; !deriv.is_zero(); ++j) {
        const Integer c = binomial(n, j);
        if (c == 0) break;  // n >= 0 and j > n
        const TatePoly term = fa.with_var(v) * deriv.scaled(Rational(c));
        auto [it, fresh] = out.try_emplace(n + m - j, term);
        if (!fresh) it->second = it->second + term;
        deriv = derivative(deriv);
      }
    }
  }
  return MicroOp(std::move(out), v);
}

MicroOp micro_mul(const MicroOp& a, const MicroOp& b) { return a * b; }

MicroOp MicroOp::scaled(const Rational& s) const {
  MicroOp r = *this;
  for (auto& [n, f] : r.c_) f = f.scaled(s);
  r.drop_zeros();
  return r;
}

bool operator==(const MicroOp& a, const MicroOp& b) {
  if (a.c_.size() != b.c_.size()) return false;
  if (has_variable(a.c_) && a.var_ != b.var_) return false;
  return std::equal(a.c_.begin(), a.c_.end(), b.c_.begin(),
                    [](const auto& x, const auto& y) {
                      return x.first == y.first &&
                             x.second.coeffs() == y.second.coeffs();
                    });
}

std::string MicroOp::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [n, f] = *it;
    std::string term;
    const std::string d = n == 1 ? "d" : "d^" + std::to_string(n);
    const bool single =
        std::count_if(f.coeffs().begin(), f.coeffs().end(),
                      [](const Rational& c) { return c != 0; }) == 1;
    if (n == 0)
      term = f.to_string();
    else if (f.is_constant() && f.coeff(0) == 1)
      term = d;
    else if (f.is_constant() && f.coeff(0) == -1)
      term = "-" + d;
    else if (single)
      term = f.to_string() + "*" + d;
    else
      term = "(" + f.to_string() + ")*" + d;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

NormExp micro_norm(const MicroOp& s, MicroLevels lv, Prime p) {
  NormExp best = NormExp::zero();
  for (const auto& [n, f] : s.terms())
    best = std::max(best, gauss_norm(f, p) + lv.weight(n));
  return best;
}

std::vector<CanonicalTerm> canonical_form(const MicroOp& s, MicroLevels lv,
                                          Prime p) {
  std::vector<CanonicalTerm> out;
  for (const auto& [n, f] : s.terms()) {
    const long shift = -lv.weight(n);
    out.push_back({n, f.scaled(prime_power(p, shift)), shift});
  }
  return out;
}

MicroOp from_canonical_form(const std::vector<CanonicalTerm>& terms, Prime p,
                            char var) {
  std::map<long, TatePoly> c;
  for (const auto& t : terms)
    c.emplace(t.n, t.coeff.scaled(prime_power(p, -t.shift)));
  return MicroOp(std::move(c), var);
}

Lemma24Verdict check_lemma24(const MicroOp& s, MicroLevels lv, Prime p) {
  if (s.is_zero()) throw ZeroOperator("invertibility of the zero operator");
  const long k = lv.k();
  // |alpha_n| = |b_n| p^{kn} for every n.
  std::map<long, NormExp> alpha;
  for (const auto& [n, f] : s.terms()) alpha.emplace(n, gauss_norm(f, p) + k * n);
  NormExp top = NormExp::zero();
  for (const auto& [n, e] : alpha) top = std::max(top, e);
  std::vector<long> argmax;
  for (const auto& [n, e] : alpha)
    if (e == top) argmax.push_back(n);
  if (argmax.size() != 1)
    return NotInvertible{"no unique coefficient of maximal norm"};
  const long q = argmax.front();
  // Correction series Q = sum_{m != 0} (alpha_{m+q}/alpha_q) (p^k d)^m has
  // ||Q||_{k,r} = max(|alpha_{m+q}|/|alpha_q| * p^{|m|(k-r)} [m < 0]).
  for (const auto& [n, e] : alpha) {
    if (n == q) continue;
    const long m = n - q;
    const NormExp term = e + (m < 0 ? -m * (k - lv.r()) : 0);
    if (!(term < top))
      return NotInvertible{"correction series has norm >= 1 at d^" +
                           std::to_string(n)};
  }
  const TatePoly& dominant = s.terms().at(q);
  if (is_unit_on_disc(dominant, p)) return InvertibleOnDisc{q};
  return BadLocusOnly{q, normalized_reduction(dominant, p)};
}

MicroInverse micro_invert(const MicroOp& s, MicroLevels lv, Prime p,
                          NormExp eps) {
  const Lemma24Verdict verdict = check_lemma24(s, lv, p);
  if (!std::holds_alternative<InvertibleOnDisc>(verdict))
    throw NotInvertibleHere("operator is not invertible in F_{k,r} (" +
                            verdict_name(verdict) + ")");
  if (!eps.is_zero() && eps >= NormExp(0))
    throw InvalidArgument("precision must be below 1, got p^" + eps.to_string());
  const long k = lv.k();
  const long q = std::get<InvertibleOnDisc>(verdict).q;
  const char v = s.var();
  const MicroOp one = MicroOp::scalar(1, v);
  const TatePoly alpha_q = s.terms().at(q).scaled(prime_power(p, -k * q));
  const MicroOp left = MicroOp::d_power(-q, v).scaled(prime_power(p, -k * q));

  // R = sum_{n != q} alpha_n (p^k d)^{n-q} = sum b_n p^{-kq} d^{n-q}.
  std::map<long, TatePoly> rest_terms;
  for (const auto& [n, f] : s.terms())
    if (n != q) rest_terms.emplace(n - q, f.scaled(prime_power(p, -k * q)));
  const MicroOp rest(std::move(rest_terms), v);

  if (eps.is_zero()) {
    if (!rest.is_zero() || !alpha_q.is_constant())
      throw InvalidArgument("exact inverse requested for a non-terminating series");
    MicroOp t = left * MicroOp(TatePoly(1 / alpha_q.leading(), v));
    return {std::move(t), micro_norm(s * t - one, lv, p), 1};
  }

  // The (k,r) norm is submultiplicative, so rounding intermediate terms at
  // p^tau perturbs S*T by at most ||S|| ||left|| p^tau. The exact
  // residual is certified at the end; a failed certificate lowers tau.
  const long s_norm = std::max(0L, micro_norm(s, lv, p).exponent());
  const long left_norm = std::max(0L, micro_norm(left, lv, p).exponent());
  for (long extra = 0; extra <= 64; extra += 8) {
    const long tau = eps.exponent() - s_norm - left_norm - 1 - extra;
    const DiscInverse g = invert_on_disc(alpha_q, p, NormExp(tau));
    const MicroOp g_op = prune(MicroOp(g.inverse), lv, p, tau);
    const MicroOp minus_q = -prune(g_op * rest, lv, p, tau);

    // Terms are added while the current power is at least eps - extra.
    const NormExp stop(eps.exponent() - extra);
    MicroOp sum = one, power = one;
    long terms = 1;
    for (;;) {
      power = prune(power * minus_q, lv, p, tau);
      if (power.is_zero() || micro_norm(power, lv, p) < stop) break;
      sum = sum + power;
      ++terms;
    }
    MicroOp t = left * sum * g_op;
    const NormExp residual = micro_norm(s * t - one, lv, p);
    if (residual < eps) return {std::move(t), residual, terms};
  }
  throw NotInvertibleHere("geometric series failed to reach precision p^" +
                          eps.to_string());
}

long decay_rmin(const DiffOp& op, Prime p) {
  if (op.is_zero()) throw ZeroOperator("decay of the zero operator");
  const long d = op.degree();
  const long top = gauss_norm(op.leading_coefficient(), p).exponent();
  long rmin = 1;
  for (const auto& [n, f] : op.terms()) {
    if (n == d) continue;
    const long diff = gauss_norm(f, p).exponent() - top;
    rmin = std::max(rmin, floor_div(diff, d - n) + 1);
  }
  return rmin;
}

Thm28Verdict thm28_analysis(const DiffOp& op, long r, Prime p) {
  if (!op.is_finite())
    throw TruncatedOperand("invertibility needs a finite differential operator");
  if (op.is_zero()) throw ZeroOperator("invertibility of the zero operator");
  if (r < 1) throw BadLevels("micro level r must be >= 1");
  const long rmin = decay_rmin(op, p);
  if (r < rmin) return FailsDecay{rmin};
  const TatePoly& lead = op.leading_coefficient();
  if (is_unit_on_disc(lead, p)) return EverywhereInvertible{};
  return BadLocus{normalized_reduction(lead, p)};
}

std::string verdict_name(const Lemma24Verdict& v) {
  static const char* names[] = {"InvertibleOnDisc", "BadLocusOnly",
                                "NotInvertible"};
  return names[v.index()];
}

std::string verdict_name(const Thm28Verdict& v) {
  static const char* names[] = {"EverywhereInvertible", "BadLocus",
                                "FailsDecay"};
  return names[v.index()];
}

}  // namespace padicdx
