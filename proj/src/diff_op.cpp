#include "padicdx/diff_op.hpp"

#include <algorithm>

#include "padicdx/errors.hpp"

namespace padicdx {
namespace {

bool has_variable(const std::map<long, TatePoly>& c) {
  return std::any_of(c.begin(), c.end(),
                     [](const auto& kv) { return !kv.second.is_constant(); });
}

char merged_var(const DiffOp& a, const DiffOp& b) {
  const bool va = has_variable(a.terms());
  const bool vb = has_variable(b.terms());
  if (va && vb && a.var() != b.var())
    throw VariableMismatch(std::string("operators in ") + a.var() + " and " +
                           b.var());
  return va ? a.var() : b.var();
}

void require_finite(const DiffOp& a, const DiffOp& b) {
  if (!a.is_finite() || !b.is_finite())
    throw TruncatedOperand("arithmetic is undefined on truncated operators");
}

}  // namespace

DiffOp::DiffOp(const TatePoly& f) : var_(f.var()) {
  if (!f.is_zero()) c_.emplace(0, f);
}

DiffOp::DiffOp(std::map<long, TatePoly> coeffs, char var, Finiteness tag)
    : c_(std::move(coeffs)), var_(var), tag_(tag) {
  for (const auto& [n, f] : c_)
    if (n < 0) throw InvalidArgument("negative power of d in a DiffOp");
  drop_zeros();
}

DiffOp DiffOp::d_power(long n, char var) {
  return DiffOp({{n, TatePoly(Rational(1), var)}}, var);
}

DiffOp DiffOp::scalar(const Rational& c, char var) {
  return DiffOp(TatePoly(c, var));
}

DiffOp DiffOp::variable(char var) { return DiffOp(TatePoly::variable(var)); }

DiffOp DiffOp::truncated() const {
  DiffOp r = *this;
  r.tag_ = Finiteness::TruncatedInfinite;
  return r;
}

void DiffOp::drop_zeros() {
  std::erase_if(c_, [](const auto& kv) { return kv.second.is_zero(); });
  for (auto& [n, f] : c_) f = f.with_var(var_);
}

const TatePoly& DiffOp::leading_coefficient() const {
  if (c_.empty()) throw ZeroOperator("the zero operator has no leading term");
  return c_.rbegin()->second;
}

TatePoly DiffOp::coeff(long n) const {
  auto it = c_.find(n);
  return it == c_.end() ? TatePoly(Rational(0), var_) : it->second;
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [n, f] : r.c_) f = -f;
  return r;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  require_finite(a, b);
  const char v = merged_var(a, b);
  std::map<long, TatePoly> out = a.c_;
  for (const auto& [n, f] : b.c_) {
    auto it = out.find(n);
    if (it == out.end())
      out.emplace(n, f);
    else
      it->second = it->second.with_var(v) + f.with_var(v);
  }
  return DiffOp(std::move(out), v);
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

TatePoly nth_derivative(TatePoly f, long j) {
  for (long i = 0; i < j && !f.is_zero(); ++i) f = derivative(f);
  return f;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  require_finite(a, b);
  const char v = merged_var(a, b);
  std::map<long, TatePoly> out;
  for (const auto& [n, fa] : a.c_) {
    for (const auto& [m, fb] : b.c_) {
      // d^n fb = sum_j C(n,j) fb^{(j)} d^{n-j}
      TatePoly deriv = fb.with_var(v);
      for (long j = 0; j <= n && !deriv.is_zero(); ++j) {
        const TatePoly term =
            fa.with_var(v) * deriv.scaled(Rational(binomial(n, j)));
        auto [it, fresh] = out.try_emplace(n + m - j, term);
        if (!fresh) it->second = it->second + term;
        deriv = derivative(deriv);
      }
    }
  }
  return DiffOp(std::move(out), v);
}

DiffOp op_mul(const DiffOp& a, const DiffOp& b) { return a * b; }

DiffOp DiffOp::scaled(const Rational& s) const {
  DiffOp r = *this;
  for (auto& [n, f] : r.c_) f = f.scaled(s);
  r.drop_zeros();
  return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (a.tag_ != b.tag_ || a.c_.size() != b.c_.size()) return false;
  if (has_variable(a.c_) && a.var_ != b.var_) return false;
  return std::equal(a.c_.begin(), a.c_.end(), b.c_.begin(),
                    [](const auto& x, const auto& y) {
                      return x.first == y.first &&
                             x.second.coeffs() == y.second.coeffs();
                    });
}

std::string DiffOp::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [n, f] = *it;
    std::string term;
    const std::string d = n == 1 ? "d" : "d^" + std::to_string(n);
    if (n == 0) {
      term = f.to_string();
    } else if (f.is_constant() && f.coeff(0) == 1) {
      term = d;
    } else if (f.is_constant() && f.coeff(0) == -1) {
      term = "-" + d;
    } else if (std::count_if(f.coeffs().begin(), f.coeffs().end(),
                             [](const Rational& c) { return c != 0; }) == 1) {
      term = f.to_string() + "*" + d;
    } else {
      term = "(" + f.to_string() + ")*" + d;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

NormExp norm_level(const DiffOp& op, long k, Prime p) {
  NormExp best = NormExp::zero();
  for (const auto& [n, f] : op.terms())
    best = std::max(best, gauss_norm(f, p) + k * n);
  return best;
}

long order_level(const DiffOp& op, long k, Prime p) {
  if (op.is_zero()) throw ZeroOperator("order of the zero operator");
  const NormExp norm = norm_level(op, k, p);
  long order = 0;
  for (const auto& [n, f] : op.terms())
    if (gauss_norm(f, p) + k * n == norm) order = n;
  return order;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

TatePoly apply(const DiffOp& op, const TatePoly& f) {
  TatePoly acc(Rational(0), op.var());
  for (const auto& [n, g] : op.terms()) acc = acc + g * nth_derivative(f, n);
  return acc;
}

ConnectionMatrix::ConnectionMatrix(std::vector<std::vector<TatePoly>> entries)
    : e_(std::move(entries)) {
  for (const auto& row : e_)
    if (row.size() != e_.size())
      throw InvalidArgument("connection matrix must be square");
}

ConnectionMatrix ConnectionMatrix::identity(std::size_t n, char var) {
  std::vector<std::vector<TatePoly>> e(
      n, std::vector<TatePoly>(n, TatePoly(Rational(0), var)));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = TatePoly(Rational(1), var);
  return ConnectionMatrix(std::move(e));
}

ConnectionMatrix operator+(const ConnectionMatrix& a,
                           const ConnectionMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("matrix size mismatch");
  auto e = a.e_;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) e[i][j] = e[i][j] + b.e_[i][j];
  return ConnectionMatrix(std::move(e));
}

ConnectionMatrix operator*(const ConnectionMatrix& a,
                           const ConnectionMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("matrix size mismatch");
  const std::size_t n = a.size();
  std::vector<std::vector<TatePoly>> e(n, std::vector<TatePoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TatePoly acc;
      for (std::size_t l = 0; l < n; ++l) acc = acc + a.e_[i][l] * b.e_[l][j];
      e[i][j] = acc;
    }
  return ConnectionMatrix(std::move(e));
}

ConnectionMatrix ConnectionMatrix::scaled(const Rational& s) const {
  auto e = e_;
  for (auto& row : e)
    for (auto& f : row) f = f.scaled(s);
  return ConnectionMatrix(std::move(e));
}

ConnectionMatrix ConnectionMatrix::derivative() const {
  auto e = e_;
  for (auto& row : e)
    for (auto& f : row) f = padicdx::derivative(f);
  return ConnectionMatrix(std::move(e));
}

std::string ConnectionMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < e_.size(); ++j)
      out += (j ? ", " : "") + e_[i][j].to_string();
  }
  return out + "]";
}

NormExp sup_norm(const ConnectionMatrix& a, Prime p) {
  NormExp best = NormExp::zero();
  for (const auto& row : a.entries())
    for (const auto& f : row) best = std::max(best, gauss_norm(f, p));
  return best;
}

ConnectionMatrix connection_matrix_power(const ConnectionMatrix& a, long n) {
  if (n < 1) throw InvalidArgument("connection_matrix_power needs n >= 1");
  ConnectionMatrix s = a;
  for (long i = 1; i < n; ++i) s = s.derivative() + s * a;
  return s;
}

long connection_level(const ConnectionMatrix& a, Prime p) {
  const NormExp norm = sup_norm(a, p);
  if (norm.is_zero()) return 0;
  return std::max(0L, norm.exponent());
}

}  // namespace padicdx
