#include "padicdx/parser.hpp"

#include <cctype>

#include "padicdx/errors.hpp"

namespace padicdx {

namespace {
OpExpr node(OpExpr::Kind kind, std::vector<OpExprPtr> children) {
  OpExpr e;
  e.kind = kind;
  e.children = std::move(children);
  return e;
}
}  // namespace

OpExprPtr OpExpr::sum(std::vector<OpExprPtr> terms) {
  return std::make_shared<OpExpr>(node(Kind::Sum, std::move(terms)));
}
OpExprPtr OpExpr::product(std::vector<OpExprPtr> factors) {
  return std::make_shared<OpExpr>(node(Kind::Product, std::move(factors)));
}
OpExprPtr OpExpr::power(OpExprPtr base, long exponent) {
  OpExpr e = node(Kind::Power, {std::move(base)});
  e.exponent = exponent;
  return std::make_shared<OpExpr>(std::move(e));
}
OpExprPtr OpExpr::symbol_node(char s) {
  OpExpr e = node(Kind::Symbol, {});
  e.symbol = s;
  return std::make_shared<OpExpr>(std::move(e));
}
OpExprPtr OpExpr::rational(const padicdx::Rational& q) {
  OpExpr e = node(Kind::Rational, {});
  e.value = q;
  return std::make_shared<OpExpr>(std::move(e));
}
OpExprPtr OpExpr::neg(OpExprPtr inner) {
  return std::make_shared<OpExpr>(node(Kind::Neg, {std::move(inner)}));
}
OpExprPtr OpExpr::paren(OpExprPtr inner) {
  return std::make_shared<OpExpr>(node(Kind::Paren, {std::move(inner)}));
}

bool same_tree(const OpExpr& a, const OpExpr& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case OpExpr::Kind::Symbol:
      return a.symbol == b.symbol;
    case OpExpr::Kind::Rational:
      return a.value == b.value;
    case OpExpr::Kind::Power:
      if (a.exponent != b.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_tree(*a.children[i], *b.children[i])) return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view src, ParseMode mode) : src_(src), mode_(mode) {}

  OpExprPtr run() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError("empty expression", pos_);
    OpExprPtr e = expr();
    skip_ws();
    if (pos_ != src_.size())
      throw SyntaxError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  OpExprPtr expr() {
    const std::size_t start = (peek(), pos_);
    std::vector<OpExprPtr> terms{term()};
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      OpExprPtr t = term();
      terms.push_back(c == '-' ? with_pos(OpExpr::neg(t), t->position) : t);
    }
    if (terms.size() == 1) return terms.front();
    return with_pos(OpExpr::sum(std::move(terms)), start);
  }

  OpExprPtr term() {
    const std::size_t start = (peek(), pos_);
    std::vector<OpExprPtr> factors{factor()};
    while (peek() == '*') {
      ++pos_;
      factors.push_back(factor());
    }
    if (factors.size() == 1) return factors.front();
    return with_pos(OpExpr::product(std::move(factors)), start);
  }

  OpExprPtr factor() {
    const std::size_t start = (peek(), pos_);
    if (peek() == '-') {
      ++pos_;
      return with_pos(OpExpr::neg(factor()), start);
    }
    OpExprPtr base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t exp_pos = (peek(), pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError("expected an exponent", exp_pos);
    long e = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      e = e * 10 + (src_[pos_++] - '0');
      if (e > 1'000'000) throw SyntaxError("exponent too large", exp_pos);
    }
    if (negative) {
      const bool is_d = base->kind == OpExpr::Kind::Symbol && base->symbol == 'd';
      const bool invertible_scalar =
          (base->kind == OpExpr::Kind::Symbol && base->symbol == 'p') ||
          (base->kind == OpExpr::Kind::Rational && base->value != 0);
      if (is_d && mode_ != ParseMode::Micro)
        throw NegativePowerOutsideMicroMode(start);
      if (!is_d && !invertible_scalar)
        throw SyntaxError("negative exponent on a non-invertible base", start);
      e = -e;
    }
    return with_pos(OpExpr::power(base, e), start);
  }

  OpExprPtr atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      OpExprPtr inner = expr();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return with_pos(OpExpr::paren(inner), start);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      Integer den = 1;
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
          throw SyntaxError("expected a denominator", pos_);
        den = Integer(read_digits());
        if (den == 0) throw SyntaxError("zero denominator", start);
      }
      Rational q(num, den);
      q.canonicalize();
      return with_pos(OpExpr::rational(q), start);
    }
    if (c == 'd' || c == 'x' || c == 't' || c == 'p') {
      ++pos_;
      if (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
        throw SyntaxError("unknown identifier", start);
      return with_pos(OpExpr::symbol_node(c), start);
    }
    if (c == '\0') throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string read_digits() {
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      digits += src_[pos_++];
    return digits;
  }

  static OpExprPtr with_pos(OpExprPtr e, std::size_t pos) {
    auto copy = std::make_shared<OpExpr>(*e);
    copy->position = pos;
    return copy;
  }

  std::string_view src_;
  ParseMode mode_;
  std::size_t pos_ = 0;
};

MicroOp eval(const OpExpr& e, Prime p) {
  switch (e.kind) {
    case OpExpr::Kind::Sum: {
      MicroOp acc;
      for (const auto& c : e.children) acc = acc + eval(*c, p);
      return acc;
    }
    case OpExpr::Kind::Product: {
      MicroOp acc = MicroOp::scalar(1);
      for (const auto& c : e.children) acc = acc * eval(*c, p);
      return acc;
    }
    case OpExpr::Kind::Power: {
      const OpExpr& base = *e.children.front();
      if (base.kind == OpExpr::Kind::Symbol && base.symbol == 'd')
        return MicroOp::d_power(e.exponent);
      if (base.kind == OpExpr::Kind::Symbol && base.symbol == 'p')
        return MicroOp::scalar(prime_power(p, e.exponent));
      if (e.exponent < 0) {
        if (base.kind != OpExpr::Kind::Rational || base.value == 0)
          throw SyntaxError("negative exponent on a non-invertible base",
                            e.position);
        Rational inv = 1 / base.value;
        Rational acc = 1;
        for (long i = 0; i < -e.exponent; ++i) acc *= inv;
        return MicroOp::scalar(acc);
      }
      const MicroOp b = eval(base, p);
      MicroOp acc = MicroOp::scalar(1, b.var());
      for (long i = 0; i < e.exponent; ++i) acc = acc * b;
      return acc;
    }
    case OpExpr::Kind::Symbol:
      switch (e.symbol) {
        case 'd': return MicroOp::d_power(1);
        case 'p': return MicroOp::scalar(Rational(static_cast<unsigned long>(p.value())));
        default: return MicroOp(TatePoly::variable(e.symbol));
      }
    case OpExpr::Kind::Rational:
      return MicroOp::scalar(e.value);
    case OpExpr::Kind::Neg:
      return -eval(*e.children.front(), p);
    case OpExpr::Kind::Paren:
      return eval(*e.children.front(), p);
  }
  throw SyntaxError("malformed expression", e.position);
}

}  // namespace

OpExprPtr parse(std::string_view src, ParseMode mode) {
  return Parser(src, mode).run();
}

std::string print(const OpExpr& e) {
  switch (e.kind) {
    case OpExpr::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const OpExpr& c = *e.children[i];
        if (i == 0)
          out += print(c);
        else if (c.kind == OpExpr::Kind::Neg)
          out += " - " + print(*c.children.front());
        else
          out += " + " + print(c);
      }
      return out;
    }
    case OpExpr::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i)
        out += (i ? "*" : "") + print(*e.children[i]);
      return out;
    }
    case OpExpr::Kind::Power:
      return print(*e.children.front()) + "^" + std::to_string(e.exponent);
    case OpExpr::Kind::Symbol:
      return std::string(1, e.symbol);
    case OpExpr::Kind::Rational:
      return to_string(e.value);
    case OpExpr::Kind::Neg:
      return "-" + print(*e.children.front());
    case OpExpr::Kind::Paren:
      return "(" + print(*e.children.front()) + ")";
  }
  return {};
}

MicroOp normalize_micro(const OpExpr& e, Prime p) {
  try {
    return eval(e, p);
  } catch (const VariableMismatch& err) {
    throw SyntaxError(std::string("mixed variables: ") + err.what(), e.position);
  }
}

DiffOp normalize_diff(const OpExpr& e, Prime p) {
  const MicroOp m = normalize_micro(e, p);
  if (m.has_negative_powers()) throw NegativePowerOutsideMicroMode(e.position);
  return m.to_diff_op();
}

DiffOp parse_diff_op(std::string_view src, Prime p) {
  return normalize_diff(*parse(src, ParseMode::Differential), p);
}

MicroOp parse_micro_op(std::string_view src, Prime p) {
  return normalize_micro(*parse(src, ParseMode::Micro), p);
}

TatePoly parse_function(std::string_view src, Prime p) {
  const DiffOp op = parse_diff_op(src, p);
  if (op.degree() > 0) throw SyntaxError("expected a function without d", 0);
  return op.is_zero() ? TatePoly(Rational(0), op.var()) : op.coeff(0);
}

Rational parse_scalar(std::string_view src, Prime p) {
  const TatePoly f = parse_function(src, p);
  if (!f.is_constant()) throw SyntaxError("expected a scalar", 0);
  return f.coeff(0);
}

}  // namespace padicdx
