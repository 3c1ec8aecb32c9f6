#include "schemata/godel.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace schemata::godel {

namespace {

// Exponents beyond this many bits would produce numbers with millions of
// digits; refuse instead of exhausting memory.
constexpr unsigned kMaxExponent = 1u << 22;

BigInt power(unsigned base, const BigInt& exponent) {
  if (exponent > kMaxExponent) throw EncodingTooLarge("encoding exceeds the supported size");
  return boost::multiprecision::pow(BigInt(base), exponent.convert_to<unsigned>());
}

unsigned strip(BigInt& n, unsigned p) {
  unsigned e = 0;
  BigInt q, r;
  while (true) {
    boost::multiprecision::divide_qr(n, BigInt(p), q, r);
    if (r != 0) return e;
    n = std::move(q);
    ++e;
  }
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }
bool operator==(const Term& a, const Term& b) { return a.node == b.node; }

BigInt enc_lit(std::int64_t n) {
  BigInt v(n);
  if (n >= 0) return BigInt(2 * v + 1);
  return BigInt(-2 * v);
}

std::int64_t dec_lit(const BigInt& e) {
  if (e < 1) throw DecodeError("literal code must be positive");
  BigInt v = (e % 2 == 1) ? BigInt((e - 1) / 2) : BigInt(-(e / 2));
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw DecodeError("literal out of range");
  return v.convert_to<std::int64_t>();
}

BigInt encode(const Expr& e) {
  return match(
      e.node, [](const Add<Box<Expr>, Box<Term>>& a) { return power(2, encode(a.lhs.get())) * power(3, encode(a.rhs.get())); },
      [](const Minus<Box<Expr>, Box<Term>>& m) {
        return power(5, encode(m.lhs.get())) * power(7, encode(m.rhs.get()));
      },
      [](const FromT<Box<Term>>& t) { return power(11, encode(t.term.get())); });
}

BigInt encode(const Term& t) {
  return match(
      t.node, [](const Lit& n) { return power(2, enc_lit(n.value)); },
      [](const Neg<Box<Term>>& n) { return power(3, encode(n.term.get())); },
      [](const Paren<Box<Expr>>& p) { return power(5, encode(p.expr.get())); });
}

Exponents factorise11(const BigInt& n) {
  if (n < 1) throw DecodeError("only positive numbers have a factorisation");
  BigInt rest = n;
  Exponents out;
  unsigned twos = boost::multiprecision::lsb(rest);
  rest >>= twos;
  out.e2 = twos;
  out.e3 = strip(rest, 3);
  out.e5 = strip(rest, 5);
  out.e7 = strip(rest, 7);
  out.e11 = strip(rest, 11);
  return out;
}

ExprF<BigInt, BigInt> gen_expr(const BigInt& n) {
  auto [e2, e3, e5, e7, e11] = factorise11(n);
  if (e2 > 0 || e3 > 0) return Add<BigInt, BigInt>{e2, e3};
  if (e5 > 0 || e7 > 0) return Minus<BigInt, BigInt>{e5, e7};
  return FromT<BigInt>{e11};
}

TermF<BigInt, BigInt> gen_term(const BigInt& n) {
  auto [e2, e3, e5, e7, e11] = factorise11(n);
  if (e2 > 0) return Lit{dec_lit(e2)};
  if (e3 > 0) return Neg<BigInt>{e3};
  return Paren<BigInt>{e5};
}

std::pair<CoExpr, CoTerm> dec_expr_term(const BigInt& n) {
  return comutu<ExprSig, TermSig>(gen_expr, gen_term, n);
}

Expr materialize(const CoExpr& e, Fuel& fuel) {
  fuel.consume();
  return match(
      e.observe(),
      [&](const Add<CoExpr, CoTerm>& a) {
        Expr lhs = materialize(a.lhs, fuel);
        return add(std::move(lhs), materialize(a.rhs, fuel));
      },
      [&](const Minus<CoExpr, CoTerm>& m) {
        Expr lhs = materialize(m.lhs, fuel);
        return minus(std::move(lhs), materialize(m.rhs, fuel));
      },
      [&](const FromT<CoTerm>& t) { return from_t(materialize(t.term, fuel)); });
}

Term materialize(const CoTerm& t, Fuel& fuel) {
  fuel.consume();
  return match(
      t.observe(), [](const Lit& n) { return lit(n.value); },
      [&](const Neg<CoTerm>& n) { return neg(materialize(n.term, fuel)); },
      [&](const Paren<CoExpr>& p) { return paren(materialize(p.expr, fuel)); });
}

Expr decode_expr(const BigInt& n, Fuel fuel) {
  Expr e = materialize(dec_expr_term(n).first, fuel);
  if (encode(e) != n) throw DecodeError(n.str() + " is not the code of an expression");
  return e;
}

Term decode_term(const BigInt& n, Fuel fuel) {
  Term t = materialize(dec_expr_term(n).second, fuel);
  if (encode(t) != n) throw DecodeError(n.str() + " is not the code of a term");
  return t;
}

std::string show(const Expr& e) {
  return match(
      e.node, [](const Add<Box<Expr>, Box<Term>>& a) { return show(a.lhs.get()) + " + " + show(a.rhs.get()); },
      [](const Minus<Box<Expr>, Box<Term>>& m) { return show(m.lhs.get()) + " - " + show(m.rhs.get()); },
      [](const FromT<Box<Term>>& t) { return show(t.term.get()); });
}

std::string show(const Term& t) {
  return match(
      t.node, [](const Lit& n) { return std::to_string(n.value); },
      [](const Neg<Box<Term>>& n) { return "~" + show(n.term.get()); },
      [](const Paren<Box<Expr>>& p) { return "(" + show(p.expr.get()) + ")"; });
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SchemeError("cannot parse expression at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool digit_at(std::size_t i) const { return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i])); }

  Expr expr() {
    Expr e = from_t(term());
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        char op = s_[pos_++];
        Term t = term();
        e = op == '+' ? add(std::move(e), std::move(t)) : minus(std::move(e), std::move(t));
      } else {
        return e;
      }
    }
  }

  Term term() {
    skip();
    if (pos_ >= s_.size()) fail("expected a term");
    char c = s_[pos_];
    if (c == '~') {
      ++pos_;
      return neg(term());
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return paren(std::move(e));
    }
    if (digit_at(pos_) || (c == '-' && digit_at(pos_ + 1))) {
      std::size_t start = pos_;
      ++pos_;
      while (digit_at(pos_)) ++pos_;
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
      if (ec != std::errc() || ptr != s_.data() + pos_) fail("literal out of range");
      return lit(value);
    }
    fail("expected a term");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

constexpr double kLog2 = 0.30102999566398120;
constexpr double kLog3 = 0.47712125471966244;
constexpr double kLog5 = 0.69897000433601886;
constexpr double kLog7 = 0.84509804001425681;
constexpr double kLog11 = 1.04139268515822504;

// log10 of p^x given log10 of x; negative when beyond the limit.
double raise(double log_base, double log_exponent, double limit) {
  if (log_exponent < 0 || log_exponent > 300) return -1;
  double v = std::pow(10.0, log_exponent) * log_base;
  return v > limit ? -1 : v;
}

double log10_of(const Term& t, double limit);

double log10_of(const Expr& e, double limit) {
  auto pair = [limit](double la, double lb, double pa, double pb) {
    double a = raise(pa, la, limit);
    double b = raise(pb, lb, limit);
    if (a < 0 || b < 0 || a + b > limit) return -1.0;
    return a + b;
  };
  return match(
      e.node,
      [&](const Add<Box<Expr>, Box<Term>>& a) {
        return pair(log10_of(a.lhs.get(), limit), log10_of(a.rhs.get(), limit), kLog2, kLog3);
      },
      [&](const Minus<Box<Expr>, Box<Term>>& m) {
        return pair(log10_of(m.lhs.get(), limit), log10_of(m.rhs.get(), limit), kLog5, kLog7);
      },
      [&](const FromT<Box<Term>>& t) { return raise(kLog11, log10_of(t.term.get(), limit), limit); });
}

double log10_of(const Term& t, double limit) {
  return match(
      t.node,
      [&](const Lit& n) {
        double code = n.value >= 0 ? 2.0 * static_cast<double>(n.value) + 1 : -2.0 * static_cast<double>(n.value);
        return raise(kLog2, std::log10(code), limit);
      },
      [&](const Neg<Box<Term>>& n) { return raise(kLog3, log10_of(n.term.get(), limit), limit); },
      [&](const Paren<Box<Expr>>& p) { return raise(kLog5, log10_of(p.expr.get(), limit), limit); });
}

Term draw_term(std::mt19937_64& rng, int depth);

Expr draw_expr(std::mt19937_64& rng, int depth) {
  // Add and Minus need room for an Expr (two layers) below them.
  int choices = depth >= 3 ? 3 : 1;
  switch (static_cast<int>(rng() % static_cast<unsigned>(choices))) {
    case 1: {
      Expr lhs = draw_expr(rng, depth - 1);
      return add(std::move(lhs), draw_term(rng, depth - 1));
    }
    case 2: {
      Expr lhs = draw_expr(rng, depth - 1);
      return minus(std::move(lhs), draw_term(rng, depth - 1));
    }
    default:
      return from_t(draw_term(rng, depth - 1));
  }
}

Term draw_term(std::mt19937_64& rng, int depth) {
  int choices = depth >= 3 ? 3 : depth == 2 ? 2 : 1;
  switch (static_cast<int>(rng() % static_cast<unsigned>(choices))) {
    case 1:
      return neg(draw_term(rng, depth - 1));
    case 2:
      return paren(draw_expr(rng, depth - 1));
    default:
      return lit(static_cast<std::int64_t>(rng() % 7) - 3);
  }
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).run(); }

double encoding_log10(const Expr& e, double limit) { return log10_of(e, limit); }

Expr random_expr(std::mt19937_64& rng, int depth, double digit_limit) {
  if (depth < 2) throw SchemeError("an expression needs at least two layers");
  while (true) {
    int d = 2 + static_cast<int>(rng() % static_cast<unsigned>(depth - 1));
    Expr e = draw_expr(rng, d);
    if (encoding_log10(e, digit_limit) >= 0) return e;
  }
}

}  // namespace schemata::godel
