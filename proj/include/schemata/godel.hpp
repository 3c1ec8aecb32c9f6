#pragma once

// Goedel numbering of a small expression grammar. Decoding unfolds one seed
// into the two mutually recursive codata types with comutu; encoding is
// plain recursion and serves as the decoder's oracle.
//
//   g (Add e t)   = 2^(g e) * 3^(h t)     h (Lit n)   = 2^(encLit n)
//   g (Minus e t) = 5^(g e) * 7^(h t)     h (Neg t)   = 3^(h t)
//   g (FromT t)   = 11^(h t)              h (Paren e) = 5^(g e)

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "schemata/fix.hpp"
#include "schemata/schemes_extra.hpp"

namespace schemata::godel {

using BigInt = boost::multiprecision::cpp_int;

class DecodeError : public SchemeError {
 public:
  using SchemeError::SchemeError;
};

/// Raised when an encoding would not fit in memory.
class EncodingTooLarge : public SchemeError {
 public:
  using SchemeError::SchemeError;
};

// ExprF e t = Add' e t | Minus' e t | FromT' t
template <class E, class T>
struct Add {
  E lhs;
  T rhs;
  friend bool operator==(const Add&, const Add&) = default;
};
template <class E, class T>
struct Minus {
  E lhs;
  T rhs;
  friend bool operator==(const Minus&, const Minus&) = default;
};
template <class T>
struct FromT {
  T term;
  friend bool operator==(const FromT&, const FromT&) = default;
};

template <class E, class T>
using ExprF = std::variant<Add<E, T>, Minus<E, T>, FromT<T>>;

// TermF e t = Lit' Int | Neg' t | Paren' e
struct Lit {
  std::int64_t value;
  friend bool operator==(const Lit&, const Lit&) = default;
};
template <class T>
struct Neg {
  T term;
  friend bool operator==(const Neg&, const Neg&) = default;
};
template <class E>
struct Paren {
  E expr;
  friend bool operator==(const Paren&, const Paren&) = default;
};

template <class E, class T>
using TermF = std::variant<Lit, Neg<T>, Paren<E>>;

template <class F, class X>
using result_of_t = std::decay_t<std::invoke_result_t<F&, const X&>>;

struct ExprSig {
  template <class E, class T>
  using layer = ExprF<E, T>;

  template <class F, class G, class E, class T>
  static ExprF<result_of_t<F, E>, result_of_t<G, T>> bimap(F&& f, G&& g, const ExprF<E, T>& l) {
    using E2 = result_of_t<F, E>;
    using T2 = result_of_t<G, T>;
    return match(
        l,
        [&](const Add<E, T>& a) -> ExprF<E2, T2> {
          auto lhs = f(a.lhs);
          return Add<E2, T2>{std::move(lhs), g(a.rhs)};
        },
        [&](const Minus<E, T>& m) -> ExprF<E2, T2> {
          auto lhs = f(m.lhs);
          return Minus<E2, T2>{std::move(lhs), g(m.rhs)};
        },
        [&](const FromT<T>& t) -> ExprF<E2, T2> { return FromT<T2>{g(t.term)}; });
  }
};

struct TermSig {
  template <class E, class T>
  using layer = TermF<E, T>;

  template <class F, class G, class E, class T>
  static TermF<result_of_t<F, E>, result_of_t<G, T>> bimap(F&& f, G&& g, const TermF<E, T>& l) {
    using E2 = result_of_t<F, E>;
    using T2 = result_of_t<G, T>;
    return match(
        l, [](const Lit& n) -> TermF<E2, T2> { return n; },
        [&](const Neg<T>& n) -> TermF<E2, T2> { return Neg<T2>{g(n.term)}; },
        [&](const Paren<E>& p) -> TermF<E2, T2> { return Paren<E2>{f(p.expr)}; });
  }
};

/// Immutable shared box, compared by value.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}  // NOLINT: implicit on purpose
  const T& get() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  friend bool operator==(const Box& a, const Box& b) { return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_; }

 private:
  std::shared_ptr<const T> ptr_;
};

struct Expr;
struct Term;

struct Expr {
  ExprF<Box<Expr>, Box<Term>> node;
};
struct Term {
  TermF<Box<Expr>, Box<Term>> node;
};

bool operator==(const Expr& a, const Expr& b);
bool operator==(const Term& a, const Term& b);

inline Expr add(Expr e, Term t) { return {Add<Box<Expr>, Box<Term>>{std::move(e), std::move(t)}}; }
inline Expr minus(Expr e, Term t) { return {Minus<Box<Expr>, Box<Term>>{std::move(e), std::move(t)}}; }
inline Expr from_t(Term t) { return {FromT<Box<Term>>{std::move(t)}}; }
inline Term lit(std::int64_t n) { return {Lit{n}}; }
inline Term neg(Term t) { return {Neg<Box<Term>>{std::move(t)}}; }
inline Term paren(Expr e) { return {Paren<Box<Expr>>{std::move(e)}}; }

using CoExpr = Nu1<ExprSig, TermSig>;
using CoTerm = Nu2<ExprSig, TermSig>;

/// encLit n = if n >= 0 then 2n + 1 else -2n
BigInt enc_lit(std::int64_t n);
/// Inverse of enc_lit on positive integers.
std::int64_t dec_lit(const BigInt& e);

/// g and h.
BigInt encode(const Expr& e);
BigInt encode(const Term& t);

struct Exponents {
  BigInt e2, e3, e5, e7, e11;
};

/// Exponents of 2, 3, 5, 7 and 11 in the factorisation of n >= 1.
Exponents factorise11(const BigInt& n);

ExprF<BigInt, BigInt> gen_expr(const BigInt& n);
TermF<BigInt, BigInt> gen_term(const BigInt& n);

/// decExprTerm = comutu genExpr genTerm
std::pair<CoExpr, CoTerm> dec_expr_term(const BigInt& n);

/// Finite part of the decoded codata, one unit of fuel per layer.
Expr materialize(const CoExpr& e, Fuel& fuel);
Term materialize(const CoTerm& t, Fuel& fuel);

/// Decodes n and checks that it is exactly the encoding of the result.
Expr decode_expr(const BigInt& n, Fuel fuel = Fuel{});
Term decode_term(const BigInt& n, Fuel fuel = Fuel{});

/// Concrete syntax: `e + t`, `e - t`, integer literals, `~t` for Neg and
/// `(e)` for Paren. Addition and subtraction associate to the left.
std::string show(const Expr& e);
std::string show(const Term& t);
Expr parse_expr(const std::string& text);

/// log10 of encode(e), or a negative value when it would exceed 10^limit.
double encoding_log10(const Expr& e, double limit);

/// Random expression with at most `depth` layers (Expr and Term layers both
/// count) and small literals, redrawn until its encoding stays below
/// 10^digit_limit.
Expr random_expr(std::mt19937_64& rng, int depth, double digit_limit);

}  // namespace schemata::godel
