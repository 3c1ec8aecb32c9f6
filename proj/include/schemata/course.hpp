#pragma once

// Course-of-value schemes. Cofree tables annotate every layer of a finite
// structure with the result computed there; Free batches let an unfold emit
// several layers per step.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "schemata/fix.hpp"
#include "schemata/functors.hpp"
#include "schemata/schemes.hpp"

namespace schemata {

class IndexOutOfTable : public SchemeError {
 public:
  explicit IndexOutOfTable(std::size_t n)
      : SchemeError("index " + std::to_string(n) + " is past the end of the table") {}
};

// ---------------------------------------------------------------------------
// Cofree f a: a head annotation over one f-layer of further tables.

template <class A, class L>
struct Annotated {
  A head;
  L tail;
};

template <class Sig, class A>
struct CofreeSig {
  static constexpr bool lazy_positions = has_lazy_positions<Sig>();

  template <class X>
  using layer = Annotated<A, Layer<Sig, X>>;

  template <class F, class X>
  static layer<mapped_t<F, X>> fmap(F&& f, const layer<X>& l) {
    return {l.head, Sig::fmap(std::forward<F>(f), l.tail)};
  }
};

template <class Sig, class A>
using Cofree = Mu<CofreeSig<Sig, A>>;

/// The x in x ◁ rest.
template <class Sig, class A>
const A& extract(const Cofree<Sig, A>& c) {
  return c.layer().head;
}

template <class Sig, class A>
const Layer<Sig, Cofree<Sig, A>>& unwrap(const Cofree<Sig, A>& c) {
  return c.layer().tail;
}

template <class Sig, class A>
Cofree<Sig, A> annotate(A head, Layer<Sig, Cofree<Sig, A>> tail) {
  return Cofree<Sig, A>(Annotated<A, Layer<Sig, Cofree<Sig, A>>>{std::move(head), std::move(tail)});
}

namespace detail {

template <class R, class Sig, class Alg>
auto tabulating(Alg alg) {
  return [alg = std::move(alg)](const Layer<Sig, Cofree<Sig, R>>& x) {
    R result = alg(x);
    return annotate<Sig, R>(std::move(result), x);
  };
}

}  // namespace detail

/// histo alg = extract . cata (\x -> alg x ◁ x)
template <class A = detail::Deduce, class Sig, class Alg>
auto histo(Alg alg, const Mu<Sig>& m) -> detail::carrier_t<A, Alg> {
  using R = detail::carrier_t<A, Alg>;
  return extract(cata<Cofree<Sig, R>>(detail::tabulating<R, Sig>(std::move(alg)), m));
}

/// dyna alg coalg = extract . hylo (\x -> alg x ◁ x) coalg
template <class Sig, class A = detail::Deduce, class Alg, class Coalg, class S>
auto dyna(Alg alg, Coalg coalg, S seed, Fuel fuel = Fuel{}) -> detail::carrier_t<A, Alg> {
  using R = detail::carrier_t<A, Alg>;
  return extract(hylo<Sig, Cofree<Sig, R>>(detail::tabulating<R, Sig>(std::move(alg)), std::move(coalg),
                                          std::move(seed), fuel));
}

/// The n-th entry of a list-shaped table; entry 0 is the head.
template <class E, class P>
const P& index(const Cofree<ListSig<E>, P>& table, std::size_t n) {
  const Cofree<ListSig<E>, P>* cur = &table;
  for (std::size_t i = n; i > 0; --i) {
    const auto* c = std::get_if<Cons<E, Cofree<ListSig<E>, P>>>(&unwrap(*cur));
    if (!c) throw IndexOutOfTable(n);
    cur = &c->tail;
  }
  return extract(*cur);
}

/// Table position of subproblem (drop n x, drop m y) seen from (x, y), for
/// the LCS enumeration that shortens the second sequence first.
constexpr std::size_t offset(std::size_t n, std::size_t m, std::size_t len2) { return n * (len2 + 1) + m - 1; }

// ---------------------------------------------------------------------------
// Free f a = Ret a | Op (f (Free f a))

template <class A>
struct Ret {
  A value;
};

template <class L>
struct Op {
  L layer;
};

template <class Sig, class A>
struct FreeSig {
  static constexpr bool lazy_positions = has_lazy_positions<Sig>();

  template <class X>
  using layer = std::variant<Ret<A>, Op<Layer<Sig, X>>>;

  template <class F, class X>
  static layer<mapped_t<F, X>> fmap(F&& f, const layer<X>& l) {
    using Y = mapped_t<F, X>;
    if (const auto* r = std::get_if<Ret<A>>(&l)) return *r;
    return Op<Layer<Sig, Y>>{Sig::fmap(std::forward<F>(f), std::get<Op<Layer<Sig, X>>>(l).layer)};
  }
};

template <class Sig, class A>
using Free = Mu<FreeSig<Sig, A>>;

template <class Sig, class A>
Free<Sig, A> ret(A a) {
  return Free<Sig, A>(Ret<A>{std::move(a)});
}

template <class Sig, class A>
Free<Sig, A> op(Layer<Sig, Free<Sig, A>> layer) {
  return Free<Sig, A>(Op<Layer<Sig, Free<Sig, A>>>{std::move(layer)});
}

/// eval alg g: g at the leaves, alg at every Op layer.
template <class B = detail::Deduce, class Sig, class A, class Alg, class G>
auto eval(Alg alg, G g, const Free<Sig, A>& t) -> detail::carrier_t<B, Alg> {
  using R = detail::carrier_t<B, Alg>;
  auto both = [&alg, &g](const Layer<FreeSig<Sig, A>, R>& l) -> R {
    if (const auto* r = std::get_if<Ret<A>>(&l)) return g(r->value);
    return alg(std::get<Op<Layer<Sig, R>>>(l).layer);
  };
  return cata<R>(both, t);
}

/// futu coalg = ana coalg' . Ret. Each step emits at least one layer, since
/// `coalg` returns an f-layer of batches.
template <class Sig, class S, class Coalg>
Nu<Sig> futu(Coalg coalg, S seed) {
  using F = Free<Sig, S>;
  auto step = [coalg = std::move(coalg)](const F& f) -> Layer<Sig, F> {
    if (const auto* r = std::get_if<Ret<S>>(&f.layer())) return coalg(r->value);
    return std::get<Op<Layer<Sig, F>>>(f.layer()).layer;
  };
  return ana<Sig>(std::move(step), ret<Sig, S>(std::move(seed)));
}

/// chrono alg coalg = extract . hylo alg' coalg' . Ret. Fuel counts calls of
/// `coalg`; layers replayed out of a batch are free.
template <class Sig, class B = detail::Deduce, class Alg, class Coalg, class S>
auto chrono(Alg alg, Coalg coalg, S seed, Fuel fuel = Fuel{}) -> detail::carrier_t<B, Alg> {
  using R = detail::carrier_t<B, Alg>;
  using F = Free<Sig, S>;
  auto meter = std::make_shared<Fuel>(fuel);
  auto step = [meter, coalg = std::move(coalg)](const F& f) -> Layer<Sig, F> {
    if (const auto* r = std::get_if<Ret<S>>(&f.layer())) {
      meter->consume();
      return coalg(r->value);
    }
    return std::get<Op<Layer<Sig, F>>>(f.layer()).layer;
  };
  return extract(detail::refold<Cofree<Sig, R>, Sig>(detail::tabulating<R, Sig>(std::move(alg)), std::move(step),
                                                     ret<Sig, S>(std::move(seed))));
}

}  // namespace schemata
