#pragma once

// Monadic and comonadic schemes.
//
// A monad is a tag type M with
//
//     template <class X> using type = ...;
//     static type<X> unit(X);
//     static type<Y> bind(const type<X>&, k);    // k : const X& -> type<Y>
//
// Monadic values name their monad through `monad_of_t`, so the schemes can
// work it out from an algebra's return type. A sequencing of a signature over
// monads is an object whose `run<M, X>` turns f (m x) into m (f x).

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <type_traits>
#include <utility>
#include <vector>

#include "schemata/fix.hpp"
#include "schemata/functors.hpp"
#include "schemata/gen.hpp"
#include "schemata/schemes.hpp"

namespace schemata {

template <class T>
struct monad_traits {
  using monad = typename T::monad;
  using value_type = typename T::value_type;
};

template <class T>
using monad_of_t = typename monad_traits<T>::monad;
template <class T>
using monadic_value_t = typename monad_traits<T>::value_type;

template <class M, class X>
using MType = typename M::template type<X>;

template <class M, class X, class F>
auto mmap(F f, const MType<M, X>& m) {
  using Y = std::decay_t<std::invoke_result_t<F&, const X&>>;
  return M::bind(m, [f = std::move(f)](const X& x) { return M::unit(Y(f(x))); });
}

template <class M, class X>
MType<M, X> mjoin(const MType<M, MType<M, X>>& mm) {
  return M::bind(mm, [](const MType<M, X>& m) { return m; });
}

// ---------------------------------------------------------------------------
// Identity

struct IdentityMonad;
struct IdentityComonad;

template <class X>
struct Identity {
  using monad = IdentityMonad;
  using comonad = IdentityComonad;
  using value_type = X;
  X value;
  friend bool operator==(const Identity&, const Identity&) = default;
};

struct IdentityMonad {
  template <class X>
  using type = Identity<X>;

  template <class X>
  static Identity<X> unit(X x) {
    return {std::move(x)};
  }
  template <class X, class K>
  static auto bind(const Identity<X>& m, K&& k) {
    return k(m.value);
  }
};

// ---------------------------------------------------------------------------
// Option

struct OptionMonad {
  template <class X>
  using type = std::optional<X>;

  template <class X>
  static std::optional<X> unit(X x) {
    return std::optional<X>(std::move(x));
  }
  template <class X, class K>
  static auto bind(const std::optional<X>& m, K&& k) {
    using R = std::decay_t<std::invoke_result_t<K&, const X&>>;
    if (!m) return R{};
    return k(*m);
  }
};

template <class X>
struct monad_traits<std::optional<X>> {
  using monad = OptionMonad;
  using value_type = X;
};

// ---------------------------------------------------------------------------
// State

template <class S>
struct StateMonad;

template <class S, class X>
struct State {
  using monad = StateMonad<S>;
  using value_type = X;
  std::function<std::pair<X, S>(S)> run;
};

template <class S>
struct StateMonad {
  template <class X>
  using type = State<S, X>;

  template <class X>
  static State<S, X> unit(X x) {
    return {[x = std::move(x)](S s) { return std::pair<X, S>(x, std::move(s)); }};
  }
  template <class X, class K>
  static auto bind(const State<S, X>& m, K k) {
    using R = std::decay_t<std::invoke_result_t<K&, const X&>>;
    return R{[m, k = std::move(k)](S s) {
      auto [x, next] = m.run(std::move(s));
      return k(x).run(std::move(next));
    }};
  }

  static State<S, S> get() {
    return {[](S s) { return std::pair<S, S>(s, s); }};
  }
  static State<S, Unit> put(S s) {
    return {[s = std::move(s)](const S&) { return std::pair<Unit, S>(Unit{}, s); }};
  }
  template <class F>
  static State<S, Unit> modify(F f) {
    return {[f = std::move(f)](S s) { return std::pair<Unit, S>(Unit{}, f(std::move(s))); }};
  }
};

// ---------------------------------------------------------------------------
// Log: a writer accumulating entries in emission order.

template <class W>
struct LogMonad;

template <class W, class X>
struct Logged {
  using monad = LogMonad<W>;
  using value_type = X;
  X value;
  std::vector<W> log;
  friend bool operator==(const Logged&, const Logged&) = default;
};

template <class W>
struct LogMonad {
  template <class X>
  using type = Logged<W, X>;

  template <class X>
  static Logged<W, X> unit(X x) {
    return {std::move(x), {}};
  }
  template <class X, class K>
  static auto bind(const Logged<W, X>& m, K&& k) {
    auto next = k(m.value);
    std::vector<W> log = m.log;
    log.insert(log.end(), next.log.begin(), next.log.end());
    next.log = std::move(log);
    return next;
  }

  static Logged<W, Unit> tell(W w) { return {Unit{}, {std::move(w)}}; }
};

// ---------------------------------------------------------------------------
// SeededRandom: state over a 64-bit Mersenne Twister. Reproducible from the
// seed and never shared between runs.

using RandomMonad = StateMonad<Rng>;
template <class X>
using Random = State<Rng, X>;

/// A uniformly drawn value in [0, bound), taken straight from the engine.
inline Random<std::int64_t> random_below(std::uint64_t bound) {
  return {[bound](Rng g) {
    auto v = static_cast<std::int64_t>(g() % bound);
    return std::pair<std::int64_t, Rng>(v, std::move(g));
  }};
}

template <class X>
X run_random(const Random<X>& m, std::uint64_t seed) {
  return m.run(Rng(seed)).first;
}

// ---------------------------------------------------------------------------
// Sequencings.

/// lToR: left subtree effects first.
struct LeftToRight {
  template <class M, class X, class E>
  static MType<M, TreeF<E, X>> run(const TreeF<E, MType<M, X>>& layer) {
    using Out = TreeF<E, X>;
    if (std::holds_alternative<Empty>(layer)) return M::unit(Out(Empty{}));
    const auto& n = std::get<Node<E, MType<M, X>>>(layer);
    return M::bind(n.left, [n](const X& l) {
      return M::bind(n.right, [l, label = n.label](const X& r) { return M::unit(Out(Node<E, X>{l, label, r})); });
    });
  }
};

/// rToL: right subtree effects first.
struct RightToLeft {
  template <class M, class X, class E>
  static MType<M, TreeF<E, X>> run(const TreeF<E, MType<M, X>>& layer) {
    using Out = TreeF<E, X>;
    if (std::holds_alternative<Empty>(layer)) return M::unit(Out(Empty{}));
    const auto& n = std::get<Node<E, MType<M, X>>>(layer);
    return M::bind(n.right, [n](const X& r) {
      return M::bind(n.left, [r, label = n.label](const X& l) { return M::unit(Out(Node<E, X>{l, label, r})); });
    });
  }
};

/// The only sequencing a list layer admits: run the tail's effects.
struct ListSequence {
  template <class M, class X, class A>
  static MType<M, ListF<A, X>> run(const ListF<A, MType<M, X>>& layer) {
    using Out = ListF<A, X>;
    if (std::holds_alternative<Nil>(layer)) return M::unit(Out(Nil{}));
    const auto& c = std::get<Cons<A, MType<M, X>>>(layer);
    return M::bind(c.tail, [head = c.head](const X& x) { return M::unit(Out(Cons<A, X>{head, x})); });
  }
};

// ---------------------------------------------------------------------------
// Schemes.

/// cataM algM = cata algM
template <class MA = detail::Deduce, class Sig, class AlgM>
auto cataM(AlgM alg, const Mu<Sig>& m) -> detail::carrier_t<MA, AlgM> {
  return cata<MA>(std::move(alg), m);
}

/// mcata seq alg = cata ((>>= alg) . seq)
template <class MA = detail::Deduce, class Seq, class Sig, class Alg>
auto mcata(Seq, Alg alg, const Mu<Sig>& m) -> detail::carrier_t<MA, Alg> {
  using R = detail::carrier_t<MA, Alg>;
  using M = monad_of_t<R>;
  using A = monadic_value_t<R>;
  auto lifted = [alg = std::move(alg)](const Layer<Sig, R>& l) -> R {
    return M::bind(Seq::template run<M, A>(l), alg);
  };
  return cata<R>(std::move(lifted), m);
}

namespace detail {

template <class Sig, class Seq, class M, class A, class S, class Alg, class Coalg>
struct MHylo {
  using R = MType<M, A>;
  std::shared_ptr<Fuel> meter;
  std::shared_ptr<const Alg> alg;
  std::shared_ptr<const Coalg> coalg;

  R operator()(const S& c) const {
    meter->consume();
    auto self = *this;
    return M::bind((*coalg)(c), [self](const Layer<Sig, S>& x) -> R {
      return M::bind(Seq::template run<M, A>(Sig::fmap(self, x)), *self.alg);
    });
  }
};

}  // namespace detail

/// do x <- coalg c; y <- seq (fmap (mhylo seq alg coalg) x); alg y
/// One unit of fuel per coalgebra call. For monads whose binds are deferred
/// (State), the fuel is spent when the resulting action runs.
template <class Sig, class MA = detail::Deduce, class Seq, class Alg, class Coalg, class S>
auto mhylo(Seq, Alg alg, Coalg coalg, S seed, Fuel fuel = Fuel{}) -> detail::carrier_t<MA, Alg> {
  using R = detail::carrier_t<MA, Alg>;
  using M = monad_of_t<R>;
  using A = monadic_value_t<R>;
  detail::MHylo<Sig, Seq, M, A, S, Alg, Coalg> go{std::make_shared<Fuel>(fuel),
                                                  std::make_shared<const Alg>(std::move(alg)),
                                                  std::make_shared<const Coalg>(std::move(coalg))};
  return go(seed);
}

/// mana seq coalg = mhylo seq (return . In) coalg. Effects must finish, so
/// the result is the materialised finite structure.
template <class Sig, class Seq, class Coalg, class S>
auto mana(Seq seq, Coalg coalg, S seed, Fuel fuel = Fuel{}) {
  using MF = std::decay_t<std::invoke_result_t<Coalg&, const S&>>;
  using M = monad_of_t<MF>;
  auto alg = [](const Layer<Sig, Mu<Sig>>& l) { return M::unit(Mu<Sig>(l)); };
  return mhylo<Sig, MType<M, Mu<Sig>>>(seq, alg, std::move(coalg), std::move(seed), fuel);
}

// ---------------------------------------------------------------------------
// Comonads: extract and extend.

struct IdentityComonad {
  template <class X>
  using type = Identity<X>;

  template <class X>
  static const X& extract(const Identity<X>& w) {
    return w.value;
  }
  template <class X, class F>
  static auto extend(F&& f, const Identity<X>& w) {
    return Identity<std::decay_t<std::invoke_result_t<F&, const Identity<X>&>>>{f(w)};
  }
};

template <class E>
struct EnvComonad;

/// A value paired with a read-only environment.
template <class E, class X>
struct Env {
  using comonad = EnvComonad<E>;
  using value_type = X;
  E env;
  X value;
  friend bool operator==(const Env&, const Env&) = default;
};

template <class E>
struct EnvComonad {
  template <class X>
  using type = Env<E, X>;

  template <class X>
  static const X& extract(const Env<E, X>& w) {
    return w.value;
  }
  template <class X, class F>
  static auto extend(F&& f, const Env<E, X>& w) {
    return Env<E, std::decay_t<std::invoke_result_t<F&, const Env<E, X>&>>>{w.env, f(w)};
  }
};

/// w (f x) -> f (w x) for the Identity comonad.
template <class Sig>
struct IdentityDist {
  template <class X>
  Layer<Sig, Identity<X>> operator()(const Identity<Layer<Sig, X>>& w) const {
    return Sig::fmap([](const X& x) { return Identity<X>{x}; }, w.value);
  }
};

/// w (f x) -> f (w x) for Env: every position keeps the environment.
template <class Sig>
struct EnvDist {
  template <class E, class X>
  Layer<Sig, Env<E, X>> operator()(const Env<E, Layer<Sig, X>>& w) const {
    return Sig::fmap([&w](const X& x) { return Env<E, X>{w.env, x}; }, w.value);
  }
};

/// wana dist coalg = ana (dist . extend coalg)
template <class Sig, class Dist, class Coalg, class WS>
Nu<Sig> wana(Dist dist, Coalg coalg, WS start) {
  using W = typename WS::comonad;
  auto step = [dist = std::move(dist), coalg = std::move(coalg)](const WS& w) {
    return dist(W::extend(coalg, w));
  };
  return ana<Sig>(std::move(step), std::move(start));
}

// ---------------------------------------------------------------------------
// Distributive-law conditions for a sequencing.

/// Purity for one layer: both sides of seq . fmap return = return.
template <class M, class Sig, class Seq, class X>
std::pair<MType<M, Layer<Sig, X>>, MType<M, Layer<Sig, X>>> purity_sides(Seq, const Layer<Sig, X>& layer) {
  auto lhs = Seq::template run<M, X>(Sig::fmap([](const X& x) { return M::unit(x); }, layer));
  return {std::move(lhs), M::unit(layer)};
}

/// Join commutation for one layer of nested computations: seq . fmap join versus
/// join . fmap seq . seq.
template <class M, class Sig, class Seq, class X>
std::pair<MType<M, Layer<Sig, X>>, MType<M, Layer<Sig, X>>> join_commutation_sides(
    Seq, const Layer<Sig, MType<M, MType<M, X>>>& layer) {
  using MX = MType<M, X>;
  auto lhs = Seq::template run<M, X>(Sig::fmap([](const MType<M, MX>& mm) { return mjoin<M, X>(mm); }, layer));
  auto outer = Seq::template run<M, MX>(layer);
  auto rhs = M::bind(outer, [](const Layer<Sig, MX>& inner) { return Seq::template run<M, X>(inner); });
  return {std::move(lhs), std::move(rhs)};
}

/// Heuristic for "no duplicated or dropped effects": give every position a
/// distinct logged token and count how often each shows up after sequencing.
template <class Sig, class Seq, class X>
bool effects_used_once(Seq, const Layer<Sig, X>& layer) {
  using M = LogMonad<std::size_t>;
  std::size_t next = 0;
  auto tagged = Sig::fmap([&next](const X& x) { return Logged<std::size_t, X>{x, {next++}}; }, layer);
  auto out = Seq::template run<M, X>(tagged);
  std::vector<std::size_t> seen(next, 0);
  for (auto t : out.log) {
    if (t >= next) return false;
    ++seen[t];
  }
  for (auto count : seen)
    if (count != 1) return false;
  return true;
}

}  // namespace schemata
