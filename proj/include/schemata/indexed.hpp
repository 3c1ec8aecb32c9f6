#pragma once

// Indexed fixed points for nested datatypes and GADT-style families.
//
// A higher-order signature H carries a runtime index alongside every layer:
//
//     using index_type = ...;
//     template <class R> using layer = ...;      // R at recursive positions
//     static bool admits(index_type, const layer<R>&);
//     static layer<R2> hmap(phi, index_type i, const layer<R>&);
//
// `phi(j, r)` receives the index j that the child at that position must
// have, which is how hmap stays index-preserving. A carrier R stands for a
// whole family of types, one per index; algebras receive the index they are
// working at.

#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "schemata/fix.hpp"

namespace schemata {

class IndexWitnessError : public SchemeError {
 public:
  using SchemeError::SchemeError;
};

template <class H, class R>
using HLayer = typename H::template layer<R>;

/// Indexed least fixed point: a layer together with the index it lives at.
template <class H>
class IMu {
 public:
  using index_type = typename H::index_type;
  using layer_type = HLayer<H, IMu>;

  /// Checks the index discipline of this one layer.
  IMu(index_type index, layer_type layer) : index_(index) {
    if (!H::admits(index, layer)) throw IndexWitnessError("constructor not available at index " + show_index(index));
    H::hmap(
        [](const index_type& expected, const IMu& child) {
          if (!(child.index() == expected))
            throw IndexWitnessError("child at index " + show_index(child.index()) + " where " +
                                    show_index(expected) + " is required");
          return Unit{};
        },
        index, layer);
    node_ = std::make_shared<const layer_type>(std::move(layer));
  }

  const index_type& index() const { return index_; }
  const layer_type& layer() const { return *node_; }

 private:
  static std::string show_index(const index_type& i) {
    if constexpr (requires { std::to_string(i); })
      return std::to_string(i);
    else
      return "?";
  }

  index_type index_;
  std::shared_ptr<const layer_type> node_;
};

/// icata alg (In x) = alg (hmap (icata alg) x), with the index made explicit:
/// alg(i, layer) produces the carrier at index i.
template <class A = detail::Deduce, class H, class Alg>
auto icata(Alg alg, const IMu<H>& m) -> detail::carrier_t<A, Alg> {
  using R = detail::carrier_t<A, Alg>;
  using I = typename H::index_type;
  std::vector<const IMu<H>*> nodes{&m};
  std::vector<HLayer<H, std::size_t>> frames;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    frames.push_back(H::hmap(
        [&nodes](const I&, const IMu<H>& child) {
          nodes.push_back(&child);
          return nodes.size() - 1;
        },
        nodes[i]->index(), nodes[i]->layer()));
  }
  std::vector<std::optional<R>> results(frames.size());
  for (std::size_t i = frames.size(); i-- > 0;) {
    auto layer = H::hmap([&results](const I&, const std::size_t& j) { return std::move(*results[j]); },
                         nodes[i]->index(), frames[i]);
    results[i].emplace(alg(nodes[i]->index(), layer));
  }
  return std::move(*results.front());
}

/// K a x = K a: the constant family. Only a tag, since a runtime-indexed
/// carrier for K a is just a.
template <class A>
using Konst = A;

/// Cont r a = (a -> r) -> r, at the element type `Elem` of some index.
template <class R, class Elem>
using Cont = std::function<R(const std::function<R(const Elem&)>&)>;

// ---------------------------------------------------------------------------
// VecF e: NilF at length 0, ConsF e (f n) at length n + 1.

struct NilF {
  friend bool operator==(const NilF&, const NilF&) = default;
};

template <class E, class R>
struct ConsF {
  E head;
  R tail;
  friend bool operator==(const ConsF&, const ConsF&) = default;
};

template <class E>
struct VecH {
  using index_type = std::size_t;

  template <class R>
  using layer = std::variant<NilF, ConsF<E, R>>;

  template <class R>
  static bool admits(index_type n, const layer<R>& l) {
    return std::holds_alternative<NilF>(l) ? n == 0 : n > 0;
  }

  template <class Phi, class R>
  static auto hmap(Phi&& phi, index_type n, const layer<R>& l)
      -> layer<std::decay_t<std::invoke_result_t<Phi&, const index_type&, const R&>>> {
    using R2 = std::decay_t<std::invoke_result_t<Phi&, const index_type&, const R&>>;
    if (const auto* c = std::get_if<ConsF<E, R>>(&l)) return ConsF<E, R2>{c->head, phi(n - 1, c->tail)};
    return NilF{};
  }
};

template <class E>
using IVec = IMu<VecH<E>>;

template <class E>
IVec<E> ivec(const std::vector<E>& xs) {
  IVec<E> out(0, NilF{});
  for (std::size_t i = xs.size(); i-- > 0;) out = IVec<E>(out.index() + 1, ConsF<E, IVec<E>>{xs[i], out});
  return out;
}

template <class E>
std::vector<E> ivec_items(const IVec<E>& v) {
  std::vector<E> out;
  const IVec<E>* cur = &v;
  while (const auto* c = std::get_if<ConsF<E, IVec<E>>>(&cur->layer())) {
    out.push_back(c->head);
    cur = &c->tail;
  }
  return out;
}

/// vmap f = icata alg, alg NilF = In NilF, alg (ConsF a bs) = In (ConsF (f a) bs)
template <class E, class F>
auto vmap(F f, const IVec<E>& v) {
  using B = std::decay_t<std::invoke_result_t<F&, const E&>>;
  return icata<IVec<B>>(
      [&f](std::size_t n, const HLayer<VecH<E>, IVec<B>>& l) {
        if (const auto* c = std::get_if<ConsF<E, IVec<B>>>(&l)) return IVec<B>(n, ConsF<B, IVec<B>>{f(c->head), c->tail});
        return IVec<B>(n, NilF{});
      },
      v);
}

/// Head of a vector whose runtime witness says it is non-empty.
template <class E>
const E& safe_head(const IVec<E>& v) {
  const auto* c = std::get_if<ConsF<E, IVec<E>>>(&v.layer());
  if (!c) throw IndexWitnessError("safe_head needs a vector at a successor index");
  return c->head;
}

/// Length in the type: a phantom wrapper whose operations can only build
/// well-indexed vectors, so safe_head on length 0 does not compile.
template <class E, std::size_t N>
class StaticVec {
 public:
  static constexpr std::size_t length = N;

  explicit StaticVec(IVec<E> v) : v_(std::move(v)) {
    if (v_.index() != N) throw IndexWitnessError("vector length does not match its static index");
  }
  const IVec<E>& get() const { return v_; }

 private:
  IVec<E> v_;
};

template <class E>
StaticVec<E, 0> vnil() {
  return StaticVec<E, 0>(IVec<E>(0, NilF{}));
}

template <class E, std::size_t N>
StaticVec<E, N + 1> vcons(E head, const StaticVec<E, N>& tail) {
  return StaticVec<E, N + 1>(IVec<E>(N + 1, ConsF<E, IVec<E>>{std::move(head), tail.get()}));
}

template <class E, std::size_t N, class F>
auto vmap(F f, const StaticVec<E, N>& v) {
  using B = std::decay_t<std::invoke_result_t<F&, const E&>>;
  return StaticVec<B, N>(vmap(std::move(f), v.get()));
}

template <class E, std::size_t N>
  requires(N > 0)
const E& safe_head(const StaticVec<E, N>& v) {
  return safe_head(v.get());
}

// ---------------------------------------------------------------------------
// LambdaF: de Bruijn terms. The index k counts the variables in scope, so a
// closed term lives at index 0. Var j needs j < k, and Abs moves its body to
// k + 1 (the Maybe a of the typed presentation: Nothing is variable 0).

struct Var {
  std::size_t index;
  friend bool operator==(const Var&, const Var&) = default;
};

template <class R>
struct App {
  R fn;
  R arg;
  friend bool operator==(const App&, const App&) = default;
};

template <class R>
struct Abs {
  R body;
  friend bool operator==(const Abs&, const Abs&) = default;
};

struct LambdaH {
  using index_type = std::size_t;

  template <class R>
  using layer = std::variant<Var, App<R>, Abs<R>>;

  template <class R>
  static bool admits(index_type k, const layer<R>& l) {
    if (const auto* v = std::get_if<Var>(&l)) return v->index < k;
    return true;
  }

  template <class Phi, class R>
  static auto hmap(Phi&& phi, index_type k, const layer<R>& l)
      -> layer<std::decay_t<std::invoke_result_t<Phi&, const index_type&, const R&>>> {
    using R2 = std::decay_t<std::invoke_result_t<Phi&, const index_type&, const R&>>;
    if (const auto* v = std::get_if<Var>(&l)) return *v;
    if (const auto* a = std::get_if<App<R>>(&l)) {
      auto fn = phi(k, a->fn);
      auto arg = phi(k, a->arg);
      return App<R2>{std::move(fn), std::move(arg)};
    }
    return Abs<R2>{phi(k + 1, std::get<Abs<R>>(l).body)};
  }
};

using Lambda = IMu<LambdaH>;

inline Lambda lam_var(std::size_t scope, std::size_t j) { return Lambda(scope, Var{j}); }
inline Lambda lam_app(const Lambda& f, const Lambda& x) { return Lambda(f.index(), App<Lambda>{f, x}); }
inline Lambda lam_abs(const Lambda& body) {
  if (body.index() == 0) throw IndexWitnessError("an abstraction body needs at least one variable in scope");
  return Lambda(body.index() - 1, Abs<Lambda>{body});
}

/// size = icata alg into K Integer.
inline long lambda_size(const Lambda& t) {
  return icata<Konst<long>>(
      [](std::size_t, const HLayer<LambdaH, long>& l) -> long {
        return match(
            l, [](const Var&) { return 1L; }, [](const App<long>& a) { return a.fn + a.arg + 1; },
            [](const Abs<long>& a) { return a.body + 1; });
      },
      t);
}

// ---------------------------------------------------------------------------
// RListF: random-access lists. At index k the element type is a perfect
// binary tree of depth k (2^k leaves, stored left to right), and both
// recursive positions move to k + 1.

template <class E>
using Perfect = std::vector<E>;

struct NullF {
  friend bool operator==(const NullF&, const NullF&) = default;
};

template <class R>
struct ZeroF {
  R rest;
};

template <class E, class R>
struct OneF {
  Perfect<E> item;
  R rest;
};

template <class E>
struct RListH {
  using index_type = std::size_t;

  template <class R>
  using layer = std::variant<NullF, ZeroF<R>, OneF<E, R>>;

  template <class R>
  static bool admits(index_type k, const layer<R>& l) {
    if (const auto* one = std::get_if<OneF<E, R>>(&l)) return k < 64 && one->item.size() == (std::size_t{1} << k);
    return true;
  }

  template <class Phi, class R>
  static auto hmap(Phi&& phi, index_type k, const layer<R>& l)
      -> layer<std::decay_t<std::invoke_result_t<Phi&, const index_type&, const R&>>> {
    using R2 = std::decay_t<std::invoke_result_t<Phi&, const index_type&, const R&>>;
    if (const auto* z = std::get_if<ZeroF<R>>(&l)) return ZeroF<R2>{phi(k + 1, z->rest)};
    if (const auto* one = std::get_if<OneF<E, R>>(&l)) return OneF<E, R2>{one->item, phi(k + 1, one->rest)};
    return NullF{};
  }
};

template <class E>
using RList = IMu<RListH<E>>;

/// fork k (a, b) = k a + k b, with the pair stored as the two halves.
template <class R, class E>
std::function<R(const Perfect<E>&)> fork(std::function<R(const Perfect<E>&)> k) {
  return [k = std::move(k)](const Perfect<E>& pair) {
    auto mid = pair.begin() + static_cast<std::ptrdiff_t>(pair.size() / 2);
    return k(Perfect<E>(pair.begin(), mid)) + k(Perfect<E>(mid, pair.end()));
  };
}

/// sumRList' x = runCont (icata sum x) id
template <class E>
E sum_rlist(const RList<E>& xs) {
  using K = std::function<E(const Perfect<E>&)>;
  using C = Cont<E, Perfect<E>>;
  C h = icata<C>(
      [](std::size_t, const HLayer<RListH<E>, C>& l) -> C {
        if (const auto* z = std::get_if<ZeroF<C>>(&l))
          return [s = z->rest](const K& k) { return s(fork<E, E>(k)); };
        if (const auto* one = std::get_if<OneF<E, C>>(&l))
          return [a = one->item, s = one->rest](const K& k) { return k(a) + s(fork<E, E>(k)); };
        return [](const K&) { return E{}; };
      },
      xs);
  return h([](const Perfect<E>& leaf) { return leaf.front(); });
}

}  // namespace schemata
