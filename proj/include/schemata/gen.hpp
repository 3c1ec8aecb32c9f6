#pragma once

// Seeded case generators. A generator draws a value from an engine and a
// size bound; the same seed always yields the same sequence.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "schemata/functors.hpp"

namespace schemata {

using Rng = std::mt19937_64;

template <class T>
using Gen = std::function<T(Rng&, std::size_t size)>;

/// Uniform in [lo, hi] by reduction of the raw engine output, so sequences
/// do not depend on the standard library's distribution algorithms.
inline std::int64_t draw_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

template <class T>
std::vector<T> sample(const Gen<T>& gen, std::uint64_t seed, std::size_t count, std::size_t size) {
  Rng rng(seed);
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen(rng, size));
  return out;
}

inline Gen<int> gen_int(int lo, int hi) {
  return [lo, hi](Rng& rng, std::size_t) { return static_cast<int>(draw_int(rng, lo, hi)); };
}

/// Vectors of length 0..size.
template <class T>
Gen<std::vector<T>> gen_vector(Gen<T> elem) {
  return [elem](Rng& rng, std::size_t size) {
    auto n = static_cast<std::size_t>(draw_int(rng, 0, static_cast<std::int64_t>(size)));
    std::vector<T> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(elem(rng, size));
    return out;
  };
}

template <class T>
Gen<List<T>> gen_list(Gen<T> elem) {
  auto vec = gen_vector(std::move(elem));
  return [vec](Rng& rng, std::size_t size) { return conv_mu(vec(rng, size)); };
}

/// Trees of depth at most `size` layers below the root Empty leaves.
template <class E>
Gen<Tree<E>> gen_tree(Gen<E> label) {
  return [label](Rng& rng, std::size_t size) {
    std::function<Tree<E>(std::size_t)> go = [&](std::size_t depth) -> Tree<E> {
      if (depth == 0 || draw_int(rng, 0, 3) == 0) return empty_tree<E>();
      auto left = go(depth - 1);
      auto e = label(rng, size);
      auto right = go(depth - 1);
      return node(std::move(left), std::move(e), std::move(right));
    };
    return go(size);
  };
}

inline Gen<Nat> gen_nat() {
  return [](Rng& rng, std::size_t size) { return nat(static_cast<std::uint64_t>(draw_int(rng, 0, static_cast<std::int64_t>(size)))); };
}

/// One ListF layer whose recursive position is drawn from `pos`.
template <class A, class X>
Gen<ListF<A, X>> gen_list_layer(Gen<A> head, Gen<X> pos) {
  return [head, pos](Rng& rng, std::size_t size) -> ListF<A, X> {
    if (draw_int(rng, 0, 4) == 0) return Nil{};
    auto h = head(rng, size);
    return Cons<A, X>{std::move(h), pos(rng, size)};
  };
}

template <class E, class X>
Gen<TreeF<E, X>> gen_tree_layer(Gen<E> label, Gen<X> pos) {
  return [label, pos](Rng& rng, std::size_t size) -> TreeF<E, X> {
    if (draw_int(rng, 0, 4) == 0) return Empty{};
    auto l = pos(rng, size);
    auto e = label(rng, size);
    auto r = pos(rng, size);
    return Node<E, X>{std::move(l), std::move(e), std::move(r)};
  };
}

template <class X>
Gen<NatF<X>> gen_nat_layer(Gen<X> pos) {
  return [pos](Rng& rng, std::size_t size) -> NatF<X> {
    if (draw_int(rng, 0, 3) == 0) return Zero{};
    return Succ<X>{pos(rng, size)};
  };
}

}  // namespace schemata
