#pragma once

// Functor signatures and their two fixed points.
//
// A signature is a tag type `Sig` exposing
//
//     template <class X> using layer = ...;          // one layer, X at recursive positions
//     template <class F, class X>
//     static layer<R> fmap(F&& f, const layer<X>&);  // R = invoke result of f
//
// fmap must touch recursive positions only. Unless the signature declares
// `static constexpr bool lazy_positions = true`, fmap calls `f` exactly once
// per recursive position, in a fixed left-to-right order, before returning.
// The generic machinery (iterative folds, equality, destruction) relies on
// that order to enumerate children. Signatures whose positions sit under a
// function arrow (ProgF's Get) are lazy: fmap composes instead of calling.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace schemata {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

template <class V, class... Fs>
decltype(auto) match(V&& v, Fs&&... fs) {
  return std::visit(overloaded{std::forward<Fs>(fs)...}, std::forward<V>(v));
}

struct Unit {
  friend bool operator==(Unit, Unit) = default;
};

class SchemeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FuelExhausted : public SchemeError {
 public:
  explicit FuelExhausted(std::uint64_t steps)
      : SchemeError("fuel exhausted after " + std::to_string(steps) + " steps"),
        steps_(steps) {}

  std::uint64_t steps() const noexcept { return steps_; }

 private:
  std::uint64_t steps_;
};

/// Budget of coalgebra expansions for operations that may not terminate.
class Fuel {
 public:
  static constexpr std::uint64_t kDefault = 1'000'000;

  constexpr Fuel() = default;
  constexpr explicit Fuel(std::uint64_t budget) : budget_(budget), remaining_(budget) {}

  static constexpr Fuel unlimited() { return Fuel(std::numeric_limits<std::uint64_t>::max()); }

  /// Spends one expansion; throws FuelExhausted once the budget is gone.
  void consume() {
    if (remaining_ == 0) throw FuelExhausted(budget_);
    --remaining_;
  }

  constexpr std::uint64_t budget() const noexcept { return budget_; }
  constexpr std::uint64_t remaining() const noexcept { return remaining_; }
  constexpr std::uint64_t used() const noexcept { return budget_ - remaining_; }

 private:
  std::uint64_t budget_ = kDefault;
  std::uint64_t remaining_ = kDefault;
};

template <class Sig, class X>
using Layer = typename Sig::template layer<X>;

template <class Sig>
constexpr bool has_lazy_positions() {
  if constexpr (requires { Sig::lazy_positions; })
    return Sig::lazy_positions;
  else
    return false;
}

namespace detail {

struct Probe {
  long operator()(const int& x) const { return x; }
};

// Carrier deduction: the result type of a non-generic callable.
struct Deduce {};

template <class F>
struct callable_result;

template <class R, class... Args>
struct callable_result<R (*)(Args...)> {
  using type = R;
};

template <class F>
  requires requires { &F::operator(); }
struct callable_result<F> : callable_result<decltype(&F::operator())> {};

template <class R, class C, class... Args>
struct callable_result<R (C::*)(Args...) const> {
  using type = R;
};
template <class R, class C, class... Args>
struct callable_result<R (C::*)(Args...)> {
  using type = R;
};
template <class R, class C, class... Args>
struct callable_result<R (C::*)(Args...) const noexcept> {
  using type = R;
};

template <class Explicit, class F>
struct carrier {
  using type = Explicit;
};
template <class F>
struct carrier<Deduce, F> {
  using type = std::decay_t<typename callable_result<std::decay_t<F>>::type>;
};

template <class Explicit, class F>
using carrier_t = typename carrier<Explicit, F>::type;

}  // namespace detail

template <class Sig>
concept FunctorSig = requires(const Layer<Sig, int>& l) {
  { Sig::fmap(detail::Probe{}, l) } -> std::same_as<Layer<Sig, long>>;
};

template <class Sig, class A>
using Algebra = std::function<A(const Layer<Sig, A>&)>;

template <class Sig, class S>
using Coalgebra = std::function<Layer<Sig, S>(const S&)>;

/// Replaces every recursive position by Unit, keeping payloads.
template <class Sig, class X>
Layer<Sig, Unit> shape(const Layer<Sig, X>& layer) {
  return Sig::fmap([](const X&) { return Unit{}; }, layer);
}

/// Recursive positions of an eager layer, in fmap order.
template <class Sig, class X>
std::vector<X> children(const Layer<Sig, X>& layer) {
  static_assert(!has_lazy_positions<Sig>(), "children() needs eager positions");
  std::vector<X> out;
  Sig::fmap(
      [&out](const X& x) {
        out.push_back(x);
        return Unit{};
      },
      layer);
  return out;
}

// ---------------------------------------------------------------------------
// Mu: finite inductive data.

template <class Sig>
class Mu {
 public:
  using signature = Sig;
  using layer_type = Layer<Sig, Mu>;

  explicit Mu(layer_type layer) : node_(std::make_shared<const layer_type>(std::move(layer))) {}

  Mu(const Mu&) = default;
  Mu(Mu&&) noexcept = default;
  Mu& operator=(const Mu& other) {
    Mu copy(other);
    return *this = std::move(copy);
  }
  Mu& operator=(Mu&& other) noexcept {
    Mu old(std::move(*this));
    node_ = std::move(other.node_);
    return *this;
  }
  ~Mu();

  const layer_type& layer() const { return *node_; }
  bool same_node(const Mu& other) const noexcept { return node_ == other.node_; }

 private:
  std::shared_ptr<const layer_type> node_;
};

// Unlinks long chains one layer at a time so dropping a deep value does not
// recurse through nested shared_ptr destructors.
template <class Sig>
Mu<Sig>::~Mu() {
  if constexpr (!has_lazy_positions<Sig>()) {
    if (!node_ || node_.use_count() != 1) return;
    std::vector<std::shared_ptr<const layer_type>> pending;
    pending.push_back(std::move(node_));
    while (!pending.empty()) {
      auto node = std::move(pending.back());
      pending.pop_back();
      if (node.use_count() != 1) continue;
      Sig::fmap(
          [&pending](const Mu& child) {
            if (child.node_) pending.push_back(child.node_);
            return Unit{};
          },
          *node);
    }
  }
}

template <class Sig>
Mu<Sig> construct(Layer<Sig, Mu<Sig>> layer) {
  return Mu<Sig>(std::move(layer));
}

template <class Sig>
const Layer<Sig, Mu<Sig>>& destructure(const Mu<Sig>& m) {
  return m.layer();
}

/// Structural equality, iterative so that long spines compare in constant stack.
template <class Sig>
bool operator==(const Mu<Sig>& a, const Mu<Sig>& b) {
  static_assert(!has_lazy_positions<Sig>(), "no structural equality for function-carrying layers");
  std::vector<std::pair<Mu<Sig>, Mu<Sig>>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = std::move(work.back());
    work.pop_back();
    if (x.same_node(y)) continue;
    if (!(shape<Sig>(x.layer()) == shape<Sig>(y.layer()))) return false;
    auto xs = children<Sig>(x.layer());
    auto ys = children<Sig>(y.layer());
    for (std::size_t i = 0; i < xs.size(); ++i) work.emplace_back(std::move(xs[i]), std::move(ys[i]));
  }
  return true;
}

/// Number of layers in a finite value.
template <class Sig>
std::size_t node_count(const Mu<Sig>& m) {
  std::size_t n = 0;
  std::vector<Mu<Sig>> work{m};
  while (!work.empty()) {
    Mu<Sig> x = std::move(work.back());
    work.pop_back();
    ++n;
    for (auto& c : children<Sig>(x.layer())) work.push_back(std::move(c));
  }
  return n;
}

/// Longest root-to-leaf path counted in layers (a lone leaf layer has depth 1).
template <class Sig>
std::size_t layer_depth(const Mu<Sig>& m) {
  std::size_t best = 0;
  std::vector<std::pair<Mu<Sig>, std::size_t>> work{{m, 1}};
  while (!work.empty()) {
    auto [x, d] = std::move(work.back());
    work.pop_back();
    best = std::max(best, d);
    for (auto& c : children<Sig>(x.layer())) work.emplace_back(std::move(c), d + 1);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Nu: codata as a packaged seed and coalgebra, observed one layer at a time.

template <class Sig>
class Nu {
 public:
  using signature = Sig;
  using layer_type = Layer<Sig, Nu>;

  /// Anything that can produce the next layer. New unfolding disciplines
  /// (apomorphisms, for instance) plug in here.
  struct Source {
    virtual ~Source() = default;
    virtual layer_type observe() const = 0;
  };

  explicit Nu(std::shared_ptr<const Source> source) : source_(std::move(source)) {}

  template <class S>
  static Nu pack(S seed, Coalgebra<Sig, S> step) {
    return Nu(std::make_shared<const Unfold<S>>(
        std::move(seed), std::make_shared<const Coalgebra<Sig, S>>(std::move(step))));
  }

  /// The final algebra's inverse direction: a fixed outermost layer.
  static Nu wrap(layer_type layer) {
    return Nu(std::make_shared<const Fixed>(std::move(layer)));
  }

  layer_type observe() const { return source_->observe(); }

 private:
  template <class S>
  struct Unfold final : Source {
    Unfold(S s, std::shared_ptr<const Coalgebra<Sig, S>> st)
        : seed(std::move(s)), step(std::move(st)) {}

    layer_type observe() const override {
      return Sig::fmap(
          [step = step](const S& next) {
            return Nu(std::make_shared<const Unfold>(next, step));
          },
          (*step)(seed));
    }

    S seed;
    std::shared_ptr<const Coalgebra<Sig, S>> step;
  };

  struct Fixed final : Source {
    explicit Fixed(layer_type l) : layer(std::move(l)) {}
    layer_type observe() const override { return layer; }
    layer_type layer;
  };

  std::shared_ptr<const Source> source_;
};

template <class Sig, class S, class Coalg>
Nu<Sig> pack(S seed, Coalg&& step) {
  return Nu<Sig>::template pack<S>(std::move(seed), Coalgebra<Sig, S>(std::forward<Coalg>(step)));
}

template <class Sig>
Layer<Sig, Nu<Sig>> observe(const Nu<Sig>& n) {
  return n.observe();
}

/// Compares two codata values on every path down to `depth` layers.
template <class Sig>
bool bounded_equal(const Nu<Sig>& a, const Nu<Sig>& b, std::size_t depth) {
  std::vector<std::tuple<Nu<Sig>, Nu<Sig>, std::size_t>> work{{a, b, depth}};
  while (!work.empty()) {
    auto [x, y, d] = std::move(work.back());
    work.pop_back();
    if (d == 0) continue;
    auto lx = x.observe();
    auto ly = y.observe();
    if (!(shape<Sig>(lx) == shape<Sig>(ly))) return false;
    auto xs = children<Sig>(lx);
    auto ys = children<Sig>(ly);
    for (std::size_t i = 0; i < xs.size(); ++i) work.emplace_back(std::move(xs[i]), std::move(ys[i]), d - 1);
  }
  return true;
}

// ---------------------------------------------------------------------------
// The refold engine shared by every fold and hylomorphism.

namespace detail {

// Expands the call tree breadth-first into a flat frame table (children
// always get larger indices), then folds the table from the back. No host
// recursion, so depth is bounded only by memory. When `WithSeeds` is set the
// algebra receives (substructure seed, result) pairs, as paramorphisms need.
template <class A, class Sig, bool WithSeeds = false, class S, class Alg, class Coalg>
A refold_eager(Alg& alg, Coalg& coalg, S seed) {
  std::vector<S> seeds;
  std::vector<Layer<Sig, std::size_t>> frames;
  seeds.push_back(std::move(seed));
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    auto layer = [&] {
      if constexpr (WithSeeds) {
        return coalg(std::as_const(seeds[i]));
      } else {
        S current = std::move(seeds[i]);
        return coalg(std::as_const(current));
      }
    }();
    frames.push_back(Sig::fmap(
        [&seeds](const S& child) {
          seeds.push_back(child);
          return seeds.size() - 1;
        },
        layer));
  }
  std::vector<std::optional<A>> results(frames.size());
  for (std::size_t i = frames.size(); i-- > 0;) {
    if constexpr (WithSeeds) {
      results[i].emplace(alg(Sig::fmap(
          [&](const std::size_t& j) { return std::pair<S, A>(std::move(seeds[j]), std::move(*results[j])); },
          frames[i])));
    } else {
      results[i].emplace(alg(Sig::fmap([&](const std::size_t& j) { return std::move(*results[j]); }, frames[i])));
    }
  }
  return std::move(*results.front());
}

// Plain recursion for signatures whose positions hide behind functions. The
// closures capture the context by value: results such as interpreters may be
// run long after the fold returns.
template <class A, class Sig, bool WithSeeds, class S, class Alg, class Coalg>
struct LazyRefold {
  std::shared_ptr<const Alg> alg;
  std::shared_ptr<const Coalg> coalg;

  A operator()(const S& seed) const {
    auto self = *this;
    if constexpr (WithSeeds) {
      return (*alg)(Sig::fmap([self](const S& s) { return std::pair<S, A>(s, self(s)); }, (*coalg)(seed)));
    } else {
      return (*alg)(Sig::fmap([self](const S& s) { return self(s); }, (*coalg)(seed)));
    }
  }
};

template <class A, class Sig, bool WithSeeds = false, class S, class Alg, class Coalg>
A refold(Alg alg, Coalg coalg, S seed) {
  if constexpr (has_lazy_positions<Sig>()) {
    LazyRefold<A, Sig, WithSeeds, S, Alg, Coalg> go{std::make_shared<const Alg>(std::move(alg)),
                                                    std::make_shared<const Coalg>(std::move(coalg))};
    return go(seed);
  } else {
    return refold_eager<A, Sig, WithSeeds>(alg, coalg, std::move(seed));
  }
}

}  // namespace detail

}  // namespace schemata
