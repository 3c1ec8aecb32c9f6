#pragma once

// Executable checkers for the calculational laws. Every checker samples its
// cases from a seeded generator, so a report is reproducible from (seed,
// cases, size). Laws are certified on the tested cases only.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "schemata/fix.hpp"
#include "schemata/functors.hpp"
#include "schemata/gen.hpp"
#include "schemata/schemes.hpp"

namespace schemata {

// ---------------------------------------------------------------------------
// Rendering values for counterexamples.

template <class T>
std::string describe(const T& x);

inline std::string describe_alt(const Nil&) { return "Nil"; }
inline std::string describe_alt(const Empty&) { return "Empty"; }
inline std::string describe_alt(const Zero&) { return "Zero"; }
template <class A, class X>
std::string describe_alt(const Cons<A, X>& c) {
  return "Cons(" + describe(c.head) + ", " + describe(c.tail) + ")";
}
template <class E, class X>
std::string describe_alt(const Node<E, X>& n) {
  return "Node(" + describe(n.left) + ", " + describe(n.label) + ", " + describe(n.right) + ")";
}
template <class X>
std::string describe_alt(const Succ<X>& s) {
  return "Succ(" + describe(s.pred) + ")";
}
template <class A>
std::string describe_alt(const prog::Ret<A>& r) {
  return "Ret(" + describe(r.value) + ")";
}
template <class S, class X>
std::string describe_alt(const prog::Put<S, X>& p) {
  return "Put(" + describe(p.addr) + ", " + describe(p.value) + ", " + describe(p.next) + ")";
}
template <class S, class X>
std::string describe_alt(const prog::Get<S, X>& g) {
  return "Get(" + describe(g.addr) + ", <fn>)";
}

namespace detail {

template <class T>
struct is_vector : std::false_type {};
template <class T, class A>
struct is_vector<std::vector<T, A>> : std::true_type {};

template <class T>
struct is_pair : std::false_type {};
template <class A, class B>
struct is_pair<std::pair<A, B>> : std::true_type {};

template <class T>
struct is_variant : std::false_type {};
template <class... Ts>
struct is_variant<std::variant<Ts...>> : std::true_type {};

template <class T>
struct is_optional : std::false_type {};
template <class T>
struct is_optional<std::optional<T>> : std::true_type {};

}  // namespace detail

template <class T>
std::string describe(const T& x) {
  if constexpr (std::is_same_v<T, bool>) {
    return x ? "true" : "false";
  } else if constexpr (std::is_same_v<T, Unit>) {
    return "()";
  } else if constexpr (std::is_same_v<T, std::string>) {
    return "\"" + x + "\"";
  } else if constexpr (std::is_same_v<T, char>) {
    return std::string("'") + x + "'";
  } else if constexpr (std::is_arithmetic_v<T>) {
    std::ostringstream os;
    os << x;
    return os.str();
  } else if constexpr (requires { show(x); }) {
    return show(x);
  } else if constexpr (detail::is_vector<T>::value) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + describe(x[i]);
    return out + "]";
  } else if constexpr (detail::is_pair<T>::value) {
    return "(" + describe(x.first) + ", " + describe(x.second) + ")";
  } else if constexpr (detail::is_optional<T>::value) {
    return x ? "Just " + describe(*x) : std::string("Nothing");
  } else if constexpr (detail::is_variant<T>::value) {
    return std::visit([](const auto& alt) { return describe(alt); }, x);
  } else if constexpr (requires { describe_alt(x); }) {
    return describe_alt(x);
  } else {
    return "<value>";
  }
}

// ---------------------------------------------------------------------------
// Reports.

struct Counterexample {
  std::string input;
  std::string lhs;
  std::string rhs;
  /// Re-evaluates both sides; true when they still disagree.
  std::function<bool()> refails;
};

struct LawReport {
  explicit LawReport(std::string law_name = {}) : name(std::move(law_name)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t fuel_exhausted = 0;
  /// Which part of a staged law failed ("premise", "conclusion", ...).
  std::string stage;
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }

  /// `<name>: PASS (<n> cases)` or `<name>: FAIL <counterexample>`.
  std::string summary() const {
    std::string out = name + ": ";
    if (passed()) {
      out += "PASS (" + std::to_string(cases) + " cases";
      if (fuel_exhausted > 0) out += ", " + std::to_string(fuel_exhausted) + " fuel-exhausted";
      return out + ")";
    }
    out += "FAIL ";
    if (!stage.empty()) out += "[" + stage + "] ";
    return out + "input=" + counterexample->input + " lhs=" + counterexample->lhs + " rhs=" + counterexample->rhs;
  }
};

/// Sizes and counts shared by the checkers.
struct CheckConfig {
  std::uint64_t seed = 42;
  std::size_t cases = 500;
  std::size_t size = 20;
  Fuel fuel = Fuel(10'000);
};

namespace detail {

template <class T>
struct DefaultEq {
  bool operator()(const T& a, const T& b) const { return a == b; }
};

// Runs `lhs` and `rhs` on each input; stops at the first disagreement.
template <class In, class Lhs, class Rhs, class Eq>
void compare_sides(LawReport& report, const std::vector<In>& inputs, Lhs lhs, Rhs rhs, Eq eq) {
  for (const auto& x : inputs) {
    try {
      auto l = lhs(x);
      auto r = rhs(x);
      ++report.cases;
      if (!eq(l, r)) {
        report.counterexample = Counterexample{describe(x), describe(l), describe(r),
                                               [x, lhs, rhs, eq] { return !eq(lhs(x), rhs(x)); }};
        return;
      }
    } catch (const FuelExhausted&) {
      ++report.fuel_exhausted;
    }
  }
}

}  // namespace detail

/// Identity and composition laws of fmap on generated layers.
template <class Sig, class Eq = detail::DefaultEq<Layer<Sig, long>>>
LawReport check_functor_laws(std::string name, const Gen<Layer<Sig, long>>& layers, const CheckConfig& cfg,
                             Eq eq = {}) {
  LawReport report{std::move(name)};
  auto inputs = sample(layers, cfg.seed, cfg.cases, cfg.size);
  auto f = [](const long& x) { return 2 * x + 1; };
  auto g = [](const long& x) { return x * x - 3; };
  auto id = [](const long& x) { return x; };
  detail::compare_sides(
      report, inputs, [id](const Layer<Sig, long>& l) { return Sig::fmap(id, l); },
      [](const Layer<Sig, long>& l) { return l; }, eq);
  if (!report.passed()) {
    report.stage = "identity";
    return report;
  }
  LawReport composition{report.name};
  detail::compare_sides(
      composition, inputs, [f, g](const Layer<Sig, long>& l) { return Sig::fmap([&](const long& x) { return g(f(x)); }, l); },
      [f, g](const Layer<Sig, long>& l) { return Sig::fmap(g, Sig::fmap(f, l)); }, eq);
  composition.cases += report.cases;
  if (!composition.passed()) composition.stage = "composition";
  return composition;
}

/// The defining square of cata: candidate . In = alg . fmap candidate.
template <class Sig, class A, class Alg, class Candidate, class Eq = detail::DefaultEq<A>>
LawReport check_cata_universal(std::string name, Alg alg, Candidate candidate,
                               const Gen<Layer<Sig, Mu<Sig>>>& layers, const CheckConfig& cfg, Eq eq = {}) {
  LawReport report{std::move(name)};
  auto inputs = sample(layers, cfg.seed, cfg.cases, cfg.size);
  detail::compare_sides(
      report, inputs, [candidate](const Layer<Sig, Mu<Sig>>& x) -> A { return candidate(Mu<Sig>(x)); },
      [alg, candidate](const Layer<Sig, Mu<Sig>>& x) -> A { return alg(Sig::fmap(candidate, x)); }, eq);
  return report;
}

namespace detail {

template <class Sig>
bool layers_agree(const Layer<Sig, Nu<Sig>>& a, const Layer<Sig, Nu<Sig>>& b, std::size_t depth) {
  if (!(shape<Sig>(a) == shape<Sig>(b))) return false;
  if (depth == 0) return true;
  auto xs = children<Sig>(a);
  auto ys = children<Sig>(b);
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!bounded_equal(xs[i], ys[i], depth)) return false;
  return true;
}

template <class Sig>
std::string describe_prefix(const Nu<Sig>& n, std::size_t depth) {
  if constexpr (requires { show(nu_to_mu(n, Fuel(depth))); }) {
    try {
      return show(nu_to_mu(n, Fuel(depth)));
    } catch (const FuelExhausted&) {
      return "<deeper than " + std::to_string(depth) + " layers>";
    }
  } else {
    return "<codata>";
  }
}

}  // namespace detail

/// Bounded version of the ana square: out . candidate = fmap candidate . coalg,
/// comparing `depth` layers below the observed one.
template <class Sig, class S, class Coalg, class Candidate>
LawReport check_ana_universal(std::string name, Coalg coalg, Candidate candidate, const Gen<S>& seeds,
                              std::size_t depth, const CheckConfig& cfg) {
  LawReport report{std::move(name)};
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    S s = seeds(rng, cfg.size);
    auto lhs = candidate(s).observe();
    auto rhs = Sig::fmap(candidate, coalg(s));
    ++report.cases;
    if (!detail::layers_agree<Sig>(lhs, rhs, depth)) {
      report.counterexample =
          Counterexample{describe(s), detail::describe_prefix(Nu<Sig>::wrap(lhs), depth + 1),
                         detail::describe_prefix(Nu<Sig>::wrap(rhs), depth + 1), [coalg, candidate, s, depth] {
                           return !detail::layers_agree<Sig>(candidate(s).observe(), Sig::fmap(candidate, coalg(s)),
                                                             depth);
                         }};
      return report;
    }
  }
  return report;
}

/// HyloComp: hylo a c = a . fmap (hylo a c) . c. Seeds whose call tree does
/// not finish within the fuel are counted separately.
template <class Sig, class A, class S, class Alg, class Coalg, class Eq = detail::DefaultEq<A>>
LawReport check_computation(std::string name, Alg alg, Coalg coalg, const Gen<S>& seeds, const CheckConfig& cfg,
                            Eq eq = {}) {
  LawReport report{std::move(name)};
  auto inputs = sample(seeds, cfg.seed, cfg.cases, cfg.size);
  Fuel fuel = cfg.fuel;
  auto h = [alg, coalg, fuel](const S& s) -> A { return hylo<Sig, A>(alg, coalg, s, fuel); };
  detail::compare_sides(
      report, inputs, h, [alg, coalg, h](const S& s) -> A { return alg(Sig::fmap(h, coalg(s))); }, eq);
  return report;
}

/// HyloRefl: id = a . c <=> id = hylo a c, checked on sampled carriers. The
/// premise a . c = id is tested first; only when it holds everywhere is the
/// conclusion hylo a c = id tested.
template <class Sig, class T, class Alg, class Coalg, class Eq = detail::DefaultEq<T>>
LawReport check_reflection(std::string name, Alg alg, Coalg coalg, const Gen<T>& carriers, const CheckConfig& cfg,
                           Eq eq = {}) {
  LawReport report{std::move(name)};
  auto inputs = sample(carriers, cfg.seed, cfg.cases, cfg.size);
  auto id = [](const T& x) { return x; };
  detail::compare_sides(
      report, inputs, [alg, coalg](const T& x) -> T { return alg(coalg(x)); }, id, eq);
  if (!report.passed()) {
    report.stage = "premise";
    return report;
  }
  LawReport conclusion{report.name};
  Fuel fuel = cfg.fuel;
  detail::compare_sides(
      conclusion, inputs, [alg, coalg, fuel](const T& x) -> T { return hylo<Sig, T>(alg, coalg, x, fuel); }, id, eq);
  conclusion.cases += report.cases;
  if (!conclusion.passed()) conclusion.stage = "conclusion";
  return conclusion;
}

/// ana out = id, up to `depth` layers of observation.
template <class Sig>
LawReport check_ana_reflection(std::string name, const Gen<Nu<Sig>>& values, std::size_t depth,
                               const CheckConfig& cfg) {
  LawReport report{std::move(name)};
  Rng rng(cfg.seed);
  auto out = [](const Nu<Sig>& n) { return n.observe(); };
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    Nu<Sig> n = values(rng, cfg.size);
    Nu<Sig> again = ana<Sig>(out, n);
    ++report.cases;
    if (!bounded_equal(again, n, depth)) {
      report.counterexample = Counterexample{detail::describe_prefix(n, depth), detail::describe_prefix(again, depth),
                                             detail::describe_prefix(n, depth),
                                             [again, n, depth] { return !bounded_equal(again, n, depth); }};
      return report;
    }
  }
  return report;
}

/// HyloFusion specialised to c = in°:
///   h . cata a = cata b  <=  h . a = b . fmap h
/// The premise is tested on generated layers first; only if it holds is the
/// conclusion tested on generated structures.
template <class Sig, class A, class B, class H, class AlgA, class AlgB, class EqB = detail::DefaultEq<B>>
LawReport check_fusion(std::string name, H h, AlgA alg_a, AlgB alg_b, const Gen<Layer<Sig, A>>& layers,
                       const Gen<Mu<Sig>>& structures, const CheckConfig& cfg, EqB eq = {}) {
  LawReport report{std::move(name)};
  auto premise_inputs = sample(layers, cfg.seed, cfg.cases, cfg.size);
  detail::compare_sides(
      report, premise_inputs, [h, alg_a](const Layer<Sig, A>& l) -> B { return h(alg_a(l)); },
      [h, alg_b](const Layer<Sig, A>& l) -> B { return alg_b(Sig::fmap(h, l)); }, eq);
  if (!report.passed()) {
    report.stage = "premise";
    return report;
  }
  LawReport conclusion{report.name};
  auto inputs = sample(structures, cfg.seed + 1, cfg.cases, cfg.size);
  detail::compare_sides(
      conclusion, inputs, [h, alg_a](const Mu<Sig>& m) -> B { return h(cata<A>(alg_a, m)); },
      [alg_b](const Mu<Sig>& m) -> B { return cata<B>(alg_b, m); }, eq);
  conclusion.cases += report.cases;
  if (!conclusion.passed()) conclusion.stage = "conclusion";
  return conclusion;
}

/// HyloFusion for an arbitrary recursive coalgebra c:
///   h . hylo a c = hylo b c  <=  h . a = b . fmap h
/// Sampling the premise on generated layers says nothing about layers the
/// coalgebra never produces, so a pass here is weaker evidence than for
/// check_fusion.
template <class Sig, class A, class B, class S, class H, class AlgA, class AlgB, class Coalg,
          class EqB = detail::DefaultEq<B>>
LawReport check_hylo_fusion(std::string name, H h, AlgA alg_a, AlgB alg_b, Coalg coalg,
                            const Gen<Layer<Sig, A>>& layers, const Gen<S>& seeds, const CheckConfig& cfg,
                            EqB eq = {}) {
  LawReport report{std::move(name)};
  auto premise_inputs = sample(layers, cfg.seed, cfg.cases, cfg.size);
  detail::compare_sides(
      report, premise_inputs, [h, alg_a](const Layer<Sig, A>& l) -> B { return h(alg_a(l)); },
      [h, alg_b](const Layer<Sig, A>& l) -> B { return alg_b(Sig::fmap(h, l)); }, eq);
  if (!report.passed()) {
    report.stage = "premise";
    return report;
  }
  LawReport conclusion{report.name};
  auto inputs = sample(seeds, cfg.seed + 1, cfg.cases, cfg.size);
  Fuel fuel = cfg.fuel;
  detail::compare_sides(
      conclusion, inputs, [h, alg_a, coalg, fuel](const S& s) -> B { return h(hylo<Sig, A>(alg_a, coalg, s, fuel)); },
      [alg_b, coalg, fuel](const S& s) -> B { return hylo<Sig, B>(alg_b, coalg, s, fuel); }, eq);
  conclusion.cases += report.cases;
  if (!conclusion.passed()) conclusion.stage = "conclusion";
  return conclusion;
}

// ---------------------------------------------------------------------------
// HyloUniq on a small instance: every function from the lists over {0, 1}
// of length at most `max_length` into {0, .., carrier - 1} is enumerated, and
// the ones satisfying x = alg . fmap x . in° are counted.

using SmallListAlg = std::function<int(const ListF<int, int>&)>;

struct UniquenessSweep {
  std::size_t domain_size = 0;
  std::uint64_t functions = 0;
  std::uint64_t solutions = 0;
  /// True when the only solution is cata alg.
  bool solution_is_cata = false;
};

UniquenessSweep hylo_uniqueness_sweep(const SmallListAlg& alg, int carrier = 3, int max_length = 3);

/// The algebras swept by the law suite, each mapping into {0, 1, 2}.
std::vector<std::pair<std::string, SmallListAlg>> sweep_algebras();

// ---------------------------------------------------------------------------

/// The full suite behind the CLI `laws` command and the acceptance checks.
std::vector<LawReport> run_law_suite(std::uint64_t seed, std::size_t cases = 500);

}  // namespace schemata
