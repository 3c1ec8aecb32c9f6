#pragma once

// Catamorphism, anamorphism, hylomorphism and metamorphism.
//
// Carrier types are deduced from the algebra's return type when the algebra
// is a non-generic callable; pass the carrier explicitly otherwise, e.g.
// `cata<int>(alg, xs)` or `hylo<Sig, int>(alg, coalg, seed)`.

#include <memory>
#include <utility>

#include "schemata/fix.hpp"

namespace schemata {

/// The unique x with x . In = alg . fmap x.
template <class A = detail::Deduce, class Sig, class Alg>
auto cata(Alg alg, const Mu<Sig>& m) -> detail::carrier_t<A, Alg> {
  using R = detail::carrier_t<A, Alg>;
  auto out = [](const Mu<Sig>& x) -> const Layer<Sig, Mu<Sig>>& { return x.layer(); };
  return detail::refold<R, Sig>(std::move(alg), out, m);
}

/// The unique x with out . x = fmap x . coalg; observation happens on demand.
template <class Sig, class S, class Coalg>
Nu<Sig> ana(Coalg&& coalg, S seed) {
  return pack<Sig>(std::move(seed), std::forward<Coalg>(coalg));
}

/// Refold: alg . fmap (hylo alg coalg) . coalg. Every coalgebra step spends
/// one unit of fuel, so a non-recursive coalgebra ends in FuelExhausted.
template <class Sig, class A = detail::Deduce, class Alg, class Coalg, class S>
auto hylo(Alg alg, Coalg coalg, S seed, Fuel fuel = Fuel{}) -> detail::carrier_t<A, Alg> {
  using R = detail::carrier_t<A, Alg>;
  auto meter = std::make_shared<Fuel>(fuel);
  auto metered = [meter, coalg = std::move(coalg)](const S& s) {
    meter->consume();
    return coalg(s);
  };
  return detail::refold<R, Sig>(std::move(alg), std::move(metered), std::move(seed));
}

/// Casts the finite part of codata to data. Partial, hence fueled.
template <class Sig>
Mu<Sig> nu_to_mu(const Nu<Sig>& n, Fuel fuel = Fuel{}) {
  return hylo<Sig, Mu<Sig>>([](const Layer<Sig, Mu<Sig>>& l) { return Mu<Sig>(l); },
                            [](const Nu<Sig>& x) { return x.observe(); }, n, fuel);
}

/// Finite data is valid codata.
template <class Sig>
Nu<Sig> mu_to_nu(const Mu<Sig>& m) {
  return ana<Sig>([](const Mu<Sig>& x) { return x.layer(); }, m);
}

/// Fold then unfold: ana coalg . cata alg. The fold finishes before the
/// unfold starts.
template <class GSig, class A = detail::Deduce, class Sig, class Coalg, class Alg>
Nu<GSig> meta(Coalg&& coalg, Alg alg, const Mu<Sig>& m) {
  return ana<GSig>(std::forward<Coalg>(coalg), cata<A>(std::move(alg), m));
}

/// cata alg = hylo alg in°.
template <class A = detail::Deduce, class Sig, class Alg>
auto cata_via_hylo(Alg alg, const Mu<Sig>& m) -> detail::carrier_t<A, Alg> {
  return hylo<Sig, A>(
      std::move(alg), [](const Mu<Sig>& x) { return x.layer(); }, m, Fuel(node_count(m)));
}

/// ana coalg = hylo Out° coalg. A strict refold builds the whole structure,
/// so this only covers seeds with a finite unfolding, within `fuel`.
template <class Sig, class S, class Coalg>
Nu<Sig> ana_via_hylo(Coalg coalg, S seed, Fuel fuel = Fuel{}) {
  return hylo<Sig, Nu<Sig>>([](const Layer<Sig, Nu<Sig>>& l) { return Nu<Sig>::wrap(l); }, std::move(coalg),
                            std::move(seed), fuel);
}

}  // namespace schemata
