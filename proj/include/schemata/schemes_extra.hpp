#pragma once

// Paramorphism, apomorphism, zygomorphism, mutu/comutumorphisms and
// accumulations.

#include <functional>
#include <memory>
#include <utility>
#include <variant>

#include "schemata/fix.hpp"
#include "schemata/functors.hpp"
#include "schemata/schemes.hpp"

namespace schemata {

// ---------------------------------------------------------------------------
// Paramorphisms: the algebra also sees each original substructure.

template <class Sig, class A>
using ParaLayer = Layer<Sig, std::pair<Mu<Sig>, A>>;

template <class A = detail::Deduce, class Sig, class Alg>
auto para(Alg alg, const Mu<Sig>& m) -> detail::carrier_t<A, Alg> {
  using R = detail::carrier_t<A, Alg>;
  auto out = [](const Mu<Sig>& x) -> const Layer<Sig, Mu<Sig>>& { return x.layer(); };
  return detail::refold<R, Sig, true>(std::move(alg), out, m);
}

/// para alg = snd . cata ((In . fmap fst) △ alg)
template <class A = detail::Deduce, class Sig, class Alg>
auto para_via_cata(Alg alg, const Mu<Sig>& m) -> detail::carrier_t<A, Alg> {
  using R = detail::carrier_t<A, Alg>;
  using P = std::pair<Mu<Sig>, R>;
  auto paired = [alg = std::move(alg)](const Layer<Sig, P>& l) {
    Mu<Sig> rebuilt(Sig::fmap([](const P& p) { return p.first; }, l));
    return P(std::move(rebuilt), alg(l));
  };
  return cata<P>(std::move(paired), m).second;
}

/// cata alg = para (alg . fmap snd)
template <class A = detail::Deduce, class Sig, class Alg>
auto cata_via_para(Alg alg, const Mu<Sig>& m) -> detail::carrier_t<A, Alg> {
  using R = detail::carrier_t<A, Alg>;
  auto dropped = [alg = std::move(alg)](const ParaLayer<Sig, R>& l) {
    return alg(Sig::fmap([](const std::pair<Mu<Sig>, R>& p) { return p.second; }, l));
  };
  return para<R>(std::move(dropped), m);
}

// ---------------------------------------------------------------------------
// Apomorphisms: Left splices finished codata, Right keeps unfolding.

template <class L>
struct Left {
  L value;
};
template <class R>
struct Right {
  R value;
};

template <class L, class R>
using Either = std::variant<Left<L>, Right<R>>;

namespace detail {

template <class Sig, class S>
struct ApoSource final : Nu<Sig>::Source {
  using Step = std::function<Layer<Sig, Either<Nu<Sig>, S>>(const S&)>;

  ApoSource(S s, std::shared_ptr<const Step> st) : seed(std::move(s)), step(std::move(st)) {}

  typename Nu<Sig>::layer_type observe() const override {
    return Sig::fmap(
        [st = step](const Either<Nu<Sig>, S>& e) -> Nu<Sig> {
          if (const auto* done = std::get_if<Left<Nu<Sig>>>(&e)) return done->value;
          return Nu<Sig>(std::make_shared<const ApoSource>(std::get<Right<S>>(e).value, st));
        },
        (*step)(seed));
  }

  S seed;
  std::shared_ptr<const Step> step;
};

}  // namespace detail

template <class Sig, class S, class Coalg>
Nu<Sig> apo(Coalg&& coalg, S seed) {
  using Src = detail::ApoSource<Sig, S>;
  auto step = std::make_shared<const typename Src::Step>(std::forward<Coalg>(coalg));
  return Nu<Sig>(std::make_shared<const Src>(std::move(seed), std::move(step)));
}

// ---------------------------------------------------------------------------
// Mutumorphisms: two folds that feed on each other, run as one fold over the
// product carrier.

template <class Sig, class A, class B>
using MutuLayer = Layer<Sig, std::pair<A, B>>;

template <class Sig, class A = detail::Deduce, class B = detail::Deduce, class Alg1, class Alg2>
auto mutu_both(Alg1 alg1, Alg2 alg2, const Mu<Sig>& m) {
  using RA = detail::carrier_t<A, Alg1>;
  using RB = detail::carrier_t<B, Alg2>;
  using P = std::pair<RA, RB>;
  return cata<P>([&alg1, &alg2](const Layer<Sig, P>& l) { return P(alg1(l), alg2(l)); }, m);
}

/// (fst . cata alg, snd . cata alg) with alg = alg1 △ alg2.
template <class Sig, class A = detail::Deduce, class B = detail::Deduce, class Alg1, class Alg2>
auto mutu(Alg1 alg1, Alg2 alg2) {
  using RA = detail::carrier_t<A, Alg1>;
  using RB = detail::carrier_t<B, Alg2>;
  auto algs = std::make_shared<const std::pair<Alg1, Alg2>>(std::move(alg1), std::move(alg2));
  std::function<RA(const Mu<Sig>&)> first = [algs](const Mu<Sig>& m) {
    return mutu_both<Sig, RA, RB>(algs->first, algs->second, m).first;
  };
  std::function<RB(const Mu<Sig>&)> second = [algs](const Mu<Sig>& m) {
    return mutu_both<Sig, RA, RB>(algs->first, algs->second, m).second;
  };
  return std::pair(std::move(first), std::move(second));
}

/// zygo alg1 alg2 = fst (mutu alg1 (alg2 . fmap snd))
template <class A = detail::Deduce, class B = detail::Deduce, class Sig, class Alg1, class Alg2>
auto zygo(Alg1 alg1, Alg2 alg2, const Mu<Sig>& m) -> detail::carrier_t<A, Alg1> {
  using RA = detail::carrier_t<A, Alg1>;
  using RB = detail::carrier_t<B, Alg2>;
  auto aux = [alg2 = std::move(alg2)](const MutuLayer<Sig, RA, RB>& l) {
    return alg2(Sig::fmap([](const std::pair<RA, RB>& p) { return p.second; }, l));
  };
  return mutu<Sig, RA, RB>(std::move(alg1), std::move(aux)).first(m);
}

// ---------------------------------------------------------------------------
// Comutumorphisms: one seed unfolding into a pair of mutually recursive
// codata types, the fixed points of two bifunctors.
//
// A bifunctor signature exposes `template <class X, class Y> using layer`
// and `static layer<X2, Y2> bimap(f, g, const layer<X, Y>&)`.

template <class Sig, class X, class Y>
using Layer2 = typename Sig::template layer<X, Y>;

template <class FSig, class GSig, int Which>
class CoNu;

template <class FSig, class GSig>
using Nu1 = CoNu<FSig, GSig, 1>;
template <class FSig, class GSig>
using Nu2 = CoNu<FSig, GSig, 2>;

namespace detail {

template <class FSig, class GSig>
struct CoNuSource {
  virtual ~CoNuSource() = default;
  virtual Layer2<FSig, Nu1<FSig, GSig>, Nu2<FSig, GSig>> observe1() const = 0;
  virtual Layer2<GSig, Nu1<FSig, GSig>, Nu2<FSig, GSig>> observe2() const = 0;
};

}  // namespace detail

/// Nu1 and Nu2 share one seed record; `Which` picks the observation.
template <class FSig, class GSig, int Which>
class CoNu {
 public:
  using first_type = Nu1<FSig, GSig>;
  using second_type = Nu2<FSig, GSig>;
  using source_type = detail::CoNuSource<FSig, GSig>;

  explicit CoNu(std::shared_ptr<const source_type> source) : source_(std::move(source)) {}

  auto observe() const {
    if constexpr (Which == 1)
      return source_->observe1();
    else
      return source_->observe2();
  }

 private:
  std::shared_ptr<const source_type> source_;
};

namespace detail {

template <class FSig, class GSig, class S>
struct CoUnfold final : CoNuSource<FSig, GSig> {
  using N1 = Nu1<FSig, GSig>;
  using N2 = Nu2<FSig, GSig>;
  struct Steps {
    std::function<Layer2<FSig, S, S>(const S&)> first;
    std::function<Layer2<GSig, S, S>(const S&)> second;
  };

  CoUnfold(S s, std::shared_ptr<const Steps> st) : seed(std::move(s)), steps(std::move(st)) {}

  Layer2<FSig, N1, N2> observe1() const override { return FSig::bimap(as_first(), as_second(), steps->first(seed)); }
  Layer2<GSig, N1, N2> observe2() const override { return GSig::bimap(as_first(), as_second(), steps->second(seed)); }

  auto as_first() const {
    return [st = steps](const S& s) { return N1(std::make_shared<const CoUnfold>(s, st)); };
  }
  auto as_second() const {
    return [st = steps](const S& s) { return N2(std::make_shared<const CoUnfold>(s, st)); };
  }

  S seed;
  std::shared_ptr<const Steps> steps;
};

}  // namespace detail

template <class FSig, class GSig, class S, class C1, class C2>
std::pair<Nu1<FSig, GSig>, Nu2<FSig, GSig>> comutu(C1 c1, C2 c2, S seed) {
  using Src = detail::CoUnfold<FSig, GSig, S>;
  auto steps = std::make_shared<const typename Src::Steps>(typename Src::Steps{std::move(c1), std::move(c2)});
  auto source = std::make_shared<const Src>(std::move(seed), std::move(steps));
  return {Nu1<FSig, GSig>(source), Nu2<FSig, GSig>(source)};
}

// ---------------------------------------------------------------------------
// Accumulations.

/// accu alg = uncurry (cata alg), with alg : (f (b -> a), b) -> a.
/// The fold builds one closure per layer and applying it recurses once per
/// layer, so very deep inputs are bounded by the host stack.
template <class A = detail::Deduce, class Sig, class B, class Alg>
auto accu(Alg alg, const Mu<Sig>& m, const B& b) -> detail::carrier_t<A, Alg> {
  using R = detail::carrier_t<A, Alg>;
  using Fn = std::function<R(const B&)>;
  auto shared = std::make_shared<const Alg>(std::move(alg));
  auto curried = [shared](const Layer<Sig, Fn>& l) -> Fn {
    return [shared, l](const B& acc) { return (*shared)(l, acc); };
  };
  return cata<Fn>(curried, m)(b);
}

/// foldl' f = foldr alg id where alg a g = \b -> g (f b a)
template <class A, class B, class Step>
B foldl_prime(Step step, const List<A>& xs, B e) {
  using Fn = std::function<B(const B&)>;
  auto f = std::make_shared<const Step>(std::move(step));
  auto alg = [f](const ListF<A, Fn>& l) -> Fn {
    if (const auto* c = std::get_if<Cons<A, Fn>>(&l))
      return [f, a = c->head, g = c->tail](const B& b) { return g((*f)(b, a)); };
    return [](const B& b) { return b; };
  };
  return cata<Fn>(alg, xs)(e);
}

/// coaccu coalg = curry (ana coalg)
template <class Sig, class C, class P, class Coalg>
Nu<Sig> coaccu(Coalg&& coalg, C seed, P param) {
  return ana<Sig>(std::forward<Coalg>(coalg), std::pair<C, P>(std::move(seed), std::move(param)));
}

}  // namespace schemata
