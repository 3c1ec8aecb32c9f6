#include <doctest.h>

#include <functional>
#include <numeric>
#include <vector>

#include "schemata/gen.hpp"
#include "schemata/indexed.hpp"

using namespace schemata;

namespace {

template <class V>
concept HasSafeHead = requires(const V& v) { safe_head(v); };

static_assert(HasSafeHead<StaticVec<int, 1>>);
static_assert(!HasSafeHead<StaticVec<int, 0>>);
static_assert(decltype(vmap([](int x) { return x * 2.0; }, std::declval<StaticVec<int, 3>>()))::length == 3);

RList<long> rnull(std::size_t k) { return RList<long>(k, NullF{}); }
RList<long> rzero(std::size_t k, RList<long> rest) { return RList<long>(k, ZeroF<RList<long>>{std::move(rest)}); }
RList<long> rone(std::size_t k, Perfect<long> item, RList<long> rest) {
  return RList<long>(k, OneF<long, RList<long>>{std::move(item), std::move(rest)});
}

// The non-scheme version: sum with a continuation that knows how to sum one
// element at the current depth.
long sum_direct(const RList<long>& xs, const std::function<long(const Perfect<long>&)>& k) {
  auto forked = [&k](const Perfect<long>& p) {
    auto mid = p.begin() + static_cast<std::ptrdiff_t>(p.size() / 2);
    return k(Perfect<long>(p.begin(), mid)) + k(Perfect<long>(mid, p.end()));
  };
  return std::visit(
      overloaded{[](const NullF&) { return 0L; },
                 [&](const ZeroF<RList<long>>& z) { return sum_direct(z.rest, forked); },
                 [&](const OneF<long, RList<long>>& o) { return k(o.item) + sum_direct(o.rest, forked); }},
      xs.layer());
}

long flatten_sum(const RList<long>& xs) {
  long total = 0;
  const RList<long>* cur = &xs;
  while (true) {
    if (const auto* z = std::get_if<ZeroF<RList<long>>>(&cur->layer())) {
      cur = &z->rest;
    } else if (const auto* o = std::get_if<OneF<long, RList<long>>>(&cur->layer())) {
      total += std::accumulate(o->item.begin(), o->item.end(), 0L);
      cur = &o->rest;
    } else {
      return total;
    }
  }
}

RList<long> random_rlist(Rng& rng, std::size_t k, std::size_t max_depth) {
  if (k >= max_depth || draw_int(rng, 0, 4) == 0) return rnull(k);
  if (draw_int(rng, 0, 1) == 0) return rzero(k, random_rlist(rng, k + 1, max_depth));
  Perfect<long> item(std::size_t{1} << k);
  for (auto& x : item) x = draw_int(rng, -100, 100);
  return rone(k, std::move(item), random_rlist(rng, k + 1, max_depth));
}

}  // namespace

TEST_CASE("vectors carry their length") {
  auto v = ivec<int>({1, 2, 3});
  CHECK(v.index() == 3);
  CHECK(ivec_items(v) == std::vector<int>{1, 2, 3});
  CHECK(ivec<int>({}).index() == 0);
  CHECK_THROWS_AS(IVec<int>(1, NilF{}), IndexWitnessError);
  CHECK_THROWS_AS(IVec<int>(0, ConsF<int, IVec<int>>{1, ivec<int>({})}), IndexWitnessError);
  CHECK_THROWS_AS(IVec<int>(3, ConsF<int, IVec<int>>{1, ivec<int>({2})}), IndexWitnessError);
}

TEST_CASE("vmap") {
  auto v = vmap([](int x) { return x + 1; }, ivec<int>({1, 2, 3}));
  CHECK(ivec_items(v) == std::vector<int>{2, 3, 4});
  CHECK(v.index() == 3);
  auto empty = vmap([](int x) { return x; }, ivec<int>({}));
  CHECK(std::holds_alternative<NilF>(empty.layer()));
  Rng rng(40);
  auto gen = gen_vector<int>(gen_int(-50, 50));
  for (int k = 0; k < 300; ++k) {
    auto xs = gen(rng, 30);
    auto w = ivec(xs);
    CHECK(ivec_items(vmap([](int x) { return x; }, w)) == xs);
    auto mapped = vmap([](int x) { return 3 * x - 1; }, w);
    CHECK(mapped.index() == xs.size());
    std::vector<int> want;
    for (int x : xs) want.push_back(3 * x - 1);
    CHECK(ivec_items(mapped) == want);
    auto twice = vmap([](int x) { return x * x; }, vmap([](int x) { return x + 2; }, w));
    CHECK(ivec_items(twice) == ivec_items(vmap([](int x) { return (x + 2) * (x + 2); }, w)));
  }
}

TEST_CASE("safe_head") {
  CHECK(safe_head(ivec<int>({7})) == 7);
  CHECK_THROWS_AS(safe_head(ivec<int>({})), IndexWitnessError);
  auto s = vcons(7, vnil<int>());
  CHECK(safe_head(s) == 7);
  auto f = [](int x) { return x * 10 + 1; };
  Rng rng(41);
  auto gen = gen_vector<int>(gen_int(-50, 50));
  for (int k = 0; k < 200; ++k) {
    auto xs = gen(rng, 20);
    xs.push_back(5);
    auto v = ivec(xs);
    CHECK(safe_head(vmap(f, v)) == f(safe_head(v)));
  }
  auto three = vcons(1, vcons(2, vcons(3, vnil<int>())));
  CHECK(decltype(three)::length == 3);
  CHECK(safe_head(vmap(f, three)) == 11);
}

TEST_CASE("lambda terms") {
  auto id = lam_abs(lam_var(1, 0));
  CHECK(id.index() == 0);
  CHECK(lambda_size(id) == 2);
  auto self_app = lam_abs(lam_app(lam_var(1, 0), lam_var(1, 0)));
  CHECK(lambda_size(self_app) == 4);
  CHECK_THROWS_AS(lam_var(0, 0), IndexWitnessError);
  CHECK_THROWS_AS(lam_var(2, 2), IndexWitnessError);
  CHECK_THROWS_AS(lam_abs(lam_abs(lam_var(1, 0))), IndexWitnessError);
  // K = \x. \y. x
  auto k = lam_abs(lam_abs(lam_var(2, 1)));
  CHECK(k.index() == 0);
  CHECK(lambda_size(k) == 3);
}

TEST_CASE("icata sees the index of each layer") {
  // Sum of the scope sizes over all nodes.
  auto scopes = [](const Lambda& t) {
    return icata<long>(
        [](std::size_t scope, const HLayer<LambdaH, long>& l) -> long {
          return static_cast<long>(scope) + match(
                                                l, [](const Var&) { return 0L; },
                                                [](const App<long>& a) { return a.fn + a.arg; },
                                                [](const Abs<long>& a) { return a.body; });
        },
        t);
  };
  // \x. \y. x y: scopes 0, 1, 2, 2, 2
  auto t = lam_abs(lam_abs(lam_app(lam_var(2, 1), lam_var(2, 0))));
  CHECK(scopes(t) == 7);
}

TEST_CASE("random-access lists") {
  CHECK(sum_rlist(rnull(0)) == 0);
  auto xs = rone(0, {1}, rone(1, {2, 3}, rnull(2)));
  CHECK(sum_rlist(xs) == 6);
  CHECK_THROWS_AS(rone(1, {1}, rnull(2)), IndexWitnessError);
  CHECK_THROWS_AS(rone(0, {1}, rnull(0)), IndexWitnessError);
  auto ys = rzero(0, rone(1, {4, 5}, rnull(2)));
  CHECK(sum_rlist(ys) == 9);
}

TEST_CASE("sum_rlist matches the direct recursion") {
  Rng rng(42);
  auto leaf = [](const Perfect<long>& p) { return p.front(); };
  for (int k = 0; k < 200; ++k) {
    auto xs = random_rlist(rng, 0, 6);
    CHECK(sum_rlist(xs) == sum_direct(xs, leaf));
    CHECK(sum_rlist(xs) == flatten_sum(xs));
  }
}
