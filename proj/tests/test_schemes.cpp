#include <doctest.h>

#include <vector>

#include "schemata/functors.hpp"
#include "schemata/gallery.hpp"
#include "schemata/gen.hpp"
#include "schemata/oracles.hpp"
#include "schemata/schemes.hpp"

using namespace schemata;
namespace g = schemata::gallery;

namespace {

long length_alg(const ListF<long, long>& l) { return std::holds_alternative<Nil>(l) ? 0 : 1 + std::get<1>(l).tail; }

long size_alg(const TreeF<long, long>& t) {
  if (const auto* n = std::get_if<Node<long, long>>(&t)) return n->left + 1 + n->right;
  return 0;
}

ListF<long, long> const_nil(const long&) { return Nil{}; }

Tree<long> balanced(long lo, long hi) {
  if (lo > hi) return empty_tree<long>();
  long mid = (lo + hi) / 2;
  return node(balanced(lo, mid - 1), mid, balanced(mid + 1, hi));
}

}  // namespace

TEST_CASE("cata") {
  CHECK(cata<long>(length_alg, nil<long>()) == 0);
  CHECK(g::length_(conv_mu<char>({'a', 'b', 'c'})) == 3);
  CHECK(conv_mu_inv(g::map_([](long x) { return x + 1; }, conv_mu<long>({1, 2}))) == std::vector<long>{2, 3});
  CHECK(cata<long>(size_alg, balanced(1, 7)) == 7);
  CHECK(conv_mu_inv(g::append(conv_mu<int>({1, 2}), conv_mu<int>({3}))) == std::vector<int>{1, 2, 3});
  auto nested = conv_mu<List<int>>({conv_mu<int>({1}), nil<int>(), conv_mu<int>({2, 3})});
  CHECK(conv_mu_inv(g::concat_(nested)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("interp") {
  CHECK(g::interp(g::p1(), {{0, 100}}) == 100);
  CHECK(g::interp(g::p_swap(), {{0, 1}, {1, 2}}) == 2);
  CHECK(g::interp(g::p_put_get(), {}) == 7);
  g::Program ret(prog::Ret<long>{42});
  CHECK(g::interp(ret, {}) == 42);
  CHECK(g::interp(ret, {{0, 9}}) == 42);
  CHECK_THROWS_AS(g::interp(g::p1(), {}), SchemeError);
  CHECK(g::demo_program("p1").has_value());
  CHECK_FALSE(g::demo_program("nope").has_value());
}

TEST_CASE("ana") {
  auto xs = drain(g::linspace(0, 1, 3));
  CHECK(xs == std::vector<double>{0, 0.25, 0.5, 0.75});
  CHECK(drain(ana<ListSig<long>>(const_nil, 5L)).empty());
  CHECK(drain(g::merge(conv_nu<long>({1, 3}), conv_nu<long>({2, 4}))) == std::vector<long>{1, 2, 3, 4});
  auto from5 = observe(g::from(5));
  REQUIRE(std::holds_alternative<Cons<long, CoList<long>>>(from5));
  CHECK(std::get<1>(from5).head == 5);
  CHECK(take(g::from(0), 4).items == std::vector<long>{0, 1, 2, 3});
  CHECK(conv_mu_inv(nu_to_mu(conv_nu<long>({1, 2}), Fuel(100))) == std::vector<long>{1, 2});
  CHECK(nu_to_mu(ana<ListSig<long>>(const_nil, 0L), Fuel(1)) == nil<long>());
}

TEST_CASE("linspace matches its oracle") {
  for (long n = 0; n < 20; ++n) CHECK(drain(g::linspace(-2, 3, n)) == oracle::linspace(-2, 3, n));
}

TEST_CASE("merge matches std::merge on sorted inputs") {
  Rng rng(3);
  auto gen = gen_vector<long>([](Rng& r, std::size_t) { return static_cast<long>(draw_int(r, -20, 20)); });
  for (int k = 0; k < 300; ++k) {
    auto a = oracle::sorted(gen(rng, 15));
    auto b = oracle::sorted(gen(rng, 15));
    CHECK(drain(g::merge(conv_nu(a), conv_nu(b))) == oracle::merge(a, b));
    CHECK(drain(g::merge_coaccu(conv_nu(a), conv_nu(b))) == oracle::merge(a, b));
  }
}

TEST_CASE("hylo") {
  CHECK(conv_mu_inv(g::qsort(conv_mu<long>({3, 1, 2}))) == std::vector<long>{1, 2, 3});
  CHECK(g::qsort(nil<long>()) == nil<long>());
  for (long n : {1L, 2L, 10L}) CHECK_THROWS_AS(g::zeno(n, Fuel(100000)), FuelExhausted);
  Rng rng(4);
  auto gen = gen_vector<long>([](Rng& r, std::size_t) { return static_cast<long>(draw_int(r, -9, 9)); });
  for (int k = 0; k < 300; ++k) {
    auto xs = gen(rng, 30);
    CHECK(conv_mu_inv(g::qsort(conv_mu(xs))) == oracle::sorted(xs));
  }
}

TEST_CASE("hylo reports fuel in coalgebra calls") {
  auto countdown = [](const long& n) -> ListF<long, long> {
    if (n == 0) return Nil{};
    return Cons<long, long>{n, n - 1};
  };
  // 11 coalgebra calls for a seed of 10.
  CHECK(hylo<ListSig<long>, long>(length_alg, countdown, 10L, Fuel(11)) == 10);
  CHECK_THROWS_AS((hylo<ListSig<long>, long>(length_alg, countdown, 10L, Fuel(10))), FuelExhausted);
}

TEST_CASE("cata and ana via hylo") {
  CHECK(cata_via_hylo<long>(length_alg, conv_mu<long>({1, 2, 3})) == 3);
  CHECK(cata_via_hylo<long>(length_alg, nil<long>()) == 0);
  Rng rng(5);
  auto lists = gen_list<long>(gen_int(-5, 5));
  auto countdown = [](const long& n) -> ListF<long, long> {
    if (n <= 0) return Nil{};
    return Cons<long, long>{n * n, n - 1};
  };
  for (int k = 0; k < 200; ++k) {
    auto xs = lists(rng, 40);
    CHECK(cata_via_hylo<long>(length_alg, xs) == cata<long>(length_alg, xs));
    long seed = draw_int(rng, 0, 30);
    CHECK(bounded_equal(ana_via_hylo<ListSig<long>>(countdown, seed), ana<ListSig<long>>(countdown, seed), 50));
  }
}

TEST_CASE("meta") {
  auto to_nat = [](const long& n) -> NatF<long> {
    if (n == 0) return Zero{};
    return Succ<long>{n - 1};
  };
  auto two = meta<NatSig, long>(to_nat, length_alg, conv_mu<long>({1, 2}));
  CHECK(nat_value(nu_to_mu(two)) == 2);
  CHECK(std::holds_alternative<Zero>(observe(meta<NatSig, long>(to_nat, length_alg, nil<long>()))));
  Rng rng(6);
  auto lists = gen_list<long>(gen_int(0, 9));
  for (int k = 0; k < 100; ++k) {
    auto xs = lists(rng, 30);
    auto n = nu_to_mu(meta<NatSig, long>(to_nat, length_alg, xs));
    CHECK(static_cast<long>(layer_depth(n)) == cata<long>(length_alg, xs) + 1);
  }
}
