#include <doctest.h>

#include <string>
#include <vector>

#include "schemata/fix.hpp"
#include "schemata/functors.hpp"
#include "schemata/gallery.hpp"
#include "schemata/gen.hpp"
#include "schemata/schemes.hpp"

using namespace schemata;

TEST_CASE("construct and destructure are inverse") {
  auto xs = cons(1, cons(2, nil<int>()));
  CHECK(construct<ListSig<int>>(destructure(xs)) == xs);
  const auto& layer = destructure(xs);
  REQUIRE(std::holds_alternative<Cons<int, List<int>>>(layer));
  CHECK(std::get<Cons<int, List<int>>>(layer).head == 1);
}

TEST_CASE("structural equality") {
  CHECK(conv_mu<int>({1, 2, 3}) == conv_mu<int>({1, 2, 3}));
  CHECK_FALSE(conv_mu<int>({1, 2, 3}) == conv_mu<int>({1, 2}));
  CHECK_FALSE(conv_mu<int>({1, 2, 3}) == conv_mu<int>({1, 2, 4}));
  CHECK(node(leaf(1L), 2L, empty_tree<long>()) == node(leaf(1L), 2L, empty_tree<long>()));
  CHECK_FALSE(node(leaf(1L), 2L, empty_tree<long>()) == node(empty_tree<long>(), 2L, leaf(1L)));
}

TEST_CASE("node count and depth") {
  auto t = node(leaf(1L), 2L, node(leaf(3L), 4L, empty_tree<long>()));
  // 4 labelled nodes plus 5 Empty leaves
  CHECK(node_count(t) == 9);
  CHECK(layer_depth(t) == 4);
  CHECK(layer_depth(nat(0)) == 1);
  CHECK(layer_depth(nat(7)) == 8);
}

TEST_CASE("list conversions round trip") {
  Rng rng(1);
  auto gen = gen_vector<int>(gen_int(-100, 100));
  for (int k = 0; k < 200; ++k) {
    auto xs = gen(rng, 30);
    CHECK(conv_mu_inv(conv_mu(xs)) == xs);
    CHECK(drain(conv_nu(xs)) == xs);
    CHECK(conv_mu_inv(nu_to_mu(mu_to_nu(conv_mu(xs)))) == xs);
  }
}

TEST_CASE("shape and children") {
  ListF<int, std::string> l = Cons<int, std::string>{3, "tail"};
  CHECK(children<ListSig<int>>(l) == std::vector<std::string>{"tail"});
  CHECK(shape<ListSig<int>>(l) == ListF<int, Unit>(Cons<int, Unit>{3, Unit{}}));
  CHECK(children<ListSig<int>>(ListF<int, std::string>(Nil{})).empty());
}

TEST_CASE("deep structures are built, folded and destroyed without recursion") {
  const std::size_t n = 200000;
  List<long> xs = nil<long>();
  for (std::size_t i = 0; i < n; ++i) xs = cons(static_cast<long>(i), xs);
  CHECK(gallery::length_(xs) == static_cast<long>(n));
  CHECK(layer_depth(xs) == n + 1);
  CHECK(xs == xs);
  Nat big = nat(n);
  CHECK(nat_value(big) == n);
}

TEST_CASE("sharing survives destruction of one owner") {
  auto tail = conv_mu<int>({2, 3});
  {
    auto a = cons(1, tail);
    auto b = cons(0, tail);
    CHECK(conv_mu_inv(a) == std::vector<int>{1, 2, 3});
  }
  CHECK(conv_mu_inv(tail) == std::vector<int>{2, 3});
}

TEST_CASE("Nu observation is lazy") {
  auto naturals = gallery::from(0);
  auto prefix = take(naturals, 5);
  CHECK(prefix.items == std::vector<long>{0, 1, 2, 3, 4});
  CHECK_FALSE(prefix.complete);
  auto finite = take(conv_nu<long>({1, 2}), 5);
  CHECK(finite.complete);
  CHECK(finite.items == std::vector<long>{1, 2});
}

TEST_CASE("bounded equality compares only up to the depth") {
  auto a = gallery::from(0);
  auto b = gallery::from(0);
  CHECK(bounded_equal(a, b, 100));
  CHECK_FALSE(bounded_equal(a, gallery::from(1), 100));
  auto c = conv_nu<long>({0, 1, 2, 99});
  CHECK(bounded_equal(a, c, 3));
  CHECK_FALSE(bounded_equal(a, c, 4));
}

TEST_CASE("fuel counts down and reports its budget") {
  Fuel f(3);
  f.consume();
  f.consume();
  CHECK(f.used() == 2);
  CHECK(f.remaining() == 1);
  f.consume();
  CHECK_THROWS_WITH_AS(f.consume(), "fuel exhausted after 3 steps", FuelExhausted);
  CHECK(Fuel{}.budget() == Fuel::kDefault);
  CHECK(Fuel::kDefault == 1000000);
}

TEST_CASE("converting an infinite Nu runs out of fuel") {
  CHECK_THROWS_AS(nu_to_mu(gallery::from(0), Fuel(1000)), FuelExhausted);
  try {
    nu_to_mu(gallery::from(0), Fuel(1000));
  } catch (const FuelExhausted& e) {
    CHECK(e.steps() == 1000);
  }
}

TEST_CASE("printers") {
  CHECK(show(conv_mu<long>({1, 2, 3})) == "[1,2,3]");
  CHECK(show(node(leaf(1L), 2L, empty_tree<long>())) == "((. 1 .) 2 .)");
  CHECK(show(nat(4)) == "4");
}
