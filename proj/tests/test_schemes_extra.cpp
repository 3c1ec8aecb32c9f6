#include <doctest.h>

#include <string>
#include <vector>

#include "schemata/functors.hpp"
#include "schemata/gallery.hpp"
#include "schemata/gen.hpp"
#include "schemata/godel.hpp"
#include "schemata/oracles.hpp"
#include "schemata/schemes.hpp"
#include "schemata/schemes_extra.hpp"

using namespace schemata;
namespace g = schemata::gallery;
using BigInt = g::BigInt;

namespace {

using LS = ListSig<long>;
using L = List<long>;

long length_alg(const ListF<long, long>& l) { return std::holds_alternative<Nil>(l) ? 0 : 1 + std::get<1>(l).tail; }

// Sum of the suffix lengths, read off the substructures.
long suffix_lengths(const ListF<long, std::pair<L, long>>& l) {
  if (const auto* c = std::get_if<Cons<long, std::pair<L, long>>>(&l)) return g::length_(c->tail.first) + c->tail.second;
  return 0;
}

BigInt factorial_alg(const NatF<std::pair<Nat, BigInt>>& n) {
  if (const auto* s = std::get_if<Succ<std::pair<Nat, BigInt>>>(&n))
    return BigInt(nat_value(s->pred.first) + 1) * s->pred.second;
  return 1;
}

List<char> chars(const std::string& s) { return conv_mu(std::vector<char>(s.begin(), s.end())); }

Tree<long> complete(int depth, long& next) {
  if (depth == 0) return empty_tree<long>();
  auto l = complete(depth - 1, next);
  long here = next++;
  return node(l, here, complete(depth - 1, next));
}

}  // namespace

TEST_CASE("para") {
  CHECK(g::factorial(nat(0)) == 1);
  CHECK(g::factorial(nat(5)) == 120);
  for (std::uint64_t n = 0; n <= 30; ++n) CHECK(g::factorial(nat(n)) == oracle::factorial(n));
  CHECK(g::wc(chars("ab c")) == 2);
  CHECK(g::wc(chars("")) == 0);
  CHECK(g::wc(chars("  lead\tand\ntrail  ")) == 3);
}

TEST_CASE("wc matches a stream-based count") {
  Rng rng(8);
  const std::string alphabet = "ab \t\n";
  for (int k = 0; k < 300; ++k) {
    std::string s;
    auto n = draw_int(rng, 0, 25);
    for (int i = 0; i < n; ++i) s += alphabet[static_cast<std::size_t>(draw_int(rng, 0, 4))];
    CHECK(g::wc(chars(s)) == oracle::wc(s));
  }
}

TEST_CASE("cata and para are interdefinable") {
  CHECK(cata_via_para<long>(length_alg, nil<long>()) == 0);
  CHECK(para_via_cata<long>(suffix_lengths, nil<long>()) == 0);
  Rng rng(9);
  auto lists = gen_list<long>(gen_int(-9, 9));
  for (int k = 0; k < 300; ++k) {
    auto xs = lists(rng, 30);
    CHECK(cata_via_para<long>(length_alg, xs) == cata<long>(length_alg, xs));
    CHECK(para_via_cata<long>(suffix_lengths, xs) == para<long>(suffix_lengths, xs));
  }
  for (std::uint64_t n = 0; n <= 10; ++n)
    CHECK(para_via_cata<BigInt>(factorial_alg, nat(n)) == para<BigInt>(factorial_alg, nat(n)));
}

TEST_CASE("apo") {
  CHECK(drain(g::insert(2, conv_nu<long>({1, 3}))) == std::vector<long>{1, 2, 3});
  CHECK(drain(g::insert(5, conv_nu<long>({}))) == std::vector<long>{5});
  auto inf = g::insert(3, g::from(0));
  CHECK(take(inf, 6).items == std::vector<long>{0, 1, 2, 3, 3, 4});
  auto xs = conv_nu<long>({4, 5, 6});
  auto ys = g::maphd([](long x) { return x * 10; }, xs);
  CHECK(drain(ys) == std::vector<long>{40, 5, 6});
  CHECK(drain(g::maphd([](long x) { return x; }, conv_nu<long>({}))).empty());
  Rng rng(10);
  auto gen = gen_vector<long>([](Rng& r, std::size_t) { return static_cast<long>(draw_int(r, -9, 9)); });
  for (int k = 0; k < 300; ++k) {
    auto v = oracle::sorted(gen(rng, 20));
    long y = draw_int(rng, -10, 10);
    CHECK(drain(g::insert(y, conv_nu(v))) == oracle::insert(y, v));
  }
}

TEST_CASE("apo splices the untouched tail") {
  // The tail after maphd observes exactly like the original tail.
  auto xs = g::from(1);
  auto ys = g::maphd([](long x) { return -x; }, xs);
  auto tail_x = std::get<1>(observe(xs)).tail;
  auto tail_y = std::get<1>(observe(ys)).tail;
  CHECK(bounded_equal(tail_x, tail_y, 200));
}

TEST_CASE("zygo") {
  long next = 0;
  CHECK(g::perfect(complete(3, next)));
  CHECK(g::perfect(empty_tree<long>()));
  CHECK_FALSE(g::perfect(node(leaf(1L), 2L, empty_tree<long>())));
  CHECK(g::depth(complete(4, next)) == 4);
  Rng rng(12);
  auto lists = gen_list<long>(gen_int(-9, 9));
  for (int k = 0; k < 300; ++k) {
    auto xs = lists(rng, 25);
    auto swapped = [](const ListF<long, std::pair<long, L>>& l) {
      return suffix_lengths(LS::fmap([](const std::pair<long, L>& p) { return std::pair<L, long>(p.second, p.first); }, l));
    };
    CHECK(zygo<long, L>(swapped, [](const ListF<long, L>& l) { return L(l); }, xs) == para<long>(suffix_lengths, xs));
  }
}

TEST_CASE("perfect matches a node-count oracle") {
  Rng rng(13);
  auto trees = gen_tree<long>(gen_int(0, 9));
  for (int k = 0; k < 300; ++k) {
    auto t = trees(rng, 15);
    auto labels = (node_count(t) - 1) / 2;  // Empty leaves are one more than nodes
    auto d = g::depth(t);
    CHECK(g::perfect(t) == (labels + 1 == (std::size_t{1} << d)));
  }
}

TEST_CASE("mutu") {
  CHECK(g::fib(nat(0)) == 0);
  CHECK(g::fib(nat(1)) == 1);
  CHECK(g::fib(nat(10)) == 55);
  for (std::uint64_t n = 0; n <= 90; ++n) CHECK(g::fib(nat(n)) == oracle::fib(n));
  for (std::uint64_t n = 0; n <= 40; ++n) {
    CHECK(g::is_even(nat(n)) == (n % 2 == 0));
    CHECK(g::is_even(nat(n)) == !g::is_odd(nat(n)));
  }
}

TEST_CASE("comutu decodes Godel numbers") {
  using namespace godel;
  using godel::BigInt;
  auto e = from_t(lit(3));
  CHECK(decode_expr(encode(e)) == e);
  CHECK(g::godel_roundtrip(e) == e);
  // encLit 0 = 1, so h (Lit 0) = 2 and g (FromT (Lit 0)) = 11^2.
  CHECK(decode_expr(BigInt(121)) == from_t(lit(0)));
  std::mt19937_64 rng(14);
  for (int k = 0; k < 200; ++k) {
    auto x = random_expr(rng, 4, 4000);
    CHECK(decode_expr(encode(x)) == x);
  }
}

TEST_CASE("accu") {
  CHECK(conv_mu_inv(g::reverse_(conv_mu<long>({1, 2, 3}))) == std::vector<long>{3, 2, 1});
  CHECK(g::reverse_(nil<long>()) == nil<long>());
  auto t = node(empty_tree<long>(), 5L, leaf(2L));
  CHECK(g::sum_path(t) == node(empty_tree<long>(), 5L, leaf(7L)));
  CHECK(g::sum_path(empty_tree<long>()) == empty_tree<long>());
  using Fn = std::function<long(const long&)>;
  auto alg = [](const ListF<long, Fn>& l, const long& b) -> long {
    if (const auto* c = std::get_if<Cons<long, Fn>>(&l)) return c->tail(b + c->head);
    return b * 100;
  };
  CHECK(accu<long>(alg, nil<long>(), 3L) == 300);
  CHECK(accu<long>(alg, conv_mu<long>({1, 2}), 3L) == 600);
}

TEST_CASE("foldl'") {
  auto sub = [](long b, long a) { return b - a; };
  CHECK(foldl_prime<long, long>(sub, nil<long>(), 10L) == 10);
  CHECK(foldl_prime<long, long>(sub, conv_mu<long>({1, 2, 3}), 10L) == 4);
  Rng rng(15);
  auto gen = gen_vector<long>([](Rng& r, std::size_t) { return static_cast<long>(draw_int(r, -99, 99)); });
  for (int k = 0; k < 300; ++k) {
    auto xs = gen(rng, 30);
    long want = 7;
    for (long x : xs) want = want * 3 - x;
    CHECK(foldl_prime<long, long>([](long b, long a) { return b * 3 - a; }, conv_mu(xs), 7L) == want);
  }
}

TEST_CASE("coaccu") {
  auto coalg = [](const std::pair<long, long>& s) -> ListF<long, std::pair<long, long>> {
    if (s.first >= s.second) return Nil{};
    return Cons<long, std::pair<long, long>>{s.first, {s.first + 1, s.second}};
  };
  for (long a = -3; a < 5; ++a)
    for (long b = -3; b < 5; ++b)
      CHECK(bounded_equal(coaccu<LS>(coalg, a, b), ana<LS>(coalg, std::pair<long, long>(a, b)), 20));
  auto nil_coalg = [](const std::pair<long, long>&) -> ListF<long, std::pair<long, long>> { return Nil{}; };
  CHECK(drain(coaccu<LS>(nil_coalg, 1L, 2L)).empty());
}
