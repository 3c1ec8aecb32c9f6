#include <doctest.h>

#include <string>
#include <vector>

#include "schemata/course.hpp"
#include "schemata/functors.hpp"
#include "schemata/gallery.hpp"
#include "schemata/gen.hpp"
#include "schemata/oracles.hpp"
#include "schemata/schemes.hpp"

using namespace schemata;
namespace g = schemata::gallery;

namespace {

using LS = ListSig<long>;
using Table = Cofree<LS, long>;
using NatTable = Cofree<NatSig, long>;

long fib_alg(const NatF<NatTable>& n) {
  const auto* s = std::get_if<Succ<NatTable>>(&n);
  if (!s) return 0;
  const auto* prev = std::get_if<Succ<NatTable>>(&unwrap(s->pred));
  if (!prev) return 1;
  return extract(s->pred) + extract(prev->pred);
}

// Reads only the immediate head, so histo agrees with cata of sum.
long head_sum(const ListF<long, Table>& l) {
  if (const auto* c = std::get_if<Cons<long, Table>>(&l)) return c->head + extract(c->tail);
  return 0;
}

long sum_alg(const ListF<long, long>& l) {
  if (const auto* c = std::get_if<Cons<long, long>>(&l)) return c->head + c->tail;
  return 0;
}

// Sum of the element two places further on, where there is one.
long skip_alg(const ListF<long, Table>& l) {
  const auto* c = std::get_if<Cons<long, Table>>(&l);
  if (!c) return 0;
  const auto* next = std::get_if<Cons<long, Table>>(&unwrap(c->tail));
  if (!next) return c->head;
  return c->head + extract(next->tail);
}

Table table_of(const std::vector<long>& heads) {
  Table t = annotate<LS, long>(0, Nil{});
  for (std::size_t i = heads.size(); i-- > 0;) t = annotate<LS, long>(heads[i], Cons<long, Table>{static_cast<long>(i), t});
  return t;
}

}  // namespace

TEST_CASE("tables") {
  auto t = table_of({10, 20, 30});
  CHECK(extract(t) == 10);
  CHECK(index(t, 0) == extract(t));
  CHECK(index(t, 2) == 30);
  CHECK(index(t, 3) == 0);
  CHECK_THROWS_AS(index(t, 4), IndexOutOfTable);
}

TEST_CASE("extract of annotate is the algebra at the root") {
  Rng rng(20);
  auto lists = gen_list<long>(gen_int(-9, 9));
  for (int k = 0; k < 200; ++k) {
    auto xs = lists(rng, 20);
    auto layer = LS::fmap([](const List<long>& m) { return cata<Table>(
        [](const ListF<long, Table>& l) { return annotate<LS, long>(skip_alg(l), l); }, m); }, destructure(xs));
    CHECK(extract(annotate<LS, long>(skip_alg(layer), layer)) == histo<long>(skip_alg, xs));
  }
}

TEST_CASE("histo") {
  CHECK(g::lis(conv_mu<long>({1, 6, -5, 4, 2, 3, 9})).length == 4);
  CHECK(g::lis(nil<long>()).length == 0);
  CHECK(histo<long>(fib_alg, nat(10)) == 55);
  for (std::uint64_t n = 0; n <= 60; ++n) CHECK(histo<long>(fib_alg, nat(n)) == oracle::fib(n));
  Rng rng(21);
  auto lists = gen_list<long>(gen_int(-9, 9));
  for (int k = 0; k < 200; ++k) {
    auto xs = lists(rng, 30);
    CHECK(histo<long>(head_sum, xs) == cata<long>(sum_alg, xs));
    auto v = conv_mu_inv(xs);
    CHECK(g::lis(xs).length == oracle::lis_dp(v));
  }
}

TEST_CASE("lis step counts are quadratic") {
  for (long n : {0L, 1L, 5L, 8L, 16L, 32L}) {
    std::vector<long> xs(static_cast<std::size_t>(n), 0);
    // one algebra call per layer, plus a findNext walk over each tail
    CHECK(g::lis(conv_mu(xs)).steps == static_cast<std::uint64_t>(n * (n + 1) / 2 + n + 1));
  }
}

TEST_CASE("dyna") {
  CHECK(g::lcs("abcbdab", "bdcaba") == 4);
  CHECK(g::lcs("", "abc") == 0);
  CHECK(g::lcs("abc", "") == 0);
  CHECK(g::lcs("", "") == 0);
  Rng rng(22);
  auto lists = gen_list<long>(gen_int(-9, 9));
  auto out = [](const List<long>& m) { return destructure(m); };
  for (int k = 0; k < 200; ++k) {
    auto xs = lists(rng, 30);
    CHECK(dyna<LS, long>(skip_alg, out, xs) == histo<long>(skip_alg, xs));
  }
  auto forever = [](const long& n) -> ListF<long, long> { return Cons<long, long>{n, n + 1}; };
  CHECK_THROWS_AS((dyna<LS, long>(skip_alg, forever, 0L, Fuel(1000))), FuelExhausted);
}

TEST_CASE("offset formula") {
  CHECK(offset(1, 1, 6) == 7);
  CHECK(offset(0, 1, 6) == 0);
  CHECK(offset(1, 0, 6) == 6);
}

TEST_CASE("offset agrees with the enumeration order") {
  // Walk the subproblem sequence by index pairs: (i, j) stands for
  // (drop i s1, drop j s2).
  for (std::size_t len1 = 0; len1 <= 6; ++len1)
    for (std::size_t len2 = 0; len2 <= 6; ++len2) {
      std::vector<std::pair<std::size_t, std::size_t>> order;
      std::size_t i = 0, j = 0;
      while (!(i == len1 && j == len2)) {
        order.emplace_back(i, j);
        if (j == len2) {
          ++i;
          j = 0;
        } else {
          ++j;
        }
      }
      order.emplace_back(len1, len2);
      for (std::size_t p = 0; p < order.size(); ++p) {
        auto [a, b] = order[p];
        for (std::size_t n = 0; a + n <= len1; ++n)
          for (std::size_t m = 0; b + m <= len2; ++m) {
            if (n == 0 && m == 0) continue;
            std::size_t q = p + 1;
            while (order[q] != std::pair(a + n, b + m)) ++q;
            CHECK(q - p - 1 == offset(n, m, len2));
          }
      }
    }
}

TEST_CASE("lcs agrees with the DP table exhaustively") {
  std::vector<std::string> words{""};
  for (std::size_t len = 1; len <= 5; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i) w += (bits >> i & 1) ? 'b' : 'a';
      words.push_back(w);
    }
  for (const auto& a : words)
    for (const auto& b : words) {
      CHECK(g::lcs(a, b) == oracle::lcs_dp(a, b));
      CHECK(g::lcs_chrono(a, b) == oracle::lcs_dp(a, b));
    }
}

TEST_CASE("eval") {
  using F = Free<LS, long>;
  auto length_alg = [](const ListF<long, long>& l) { return std::holds_alternative<Nil>(l) ? 0L : 1 + std::get<1>(l).tail; };
  auto g10 = [](const long& a) { return a * 10; };
  CHECK(eval<long>(length_alg, g10, ret<LS, long>(4)) == 40);
  F chain = op<LS, long>(Cons<long, F>{1, op<LS, long>(Cons<long, F>{2, ret<LS, long>(5)})});
  CHECK(eval<long>(length_alg, g10, chain) == 52);
  F closed = op<LS, long>(Cons<long, F>{1, op<LS, long>(Nil{})});
  auto embedded = eval<List<long>>([](const ListF<long, List<long>>& l) { return List<long>(l); },
                                   [](const long&) -> List<long> { throw SchemeError("unreachable"); }, closed);
  CHECK(embedded == conv_mu<long>({1}));
}

TEST_CASE("futu") {
  using Runs = g::Runs;
  auto runs = conv_mu<std::pair<long, char>>({{3, 'a'}, {1, 'b'}});
  auto out = drain(g::rld(runs));
  CHECK(std::string(out.begin(), out.end()) == "aaab");
  CHECK(drain(g::rld(Runs(nil<std::pair<long, char>>()))).empty());
  CHECK_THROWS_AS(g::rld(conv_mu<std::pair<long, char>>({{0, 'a'}})), SchemeError);
  Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    std::vector<std::pair<long, char>> rs;
    auto n = draw_int(rng, 0, 6);
    for (int i = 0; i < n; ++i) rs.emplace_back(draw_int(rng, 1, 5), static_cast<char>('a' + draw_int(rng, 0, 2)));
    auto want = oracle::rld_expand(rs);
    auto got = drain(g::rld(conv_mu(rs)));
    auto got_ana = drain(g::rld_ana(conv_mu(rs)));
    CHECK(std::string(got.begin(), got.end()) == want);
    CHECK(std::string(got_ana.begin(), got_ana.end()) == want);
  }
}

TEST_CASE("futu with single-layer batches is ana") {
  auto one = [](const long& n) -> ListF<long, long> {
    if (n > 50) return Nil{};
    return Cons<long, long>{n, n * 2 + 1};
  };
  auto batched = [&one](const long& n) { return LS::fmap([](const long& s) { return ret<LS, long>(s); }, one(n)); };
  for (long s = 0; s < 20; ++s) CHECK(bounded_equal(futu<LS>(batched, s), ana<LS>(one, s), 30));
}

TEST_CASE("chrono") {
  auto countdown = [](const long& n) -> ListF<long, long> {
    if (n <= 0) return Nil{};
    return Cons<long, long>{n, n - 1};
  };
  auto batched = [&countdown](const long& n) {
    return LS::fmap([](const long& s) { return ret<LS, long>(s); }, countdown(n));
  };
  for (long s = 0; s < 30; ++s)
    CHECK(chrono<LS, long>(head_sum, batched, s) == hylo<LS, long>(sum_alg, countdown, s));
  auto forever = [](const long& n) {
    return ListF<long, Free<LS, long>>(Cons<long, Free<LS, long>>{n, ret<LS, long>(n + 1)});
  };
  CHECK_THROWS_AS((chrono<LS, long>(head_sum, forever, 0L, Fuel(500))), FuelExhausted);
}
