#include "schemata/gallery.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <sstream>
#include <type_traits>

#include "schemata/oracles.hpp"

namespace schemata::gallery {

namespace {

template <class A>
const Cons<A, List<A>>* uncons(const List<A>& xs) {
  return std::get_if<Cons<A, List<A>>>(&xs.layer());
}

template <class A>
List<A> tail_of(const List<A>& xs) {
  return uncons(xs)->tail;
}

}  // namespace

// --- interp ---------------------------------------------------------------

namespace {

using Handler = std::function<long(const Store&)>;

Program ret_p(long a) { return Program(prog::Ret<long>{a}); }
Program put_p(int addr, long v, Program next) { return Program(prog::Put<long, Program>{addr, v, std::move(next)}); }
Program get_p(int addr, std::function<Program(const long&)> k) {
  return Program(prog::Get<long, Program>{addr, std::move(k)});
}

}  // namespace

long interp(const Program& p, const Store& store) {
  auto handle = [](const ProgF<long, long, Handler>& l) -> Handler {
    return match(
        l, [](const prog::Ret<long>& r) -> Handler { return [a = r.value](const Store&) { return a; }; },
        [](const prog::Put<long, Handler>& put) -> Handler {
          return [put](const Store& m) {
            Store updated = m;
            updated[put.addr] = put.value;
            return put.next(updated);
          };
        },
        [](const prog::Get<long, Handler>& get) -> Handler {
          return [get](const Store& m) {
            auto it = m.find(get.addr);
            if (it == m.end()) throw SchemeError("cell " + std::to_string(get.addr) + " is not in the store");
            return get.next(it->second)(m);
          };
        });
  };
  return cata<Handler>(handle, p)(store);
}

Program p1() {
  return get_p(0, [](const long& s) { return put_p(0, s + 1, ret_p(s)); });
}

Program p_swap() {
  return get_p(0, [](const long& a) {
    return get_p(1, [a](const long& b) { return put_p(0, b, put_p(1, a, get_p(0, [](const long& x) { return ret_p(x); }))); });
  });
}

Program p_put_get() {
  return put_p(0, 7, get_p(0, [](const long& x) { return ret_p(x); }));
}

std::optional<Program> demo_program(const std::string& name) {
  if (name == "p1") return p1();
  if (name == "swap") return p_swap();
  if (name == "put-get") return p_put_get();
  return std::nullopt;
}

// --- ana ------------------------------------------------------------------

CoList<double> linspace(double s, double e, long n) {
  if (n < 0) throw SchemeError("linspace needs n >= 0");
  double step = (e - s) / static_cast<double>(n + 1);
  return ana<ListSig<double>>(
      [e, step](const double& i) -> ListF<double, double> {
        if (i < e) return Cons<double, double>{i, i + step};
        return Nil{};
      },
      s);
}

CoList<long> from(long n) {
  return ana<ListSig<long>>([](const long& i) -> ListF<long, long> { return Cons<long, long>{i, i + 1}; }, n);
}

namespace {

using MergeSeed = std::pair<CoList<long>, CoList<long>>;

ListF<long, MergeSeed> merge_step(const MergeSeed& s) {
  auto x = s.first.observe();
  auto y = s.second.observe();
  const auto* cx = std::get_if<Cons<long, CoList<long>>>(&x);
  const auto* cy = std::get_if<Cons<long, CoList<long>>>(&y);
  if (!cx && !cy) return Nil{};
  if (!cy || (cx && cx->head < cy->head)) return Cons<long, MergeSeed>{cx->head, MergeSeed(cx->tail, s.second)};
  return Cons<long, MergeSeed>{cy->head, MergeSeed(s.first, cy->tail)};
}

}  // namespace

CoList<long> merge(const CoList<long>& x, const CoList<long>& y) {
  return ana<ListSig<long>>(merge_step, MergeSeed(x, y));
}

CoList<long> merge_coaccu(const CoList<long>& x, const CoList<long>& y) {
  return coaccu<ListSig<long>>(merge_step, x, y);
}

// --- hylo -----------------------------------------------------------------

TreeF<long, List<long>> partition(const List<long>& xs) {
  const auto* c = uncons(xs);
  if (!c) return Empty{};
  std::vector<long> smaller, rest;
  for (const List<long>* cur = &c->tail; const auto* d = uncons(*cur); cur = &d->tail)
    (d->head < c->head ? smaller : rest).push_back(d->head);
  return Node<long, List<long>>{conv_mu(smaller), c->head, conv_mu(rest)};
}

List<long> combine(const TreeF<long, List<long>>& t) {
  return match(
      t, [](const Empty&) { return nil<long>(); },
      [](const Node<long, List<long>>& n) { return append(n.left, cons(n.label, n.right)); });
}

List<long> qsort(const List<long>& xs, Fuel fuel) {
  return hylo<TreeSig<long>, List<long>>(combine, partition, xs, fuel);
}

ListF<double, GeoSeed> geo(const GeoSeed& s) {
  return Cons<double, GeoSeed>{std::ldexp(1.0 / static_cast<double>(s.base), -s.doublings),
                               GeoSeed{s.base, s.doublings + 1}};
}

double sum_alg(const ListF<double, double>& l) {
  return match(l, [](const Nil&) { return 0.0; }, [](const Cons<double, double>& c) { return c.head + c.tail; });
}

double zeno(long n, Fuel fuel) { return hylo<ListSig<double>, double>(sum_alg, geo, GeoSeed{n, 0}, fuel); }

// --- accu -----------------------------------------------------------------

List<long> reverse_(const List<long>& xs) {
  using Fn = std::function<List<long>(const List<long>&)>;
  return accu<List<long>>(
      [](const ListF<long, Fn>& l, const List<long>& acc) {
        return match(
            l, [&acc](const Nil&) { return acc; },
            [&acc](const Cons<long, Fn>& c) { return c.tail(cons(c.head, acc)); });
      },
      xs, nil<long>());
}

Tree<long> sum_path(const Tree<long>& t) {
  using Fn = std::function<Tree<long>(const long&)>;
  return accu<Tree<long>>(
      [](const TreeF<long, Fn>& l, const long& s) {
        return match(
            l, [](const Empty&) { return empty_tree<long>(); },
            [s](const Node<long, Fn>& n) {
              long here = s + n.label;
              auto left = n.left(here);
              return node(std::move(left), here, n.right(here));
            });
      },
      t, 0L);
}

// --- mutu -----------------------------------------------------------------

namespace {

using Parity = std::pair<bool, bool>;

bool even_alg(const NatF<Parity>& l) {
  return match(l, [](const Zero&) { return true; }, [](const Succ<Parity>& s) { return s.pred.second; });
}
bool odd_alg(const NatF<Parity>& l) {
  return match(l, [](const Zero&) { return false; }, [](const Succ<Parity>& s) { return s.pred.first; });
}

using FibAux = std::pair<BigInt, BigInt>;

BigInt fib_alg(const NatF<FibAux>& l) {
  return match(
      l, [](const Zero&) { return BigInt(0); }, [](const Succ<FibAux>& s) { return BigInt(s.pred.first + s.pred.second); });
}
BigInt aux_alg(const NatF<FibAux>& l) {
  return match(l, [](const Zero&) { return BigInt(1); }, [](const Succ<FibAux>& s) { return s.pred.first; });
}

}  // namespace

bool is_even(const Nat& n) { return mutu<NatSig, bool, bool>(even_alg, odd_alg).first(n); }
bool is_odd(const Nat& n) { return mutu<NatSig, bool, bool>(even_alg, odd_alg).second(n); }

BigInt fib(const Nat& n) { return mutu_both<NatSig, BigInt, BigInt>(fib_alg, aux_alg, n).first; }

godel::Expr godel_roundtrip(const godel::Expr& e) { return godel::decode_expr(godel::encode(e)); }

// --- para -----------------------------------------------------------------

BigInt factorial(const Nat& n) {
  return para<BigInt>(
      [](const NatF<std::pair<Nat, BigInt>>& l) {
        return match(
            l, [](const Zero&) { return BigInt(1); },
            [](const Succ<std::pair<Nat, BigInt>>& s) { return BigInt((nat_value(s.pred.first) + 1) * s.pred.second); });
      },
      n);
}

namespace {

bool ascii_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r'; }

}  // namespace

long wc(const List<char>& text) {
  return para<long>(
      [](const ListF<char, std::pair<List<char>, long>>& l) {
        return match(
            l, [](const Nil&) { return 0L; },
            [](const Cons<char, std::pair<List<char>, long>>& c) {
              const List<char>& cs = c.tail.first;
              bool new_word = !ascii_space(c.head) && (is_nil(cs) || ascii_space(uncons(cs)->head));
              return new_word ? c.tail.second + 1 : c.tail.second;
            });
      },
      text);
}

Nat ack(const Nat& m, const Nat& n, Fuel fuel) {
  using NatFn = std::function<Nat(const Nat&)>;
  auto meter = std::make_shared<Fuel>(fuel);
  auto alg = [meter](const NatF<NatFn>& l) -> NatFn {
    if (std::holds_alternative<Zero>(l)) return [](const Nat& k) { return Nat(Succ<Nat>{k}); };
    NatFn an = std::get<Succ<NatFn>>(l).pred;
    return [an, meter](const Nat& k) {
      return cata<Nat>(
          [&an, &meter](const NatF<Nat>& x) {
            meter->consume();
            if (std::holds_alternative<Zero>(x)) return an(nat(1));
            return an(std::get<Succ<Nat>>(x).pred);
          },
          k);
    };
  };
  return cata<NatFn>(alg, m)(n);
}

// --- apo ------------------------------------------------------------------

CoList<long> maphd(const std::function<long(long)>& f, const CoList<long>& xs) {
  using Step = ListF<long, Either<CoList<long>, CoList<long>>>;
  return apo<ListSig<long>>(
      [f](const CoList<long>& s) -> Step {
        auto l = s.observe();
        if (const auto* c = std::get_if<Cons<long, CoList<long>>>(&l))
          return Cons<long, Either<CoList<long>, CoList<long>>>{f(c->head), Left<CoList<long>>{c->tail}};
        return Nil{};
      },
      xs);
}

CoList<long> insert(long y, const CoList<long>& xs) {
  using E = Either<CoList<long>, CoList<long>>;
  return apo<ListSig<long>>(
      [y](const CoList<long>& s) -> ListF<long, E> {
        auto l = s.observe();
        const auto* c = std::get_if<Cons<long, CoList<long>>>(&l);
        if (!c || y <= c->head) return Cons<long, E>{y, Left<CoList<long>>{s}};
        return Cons<long, E>{c->head, Right<CoList<long>>{c->tail}};
      },
      xs);
}

// --- zygo -----------------------------------------------------------------

namespace {

long depth_alg(const TreeF<long, long>& l) {
  return match(
      l, [](const Empty&) { return 0L; }, [](const Node<long, long>& n) { return 1 + std::max(n.left, n.right); });
}

}  // namespace

bool perfect(const Tree<long>& t) {
  using P = std::pair<bool, long>;
  return zygo<bool, long>(
      [](const TreeF<long, P>& l) {
        return match(
            l, [](const Empty&) { return true; },
            [](const Node<long, P>& n) {
              return n.left.first && n.right.first && n.left.second == n.right.second;
            });
      },
      depth_alg, t);
}

long depth(const Tree<long>& t) { return cata<long>(depth_alg, t); }

// --- histo ----------------------------------------------------------------

LisResult lis(const List<long>& xs) {
  using Entry = std::pair<long, long>;
  using Table = Cofree<ListSig<long>, Entry>;
  std::uint64_t steps = 0;
  // findNext x t: the best first component among entries whose element is
  // above x, or the final entry's.
  auto find_next = [&steps](long x, const Table& table) {
    long best = 0;
    const Table* cur = &table;
    while (true) {
      ++steps;
      const auto* c = std::get_if<Cons<long, Table>>(&unwrap(*cur));
      if (!c) return std::max(best, extract(*cur).first);
      if (x < c->head) best = std::max(best, extract(*cur).first);
      cur = &c->tail;
    }
  };
  auto alg = [&](const ListF<long, Table>& l) -> Entry {
    ++steps;
    const auto* c = std::get_if<Cons<long, Table>>(&l);
    if (!c) return {0, 0};
    long a = 1 + find_next(c->head, c->tail);
    long b = std::max(a, extract(c->tail).second);
    return {a, b};
  };
  long length = histo<Entry>(alg, xs).second;
  return {length, steps};
}

// --- dyna / chrono --------------------------------------------------------

namespace {

using LcsSig = ListSig<LcsSeed>;
using LcsTable = Cofree<LcsSig, long>;

List<char> chars(const std::string& s) { return conv_mu(std::vector<char>(s.begin(), s.end())); }

auto lcs_alg(std::size_t len2) {
  return [len2](const ListF<LcsSeed, LcsTable>& l) -> long {
    const auto* c = std::get_if<Cons<LcsSeed, LcsTable>>(&l);
    if (!c) return 0;
    const auto* x = uncons(c->head.first);
    const auto* y = uncons(c->head.second);
    if (!x || !y) return 0;
    if (x->head == y->head) return index(c->tail, offset(1, 1, len2)) + 1;
    return std::max(index(c->tail, offset(1, 0, len2)), index(c->tail, offset(0, 1, len2)));
  };
}

}  // namespace

long lcs(const std::string& s1, const std::string& s2, Fuel fuel) {
  List<char> second = chars(s2);
  auto g = [second](const LcsSeed& s) -> ListF<LcsSeed, LcsSeed> {
    bool x_nil = is_nil(s.first);
    bool y_nil = is_nil(s.second);
    if (x_nil && y_nil) return Nil{};
    if (y_nil) return Cons<LcsSeed, LcsSeed>{s, LcsSeed(tail_of(s.first), second)};
    return Cons<LcsSeed, LcsSeed>{s, LcsSeed(s.first, tail_of(s.second))};
  };
  return dyna<LcsSig, long>(lcs_alg(s2.size()), g, LcsSeed(chars(s1), second), fuel);
}

long lcs_chrono(const std::string& s1, const std::string& s2, Fuel fuel) {
  using F = Free<LcsSig, LcsSeed>;
  List<char> second = chars(s2);
  auto row = [second](const LcsSeed& s) -> ListF<LcsSeed, F> {
    bool x_nil = is_nil(s.first);
    std::vector<LcsSeed> entries;
    for (List<char> y = s.second;; y = tail_of(y)) {
      if (x_nil && is_nil(y)) break;
      entries.emplace_back(s.first, y);
      if (is_nil(y)) break;
    }
    if (entries.empty()) return Nil{};
    F rest = x_nil ? op<LcsSig, LcsSeed>(ListF<LcsSeed, F>(Nil{}))
                   : ret<LcsSig, LcsSeed>(LcsSeed(tail_of(s.first), second));
    for (std::size_t i = entries.size(); i-- > 1;)
      rest = op<LcsSig, LcsSeed>(ListF<LcsSeed, F>(Cons<LcsSeed, F>{entries[i], rest}));
    return Cons<LcsSeed, F>{entries.front(), rest};
  };
  return chrono<LcsSig, long>(lcs_alg(s2.size()), row, LcsSeed(chars(s1), second), fuel);
}

// --- futu -----------------------------------------------------------------

CoList<char> rld(const Runs& runs, Fuel fuel) {
  using Run = std::pair<long, char>;
  using F = Free<ListSig<char>, Runs>;
  for (const Runs* cur = &runs; const auto* c = uncons(*cur); cur = &c->tail)
    if (c->head.first <= 0) throw SchemeError("run lengths must be positive, got " + std::to_string(c->head.first));
  auto meter = std::make_shared<Fuel>(fuel);
  return futu<ListSig<char>>(
      [meter](const Runs& rs) -> ListF<char, F> {
        const auto* c = std::get_if<Cons<Run, Runs>>(&rs.layer());
        if (!c) return Nil{};
        auto [n, ch] = c->head;
        F rest = ret<ListSig<char>, Runs>(c->tail);
        for (long i = 1; i < n; ++i) {
          meter->consume();
          rest = op<ListSig<char>, Runs>(ListF<char, F>(Cons<char, F>{ch, rest}));
        }
        meter->consume();
        return Cons<char, F>{ch, rest};
      },
      runs);
}

CoList<char> rld_ana(const Runs& runs) {
  using Run = std::pair<long, char>;
  return ana<ListSig<char>>(
      [](const Runs& rs) -> ListF<char, Runs> {
        const auto* c = std::get_if<Cons<Run, Runs>>(&rs.layer());
        if (!c) return Nil{};
        auto [n, ch] = c->head;
        if (n <= 0) throw SchemeError("run lengths must be positive, got " + std::to_string(n));
        if (n == 1) return Cons<char, Runs>{ch, c->tail};
        return Cons<char, Runs>{ch, cons(Run(n - 1, ch), c->tail)};
      },
      runs);
}

// --- monadic --------------------------------------------------------------

std::vector<std::string> print_tree(const Tree<long>& t, bool left_to_right) {
  using M = LogMonad<std::string>;
  using L = Logged<std::string, Unit>;
  auto print_elem = [](const TreeF<long, Unit>& l) -> L {
    if (const auto* n = std::get_if<Node<long, Unit>>(&l)) return M::tell(std::to_string(n->label));
    return M::unit(Unit{});
  };
  L out = left_to_right ? mcata<L>(LeftToRight{}, print_elem, t) : mcata<L>(RightToLeft{}, print_elem, t);
  return out.log;
}

std::pair<std::vector<std::string>, std::vector<std::string>> sequencing_counterexample() {
  using M = LogMonad<std::string>;
  auto nested = [](std::string first, std::string later) {
    return M::bind(M::tell(std::move(first)), [later](const Unit&) { return M::unit(M::tell(later)); });
  };
  using Outer = decltype(nested("", ""));
  TreeF<int, Outer> c = Node<int, Outer>{nested("A", "C"), 0, nested("B", "D")};
  auto [lhs, rhs] = join_commutation_sides<M, TreeSig<int>, LeftToRight, Unit>(LeftToRight{}, c);
  return {lhs.log, rhs.log};
}

Tree<long> ran_tree(long n, std::uint64_t seed, Fuel fuel) {
  if (n < 0) throw SchemeError("tree height must be non-negative");
  using Layer1 = TreeF<long, long>;
  auto gen = [](const long& k) -> Random<Layer1> {
    if (k == 0) return RandomMonad::unit(Layer1(Empty{}));
    return RandomMonad::bind(random_below(1000), [k](const std::int64_t& a) {
      return RandomMonad::unit(Layer1(Node<long, long>{k - 1, static_cast<long>(a), k - 1}));
    });
  };
  return run_random(mana<TreeSig<long>>(LeftToRight{}, gen, n, fuel), seed);
}

// --- parsing --------------------------------------------------------------

long parse_long(const std::string& token) {
  long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) throw UsageError("not an integer: '" + token + "'");
  return value;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(const std::string& s) : s_(s) {}

  Tree<long> run() {
    Tree<long> t = tree();
    skip();
    if (pos_ != s_.size()) fail();
    return t;
  }

 private:
  [[noreturn]] void fail() const {
    throw UsageError("malformed tree at column " + std::to_string(pos_ + 1) + ", expected '.' or '(l e r)'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  Tree<long> tree() {
    skip();
    if (pos_ >= s_.size()) fail();
    if (s_[pos_] == '.') {
      ++pos_;
      return empty_tree<long>();
    }
    if (s_[pos_] != '(') fail();
    ++pos_;
    Tree<long> left = tree();
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (s_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(s_[pos_])))) ++pos_;
    long label = parse_long(s_.substr(start, pos_ - start));
    Tree<long> right = tree();
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail();
    ++pos_;
    return node(std::move(left), label, std::move(right));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Tree<long> parse_tree(const std::string& text) { return TreeParser(text).run(); }

std::pair<long, char> parse_run(const std::string& token) {
  auto colon = token.rfind(':');
  if (colon == std::string::npos || colon + 2 != token.size())
    throw UsageError("expected a run as n:c, got '" + token + "'");
  long n = parse_long(token.substr(0, colon));
  return {n, token.back()};
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_long(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

// --- registry -------------------------------------------------------------

namespace {

using Args = std::vector<std::string>;

void arity(const Args& args, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (args.size() < lo || args.size() > hi) throw UsageError("usage: " + usage);
}

std::vector<long> longs(const Args& args, std::size_t from = 0) {
  std::vector<long> out;
  for (std::size_t i = from; i < args.size(); ++i) out.push_back(parse_long(args[i]));
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_same_v<T, std::string>)
      out += xs[i];
    else
      out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_words(const Args& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? " " : "") + args[i];
  return out;
}

/// Codata is printed up to `depth` elements; a longer stream ends in "...".
template <class A, class Render>
std::string render_prefix(const CoList<A>& xs, std::size_t depth, const std::string& sep, Render render) {
  auto prefix = take(xs, depth);
  std::string out;
  for (std::size_t i = 0; i < prefix.items.size(); ++i) out += (i ? sep : "") + render(prefix.items[i]);
  if (!prefix.complete) out += sep + "...";
  return out;
}

std::string render_longs(const CoList<long>& xs, std::size_t depth) {
  return render_prefix(xs, depth, " ", [](long x) { return std::to_string(x); });
}

std::string render_longs(const std::vector<long>& xs, std::size_t depth) {
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < depth; ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  if (xs.size() > depth) out += " ...";
  return out;
}

std::uint64_t natural(const std::string& token) {
  long v = parse_long(token);
  if (v < 0) throw SchemeError("expected a non-negative integer, got " + token);
  return static_cast<std::uint64_t>(v);
}

std::vector<std::pair<long, char>> runs_of(const Args& args) {
  std::vector<std::pair<long, char>> runs;
  for (const auto& a : args) runs.push_back(parse_run(a));
  return runs;
}

Store store_of(const Args& args) {
  Store store;
  for (std::size_t i = 1; i < args.size(); ++i) store[static_cast<int>(i - 1)] = parse_long(args[i]);
  return store;
}

std::string show_tree_direct(const Tree<long>& t) {
  const auto* n = std::get_if<Node<long, Tree<long>>>(&t.layer());
  if (!n) return ".";
  return "(" + show_tree_direct(n->left) + " " + std::to_string(n->label) + " " + show_tree_direct(n->right) + ")";
}

Tree<long> sum_path_direct(const Tree<long>& t, long s) {
  const auto* n = std::get_if<Node<long, Tree<long>>>(&t.layer());
  if (!n) return empty_tree<long>();
  long here = s + n->label;
  return node(sum_path_direct(n->left, here), here, sum_path_direct(n->right, here));
}

// A tree is perfect exactly when it has 2^depth - 1 nodes.
std::pair<std::size_t, std::size_t> nodes_and_depth(const Tree<long>& t) {
  const auto* n = std::get_if<Node<long, Tree<long>>>(&t.layer());
  if (!n) return {0, 0};
  auto [nl, dl] = nodes_and_depth(n->left);
  auto [nr, dr] = nodes_and_depth(n->right);
  return {nl + nr + 1, std::max(dl, dr) + 1};
}

bool perfect_direct(const Tree<long>& t) {
  auto [n, d] = nodes_and_depth(t);
  return d < 63 && n == (std::size_t{1} << d) - 1;
}

std::string godel_text(const godel::Expr& e) { return godel::encode(e).str() + "\n" + godel::show(e); }

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<GalleryEntry> build() {
  std::vector<GalleryEntry> out;
  auto add = [&out](std::string name, std::string scheme, std::string usage, Runner run,
                    std::optional<Runner> oracle = std::nullopt) {
    out.push_back(GalleryEntry{std::move(name), std::move(scheme), std::move(usage), std::move(run), std::move(oracle)});
  };

  add(
      "qsort", "hylo", "qsort <int>...",
      [](const Args& a, const RunOptions& o) {
        return join(conv_mu_inv(qsort(conv_mu(longs(a)), o.fuel)));
      },
      [](const Args& a, const RunOptions&) { return join(oracle::sorted(longs(a))); });

  add(
      "lis", "histo", "lis <int>...",
      [](const Args& a, const RunOptions&) { return std::to_string(lis(conv_mu(longs(a))).length); },
      [](const Args& a, const RunOptions&) { return std::to_string(oracle::lis_dp(longs(a))); });

  add(
      "lcs", "dyna", "lcs <string> <string>",
      [](const Args& a, const RunOptions& o) {
        arity(a, 2, 2, "lcs <string> <string>");
        return std::to_string(lcs(a[0], a[1], o.fuel));
      },
      [](const Args& a, const RunOptions&) {
        arity(a, 2, 2, "lcs <string> <string>");
        return std::to_string(oracle::lcs_dp(a[0], a[1]));
      });

  add(
      "rld", "futu", "rld <n:c>...",
      [](const Args& a, const RunOptions& o) {
        auto decoded = rld(conv_mu(runs_of(a)), o.fuel);
        return render_prefix(decoded, o.depth, "", [](char c) { return std::string(1, c); });
      },
      [](const Args& a, const RunOptions& o) {
        auto runs = runs_of(a);
        for (const auto& r : runs)
          if (r.first <= 0) throw SchemeError("run lengths must be positive, got " + std::to_string(r.first));
        auto s = oracle::rld_expand(runs);
        return s.size() > o.depth ? s.substr(0, o.depth) + "..." : s;
      });

  add(
      "fib", "mutu", "fib <n>",
      [](const Args& a, const RunOptions&) {
        arity(a, 1, 1, "fib <n>");
        return fib(nat(natural(a[0]))).str();
      },
      [](const Args& a, const RunOptions&) {
        arity(a, 1, 1, "fib <n>");
        return oracle::fib(natural(a[0])).str();
      });

  add(
      "factorial", "para", "factorial <n>",
      [](const Args& a, const RunOptions&) {
        arity(a, 1, 1, "factorial <n>");
        return factorial(nat(natural(a[0]))).str();
      },
      [](const Args& a, const RunOptions&) {
        arity(a, 1, 1, "factorial <n>");
        return oracle::factorial(natural(a[0])).str();
      });

  add(
      "ack", "cata", "ack <m> <n>",
      [](const Args& a, const RunOptions& o) {
        arity(a, 2, 2, "ack <m> <n>");
        auto m = natural(a[0]);
        auto n = natural(a[1]);
        return std::to_string(nat_value(ack(nat(m), nat(n), o.fuel)));
      },
      [](const Args& a, const RunOptions&) {
        arity(a, 2, 2, "ack <m> <n>");
        return std::to_string(oracle::ack(natural(a[0]), natural(a[1])));
      });

  add("interp", "cata", "interp <p1|swap|put-get> [cell0] [cell1]", [](const Args& a, const RunOptions&) {
    arity(a, 1, 3, "interp <p1|swap|put-get> [cell0] [cell1]");
    auto p = demo_program(a[0]);
    if (!p) throw UsageError("unknown program '" + a[0] + "'; choose p1, swap or put-get");
    return std::to_string(interp(*p, store_of(a)));
  });

  add(
      "merge", "ana", "merge <ints,...> <ints,...>",
      [](const Args& a, const RunOptions& o) {
        arity(a, 2, 2, "merge <ints,...> <ints,...>");
        return render_longs(merge(conv_nu(parse_long_list(a[0])), conv_nu(parse_long_list(a[1]))), o.depth);
      },
      [](const Args& a, const RunOptions& o) {
        arity(a, 2, 2, "merge <ints,...> <ints,...>");
        return render_longs(oracle::merge(parse_long_list(a[0]), parse_long_list(a[1])), o.depth);
      });

  add(
      "insert", "apo", "insert <y> <int>...",
      [](const Args& a, const RunOptions& o) {
        arity(a, 1, static_cast<std::size_t>(-1), "insert <y> <int>...");
        return render_longs(insert(parse_long(a[0]), conv_nu(longs(a, 1))), o.depth);
      },
      [](const Args& a, const RunOptions& o) {
        arity(a, 1, static_cast<std::size_t>(-1), "insert <y> <int>...");
        return render_longs(oracle::insert(parse_long(a[0]), longs(a, 1)), o.depth);
      });

  add(
      "wc", "para", "wc <word>...",
      [](const Args& a, const RunOptions&) {
        auto text = join_words(a);
        return std::to_string(wc(conv_mu(std::vector<char>(text.begin(), text.end()))));
      },
      [](const Args& a, const RunOptions&) { return std::to_string(oracle::wc(join_words(a))); });

  add(
      "perfect", "zygo", "perfect <tree>",
      [](const Args& a, const RunOptions&) { return std::string(perfect(parse_tree(join_words(a))) ? "true" : "false"); },
      [](const Args& a, const RunOptions&) {
        return std::string(perfect_direct(parse_tree(join_words(a))) ? "true" : "false");
      });

  add(
      "sumpath", "accu", "sumpath <tree>",
      [](const Args& a, const RunOptions&) { return show(sum_path(parse_tree(join_words(a)))); },
      [](const Args& a, const RunOptions&) { return show_tree_direct(sum_path_direct(parse_tree(join_words(a)), 0)); });

  add(
      "godel-roundtrip", "comutu", "godel-roundtrip <expression|code>",
      [](const Args& a, const RunOptions& o) {
        auto text = join_words(a);
        if (all_digits(text)) return godel_text(godel::decode_expr(godel::BigInt(text), o.fuel));
        return godel_text(godel::decode_expr(godel::encode(godel::parse_expr(text)), o.fuel));
      },
      [](const Args& a, const RunOptions&) {
        auto text = join_words(a);
        if (all_digits(text)) throw UsageError("the oracle only encodes");
        return godel_text(godel::parse_expr(text));
      });

  add("rantree", "mana", "rantree <height>", [](const Args& a, const RunOptions& o) {
    arity(a, 1, 1, "rantree <height>");
    return show(ran_tree(parse_long(a[0]), o.seed, o.fuel));
  });

  add("zeno", "hylo", "zeno <n>", [](const Args& a, const RunOptions& o) {
    arity(a, 1, 1, "zeno <n>");
    std::ostringstream os;
    os << zeno(parse_long(a[0]), o.fuel);
    return os.str();
  });

  return out;
}

}  // namespace

const std::vector<GalleryEntry>& entries() {
  static const std::vector<GalleryEntry> table = build();
  return table;
}

const GalleryEntry* find_entry(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace schemata::gallery
