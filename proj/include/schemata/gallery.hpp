#pragma once

// Worked examples, each written with the scheme it illustrates and, where
// one exists, a direct oracle in oracles.hpp. Examples over lists use Mu/Nu
// lists throughout; std::vector appears only at the command-line boundary.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemata/course.hpp"
#include "schemata/effects.hpp"
#include "schemata/fix.hpp"
#include "schemata/functors.hpp"
#include "schemata/godel.hpp"
#include "schemata/schemes.hpp"
#include "schemata/schemes_extra.hpp"

namespace schemata::gallery {

using BigInt = godel::BigInt;

/// Malformed command-line input, as opposed to a well-formed input outside
/// an example's domain.
class UsageError : public SchemeError {
 public:
  using SchemeError::SchemeError;
};

// --- cata -----------------------------------------------------------------

template <class A>
long length_(const List<A>& xs) {
  return cata<long>(
      [](const ListF<A, long>& l) {
        return match(l, [](const Nil&) { return 0L; }, [](const Cons<A, long>& c) { return 1 + c.tail; });
      },
      xs);
}

template <class A, class F>
auto map_(F f, const List<A>& xs) {
  using B = mapped_t<F, A>;
  return cata<List<B>>(
      [&f](const ListF<A, List<B>>& l) {
        return match(
            l, [](const Nil&) { return nil<B>(); }, [&f](const Cons<A, List<B>>& c) { return cons(f(c.head), c.tail); });
      },
      xs);
}

/// foldr f e = cata alg where alg Nil = e; alg (Cons a b) = f a b
template <class A, class B, class F>
B foldr_(F f, B e, const List<A>& xs) {
  return cata<B>(
      [&f, &e](const ListF<A, B>& l) {
        return match(l, [&e](const Nil&) { return e; }, [&f](const Cons<A, B>& c) { return B(f(c.head, c.tail)); });
      },
      xs);
}

template <class A>
List<A> append(const List<A>& xs, const List<A>& ys) {
  return foldr_<A, List<A>>([](const A& a, const List<A>& rest) { return cons(a, rest); }, ys, xs);
}

template <class A>
List<A> concat_(const List<List<A>>& xss) {
  return foldr_<List<A>, List<A>>([](const List<A>& xs, const List<A>& rest) { return append(xs, rest); }, nil<A>(),
                                  xss);
}

// --- interp ---------------------------------------------------------------

using Store = std::map<int, long>;
using Program = Prog<long, long>;

/// interp = cata handle, giving each program a function of the store.
long interp(const Program& p, const Store& store);

/// Reads cell 0, writes back its successor, returns the old value.
Program p1();
/// Exchanges cells 0 and 1 and returns the new cell 0.
Program p_swap();
/// Writes 7 to cell 0 and reads it back.
Program p_put_get();
/// p1, swap or put-get by name.
std::optional<Program> demo_program(const std::string& name);

// --- ana ------------------------------------------------------------------

/// linspace s e n: s, s + step, ... while below e, step = (e - s) / (n + 1).
CoList<double> linspace(double s, double e, long n);
/// n, n + 1, n + 2, ...
CoList<long> from(long n);
/// Merges two ordered lists; on ties the second list goes first.
CoList<long> merge(const CoList<long>& x, const CoList<long>& y);
/// merge written as coaccu, threading the second list as the parameter.
CoList<long> merge_coaccu(const CoList<long>& x, const CoList<long>& y);

// --- hylo -----------------------------------------------------------------

TreeF<long, List<long>> partition(const List<long>& xs);
List<long> combine(const TreeF<long, List<long>>& t);
/// qsort = hylo combine partition
List<long> qsort(const List<long>& xs, Fuel fuel = Fuel{});

/// The seed 1 / (base * 2^doublings) of the geometric series.
struct GeoSeed {
  long base;
  int doublings;
};
ListF<double, GeoSeed> geo(const GeoSeed& s);
double sum_alg(const ListF<double, double>& l);
/// zeno = hylo sum geo; never returns, so it always runs out of fuel.
double zeno(long n, Fuel fuel);

// --- accu -----------------------------------------------------------------

List<long> reverse_(const List<long>& xs);
/// Labels every node with the sum of the labels on its path from the root.
Tree<long> sum_path(const Tree<long>& t);

// --- mutu -----------------------------------------------------------------

bool is_even(const Nat& n);
bool is_odd(const Nat& n);
BigInt fib(const Nat& n);

// --- comutu -----------------------------------------------------------------

/// decode . encode, with decoding by comutu.
godel::Expr godel_roundtrip(const godel::Expr& e);

// --- para -----------------------------------------------------------------

BigInt factorial(const Nat& n);
/// Word count; whitespace is ASCII space, tab, newline, vertical tab,
/// form feed and carriage return.
long wc(const List<char>& text);
/// Nested cata over Nat -> Nat. Each inner algebra step spends one unit of
/// fuel.
Nat ack(const Nat& m, const Nat& n, Fuel fuel = Fuel{});

// --- apo ------------------------------------------------------------------

CoList<long> maphd(const std::function<long(long)>& f, const CoList<long>& xs);
CoList<long> insert(long y, const CoList<long>& xs);

// --- zygo -----------------------------------------------------------------

bool perfect(const Tree<long>& t);
long depth(const Tree<long>& t);

// --- histo ----------------------------------------------------------------

struct LisResult {
  long length;
  /// Algebra applications plus findNext steps.
  std::uint64_t steps;
};
LisResult lis(const List<long>& xs);

// --- dyna / chrono --------------------------------------------------------

using LcsSeed = std::pair<List<char>, List<char>>;
long lcs(const std::string& s1, const std::string& s2, Fuel fuel = Fuel{});
/// The same table built by chrono, with a coalgebra that emits a whole row
/// of subproblems per step.
long lcs_chrono(const std::string& s1, const std::string& s2, Fuel fuel = Fuel{});

// --- futu -----------------------------------------------------------------

using Runs = List<std::pair<long, char>>;
/// Run-length decoding by futu. Every count must be positive; each emitted
/// character spends one unit of fuel.
CoList<char> rld(const Runs& runs, Fuel fuel = Fuel{});
/// Run-length decoding by ana, one character per step.
CoList<char> rld_ana(const Runs& runs);

// --- monadic --------------------------------------------------------------

/// mcata over Log: every node logs its label after its subtrees.
std::vector<std::string> print_tree(const Tree<long>& t, bool left_to_right);

/// Both sides of the join-commutation condition for lToR at
///   c = Node (tell A >> return (tell C)) _ (tell B >> return (tell D)).
std::pair<std::vector<std::string>, std::vector<std::string>> sequencing_counterexample();

/// mana lToR gen; gen 0 = Empty, gen n = Node (n-1) a (n-1), labels in [0, 1000).
Tree<long> ran_tree(long n, std::uint64_t seed, Fuel fuel = Fuel{});

// --- parsing helpers shared with the CLI ----------------------------------

long parse_long(const std::string& token);
/// `.` for Empty and `(l e r)` for Node.
Tree<long> parse_tree(const std::string& text);
/// `n:c` with n > 0.
std::pair<long, char> parse_run(const std::string& token);
/// Comma-separated integers; the empty string is the empty list.
std::vector<long> parse_long_list(const std::string& text);

// --- registry -------------------------------------------------------------

struct RunOptions {
  Fuel fuel = Fuel{};
  std::uint64_t seed = 42;
  std::size_t depth = 20;
};

using Runner = std::function<std::string(const std::vector<std::string>& args, const RunOptions& opts)>;

struct GalleryEntry {
  std::string name;
  /// The scheme the example is written with.
  std::string scheme;
  std::string usage;
  Runner run;
  /// Independent computation of the same output, where one exists.
  std::optional<Runner> oracle;
};

const std::vector<GalleryEntry>& entries();
const GalleryEntry* find_entry(const std::string& name);

}  // namespace schemata::gallery
