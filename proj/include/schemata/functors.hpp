#pragma once

// The shipped base functors: lists, binary trees, naturals and the small
// mutable-memory language ProgF.

#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "schemata/fix.hpp"

namespace schemata {

template <class F, class X>
using mapped_t = std::decay_t<std::invoke_result_t<F&, const X&>>;

// ---------------------------------------------------------------------------
// ListF a x = Nil | Cons a x

struct Nil {
  friend bool operator==(const Nil&, const Nil&) = default;
};

template <class A, class X>
struct Cons {
  A head;
  X tail;
  friend bool operator==(const Cons&, const Cons&) = default;
};
template <class A, class X>
Cons(A, X) -> Cons<A, X>;

template <class A, class X>
using ListF = std::variant<Nil, Cons<A, X>>;

template <class A>
struct ListSig {
  template <class X>
  using layer = ListF<A, X>;

  template <class F, class X>
  static ListF<A, mapped_t<F, X>> fmap(F&& f, const ListF<A, X>& l) {
    if (const auto* c = std::get_if<Cons<A, X>>(&l)) return Cons<A, mapped_t<F, X>>{c->head, f(c->tail)};
    return Nil{};
  }
};

template <class A>
using List = Mu<ListSig<A>>;
template <class A>
using CoList = Nu<ListSig<A>>;

template <class A>
List<A> nil() {
  return List<A>(Nil{});
}

template <class A>
List<A> cons(A head, List<A> tail) {
  return List<A>(Cons<A, List<A>>{std::move(head), std::move(tail)});
}

/// Built-in sequence to finite list.
template <class A>
List<A> conv_mu(const std::vector<A>& xs) {
  List<A> out = nil<A>();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = cons(*it, std::move(out));
  return out;
}

/// Finite list back to a built-in sequence.
template <class A>
std::vector<A> conv_mu_inv(const List<A>& xs) {
  std::vector<A> out;
  const List<A>* cur = &xs;
  while (const auto* c = std::get_if<Cons<A, List<A>>>(&cur->layer())) {
    out.push_back(c->head);
    cur = &c->tail;
  }
  return out;
}

template <class A>
bool is_nil(const List<A>& xs) {
  return std::holds_alternative<Nil>(xs.layer());
}

/// Built-in sequence to codata (shares the vector between all tails).
template <class A>
CoList<A> conv_nu(std::vector<A> xs) {
  using Seed = std::pair<std::shared_ptr<const std::vector<A>>, std::size_t>;
  return pack<ListSig<A>>(Seed{std::make_shared<const std::vector<A>>(std::move(xs)), 0},
                          [](const Seed& s) -> ListF<A, Seed> {
                            if (s.second >= s.first->size()) return Nil{};
                            return Cons<A, Seed>{(*s.first)[s.second], Seed{s.first, s.second + 1}};
                          });
}

/// Observes at most `limit` elements. `complete` is set when Nil was reached.
template <class A>
struct Prefix {
  std::vector<A> items;
  bool complete = false;
};

template <class A>
Prefix<A> take(const CoList<A>& xs, std::size_t limit) {
  Prefix<A> out;
  CoList<A> cur = xs;
  while (true) {
    auto layer = cur.observe();
    auto* c = std::get_if<Cons<A, CoList<A>>>(&layer);
    if (!c) {
      out.complete = true;
      return out;
    }
    if (out.items.size() == limit) return out;
    out.items.push_back(c->head);
    cur = c->tail;
  }
}

/// All elements of a codata list, spending one unit of fuel per layer.
template <class A>
std::vector<A> drain(const CoList<A>& xs, Fuel fuel = Fuel{}) {
  std::vector<A> out;
  CoList<A> cur = xs;
  while (true) {
    fuel.consume();
    auto layer = cur.observe();
    auto* c = std::get_if<Cons<A, CoList<A>>>(&layer);
    if (!c) return out;
    out.push_back(c->head);
    cur = c->tail;
  }
}

// ---------------------------------------------------------------------------
// TreeF e x = Empty | Node x e x

struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};

template <class E, class X>
struct Node {
  X left;
  E label;
  X right;
  friend bool operator==(const Node&, const Node&) = default;
};
template <class E, class X>
Node(X, E, X) -> Node<E, X>;

template <class E, class X>
using TreeF = std::variant<Empty, Node<E, X>>;

template <class E>
struct TreeSig {
  template <class X>
  using layer = TreeF<E, X>;

  template <class F, class X>
  static TreeF<E, mapped_t<F, X>> fmap(F&& f, const TreeF<E, X>& t) {
    if (const auto* n = std::get_if<Node<E, X>>(&t)) {
      auto left = f(n->left);
      auto right = f(n->right);
      return Node<E, mapped_t<F, X>>{std::move(left), n->label, std::move(right)};
    }
    return Empty{};
  }
};

template <class E>
using Tree = Mu<TreeSig<E>>;
template <class E>
using CoTree = Nu<TreeSig<E>>;

template <class E>
Tree<E> empty_tree() {
  return Tree<E>(Empty{});
}

template <class E>
Tree<E> node(Tree<E> left, E label, Tree<E> right) {
  return Tree<E>(Node<E, Tree<E>>{std::move(left), std::move(label), std::move(right)});
}

template <class E>
Tree<E> leaf(E label) {
  return node(empty_tree<E>(), std::move(label), empty_tree<E>());
}

// ---------------------------------------------------------------------------
// NatF x = Zero | Succ x

struct Zero {
  friend bool operator==(const Zero&, const Zero&) = default;
};

template <class X>
struct Succ {
  X pred;
  friend bool operator==(const Succ&, const Succ&) = default;
};
template <class X>
Succ(X) -> Succ<X>;

template <class X>
using NatF = std::variant<Zero, Succ<X>>;

struct NatSig {
  template <class X>
  using layer = NatF<X>;

  template <class F, class X>
  static NatF<mapped_t<F, X>> fmap(F&& f, const NatF<X>& n) {
    if (const auto* s = std::get_if<Succ<X>>(&n)) return Succ<mapped_t<F, X>>{f(s->pred)};
    return Zero{};
  }
};

using Nat = Mu<NatSig>;
using CoNat = Nu<NatSig>;

inline Nat nat(std::uint64_t n) {
  Nat out(Zero{});
  for (std::uint64_t i = 0; i < n; ++i) out = Nat(Succ<Nat>{std::move(out)});
  return out;
}

inline std::uint64_t nat_value(const Nat& n) {
  std::uint64_t v = 0;
  const Nat* cur = &n;
  while (const auto* s = std::get_if<Succ<Nat>>(&cur->layer())) {
    ++v;
    cur = &s->pred;
  }
  return v;
}

// ---------------------------------------------------------------------------
// ProgF s a x = Ret a | Put (Int, s) x | Get Int (s -> x)

namespace prog {

template <class A>
struct Ret {
  A value;
};

template <class S, class X>
struct Put {
  int addr;
  S value;
  X next;
};

template <class S, class X>
struct Get {
  int addr;
  std::function<X(const S&)> next;
};

}  // namespace prog

template <class S, class A, class X>
using ProgF = std::variant<prog::Ret<A>, prog::Put<S, X>, prog::Get<S, X>>;

template <class S, class A>
struct ProgSig {
  static constexpr bool lazy_positions = true;

  template <class X>
  using layer = ProgF<S, A, X>;

  template <class F, class X>
  static ProgF<S, A, mapped_t<F, X>> fmap(F&& f, const ProgF<S, A, X>& p) {
    using Y = mapped_t<F, X>;
    return match(
        p, [](const prog::Ret<A>& r) -> ProgF<S, A, Y> { return r; },
        [&f](const prog::Put<S, X>& put) -> ProgF<S, A, Y> {
          return prog::Put<S, Y>{put.addr, put.value, f(put.next)};
        },
        [&f](const prog::Get<S, X>& get) -> ProgF<S, A, Y> {
          return prog::Get<S, Y>{get.addr, [g = std::decay_t<F>(f), k = get.next](const S& s) { return g(k(s)); }};
        });
  }
};

template <class S, class A>
using Prog = Mu<ProgSig<S, A>>;

// ---------------------------------------------------------------------------
// Rendering used by diagnostics, the gallery and the CLI.

template <class A>
std::string show(const List<A>& xs) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& x : conv_mu_inv(xs)) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ']';
  return os.str();
}

/// `.` for Empty, `(left label right)` for Node.
template <class E>
std::string show(const Tree<E>& t) {
  std::ostringstream os;
  std::vector<std::variant<const Tree<E>*, std::string>> work{&t};
  while (!work.empty()) {
    auto item = std::move(work.back());
    work.pop_back();
    if (auto* text = std::get_if<std::string>(&item)) {
      os << *text;
      continue;
    }
    const auto& layer = std::get<const Tree<E>*>(item)->layer();
    if (const auto* n = std::get_if<Node<E, Tree<E>>>(&layer)) {
      std::ostringstream label;
      label << ' ' << n->label << ' ';
      work.emplace_back(std::string(")"));
      work.emplace_back(&n->right);
      work.emplace_back(label.str());
      work.emplace_back(&n->left);
      work.emplace_back(std::string("("));
    } else {
      os << '.';
    }
  }
  return os.str();
}

inline std::string show(const Nat& n) { return std::to_string(nat_value(n)); }

}  // namespace schemata
