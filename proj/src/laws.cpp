#include "schemata/laws.hpp"

#include <algorithm>
#include <array>

#include "schemata/gallery.hpp"

namespace schemata {

// ---------------------------------------------------------------------------
// Uniqueness sweep. Lists over {0, 1} of length <= 3 are numbered by length,
// then by their digits read as a binary number, so [] is 0, [0] is 1, [1] is
// 2, [0, 0] is 3 and so on; the tail of list i always has a smaller number.

namespace {

struct SmallList {
  int length;
  unsigned bits;  // head is the most significant of `length` bits
};

std::vector<SmallList> small_lists(int max_length) {
  std::vector<SmallList> out;
  for (int len = 0; len <= max_length; ++len)
    for (unsigned b = 0; b < (1u << len); ++b) out.push_back({len, b});
  return out;
}

std::size_t number_of(const SmallList& l) { return ((std::size_t{1} << l.length) - 1) + l.bits; }

List<int> to_mu(const SmallList& l) {
  std::vector<int> xs;
  for (int i = l.length - 1; i >= 0; --i) xs.push_back(static_cast<int>(l.bits >> i & 1));
  return conv_mu(xs);
}

}  // namespace

UniquenessSweep hylo_uniqueness_sweep(const SmallListAlg& alg, int carrier, int max_length) {
  auto lists = small_lists(max_length);
  const std::size_t n = lists.size();
  // The layer seen from list i: Nil, or Cons head (number of the tail).
  std::vector<int> head(n, -1);
  std::vector<std::size_t> tail(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& l = lists[i];
    if (l.length == 0) continue;
    head[i] = static_cast<int>(l.bits >> (l.length - 1) & 1);
    tail[i] = number_of({l.length - 1, l.bits & ((1u << (l.length - 1)) - 1)});
  }
  // alg at every (layer, value at the tail) pair, tabulated once.
  const int nil_value = alg(ListF<int, int>(Nil{}));
  std::array<std::vector<int>, 2> cons_value;
  for (int h = 0; h < 2; ++h)
    for (int v = 0; v < carrier; ++v) cons_value[h].push_back(alg(ListF<int, int>(Cons<int, int>{h, v})));

  UniquenessSweep out;
  out.domain_size = n;
  std::vector<int> x(n, 0);
  std::vector<int> found;
  while (true) {
    ++out.functions;
    bool square = true;
    for (std::size_t i = 0; i < n && square; ++i) {
      int rhs = head[i] < 0 ? nil_value : cons_value[head[i]][x[tail[i]]];
      square = x[i] == rhs;
    }
    if (square) {
      ++out.solutions;
      found = x;
    }
    // Next function in base `carrier`.
    std::size_t k = 0;
    while (k < n && ++x[k] == carrier) x[k++] = 0;
    if (k == n) break;
  }
  if (out.solutions == 1) {
    out.solution_is_cata = true;
    for (std::size_t i = 0; i < n; ++i)
      if (cata<int>(alg, to_mu(lists[i])) != found[i]) out.solution_is_cata = false;
  }
  return out;
}

std::vector<std::pair<std::string, SmallListAlg>> sweep_algebras() {
  auto body = [](const ListF<int, int>& l, int nil, auto cons) {
    if (const auto* c = std::get_if<Cons<int, int>>(&l)) return cons(c->head, c->tail);
    return nil;
  };
  return {
      {"length mod 3",
       [body](const ListF<int, int>& l) { return body(l, 0, [](int, int r) { return (r + 1) % 3; }); }},
      {"sum mod 3", [body](const ListF<int, int>& l) { return body(l, 0, [](int h, int r) { return (h + r) % 3; }); }},
      {"head or 2", [body](const ListF<int, int>& l) { return body(l, 2, [](int h, int) { return h; }); }},
      {"count ones, saturating",
       [body](const ListF<int, int>& l) { return body(l, 0, [](int h, int r) { return std::min(2, r + h); }); }},
  };
}

// ---------------------------------------------------------------------------

namespace {

using LL = ListF<long, long>;

Gen<long> small_long() {
  return [](Rng& rng, std::size_t) { return static_cast<long>(draw_int(rng, -50, 50)); };
}

// Layers of the program signature: Ret, Put, or Get with an affine
// continuation.
Gen<ProgF<long, long, long>> gen_prog_layer() {
  return [](Rng& rng, std::size_t) -> ProgF<long, long, long> {
    auto addr = static_cast<int>(draw_int(rng, 0, 3));
    switch (draw_int(rng, 0, 2)) {
      case 0:
        return prog::Ret<long>{static_cast<long>(draw_int(rng, -50, 50))};
      case 1: {
        long v = draw_int(rng, -50, 50);
        return prog::Put<long, long>{addr, v, static_cast<long>(draw_int(rng, -50, 50))};
      }
      default: {
        long a = draw_int(rng, -5, 5);
        long b = draw_int(rng, -50, 50);
        return prog::Get<long, long>{addr, [a, b](const long& s) { return a * s + b; }};
      }
    }
  };
}

// Layers with a function inside compare by applying it to sample states.
struct ProgLayerEq {
  bool operator()(const ProgF<long, long, long>& x, const ProgF<long, long, long>& y) const {
    if (x.index() != y.index()) return false;
    if (const auto* r = std::get_if<prog::Ret<long>>(&x)) return r->value == std::get<prog::Ret<long>>(y).value;
    if (const auto* p = std::get_if<prog::Put<long, long>>(&x)) {
      const auto& q = std::get<prog::Put<long, long>>(y);
      return p->addr == q.addr && p->value == q.value && p->next == q.next;
    }
    const auto& g = std::get<prog::Get<long, long>>(x);
    const auto& h = std::get<prog::Get<long, long>>(y);
    if (g.addr != h.addr) return false;
    for (long s : {-7L, -1L, 0L, 1L, 2L, 3L, 100L})
      if (g.next(s) != h.next(s)) return false;
    return true;
  }
};

long length_alg(const LL& l) {
  return match(l, [](const Nil&) { return 0L; }, [](const Cons<long, long>& c) { return c.tail + 1; });
}

long sum_alg(const LL& l) {
  return match(l, [](const Nil&) { return 0L; }, [](const Cons<long, long>& c) { return c.head + c.tail; });
}

// Plain structural recursion, to be certified as cata length_alg.
long length_direct(const List<long>& xs) {
  long n = 0;
  for (const List<long>* cur = &xs; const auto* c = std::get_if<Cons<long, List<long>>>(&cur->layer()); cur = &c->tail)
    ++n;
  return n;
}

ListF<long, long> countdown(const long& n) {
  if (n <= 0) return Nil{};
  return Cons<long, long>{n, n - 1};
}

constexpr double kLinspaceEnd = 1.0;
constexpr double kLinspaceStep = 0.25;

ListF<double, double> linspace_step(const double& i) {
  if (i < kLinspaceEnd) return Cons<double, double>{i, i + kLinspaceStep};
  return Nil{};
}

// The unfoldr-style definition: build the whole list, then view it as codata.
CoList<double> linspace_unfoldr(const double& s) {
  std::vector<double> out;
  for (double i = s; i < kLinspaceEnd; i += kLinspaceStep) out.push_back(i);
  return conv_nu(out);
}

}  // namespace

std::vector<LawReport> run_law_suite(std::uint64_t seed, std::size_t cases) {
  CheckConfig cfg;
  cfg.seed = seed;
  cfg.cases = cases;
  cfg.size = 20;
  CheckConfig functor_cfg = cfg;
  functor_cfg.cases = std::max<std::size_t>(cases, 1000);

  std::vector<LawReport> out;
  auto longs = small_long();

  out.push_back(check_functor_laws<ListSig<long>>("functor laws (ListF)", gen_list_layer<long, long>(longs, longs),
                                                  functor_cfg));
  out.push_back(check_functor_laws<TreeSig<long>>("functor laws (TreeF)", gen_tree_layer<long, long>(longs, longs),
                                                  functor_cfg));
  out.push_back(check_functor_laws<NatSig>("functor laws (NatF)", gen_nat_layer<long>(longs), functor_cfg));
  out.push_back(check_functor_laws<ProgSig<long, long>>("functor laws (ProgF)", gen_prog_layer(), functor_cfg,
                                                        ProgLayerEq{}));

  auto lists = gen_list<long>(longs);
  auto trees = gen_tree<long>(longs);
  auto list_layers = gen_list_layer<long, List<long>>(longs, lists);

  out.push_back(check_cata_universal<ListSig<long>, long>("cata universal property (length)", length_alg,
                                                          length_direct, list_layers, cfg));
  out.push_back(check_cata_universal<ListSig<long>, long>(
      "cata universal property (sum)", sum_alg, [](const List<long>& xs) { return cata<long>(sum_alg, xs); },
      list_layers, cfg));

  Gen<long> counts = [](Rng& rng, std::size_t size) { return static_cast<long>(draw_int(rng, -2, static_cast<std::int64_t>(size))); };
  out.push_back(check_ana_universal<ListSig<long>, long>(
      "ana universal property (countdown)", countdown, [](const long& n) { return ana<ListSig<long>>(countdown, n); },
      counts, 30, cfg));
  Gen<double> starts = [](Rng& rng, std::size_t) { return static_cast<double>(draw_int(rng, -40, 8)) / 4.0; };
  out.push_back(check_ana_universal<ListSig<double>, double>("ana universal property (linspace, unfoldr style)",
                                                             linspace_step, linspace_unfoldr, starts, 30, cfg));

  Gen<List<long>> small_lists_gen = [lists](Rng& rng, std::size_t) { return lists(rng, 60); };
  out.push_back(check_computation<TreeSig<long>, List<long>, List<long>>("HyloComp (qsort)", gallery::combine,
                                                                         gallery::partition, small_lists_gen, cfg));
  CheckConfig zeno_cfg = cfg;
  zeno_cfg.fuel = Fuel(200);
  Gen<gallery::GeoSeed> geo_seeds = [](Rng& rng, std::size_t) {
    return gallery::GeoSeed{static_cast<long>(draw_int(rng, 1, 1000)), 0};
  };
  out.push_back(check_computation<ListSig<double>, double, gallery::GeoSeed>(
      "HyloComp (zeno, divergent)", gallery::sum_alg, gallery::geo, geo_seeds, zeno_cfg));

  auto in_list = [](const ListF<long, List<long>>& l) { return construct<ListSig<long>>(l); };
  auto out_list = [](const List<long>& m) { return destructure(m); };
  out.push_back(check_reflection<ListSig<long>, List<long>>("HyloRefl (lists)", in_list, out_list, lists, cfg));
  auto in_tree = [](const TreeF<long, Tree<long>>& l) { return construct<TreeSig<long>>(l); };
  auto out_tree = [](const Tree<long>& m) { return destructure(m); };
  CheckConfig tree_cfg = cfg;
  tree_cfg.size = 8;
  out.push_back(check_reflection<TreeSig<long>, Tree<long>>("HyloRefl (trees)", in_tree, out_tree, trees, tree_cfg));

  Gen<CoList<long>> colists = [lists](Rng& rng, std::size_t size) { return mu_to_nu(lists(rng, size)); };
  out.push_back(check_ana_reflection<ListSig<long>>("ana reflection (lists)", colists, 30, cfg));

  auto f = [](const long& x) { return 2 * x; };
  auto g = [f](const LL& l) {
    return match(l, [f](const Nil&) { return f(0); }, [f](const Cons<long, long>& c) { return f(c.head) + c.tail; });
  };
  out.push_back(check_fusion<ListSig<long>, long, long>("fusion (sum . map f = f . sum)", f, sum_alg, g,
                                                        gen_list_layer<long, long>(longs, longs), lists, cfg));

  auto count_nodes = [](const TreeF<long, long>& t) {
    return match(t, [](const Empty&) { return 0L; }, [](const Node<long, long>& n) { return n.left + 1 + n.right; });
  };
  auto tree_of_lists = gen_tree_layer<long, List<long>>(longs, lists);
  out.push_back(check_hylo_fusion<TreeSig<long>, List<long>, long, List<long>>(
      "hylo fusion (length . qsort)", length_direct, gallery::combine, count_nodes, gallery::partition,
      tree_of_lists, small_lists_gen, cfg));

  for (const auto& [name, alg] : sweep_algebras()) {
    auto sweep = hylo_uniqueness_sweep(alg);
    LawReport r{"HyloUniq (" + name + ")"};
    r.cases = sweep.functions;
    if (sweep.solutions != 1 || !sweep.solution_is_cata) {
      auto solutions = sweep.solutions;
      r.counterexample = Counterexample{"all functions on " + std::to_string(sweep.domain_size) + " lists",
                                        "solutions=" + std::to_string(solutions), "solutions=1",
                                        [solutions] { return solutions != 1; }};
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace schemata
