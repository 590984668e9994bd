#include "aarf/toric.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>
#include <tuple>

namespace aarf {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

// Component labels in first-occurrence order for the vertices of a fiber.
// Two factorizations are joined when their supports overlap; per-column
// buckets avoid materializing the quadratic edge set.
std::pair<std::vector<int>, int> fiber_components(const std::vector<std::vector<Int>>& vertices,
                                                  std::size_t width) {
  UnionFind uf(static_cast<int>(vertices.size()));
  std::vector<int> anchor(width, -1);
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (std::size_t i = 0; i < width; ++i)
      if (vertices[v][i] > 0) {
        if (anchor[i] >= 0)
          uf.unite(static_cast<int>(v), anchor[i]);
        else
          anchor[i] = static_cast<int>(v);
      }
  std::vector<int> root_label(vertices.size(), -1);
  std::vector<int> label(vertices.size(), -1);
  int count = 0;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    int r = uf.find(static_cast<int>(v));
    if (root_label[static_cast<std::size_t>(r)] < 0) root_label[static_cast<std::size_t>(r)] = count++;
    label[v] = root_label[static_cast<std::size_t>(r)];
  }
  return {std::move(label), count};
}

}  // namespace

std::vector<std::pair<int, int>> FiberGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      bool overlap = false;
      for (std::size_t i = 0; i < vertices[a].size() && !overlap; ++i)
        overlap = vertices[a][i] > 0 && vertices[b][i] > 0;
      if (overlap) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return out;
}

FiberGraph fiber_graph(const NumericalSemigroup& H, std::span<const Int> columns, Int s) {
  FiberGraph g;
  g.degree = s;
  if (s < 0 || !H.contains(s)) return g;
  g.vertices = enumerate_factorizations(columns, s);
  auto [label, count] = fiber_components(g.vertices, columns.size());
  g.component = std::move(label);
  g.component_count = count;
  return g;
}

FiberGraph fiber_graph(const NumericalSemigroup& H, Int s) {
  return fiber_graph(H, H.generators(), s);
}

bool fiber_connected(const NumericalSemigroup& H, std::span<const Int> columns, Int s) {
  return fiber_graph(H, columns, s).component_count <= 1;
}

int support_graph_components(const NumericalSemigroup& H, std::span<const Int> columns, Int s) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (H.contains(s - columns[i])) idx.push_back(static_cast<int>(i));
  if (idx.empty()) return 0;
  UnionFind uf(static_cast<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (H.contains(s - columns[static_cast<std::size_t>(idx[a])] -
                     columns[static_cast<std::size_t>(idx[b])]))
        uf.unite(static_cast<int>(a), static_cast<int>(b));
  int count = 0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    if (uf.find(static_cast<int>(a)) == static_cast<int>(a)) ++count;
  return count;
}

namespace {

// Fibers at every disconnected degree. The support graph on the columns has
// exactly as many components as the fiber (each factorization's support is a
// clique; two factorizations sharing a column are adjacent), so the cheap
// scan locates candidates and the fiber is built only there. The two counts
// are compared as a self-check.
std::vector<FiberGraph> betti_fibers(const NumericalSemigroup& H, std::span<const Int> columns) {
  std::vector<FiberGraph> out;
  const Int lo = 2 * *std::min_element(columns.begin(), columns.end());
  const Int hi = checked_add(H.conductor() - 1,
                             checked_mul(2, *std::max_element(columns.begin(), columns.end())));
  for (Int s = lo; s <= hi; ++s) {
    if (!H.contains(s)) continue;
    int sup = support_graph_components(H, columns, s);
    if (sup <= 1) continue;
    FiberGraph g = fiber_graph(H, columns, s);
    if (g.component_count != sup)
      throw ConstructionInvalid("support-graph and fiber component counts disagree");
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Int> betti_degrees(const NumericalSemigroup& H, std::span<const Int> columns) {
  std::vector<Int> out;
  for (const auto& g : betti_fibers(H, columns)) out.push_back(g.degree);
  return out;
}

MinimalPresentation minimal_generating_set(const NumericalSemigroup& H,
                                           std::span<const Int> columns, bool reverse_tiebreak) {
  MinimalPresentation mp;
  std::vector<std::pair<Int, Binomial>> gens;
  for (const auto& g : betti_fibers(H, columns)) {
    // one representative per component: the lexicographically least vertex
    // (greatest under the reversed tie-break)
    std::vector<const std::vector<Int>*> rep(static_cast<std::size_t>(g.component_count), nullptr);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      auto& slot = rep[static_cast<std::size_t>(g.component[v])];
      if (!slot || (reverse_tiebreak ? g.vertices[v] > *slot : g.vertices[v] < *slot))
        slot = &g.vertices[v];
    }
    std::vector<std::vector<Int>> reps;
    for (auto* r : rep) reps.push_back(*r);
    std::sort(reps.begin(), reps.end());
    std::vector<Int> delta(columns.size());
    for (std::size_t k = 1; k < reps.size(); ++k) {
      for (std::size_t t = 0; t < delta.size(); ++t) delta[t] = reps[k][t] - reps[0][t];
      gens.emplace_back(g.degree, make_binomial(delta, columns));
    }
  }
  std::sort(gens.begin(), gens.end(),
            [](const auto& a, const auto& b) { return std::tie(a.first, a.second) < std::tie(b.first, b.second); });
  for (auto& [deg, bin] : gens) {
    mp.betti_degrees.push_back(deg);
    mp.generators.push_back(std::move(bin));
  }
  mp.count = static_cast<Int>(mp.generators.size());
  return mp;
}

MinimalPresentation minimal_generating_set(const NumericalSemigroup& H) {
  return minimal_generating_set(H, H.generators());
}

TheoremVerdict is_minimally_generated_by_rf_relations(const NumericalSemigroup& H,
                                                      std::span<const Int> columns) {
  TheoremVerdict verdict;
  // All RF-relations over every pseudo-Frobenius element, bucketed by degree.
  std::map<Int, std::vector<Binomial>> by_degree;
  for (Int f : H.pseudo_frobenius())
    for (auto& b : all_rf_relations(H, columns, f).relations) by_degree[b.degree].push_back(b);
  for (auto& [deg, rels] : by_degree) {
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  }

  verdict.holds = true;
  for (const auto& g : betti_fibers(H, columns)) {
    std::map<std::vector<Int>, int> component_of;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) component_of[g.vertices[v]] = g.component[v];
    UnionFind uf(g.component_count);
    std::vector<Binomial> chosen;
    auto it = by_degree.find(g.degree);
    if (it != by_degree.end()) {
      // Kruskal over the sorted relations: ties between the same component
      // pair resolve to the lexicographically least (plus, minus).
      for (const auto& rel : it->second) {
        int ca = component_of.at(rel.plus);
        int cb = component_of.at(rel.minus);
        if (uf.find(ca) != uf.find(cb)) {
          uf.unite(ca, cb);
          chosen.push_back(rel);
        }
      }
    }
    bool spanned = static_cast<Int>(chosen.size()) == g.component_count - 1;
    if (!spanned) {
      verdict.holds = false;
      verdict.deficiency.push_back(g.degree);
    }
    verdict.witness[g.degree] = std::move(chosen);
  }
  return verdict;
}

TheoremVerdict is_minimally_generated_by_rf_relations(const AAPresentation& pres) {
  return is_minimally_generated_by_rf_relations(pres.semigroup(), pres.columns());
}

namespace {

std::optional<SweepRecord> sweep_one(Int m0, Int d, Int p, Int n, bool include_nonsymmetric) {
  std::optional<AAPresentation> pres;
  try {
    pres.emplace(m0, d, p, n);
  } catch (const Error&) {
    return std::nullopt;
  }
  SweepRecord rec;
  rec.m0 = m0;
  rec.d = d;
  rec.p = p;
  rec.n = n;
  rec.pf = pres->semigroup().pseudo_frobenius();
  rec.symmetric = pres->semigroup().is_symmetric();
  StructureConstants sc = structure_constants(*pres);
  rec.tag = classify_symmetric(*pres, sc);
  if (!rec.symmetric && !include_nonsymmetric) {
    rec.mu = -1;  // marks "skipped" for the caller
    return rec;
  }
  TheoremVerdict v = is_minimally_generated_by_rf_relations(*pres);
  rec.holds = v.holds;
  rec.deficiency = v.deficiency;
  rec.mu = minimal_generating_set(pres->semigroup(), pres->columns()).count;
  return rec;
}

}  // namespace

SweepReport verify_symmetric_sweep(const SweepBox& box, int jobs, bool include_nonsymmetric,
                                   const std::function<void(const SweepRecord&)>& on_record) {
  std::vector<std::array<Int, 4>> tuples;
  for (Int p = box.p_lo; p <= box.p_hi; ++p)
    for (Int m0 = box.m0_lo; m0 <= box.m0_hi; ++m0)
      for (Int d = box.d_lo; d <= box.d_hi; ++d) {
        Int nlo = box.n_auto ? m0 + 1 : box.n_lo;
        Int nhi = box.n_auto ? 3 * m0 : box.n_hi;
        for (Int n = nlo; n <= nhi; ++n) tuples.push_back({m0, d, p, n});
      }

  SweepReport report;
  report.scanned = static_cast<Int>(tuples.size());

  // Process in blocks: parallel inside a block, blocks in order, so records
  // stream in parameter order whatever the worker count.
  const std::size_t workers = jobs <= 1 ? 1 : static_cast<std::size_t>(jobs);
  const std::size_t block = std::max<std::size_t>(workers * 64, 64);
  std::vector<std::optional<SweepRecord>> slots(block);
  for (std::size_t base = 0; base < tuples.size(); base += block) {
    const std::size_t count = std::min(block, tuples.size() - base);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        slots[i] = sweep_one(tuples[base + i][0], tuples[base + i][1], tuples[base + i][2],
                             tuples[base + i][3], include_nonsymmetric);
    };
    if (workers == 1 || count < 2) {
      work(0, count);
    } else {
      std::size_t chunk = (count + workers - 1) / workers;
      std::vector<std::future<void>> futs;
      for (std::size_t b = 0; b < count; b += chunk)
        futs.push_back(std::async(std::launch::async, work, b, std::min(b + chunk, count)));
      for (auto& f : futs) f.get();
    }
    for (std::size_t i = 0; i < count; ++i) {
      auto& slot = slots[i];
      if (!slot) continue;
      ++report.valid;
      if (slot->mu < 0) {
        slot.reset();
        continue;  // valid but skipped (not symmetric)
      }
      if (slot->symmetric) ++report.symmetric;
      if (!slot->holds) report.counterexamples.push_back(*slot);
      if (on_record) on_record(*slot);
      report.records.push_back(std::move(*slot));
      slot.reset();
    }
  }
  return report;
}

}  // namespace aarf
