#pragma once

// Independent brute-force oracles used by the tests. These deliberately avoid
// the library's code paths (Apery maxima, dynamic-programming membership,
// row-set products) so that agreement is meaningful.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "aarf/rf.hpp"
#include "aarf/semigroup.hpp"
#include "aarf/toric.hpp"

namespace oracles {

using aarf::Int;

// Membership by plain recursion over the generators.
inline bool member_recursive(const std::vector<Int>& gens, Int x) {
  if (x == 0) return true;
  if (x < 0) return false;
  for (Int g : gens)
    if (member_recursive(gens, x - g)) return true;
  return false;
}

// Pseudo-Frobenius numbers by scanning the gaps directly.
inline std::vector<Int> pf_gap_scan(const aarf::NumericalSemigroup& H) {
  std::vector<Int> out;
  for (Int f = 0; f < H.conductor(); ++f) {
    if (H.contains(f)) continue;
    bool pf = true;
    for (Int g : H.generators())
      if (!H.contains(f + g)) {
        pf = false;
        break;
      }
    if (pf) out.push_back(f);
  }
  return out;
}

// Every RF matrix by the full Cartesian product of all factorizations
// (unfiltered), kept only when it validates.
inline std::vector<aarf::RFMatrix> rf_all_by_product(const aarf::NumericalSemigroup& H,
                                                     const std::vector<Int>& columns, Int f) {
  const std::size_t k = columns.size();
  std::vector<std::vector<std::vector<Int>>> choices(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (auto v : aarf::enumerate_factorizations(columns, f + columns[i])) {
      v[i] -= 1;  // install the diagonal regardless of the original entry
      choices[i].push_back(std::move(v));
    }
  }
  std::vector<aarf::RFMatrix> out;
  std::vector<std::size_t> pick(k, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      aarf::RFMatrix m;
      m.f = f;
      for (std::size_t t = 0; t < k; ++t) m.rows.push_back(choices[t][pick[t]]);
      if (aarf::validate_rf(columns, f, m)) out.push_back(std::move(m));
      return;
    }
    for (pick[i] = 0; pick[i] < choices[i].size(); ++pick[i]) rec(i + 1);
  };
  rec(0);
  return out;
}

// Connected components of a fiber from its explicit edge list (breadth-first
// search), independent of the union-find implementation.
inline int components_from_edges(std::size_t vertex_count,
                                 const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(vertex_count, false);
  int comps = 0;
  for (std::size_t s = 0; s < vertex_count; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

// Spanning check for a set of degree-s binomials over the fiber components:
// do they connect all components of the fiber at s?
inline bool binomials_span_fiber(const aarf::FiberGraph& fiber,
                                 const std::vector<aarf::Binomial>& chosen) {
  std::vector<int> parent(static_cast<std::size_t>(fiber.component_count));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  auto component_of = [&](const std::vector<Int>& v) -> int {
    for (std::size_t i = 0; i < fiber.vertices.size(); ++i)
      if (fiber.vertices[i] == v) return fiber.component[i];
    return -1;
  };
  for (const auto& b : chosen) {
    int ca = component_of(b.plus), cb = component_of(b.minus);
    if (ca < 0 || cb < 0) return false;
    parent[static_cast<std::size_t>(find(ca))] = find(cb);
  }
  for (int c = 0; c < fiber.component_count; ++c)
    if (find(c) != find(0)) return false;
  return true;
}

}  // namespace oracles
