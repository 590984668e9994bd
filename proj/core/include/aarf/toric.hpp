#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "aarf/rf.hpp"

namespace aarf {

/// Graph on every factorization of a degree s, with an edge between two
/// factorizations whose supports overlap. Disconnection at s witnesses a
/// minimal generator of the defining ideal in degree s.
struct FiberGraph {
  Int degree = 0;
  std::vector<std::vector<Int>> vertices;  // enumeration order
  std::vector<int> component;              // per vertex, ids by first occurrence
  int component_count = 0;

  /// Adjacent pairs (i, j), i < j. Materialized on demand; quadratic in the
  /// vertex count, intended for small fibers.
  std::vector<std::pair<int, int>> edges() const;
};

FiberGraph fiber_graph(const NumericalSemigroup& H, std::span<const Int> columns, Int s);
FiberGraph fiber_graph(const NumericalSemigroup& H, Int s);

/// Connectivity of the fiber at s without materializing edges (union-find
/// over per-index buckets). True for s with at most one factorization.
bool fiber_connected(const NumericalSemigroup& H, std::span<const Int> columns, Int s);

/// Degrees s whose fiber graph is disconnected, ascending. Complete because
/// every s > frobenius + 2*max(columns) has s - c_i - c_j in H for all pairs,
/// which makes the support graph on the columns complete and the fiber
/// connected. Candidates are located by that support graph (its component
/// count equals the fiber's) and confirmed on the fiber itself.
std::vector<Int> betti_degrees(const NumericalSemigroup& H, std::span<const Int> columns);

/// Support graph on column indices: vertices {i : s - c_i in H}, edges where
/// s - c_i - c_j in H. Returns its number of connected components (0 when no
/// vertex). Equals the fiber component count for nonzero s in H: every
/// factorization's support is a clique here, and sharing a column is exactly
/// fiber adjacency.
int support_graph_components(const NumericalSemigroup& H, std::span<const Int> columns, Int s);

struct MinimalPresentation {
  std::vector<Binomial> generators;  // sorted by degree, then lexicographically
  std::vector<Int> betti_degrees;    // degree of each generator (with multiplicity)
  Int count = 0;                     // mu(I(H))
};

/// Minimal binomial generating set of the defining ideal: per Betti degree,
/// component representatives are the lexicographically least vertex of each
/// component and the t-1 tree edges join the least representative to the
/// others in representative order. `reverse_tiebreak` flips the
/// representative choice to the lexicographically greatest vertex (the
/// generator count must not change).
MinimalPresentation minimal_generating_set(const NumericalSemigroup& H,
                                           std::span<const Int> columns,
                                           bool reverse_tiebreak = false);
MinimalPresentation minimal_generating_set(const NumericalSemigroup& H);

struct TheoremVerdict {
  bool holds = false;
  std::map<Int, std::vector<Binomial>> witness;  // Betti degree -> spanning relations
  std::vector<Int> deficiency;                   // degrees not spannable
};

/// Whether the defining ideal has a minimal generating set consisting of
/// RF-relations: for each Betti degree, some degree-s RF-relations (over all
/// pseudo-Frobenius elements and all their RF matrices) must form a spanning
/// tree across the fiber components. Witness relations are chosen smallest
/// first. Runs for any type.
TheoremVerdict is_minimally_generated_by_rf_relations(const NumericalSemigroup& H,
                                                      std::span<const Int> columns);
TheoremVerdict is_minimally_generated_by_rf_relations(const AAPresentation& pres);

/// Inclusive parameter box for sweeps. When `n_auto` is set the n range is
/// [m0 + 1, 3 * m0] per presentation.
struct SweepBox {
  Int m0_lo = 0, m0_hi = -1;
  Int d_lo = 1, d_hi = 1;
  Int p_lo = 1, p_hi = 1;
  Int n_lo = 1, n_hi = 0;
  bool n_auto = false;
};

struct SweepRecord {
  Int m0 = 0, d = 0, p = 0, n = 0;
  SymmetricCase tag = SymmetricCase::NotSymmetric;
  bool symmetric = false;
  bool holds = false;
  Int mu = 0;
  std::vector<Int> pf;
  std::vector<Int> deficiency;
};

struct SweepReport {
  Int scanned = 0;    // parameter tuples visited
  Int valid = 0;      // valid presentations
  Int symmetric = 0;  // records produced
  std::vector<SweepRecord> records;
  std::vector<SweepRecord> counterexamples;  // records with holds == false
};

/// Runs classify_symmetric and the RF-generation verdict on every valid,
/// symmetric presentation in the box (every valid presentation when
/// `include_nonsymmetric`). `jobs` > 1 distributes presentations over a
/// thread pool in blocks; record order is by (p, m0, d, n) regardless of
/// jobs, and `on_record`, when given, is invoked in that order as blocks
/// complete.
SweepReport verify_symmetric_sweep(const SweepBox& box, int jobs = 1,
                                   bool include_nonsymmetric = false,
                                   const std::function<void(const SweepRecord&)>& on_record = {});

}  // namespace aarf
