#pragma once

#include <string>
#include <vector>

#include "aarf/semigroup.hpp"

namespace aarf {

/// g_t decomposed as q * m_p + m_r with t = q*p + r and r in [1, p].
struct GTerm {
  Int value = 0;
  Int q = 0;
  Int r = 0;
};

/// An almost arithmetic presentation H = <m0, m0+d, ..., m0+p*d, n>.
/// Construction validates the standing hypotheses: gcd(m0, d, n) = 1, m0 >= 2,
/// d >= 1, p >= 1, and that the p+2 values form a minimal generating set
/// (NotMinimal otherwise; no silent reduction).
class AAPresentation {
public:
  AAPresentation(Int m0, Int d, Int p, Int n);

  Int m0() const { return m0_; }
  Int d() const { return d_; }
  Int p() const { return p_; }
  Int n() const { return n_; }
  Int m(Int i) const { return checked_add(m0_, checked_mul(i, d_)); }

  /// Generator column order used by every matrix and exponent vector:
  /// m0, m1, ..., mp, n.
  const std::vector<Int>& columns() const { return columns_; }

  const NumericalSemigroup& semigroup() const { return sg_; }

  /// g_t for t >= 1. g_value(0) == 0 by convention; g_term(0) is an error
  /// since the (q, r) decomposition excludes t = 0.
  GTerm g_term(Int t) const;
  Int g_value(Int t) const { return t == 0 ? 0 : g_term(t).value; }

private:
  Int m0_, d_, p_, n_;
  std::vector<Int> columns_;
  NumericalSemigroup sg_;
};

/// The unique constants tied to a presentation:
///   u = min{ t : g_t not in Ap(H, m0) },  v = min{ b >= 1 : b*n in <m0..mp> },
///   g_u = lambda*m0 + w*n          (w in [0,v-1], lambda >= 1),
///   v*n = mu*m0 + g_z              (z in [0,u-1], mu >= 0),
///   g_{u-z} + (v-w)*n = nu*m0,     nu = lambda + mu + epsilon,
/// with q, r / q_prime, r_prime the decompositions of u and u-z, and
/// epsilon = 1 exactly when r_prime < r. The rectangle
/// W = [u-z, u-1] x [v-w, v-1] is empty iff w = 0 or z = 0.
struct StructureConstants {
  Int u = 0, v = 0, z = 0, w = 0;
  Int lambda = 0, mu = 0, nu = 0;
  Int q = 0, r = 0, q_prime = 0, r_prime = 0;
  Int epsilon = 0;

  bool w_empty() const { return w == 0 || z == 0; }
};

/// Computes the constants by bounded search over the stated ranges and
/// asserts uniqueness and every identity above (internal error on failure).
StructureConstants structure_constants(const AAPresentation& pres);

/// gamma_k = g_{(q-1)p + r + k - 1} + (v-1)n - m0, for k in [1, p].
/// Only defined when W is empty (WrongRegime otherwise). The pseudo-Frobenius
/// selection rule is gamma_indices.
Int gamma_value(const AAPresentation& pres, const StructureConstants& sc, Int k);

/// alpha_i = g_{(q'-1)p + i} + (v-1)n - m0 for i in the index set
/// alpha_indices (WrongRegime when W is empty, InvalidArgument when i is
/// outside the set).
Int alpha_value(const AAPresentation& pres, const StructureConstants& sc, Int i);

/// beta_j = g_{(q-1)p + r + j - 1} + (v-w-1)n - m0 for j in [1, p]
/// (WrongRegime when W is empty).
Int beta_value(const AAPresentation& pres, const StructureConstants& sc, Int j);

/// Index sets: for W empty, {gamma_k} over gamma_indices equals PF(H)
/// exactly; for W nonempty, PF(H) is contained in the alpha/beta candidates.
std::vector<Int> gamma_indices(const StructureConstants& sc, Int p);
std::vector<Int> alpha_indices(const StructureConstants& sc, Int p);
std::vector<Int> beta_indices(const StructureConstants& sc, Int p);

enum class SymmetricCase {
  NotSymmetric,
  C1_P1R1,    // W empty, p = 1 (forces r = 1)
  C1_R2,      // W empty, r = 2
  C2_P1MU0,   // W nonempty, p = 1, mu = 0
  C2_SubI,    // W nonempty, r = 1, r' = 2, lambda = 1, z < p
  C2_SubII,   // W nonempty, r = 2, r' = 1, mu = 0, q' = 0
  C2_SubIII,  // W nonempty, r = 2, r' = 2, mu = 0
};

const char* to_string(SymmetricCase c);

/// Case analysis for type(H) = 1. Cross-validated against the brute-force
/// type; a disagreement throws ClassificationMismatch (bug sentinel).
SymmetricCase classify_symmetric(const AAPresentation& pres, const StructureConstants& sc);

/// One candidate pseudo-Frobenius value. `family` is 'g', 'a' or 'b';
/// `confirmed` records brute-force membership in PF(H).
struct PFCandidate {
  char family = 'g';
  Int index = 0;
  Int value = 0;
  bool confirmed = false;
};

/// All gamma (W empty) or alpha+beta (W nonempty) candidates with
/// confirmation flags, ordered by family then index.
std::vector<PFCandidate> pf_candidates(const AAPresentation& pres, const StructureConstants& sc);

}  // namespace aarf
