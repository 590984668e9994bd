#include "aarf/rf.hpp"

#include <algorithm>
#include <map>

namespace aarf {

namespace {

// -------------------------------------------------------------------------
// Closed-form row assembly. Rows are built additively so that coinciding
// index formulas stack (a +1 landing on the column that already holds q
// produces q+1, exactly as in the displayed matrices).
// -------------------------------------------------------------------------

struct MatrixBuilder {
  Int p;
  std::vector<std::vector<Int>> rows;

  explicit MatrixBuilder(Int p_) : p(p_) {}

  std::vector<Int>& fresh(Int diag) {
    rows.emplace_back(static_cast<std::size_t>(p + 2), 0);
    rows.back()[static_cast<std::size_t>(diag)] -= 1;
    return rows.back();
  }
};

// (q_z, r_z) with the convention that z = 0 contributes nothing: q_z = 0 and
// no arithmetic-part column.
struct GzTerm {
  Int q = 0;
  Int r = -1;  // -1: absent
};

GzTerm gz_term(const AAPresentation& pres, const StructureConstants& sc) {
  if (sc.z == 0) return {};
  GTerm g = pres.g_term(sc.z);
  return {g.q, g.r};
}

using Rows = std::vector<std::vector<Int>>;

// r = 1, lambda > 1, k in [1, p].
Rows gamma_r1_lambda_gt1(const AAPresentation& pres, const StructureConstants& sc, Int k) {
  const Int p = pres.p();
  MatrixBuilder b(p);
  for (Int j = 0; j <= p - k; ++j) {
    auto& row = b.fresh(j);
    row[p] += sc.q - 1;
    row[p + 1] += sc.v - 1;
    row[k + j] += 1;
  }
  for (Int j = p - k + 1; j <= p; ++j) {
    auto& row = b.fresh(j);
    row[0] += sc.lambda - 2;
    row[p + 1] += sc.w + sc.v - 1;
    row[k + j - p - 1] += 1;
  }
  auto& row = b.fresh(p + 1);
  if (sc.mu >= 1) {
    GzTerm gz = gz_term(pres, sc);
    row[0] += sc.mu - 1;
    row[p] += sc.q + gz.q - 1;
    row[k] += 1;
    if (gz.r >= 0) row[gz.r] += 1;
  } else {
    // mu = 0 forces z > p, so the z decomposition exists.
    GTerm gz = pres.g_term(sc.z);
    row[0] += sc.lambda - 2;
    row[p] += gz.q - 1;
    row[k - 1] += 1;
    row[gz.r] += 1;
  }
  return b.rows;
}

// r = 1, lambda = 1 (then W empty forces z = 0 and mu >= 1).
Rows gamma_r1_lambda_eq1(const AAPresentation& pres, const StructureConstants& sc, Int k) {
  const Int p = pres.p();
  MatrixBuilder b(p);
  for (Int j = 0; j <= p - k; ++j) {
    auto& row = b.fresh(j);
    row[p] += sc.q - 1;
    row[p + 1] += sc.v - 1;
    row[k + j] += 1;
  }
  for (Int j = p - k + 1; j <= p; ++j) {
    auto& row = b.fresh(j);
    row[0] += sc.mu - 1;
    row[p + 1] += sc.w - 1;
    row[k + j - p - 1] += 1;
  }
  auto& row = b.fresh(p + 1);
  row[0] += sc.mu - 1;
  row[p] += sc.q - 1;
  row[k] += 1;
  return b.rows;
}

// r >= 2, k in [p-r+2, p]; e is pinned by r + k + e = 2p + 1.
Rows gamma_r_ge2(const AAPresentation& pres, const StructureConstants& sc, Int k) {
  const Int p = pres.p();
  const Int e = 2 * p + 1 - sc.r - k;
  MatrixBuilder b(p);
  for (Int j = 0; j <= e; ++j) {
    auto& row = b.fresh(j);
    row[p] += sc.q;
    row[p + 1] += sc.v - 1;
    row[p - e + j] += 1;
  }
  for (Int j = e + 1; j <= p; ++j) {
    auto& row = b.fresh(j);
    row[0] += sc.lambda - 1;
    row[p + 1] += sc.w + sc.v - 1;
    row[k + j - p - 1] += 1;
  }
  auto& row = b.fresh(p + 1);
  if (sc.mu >= 1) {
    GzTerm gz = gz_term(pres, sc);
    row[0] += sc.mu - 1;
    row[p] += sc.q + gz.q;
    row[p - e] += 1;
    if (gz.r >= 0) row[gz.r] += 1;
  } else {
    GTerm gz = pres.g_term(sc.z);
    row[0] += sc.lambda - 1;
    row[p] += gz.q - 1;
    row[k - 1] += 1;
    row[gz.r] += 1;
  }
  return b.rows;
}

// r' = 1, mu > 0, q' = 0: the single candidate alpha_p.
Rows alpha_rp1_q0(const AAPresentation& pres, const StructureConstants& sc) {
  const Int p = pres.p();
  MatrixBuilder b(p);
  auto& first = b.fresh(0);
  first[p + 1] += sc.v - 1;
  for (Int j = 1; j <= p; ++j) {
    auto& row = b.fresh(j);
    row[0] += sc.nu - 2;
    row[j - 1] += 1;
    row[p + 1] += sc.w - 1;
  }
  auto& row = b.fresh(p + 1);
  GTerm gz = pres.g_term(sc.z);  // W nonempty: z >= 1
  row[0] += sc.mu - 1;
  row[p] += gz.q;
  row[gz.r] += 1;
  return b.rows;
}

// r' = 1, mu > 0, q' > 0, i in [1, p].
Rows alpha_rp1_qpos(const AAPresentation& pres, const StructureConstants& sc, Int i) {
  const Int p = pres.p();
  MatrixBuilder b(p);
  for (Int j = 0; j <= p - i; ++j) {
    auto& row = b.fresh(j);
    row[p] += sc.q_prime - 1;
    row[p + 1] += sc.v - 1;
    row[i + j] += 1;
  }
  for (Int j = p - i + 1; j <= p; ++j) {
    auto& row = b.fresh(j);
    row[0] += sc.nu - 2;
    row[p + 1] += sc.w - 1;
    row[i + j - p - 1] += 1;
  }
  auto& row = b.fresh(p + 1);
  GTerm gz = pres.g_term(sc.z);
  row[0] += sc.mu - 1;
  row[p] += sc.q_prime + gz.q - 1;
  row[i] += 1;
  row[gz.r] += 1;
  return b.rows;
}

// r' = 1, mu = 0, q' > 0, r >= 2, i in [1, p-r+1].
Rows alpha_rp1_mu0(const AAPresentation& pres, const StructureConstants& sc, Int i) {
  const Int p = pres.p();
  MatrixBuilder b(p);
  for (Int j = 0; j <= p - i; ++j) {
    auto& row = b.fresh(j);
    row[p] += sc.q_prime - 1;
    row[p + 1] += sc.v - 1;
    row[i + j] += 1;
  }
  for (Int j = p - i + 1; j <= p; ++j) {
    auto& row = b.fresh(j);
    row[0] += sc.nu - 2;
    row[p + 1] += sc.w - 1;
    row[i + j - p - 1] += 1;
  }
  auto& row = b.fresh(p + 1);
  row[p] += sc.q - 1;
  row[sc.r + i - 1] += 1;
  return b.rows;
}

// r' >= 2, i = p + theta with theta in [1, r'-1]. Returns no rows when the
// mu = 0 n-row needs theta + r_z > p (construction not applicable).
std::optional<Rows> alpha_rp_ge2(const AAPresentation& pres, const StructureConstants& sc, Int i) {
  const Int p = pres.p();
  const Int theta = i - p;
  MatrixBuilder b(p);
  for (Int j = 0; j <= 2 * p - i; ++j) {
    auto& row = b.fresh(j);
    row[p] += sc.q_prime;
    row[p + 1] += sc.v - 1;
    row[theta + j] += 1;
  }
  for (Int j = 2 * p - i + 1; j <= p; ++j) {
    auto& row = b.fresh(j);
    row[0] += sc.nu - 1;
    row[p + 1] += sc.w - 1;
    row[theta + j - sc.r_prime] += 1;
  }
  auto& row = b.fresh(p + 1);
  GTerm gz = pres.g_term(sc.z);
  if (sc.mu > 0) {
    row[0] += sc.mu - 1;
    row[p] += sc.q_prime + gz.q;
    row[theta] += 1;
    row[gz.r] += 1;
  } else {
    if (theta + gz.r > p) return std::nullopt;
    row[p] += sc.q_prime + gz.q;
    row[theta + gz.r] += 1;
  }
  return b.rows;
}

// Shared n-row of the beta constructions. Index z + j - p - 1 must be
// nonnegative (checked by the caller); index 0 contributes only (nu-1)*m0.
std::vector<Int> beta_n_row(const AAPresentation& pres, const StructureConstants& sc, Int j) {
  const Int p = pres.p();
  std::vector<Int> row(static_cast<std::size_t>(p + 2), 0);
  row[p + 1] -= 1;
  Int idx = sc.z + j - p - 1;
  if (idx == 0) {
    row[0] += sc.nu - 1;
  } else {
    GTerm g = pres.g_term(idx);
    Int eps = sc.r_prime + g.r <= p ? 1 : 0;
    row[0] += sc.nu - 1 - eps;
    row[p] += g.q;
    row[g.r] += 1;
  }
  return row;
}

// r = 1: both lambda branches share everything except the wrap-around rows.
Rows beta_r1(const AAPresentation& pres, const StructureConstants& sc, Int j, bool lambda_gt1) {
  const Int p = pres.p();
  MatrixBuilder b(p);
  for (Int k = 0; k <= p - j; ++k) {
    auto& row = b.fresh(k);
    row[p] += sc.q - 1;
    row[p + 1] += sc.v - sc.w - 1;
    row[j + k] += 1;
  }
  if (lambda_gt1) {
    for (Int k = p - j + 1; k <= p; ++k) {
      auto& row = b.fresh(k);
      row[0] += sc.lambda - 2;
      row[p + 1] += sc.v - 1;
      row[k + j - p - 1] += 1;
    }
  } else {
    auto& pivot = b.fresh(p - j + 1);
    pivot[0] += sc.lambda - 1;
    pivot[p + 1] += sc.v - 1;
    for (Int k = p - j + 2; k <= p; ++k) {
      auto& row = b.fresh(k);
      row[0] += sc.nu - 2;
      row[p + 1] += sc.w - 1;
      row[k + j - p - 2] += 1;
    }
  }
  b.rows.push_back(beta_n_row(pres, sc, j));
  return b.rows;
}

// r >= 2, j in [p-r+2, p]; e pinned by r + j + e = 2p + 1.
Rows beta_r_ge2(const AAPresentation& pres, const StructureConstants& sc, Int j) {
  const Int p = pres.p();
  const Int e = 2 * p + 1 - sc.r - j;
  MatrixBuilder b(p);
  for (Int k = 0; k <= e; ++k) {
    auto& row = b.fresh(k);
    row[p] += sc.q;
    row[p + 1] += sc.v - sc.w - 1;
    row[p - e + k] += 1;
  }
  for (Int k = e + 1; k <= p; ++k) {
    auto& row = b.fresh(k);
    row[0] += sc.lambda - 1;
    row[p + 1] += sc.v - 1;
    row[k + j - p - 1] += 1;
  }
  b.rows.push_back(beta_n_row(pres, sc, j));
  return b.rows;
}

bool rows_admissible(const Rows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (i != j && rows[i][j] < 0) return false;
  return true;
}

void push_matrix(std::vector<RFMatrix>& out, std::span<const Int> columns, Int f, Rows rows,
                 std::string tag) {
  RFMatrix m{f, std::move(rows), RFSource::ClosedForm, std::move(tag)};
  if (!validate_rf(columns, f, m))
    throw ConstructionInvalid("closed-form construction failed validation: " + m.tag);
  out.push_back(std::move(m));
}

// Alternate matrices used by the symmetric embedding-dimension 4/5
// arguments: explicit row replacements of the base construction, applicable
// only when every replaced entry stays nonnegative.
void append_symmetric_variants(std::vector<RFMatrix>& out, const AAPresentation& pres,
                               const StructureConstants& sc, Int f) {
  const Int p = pres.p();
  if (p != 2 && p != 3) return;
  const auto& pf = pres.semigroup().pseudo_frobenius();
  if (pf.size() != 1 || pf.front() != f) return;
  SymmetricCase tag = classify_symmetric(pres, sc);

  auto with = [&](Rows base, std::vector<std::pair<Int, std::vector<Int>>> replacements,
                  const char* label) {
    for (auto& [idx, row] : replacements) base[static_cast<std::size_t>(idx)] = std::move(row);
    if (!rows_admissible(base)) return;
    push_matrix(out, pres.columns(), f, std::move(base), label);
  };

  switch (tag) {
    case SymmetricCase::C1_R2:
      if (p == 3)
        with(gamma_r_ge2(pres, sc, p), {{0, {-1, 0, 2, sc.q - 1, sc.v - 1}}}, "gamma[r>=2]'");
      break;
    case SymmetricCase::C2_SubI: {
      auto base = alpha_rp_ge2(pres, sc, p + 1);
      if (!base) break;
      if (p == 2) {
        with(*base, {{3, {sc.nu - 1, 0, sc.q, -1}}}, "alpha[r'>=2]'");
      } else {
        with(*base, {{3, {sc.mu - 1, 2, 0, -1, sc.w - 1}}}, "alpha[r'>=2]'");
        with(*base,
             {{0, {-1, 0, 2, sc.q_prime - 1, sc.v - 1}}, {4, {sc.mu, 0, 0, sc.q_prime + 1, -1}}},
             "alpha[r'>=2]''");
      }
      break;
    }
    case SymmetricCase::C2_SubII:
      if (p == 2) {
        with(beta_r_ge2(pres, sc, p), {{1, {sc.lambda, -1, 0, sc.v - 1}}}, "beta[r>=2]'");
      } else {
        with(beta_r_ge2(pres, sc, p),
             {{0, {-1, 0, 2, sc.q - 1, sc.v - sc.w - 1}}, {4, {sc.lambda - 1, 1, 1, sc.q - 1, -1}}},
             "beta[r>=2]'");
      }
      break;
    case SymmetricCase::C2_SubIII:
      if (p == 3)
        with(beta_r_ge2(pres, sc, p), {{0, {-1, 0, 2, sc.q - 1, sc.v - sc.w - 1}}}, "beta[r>=2]'");
      break;
    default:
      break;
  }
}

}  // namespace

bool validate_rf(std::span<const Int> columns, Int f, const RFMatrix& m) {
  const std::size_t k = columns.size();
  if (m.rows.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = m.rows[i];
    if (row.size() != k) return false;
    if (row[i] != -1) return false;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && row[j] < 0) return false;
    if (dot(row, columns) != f) return false;
  }
  return true;
}

std::vector<RFMatrix> rf_closed_form(const AAPresentation& pres, const StructureConstants& sc,
                                     Int f) {
  const Int p = pres.p();
  std::vector<RFMatrix> out;
  if (sc.w_empty()) {
    for (Int k : gamma_indices(sc, p)) {
      if (gamma_value(pres, sc, k) != f) continue;
      if (sc.r == 1 && sc.lambda > 1)
        push_matrix(out, pres.columns(), f, gamma_r1_lambda_gt1(pres, sc, k), "gamma[r=1,lambda>1]");
      else if (sc.r == 1)
        push_matrix(out, pres.columns(), f, gamma_r1_lambda_eq1(pres, sc, k), "gamma[r=1,lambda=1]");
      else
        push_matrix(out, pres.columns(), f, gamma_r_ge2(pres, sc, k), "gamma[r>=2]");
    }
  } else {
    for (Int i : alpha_indices(sc, p)) {
      if (alpha_value(pres, sc, i) != f) continue;
      if (sc.r_prime == 1 && sc.mu > 0 && sc.q_prime == 0)
        push_matrix(out, pres.columns(), f, alpha_rp1_q0(pres, sc), "alpha[r'=1,mu>0,q'=0]");
      else if (sc.r_prime == 1 && sc.mu > 0)
        push_matrix(out, pres.columns(), f, alpha_rp1_qpos(pres, sc, i), "alpha[r'=1,mu>0,q'>0]");
      else if (sc.r_prime == 1 && sc.mu == 0 && sc.q_prime > 0 && sc.r >= 2) {
        if (i <= p - sc.r + 1)
          push_matrix(out, pres.columns(), f, alpha_rp1_mu0(pres, sc, i), "alpha[r'=1,mu=0]");
      } else if (sc.r_prime >= 2) {
        if (auto rows = alpha_rp_ge2(pres, sc, i))
          push_matrix(out, pres.columns(), f, std::move(*rows), "alpha[r'>=2]");
      }
    }
    for (Int j : beta_indices(sc, p)) {
      if (beta_value(pres, sc, j) != f) continue;
      if (sc.z + j - p - 1 < 0) continue;  // n-row index out of domain
      if (sc.r == 1)
        push_matrix(out, pres.columns(), f, beta_r1(pres, sc, j, sc.lambda > 1),
                    sc.lambda > 1 ? "beta[r=1,lambda>1]" : "beta[r=1,lambda=1]");
      else
        push_matrix(out, pres.columns(), f, beta_r_ge2(pres, sc, j), "beta[r>=2]");
    }
  }
  append_symmetric_variants(out, pres, sc, f);
  if (out.empty()) throw NoApplicableCase("no construction matches this element");
  return out;
}

// -------------------------------------------------------------------------
// Enumeration
// -------------------------------------------------------------------------

RFEnumerator::RFEnumerator(const NumericalSemigroup& H, std::vector<Int> columns, Int f)
    : columns_(std::move(columns)), f_(f) {
  const auto& pf = H.pseudo_frobenius();
  if (!std::binary_search(pf.begin(), pf.end(), f))
    throw NotPseudoFrobenius("not a pseudo-Frobenius element");
  const std::size_t k = columns_.size();
  row_choices_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (auto& v : enumerate_factorizations(columns_, checked_add(f, columns_[i]))) {
      if (v[i] != 0) continue;  // cannot happen for pseudo-Frobenius f; kept as a guard
      v[i] = -1;
      row_choices_[i].push_back(std::move(v));
    }
    if (row_choices_[i].empty())
      throw ConstructionInvalid("empty row set for a pseudo-Frobenius element");
  }
  odometer_.assign(k, 0);
}

Int RFEnumerator::total() const {
  Int t = 1;
  for (const auto& rs : row_choices_) t = checked_mul(t, static_cast<Int>(rs.size()));
  return t;
}

std::optional<RFMatrix> RFEnumerator::next() {
  if (done_) return std::nullopt;
  RFMatrix m;
  m.f = f_;
  m.source = RFSource::Enumerated;
  m.rows.reserve(odometer_.size());
  for (std::size_t i = 0; i < odometer_.size(); ++i) m.rows.push_back(row_choices_[i][odometer_[i]]);
  // advance, last row fastest
  for (std::size_t i = odometer_.size(); i-- > 0;) {
    if (++odometer_[i] < row_choices_[i].size()) return m;
    odometer_[i] = 0;
  }
  done_ = true;
  return m;
}

Int rf_count(const NumericalSemigroup& H, Int f) {
  return RFEnumerator(H, H.generators(), f).total();
}

Int rf_count(const AAPresentation& pres, Int f) {
  return RFEnumerator(pres.semigroup(), pres.columns(), f).total();
}

namespace {
std::vector<RFMatrix> drain(RFEnumerator e, std::optional<Int> limit) {
  std::vector<RFMatrix> out;
  while (auto m = e.next()) {
    if (limit && static_cast<Int>(out.size()) >= *limit) break;
    out.push_back(std::move(*m));
  }
  return out;
}
}  // namespace

std::vector<RFMatrix> rf_enumerate(const NumericalSemigroup& H, Int f, std::optional<Int> limit) {
  return drain(RFEnumerator(H, H.generators(), f), limit);
}

std::vector<RFMatrix> rf_enumerate(const AAPresentation& pres, Int f, std::optional<Int> limit) {
  return drain(RFEnumerator(pres.semigroup(), pres.columns(), f), limit);
}

// -------------------------------------------------------------------------
// Relations
// -------------------------------------------------------------------------

Binomial make_binomial(std::span<const Int> delta, std::span<const Int> columns) {
  Binomial b;
  b.plus.resize(delta.size());
  b.minus.resize(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    b.plus[i] = delta[i] > 0 ? delta[i] : 0;
    b.minus[i] = delta[i] < 0 ? -delta[i] : 0;
  }
  if (b.plus < b.minus) std::swap(b.plus, b.minus);
  b.degree = dot(b.plus, columns);
  return b;
}

std::vector<Binomial> rf_relations(const RFMatrix& m, std::span<const Int> columns) {
  std::vector<Binomial> out;
  const std::size_t k = m.rows.size();
  std::vector<Int> delta(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool zero = true;
      for (std::size_t t = 0; t < k; ++t) {
        delta[t] = m.rows[j][t] - m.rows[i][t];
        zero = zero && delta[t] == 0;
      }
      if (zero) continue;
      out.push_back(make_binomial(delta, columns));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RFRelationSet all_rf_relations(const NumericalSemigroup& H, std::span<const Int> columns, Int f) {
  RFEnumerator e(H, std::vector<Int>(columns.begin(), columns.end()), f);
  const std::size_t k = columns.size();
  std::map<Binomial, RFRelationSet::Provenance> seen;
  std::vector<Int> delta(k);
  // Rows are chosen independently per index, so the union over all matrices
  // is exactly the union over row pairs from distinct row sets.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (const auto& a : e.row_choices(i))
        for (const auto& b : e.row_choices(j)) {
          for (std::size_t t = 0; t < k; ++t) delta[t] = b[t] - a[t];
          Binomial bin = make_binomial(delta, columns);
          seen.emplace(std::move(bin), RFRelationSet::Provenance{static_cast<int>(i),
                                                                 static_cast<int>(j),
                                                                 RFSource::Enumerated});
        }
  RFRelationSet out;
  out.f = f;
  for (auto& [bin, prov] : seen) {
    out.relations.push_back(bin);
    out.provenance.push_back(prov);
  }
  return out;
}

RFRelationSet all_rf_relations(const AAPresentation& pres, Int f) {
  return all_rf_relations(pres.semigroup(), pres.columns(), f);
}

}  // namespace aarf
