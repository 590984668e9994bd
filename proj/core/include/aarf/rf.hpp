#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "aarf/almost_arithmetic.hpp"
#include "aarf/semigroup.hpp"

namespace aarf {

enum class RFSource { ClosedForm, Enumerated, External };

/// A row-factorization matrix for a pseudo-Frobenius element f: square over
/// the column order, -1 on the diagonal, nonnegative elsewhere, every row
/// dotting with the columns to f.
struct RFMatrix {
  Int f = 0;
  std::vector<std::vector<Int>> rows;
  RFSource source = RFSource::External;
  std::string tag;  // regime label for closed-form constructions

  bool operator==(const RFMatrix& o) const { return f == o.f && rows == o.rows; }
};

bool validate_rf(std::span<const Int> columns, Int f, const RFMatrix& m);

/// Closed-form matrices for f, one per construction whose hypotheses match
/// the structure constants, plus the alternate (row-replaced) variants used
/// in the symmetric embedding-dimension 4/5 arguments. Every returned matrix
/// is validated (ConstructionInvalid on failure is a bug, not bad input).
/// Throws NoApplicableCase when f matches no construction, and WrongRegime is
/// never thrown here: the regime is read off the constants.
std::vector<RFMatrix> rf_closed_form(const AAPresentation& pres, const StructureConstants& sc,
                                     Int f);

/// Streams every RF matrix of f exactly once: the Cartesian product over row
/// index i of the factorizations of f + columns[i] (their i-th coordinate is
/// always zero for pseudo-Frobenius f), with -1 installed at i. Rows sets are
/// materialized, matrices produced lazily in odometer order (last row varies
/// fastest). Throws NotPseudoFrobenius.
class RFEnumerator {
public:
  RFEnumerator(const NumericalSemigroup& H, std::vector<Int> columns, Int f);

  /// Product of the row-set sizes; equals the stream length.
  Int total() const;

  std::optional<RFMatrix> next();

  const std::vector<std::vector<Int>>& row_choices(std::size_t i) const {
    return row_choices_[i];
  }

private:
  std::vector<Int> columns_;
  Int f_;
  std::vector<std::vector<std::vector<Int>>> row_choices_;
  std::vector<std::size_t> odometer_;
  bool done_ = false;
};

Int rf_count(const NumericalSemigroup& H, Int f);
Int rf_count(const AAPresentation& pres, Int f);

std::vector<RFMatrix> rf_enumerate(const NumericalSemigroup& H, Int f,
                                   std::optional<Int> limit = std::nullopt);
std::vector<RFMatrix> rf_enumerate(const AAPresentation& pres, Int f,
                                   std::optional<Int> limit = std::nullopt);

/// A binomial of the defining ideal: two exponent vectors with disjoint
/// supports and equal degree. `plus` is the lexicographically greater side
/// (sign normalization, stable under deduplication).
struct Binomial {
  std::vector<Int> plus;
  std::vector<Int> minus;
  Int degree = 0;

  auto operator<=>(const Binomial&) const = default;
};

/// Normalized binomial from a difference vector; degree from `columns`.
Binomial make_binomial(std::span<const Int> delta, std::span<const Int> columns);

/// The relations x^{d+} - x^{d-} over all row pairs i < j of m, d = row_j -
/// row_i; zero differences dropped, result deduplicated and sorted.
std::vector<Binomial> rf_relations(const RFMatrix& m, std::span<const Int> columns);

struct RFRelationSet {
  Int f = 0;
  std::vector<Binomial> relations;  // sorted, unique
  struct Provenance {
    int row_i = 0;
    int row_j = 0;
    RFSource source = RFSource::Enumerated;
  };
  std::vector<Provenance> provenance;  // parallel to relations; first witness
};

/// Union of rf_relations over every RF matrix of f, computed from the row
/// sets pairwise without materializing matrices.
RFRelationSet all_rf_relations(const NumericalSemigroup& H, std::span<const Int> columns, Int f);
RFRelationSet all_rf_relations(const AAPresentation& pres, Int f);

}  // namespace aarf
