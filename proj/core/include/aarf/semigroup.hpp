#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aarf/checked.hpp"
#include "aarf/errors.hpp"

namespace aarf {

/// A factorization of an element: one nonnegative coefficient per generator,
/// with degree = coeffs . generators.
struct Factorization {
  std::vector<Int> coeffs;
  Int degree = 0;

  bool operator==(const Factorization&) const = default;
};

/// Apery set of a semigroup with respect to a nonzero element `modulus`:
/// the smallest member of each residue class mod `modulus`.
struct AperySet {
  Int modulus = 0;
  std::vector<Int> elements;  // ascending, exactly `modulus` entries
};

/// A numerical semigroup held by its minimal generating set, with membership
/// of [0, conductor] precomputed. Immutable after construction; every method
/// is const and safe to call concurrently.
class NumericalSemigroup {
public:
  /// Reduces `raw_generators` to the minimal generating set (ascending) and
  /// precomputes membership up to the conductor. Throws GcdNotOne when the
  /// gcd is not 1, InvalidArgument on an empty or nonpositive input, and
  /// ResourceLimit when the conductor would exceed the table cap.
  explicit NumericalSemigroup(std::vector<Int> raw_generators);

  const std::vector<Int>& generators() const { return generators_; }
  Int multiplicity() const { return generators_.front(); }
  Int max_generator() const { return generators_.back(); }
  std::size_t embedding_dimension() const { return generators_.size(); }

  /// Smallest c with [c, infinity) contained in the semigroup.
  Int conductor() const { return conductor_; }

  bool contains(Int x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return membership_[static_cast<std::size_t>(x)] != 0;
  }

  /// Throws NotAMember unless m is a nonzero element.
  AperySet apery_set(Int m) const;

  /// max(Z \ H) = conductor - 1. Throws NoGaps for <1>.
  Int frobenius_number() const;

  /// Pseudo-Frobenius numbers, ascending. Computed once at construction from
  /// the maximal elements of Ap(H, multiplicity) under the order x <=_H y
  /// iff y - x in H.
  const std::vector<Int>& pseudo_frobenius() const { return pf_; }

  Int type() const { return static_cast<Int>(pf_.size()); }
  bool is_symmetric() const { return pf_.size() == 1; }

  /// Every factorization of x over generators(), in the deterministic order
  /// of enumerate_factorizations. Empty when x is not an element.
  std::vector<Factorization> factorizations(Int x) const;

private:
  std::vector<Int> generators_;
  std::vector<std::uint8_t> membership_;  // [0, conductor]
  Int conductor_ = 0;
  std::vector<Int> pf_;
};

/// All coefficient vectors a >= 0 with a . columns == x, over an arbitrary
/// column order. Depth-first over coefficients from the last column to the
/// first, each counted up from zero, so the output is sorted
/// lexicographically in the reversed-column reading. Deterministic.
std::vector<std::vector<Int>> enumerate_factorizations(std::span<const Int> columns, Int x);

/// Number of factorizations of x (restricted-partition count by dynamic
/// programming). Throws Overflow if the count exceeds 64 bits.
Int count_factorizations(std::span<const Int> columns, Int x);

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

}  // namespace aarf
