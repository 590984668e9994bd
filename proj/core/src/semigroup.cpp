#include "aarf/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace aarf {

namespace {

// Cap on the membership table; conductors beyond this are rejected rather
// than silently thrashing memory.
constexpr Int kTableCap = 200'000'000;

// Membership of [0, bound] for the monoid generated by `gens` (ascending).
std::vector<std::uint8_t> membership_up_to(const std::vector<Int>& gens, Int bound) {
  std::vector<std::uint8_t> table(static_cast<std::size_t>(bound) + 1, 0);
  table[0] = 1;
  for (Int x = 1; x <= bound; ++x) {
    for (Int g : gens) {
      if (g > x) break;
      if (table[static_cast<std::size_t>(x - g)]) {
        table[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return table;
}

// Smallest c with [c, infinity) in the monoid: grow the table until
// min(gens) consecutive members appear, then back up to the last gap.
// Termination is guaranteed once gcd(gens) = 1.
std::pair<std::vector<std::uint8_t>, Int> membership_and_conductor(const std::vector<Int>& gens) {
  Int lo = gens.front();
  Int bound = checked_add(checked_mul(gens.back(), 2), 64);
  for (;;) {
    if (bound > kTableCap)
      throw ResourceLimit("conductor exceeds the membership table cap");
    auto table = membership_up_to(gens, bound);
    Int run = 0;
    for (Int x = 0; x <= bound; ++x) {
      run = table[static_cast<std::size_t>(x)] ? run + 1 : 0;
      if (run == lo) {
        Int conductor = 0;
        for (Int y = x; y >= 0; --y) {
          if (!table[static_cast<std::size_t>(y)]) {
            conductor = y + 1;
            break;
          }
        }
        table.resize(static_cast<std::size_t>(conductor) + 1);
        return {std::move(table), conductor};
      }
    }
    bound = checked_mul(bound, 2);
  }
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> raw_generators) {
  if (raw_generators.empty()) throw InvalidArgument("no generators given");
  for (Int g : raw_generators)
    if (g <= 0) throw InvalidArgument("generators must be positive");

  Int g = 0;
  for (Int x : raw_generators) g = std::gcd(g, x);
  if (g != 1) throw GcdNotOne("gcd of the generators is not 1");

  std::sort(raw_generators.begin(), raw_generators.end());
  raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                       raw_generators.end());

  auto [table, conductor] = membership_and_conductor(raw_generators);
  membership_ = std::move(table);
  conductor_ = conductor;

  // Minimal generating set: a generator stays iff it is not the sum of two
  // nonzero elements. Redundant generators never affect membership, so the
  // table computed from the raw set is already the right one.
  auto member = [&](Int x) {
    return x >= conductor_ ? true : membership_[static_cast<std::size_t>(x)] != 0;
  };
  for (Int x : raw_generators) {
    bool redundant = false;
    for (Int h = 1; h < x && !redundant; ++h)
      redundant = member(h) && member(x - h);
    if (!redundant) generators_.push_back(x);
  }

  // Pseudo-Frobenius numbers from the maximal Apery elements with respect to
  // the multiplicity, under x <=_H y iff y - x in H.
  if (conductor_ > 0) {
    AperySet ap = apery_set(multiplicity());
    for (Int wv : ap.elements) {
      bool maximal = true;
      for (Int other : ap.elements) {
        if (other != wv && contains(other - wv)) {
          maximal = false;
          break;
        }
      }
      if (maximal) pf_.push_back(wv - multiplicity());
    }
    std::sort(pf_.begin(), pf_.end());
  }
}

AperySet NumericalSemigroup::apery_set(Int m) const {
  if (m <= 0 || !contains(m)) throw NotAMember("apery modulus must be a nonzero element");
  AperySet out;
  out.modulus = m;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(m), 0);
  Int found = 0;
  // Every residue class has a member at most conductor + m - 1.
  for (Int x = 0; found < m; ++x) {
    if (!contains(x)) continue;
    Int res = x % m;
    if (!seen[static_cast<std::size_t>(res)]) {
      seen[static_cast<std::size_t>(res)] = 1;
      out.elements.push_back(x);
      ++found;
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

Int NumericalSemigroup::frobenius_number() const {
  if (conductor_ == 0) throw NoGaps("the semigroup has no gaps");
  return conductor_ - 1;
}

std::vector<Factorization> NumericalSemigroup::factorizations(Int x) const {
  std::vector<Factorization> out;
  for (auto& v : enumerate_factorizations(generators_, x))
    out.push_back(Factorization{std::move(v), x});
  return out;
}

std::vector<std::vector<Int>> enumerate_factorizations(std::span<const Int> columns, Int x) {
  std::vector<std::vector<Int>> out;
  if (x < 0 || columns.empty()) return out;
  std::vector<Int> vec(columns.size(), 0);
  // Assign coefficients from the last column down; column 0 is forced by
  // divisibility. Emission order is the documented deterministic order.
  auto rec = [&](auto&& self, std::size_t idx, Int rem) -> void {
    if (idx == 0) {
      if (rem % columns[0] == 0) {
        vec[0] = rem / columns[0];
        out.push_back(vec);
        vec[0] = 0;
      }
      return;
    }
    for (Int c = 0; checked_mul(c, columns[idx]) <= rem; ++c) {
      vec[idx] = c;
      self(self, idx - 1, rem - c * columns[idx]);
    }
    vec[idx] = 0;
  };
  rec(rec, columns.size() - 1, x);
  return out;
}

Int count_factorizations(std::span<const Int> columns, Int x) {
  if (x < 0) return 0;
  std::vector<Int> count(static_cast<std::size_t>(x) + 1, 0);
  count[0] = 1;
  for (Int c : columns)
    for (Int s = c; s <= x; ++s)
      count[static_cast<std::size_t>(s)] = checked_add(count[static_cast<std::size_t>(s)],
                                                       count[static_cast<std::size_t>(s - c)]);
  return count[static_cast<std::size_t>(x)];
}

}  // namespace aarf
