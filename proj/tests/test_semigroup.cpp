#include <doctest.h>

#include <numeric>

#include "aarf/semigroup.hpp"
#include "oracles.hpp"

using namespace aarf;

namespace {
std::vector<Int> V(std::initializer_list<Int> xs) { return xs; }
}  // namespace

TEST_CASE("construction reduces to the minimal generating set") {
  NumericalSemigroup a({2, 3});
  CHECK(a.generators() == V({2, 3}));
  CHECK(a.conductor() == 2);

  NumericalSemigroup b({14, 17, 20, 23, 26, 21});
  CHECK(b.generators() == V({14, 17, 20, 21, 23, 26}));

  NumericalSemigroup c({2, 4, 5});
  CHECK(c.generators() == V({2, 5}));

  NumericalSemigroup one({1});
  CHECK(one.conductor() == 0);

  CHECK_THROWS_AS(NumericalSemigroup({2, 4}), GcdNotOne);
  CHECK_THROWS_AS(NumericalSemigroup({}), InvalidArgument);
  CHECK_THROWS_AS(NumericalSemigroup({0, 3}), InvalidArgument);
  CHECK_THROWS_AS(NumericalSemigroup({-2, 3}), InvalidArgument);
}

TEST_CASE("membership") {
  NumericalSemigroup h23({2, 3});
  CHECK_FALSE(h23.contains(1));
  CHECK(h23.contains(0));
  CHECK_FALSE(h23.contains(-5));
  CHECK(h23.contains(1000));

  NumericalSemigroup big({14, 17, 20, 21, 23, 26});
  CHECK(big.contains(49));  // 49 = 21 + 2*14
  CHECK_FALSE(big.contains(53));
}

TEST_CASE("apery sets") {
  NumericalSemigroup big({14, 17, 20, 21, 23, 26});
  AperySet ap = big.apery_set(14);
  CHECK(ap.elements ==
        V({0, 17, 20, 21, 23, 26, 38, 41, 43, 44, 46, 47, 64, 67}));

  NumericalSemigroup h23({2, 3});
  CHECK(h23.apery_set(2).elements == V({0, 3}));

  NumericalSemigroup d({10, 19, 28, 37, 35});
  CHECK(d.apery_set(10).elements == V({0, 19, 28, 35, 37, 54, 56, 63, 72, 91}));

  CHECK_THROWS_AS(big.apery_set(15), NotAMember);
  CHECK_THROWS_AS(big.apery_set(0), NotAMember);
  CHECK_THROWS_AS(big.apery_set(-14), NotAMember);
}

TEST_CASE("frobenius numbers") {
  CHECK(NumericalSemigroup({2, 3}).frobenius_number() == 1);
  CHECK(NumericalSemigroup({10, 19, 28, 37, 35}).frobenius_number() == 81);
  CHECK(NumericalSemigroup({14, 17, 20, 21, 23, 26}).frobenius_number() == 53);
  CHECK_THROWS_AS(NumericalSemigroup({1}).frobenius_number(), NoGaps);
}

TEST_CASE("pseudo-Frobenius numbers and type") {
  NumericalSemigroup big({14, 17, 20, 21, 23, 26});
  CHECK(big.pseudo_frobenius() == V({50, 53}));
  CHECK(big.type() == 2);
  CHECK_FALSE(big.is_symmetric());

  NumericalSemigroup d({10, 19, 28, 37, 35});
  CHECK(d.pseudo_frobenius() == V({81}));
  CHECK(d.is_symmetric());

  CHECK(NumericalSemigroup({2, 3}).pseudo_frobenius() == V({1}));

  NumericalSemigroup e({11, 13, 15, 17, 19, 21});
  CHECK(e.pseudo_frobenius() == V({23, 25, 27, 29, 31}));
  CHECK_FALSE(e.is_symmetric());
}

TEST_CASE("factorizations") {
  NumericalSemigroup h23({2, 3});
  auto f6 = h23.factorizations(6);
  REQUIRE(f6.size() == 2);
  CHECK(f6[0].coeffs == V({3, 0}));
  CHECK(f6[1].coeffs == V({0, 2}));

  NumericalSemigroup d({10, 19, 28, 37, 35});
  auto f0 = d.factorizations(0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].coeffs == V({0, 0, 0, 0, 0}));
  CHECK(d.factorizations(11).empty());
  CHECK(d.factorizations(-3).empty());

  // 64 lies in Ap(H, 14); both factorizations, in enumeration order.
  NumericalSemigroup big({14, 17, 20, 21, 23, 26});
  auto f64 = big.factorizations(64);
  REQUIRE(f64.size() == 2);
  CHECK(f64[0].coeffs == V({0, 0, 1, 1, 1, 0}));
  CHECK(f64[1].coeffs == V({0, 1, 0, 1, 0, 1}));
}

TEST_CASE("semigroup invariants over small instances") {
  const std::vector<std::vector<Int>> cases = {
      {2, 3},       {4, 5, 6},    {5, 7, 9, 8}, {10, 19, 28, 37, 35},
      {7, 11, 13},  {6, 10, 15},  {11, 13, 15, 17, 19, 21},
      {14, 17, 20, 21, 23, 26},   {9, 10, 4},   {8, 9, 10, 12}};
  for (const auto& gens : cases) {
    CAPTURE(gens);
    NumericalSemigroup H(gens);

    // Apery: m elements, a full residue system, each h in H with h - m out.
    for (Int m : {H.multiplicity(), H.max_generator()}) {
      AperySet ap = H.apery_set(m);
      REQUIRE(static_cast<Int>(ap.elements.size()) == m);
      std::set<Int> residues;
      for (Int h : ap.elements) {
        residues.insert(h % m);
        CHECK(H.contains(h));
        CHECK_FALSE(H.contains(h - m));
      }
      CHECK(static_cast<Int>(residues.size()) == m);
    }

    // PF from Apery maxima agrees with the direct gap scan.
    CHECK(H.pseudo_frobenius() == oracles::pf_gap_scan(H));
    for (Int f : H.pseudo_frobenius()) {
      CHECK_FALSE(H.contains(f));
      for (Int g : H.generators()) CHECK(H.contains(f + g));
    }
    CHECK(H.frobenius_number() == H.pseudo_frobenius().back());

    // Factorizations exist exactly on members and always dot back.
    Int sum = std::accumulate(H.generators().begin(), H.generators().end(), Int{0});
    for (Int x = 0; x <= H.conductor() + sum; ++x) {
      auto fs = H.factorizations(x);
      CHECK(fs.empty() == !H.contains(x));
      for (const auto& f : fs) CHECK(dot(f.coeffs, H.generators()) == x);
    }

    // Membership table agrees with naive recursion on a window.
    for (Int x = 0; x <= std::min<Int>(H.conductor() + 3, 60); ++x)
      CHECK(H.contains(x) == oracles::member_recursive(H.generators(), x));
  }
}

TEST_CASE("factorization counting matches enumeration") {
  const std::vector<std::vector<Int>> cases = {{2, 3}, {4, 5, 6}, {10, 19, 28, 37, 35}};
  for (const auto& gens : cases) {
    for (Int x = 0; x <= 120; x += 7) {
      CAPTURE(gens);
      CAPTURE(x);
      CHECK(count_factorizations(gens, x) ==
            static_cast<Int>(enumerate_factorizations(gens, x).size()));
    }
  }
}
