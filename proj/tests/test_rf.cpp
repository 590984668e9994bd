#include <doctest.h>

#include <set>

#include "aarf/rf.hpp"
#include "oracles.hpp"

using namespace aarf;

namespace {

using Rows = std::vector<std::vector<Int>>;

RFMatrix external(Int f, Rows rows) { return RFMatrix{f, std::move(rows), RFSource::External, ""}; }

const Rows kGamma3 = {{-1, 1, 0, 0, 1, 1}, {0, -1, 1, 0, 1, 1}, {0, 0, -1, 1, 1, 1},
                      {0, 0, 0, -1, 2, 1}, {1, 0, 1, 0, -1, 2}, {2, 1, 0, 0, 1, -1}};
const Rows kGamma4 = {{-1, 0, 1, 0, 1, 1}, {0, -1, 0, 1, 1, 1}, {0, 0, -1, 0, 2, 1},
                      {1, 0, 1, -1, 0, 2}, {1, 0, 0, 1, -1, 2}, {2, 0, 1, 0, 1, -1}};
const Rows kRf81 = {{-1, 1, 0, 1, 1},
                    {0, -1, 1, 1, 1},
                    {0, 0, -1, 2, 1},
                    {2, 0, 1, -1, 2},
                    {6, 1, 0, 1, -1}};
const Rows kRf31 = {{-1, 0, 0, 0, 0, 2}, {4, -1, 0, 0, 0, 0}, {3, 1, -1, 0, 0, 0},
                    {3, 0, 1, -1, 0, 0}, {3, 0, 0, 1, -1, 0}, {3, 0, 0, 0, 1, -1}};

}  // namespace

TEST_CASE("validate_rf") {
  AAPresentation big(14, 3, 4, 21);
  CHECK(validate_rf(big.columns(), 50, external(50, kGamma3)));
  CHECK_FALSE(validate_rf(big.columns(), 50, external(50, Rows(6, std::vector<Int>(6, 0)))));

  AAPresentation sym(10, 9, 3, 35);
  Rows perturbed = kRf81;
  perturbed[2][1] += 1;
  CHECK(validate_rf(sym.columns(), 81, external(81, kRf81)));
  CHECK_FALSE(validate_rf(sym.columns(), 81, external(81, perturbed)));
  CHECK_FALSE(validate_rf(big.columns(), 50, external(50, kRf81)));  // wrong shape
}

TEST_CASE("closed forms reproduce the printed matrices") {
  AAPresentation big(14, 3, 4, 21);
  StructureConstants sc = structure_constants(big);
  auto m50 = rf_closed_form(big, sc, 50);
  REQUIRE(m50.size() == 1);
  CHECK(m50[0].rows == kGamma3);
  CHECK(m50[0].source == RFSource::ClosedForm);

  auto m53 = rf_closed_form(big, sc, 53);
  REQUIRE(m53.size() == 1);
  CHECK(m53[0].rows == kGamma4);

  AAPresentation sym(10, 9, 3, 35);
  StructureConstants sc2 = structure_constants(sym);
  auto m81 = rf_closed_form(sym, sc2, 81);
  REQUIRE(m81.size() == 2);  // base construction plus the alternate first row
  CHECK(m81[0].rows == kRf81);
  CHECK(m81[1].rows[0] == std::vector<Int>({-1, 0, 2, 0, 1}));
  for (const auto& m : m81) CHECK(validate_rf(sym.columns(), 81, m));

  AAPresentation wne(11, 2, 4, 21);
  StructureConstants sc3 = structure_constants(wne);
  auto m31 = rf_closed_form(wne, sc3, 31);
  REQUIRE(m31.size() == 1);
  CHECK(m31[0].rows == kRf31);

  // every pseudo-Frobenius element of this presentation has a valid form
  for (Int f : wne.semigroup().pseudo_frobenius())
    for (const auto& m : rf_closed_form(wne, sc3, f)) CHECK(validate_rf(wne.columns(), f, m));

  CHECK_THROWS_AS(rf_closed_form(big, sc, 51), NoApplicableCase);
}

TEST_CASE("enumeration counts and golden stream") {
  AAPresentation big(14, 3, 4, 21);
  CHECK(rf_count(big, 50) == 720);
  CHECK(rf_count(big, 53) == 2520);
  CHECK_THROWS_AS(rf_count(big, 51), NotPseudoFrobenius);

  NumericalSemigroup h23({2, 3});
  CHECK(rf_count(h23, 1) == 1);
  auto ms = rf_enumerate(h23, 1);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].rows == Rows({{-1, 1}, {2, -1}}));

  // stream length equals the product formula; every matrix validates
  auto all50 = rf_enumerate(big, 50);
  CHECK(static_cast<Int>(all50.size()) == 720);
  std::set<Rows> distinct;
  for (const auto& m : all50) {
    CHECK(validate_rf(big.columns(), 50, m));
    distinct.insert(m.rows);
  }
  CHECK(distinct.size() == 720);

  auto limited = rf_enumerate(big, 53, 10);
  CHECK(limited.size() == 10);
}

TEST_CASE("enumeration agrees with the unfiltered product oracle") {
  AAPresentation pres(4, 1, 1, 6);  // PF = {7}
  const auto& H = pres.semigroup();
  auto mine = rf_enumerate(pres, 7);
  auto oracle = oracles::rf_all_by_product(H, pres.columns(), 7);
  REQUIRE(mine.size() == oracle.size());
  std::set<Rows> a, b;
  for (const auto& m : mine) a.insert(m.rows);
  for (const auto& m : oracle) b.insert(m.rows);
  CHECK(a == b);
}

TEST_CASE("rf_relations") {
  NumericalSemigroup h23({2, 3});
  auto ms = rf_enumerate(h23, 1);
  auto rels = rf_relations(ms[0], h23.generators());
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].plus == std::vector<Int>({3, 0}));
  CHECK(rels[0].minus == std::vector<Int>({0, 2}));
  CHECK(rels[0].degree == 6);

  // identical rows contribute nothing
  RFMatrix degenerate = external(0, {{2, 1}, {2, 1}});
  CHECK(rf_relations(degenerate, h23.generators()).empty());

  // every relation of a printed matrix lies in the ideal: equal degrees
  AAPresentation big(14, 3, 4, 21);
  for (const auto& b : rf_relations(external(50, kGamma3), big.columns())) {
    CHECK(dot(b.plus, big.columns()) == dot(b.minus, big.columns()));
    CHECK(b.plus != b.minus);
    for (std::size_t i = 0; i < b.plus.size(); ++i) CHECK(b.plus[i] * b.minus[i] == 0);
  }
}

TEST_CASE("all_rf_relations") {
  NumericalSemigroup h23({2, 3});
  auto rs = all_rf_relations(h23, h23.generators(), 1);
  REQUIRE(rs.relations.size() == 1);
  CHECK(rs.relations[0].plus == std::vector<Int>({3, 0}));
  CHECK(rs.relations[0].minus == std::vector<Int>({0, 2}));

  AAPresentation big(14, 3, 4, 21);
  auto rs50 = all_rf_relations(big, 50);
  // superset of the printed matrix's relations
  for (const auto& b : rf_relations(external(50, kGamma3), big.columns())) {
    CHECK(std::binary_search(rs50.relations.begin(), rs50.relations.end(), b));
  }

  // equals the union over all enumerated matrices
  std::set<Binomial> unioned;
  for (const auto& m : rf_enumerate(big, 50))
    for (auto& b : rf_relations(m, big.columns())) unioned.insert(std::move(b));
  CHECK(std::vector<Binomial>(unioned.begin(), unioned.end()) == rs50.relations);
}

TEST_CASE("relations of the p=1, mu>0 matrix include the three key binomials") {
  // First qualifying presentation: W nonempty, mu > 0, p = 1.
  for (Int m0 = 3; m0 <= 20; ++m0)
    for (Int d = 1; d <= 6; ++d)
      for (Int n = 2; n <= 3 * m0; ++n) {
        std::optional<AAPresentation> pres;
        try {
          pres.emplace(m0, d, 1, n);
        } catch (const Error&) {
          continue;
        }
        StructureConstants sc = structure_constants(*pres);
        if (sc.w_empty() || sc.mu == 0) continue;
        CAPTURE(m0);
        CAPTURE(d);
        CAPTURE(n);
        Int b1 = beta_value(*pres, sc, 1);
        auto rs = all_rf_relations(*pres, b1);
        auto expect = [&](std::vector<Int> delta) {
          Binomial b = make_binomial(delta, pres->columns());
          CHECK(std::binary_search(rs.relations.begin(), rs.relations.end(), b));
        };
        expect({-sc.lambda, sc.u, -sc.w});                 // x1^u - x0^lambda x2^w
        expect({sc.nu, -(sc.u - sc.z), -(sc.v - sc.w)});   // x0^nu - x1^{u-z} x2^{v-w}
        expect({-sc.mu, -sc.z, sc.v});                     // x2^v - x0^mu x1^z
        return;
      }
  FAIL("no qualifying presentation found");
}

TEST_CASE("closed forms validate across a parameter sweep") {
  int matrices = 0;
  for (Int p = 1; p <= 4; ++p)
    for (Int m0 = 4; m0 <= 20; m0 += 2)
      for (Int d = 1; d <= 5; d += 2)
        for (Int n = 2; n <= 2 * m0; n += 3) {
          std::optional<AAPresentation> pres;
          try {
            pres.emplace(m0, d, p, n);
          } catch (const Error&) {
            continue;
          }
          StructureConstants sc = structure_constants(*pres);
          for (Int f : pres->semigroup().pseudo_frobenius()) {
            CAPTURE(m0);
            CAPTURE(d);
            CAPTURE(p);
            CAPTURE(n);
            CAPTURE(f);
            auto forms = rf_closed_form(*pres, sc, f);
            CHECK_FALSE(forms.empty());
            for (const auto& m : forms) {
              CHECK(validate_rf(pres->columns(), f, m));
              ++matrices;
            }
          }
        }
  CHECK(matrices > 200);
}
