#include "svlie/catalog.hpp"
#include "svlie/literal.hpp"

#include <gtest/gtest.h>

using namespace svlie;

namespace {

Element E(const char *text) { return parse_element(text); }

const Window kW = Window::symmetric(12);

} // namespace

TEST(IsDerivation, Sigma1OnItsOwnRow) {
  const auto p = make_params(1, -1);
  CatalogParams c;
  c.alpha = 1;
  c.beta = 1;
  const auto cat = catalog<Element>(p, c, kW);
  ASSERT_EQ(cat.size(), 1u);
  EXPECT_EQ(cat[0].name, "sigma_1");
  EXPECT_TRUE(is_derivation(cat[0].table, p).passed());
}

TEST(IsDerivation, CubicCocycleSinglesOutMinusTwo) {
  EXPECT_TRUE(is_derivation(lemma_derivation("d_2^-2", make_params(0, -2), kW), make_params(0, -2)).passed());
  const auto rep = is_derivation(lemma_derivation("d_2^-2", make_params(0, -1), kW), make_params(0, -1));
  ASSERT_FALSE(rep.passed());
  const auto &v = rep.violations.front();
  EXPECT_EQ(v.component.kind, Kind::M);
  EXPECT_NE(v.residual, 0);
}

TEST(IsDerivation, BoundaryPairsAreSkipped) {
  const auto rep = is_derivation(lemma_derivation("d_1", make_params(0, 5), kW), make_params(0, 5));
  EXPECT_TRUE(rep.passed());
  EXPECT_GT(rep.pairs_skipped, 0u);
  EXPECT_GT(rep.pairs_checked, 0u);
}

TEST(Catalog, Sigma1Values) {
  const auto p = make_params(1, -1);
  CatalogParams c;
  c.alpha = 1;
  const auto t = catalog<Element>(p, c, kW)[0].table;
  EXPECT_EQ(t.at(L(3)), E("6*M[3]"));
  EXPECT_EQ(t.at(L(-2)), E("6*M[-2]"));
  EXPECT_TRUE(t.at(L(1)).is_zero());
  EXPECT_TRUE(t.at(M(2)).is_zero());
  EXPECT_TRUE(t.at(Ydd(3)).is_zero());
  EXPECT_TRUE(t.at(central()).is_zero());
}

TEST(Catalog, Rho4ShiftsYIntoM) {
  const auto p = make_params(0, 1);
  CatalogParams c;
  c.zeta = 1;
  const auto t = catalog<Element>(p, c, kW)[0].table;
  EXPECT_EQ(t.at(Ydd(4)), E("M[2]"));
  EXPECT_EQ(t.at(Ydd(-6)), E("M[-3]"));
  EXPECT_TRUE(t.at(L(2)).is_zero());
  EXPECT_TRUE(is_derivation(t, p).passed());
}

TEST(Catalog, TensorRho1WithCentralLeg) {
  const auto p = make_params(0, 0);
  CatalogParams c;
  c.mu = 1;
  c.z = E("c");
  const auto cat = catalog<Tensor2>(p, c, kW);
  ASSERT_EQ(cat.size(), 1u);
  const auto &t = cat[0].table;
  EXPECT_EQ(t.at(L(3)), parse_tensor2("3*c (x) M[3]"));
  EXPECT_TRUE(t.at(L(0)).is_zero());
  EXPECT_TRUE(t.at(Ydd(2)).is_zero());
  EXPECT_TRUE(is_derivation(t, p).passed());
}

TEST(Catalog, CaseMismatchIsRejected) {
  EXPECT_THROW(catalog<Element>(make_params(0, -3), CatalogParams{}, kW), CaseError);
  EXPECT_THROW(catalog<Tensor2>(make_params(1, 0), CatalogParams{}, kW), CaseError);
  CatalogParams c;
  c.mu = 1;
  c.z = E("L[1]");
  EXPECT_THROW(catalog<Tensor2>(make_params(0, 0), c, kW), CaseError);
}

TEST(Catalog, ParameterBasisSizes) {
  EXPECT_EQ(catalog_parameter_basis<Element>(make_params(1, -1), kW).size(), 2u);
  EXPECT_EQ(catalog_parameter_basis<Tensor2>(make_params(1, -1, true), kW).size(), 4u);
  EXPECT_EQ(catalog_parameter_basis<Tensor2>(make_params(0, 0, true), kW).size(), 12u);
  EXPECT_EQ(catalog_parameter_basis<Tensor2>(make_params(0, 0, false), kW).size(), 6u);
  EXPECT_EQ(catalog_parameter_basis<Tensor2>(make_params(0, 5, false), kW).size(), 0u);
}

TEST(Catalog, EveryTableIsADerivationOnItsRow) {
  for (bool central : {true, false})
    for (auto [s, l] : std::vector<std::pair<int, int>>{{1, 0}, {1, -1}, {1, -2}, {1, 3}, {0, 0}, {0, -1}, {0, -2}, {0, 1}, {0, 5}}) {
      const auto p = make_params(s, l, central);
      for (const auto &nd : catalog_parameter_basis<Element>(p, kW))
        EXPECT_TRUE(is_derivation(nd.table, p).passed()) << describe(p) << " " << nd.name;
      for (const auto &name : named_basis(p))
        EXPECT_TRUE(is_derivation(lemma_derivation(name, p, kW), p).passed()) << describe(p) << " " << name;
      if (case_row(p) == CaseRow::Orig0) continue;
      for (const auto &nd : catalog_parameter_basis<Tensor2>(p, kW))
        EXPECT_TRUE(is_derivation(nd.table, p).passed()) << describe(p) << " " << nd.name;
    }
}

TEST(Inner, CentralVectorGivesZeroTable) {
  const auto t = inner(E("M[0]"), make_params(0, 0), kW);
  EXPECT_TRUE(t.values.empty());
  EXPECT_EQ(t.degree, HalfInt{0});
}

TEST(Inner, IsBracketWithV) {
  const auto p = make_params(1, -2);
  const auto t = inner(E("L[1]"), p, kW);
  EXPECT_EQ(t.degree, HalfInt{2});
  for (const auto &g : generators_in(kW, p))
    EXPECT_EQ(t.at(g), truncate(bracket(element(g), E("L[1]"), p), kW));
}

TEST(Inner, InhomogeneousIsRejected) { EXPECT_THROW(inner(E("L[1] + M[2]"), make_params(0, 1), kW), std::invalid_argument); }

TEST(Inner, EveryInnerTableIsADerivation) {
  for (const auto &p : {make_params(1, -1), make_params(0, 0, false)}) {
    for (const char *v : {"L[2]", "M[-1]", "Y[1/2]", "Y[0]", "L[0] + 3*M[0]"}) {
      Element e;
      try {
        e = E(v);
        for (const auto &[b, c] : e) require_valid(b, p);
      } catch (const InvalidIndex &) {
        continue;
      }
      EXPECT_TRUE(is_derivation(inner(e, p, kW), p).passed()) << describe(p) << " " << v;
    }
    const Tensor2 t = parse_tensor2("L[1] (x) M[-2] - M[-2] (x) L[1]");
    EXPECT_TRUE(is_derivation(inner(t, p, kW), p).passed());
  }
}

TEST(Inner, AdY0IsTheYIntoMRuleAtMinusOne) {
  // s = 0, lambda = -1: [L_n, Y_0] = 0, so ad Y_0 sends Y_n to n M_n only.
  const auto p = make_params(0, -1);
  const auto ad = inner(E("-Y[0]"), p, kW);
  const auto rule = lemma_derivation("d_3^-1", p, kW);
  for (const auto &g : generators_in(kW, p)) EXPECT_EQ(ad.at(g), rule.at(g)) << to_string(g);
}

TEST(Homogeneous, ComponentsSumBack) {
  const auto p = make_params(1, 3);
  const auto a = inner(E("L[1]"), p, kW);
  const auto b = inner(E("M[-1]"), p, kW);
  const auto sum = a + b;
  EXPECT_FALSE(sum.degree.has_value());
  const auto degs = support_degrees(sum);
  ASSERT_EQ(degs.size(), 2u);
  AlgebraDerivation rebuilt;
  rebuilt.window = kW;
  for (HalfInt d : degs) rebuilt = rebuilt + homogeneous_component(sum, d);
  EXPECT_EQ(rebuilt.values, sum.values);
  EXPECT_EQ(homogeneous_component(sum, HalfInt{2}).values, a.values);
  EXPECT_TRUE(homogeneous_component(a, HalfInt{0}).values.empty());
}

TEST(Homogeneous, CatalogTableIsItsOwnDegreeZeroPart) {
  const auto p = make_params(1, -1);
  CatalogParams c;
  c.alpha = 1;
  const auto t = catalog<Element>(p, c, kW)[0].table;
  EXPECT_EQ(homogeneous_component(t, HalfInt{0}), t);
}
