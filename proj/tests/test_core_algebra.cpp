#include "svlie/algebra.hpp"
#include "svlie/literal.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace svlie;

namespace {

Element E(const char *text) { return parse_element(text); }

std::vector<AlgebraParams> sample_params() {
  std::vector<AlgebraParams> out;
  for (bool c : {true, false})
    for (auto [s, l] : std::vector<std::pair<int, Rational>>{
             {1, -1}, {1, -2}, {1, 3}, {1, 0}, {0, 0}, {0, -1}, {0, -2}, {0, 1}, {0, 5}, {0, ratio(-5, 3)}})
      out.push_back(make_params(s, l, c));
  return out;
}

} // namespace

// --- oracles ---------------------------------------------------------------

TEST(Bracket, WittPartHasNoCentralTermAtOne) {
  EXPECT_EQ(bracket(E("L[1]"), E("L[-1]"), make_params(1, -1)), E("-2*L[0]"));
  EXPECT_EQ(bracket(E("L[1]"), E("L[-1]"), make_params(0, 5)), E("-2*L[0]"));
}

TEST(Bracket, VirasoroCentralTerm) {
  EXPECT_EQ(bracket(E("L[2]"), E("L[-2]"), make_params(1, -1)), E("-4*L[0] - 1/2*c"));
  EXPECT_EQ(bracket(E("L[3]"), E("L[-3]"), make_params(0, 0)), E("-6*L[0] - 2*c"));
}

TEST(Bracket, CenterlessDropsC) {
  EXPECT_EQ(bracket(E("L[2]"), E("L[-2]"), make_params(1, -1, false)), E("-4*L[0]"));
}

TEST(Bracket, YYIntoM) { EXPECT_EQ(bracket(E("Y[1/2]"), E("Y[-1/2]"), make_params(1, 3)), E("-M[0]")); }

TEST(Bracket, LYWithVanishingShift) {
  EXPECT_EQ(bracket(E("L[1]"), E("Y[1/2]"), make_params(1, -1)), E("1/2*Y[3/2]"));
}

TEST(Bracket, LMDeformedByLambda) {
  EXPECT_EQ(bracket(E("L[1]"), E("M[2]"), make_params(0, -1)), E("3*M[3]"));
  EXPECT_EQ(bracket(E("L[2]"), E("M[1]"), make_params(0, ratio(-5, 3))), E("13/3*M[3]"));
}

TEST(Bracket, TwistedYIndices) {
  // s = 0: Y indices are integers and [L_n, Y_m] = (m - (lambda+1)/2 n) Y_{m+n}
  EXPECT_EQ(bracket(E("L[2]"), E("Y[1]"), make_params(0, 1)), E("-Y[3]"));
  EXPECT_EQ(bracket(E("Y[2]"), E("Y[-1]"), make_params(0, 1)), E("-3*M[1]"));
}

TEST(Bracket, VanishingPairs) {
  const auto p = make_params(1, -2);
  EXPECT_TRUE(bracket(E("M[1]"), E("M[2]"), p).is_zero());
  EXPECT_TRUE(bracket(E("M[1]"), E("Y[1/2]"), p).is_zero());
  EXPECT_TRUE(bracket(E("c"), E("L[3]"), p).is_zero());
}

TEST(Bracket, ParityViolationIsRejected) {
  EXPECT_THROW(bracket(E("Y[1]"), E("L[1]"), make_params(1, 3)), InvalidIndex);
  EXPECT_THROW(bracket(E("Y[1/2]"), E("L[1]"), make_params(0, 3)), InvalidIndex);
}

TEST(Degree, HomogeneousInhomogeneousAndZero) {
  auto d = degree_of(E("L[3] + 2*M[3]"));
  ASSERT_TRUE(d.homogeneous());
  EXPECT_EQ(d.degree, HalfInt{6});
  EXPECT_EQ(degree_of(E("L[1] + M[2]")).status, DegreeInfo::Status::Inhomogeneous);
  EXPECT_EQ(degree_of(Element{}).status, DegreeInfo::Status::Any);
}

TEST(Center, GenericOriginalSectorIsC) {
  auto z = center_in_window(make_params(1, 3, true), Window::symmetric(8));
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], E("c"));
}

TEST(Center, TwistedZeroHasM0) {
  auto z = center_in_window(make_params(0, 0, true), Window::symmetric(8));
  ASSERT_EQ(z.size(), 2u);
  EXPECT_TRUE(in_span(E("c"), z));
  EXPECT_TRUE(in_span(E("M[0]"), z));
  auto zl = center_in_window(make_params(0, 0, false), Window::symmetric(8));
  ASSERT_EQ(zl.size(), 1u);
  EXPECT_EQ(zl[0], E("M[0]"));
}

TEST(Center, CenterlessGenericIsZero) { EXPECT_TRUE(center_in_window(make_params(1, 3, false), Window::symmetric(8)).empty()); }

TEST(Jacobi, HoldsOnSampledAlgebras) {
  for (const auto &p : {make_params(1, -2), make_params(0, 5), make_params(0, ratio(-5, 3), false)}) {
    auto rep = check_jacobi(p, Window::symmetric(12));
    EXPECT_TRUE(rep.passed()) << describe(p);
    EXPECT_GT(rep.triples_checked, 0u);
  }
}

TEST(Jacobi, CorruptedTableIsCaught) {
  const auto p = make_params(0, 1);
  auto broken = [&](const BasisIndex &a, const BasisIndex &b) {
    BasisBracket out = bracket_basis_unchecked(a, b, p);
    // perturb [L_1, M_m] only, breaking antisymmetry-consistent Jacobi
    if (a == L(1) && b.kind == Kind::M)
      for (int i = 0; i < out.count; ++i) out.terms[i].coeff += 1;
    return out;
  };
  auto rep = check_jacobi_with(p, Window::symmetric(8), broken);
  ASSERT_FALSE(rep.passed());
  EXPECT_FALSE(rep.violations.front().value.is_zero());
}

// --- properties -------------------------------------------------------------

TEST(BracketProperty, AntisymmetryGradingCentralityAndIdeal) {
  const Window w = Window::symmetric(10);
  for (const auto &p : sample_params()) {
    const auto gens = generators_in(w, p);
    for (const auto &g : gens)
      for (const auto &h : gens) {
        const Element gh = bracket(element(g), element(h), p);
        EXPECT_EQ(gh, -bracket(element(h), element(g), p));
        auto d = degree_of(gh);
        if (!gh.is_zero()) {
          ASSERT_TRUE(d.homogeneous());
          EXPECT_EQ(d.degree.twice, g.dd + h.dd);
        }
        if (g.kind == Kind::C) EXPECT_TRUE(gh.is_zero());
        if (h.kind == Kind::M || h.kind == Kind::Y)
          for (const auto &[k, c] : gh) EXPECT_NE(k.kind, Kind::L);
        if (!p.central)
          for (const auto &[k, c] : gh) EXPECT_NE(k.kind, Kind::C);
      }
  }
}

TEST(BracketProperty, BilinearOnRandomElements) {
  std::mt19937 rng(7);
  const auto p = make_params(1, ratio(-5, 3));
  const auto gens = generators_in(Window::symmetric(8), p);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  auto random_element = [&] {
    Element e;
    for (int i = 0; i < 4; ++i) e.add(gens[pick(rng)], ratio(coeff(rng), 1 + (rng() % 3)));
    return e;
  };
  for (int trial = 0; trial < 50; ++trial) {
    Element x = random_element(), y = random_element(), z = random_element();
    EXPECT_EQ(bracket(x + y, z, p), bracket(x, z, p) + bracket(y, z, p));
    EXPECT_TRUE(bracket(x, x, p).is_zero());
  }
}
