#include <gtest/gtest.h>

#include "test_util.hpp"
#include "waring/apolarity.hpp"

namespace waring {
namespace {

using testing::random_form;
using testing::random_invertible;
using testing::random_linear;

constexpr long kPrec = 256;

bool same_span(const std::vector<DualOp>& got, const std::vector<DualOp>& want) {
  if (got.size() != want.size()) return false;
  if (got.empty()) return true;
  const int n = got.front().num_vars();
  const int e = got.front().degree();
  auto labels = monomials(n, e);
  Matrix m(got.size() + want.size(), labels.size());
  for (std::size_t r = 0; r < got.size(); ++r)
    for (std::size_t c = 0; c < labels.size(); ++c) m(r, c) = got[r].coefficient(labels[c]);
  for (std::size_t r = 0; r < want.size(); ++r)
    for (std::size_t c = 0; c < labels.size(); ++c) m(got.size() + r, c) = want[r].coefficient(labels[c]);
  return rank(m, kPrec) == want.size();
}

bool contains_point(const std::vector<ProjPoint>& pts, std::vector<Number> p) {
  for (const auto& q : pts)
    if (projective_distance(q.coords, p, kPrec) < BigFloat::pow2(-100, kPrec)) return true;
  return false;
}

DualOp dual(const char* text, int n) { return parse_homogeneous<DualTag>(text, n); }

TEST(Catalecticant, Ranks) {
  EXPECT_EQ(rank(catalecticant(parse_form("x0^3", 2), 1).entries, kPrec), 1u);
  EXPECT_EQ(rank(catalecticant(parse_form("x0^2 + x1^2", 2), 1).entries, kPrec), 2u);
  EXPECT_EQ(rank(catalecticant(parse_form("x0^3 + x1^3 + x2^3", 3), 2).entries, kPrec), 3u);
  CatMatrix c = catalecticant(parse_form("x0*x1^2 + x1*x2^2", 3), 2);
  EXPECT_EQ(c.entries.rows(), 6u);
  EXPECT_EQ(c.entries.cols(), 3u);
  EXPECT_THROW(catalecticant(parse_form("x0^3", 2), 4), InvalidInput);
}

TEST(ApolarComponent, Examples) {
  EXPECT_TRUE(same_span(apolar_component(parse_form("x0^3 + x1^3", 2), 2), {dual("d0*d1", 2)}));
  EXPECT_TRUE(same_span(apolar_component(parse_form("x0*x1", 2), 2), {dual("d0^2", 2), dual("d1^2", 2)}));
  EXPECT_TRUE(same_span(apolar_component(parse_form("x0*x1^2 + x1*x2^2", 3), 2),
                        {dual("d0^2", 3), dual("d0*d2", 3), dual("d0*d1 - d2^2", 3)}));
}

TEST(EssentialVariables, Examples) {
  EXPECT_EQ(essential_variables(parse_form("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", 3)), 1);
  EXPECT_EQ(essential_variables(parse_form("x0^2 + x1^2", 3)), 2);
  EXPECT_EQ(essential_variables(parse_form("x0*x1^2 + x1*x2^2", 3)), 3);
  EXPECT_THROW(essential_variables(Form(3, 2)), InvalidInput);
}

TEST(EssentialSplit, RoundTrips) {
  Form cube = parse_form("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", 3);
  EssentialSplit s = essential_split(cube);
  EXPECT_EQ(s.essential, 1);
  EXPECT_EQ(s.restricted.num_vars(), 1);
  EXPECT_EQ(s.restricted.size(), 1u);

  Form kleppe = parse_form("x0*x1^2 + x1*x2^2", 3);
  EssentialSplit k = essential_split(kleppe);
  EXPECT_EQ(k.essential, 3);
  EXPECT_EQ(k.restricted, kleppe);

  Form quad = parse_form("x1*x3", 4);
  EssentialSplit q = essential_split(quad);
  EXPECT_EQ(q.essential, 2);
  EXPECT_EQ(q.restricted.num_vars(), 2);
  // g(M^-1 x restricted) reproduces f.
  Matrix back(2, 4);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 4; ++i) back(j, i) = q.inverse(j, i);
  EXPECT_EQ(substitute(q.restricted, back), quad);
}

TEST(BasePoints, Examples) {
  auto fermat = base_points(parse_form("x0^3 + x1^3 + x2^3", 3), 2);
  EXPECT_EQ(fermat.size(), 3u);
  EXPECT_TRUE(contains_point(fermat, {Number(1), Number(0), Number(0)}));
  EXPECT_TRUE(contains_point(fermat, {Number(0), Number(1), Number(0)}));
  EXPECT_TRUE(contains_point(fermat, {Number(0), Number(0), Number(1)}));

  auto kleppe = base_points(parse_form("x0*x1^2 + x1*x2^2", 3), 2);
  ASSERT_EQ(kleppe.size(), 1u);
  EXPECT_TRUE(contains_point(kleppe, {Number(0), Number(1), Number(0)}));
  EXPECT_TRUE(kleppe.front().is_exact());

  Rng rng(5);
  Form dense = random_form(rng, 3, 3);
  EXPECT_TRUE(base_points(dense, 2).empty());
}

TEST(BasePoints, PositiveDimensionalLocus) {
  // (F^⊥)_2 = d2 * S*_1: every element vanishes on the line d2 = 0.
  EXPECT_THROW(base_points(parse_form("x0^2*x1^2", 3), 2), DegenerateSystem);
  // A single conic.
  EXPECT_THROW(base_points(parse_form("x0^2 + x1^2", 3), 1), DegenerateSystem);
  // Finite locus even though x2 is not essential.
  EXPECT_EQ(base_points(parse_form("x0^3 + x1^3", 3), 2).size(), 2u);
}

TEST(PowerWitness, Examples) {
  Form f = parse_form("x0^3 + x1^3 - x1*x2^2 + 2*x2^3", 3);
  auto w = power_witness(f, LinearForm{{Number(1), Number(0), Number(0)}}, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(contract(*w, f), linear_power(LinearForm{{Number(1), Number(0), Number(0)}}, 2));

  Form kleppe = parse_form("x0*x1^2 + x1*x2^2", 3);
  auto k = power_witness(kleppe, LinearForm{{Number(0), Number(1), Number(0)}}, 2);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(*k, dual("d0", 3));

  Rng rng(6);
  Form dense = random_form(rng, 3, 3);
  EXPECT_FALSE(power_witness(dense, random_linear(rng, 3), 2).has_value());
}

TEST(Properties, RankSymmetry) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    int d = 2 + static_cast<int>(rng.below(4));
    Form f = random_form(rng, n, d, 2);
    for (int e = 0; e <= d; ++e)
      EXPECT_EQ(rank(catalecticant(f, e).entries, kPrec), rank(catalecticant(f, d - e).entries, kPrec));
  }
}

TEST(Properties, KernelAnnihilatesAndDimensionsAddUp) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.below(2));
    int d = 2 + static_cast<int>(rng.below(3));
    Form f = random_form(rng, n, d, 2);
    for (int e = 1; e <= d; ++e) {
      auto basis = apolar_component(f, e);
      for (const auto& op : basis) EXPECT_TRUE(contract(op, f).is_zero());
      EXPECT_EQ(basis.size() + rank(catalecticant(f, e).entries, kPrec), monomial_count(n, e));
    }
  }
}

TEST(Properties, EssentialVariablesInvariant) {
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    int d = 2 + static_cast<int>(rng.below(3));
    // Forms in fewer variables embedded in n.
    int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    Form g = random_form(rng, m, d);
    Matrix embed(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < embed.rows(); ++i) embed(i, i) = 1;
    Form f = substitute(g, embed);
    Matrix change = random_invertible(rng, n);
    EXPECT_EQ(essential_variables(f), essential_variables(change_coordinates(f, change)));
  }
}

TEST(Properties, BasePointIffPowerWitness) {
  // Forms l^3 + g with a planted base point at [l] (up to the dual pairing)
  // and random dense forms without base points.
  Rng rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    Matrix m = random_invertible(rng, 3, 2);
    Form normal = trial % 2 == 0 ? parse_form("x0^3 + x1^3 + x1^2*x2 + 2*x2^3", 3) : parse_form("x0*x1^2 + x1*x2^2", 3);
    Form f = change_coordinates(normal, m);
    auto pts = base_points(f, 2, kPrec, static_cast<std::uint64_t>(trial));
    ASSERT_FALSE(pts.empty());
    for (const auto& p : pts) EXPECT_TRUE(power_witness(f, p.as_linear_form(), 2).has_value());
    Form dense = random_form(rng, 3, 3);
    EXPECT_TRUE(base_points(dense, 2, kPrec, static_cast<std::uint64_t>(trial)).empty());
    EXPECT_FALSE(power_witness(dense, random_linear(rng, 3), 2).has_value());
  }
}

}  // namespace
}  // namespace waring
