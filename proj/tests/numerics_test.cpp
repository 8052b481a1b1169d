#include <gtest/gtest.h>

#include <random>

#include "waring/errors.hpp"
#include "waring/linalg.hpp"
#include "waring/numerics.hpp"
#include "waring/random.hpp"
#include "waring/unipoly.hpp"

namespace waring {
namespace {

UniPoly poly(std::initializer_list<long> c) {
  std::vector<Number> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

bool has_root(const std::vector<Root>& roots, const Number& z, long prec) {
  for (const auto& r : roots)
    if ((r.value - z).abs(prec) < BigFloat::pow2(-prec / 2, prec)) return true;
  return false;
}

TEST(Rational, CanonicalForm) {
  Rational q(6, -4);
  q.canonicalize();
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(Number(Rational(0)).rational().get_den(), 1);
}

TEST(Number, ExactUntilApproximateOperandEnters) {
  Number a(Rational(1, 3));
  Number b = a * Number(3) + Number(1);
  EXPECT_TRUE(b.is_exact());
  EXPECT_EQ(b, Number(2));
  Number c = b + Number(Complex(Rational(1, 2), 300));
  EXPECT_FALSE(c.is_exact());
  EXPECT_EQ(c.precision(), 300);
}

TEST(UnivariateRoots, SquareMinusOne) {
  auto roots = univariate_roots(poly({-1, 0, 1}), 256);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_TRUE(has_root(roots, Number(1), 256));
  EXPECT_TRUE(has_root(roots, Number(-1), 256));
  for (const auto& r : roots) EXPECT_TRUE(r.value.is_exact());
}

TEST(UnivariateRoots, SquarePlusOne) {
  auto roots = univariate_roots(poly({1, 0, 1}), 256);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_TRUE(has_root(roots, Number(Complex(BigFloat(0, 256), BigFloat(1, 256))), 256));
  EXPECT_TRUE(has_root(roots, Number(Complex(BigFloat(0, 256), BigFloat(-1, 256))), 256));
}

TEST(UnivariateRoots, CubeRootsOfTwo) {
  UniPoly p = poly({-2, 0, 0, 1});
  auto roots = univariate_roots(p, 256);
  ASSERT_EQ(roots.size(), 3u);
  for (const auto& r : roots) EXPECT_LE(p(r.value).abs(256), BigFloat::pow2(-128, 256) * BigFloat(2, 256) * BigFloat(8, 256));
}

TEST(UnivariateRoots, ZeroPolynomialRejected) { EXPECT_THROW(univariate_roots(UniPoly(), 256), InvalidInput); }

TEST(UnivariateRoots, MultiplicitiesFromSquarefreeDecomposition) {
  // (t-1)^2 (t+2)
  auto roots = univariate_roots(poly({2, -3, 0, 1}), 256);
  int total = 0;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (r.value == Number(1)) EXPECT_EQ(r.multiplicity, 2);
  }
  EXPECT_EQ(total, 3);
}

TEST(SquarefreePart, Examples) {
  UniPoly a = squarefree_part(poly({2, -3, 0, 1}));
  EXPECT_EQ(a.degree(), 2);
  EXPECT_TRUE(a(Number(1)).is_zero());
  EXPECT_TRUE(a(Number(-2)).is_zero());
  EXPECT_EQ(squarefree_part(poly({1, 0, 1})).degree(), 2);
  UniPoly c = squarefree_part(poly({0, 0, 0, 1}));
  EXPECT_EQ(c.degree(), 1);
  EXPECT_TRUE(c(Number(0)).is_zero());
}

TEST(RootsProperty, ProductReconstructsRandomPolynomials) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int deg = 1 + static_cast<int>(rng.below(12));
    std::vector<Number> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(Rational(rng.uniform(20), 1 + static_cast<long>(rng.below(5))));
    if (c.back().is_zero()) c.back() = Number(1);
    UniPoly p(c);
    auto roots = univariate_roots(p, 256);
    UniPoly prod = UniPoly::monomial(p.leading(), 0);
    int count = 0;
    for (const auto& r : roots)
      for (int k = 0; k < r.multiplicity; ++k) {
        prod = prod * UniPoly({-r.value, Number(1)});
        ++count;
      }
    ASSERT_EQ(count, p.degree());
    BigFloat scale(1, 256);
    for (const auto& x : p.coeffs()) scale = max(scale, x.abs(256));
    for (int i = 0; i <= p.degree(); ++i)
      EXPECT_LE((prod.coeff(i) - p.coeff(i)).abs(256), BigFloat::pow2(-100, 256) * scale * BigFloat(1L << 20, 256));
  }
}

TEST(SquarefreeProperty, DividesAndDetectsRepeatedRoots) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly p = UniPoly::monomial(Number(1 + static_cast<long>(rng.below(3))), 0);
    int factors = 1 + static_cast<int>(rng.below(4));
    for (int k = 0; k < factors; ++k) p = p * UniPoly({Number(rng.uniform(5)), Number(1)});
    UniPoly s = squarefree_part(p);
    auto [q, r] = divmod(p, s);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(is_squarefree(p), s.degree() == p.degree());
  }
}

TEST(Linalg, ExactKernelAndDeterminant) {
  Matrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  EXPECT_EQ(rank(m, 256), 1u);
  auto ker = kernel(m, 256);
  EXPECT_EQ(ker.size(), 2u);
  for (const auto& v : ker) {
    Vector r = m * v;
    for (const auto& x : r) EXPECT_TRUE(x.is_zero());
  }
  Matrix s(2, 2);
  s(0, 0) = 2; s(0, 1) = 1; s(1, 0) = 1; s(1, 1) = 1;
  EXPECT_EQ(determinant(s), 1);
  Matrix inv = inverse(s, 256);
  Matrix id = s * inv;
  EXPECT_EQ(id(0, 0), Number(1));
  EXPECT_EQ(id(0, 1), Number(0));
}

TEST(Linalg, InconsistentExactSystem) {
  Matrix m(2, 1);
  m(0, 0) = 1; m(1, 0) = 1;
  EXPECT_FALSE(solve(m, {Number(1), Number(2)}, 256).has_value());
  EXPECT_TRUE(solve(m, {Number(3), Number(3)}, 256).has_value());
}

}  // namespace
}  // namespace waring
