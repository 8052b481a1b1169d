#include <gtest/gtest.h>

#include "test_util.hpp"
#include "waring/poly.hpp"

namespace waring {
namespace {

using testing::random_form;
using testing::random_invertible;
using testing::random_linear;

DualOp dual(const char* text, int n) { return parse_homogeneous<DualTag>(text, n); }

TEST(Contract, Examples) {
  // Variables x1, x2 of the examples are x0, x1 here.
  EXPECT_EQ(contract(dual("d0", 2), parse_form("x0^3", 2)), parse_form("3*x0^2", 2));
  EXPECT_EQ(contract(dual("d0*d1", 2), parse_form("x0^2*x1", 2)), parse_form("2*x0", 2));
  EXPECT_TRUE(contract(dual("d1", 2), parse_form("x0^3", 2)).is_zero());
}

TEST(Contract, Errors) {
  EXPECT_THROW(contract(dual("d0^3", 2), parse_form("x0^2", 2)), InvalidInput);
  EXPECT_THROW(contract(dual("d0", 3), parse_form("x0^2", 2)), InvalidInput);
}

TEST(LinearPower, Examples) {
  EXPECT_EQ(linear_power(LinearForm{{Number(1), Number(1)}}, 2), parse_form("x0^2 + 2*x0*x1 + x1^2", 2));
  EXPECT_EQ(linear_power(LinearForm{{Number(1), Number(0)}}, 3), parse_form("x0^3", 2));
  EXPECT_EQ(linear_power(LinearForm{{Number(1), Number(-1)}}, 3), parse_form("x0^3 - 3*x0^2*x1 + 3*x0*x1^2 - x1^3", 2));
}

TEST(ChangeCoordinates, Examples) {
  Form f = parse_form("x0^2*x1", 2);
  EXPECT_EQ(change_coordinates(f, Matrix::identity(2)), f);
  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_EQ(change_coordinates(f, swap), parse_form("x1^2*x0", 2));
  Matrix shear = Matrix::identity(2);
  shear(0, 1) = 1;
  EXPECT_EQ(change_coordinates(parse_form("x0^2", 2), shear), parse_form("x0^2 + 2*x0*x1 + x1^2", 2));
  EXPECT_THROW(change_coordinates(f, Matrix(2, 2)), InvalidInput);
}

TEST(EvaluateDual, Examples) {
  auto at = [](std::initializer_list<long> c) {
    LinearForm l;
    for (long x : c) l.coords.emplace_back(x);
    return l;
  };
  EXPECT_TRUE(evaluate_dual(dual("d0*d1", 3), at({1, 0, 0})).is_zero());
  EXPECT_EQ(evaluate_dual(dual("d0^2", 3), at({1, 1, 1})), Number(1));
  EXPECT_TRUE(evaluate_dual(dual("d0*d1 - d2^2", 3), at({0, 1, 0})).is_zero());
}

TEST(ParseForm, Examples) {
  Form kleppe = parse_form("x0*x1^2 + x1*x2^2", 3);
  EXPECT_EQ(kleppe.degree(), 3);
  EXPECT_EQ(kleppe.size(), 2u);
  Form fermat = parse_form("x0^3 + x1^3 + x2^3", 3);
  EXPECT_EQ(fermat.size(), 3u);
  try {
    parse_form("x0^2 + x1^3", 3);
    FAIL() << "accepted a non-homogeneous polynomial";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("x1^3"), std::string::npos);
  }
}

TEST(ParseForm, Rejections) {
  EXPECT_THROW(parse_form("", 2), ParseError);
  EXPECT_THROW(parse_form("x0 +", 2), ParseError);
  EXPECT_THROW(parse_form("x0 ** x1", 2), ParseError);
  EXPECT_THROW(parse_form("1/0*x0", 2), ParseError);
  EXPECT_THROW(parse_form("x5", 2), InvalidInput);
  EXPECT_THROW(parse_form("x0 $ x1", 2), ParseError);
  EXPECT_EQ(parse_form("3/4*x0*x1 - 1/2 x1^2", 2), parse_form("-1/2*x1^2+3/4*x0*x1", 2));
}

TEST(Properties, DerivationRule) {
  Rng rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    int d = 1 + static_cast<int>(rng.below(8));
    LinearForm l = random_linear(rng, n);
    DualOp op(n, 1);
    for (int i = 0; i < n; ++i) op += Number(rng.uniform(5)) * DualOp::variable(n, i);
    Form lhs = contract(op, linear_power(l, d));
    Number dl = evaluate_dual(op, l);
    Form rhs = (Number(d) * dl) * linear_power(l, d - 1);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Properties, ContractionComposes) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    int d = 2 + static_cast<int>(rng.below(4));
    Form f = random_form(rng, n, d);
    int e1 = static_cast<int>(rng.below(2)) + 1;
    int e2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(d - e1 + 1)));
    DualOp a(n, e1), b(n, e2);
    for (const auto& m : monomials(n, e1)) a.add_term(m, Number(rng.uniform(4)));
    for (const auto& m : monomials(n, e2)) b.add_term(m, Number(rng.uniform(4)));
    EXPECT_EQ(contract(a, contract(b, f)), contract(a * b, f));
  }
}

TEST(Properties, CoordinateChangeRoundTrip) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    int d = 1 + static_cast<int>(rng.below(4));
    Form f = random_form(rng, n, d);
    Matrix m = random_invertible(rng, n);
    EXPECT_EQ(change_coordinates(change_coordinates(f, m), inverse(m, 256)), f);
  }
}

TEST(Properties, RenderParseRoundTrip) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    int d = static_cast<int>(rng.below(5));
    Form f(n, d);
    for (const auto& e : monomials(n, d))
      if (rng.below(2) == 0) f.add_term(e, testing::small_rational(rng));
    if (f.is_zero()) continue;
    EXPECT_EQ(parse_form(render(f), n), f) << render(f);
  }
}

}  // namespace
}  // namespace waring
