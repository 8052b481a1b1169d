#pragma once

// Dense univariate polynomials over Number, squarefree decomposition over
// the rationals and a simultaneous (Aberth-Ehrlich) root finder.

#include <utility>
#include <vector>

#include "waring/numerics.hpp"

namespace waring {

// coeffs[i] is the coefficient of t^i. Normalized so the leading entry is
// nonzero (exactly, for exact entries); the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Number> coeffs);

  static UniPoly monomial(const Number& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const;
  const std::vector<Number>& coeffs() const { return coeffs_; }
  const Number& coeff(int i) const;
  const Number& leading() const { return coeffs_.back(); }

  Number operator()(const Number& t) const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Number& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Drops leading coefficients with |c| <= tol * max|c| (approximate only).
  UniPoly trimmed(const BigFloat& tol) const;

 private:
  void normalize();
  std::vector<Number> coeffs_;
};

// Exact polynomial division over the rationals: a = q b + r.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd over the rationals.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// p / gcd(p, p'), monic. Throws InvalidInput on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);
// Yun's algorithm: p = c * prod f_i^i with f_i squarefree, pairwise coprime.
// Returns the nonconstant (f_i, i).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

struct Root {
  Number value;  // exact when the root is rational
  int multiplicity = 1;
};

// All deg(p) roots counted with multiplicity. Exact inputs go through the
// squarefree decomposition first (multiplicities are exact, rational roots
// are returned exactly); approximate inputs are treated as squarefree.
// Every returned root r satisfies
//   |p(r)| <= 2^(-precision/2) * max|coeff| * max(1,|r|)^deg,
// otherwise NumericalFailure is thrown.
std::vector<Root> univariate_roots(const UniPoly& p, long precision);

// Roots of the binary form sum_j c[j] * y0^(N-j) * y1^j (N = c.size()-1),
// as points [y0 : y1] with multiplicity. Points are scaled so the
// largest-modulus coordinate is 1.
struct ProjectiveRoot {
  std::vector<Number> point;
  int multiplicity = 1;
};
std::vector<ProjectiveRoot> binary_form_roots(const std::vector<Number>& c, long precision);

// Minimum pairwise distance between roots (infinite for fewer than two),
// measured after scaling points to unit max-modulus.
BigFloat min_separation(const std::vector<ProjectiveRoot>& roots, long precision);

}  // namespace waring
