#pragma once

// Graded pieces of the annihilator F^⊥ through catalecticant matrices,
// essential variables, and base points of apolar linear systems.

#include <cstdint>
#include <optional>
#include <vector>

#include "waring/linalg.hpp"
#include "waring/poly.hpp"
#include "waring/random.hpp"

namespace waring {

// Matrix of the pairing S*_e x S_{d-e}: entry (r, c) is the coefficient of
// the monomial col_labels[c] in contract(row_labels[r], f).
struct CatMatrix {
  int num_vars = 0;
  int degree = 0;
  int e = 0;
  std::vector<Exponent> row_labels;
  std::vector<Exponent> col_labels;
  Matrix entries;
};

CatMatrix catalecticant(const Form& f, int e);

// Basis of (F^⊥)_e. Exact input gives primitive integer operators.
std::vector<DualOp> apolar_component(const Form& f, int e, long precision = kDefaultPrecision);

// Rank of the first catalecticant. Throws InvalidInput on the zero form.
int essential_variables(const Form& f, long precision = kDefaultPrecision);

// Coordinates x = M y in which f only involves y0..y{m-1}.
struct EssentialSplit {
  Matrix change;       // M
  Matrix inverse;      // M^-1
  int essential = 0;   // m
  Form restricted;     // g(y0..y{m-1}) = f(M y)

  // The linear form sum_j lambda_j y_j written in the x coordinates.
  LinearForm lift(const LinearForm& lambda) const;
  // Pulls a constraint on x-coordinates back to the coordinates lambda.
  Constraint restrict(const Constraint& g) const;
};

EssentialSplit essential_split(const Form& f, long precision = kDefaultPrecision);

// Point of projective space scaled so a largest-modulus coordinate is 1.
struct ProjPoint {
  std::vector<Number> coords;
  bool is_exact() const;
  LinearForm as_linear_form() const { return LinearForm{coords}; }
};

ProjPoint normalize_point(std::vector<Number> coords, long precision);

// Sine of the angle between representatives (0 for equal points).
BigFloat projective_distance(const std::vector<Number>& a, const std::vector<Number>& b, long precision);

// |op(p)| <= 2^(-precision/2) * |op|_1 at the normalized point p; exact
// zero test when both are exact.
bool vanishes_at(const DualOp& op, const std::vector<Number>& point, long precision);

struct IntersectionPoint {
  ProjPoint point;
  int multiplicity = 1;
};

// Common zeros of two plane curves (n = 3), by eliminating the last
// coordinate with a resultant after a coordinate change that makes both
// curves monic in it. Throws DegenerateSystem on a common component.
std::vector<IntersectionPoint> intersect_curves(const DualOp& a, const DualOp& b, long precision, Rng& rng);

// Common zeros in P(S_1) of (F^⊥)_e, for n <= 3. Throws DegenerateSystem
// when the zero locus is positive-dimensional.
std::vector<ProjPoint> base_points(const Form& f, int e, long precision = kDefaultPrecision,
                                   std::uint64_t seed = kDefaultSeed);

// An operator of degree d - e with op ⌟ f = l^e, or nullopt.
std::optional<DualOp> power_witness(const Form& f, const LinearForm& l, int e, long precision = kDefaultPrecision);

}  // namespace waring
