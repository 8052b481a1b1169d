#pragma once

// Independent certification of decompositions and catalecticant lower
// bounds on the Waring rank.

#include <cstddef>
#include <vector>

#include "waring/decompose.hpp"

namespace waring {

struct VerifyReport {
  BigFloat residual;                             // max coefficient of |sum - f|
  BigFloat tolerance;                            // tol * |f|_1 (0 for exact comparison)
  std::size_t term_count = 0;
  Integer bound_value;                           // recursion_bound(m, d, improved)
  std::vector<std::size_t> forbidden_violations; // term indices
  bool exact = false;
  bool pass = false;
};

// Rebuilds sum c_i l_i^d by repeated multiplication of l_i. Exact
// comparison when everything is rational, else |delta| <= tol * |f|_1 per
// coefficient. Throws InvalidInput on a shape mismatch.
VerifyReport check_decomposition(const Form& f, const Decomposition& dec, const ForbiddenSet& v, const BigFloat& tol);
VerifyReport check_decomposition(const Form& f, const Decomposition& dec, const ForbiddenSet& v,
                                 long precision = kDefaultPrecision);

// max over 1 <= e <= d-1 of rank catalecticant(f, e); 1 for d <= 1.
int catalecticant_lower_bound(const Form& f, long precision = kDefaultPrecision);

}  // namespace waring
