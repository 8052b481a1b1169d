#pragma once

// Decompositions F = sum_i c_i l_i^d whose linear forms avoid a closed set
// V of linear forms given by constraint polynomials.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/poly.hpp"

namespace waring {

// A linear form l is forbidden when some constraint vanishes at coords(l).
class ForbiddenSet {
 public:
  explicit ForbiddenSet(int num_vars);

  // One constraint per line in the form grammar over l0..l{n-1}; blank
  // lines and text after '#' are ignored.
  static ForbiddenSet parse(std::string_view text, int num_vars);

  // Throws InvalidInput on a zero constraint or a size mismatch.
  void add(Constraint g);

  int num_vars() const { return n_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool empty() const { return constraints_.empty(); }

 private:
  int n_;
  std::vector<Constraint> constraints_;
};

// Exact zero test for rational l; otherwise true when some
// |g(l)| <= tol * |g|_1 * max|l_i|^deg g.
bool is_forbidden(const LinearForm& l, const ForbiddenSet& v, const BigFloat& tol);
bool is_forbidden(const LinearForm& l, const ForbiddenSet& v, long precision = kDefaultPrecision);

struct Term {
  Number coefficient;
  LinearForm form;
};

struct Decomposition {
  int degree = 0;
  int num_vars = 0;
  std::vector<Term> terms;
  std::vector<std::string> trace;

  std::size_t size() const { return terms.size(); }
  // All coefficients and coordinates rational.
  bool exact() const;
  Form expand() const;
};

struct DecomposeOptions {
  std::uint64_t seed = kDefaultSeed;
  long precision = kDefaultPrecision;
  int max_retries = 64;
};

// Dispatcher: essential reduction, then d = 1 or m = 1 -> one term,
// d = 2 -> quadratic, m = 2 -> binary, (m, d) = (3, 3) -> ternary cubic,
// otherwise the inductive step. Throws RetryExhausted when a genericity
// choice fails max_retries times.
Decomposition decompose(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options = {});

// Exact, with exactly m = essential_variables(f) terms.
Decomposition decompose_quadratic(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options = {});
// At most d terms, for f with two essential variables.
Decomposition decompose_binary(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options = {});
// At most recursion_bound(m, d, improved) terms, for m >= 3, d >= 3.
Decomposition decompose_inductive(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options = {});
// At most 5 terms (4 when (F^⊥)_2 has no base point), for an essential
// ternary cubic.
Decomposition decompose_ternary_cubic(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options = {});

// The four simple intersection points of two conics in three variables.
// Throws NonTransversal when they do not meet in four distinct points and
// DegenerateSystem when they share a component.
std::vector<ProjPoint> conic_intersection(const DualOp& d0, const DualOp& d1, long precision = kDefaultPrecision,
                                          std::uint64_t seed = kDefaultSeed);

// Scalars c_i with sum_i c_i l_i^d = f; zero coefficients are dropped
// (their forms with them). Throws NoFit when f is not in the span and
// InvalidInput on proportional forms.
struct Fit {
  std::vector<Number> coefficients;
  std::vector<LinearForm> forms;
};
Fit fit_coefficients(const Form& f, const std::vector<LinearForm>& forms, long precision = kDefaultPrecision);

// Folds each coefficient into its linear form by a d-th root; stays exact
// when every coefficient is a d-th power of a rational.
Decomposition absorb_coefficients(const Decomposition& dec, long precision = kDefaultPrecision);

// Merges terms with proportional linear forms and drops zero sums.
Decomposition merge_proportional(const Decomposition& dec, long precision = kDefaultPrecision);

// True when V(alpha) lies in the zero set of g, i.e. the linear function
// alpha divides g.
bool hyperplane_in_zero_set(const DualOp& alpha, const Constraint& g, long precision = kDefaultPrecision);

}  // namespace waring
