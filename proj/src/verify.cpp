#include "waring/verify.hpp"

#include <algorithm>

#include "waring/bounds.hpp"
#include "waring/linalg.hpp"

namespace waring {

namespace {

Form power_by_products(const LinearForm& l, int d) {
  Form base = Form::linear(l.coords);
  Form out = Form::monomial(Exponent(l.coords.size(), 0), Number(1));
  for (int k = 0; k < d; ++k) out = out * base;
  return out;
}

}  // namespace

VerifyReport check_decomposition(const Form& f, const Decomposition& dec, const ForbiddenSet& v, const BigFloat& tol) {
  if (dec.degree != f.degree() || dec.num_vars != f.num_vars()) throw InvalidInput("decomposition shape does not match the form");
  if (v.num_vars() != f.num_vars()) throw InvalidInput("forbidden set shape does not match the form");
  for (const auto& t : dec.terms)
    if (t.form.num_vars() != f.num_vars()) throw InvalidInput("term has the wrong number of coordinates");

  const long prec = tol.precision();
  VerifyReport r;
  r.term_count = dec.terms.size();
  r.exact = f.is_exact() && dec.exact();

  Form sum(f.num_vars(), f.degree());
  for (const auto& t : dec.terms) sum += t.coefficient * power_by_products(t.form, f.degree());
  Form diff = sum - f;
  r.residual = diff.max_abs(prec);
  r.tolerance = r.exact ? BigFloat(prec) : tol * f.norm1(prec);
  bool close = r.exact ? diff.is_zero() : r.residual <= r.tolerance;

  for (std::size_t i = 0; i < dec.terms.size(); ++i)
    if (is_forbidden(dec.terms[i].form, v, tol)) r.forbidden_violations.push_back(i);

  int m = f.is_zero() ? 1 : std::max(1, essential_variables(f, prec));
  r.bound_value = f.degree() == 0 ? Integer(1) : recursion_bound(m, f.degree(), BaseMode::improved);
  if (f.is_zero()) r.bound_value = 0;

  r.pass = close && r.forbidden_violations.empty() && Integer(static_cast<unsigned long>(r.term_count)) <= r.bound_value;
  return r;
}

VerifyReport check_decomposition(const Form& f, const Decomposition& dec, const ForbiddenSet& v, long precision) {
  return check_decomposition(f, dec, v, default_tolerance(precision).rounded(precision));
}

int catalecticant_lower_bound(const Form& f, long precision) {
  if (f.is_zero()) throw InvalidInput("the zero form has no rank lower bound");
  int best = 1;
  for (int e = 1; e < f.degree(); ++e)
    best = std::max(best, static_cast<int>(rank(catalecticant(f, e).entries, precision)));
  return best;
}

}  // namespace waring
