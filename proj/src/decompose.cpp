#include "waring/decompose.hpp"

#include <algorithm>
#include <sstream>

#include "waring/unipoly.hpp"

namespace waring {

// ------------------------------------------------------------ forbidden set

ForbiddenSet::ForbiddenSet(int num_vars) : n_(num_vars) {
  if (num_vars < 1) throw InvalidInput("a forbidden set needs at least one variable");
}

ForbiddenSet ForbiddenSet::parse(std::string_view text, int num_vars) {
  ForbiddenSet v(num_vars);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        v.add(parse_constraint(line, num_vars));
      } catch (const ParseError& e) {
        std::string what = e.what();
        what = what.substr(0, what.rfind(" at position "));
        throw ParseError("forbidden set line " + std::to_string(line_no) + ": " + what, e.position());
      } catch (const InvalidInput& e) {
        throw InvalidInput("forbidden set line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    start = end + 1;
  }
  return v;
}

void ForbiddenSet::add(Constraint g) {
  if (g.num_vars() != n_) throw InvalidInput("constraint has the wrong number of variables");
  if (g.is_zero()) throw InvalidInput("a zero constraint would forbid every linear form");
  constraints_.push_back(std::move(g));
}

bool is_forbidden(const LinearForm& l, const ForbiddenSet& v, const BigFloat& tol) {
  if (l.num_vars() != v.num_vars()) throw InvalidInput("linear form and forbidden set differ in size");
  if (l.is_zero()) return true;
  const long prec = tol.precision();
  for (const auto& g : v.constraints()) {
    Number value = g(l.coords);
    if (value.is_zero()) return true;
    if (value.is_exact()) continue;
    BigFloat bound = tol * g.norm1(prec);
    BigFloat lmax = l.max_abs(prec);
    for (int k = 0; k < g.degree(); ++k) bound *= lmax;
    if (value.abs(prec) <= bound) return true;
  }
  return false;
}

bool is_forbidden(const LinearForm& l, const ForbiddenSet& v, long precision) {
  return is_forbidden(l, v, default_tolerance(precision));
}

bool hyperplane_in_zero_set(const DualOp& alpha, const Constraint& g, long precision) {
  if (alpha.degree() != 1 || alpha.is_zero()) throw InvalidInput("expected a nonzero linear operator");
  const int n = alpha.num_vars();
  if (g.degree() == 0) return false;
  if (n == 1) return true;
  std::vector<Number> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    a[static_cast<std::size_t>(i)] = alpha.coefficient(e);
  }
  std::size_t p = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i].abs(precision) > a[p].abs(precision)) p = i;
  // Parametrize {alpha(l) = 0} by the coordinates other than p.
  Matrix param(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
  for (std::size_t i = 0, j = 0; i < a.size(); ++i) {
    if (i == p) continue;
    param(i, j) = 1;
    param(p, j) = -a[i] / a[p];
    ++j;
  }
  Constraint r = substitute(g, param);
  if (r.is_exact()) return r.is_zero();
  return r.max_abs(precision) <= default_tolerance(precision) * g.norm1(precision);
}

// ------------------------------------------------------------ decomposition

bool Decomposition::exact() const {
  for (const auto& t : terms)
    if (!t.coefficient.is_exact() || !t.form.is_exact()) return false;
  return true;
}

Form Decomposition::expand() const {
  Form out(std::max(num_vars, 1), degree);
  for (const auto& t : terms) out += t.coefficient * linear_power(t.form, degree);
  return out;
}

namespace {

Vector form_vector(const Form& f) {
  Vector v;
  for (const auto& e : monomials(f.num_vars(), f.degree())) v.push_back(f.coefficient(e));
  return v;
}

bool proportional(const LinearForm& a, const LinearForm& b, long precision) {
  if (a.is_exact() && b.is_exact()) {
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      for (std::size_t j = i + 1; j < a.coords.size(); ++j)
        if (!(a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]).is_zero()) return false;
    return true;
  }
  return projective_distance(a.coords, b.coords, precision) <= BigFloat::pow2(-precision / 2, precision);
}

// Drops approximate coefficients below tol * scale.
Form settle(const Form& g, const BigFloat& scale, long precision) {
  if (g.is_exact()) return g;
  Form out(g.num_vars(), g.degree());
  BigFloat bound = default_tolerance(precision) * scale;
  for (const auto& [e, c] : g.terms())
    if (!c.is_negligible(bound)) out.add_term(e, c);
  return out;
}

Constraint settle(const Constraint& g, const BigFloat& scale, long precision) {
  if (g.is_exact()) return g;
  Constraint out(g.num_vars(), g.degree());
  BigFloat bound = default_tolerance(precision) * scale;
  for (const auto& [e, c] : g.terms())
    if (!c.is_negligible(bound)) out.add_term(e, c);
  return out;
}

LinearForm linear_part(const Form& l) {
  LinearForm out{std::vector<Number>(static_cast<std::size_t>(l.num_vars()))};
  for (const auto& [e, c] : l.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) out.coords[i] = c;
  return out;
}

Number scalar_part(const Form& c) { return c.is_zero() ? Number() : c.terms().begin()->second; }

std::string describe(const LinearForm& l) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < l.coords.size(); ++i) os << (i ? "," : "") << l.coords[i].to_string(12);
  os << ")";
  return os.str();
}

struct Context {
  DecomposeOptions opt;
  Rng rng;
  std::vector<std::string> trace;

  explicit Context(const DecomposeOptions& o) : opt(o), rng(o.seed) {
    if (opt.precision < kMinPrecision) throw InvalidInput("precision must be at least 64 bits");
    if (opt.max_retries < 1) throw InvalidInput("retry budget must be positive");
  }
  long prec() const { return opt.precision; }
  BigFloat tol() const { return default_tolerance(opt.precision); }
  void note(std::string s) { trace.push_back(std::move(s)); }
  [[noreturn]] void exhausted(const std::string& what) {
    note("retry budget exhausted: " + what);
    throw RetryExhausted(what, trace);
  }
};

// Coefficient height for the k-th attempt: 8, doubling every 8 attempts.
long height(int attempt) { return 8L << std::min(attempt / 8, 24); }

std::vector<Number> random_vector(Context& ctx, int n, long h) {
  std::vector<Number> v(static_cast<std::size_t>(n));
  while (std::all_of(v.begin(), v.end(), [](const Number& x) { return x.is_zero(); }))
    for (auto& x : v) x = Number(ctx.rng.uniform(h));
  return v;
}

DualOp random_combination(Context& ctx, const std::vector<DualOp>& basis, long h) {
  DualOp out(basis.front().num_vars(), basis.front().degree());
  while (out.is_zero()) {
    out = DualOp(basis.front().num_vars(), basis.front().degree());
    for (const auto& b : basis) out += Number(ctx.rng.uniform(h)) * b;
  }
  return out;
}

bool avoids_all(const DualOp& alpha, const ForbiddenSet& v, long precision) {
  for (const auto& g : v.constraints())
    if (hyperplane_in_zero_set(alpha, g, precision)) return false;
  return true;
}

Decomposition empty_decomposition(const Form& f) {
  Decomposition d;
  d.degree = f.degree();
  d.num_vars = f.num_vars();
  return d;
}

Decomposition solve(const Form& f, const ForbiddenSet& v, Context& ctx);
Decomposition route(const Form& f, const ForbiddenSet& v, Context& ctx);

Decomposition quadratic_core(const Form& f, const ForbiddenSet& v, Context& ctx);
Decomposition binary_core(const Form& f, const ForbiddenSet& v, Context& ctx);
Decomposition inductive_core(const Form& f, const ForbiddenSet& v, Context& ctx);
Decomposition ternary_core(const Form& f, const ForbiddenSet& v, Context& ctx);

using Core = Decomposition (*)(const Form&, const ForbiddenSet&, Context&);

// Essential reduction around `core`: decompose the restriction of f to its
// essential variables against the pulled-back constraints, then lift.
Decomposition reduce_and(const Form& f, const ForbiddenSet& v, Context& ctx, Core core) {
  if (v.num_vars() != f.num_vars()) throw InvalidInput("form and forbidden set differ in the number of variables");
  if (f.is_zero()) return empty_decomposition(f);
  if (f.degree() == 0) throw InvalidInput("constant forms have no decomposition into powers of linear forms");
  EssentialSplit s = essential_split(f, ctx.prec());
  if (s.essential == f.num_vars()) return core(f, v, ctx);
  ctx.note("essential_split: " + std::to_string(f.num_vars()) + " -> " + std::to_string(s.essential) + " variables");
  ForbiddenSet restricted(s.essential);
  for (const auto& g : v.constraints()) {
    Constraint r = settle(s.restrict(g), g.norm1(ctx.prec()), ctx.prec());
    if (r.is_zero()) throw InvalidInput("the forbidden set contains every linear form in the essential span of the form");
    restricted.add(std::move(r));
  }
  Decomposition sub = core(s.restricted, restricted, ctx);
  Decomposition out = empty_decomposition(f);
  for (auto& t : sub.terms) out.terms.push_back(Term{t.coefficient, s.lift(t.form)});
  return out;
}

Decomposition solve(const Form& f, const ForbiddenSet& v, Context& ctx) { return reduce_and(f, v, ctx, route); }

Decomposition single_term(const Form& f) {
  Decomposition out = empty_decomposition(f);
  Exponent top(1, f.degree());
  out.terms.push_back(Term{f.coefficient(top), LinearForm{{Number(1)}}});
  return out;
}

// f is essential in its variables.
Decomposition route(const Form& f, const ForbiddenSet& v, Context& ctx) {
  const int n = f.num_vars();
  const int d = f.degree();
  if (n == 1) {
    ctx.note("single term");
    return single_term(f);
  }
  if (d == 2) return quadratic_core(f, v, ctx);
  if (n == 2) return binary_core(f, v, ctx);
  if (n == 3 && d == 3) return ternary_core(f, v, ctx);
  return inductive_core(f, v, ctx);
}

// ------------------------------------------------------------ quadratic

Decomposition quadratic_core(const Form& f, const ForbiddenSet& v, Context& ctx) {
  const int n = f.num_vars();
  if (n == 1) {
    ctx.note("quadratic: single term");
    return single_term(f);
  }
  const long prec = ctx.prec();
  const BigFloat scale = f.norm1(prec);
  for (int attempt = 0; attempt < ctx.opt.max_retries; ++attempt) {
    std::vector<Number> a = random_vector(ctx, n, height(attempt));
    DualOp alpha = DualOp::linear(a);
    Number c = scalar_part(contract(alpha * alpha, f));
    if (c.is_zero()) continue;
    if (!c.is_exact()) {
      BigFloat amax = LinearForm{a}.max_abs(prec);
      if (c.abs(prec) <= ctx.tol() * scale * amax * amax) continue;
    }
    if (!avoids_all(alpha, v, prec)) continue;
    LinearForm l = linear_part(contract(alpha, f));
    if (is_forbidden(l, v, prec)) continue;
    Number w = Number(1) / (Number(2) * c);
    Form rest = settle(f - w * linear_power(l, 2), scale, prec);
    ctx.note("quadratic: split off one square (n=" + std::to_string(n) + ")");
    Decomposition out = empty_decomposition(f);
    out.terms.push_back(Term{w, l});
    Decomposition sub = solve(rest, v, ctx);
    out.terms.insert(out.terms.end(), sub.terms.begin(), sub.terms.end());
    return out;
  }
  ctx.exhausted("quadratic: no admissible alpha");
}

// ------------------------------------------------------------ binary

std::vector<Number> binary_coefficients(const DualOp& g) {
  std::vector<Number> c;
  for (const auto& e : monomials(2, g.degree())) c.push_back(g.coefficient(e));
  return c;
}

// Sylvester step: distinct roots of g avoiding V give the linear forms.
std::optional<Decomposition> try_binary_generator(const Form& f, const DualOp& g, const ForbiddenSet& v, Context& ctx) {
  const long prec = ctx.prec();
  std::vector<ProjectiveRoot> roots = binary_form_roots(binary_coefficients(g), prec + 64);
  if (min_separation(roots, prec + 64) <= BigFloat::pow2(-prec / 4, prec + 64)) return std::nullopt;
  std::vector<LinearForm> forms;
  for (const auto& r : roots) {
    LinearForm l{r.point};
    if (is_forbidden(l, v, prec)) return std::nullopt;
    forms.push_back(std::move(l));
  }
  try {
    Fit fit = fit_coefficients(f, forms, prec);
    Decomposition out = empty_decomposition(f);
    for (std::size_t i = 0; i < fit.forms.size(); ++i) out.terms.push_back(Term{fit.coefficients[i], fit.forms[i]});
    return out;
  } catch (const NoFit&) {
    return std::nullopt;
  }
}

Decomposition binary_core(const Form& f, const ForbiddenSet& v, Context& ctx) {
  const int d = f.degree();
  const long prec = ctx.prec();
  int e1 = 1;
  std::vector<DualOp> first;
  for (; e1 <= d; ++e1) {
    first = apolar_component(f, e1, prec);
    if (!first.empty()) break;
  }
  if (first.empty()) throw InternalError("binary form without apolar generators");
  if (first.size() == 1) {
    if (auto dec = try_binary_generator(f, first.front(), v, ctx)) {
      ctx.note("binary: apolar generator of degree " + std::to_string(e1));
      return *dec;
    }
  }
  // Base-point-free systems: the pencil at e1 when both generators share the
  // degree, else (F^⊥)_{d+2-e1}, widened to (F^⊥)_d after half the budget.
  const int e2 = first.size() >= 2 ? e1 : d + 2 - e1;
  std::vector<DualOp> second = e2 == e1 ? first : apolar_component(f, e2, prec);
  std::vector<DualOp> top;
  for (int attempt = 0; attempt < ctx.opt.max_retries; ++attempt) {
    const bool widen = attempt >= ctx.opt.max_retries / 2 && e2 < d;
    if (widen && top.empty()) top = apolar_component(f, d, prec);
    const std::vector<DualOp>& basis = widen ? top : second;
    DualOp g = random_combination(ctx, basis, height(attempt));
    if (auto dec = try_binary_generator(f, g, v, ctx)) {
      ctx.note("binary: sampled apolar form of degree " + std::to_string(g.degree()));
      return *dec;
    }
  }
  ctx.exhausted("binary: no squarefree apolar form with admissible roots");
}

// ------------------------------------------------------------ inductive

void check_invariant(const DualOp& beta, const Form& f2, const BigFloat& scale, const ForbiddenSet& v, long prec) {
  Form killed = contract(beta, f2);
  bool annihilates = killed.is_exact() ? killed.is_zero()
                                       : killed.max_abs(prec) <= default_tolerance(prec) * scale * DualOp(beta).norm1(prec);
  if (!annihilates) throw InternalError("inductive step: beta does not annihilate F2");
  if (!avoids_all(beta, v, prec)) throw InternalError("inductive step: V(beta) lies in the forbidden set");
}

Decomposition inductive_core(const Form& f, const ForbiddenSet& v, Context& ctx) {
  const int n = f.num_vars();
  const int d = f.degree();
  const long prec = ctx.prec();
  const BigFloat fscale = f.norm1(prec);

  // (1) alpha with V(alpha) outside V and alpha ⌟ f essential in n variables.
  DualOp alpha;
  Form derived;
  bool found = false;
  for (int attempt = 0; attempt < ctx.opt.max_retries && !found; ++attempt) {
    alpha = DualOp::linear(random_vector(ctx, n, height(attempt)));
    if (!avoids_all(alpha, v, prec)) continue;
    derived = settle(contract(alpha, f), fscale * alpha.norm1(prec), prec);
    if (derived.is_zero()) continue;
    found = essential_variables(derived, prec) == n;
  }
  if (!found) ctx.exhausted("inductive: no admissible alpha");
  ctx.note("inductive: n=" + std::to_string(n) + " d=" + std::to_string(d) + " derivative");

  // (2) alpha ⌟ f against V plus the hyperplane alpha = 0.
  ForbiddenSet widened = v;
  widened.add(alpha.as<CoordTag>());
  Decomposition sub = solve(derived, widened, ctx);

  // (3) Lift: w_i = c_i / (d * alpha(l_i)).
  std::vector<Term> lifted;
  std::vector<Form> powers;
  BigFloat scale = fscale;
  for (const auto& t : sub.terms) {
    Number at = evaluate_dual(alpha, t.form);
    if (at.is_zero()) throw InternalError("inductive step: lifted form lies on alpha = 0");
    Number w = t.coefficient / (Number(d) * at);
    powers.push_back(linear_power(t.form, d));
    scale += w.abs(prec) * powers.back().norm1(prec);
    lifted.push_back(Term{w, t.form});
  }
  Form f2 = f;
  for (std::size_t i = 0; i < lifted.size(); ++i) f2 -= lifted[i].coefficient * powers[i];
  f2 = settle(f2, scale, prec);

  // (4) Shrink T while F2 has two or more independent annihilating directions.
  std::vector<bool> in_t(lifted.size(), true);
  DualOp beta = alpha;
  check_invariant(beta, f2, scale, v, prec);
  std::size_t size = lifted.size();
  while (true) {
    std::vector<DualOp> ker;
    if (f2.is_zero()) {
      for (int i = 0; i < n; ++i) ker.push_back(DualOp::variable(n, i));
    } else {
      ker = apolar_component(f2, 1, prec);
    }
    if (ker.size() < 2) break;
    std::size_t i = in_t.size();
    while (i-- > 0 && !in_t[i]) {
    }
    if (i >= in_t.size()) throw InternalError("inductive step: index set exhausted");
    const LinearForm& li = lifted[i].form;
    Number va = evaluate_dual(ker[0], li);
    Number vb = evaluate_dual(ker[1], li);
    DualOp next = vb * ker[0] - va * ker[1];
    if (va.is_zero() || (!va.is_exact() && va.abs(prec) <= ctx.tol() * ker[0].norm1(prec) * li.max_abs(prec))) next = ker[0];
    if (next.is_zero()) next = ker[1];
    in_t[i] = false;
    --size;
    f2 = settle(f2 + lifted[i].coefficient * powers[i], scale, prec);
    beta = next;
    check_invariant(beta, f2, scale, v, prec);
    ctx.note("inductive: dropped a lifted term, |T| = " + std::to_string(size));
  }

  // (5) F2 lives in the hyperplane beta = 0.
  Decomposition rest = solve(f2, v, ctx);

  // (6)
  Decomposition out = empty_decomposition(f);
  for (std::size_t i = 0; i < lifted.size(); ++i)
    if (in_t[i]) out.terms.push_back(lifted[i]);
  out.terms.insert(out.terms.end(), rest.terms.begin(), rest.terms.end());
  return out;
}

// ------------------------------------------------------------ ternary cubic

std::optional<Decomposition> ternary_good_path(const Form& f, const ForbiddenSet& v, Context& ctx, int tries) {
  const long prec = ctx.prec();
  std::vector<DualOp> basis = apolar_component(f, 2, prec);
  if (basis.size() < 2) return std::nullopt;
  for (int attempt = 0; attempt < tries; ++attempt) {
    long h = height(attempt);
    DualOp d0 = random_combination(ctx, basis, h);
    DualOp d1 = random_combination(ctx, basis, h);
    std::vector<ProjPoint> pts;
    try {
      pts = conic_intersection(d0, d1, prec, ctx.rng.next());
    } catch (const NonTransversal&) {
      continue;
    } catch (const DegenerateSystem&) {
      continue;
    }
    std::vector<LinearForm> forms;
    for (const auto& p : pts) forms.push_back(p.as_linear_form());
    if (std::any_of(forms.begin(), forms.end(), [&](const LinearForm& l) { return is_forbidden(l, v, prec); })) continue;
    try {
      Fit fit = fit_coefficients(f, forms, prec);
      Decomposition out = empty_decomposition(f);
      for (std::size_t i = 0; i < fit.forms.size(); ++i) out.terms.push_back(Term{fit.coefficients[i], fit.forms[i]});
      return out;
    } catch (const NoFit&) {
      continue;
    }
  }
  return std::nullopt;
}

Decomposition ternary_core(const Form& f, const ForbiddenSet& v, Context& ctx) {
  const long prec = ctx.prec();
  bool base_point_free = base_points(f, 2, prec, ctx.rng.next()).empty();
  if (base_point_free) {
    if (auto dec = ternary_good_path(f, v, ctx, ctx.opt.max_retries)) {
      ctx.note("ternary cubic: pencil of apolar conics");
      return *dec;
    }
    ctx.note("ternary cubic: pencil sampling failed, perturbing");
  } else {
    ctx.note("ternary cubic: apolar conics have a base point, perturbing");
  }
  const int inner = std::max(4, ctx.opt.max_retries / 8);
  for (int attempt = 0; attempt < ctx.opt.max_retries; ++attempt) {
    LinearForm l{random_vector(ctx, 3, height(attempt))};
    if (is_forbidden(l, v, prec)) continue;
    Form g = f + linear_power(l, 3);
    if (essential_variables(g, prec) != 3) continue;
    try {
      if (!base_points(g, 2, prec, ctx.rng.next()).empty()) continue;
    } catch (const DegenerateSystem&) {
      continue;
    }
    if (auto dec = ternary_good_path(g, v, ctx, inner)) {
      dec->terms.push_back(Term{Number(-1), l});
      ctx.note("ternary cubic: F + l^3 with l = " + describe(l));
      return *dec;
    }
  }
  ctx.exhausted("ternary cubic: no admissible perturbation");
}

// ------------------------------------------------------------ finishing

// Rounds to the requested precision; an imaginary part below one ulp of the
// modulus is dropped.
Number at_precision(const Number& x, long prec) {
  if (x.is_exact()) return x;
  Complex z = x.to_complex(prec).rounded(prec);
  if (abs(z.imag()) <= BigFloat::pow2(-prec, prec) * z.abs()) z = Complex(z.real(), BigFloat(prec));
  return Number(z);
}

Decomposition finish(Decomposition dec, const Form& f, Context& ctx) {
  dec = merge_proportional(dec, ctx.prec());
  for (auto& t : dec.terms) {
    t.coefficient = at_precision(t.coefficient, ctx.prec());
    for (auto& c : t.form.coords) c = at_precision(c, ctx.prec());
  }
  dec.degree = f.degree();
  dec.num_vars = f.num_vars();
  dec.trace = ctx.trace;
  Form diff = dec.expand() - f;
  if (diff.is_exact()) {
    if (!diff.is_zero()) throw InternalError("exact decomposition does not reproduce the form");
  } else if (diff.max_abs(ctx.prec()) > ctx.tol() * f.norm1(ctx.prec())) {
    throw NumericalFailure("decomposition residual exceeds the tolerance");
  }
  return dec;
}

void check_input(const Form& f, const ForbiddenSet& v) {
  if (f.is_zero()) throw InvalidInput("the zero form has no decomposition");
  if (f.degree() == 0) throw InvalidInput("constant forms have no decomposition into powers of linear forms");
  if (v.num_vars() != f.num_vars()) throw InvalidInput("form and forbidden set differ in the number of variables");
}

}  // namespace

Decomposition decompose(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options) {
  check_input(f, v);
  Context ctx(options);
  return finish(solve(f, v, ctx), f, ctx);
}

Decomposition decompose_quadratic(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options) {
  check_input(f, v);
  if (f.degree() != 2) throw InvalidInput("the quadratic algorithm needs a form of degree 2");
  Context ctx(options);
  return finish(reduce_and(f, v, ctx, quadratic_core), f, ctx);
}

Decomposition decompose_binary(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options) {
  check_input(f, v);
  if (essential_variables(f, options.precision) != 2) throw InvalidInput("the binary algorithm needs two essential variables");
  Context ctx(options);
  return finish(reduce_and(f, v, ctx, binary_core), f, ctx);
}

Decomposition decompose_inductive(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options) {
  check_input(f, v);
  int m = essential_variables(f, options.precision);
  if (m < 3 || f.degree() < 3 || (m == 3 && f.degree() == 3))
    throw InvalidInput("the inductive step needs m >= 3, d >= 3 and (m, d) != (3, 3)");
  Context ctx(options);
  return finish(reduce_and(f, v, ctx, inductive_core), f, ctx);
}

Decomposition decompose_ternary_cubic(const Form& f, const ForbiddenSet& v, const DecomposeOptions& options) {
  check_input(f, v);
  if (f.num_vars() != 3 || f.degree() != 3 || essential_variables(f, options.precision) != 3)
    throw InvalidInput("the ternary cubic algorithm needs an essential cubic in three variables");
  Context ctx(options);
  return finish(ternary_core(f, v, ctx), f, ctx);
}

std::vector<ProjPoint> conic_intersection(const DualOp& d0, const DualOp& d1, long precision, std::uint64_t seed) {
  if (d0.num_vars() != 3 || d1.num_vars() != 3 || d0.degree() != 2 || d1.degree() != 2)
    throw InvalidInput("conic intersection needs two conics in three variables");
  Rng rng(seed);
  std::vector<IntersectionPoint> pts = intersect_curves(d0, d1, precision, rng);
  if (pts.size() != 4 || std::any_of(pts.begin(), pts.end(), [](const IntersectionPoint& p) { return p.multiplicity != 1; }))
    throw NonTransversal("the conics do not meet in four distinct points");
  std::vector<ProjPoint> out;
  for (auto& p : pts) out.push_back(std::move(p.point));
  return out;
}

Fit fit_coefficients(const Form& f, const std::vector<LinearForm>& forms, long precision) {
  const int n = f.num_vars();
  const int d = f.degree();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].num_vars() != n) throw InvalidInput("linear form has the wrong number of variables");
    if (forms[i].is_zero()) throw InvalidInput("zero linear form");
    for (std::size_t j = 0; j < i; ++j)
      if (proportional(forms[i], forms[j], precision)) throw InvalidInput("proportional linear forms in a fit");
  }
  std::vector<Exponent> basis = monomials(n, d);
  Matrix a(basis.size(), forms.size());
  std::vector<Form> powers;
  for (std::size_t c = 0; c < forms.size(); ++c) {
    powers.push_back(linear_power(forms[c], d));
    for (std::size_t r = 0; r < basis.size(); ++r) a(r, c) = powers.back().coefficient(basis[r]);
  }
  Vector b = form_vector(f);
  const long work = precision + 64;
  std::optional<Vector> sol = solve(a, b, work);
  if (!sol) throw NoFit("the form is not in the span of the given powers (exact system inconsistent)");
  const BigFloat tol = default_tolerance(precision);
  const BigFloat fnorm = f.norm1(precision);
  if (!a.is_exact() || !f.is_exact()) {
    Vector r = a * *sol;
    BigFloat worst(work);
    for (std::size_t i = 0; i < r.size(); ++i) worst = max(worst, (r[i] - b[i]).abs(work));
    if (worst > tol * fnorm) {
      std::ostringstream os;
      os << "the form is not in the span of the given powers (residual 2^" << worst.log2_abs() << ")";
      throw NoFit(os.str());
    }
  }
  Fit fit;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Number& c = (*sol)[i];
    if (c.is_zero()) continue;
    if (!c.is_exact() && c.abs(work) * powers[i].norm1(work) <= tol * fnorm) continue;
    fit.coefficients.push_back(c);
    fit.forms.push_back(forms[i]);
  }
  return fit;
}

Decomposition absorb_coefficients(const Decomposition& dec, long precision) {
  Decomposition out = dec;
  const unsigned long d = static_cast<unsigned long>(dec.degree);
  for (auto& t : out.terms) {
    Number scale;
    bool done = false;
    if (t.coefficient.is_exact() && d > 0) {
      const Rational& c = t.coefficient.rational();
      bool negative = sgn(c) < 0;
      if (!negative || d % 2 == 1) {
        Integer num = abs(c.get_num());
        Integer den = c.get_den();
        Integer rn, rd;
        bool exact_num = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d) != 0;
        bool exact_den = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d) != 0;
        if (exact_num && exact_den) {
          Rational r(rn, rd);
          if (negative) r = -r;
          scale = Number(r);
          done = true;
        }
      }
    }
    if (!done) {
      long prec = std::max(precision, t.coefficient.precision());
      scale = Number(t.coefficient.to_complex(prec).nth_root(d));
    }
    for (auto& x : t.form.coords) x = x * scale;
    t.coefficient = Number(1);
  }
  out.trace.push_back("absorbed coefficients into the linear forms");
  return out;
}

Decomposition merge_proportional(const Decomposition& dec, long precision) {
  Decomposition out = dec;
  out.terms.clear();
  const BigFloat tol = default_tolerance(precision);
  for (const auto& t : dec.terms) {
    bool merged = false;
    for (auto& u : out.terms) {
      if (!proportional(u.form, t.form, precision)) continue;
      // t.form = lambda * u.form
      std::size_t k = 0;
      while (u.form.coords[k].is_zero() || (!u.form.coords[k].is_exact() && u.form.coords[k].abs(precision) < u.form.max_abs(precision) / BigFloat(2, precision)))
        ++k;
      Number lambda = t.form.coords[k] / u.form.coords[k];
      u.coefficient += t.coefficient * lambda.pow(static_cast<unsigned long>(dec.degree));
      merged = true;
      break;
    }
    if (!merged) out.terms.push_back(t);
  }
  std::vector<Term> kept;
  for (auto& u : out.terms) {
    if (u.coefficient.is_zero()) continue;
    if (!u.coefficient.is_exact()) {
      BigFloat size = u.coefficient.abs(precision);
      BigFloat lmax = u.form.max_abs(precision);
      for (int i = 0; i < dec.degree; ++i) size *= lmax;
      if (size <= tol * tol) continue;
    }
    kept.push_back(std::move(u));
  }
  out.terms = std::move(kept);
  return out;
}

}  // namespace waring
