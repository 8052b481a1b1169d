#include "waring/apolarity.hpp"

#include <algorithm>

#include "waring/unipoly.hpp"

namespace waring {

namespace {

Vector form_vector(const Form& f) {
  std::vector<Exponent> basis = monomials(f.num_vars(), f.degree());
  Vector v;
  v.reserve(basis.size());
  for (const auto& e : basis) v.push_back(f.coefficient(e));
  return v;
}

DualOp dual_from_vector(int n, int e, const Vector& v) {
  std::vector<Exponent> labels = monomials(n, e);
  DualOp op(n, e);
  for (std::size_t i = 0; i < labels.size(); ++i) op.add_term(labels[i], v[i]);
  return op;
}

// Newton interpolation of values at nodes 0..N; returns coefficients of
// t^0..t^N.
std::vector<Number> interpolate(std::vector<Number> values) {
  const std::size_t n = values.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      values[i] = (values[i] - values[i - 1]) / Number(static_cast<long>(k));
      if (i == k) break;
    }
  // Expand sum_k values[k] * prod_{j<k} (t - j) by Horner.
  std::vector<Number> coeffs(n);
  for (std::size_t k = n; k-- > 0;) {
    // coeffs = coeffs * (t - k) + values[k]
    std::vector<Number> next(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= Number(static_cast<long>(k)) * coeffs[i];
    }
    next[0] += values[k];
    coeffs = std::move(next);
  }
  return coeffs;
}

// Coefficients (in powers of the last variable) of op at (p0, p1, y2).
std::vector<Number> fiber_coefficients(const DualOp& op, const Number& p0, const Number& p1) {
  std::vector<Number> c(static_cast<std::size_t>(op.degree()) + 1);
  for (const auto& [e, v] : op.terms()) {
    Number t = v;
    if (e[0] > 0) t *= p0.pow(static_cast<unsigned long>(e[0]));
    if (e[1] > 0) t *= p1.pow(static_cast<unsigned long>(e[1]));
    c[static_cast<std::size_t>(e[2])] += t;
  }
  return c;
}

Number sylvester_resultant(const std::vector<Number>& a, const std::vector<Number>& b, long precision) {
  const std::size_t da = a.size() - 1;
  const std::size_t db = b.size() - 1;
  const std::size_t size = da + db;
  Matrix s(size, size);
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t k = 0; k <= da; ++k) s(r, r + k) = a[da - k];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t k = 0; k <= db; ++k) s(db + r, r + k) = b[db - k];
  return determinant(s, precision);
}

Matrix random_invertible(int n, Rng& rng) {
  while (true) {
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Number(rng.uniform(3));
    if (determinant(m) != 0) return m;
  }
}

bool leading_in_last(const DualOp& op) {
  Exponent top(3, 0);
  top[2] = op.degree();
  Number c = op.coefficient(top);
  if (c.is_zero()) return false;
  if (c.is_exact()) return true;
  return c.abs() > default_tolerance(c.precision()) * op.max_abs();
}

void add_unique(std::vector<IntersectionPoint>& out, IntersectionPoint p, long precision) {
  BigFloat limit = BigFloat::pow2(-precision / 4, precision);
  for (const auto& q : out)
    if (projective_distance(q.point.coords, p.point.coords, precision) <= limit) return;
  out.push_back(std::move(p));
}

}  // namespace

CatMatrix catalecticant(const Form& f, int e) {
  if (e < 0 || e > f.degree()) throw InvalidInput("catalecticant index out of range");
  CatMatrix cat;
  cat.num_vars = f.num_vars();
  cat.degree = f.degree();
  cat.e = e;
  cat.row_labels = monomials(f.num_vars(), e);
  cat.col_labels = monomials(f.num_vars(), f.degree() - e);
  cat.entries = Matrix(cat.row_labels.size(), cat.col_labels.size());
  Exponent sum(static_cast<std::size_t>(f.num_vars()));
  for (std::size_t r = 0; r < cat.row_labels.size(); ++r)
    for (std::size_t c = 0; c < cat.col_labels.size(); ++c) {
      const Exponent& a = cat.row_labels[r];
      const Exponent& b = cat.col_labels[c];
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
      Number coeff = f.coefficient(sum);
      if (coeff.is_zero()) continue;
      Integer factor = 1;
      for (std::size_t i = 0; i < sum.size(); ++i)
        for (int t = sum[i]; t > b[i]; --t) factor *= t;
      cat.entries(r, c) = coeff * Number(factor);
    }
  return cat;
}

std::vector<DualOp> apolar_component(const Form& f, int e, long precision) {
  CatMatrix cat = catalecticant(f, e);
  std::vector<DualOp> out;
  for (const auto& v : kernel(cat.entries.transpose(), precision)) out.push_back(dual_from_vector(f.num_vars(), e, v));
  return out;
}

int essential_variables(const Form& f, long precision) {
  if (f.is_zero()) throw InvalidInput("the zero form has no essential variables");
  if (f.degree() == 0) return 0;
  return static_cast<int>(rank(catalecticant(f, 1).entries, precision));
}

LinearForm EssentialSplit::lift(const LinearForm& lambda) const {
  const std::size_t n = inverse.rows();
  LinearForm l{std::vector<Number>(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < lambda.coords.size(); ++j) l.coords[i] += lambda.coords[j] * inverse(j, i);
  return l;
}

Constraint EssentialSplit::restrict(const Constraint& g) const {
  const std::size_t n = inverse.rows();
  Matrix p(n, static_cast<std::size_t>(essential));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) = inverse(j, i);
  return substitute(g, p);
}

EssentialSplit essential_split(const Form& f, long precision) {
  const int n = f.num_vars();
  const int m = essential_variables(f, precision);
  std::vector<Vector> ker;
  if (f.degree() > 0) ker = kernel(catalecticant(f, 1).entries.transpose(), precision);
  // Standard basis vectors completing the kernel to a basis.
  std::vector<Vector> cols;
  for (int i = 0; i < n && static_cast<int>(cols.size()) < m; ++i) {
    Vector unit(static_cast<std::size_t>(n));
    unit[static_cast<std::size_t>(i)] = 1;
    std::vector<Vector> trial = cols;
    trial.push_back(unit);
    trial.insert(trial.end(), ker.begin(), ker.end());
    Matrix t(static_cast<std::size_t>(n), trial.size());
    for (std::size_t c = 0; c < trial.size(); ++c)
      for (std::size_t r = 0; r < t.rows(); ++r) t(r, c) = trial[c][r];
    if (rank(t, precision) == trial.size()) cols.push_back(unit);
  }
  if (static_cast<int>(cols.size()) != m) throw NumericalFailure("could not complete the apolar kernel to a basis");
  cols.insert(cols.end(), ker.begin(), ker.end());

  EssentialSplit s;
  s.essential = m;
  s.change = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < s.change.rows(); ++r) s.change(r, c) = cols[c][r];
  s.inverse = inverse(s.change, precision);
  Matrix first(static_cast<std::size_t>(n), static_cast<std::size_t>(std::max(m, 1)));
  for (std::size_t r = 0; r < first.rows(); ++r)
    for (std::size_t c = 0; c < first.cols(); ++c) first(r, c) = s.change(r, c);
  s.restricted = substitute(f, first);
  if (!s.restricted.is_exact()) s.restricted = s.restricted.chopped(default_tolerance(precision));
  return s;
}

bool ProjPoint::is_exact() const {
  return std::all_of(coords.begin(), coords.end(), [](const Number& x) { return x.is_exact(); });
}

ProjPoint normalize_point(std::vector<Number> coords, long precision) {
  std::size_t best = coords.size();
  BigFloat top(precision);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    BigFloat a = coords[i].abs(precision);
    // Ties go to the first index; a small relative margin keeps approximate
    // representatives of the same point on the same index.
    if (best == coords.size() || a > top * (BigFloat(1, precision) + BigFloat::pow2(-precision / 4, precision))) {
      if (!coords[i].is_zero()) {
        best = i;
        top = a;
      }
    }
  }
  if (best == coords.size()) throw InvalidInput("the zero vector is not a projective point");
  Number s = coords[best];
  for (auto& c : coords) c = c / s;
  coords[best] = 1;
  return ProjPoint{std::move(coords)};
}

BigFloat projective_distance(const std::vector<Number>& a, const std::vector<Number>& b, long precision) {
  BigFloat cross(precision), na(precision), nb(precision);
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += a[i].norm(precision);
    nb += b[i].norm(precision);
    for (std::size_t j = i + 1; j < a.size(); ++j) cross += (a[i] * b[j] - a[j] * b[i]).norm(precision);
  }
  if (na.is_zero() || nb.is_zero()) return BigFloat(1, precision);
  return sqrt(cross / (na * nb));
}

bool vanishes_at(const DualOp& op, const std::vector<Number>& point, long precision) {
  ProjPoint p = normalize_point(point, precision);
  Number v = op(p.coords);
  if (v.is_zero()) return true;
  if (v.is_exact()) return false;
  return v.abs(precision) <= default_tolerance(precision) * op.norm1(precision);
}

namespace {

// One elimination pass in the coordinates y = t z. `simple` reports whether
// every root of the resultant was simple (distinct projections).
std::vector<IntersectionPoint> intersect_in_chart(const DualOp& ca, const DualOp& cb, const Matrix& t, long precision,
                                                  bool& simple) {
  const long work = 2 * precision + 64;
  const int total = ca.degree() * cb.degree();
  std::vector<Number> values;
  for (int node = 0; node <= total; ++node) {
    Number one(1);
    Number tn(node);
    values.push_back(sylvester_resultant(fiber_coefficients(ca, one, tn), fiber_coefficients(cb, one, tn), work));
  }
  std::vector<Number> res = interpolate(values);
  bool zero = true;
  if (std::all_of(res.begin(), res.end(), [](const Number& x) { return x.is_exact(); })) {
    zero = std::all_of(res.begin(), res.end(), [](const Number& x) { return x.is_zero(); });
  } else {
    BigFloat scale(1, work);
    BigFloat na = ca.norm1(work);
    BigFloat nb = cb.norm1(work);
    for (int i = 0; i < cb.degree(); ++i) scale *= na;
    for (int i = 0; i < ca.degree(); ++i) scale *= nb;
    BigFloat bound = default_tolerance(precision) * scale;
    zero = std::all_of(res.begin(), res.end(), [&](const Number& x) { return x.is_negligible(bound); });
  }
  if (zero) throw DegenerateSystem("the curves share a common component");

  std::vector<ProjectiveRoot> roots = binary_form_roots(res, work);
  simple = min_separation(roots, work) > BigFloat::pow2(-precision / 4, work);
  std::vector<IntersectionPoint> out;
  for (const auto& root : roots) {
    const Number& p0 = root.point[0];
    const Number& p1 = root.point[1];
    UniPoly fiber(fiber_coefficients(ca, p0, p1));
    for (const auto& y2 : univariate_roots(fiber, work)) {
      std::vector<Number> z = {p0, p1, y2.value};
      if (!vanishes_at(cb, z, precision) || !vanishes_at(ca, z, precision)) continue;
      std::vector<Number> y(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) y[i] += t(i, j) * z[j];
      add_unique(out, IntersectionPoint{normalize_point(std::move(y), work), root.multiplicity}, precision);
    }
  }
  return out;
}

}  // namespace

std::vector<IntersectionPoint> intersect_curves(const DualOp& a, const DualOp& b, long precision, Rng& rng) {
  if (a.num_vars() != 3 || b.num_vars() != 3) throw InvalidInput("curve intersection needs three variables");
  if (a.is_zero() || b.is_zero()) throw DegenerateSystem("zero curve in an intersection");
  std::vector<IntersectionPoint> last;
  bool have = false;
  int charts = 0;
  for (int attempt = 0; attempt < 32 && charts < 4; ++attempt) {
    Matrix t = attempt == 0 ? Matrix::identity(3) : random_invertible(3, rng);
    DualOp ca = substitute(a, t);
    DualOp cb = substitute(b, t);
    if (!leading_in_last(ca) || !leading_in_last(cb)) continue;
    ++charts;
    bool simple = false;
    last = intersect_in_chart(ca, cb, t, precision, simple);
    have = true;
    if (simple) return last;
  }
  if (!have) throw DegenerateSystem("no coordinate change made the curves monic");
  return last;
}

std::vector<ProjPoint> base_points(const Form& f, int e, long precision, std::uint64_t seed) {
  const int n = f.num_vars();
  if (n > 3) throw InvalidInput("base points are implemented for at most three variables");
  if (e < 1 || e > f.degree()) throw InvalidInput("base point degree out of range");
  std::vector<DualOp> basis = apolar_component(f, e, precision);
  if (basis.empty()) throw InvalidInput("the apolar component is empty");
  auto on_all = [&](const std::vector<Number>& p) {
    return std::all_of(basis.begin(), basis.end(), [&](const DualOp& op) { return vanishes_at(op, p, precision); });
  };
  std::vector<ProjPoint> out;
  if (n == 1) {
    if (on_all({Number(1)})) out.push_back(ProjPoint{{Number(1)}});
    return out;
  }
  if (n == 2) {
    std::vector<Number> c;
    for (const auto& mono : monomials(2, e)) c.push_back(basis.front().coefficient(mono));
    for (const auto& r : binary_form_roots(c, 2 * precision + 64))
      if (on_all(r.point)) out.push_back(normalize_point(r.point, precision));
    return out;
  }
  if (basis.size() == 1) throw DegenerateSystem("a single curve has a positive-dimensional zero locus");
  Rng rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    DualOp pa(3, e), pb(3, e);
    for (const auto& op : basis) {
      pa += Number(rng.uniform(8)) * op;
      pb += Number(rng.uniform(8)) * op;
    }
    if (pa.is_zero() || pb.is_zero()) continue;
    try {
      for (auto& ip : intersect_curves(pa, pb, precision, rng))
        if (on_all(ip.point.coords)) out.push_back(normalize_point(ip.point.coords, precision));
      return out;
    } catch (const DegenerateSystem&) {
    }
  }
  throw DegenerateSystem("the apolar system has a positive-dimensional base locus");
}

std::optional<DualOp> power_witness(const Form& f, const LinearForm& l, int e, long precision) {
  if (e < 0 || e > f.degree()) throw InvalidInput("power witness degree out of range");
  if (l.num_vars() != f.num_vars()) throw InvalidInput("linear form has the wrong number of variables");
  const int k = f.degree() - e;
  CatMatrix cat = catalecticant(f, k);
  Form target = linear_power(l, e);
  Vector rhs = form_vector(target);
  Matrix a = cat.entries.transpose();
  std::optional<Vector> u = solve(a, rhs, precision);
  if (!u) return std::nullopt;
  DualOp op = dual_from_vector(f.num_vars(), k, *u);
  if (op.is_exact() && target.is_exact()) return op;
  // Approximate: accept only a small residual.
  Form residual = contract(op, f) - target;
  BigFloat scale = target.norm1(precision) + op.norm1(precision) * f.norm1(precision);
  if (residual.max_abs(precision) > default_tolerance(precision) * scale) return std::nullopt;
  return op;
}

}  // namespace waring
