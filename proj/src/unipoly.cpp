#include "waring/unipoly.hpp"

#include <cmath>
#include <optional>

#include "waring/errors.hpp"

namespace waring {

namespace {

constexpr long kGuardBits = 32;
constexpr int kMaxAberthIterations = 2000;

Complex horner(const std::vector<Complex>& c, const Complex& z) {
  Complex acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

// p(z) and p'(z) in one pass.
std::pair<Complex, Complex> horner2(const std::vector<Complex>& c, const Complex& z) {
  Complex p = c.back();
  Complex dp(z.precision());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return {p, dp};
}

std::vector<Complex> solve_quadratic(const std::vector<Complex>& c, long prec) {
  // c2 t^2 + c1 t + c0, stable form.
  Complex disc = c[1] * c[1] - Complex(Rational(4), prec) * c[2] * c[0];
  Complex s = disc.sqrt();
  // Choose the sign avoiding cancellation: Re(conj(c1) * s) >= 0.
  Complex t = c[1].conj() * s;
  Complex q = t.real().sign() >= 0 ? -(c[1] + s) : -(c[1] - s);
  Complex half(Rational(1, 2), prec);
  q = q * half;
  if (q.is_zero()) return {Complex(prec), Complex(prec)};
  return {q / c[2], c[0] / q};
}

// Simultaneous iteration on a polynomial assumed to have simple roots.
std::vector<Complex> aberth(const std::vector<Complex>& c, long prec) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 1) return {-c[0] / c[1]};
  if (n == 2) return solve_quadratic(c, prec);

  BigFloat radius(1, prec);
  if (!c[0].is_zero()) radius = root(c[0].abs() / c[n].abs(), static_cast<unsigned long>(n));
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(n));
  const double two_pi = 6.283185307179586;
  for (int k = 0; k < n; ++k) {
    double angle = two_pi * k / n + 0.4;
    Rational cr(std::cos(angle)), sr(std::sin(angle));
    z.emplace_back(radius * BigFloat(cr, prec), radius * BigFloat(sr, prec));
  }
  BigFloat eps = BigFloat::pow2(-(prec - 8), prec);
  BigFloat one(1, prec);
  Complex unit(Rational(1), prec);
  for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
    bool converged = true;
    for (int k = 0; k < n; ++k) {
      auto [p, dp] = horner2(c, z[k]);
      if (p.is_zero()) continue;
      if (dp.is_zero()) {
        // Nudge off a critical point.
        z[k] = z[k] + Complex(BigFloat::pow2(-(prec / 4), prec), BigFloat::pow2(-(prec / 3), prec));
        converged = false;
        continue;
      }
      Complex w = p / dp;
      Complex sum(prec);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = z[k] - z[j];
        if (!diff.is_zero()) sum = sum + unit / diff;
      }
      Complex delta = w / (unit - w * sum);
      z[k] = z[k] - delta;
      if (delta.abs() > eps * max(one, z[k].abs())) converged = false;
    }
    if (converged) break;
  }
  return z;
}

void newton_polish(const std::vector<Complex>& c, Complex& z, int steps) {
  for (int s = 0; s < steps; ++s) {
    auto [p, dp] = horner2(c, z);
    if (p.is_zero() || dp.is_zero()) return;
    z = z - p / dp;
  }
}

std::vector<Complex> to_complex(const UniPoly& p, long prec) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(x.to_complex(prec).rounded(prec));
  return c;
}

bool residual_ok(const std::vector<Complex>& c, const Complex& r, long precision) {
  long prec = r.precision();
  BigFloat maxc(prec);
  for (const auto& x : c) maxc = max(maxc, x.abs());
  BigFloat one(1, prec);
  BigFloat scale = maxc;
  BigFloat rr = max(one, r.abs());
  for (std::size_t i = 1; i < c.size(); ++i) scale = scale * rr;
  return horner(c, r).abs() <= default_tolerance(precision) * scale;
}

// Roots of an approximate (or exact squarefree) polynomial, returned at
// `precision` bits.
std::vector<Complex> numeric_roots(const UniPoly& p, long precision) {
  const long work = precision + kGuardBits;
  std::vector<Complex> c = to_complex(p, work);
  std::vector<Complex> roots = aberth(c, work);
  for (auto& z : roots) newton_polish(c, z, 3);
  for (const auto& z : roots)
    if (!residual_ok(c, z, precision)) throw NumericalFailure("root finder did not reach the residual bound");
  std::vector<Complex> out;
  out.reserve(roots.size());
  for (const auto& z : roots) out.push_back(z.rounded(precision));
  return out;
}

// Integer-coefficient primitive multiple of an exact polynomial.
std::vector<Integer> integer_coefficients(const UniPoly& p) {
  Integer lcm = 1;
  for (const auto& x : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.rational().get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& x : p.coeffs()) out.push_back(x.rational().get_num() * (lcm / x.rational().get_den()));
  return out;
}

// A rational root p/q of an integer polynomial has q | lc, so lc * root is
// an integer; round and confirm exactly.
std::optional<Rational> recognize_rational_root(const UniPoly& p, const Complex& z, long precision) {
  BigFloat tol = BigFloat::pow2(-(precision / 4), precision);
  BigFloat one(1, precision);
  if (abs(z.imag()) > tol * max(one, z.abs())) return std::nullopt;
  std::vector<Integer> ic = integer_coefficients(p);
  const Integer& lc = ic.back();
  BigFloat scaled = z.real() * BigFloat(Rational(lc), precision);
  BigFloat r(precision);
  mpfr_round(r.get(), scaled.get());
  Rational candidate = r.to_rational() / Rational(lc);
  candidate.canonicalize();
  if (!p(Number(candidate)).is_zero()) return std::nullopt;
  return candidate;
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Number> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::monomial(const Number& c, int power) {
  std::vector<Number> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool UniPoly::is_exact() const {
  for (const auto& c : coeffs_)
    if (!c.is_exact()) return false;
  return true;
}

const Number& UniPoly::coeff(int i) const {
  static const Number zero;
  if (i < 0 || i > degree()) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Number UniPoly::operator()(const Number& t) const {
  Number acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Number> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Number(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Number> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + Number(-1) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Number> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Number& s, const UniPoly& p) {
  std::vector<Number> c = p.coeffs_;
  for (auto& x : c) x = s * x;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::trimmed(const BigFloat& tol) const {
  if (is_exact() || coeffs_.empty()) return *this;
  BigFloat m(tol.precision());
  for (const auto& c : coeffs_) m = max(m, c.abs(tol.precision()));
  std::vector<Number> c = coeffs_;
  while (!c.empty() && c.back().abs(tol.precision()) <= tol * m) c.pop_back();
  return UniPoly(std::move(c));
}

// ------------------------------------------------------ exact algorithms

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (!a.is_exact() || !b.is_exact()) throw InternalError("exact polynomial division on approximate input");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Number> rem = a.coeffs();
  std::vector<Number> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Number& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Number q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return (Number(1) / x.leading()) * x;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  UniPoly g = gcd(p, p.derivative());
  UniPoly q = divmod(p, g).first;
  return (Number(1) / q.leading()) * q;
}

bool is_squarefree(const UniPoly& p) { return squarefree_part(p).degree() == p.degree(); }

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = divmod(p, a).first;
  UniPoly c = divmod(dp, a).first;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly f = gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f, i);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// ------------------------------------------------------------------ roots

std::vector<Root> univariate_roots(const UniPoly& p, long precision) {
  if (p.is_zero()) throw InvalidInput("roots of the zero polynomial");
  if (p.degree() < 1) throw InvalidInput("roots of a constant polynomial");
  precision = std::max(precision, kMinPrecision);
  std::vector<Root> out;
  if (!p.is_exact()) {
    for (auto& z : numeric_roots(p, precision)) out.push_back(Root{Number(std::move(z)), 1});
    return out;
  }
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (auto& z : numeric_roots(factor, precision)) {
      if (auto q = recognize_rational_root(factor, z, precision)) {
        out.push_back(Root{Number(*q), mult});
      } else {
        out.push_back(Root{Number(std::move(z)), mult});
      }
    }
  }
  return out;
}

std::vector<ProjectiveRoot> binary_form_roots(const std::vector<Number>& c, long precision) {
  if (c.empty()) throw InvalidInput("binary form without coefficients");
  const int n = static_cast<int>(c.size()) - 1;
  UniPoly p(c);
  if (p.is_zero()) throw InvalidInput("roots of the zero binary form");
  p = p.trimmed(default_tolerance(precision));
  std::vector<ProjectiveRoot> out;
  int at_infinity = n - p.degree();
  if (at_infinity > 0) out.push_back(ProjectiveRoot{{Number(0), Number(1)}, at_infinity});
  if (p.degree() < 1) return out;
  long prec = std::max(precision, kMinPrecision);
  BigFloat one(1, prec);
  for (auto& r : univariate_roots(p, prec)) {
    // [1 : t], rescaled so the larger coordinate is 1.
    if (r.value.abs(prec) > one) {
      out.push_back(ProjectiveRoot{{Number(1) / r.value, Number(1)}, r.multiplicity});
    } else {
      out.push_back(ProjectiveRoot{{Number(1), r.value}, r.multiplicity});
    }
  }
  return out;
}

BigFloat min_separation(const std::vector<ProjectiveRoot>& roots, long precision) {
  long prec = std::max(precision, kMinPrecision);
  BigFloat best = BigFloat::pow2(1L << 20, prec);
  for (const auto& r : roots)
    if (r.multiplicity > 1) return BigFloat(prec);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const auto& a = roots[i].point;
      const auto& b = roots[j].point;
      BigFloat cross = (a[0] * b[1] - a[1] * b[0]).abs(prec);
      BigFloat na = sqrt(a[0].norm(prec) + a[1].norm(prec));
      BigFloat nb = sqrt(b[0].norm(prec) + b[1].norm(prec));
      best = std::min(best, cross / (na * nb), [](const BigFloat& x, const BigFloat& y) { return x < y; });
    }
  return best;
}

}  // namespace waring
