#include "waring/linalg.hpp"

#include <utility>

#include "waring/errors.hpp"

namespace waring {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_exact() const {
  for (const auto& x : data_)
    if (!x.is_exact()) return false;
  return true;
}

long Matrix::precision() const {
  long p = 0;
  for (const auto& x : data_) p = std::max(p, x.precision());
  return p;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

BigFloat Matrix::max_abs() const {
  BigFloat m(std::max(precision(), kMinPrecision));
  for (const auto& x : data_) m = max(m, x.abs(m.precision()));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InternalError("matrix product shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw InternalError("matrix-vector shape mismatch");
  Vector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) r[i] += a(i, k) * x[k];
  return r;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows to_integer_rows(const Matrix& a) {
  IntRows rows(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(r, c).rational().get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rational& q = a(r, c).rational();
      rows[r][c] = q.get_num() * (lcm / q.get_den());
    }
  }
  return rows;
}

// Fraction-free (Bareiss) forward elimination restricted to the first
// `limit` columns. Returns the pivot columns; `swaps` counts row swaps.
std::vector<std::size_t> bareiss(IntRows& m, std::size_t limit, int* swaps) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (swaps) ++*swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Echelon reduce_exact(const Matrix& a, std::size_t limit) {
  IntRows m = to_integer_rows(a);
  std::vector<std::size_t> pivots = bareiss(m, limit, nullptr);
  Matrix red(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) red(r, c) = Number(Rational(m[r][c]));
  // Back substitution to reduced form over the rationals.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t pc = pivots[k];
    Rational inv = 1 / red(k, pc).rational();
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!red(k, c).is_zero()) red(k, c) = Number(Rational(red(k, c).rational() * inv));
    for (std::size_t i = 0; i < k; ++i) {
      if (red(i, pc).is_zero()) continue;
      Rational f = red(i, pc).rational();
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!red(k, c).is_zero()) red(i, c) = Number(Rational(red(i, c).rational() - f * red(k, c).rational()));
    }
  }
  return Echelon{std::move(red), std::move(pivots)};
}

// Gauss-Jordan with complete pivoting over the first `limit` columns.
Echelon reduce_numeric(const Matrix& a, std::size_t limit, long precision) {
  long prec = std::max({a.precision(), precision, kMinPrecision});
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<Complex>> m(rows, std::vector<Complex>(cols, Complex(prec)));
  BigFloat scale(prec);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < limit; ++c) {
      m[r][c] = a(r, c).to_complex(prec);
      scale = max(scale, m[r][c].abs());
    }
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = limit; c < cols; ++c) m[r][c] = a(r, c).to_complex(prec);
  BigFloat threshold = default_tolerance(prec) * scale;

  std::vector<std::size_t> pivots;
  std::vector<bool> used(cols, false);
  std::size_t rank = 0;
  while (rank < rows) {
    BigFloat best(prec);
    std::size_t bi = rows;
    std::size_t bj = cols;
    for (std::size_t i = rank; i < rows; ++i)
      for (std::size_t j = 0; j < limit; ++j) {
        if (used[j]) continue;
        BigFloat v = m[i][j].abs();
        if (v > best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi == rows || best <= threshold || scale.is_zero()) break;
    std::swap(m[bi], m[rank]);
    Complex inv = Complex(Rational(1), prec) / m[rank][bj];
    for (std::size_t c = 0; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
    m[rank][bj] = Complex(Rational(1), prec);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][bj].is_zero()) continue;
      Complex f = m[i][bj];
      for (std::size_t c = 0; c < cols; ++c) m[i][c] = m[i][c] - f * m[rank][c];
      m[i][bj] = Complex(prec);
    }
    used[bj] = true;
    pivots.push_back(bj);
    ++rank;
  }
  Matrix red(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (r >= rank && c < limit) continue;  // numerically zero
      if (!m[r][c].is_zero()) red(r, c) = Number(m[r][c]);
    }
  for (std::size_t k = 0; k < rank; ++k) red(k, pivots[k]) = 1;
  return Echelon{std::move(red), std::move(pivots)};
}

Echelon reduce(const Matrix& a, std::size_t limit, long precision) {
  if (a.is_exact()) return reduce_exact(a, limit);
  return reduce_numeric(a, limit, precision);
}

Matrix augment(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

}  // namespace

Echelon row_reduce(const Matrix& a, long precision) { return reduce(a, a.cols(), precision); }

std::size_t rank(const Matrix& a, long precision) { return row_reduce(a, precision).rank(); }

std::vector<Vector> kernel(const Matrix& a, long precision) {
  Echelon e = row_reduce(a, precision);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  long prec = std::max({a.precision(), precision, kMinPrecision});
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(a.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < e.rank(); ++k) x[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(normalize_direction(x, prec));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, long precision) {
  if (b.size() != a.rows()) throw InternalError("solve: right-hand side has wrong length");
  const std::size_t n = a.cols();
  Matrix rhs(a.rows(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) rhs(r, 0) = b[r];
  bool exact = a.is_exact();
  for (const auto& x : b) exact = exact && x.is_exact();
  if (exact) {
    Echelon e = reduce_exact(augment(a, rhs), n + 1);
    Vector x(n);
    for (std::size_t k = 0; k < e.rank(); ++k) {
      if (e.pivots[k] == n) return std::nullopt;
      x[e.pivots[k]] = e.reduced(k, n);
    }
    return x;
  }
  // Normal equations at doubled precision: a^H a x = a^H b.
  long prec = 2 * std::max({a.precision(), precision, kMinPrecision});
  Matrix normal(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Number s{Complex(prec)};
      for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i).conj() * a(r, j);
      normal(i, j) = s;
    }
    Number s{Complex(prec)};
    for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i).conj() * b[r];
    normal(i, n) = s;
  }
  Echelon e = reduce_numeric(normal, n, prec);
  long out_prec = std::max({a.precision(), precision, kMinPrecision});
  Vector x(n);
  for (std::size_t k = 0; k < e.rank(); ++k) {
    Complex v = e.reduced(k, n).to_complex(prec);
    // Round back to the caller's working precision.
    x[e.pivots[k]] = Number(v.rounded(out_prec));
  }
  return x;
}

Matrix inverse(const Matrix& a, long precision) {
  if (a.rows() != a.cols()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Echelon e = reduce(augment(a, Matrix::identity(n)), n, precision);
  if (e.rank() < n) throw InvalidInput("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c) inv(e.pivots[k], c) = e.reduced(k, n + c);
  return inv;
}

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (!a.is_exact()) throw InternalError("exact determinant of an approximate matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Rational scale = 1;
  IntRows m(n, std::vector<Integer>(n));
  for (std::size_t r = 0; r < n; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(r, c).rational().get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& q = a(r, c).rational();
      m[r][c] = q.get_num() * (lcm / q.get_den());
    }
    scale /= Rational(lcm);
  }
  int swaps = 0;
  std::vector<std::size_t> pivots = bareiss(m, n, &swaps);
  if (pivots.size() < n) return 0;
  Rational det(m[n - 1][n - 1]);
  if (swaps % 2 != 0) det = -det;
  return det * scale;
}

Number determinant(const Matrix& a, long precision) {
  if (a.is_exact()) return Number(determinant(a));
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  long prec = std::max({a.precision(), precision, kMinPrecision});
  const std::size_t n = a.rows();
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n, Complex(prec)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c).to_complex(prec);
  Complex det(Rational(1), prec);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (m[i][k].norm() > m[best][k].norm()) best = i;
    if (m[best][k].is_zero()) return Number(Complex(prec));
    if (best != k) {
      std::swap(m[best], m[k]);
      det = -det;
    }
    det = det * m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      Complex f = m[i][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[i][c] = m[i][c] - f * m[k][c];
    }
  }
  return Number(det);
}

Vector normalize_direction(const Vector& v, long precision) {
  bool exact = true;
  for (const auto& x : v) exact = exact && x.is_exact();
  Vector out = v;
  if (exact) {
    Integer den = 1;
    Integer num = 0;
    for (const auto& x : v) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational().get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.rational().get_num_mpz_t());
    }
    if (num == 0) return out;
    Rational f = Rational(den) / Rational(num);
    for (const auto& x : v)
      if (!x.is_zero()) {
        if (sgn(x.rational()) < 0) f = -f;
        break;
      }
    for (auto& x : out) x = Number(Rational(x.rational() * f));
    return out;
  }
  long prec = std::max(precision, kMinPrecision);
  std::size_t best = 0;
  BigFloat m(prec);
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigFloat a = v[i].abs(prec);
    if (a > m) {
      m = a;
      best = i;
    }
  }
  if (m.is_zero()) return out;
  Number inv = Number(1) / v[best];
  for (auto& x : out) x = x * inv;
  out[best] = 1;
  return out;
}

}  // namespace waring
