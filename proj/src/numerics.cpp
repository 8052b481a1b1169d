#include "waring/numerics.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <ostream>

#include "waring/errors.hpp"

namespace waring {

namespace {

long max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat::BigFloat(long precision) {
  mpfr_init2(v_, std::max<long>(precision, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long precision) {
  mpfr_init2(v_, precision);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long precision) {
  mpfr_init2(v_, precision);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::rounded(long precision) const {
  BigFloat r(precision);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(const std::string& text, long precision) {
  BigFloat r(precision);
  char* end = nullptr;
  mpfr_strtofr(r.v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end == text.c_str() || *end != '\0') {
    throw InvalidInput("malformed floating-point literal '" + text + "'");
  }
  return r;
}

BigFloat BigFloat::pow2(long exponent, long precision) {
  BigFloat r(precision);
  mpfr_set_ui_2exp(r.v_, 1, exponent, MPFR_RNDN);
  return r;
}

double BigFloat::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, v_, MPFR_RNDN);
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

Rational BigFloat::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string BigFloat::to_string() const {
  std::size_t digits = mpfr_get_str_ndigits(10, mpfr_get_prec(v_));
  return to_string(static_cast<int>(digits));
}

std::string BigFloat::to_string(int digits) const {
  if (is_zero()) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
  std::unique_ptr<char, void (*)(char*)> guard(raw, mpfr_free_str);
  std::string mant(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  // value = 0.mant * 10^exp
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long e10 = static_cast<long>(exp) - 1;
  if (e10 != 0) out += "e" + std::to_string(e10);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(max_prec(x, y));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat root(const BigFloat& x, unsigned long n) {
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.v_, x.v_, n, MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(20); }

// ---------------------------------------------------------------- Complex

Complex::Complex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

BigFloat Complex::norm() const { return re_ * re_ + im_ * im_; }

BigFloat Complex::abs() const { return hypot(re_, im_); }

Complex Complex::sqrt() const {
  long prec = precision();
  if (is_zero()) return Complex(prec);
  BigFloat r = abs();
  BigFloat two(2, prec);
  if (re_.sign() >= 0) {
    BigFloat t = waring::sqrt((r + re_) / two);
    return Complex(t, im_ / (two * t));
  }
  BigFloat t = waring::sqrt((r - re_) / two);
  BigFloat re = waring::abs(im_) / (two * t);
  return Complex(re, im_.sign() < 0 ? -t : t);
}

Complex Complex::nth_root(unsigned long n) const {
  long prec = precision();
  if (n == 1 || is_zero()) return *this;
  BigFloat mag = root(abs(), n);
  BigFloat theta = atan2(im_, re_) / BigFloat(static_cast<long>(n), prec);
  return Complex(mag * cos(theta), mag * sin(theta));
}

Complex Complex::pow(unsigned long n) const {
  Complex result(Rational(1), precision());
  Complex base = *this;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re_ + b.re_, a.im_ + b.im_); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re_ - b.re_, a.im_ - b.im_); }

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.is_zero()) throw NumericalFailure("complex division by zero");
  BigFloat den = b.norm();
  return Complex((a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den);
}

std::string Complex::to_string(int digits) const {
  if (im_.is_zero()) return re_.to_string(digits);
  if (re_.is_zero()) return im_.to_string(digits) + "i";
  std::string im = im_.to_string(digits);
  if (im[0] != '-') im = "+" + im;
  return "(" + re_.to_string(digits) + im + "i)";
}

// ----------------------------------------------------------------- Number

long Number::precision() const {
  if (const auto* c = std::get_if<Complex>(&v_)) return c->precision();
  return 0;
}

const Rational& Number::rational() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return *q;
  throw InternalError("Number::rational() on an approximate value");
}

Complex Number::to_complex(long precision) const {
  if (const auto* q = std::get_if<Rational>(&v_)) return Complex(*q, precision);
  return std::get<Complex>(v_);
}

bool Number::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return sgn(*q) == 0;
  return std::get<Complex>(v_).is_zero();
}

bool Number::is_negligible(const BigFloat& bound) const {
  if (is_exact()) return is_zero();
  return std::get<Complex>(v_).abs() <= bound;
}

bool Number::is_one() const {
  const auto* q = std::get_if<Rational>(&v_);
  return q != nullptr && *q == 1;
}

BigFloat Number::abs(long precision) const {
  if (const auto* q = std::get_if<Rational>(&v_)) return BigFloat(Rational(::abs(*q)), precision);
  return std::get<Complex>(v_).abs();
}

BigFloat Number::norm(long precision) const {
  if (const auto* q = std::get_if<Rational>(&v_)) return BigFloat(Rational(*q * *q), precision);
  return std::get<Complex>(v_).norm();
}

Number Number::conj() const {
  if (is_exact()) return *this;
  return Number(std::get<Complex>(v_).conj());
}

Number Number::operator-() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return Number(Rational(-*q));
  return Number(-std::get<Complex>(v_));
}

namespace {

template <class ExactOp, class ApproxOp>
Number combine(const Number& a, const Number& b, ExactOp exact, ApproxOp approx) {
  if (a.is_exact() && b.is_exact()) return Number(exact(a.rational(), b.rational()));
  long prec = std::max(a.precision(), b.precision());
  return Number(approx(a.to_complex(prec), b.to_complex(prec)));
}

}  // namespace

Number operator+(const Number& a, const Number& b) {
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); },
      [](const Complex& x, const Complex& y) { return x + y; });
}

Number operator-(const Number& a, const Number& b) {
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); },
      [](const Complex& x, const Complex& y) { return x - y; });
}

Number operator*(const Number& a, const Number& b) {
  // Exact zero annihilates approximate values too.
  if ((a.is_exact() && a.is_zero()) || (b.is_exact() && b.is_zero())) return Number();
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); },
      [](const Complex& x, const Complex& y) { return x * y; });
}

Number operator/(const Number& a, const Number& b) {
  if (b.is_exact() && b.is_zero()) throw InvalidInput("division by exact zero");
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return Rational(x / y); },
      [](const Complex& x, const Complex& y) { return x / y; });
}

Number Number::pow(unsigned long n) const {
  if (const auto* q = std::get_if<Rational>(&v_)) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q->get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), q->get_den_mpz_t(), n);
    return Number(r);
  }
  return Number(std::get<Complex>(v_).pow(n));
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.rational() == b.rational();
  const Complex& x = std::get<Complex>(a.v_);
  const Complex& y = std::get<Complex>(b.v_);
  return x.real() == y.real() && x.imag() == y.imag();
}

std::string Number::to_string(int digits) const {
  if (const auto* q = std::get_if<Rational>(&v_)) return q->get_str();
  return std::get<Complex>(v_).to_string(digits);
}

std::ostream& operator<<(std::ostream& os, const Number& x) { return os << x.to_string(); }

BigFloat default_tolerance(long precision) { return BigFloat::pow2(-(precision / 2)); }

Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace waring
