#pragma once

// Scalar tower: exact rationals (GMP) and arbitrary-precision complex
// numbers (MPFR), joined in Number, which stays exact until an approximate
// operand enters.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace waring {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr long kMinPrecision = 64;
inline constexpr long kDefaultPrecision = 256;

// RAII wrapper around an mpfr_t. Binary operations round to the larger of
// the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(long precision = kMinPrecision);
  BigFloat(long value, long precision);
  BigFloat(const Rational& value, long precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  // Parses a decimal string at the given precision; throws InvalidInput.
  static BigFloat parse(const std::string& text, long precision);
  // 2^exponent, exactly.
  static BigFloat pow2(long exponent, long precision = kMinPrecision);

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  BigFloat rounded(long precision) const;
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log2|x|; -infinity for zero.
  double log2_abs() const;
  Rational to_rational() const;
  // Shortest decimal string that reads back to the same value at this
  // precision.
  std::string to_string() const;
  // Human-oriented rendering with a fixed number of significant digits.
  std::string to_string(int digits) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b);
  friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
  friend BigFloat cos(const BigFloat& x);
  friend BigFloat sin(const BigFloat& x);
  // x^(1/n) for x >= 0.
  friend BigFloat root(const BigFloat& x, unsigned long n);
  friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

 private:
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

class Complex {
 public:
  explicit Complex(long precision = kMinPrecision) : re_(precision), im_(precision) {}
  Complex(BigFloat re, BigFloat im);
  Complex(const Rational& re, long precision) : re_(re, precision), im_(precision) {}

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  long precision() const { return std::max(re_.precision(), im_.precision()); }
  Complex rounded(long precision) const { return Complex(re_.rounded(precision), im_.rounded(precision)); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  BigFloat norm() const;  // |z|^2
  BigFloat abs() const;
  Complex conj() const { return Complex(re_, -im_); }
  // Principal square root and principal n-th root.
  Complex sqrt() const;
  Complex nth_root(unsigned long n) const;
  Complex pow(unsigned long n) const;

  Complex operator-() const { return Complex(-re_, -im_); }
  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex& operator+=(const Complex& b) { return *this = *this + b; }
  Complex& operator-=(const Complex& b) { return *this = *this - b; }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }

  std::string to_string(int digits = 20) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

// Element of the scalar tower. Arithmetic on two exact operands is exact;
// as soon as one operand is approximate the result is a Complex at the
// larger of the operand precisions.
class Number {
 public:
  Number() : v_(Rational(0)) {}
  Number(int value) : v_(Rational(value)) {}
  Number(long value) : v_(Rational(value)) {}
  Number(Rational value) : v_(std::move(value)) { std::get<Rational>(v_).canonicalize(); }
  Number(const Integer& value) : v_(Rational(value)) {}
  Number(Complex value) : v_(std::move(value)) {}

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  // Precision of the approximate value; 0 when exact.
  long precision() const;
  const Rational& rational() const;
  Complex to_complex(long precision) const;

  // Exact zero test: a rational 0, or a complex with both parts exactly 0.
  bool is_zero() const;
  // Approximate zero test: |x| <= bound (exact values use the exact test).
  bool is_negligible(const BigFloat& bound) const;
  bool is_one() const;

  BigFloat abs(long precision = kMinPrecision) const;
  BigFloat norm(long precision = kMinPrecision) const;
  Number conj() const;

  Number operator-() const;
  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  // Throws InvalidInput on exact division by zero.
  friend Number operator/(const Number& a, const Number& b);
  Number& operator+=(const Number& b) { return *this = *this + b; }
  Number& operator-=(const Number& b) { return *this = *this - b; }
  Number& operator*=(const Number& b) { return *this = *this * b; }
  Number& operator/=(const Number& b) { return *this = *this / b; }
  Number pow(unsigned long n) const;

  // Exact equality for exact values; bitwise value equality otherwise.
  friend bool operator==(const Number& a, const Number& b);

  std::string to_string(int digits = 20) const;

 private:
  std::variant<Rational, Complex> v_;
};

std::ostream& operator<<(std::ostream& os, const Number& x);

// Default relative tolerance for a working precision: 2^(-precision/2).
BigFloat default_tolerance(long precision);

// Exact binomial coefficient with C(a, b) = 0 when a < b, b < 0 or a < 0,
// and C(0, 0) = 1.
Integer binomial(long a, long b);
Integer factorial(unsigned long n);

}  // namespace waring
