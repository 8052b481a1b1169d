#pragma once

// Homogeneous polynomials with sparse exponent-map storage. The same
// container represents forms F in S = k[x0..x{n-1}], dual operators in
// S* = k[d0..d{n-1}] (acting by partial differentiation), and constraint
// polynomials in the coordinates l0..l{n-1} of a linear form.

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waring/errors.hpp"
#include "waring/linalg.hpp"
#include "waring/numerics.hpp"

namespace waring {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded lexicographic order, largest first: x0^d precedes x0^(d-1) x1.
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// All exponent vectors of n variables and total degree d, in MonomialOrder.
std::vector<Exponent> monomials(int num_vars, int degree);
std::size_t monomial_count(int num_vars, int degree);

struct PrimalTag {
  static constexpr char kVariable = 'x';
};
struct DualTag {
  static constexpr char kVariable = 'd';
};
struct CoordTag {
  static constexpr char kVariable = 'l';
};

template <class Tag>
class Homogeneous {
 public:
  using Terms = std::map<Exponent, Number, MonomialOrder>;

  Homogeneous() = default;
  Homogeneous(int num_vars, int degree) : n_(num_vars), d_(degree) {
    if (num_vars < 1) throw InvalidInput("a form needs at least one variable");
    if (degree < 0) throw InvalidInput("negative degree");
  }

  static Homogeneous monomial(const Exponent& e, const Number& c) {
    Homogeneous h(static_cast<int>(e.size()), total_degree(e));
    h.add_term(e, c);
    return h;
  }
  static Homogeneous variable(int num_vars, int index) {
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return monomial(e, Number(1));
  }
  // sum_i coeffs[i] * var_i
  static Homogeneous linear(std::span<const Number> coeffs) {
    Homogeneous h(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponent e(coeffs.size(), 0);
      e[i] = 1;
      h.add_term(e, coeffs[i]);
    }
    return h;
  }

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_exact() const {
    for (const auto& [e, c] : terms_)
      if (!c.is_exact()) return false;
    return true;
  }
  long precision() const {
    long p = 0;
    for (const auto& [e, c] : terms_) p = std::max(p, c.precision());
    return p;
  }

  Number coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Number() : it->second;
  }

  // Adds c * x^e; exact zeros are never stored.
  void add_term(const Exponent& e, const Number& c) {
    if (static_cast<int>(e.size()) != n_ || total_degree(e) != d_)
      throw InvalidInput("monomial does not match the form's shape");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  // Sum of coefficient moduli.
  BigFloat norm1(long precision = kMinPrecision) const {
    BigFloat s(std::max(precision, this->precision()));
    for (const auto& [e, c] : terms_) s += c.abs(s.precision());
    return s;
  }
  BigFloat max_abs(long precision = kMinPrecision) const {
    BigFloat s(std::max(precision, this->precision()));
    for (const auto& [e, c] : terms_) s = max(s, c.abs(s.precision()));
    return s;
  }

  // Value at a coordinate vector.
  Number operator()(std::span<const Number> point) const {
    if (static_cast<int>(point.size()) != n_) throw InvalidInput("evaluation point has the wrong dimension");
    Number acc;
    for (const auto& [e, c] : terms_) {
      Number t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t *= point[i].pow(static_cast<unsigned long>(e[i]));
      acc += t;
    }
    return acc;
  }

  // Drops approximate coefficients with |c| <= tol * max|c|.
  Homogeneous chopped(const BigFloat& tol) const {
    Homogeneous out(n_, d_);
    BigFloat bound = tol * max_abs(tol.precision());
    for (const auto& [e, c] : terms_)
      if (!c.is_negligible(bound)) out.terms_.emplace(e, c);
    return out;
  }

  Homogeneous operator-() const {
    Homogeneous out(n_, d_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend Homogeneous operator+(Homogeneous a, const Homogeneous& b) {
    a.check_same_shape(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend Homogeneous operator-(Homogeneous a, const Homogeneous& b) {
    a.check_same_shape(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend Homogeneous operator*(const Number& s, const Homogeneous& h) {
    Homogeneous out(h.n_, h.d_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : h.terms_) out.add_term(e, s * c);
    return out;
  }
  friend Homogeneous operator*(const Homogeneous& a, const Homogeneous& b) {
    if (a.n_ != b.n_) throw InvalidInput("product of forms in different numbers of variables");
    Homogeneous out(a.n_, a.d_ + b.d_);
    Exponent e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Homogeneous& operator+=(const Homogeneous& b) { return *this = *this + b; }
  Homogeneous& operator-=(const Homogeneous& b) { return *this = *this - b; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  // Same coefficients read in another ring (e.g. a linear dual operator
  // viewed as a function of the coordinates of a linear form).
  template <class Other>
  Homogeneous<Other> as() const {
    Homogeneous<Other> out(n_, d_);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

 private:
  void check_same_shape(const Homogeneous& b) const {
    if (n_ != b.n_ || d_ != b.d_) throw InvalidInput("sum of forms of different shapes");
  }

  int n_ = 1;
  int d_ = 0;
  Terms terms_;
};

using Form = Homogeneous<PrimalTag>;
using DualOp = Homogeneous<DualTag>;
using Constraint = Homogeneous<CoordTag>;

// Coordinates of l = sum_i coords[i] * x_i.
struct LinearForm {
  std::vector<Number> coords;

  int num_vars() const { return static_cast<int>(coords.size()); }
  bool is_exact() const;
  bool is_zero() const;
  BigFloat max_abs(long precision = kMinPrecision) const;
  Form as_form() const { return Form::linear(coords); }
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coords == b.coords; }
};

// op ⌟ f: the dual monomial d^a acts as the iterated partial derivative
// d^|a| / dx^a (no divided-power normalization).
Form contract(const DualOp& op, const Form& f);

// (sum_k l_k x_k)^d by the multinomial expansion.
Form linear_power(const LinearForm& l, int degree);

// op(l): substitutes the i-th dual variable by l_i. Vanishing means [l]
// lies on the hypersurface of op.
Number evaluate_dual(const DualOp& op, const LinearForm& l);

// Partial derivative with respect to variable i.
template <class Tag>
Homogeneous<Tag> partial(const Homogeneous<Tag>& h, int i) {
  if (h.degree() == 0) return Homogeneous<Tag>(h.num_vars(), 0);
  Homogeneous<Tag> out(h.num_vars(), h.degree() - 1);
  for (const auto& [e, c] : h.terms()) {
    int k = e[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    Exponent r = e;
    --r[static_cast<std::size_t>(i)];
    out.add_term(r, c * Number(static_cast<long>(k)));
  }
  return out;
}

// Substitution x_i -> sum_j m(i, j) y_j for an n x k matrix m; the result
// lives in k variables.
template <class Tag>
Homogeneous<Tag> substitute(const Homogeneous<Tag>& h, const Matrix& m) {
  if (static_cast<int>(m.rows()) != h.num_vars()) throw InvalidInput("substitution matrix has the wrong number of rows");
  const int k = static_cast<int>(m.cols());
  Homogeneous<Tag> out(k, h.degree());
  if (h.is_zero()) return out;
  // Powers of the images of each variable, built on demand.
  std::vector<std::vector<Homogeneous<Tag>>> powers(static_cast<std::size_t>(h.num_vars()));
  for (int i = 0; i < h.num_vars(); ++i) {
    Vector row = m.row(static_cast<std::size_t>(i));
    powers[static_cast<std::size_t>(i)].push_back(Homogeneous<Tag>::monomial(Exponent(static_cast<std::size_t>(k), 0), Number(1)));
    powers[static_cast<std::size_t>(i)].push_back(Homogeneous<Tag>::linear(row));
  }
  auto power = [&](int i, int p) -> const Homogeneous<Tag>& {
    auto& v = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(v.size()) <= p) v.push_back(v.back() * v[1]);
    return v[static_cast<std::size_t>(p)];
  };
  for (const auto& [e, c] : h.terms()) {
    Homogeneous<Tag> t = Homogeneous<Tag>::monomial(Exponent(static_cast<std::size_t>(k), 0), c);
    for (int i = 0; i < h.num_vars(); ++i)
      if (e[static_cast<std::size_t>(i)] > 0) t = t * power(i, e[static_cast<std::size_t>(i)]);
    out += t;
  }
  return out;
}

// Invertible substitution x_i -> sum_j m(i, j) x_j. Throws InvalidInput on
// a singular (exact) or non-square matrix.
template <class Tag>
Homogeneous<Tag> change_coordinates(const Homogeneous<Tag>& h, const Matrix& m) {
  if (m.rows() != m.cols() || static_cast<int>(m.rows()) != h.num_vars())
    throw InvalidInput("coordinate change must be a square matrix of the form's size");
  if (m.is_exact() && determinant(m) == 0) throw InvalidInput("coordinate change matrix is singular");
  return substitute(h, m);
}

// Text grammar: terms joined by '+'/'-'; a term is an optional rational
// coefficient (integer or p/q) followed by '*'-separated variables
// <v><index> with optional ^<power>. Whitespace is ignored.
template <class Tag>
Homogeneous<Tag> parse_homogeneous(std::string_view text, int num_vars);

Form parse_form(std::string_view text, int num_vars);
Constraint parse_constraint(std::string_view text, int num_vars);

template <class Tag>
std::string render(const Homogeneous<Tag>& h);

std::string render(const LinearForm& l);

template <class Tag>
std::ostream& operator<<(std::ostream& os, const Homogeneous<Tag>& h) {
  return os << render(h);
}

extern template Form parse_homogeneous<PrimalTag>(std::string_view, int);
extern template DualOp parse_homogeneous<DualTag>(std::string_view, int);
extern template Constraint parse_homogeneous<CoordTag>(std::string_view, int);
extern template std::string render<PrimalTag>(const Form&);
extern template std::string render<DualTag>(const DualOp&);
extern template std::string render<CoordTag>(const Constraint&);

}  // namespace waring
