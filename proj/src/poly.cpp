#include "waring/poly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace waring {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool MonomialOrder::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da > db;
  return b < a;
}

std::vector<Exponent> monomials(int num_vars, int degree) {
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(num_vars), 0);
  // Depth-first, largest power of the earliest variable first.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == num_vars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  if (num_vars > 0 && degree >= 0) rec(rec, 0, degree);
  return out;
}

std::size_t monomial_count(int num_vars, int degree) {
  return binomial(num_vars + degree - 1, degree).get_ui();
}

bool LinearForm::is_exact() const {
  for (const auto& c : coords)
    if (!c.is_exact()) return false;
  return true;
}

bool LinearForm::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

BigFloat LinearForm::max_abs(long precision) const {
  BigFloat m(precision);
  for (const auto& c : coords) m = max(m, c.abs(precision));
  return m;
}

Form contract(const DualOp& op, const Form& f) {
  if (op.num_vars() != f.num_vars()) throw InvalidInput("contraction of objects in different numbers of variables");
  if (op.degree() > f.degree()) throw InvalidInput("contraction by an operator of higher degree than the form");
  const int n = f.num_vars();
  Form out(n, f.degree() - op.degree());
  Exponent r(static_cast<std::size_t>(n));
  for (const auto& [a, ca] : op.terms())
    for (const auto& [b, cb] : f.terms()) {
      bool divides = true;
      Integer factor = 1;
      for (int i = 0; i < n; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (a[k] > b[k]) {
          divides = false;
          break;
        }
        r[k] = b[k] - a[k];
        // b! / (b-a)!
        for (int t = b[k]; t > r[k]; --t) factor *= t;
      }
      if (divides) out.add_term(r, ca * cb * Number(factor));
    }
  return out;
}

Form linear_power(const LinearForm& l, int degree) {
  if (degree < 0) throw InvalidInput("negative power");
  const int n = l.num_vars();
  Form out(n, degree);
  Integer dfact = factorial(static_cast<unsigned long>(degree));
  for (const auto& e : monomials(n, degree)) {
    Integer denom = 1;
    Number c(1);
    for (int i = 0; i < n; ++i) {
      auto k = static_cast<std::size_t>(i);
      if (e[k] == 0) continue;
      denom *= factorial(static_cast<unsigned long>(e[k]));
      c *= l.coords[k].pow(static_cast<unsigned long>(e[k]));
    }
    out.add_term(e, Number(Rational(dfact, denom)) * c);
  }
  return out;
}

Number evaluate_dual(const DualOp& op, const LinearForm& l) {
  if (op.num_vars() != l.num_vars()) throw InvalidInput("evaluation of a dual operator at a form of another size");
  return op(l.coords);
}

// ------------------------------------------------------------ parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, int num_vars, char var) : text_(text), n_(num_vars), var_(var) {}

  std::vector<std::pair<Exponent, Rational>> parse_terms() {
    std::vector<std::pair<Exponent, Rational>> terms;
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-' but found '") + peek() + "'", pos_);
      }
      first = false;
      auto [e, c] = parse_term();
      terms.emplace_back(std::move(e), sign * c);
    }
    return terms;
  }

 private:
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void advance() { ++pos_; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer parse_integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<Exponent, Rational> parse_term() {
    Exponent e(static_cast<std::size_t>(n_), 0);
    Rational c = 1;
    bool have_coeff = false;
    bool have_var = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_integer();
      Integer den = 1;
      if (peek() == '/') {
        advance();
        std::size_t at = pos_;
        den = parse_integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      c = Rational(num, den);
      c.canonicalize();
      have_coeff = true;
      if (peek() == '*') {
        advance();
        if (peek() != var_) throw ParseError(std::string("expected a variable after '*'"), pos_);
      }
    }
    while (peek() == var_) {
      advance();
      std::size_t at = pos_;
      Integer idx = parse_integer();
      if (idx >= n_) {
        throw InvalidInput("variable " + std::string(1, var_) + idx.get_str() + " out of range for " +
                           std::to_string(n_) + " variables (position " + std::to_string(at) + ")");
      }
      int power = 1;
      if (peek() == '^') {
        advance();
        Integer p = parse_integer();
        if (p > 1000) throw ParseError("exponent too large", pos_);
        power = static_cast<int>(p.get_si());
      }
      e[idx.get_ui()] += power;
      have_var = true;
      if (peek() == '*') {
        advance();
        if (peek() != var_) throw ParseError("expected a variable after '*'", pos_);
      } else {
        break;
      }
    }
    if (!have_coeff && !have_var) {
      if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return {e, c};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  char var_;
};

std::string render_monomial(const Exponent& e, char var) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var + std::to_string(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

template <class Tag>
Homogeneous<Tag> parse_homogeneous(std::string_view text, int num_vars) {
  if (num_vars < 1) throw InvalidInput("number of variables must be positive");
  Parser p(text, num_vars, Tag::kVariable);
  auto terms = p.parse_terms();
  int degree = total_degree(terms.front().first);
  std::vector<std::string> offending;
  for (const auto& [e, c] : terms)
    if (total_degree(e) != degree) {
      std::string m = render_monomial(e, Tag::kVariable);
      offending.push_back(m.empty() ? "1" : m);
    }
  if (!offending.empty()) {
    std::string msg = "polynomial is not homogeneous (degree " + std::to_string(degree) + " expected); offending monomials:";
    for (const auto& m : offending) msg += " " + m;
    throw InvalidInput(msg);
  }
  Homogeneous<Tag> h(num_vars, degree);
  for (const auto& [e, c] : terms) h.add_term(e, Number(c));
  return h;
}

Form parse_form(std::string_view text, int num_vars) { return parse_homogeneous<PrimalTag>(text, num_vars); }

Constraint parse_constraint(std::string_view text, int num_vars) {
  return parse_homogeneous<CoordTag>(text, num_vars);
}

template <class Tag>
std::string render(const Homogeneous<Tag>& h) {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : h.terms()) {
    std::string mono = render_monomial(e, Tag::kVariable);
    std::string coeff;
    bool negative = false;
    if (c.is_exact()) {
      Rational q = c.rational();
      negative = sgn(q) < 0;
      if (negative) q = -q;
      if (q != 1 || mono.empty()) coeff = q.get_str();
    } else {
      coeff = c.to_string();
      if (coeff.front() != '(') coeff = "(" + coeff + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coeff;
    if (!coeff.empty() && !mono.empty()) os << "*";
    os << mono;
  }
  return os.str();
}

std::string render(const LinearForm& l) { return render(l.as_form()); }

template Form parse_homogeneous<PrimalTag>(std::string_view, int);
template DualOp parse_homogeneous<DualTag>(std::string_view, int);
template Constraint parse_homogeneous<CoordTag>(std::string_view, int);
template std::string render<PrimalTag>(const Form&);
template std::string render<DualTag>(const DualOp&);
template std::string render<CoordTag>(const Constraint&);

}  // namespace waring
