// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. An optional argument names the CLI binary for the
// end-to-end determinism check.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "waring/bounds.hpp"
#include "waring/decompose.hpp"
#include "waring/errors.hpp"
#include "waring/record.hpp"
#include "waring/verify.hpp"

namespace {

using namespace waring;
using testing::random_invertible;
using testing::random_linear;
using testing::small_rational;
using Clock = std::chrono::steady_clock;

constexpr long kPrec = kDefaultPrecision;

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Form random_rational_form(Rng& rng, int n, int d) {
  Form f(n, d);
  for (const auto& e : monomials(n, d)) f.add_term(e, small_rational(rng));
  return f;
}

ForbiddenSet random_hyperplanes(Rng& rng, int n, int k) {
  ForbiddenSet v(n);
  for (int i = 0; i < k; ++i) v.add(random_linear(rng, n, 4).as_form().as<CoordTag>());
  return v;
}

// V must not contain the whole essential span of f (no decomposition exists then).
bool admissible(const Form& f, const ForbiddenSet& v) {
  EssentialSplit s = essential_split(f, kPrec);
  for (const auto& g : v.constraints())
    if (s.restrict(g).is_zero()) return false;
  return true;
}

// Lower bounds observed against achieved counts, shared by criterion 6.
struct LowerBoundLog {
  int checked = 0;
  int violations = 0;
  void record(const Form& f, const VerifyReport& r) {
    if (!r.pass) return;
    ++checked;
    if (static_cast<std::size_t>(catalecticant_lower_bound(f)) > r.term_count) ++violations;
  }
};

LowerBoundLog lower_bounds;

void report(int index, const std::string& title, const Criterion& c, std::string summary) {
  std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << title << " (" << summary << ")\n";
  for (const auto& n : c.notes) std::cout << "    " << n << "\n";
}

bool criterion_bounds() {
  Criterion c;
  auto start = Clock::now();
  c.require(bbs_bound(3, 3) == 6, "bbs_bound(3,3) != 6");
  c.require(improved_bound(3, 3) == 5, "improved_bound(3,3) != 5");
  c.require(improved_bound(3, 4) == 9, "improved_bound(3,4) != 9");
  c.require(improved_bound(4, 3) == 9, "improved_bound(4,3) != 9");
  c.require(improved_bound(4, 4) == 18, "improved_bound(4,4) != 18");
  for (int n = 3; n <= 12; ++n)
    for (int d = 3; d <= 12; ++d)
      c.require(recursion_bound(n, d, BaseMode::improved) == improved_bound(n, d),
                "recursion differs from closed form at (" + std::to_string(n) + "," + std::to_string(d) + ")");
  double t = seconds_since(start);
  c.require(t < 1.0, "bounds took " + std::to_string(t) + " s");
  report(1, "bound table", c, "100 recursion cells, " + std::to_string(t) + " s");
  return c.ok;
}

bool criterion_binary() {
  Criterion c;
  Rng rng(101);
  double worst = 0;
  int instances = 0;
  while (instances < 200) {
    int d = 2 + static_cast<int>(rng.below(9));
    Form f = random_rational_form(rng, 2, d);
    if (f.is_zero() || essential_variables(f) != 2) continue;
    ForbiddenSet v = random_hyperplanes(rng, 2, static_cast<int>(rng.below(4)));
    ++instances;
    auto start = Clock::now();
    try {
      Decomposition dec = decompose_binary(f, v, {.seed = rng.next(), .precision = kPrec});
      VerifyReport r = check_decomposition(f, dec, v, kPrec);
      double t = seconds_since(start);
      worst = std::max(worst, t);
      c.require(static_cast<int>(dec.size()) <= d, "more than d terms for " + render(f));
      c.require(r.forbidden_violations.empty(), "forbidden term for " + render(f));
      c.require(r.residual <= BigFloat::pow2(-128, kPrec), "residual above 2^-128 for " + render(f));
      c.require(t < 1.0, "instance took " + std::to_string(t) + " s");
      lower_bounds.record(f, r);
    } catch (const Error& e) {
      c.require(false, std::string("error: ") + e.what() + " for " + render(f));
    }
  }
  for (int d = 2; d <= 10; ++d) {
    Form f = Form::monomial({d - 1, 1}, 1);
    auto start = Clock::now();
    Decomposition dec = decompose_binary(f, ForbiddenSet(2));
    worst = std::max(worst, seconds_since(start));
    VerifyReport r = check_decomposition(f, dec, ForbiddenSet(2), kPrec);
    c.require(r.pass && static_cast<int>(dec.size()) == d, "x0^(d-1)*x1 at d=" + std::to_string(d) + " gave " +
                                                                std::to_string(dec.size()) + " terms");
    lower_bounds.record(f, r);
  }
  std::ostringstream s;
  s << instances << " random forms + 9 monomials, worst " << worst << " s";
  report(2, "binary suite", c, s.str());
  return c.ok;
}

bool criterion_quadratic() {
  Criterion c;
  Rng rng(202);
  int instances = 0;
  while (instances < 100) {
    int n = 1 + static_cast<int>(rng.below(8));
    int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    Form f(n, 2);
    for (int i = 0; i < r; ++i) f += Number(rng.nonzero(5)) * linear_power(random_linear(rng, n), 2);
    if (f.is_zero() || essential_variables(f) != r) continue;
    ForbiddenSet v = random_hyperplanes(rng, n, static_cast<int>(rng.below(4)));
    while (!admissible(f, v)) v = random_hyperplanes(rng, n, static_cast<int>(rng.below(4)));
    ++instances;
    try {
      Decomposition dec = decompose_quadratic(f, v, {.seed = rng.next()});
      VerifyReport rep = check_decomposition(f, dec, v, kPrec);
      c.require(static_cast<int>(dec.size()) == r, "rank " + std::to_string(r) + " gave " + std::to_string(dec.size()));
      c.require(dec.exact() && (dec.expand() - f).is_zero(), "not exact for " + render(f));
      c.require(rep.forbidden_violations.empty(), "forbidden term for " + render(f));
      lower_bounds.record(f, rep);
    } catch (const Error& e) {
      c.require(false, std::string("error: ") + e.what() + " for " + render(f));
    }
  }
  report(3, "quadratic suite", c, std::to_string(instances) + " quadratics, n <= 8");
  return c.ok;
}

bool has_point(const std::vector<ProjPoint>& pts, const std::vector<Number>& want) {
  for (const auto& p : pts)
    if (projective_distance(p.coords, want, kPrec) <= BigFloat::pow2(-100, kPrec)) return true;
  return false;
}

bool criterion_ternary() {
  Criterion c;
  Rng rng(303);
  int instances = 0;
  int free_count = 0;
  int bad_count = 0;
  double worst = 0;
  while (instances < 100) {
    Form f = random_rational_form(rng, 3, 3);
    if (f.is_zero() || essential_variables(f) != 3) continue;
    ++instances;
    auto start = Clock::now();
    try {
      bool free = base_points(f, 2, kPrec, rng.next()).empty();
      Decomposition dec = decompose_ternary_cubic(f, ForbiddenSet(3), {.seed = rng.next()});
      VerifyReport r = check_decomposition(f, dec, ForbiddenSet(3), kPrec);
      worst = std::max(worst, seconds_since(start));
      c.require(r.pass, "verification failed for " + render(f));
      c.require(dec.size() <= 5, "more than 5 terms for " + render(f));
      if (free) {
        ++free_count;
        c.require(dec.size() <= 4, "base-point-free cubic gave " + std::to_string(dec.size()) + " terms: " + render(f));
      } else {
        ++bad_count;
      }
      lower_bounds.record(f, r);
    } catch (const Error& e) {
      c.require(false, std::string("error: ") + e.what() + " for " + render(f));
    }
  }
  Form kleppe = parse_form("x0*x1^2 + x1*x2^2", 3);
  Decomposition dec = decompose_ternary_cubic(kleppe, ForbiddenSet(3));
  VerifyReport r = check_decomposition(kleppe, dec, ForbiddenSet(3), kPrec);
  c.require(r.pass && dec.size() == 5, "x0*x1^2 + x1*x2^2 gave " + std::to_string(dec.size()) + " terms");
  lower_bounds.record(kleppe, r);
  auto kp = base_points(kleppe, 2);
  c.require(kp.size() == 1 && has_point(kp, {0, 1, 0}), "base point of x0*x1^2 + x1*x2^2 is not [0:1:0]");
  Form fermat = parse_form("x0^3 + x1^3 + x2^3", 3);
  Decomposition fd = decompose_ternary_cubic(fermat, ForbiddenSet(3));
  VerifyReport fr = check_decomposition(fermat, fd, ForbiddenSet(3), kPrec);
  c.require(fr.pass && fd.size() <= 5, "Fermat cubic gave " + std::to_string(fd.size()) + " terms");
  auto fp = base_points(fermat, 2);
  c.require(fp.size() == 3 && has_point(fp, {1, 0, 0}) && has_point(fp, {0, 1, 0}) && has_point(fp, {0, 0, 1}),
            "Fermat base points are not the coordinate points");
  std::ostringstream s;
  s << instances << " cubics (" << free_count << " base-point-free, " << bad_count << " with base points), worst " << worst
    << " s";
  report(4, "ternary cubic suite", c, s.str());
  return c.ok;
}

bool criterion_inductive() {
  Criterion c;
  Rng rng(404);
  std::ostringstream s;
  int exhausted_total = 0;
  int runs_total = 0;
  for (auto [n, d, bound] : {std::array{4, 3, 9}, std::array{3, 4, 9}, std::array{4, 4, 18}, std::array{5, 3, 14}}) {
    c.require(recursion_bound(n, d, BaseMode::improved) == bound, "unexpected recursion bound");
    int instances = 0;
    int exhausted = 0;
    std::size_t most = 0;
    double worst = 0;
    while (instances < 25) {
      Form f = random_rational_form(rng, n, d);
      if (f.is_zero() || essential_variables(f) != n) continue;
      ForbiddenSet v = random_hyperplanes(rng, n, 2);
      ++instances;
      auto start = Clock::now();
      try {
        Decomposition dec = decompose_inductive(f, v, {.seed = rng.next()});
        VerifyReport r = check_decomposition(f, dec, v, kPrec);
        double t = seconds_since(start);
        worst = std::max(worst, t);
        most = std::max(most, dec.size());
        c.require(r.pass, "verification failed for " + render(f));
        c.require(static_cast<int>(dec.size()) <= bound, std::to_string(dec.size()) + " terms above the bound");
        c.require(t < 30.0, "instance took " + std::to_string(t) + " s");
        lower_bounds.record(f, r);
      } catch (const RetryExhausted&) {
        ++exhausted;
      } catch (const Error& e) {
        c.require(false, std::string("error: ") + e.what() + " for " + render(f));
      }
    }
    exhausted_total += exhausted;
    runs_total += instances;
    c.require(exhausted * 20 < instances, "retry exhaustion rate too high at (" + std::to_string(n) + "," + std::to_string(d) + ")");
    s << "(" << n << "," << d << ") max " << most << "/" << bound << " worst " << worst << " s; ";
  }
  s << exhausted_total << "/" << runs_total << " exhausted";
  report(5, "inductive suite", c, s.str());
  return c.ok;
}

bool criterion_properties() {
  Criterion c;
  Rng rng(505);
  // Derivation rule: d ⌟ l^d = d (d ⌟ l) l^(d-1).
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    int d = 1 + static_cast<int>(rng.below(6));
    LinearForm l = random_linear(rng, n);
    std::vector<Number> a(static_cast<std::size_t>(n));
    for (auto& x : a) x = small_rational(rng);
    DualOp op = DualOp::linear(a);
    Form lhs = contract(op, linear_power(l, d));
    Form rhs = Number(d) * evaluate_dual(op, l) * linear_power(l, d - 1);
    c.require(lhs == rhs, "derivation rule fails");
  }
  // Catalecticant rank symmetry.
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    int d = 2 + static_cast<int>(rng.below(4));
    Form f = random_rational_form(rng, n, d);
    int e = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - 1)));
    c.require(rank(catalecticant(f, e).entries, kPrec) == rank(catalecticant(f, d - e).entries, kPrec),
              "rank symmetry fails for " + render(f));
  }
  // Essential variables under coordinate changes.
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    Form g = random_rational_form(rng, m, 3);
    if (g.is_zero()) continue;
    Matrix embed(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < embed.rows(); ++i) embed(i, i) = 1;
    Form f = substitute(g, embed);
    c.require(essential_variables(f) == essential_variables(change_coordinates(f, random_invertible(rng, n))),
              "essential variables not invariant for " + render(f));
  }
  // Base point <=> power witness on constructed ternary cubics.
  int witnessed = 0;
  for (int trial = 0; trial < 8; ++trial) {
    Matrix m = random_invertible(rng, 3, 2);
    Form normal = trial % 2 == 0 ? parse_form("x0^3 + x1^3 + x1^2*x2 + 2*x2^3", 3) : parse_form("x0*x1^2 + x1*x2^2", 3);
    Form f = change_coordinates(normal, m);
    auto pts = base_points(f, 2, kPrec, rng.next());
    c.require(!pts.empty(), "planted base point missing");
    for (const auto& p : pts) {
      c.require(power_witness(f, p.as_linear_form(), 2).has_value(), "base point without a power witness");
      ++witnessed;
    }
    LinearForm l = random_linear(rng, 3);
    c.require(power_witness(f, l, 2).has_value() == has_point(pts, l.coords), "power witness at a non-base point");
    Form dense = random_rational_form(rng, 3, 3);
    c.require(base_points(dense, 2, kPrec, rng.next()).empty() == !power_witness(dense, random_linear(rng, 3), 2).has_value(),
              "dense cubic disagrees");
  }
  // Planted coefficients come back exactly.
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    int d = 3 + static_cast<int>(rng.below(2));
    int k = 1 + static_cast<int>(rng.below(3));
    std::vector<LinearForm> forms;
    std::vector<Number> coeffs;
    Form f(n, d);
    for (int i = 0; i < n && static_cast<int>(forms.size()) < k; ++i) {
      LinearForm l = random_linear(rng, n);
      l.coords[static_cast<std::size_t>(i)] = 7 + i;  // distinct dominant coordinate keeps the forms apart
      for (int j = 0; j < n; ++j)
        if (j != i) l.coords[static_cast<std::size_t>(j)] = static_cast<long>(rng.below(2));
      Number coeff = Number(rng.nonzero(9));
      forms.push_back(l);
      coeffs.push_back(coeff);
      f += coeff * linear_power(l, d);
    }
    try {
      Fit fit = fit_coefficients(f, forms);
      c.require(fit.coefficients == coeffs, "planted coefficients not recovered");
    } catch (const Error& e) {
      c.require(false, std::string("fit error: ") + e.what());
    }
  }
  c.require(lower_bounds.checked > 0 && lower_bounds.violations == 0,
            std::to_string(lower_bounds.violations) + " lower bounds above achieved counts");
  std::ostringstream s;
  s << witnessed << " base points witnessed, " << lower_bounds.checked << " lower bounds compared";
  report(6, "property suites", c, s.str());
  return c.ok;
}

std::string structured_suite(std::uint64_t seed) {
  Rng rng(seed);
  std::string out;
  for (auto [n, d] : {std::pair{2, 5}, std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 3}}) {
    for (int trial = 0; trial < 3; ++trial) {
      Form f = random_rational_form(rng, n, d);
      ForbiddenSet v = random_hyperplanes(rng, n, 2);
      try {
        Decomposition dec = decompose(f, v, {.seed = rng.next()});
        out += render_record(f, dec, check_decomposition(f, dec, v, kPrec), kPrec);
      } catch (const Error& e) {
        out += std::string("error: ") + e.what() + "\n";
      }
    }
  }
  return out;
}

std::string run_command(const std::string& cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  return out;
}

bool criterion_determinism(const char* cli) {
  Criterion c;
  std::string a = structured_suite(kDefaultSeed);
  std::string b = structured_suite(kDefaultSeed);
  c.require(!a.empty() && a == b, "library suite output differs between runs");
  std::string summary = std::to_string(a.size()) + " bytes of records";
  if (cli) {
    std::string cmd = std::string(cli) + " decompose -n 3 --format structured --seed 7 \"x0*x1^2 + x1*x2^2 - 2*x0^3\" 2>&1";
    std::string x = run_command(cmd);
    std::string y = run_command(cmd);
    c.require(!x.empty() && x == y, "CLI structured output differs between runs");
    std::string bench = std::string(cli) + " bench --max-n 3 --max-d 3 --trials 2 --seed 9 2>&1";
    std::string p = run_command(bench);
    std::string q = run_command(bench);
    c.require(!p.empty() && p == q, "bench output differs between runs");
    summary += ", CLI decompose and bench repeated";
  }
  report(7, "determinism", c, summary);
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  bool ok = true;
  ok &= criterion_bounds();
  ok &= criterion_binary();
  ok &= criterion_quadratic();
  ok &= criterion_ternary();
  ok &= criterion_inductive();
  ok &= criterion_properties();
  ok &= criterion_determinism(cli);
  return ok ? 0 : 1;
}
