// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 invalid input, 3 retry budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "waring/apolarity.hpp"
#include "waring/bounds.hpp"
#include "waring/decompose.hpp"
#include "waring/errors.hpp"
#include "waring/record.hpp"
#include "waring/verify.hpp"

namespace {

using namespace waring;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitRetry = 3;

struct RunConfig {
  int num_vars = 0;
  std::string form_text;
  std::string form_file;
  std::string avoid_file;
  std::uint64_t seed = kDefaultSeed;
  long precision = kDefaultPrecision;
  int max_retries = 64;
  bool absorb = false;
  std::string format = "human";

  // Subcommand arguments.
  int e = 1;
  int bound_n = 0;
  int bound_d = 0;
  std::string record_file;
  int max_n = 4;
  int max_d = 4;
  int trials = 5;

  bool structured() const { return format == "structured"; }
  DecomposeOptions options() const { return {.seed = seed, .precision = precision, .max_retries = max_retries}; }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int require_vars(const RunConfig& cfg) {
  if (cfg.num_vars < 1) throw InvalidInput("the number of variables (-n) must be at least 1");
  return cfg.num_vars;
}

Form read_form(const RunConfig& cfg) {
  if (!cfg.form_text.empty() && !cfg.form_file.empty()) throw InvalidInput("give the form either inline or with --form-file");
  if (cfg.form_text.empty() && cfg.form_file.empty()) throw InvalidInput("no form given");
  std::string text = cfg.form_text.empty() ? read_file(cfg.form_file) : cfg.form_text;
  return parse_form(text, require_vars(cfg));
}

ForbiddenSet read_avoid(const RunConfig& cfg, int n) {
  if (cfg.avoid_file.empty()) return ForbiddenSet(n);
  return ForbiddenSet::parse(read_file(cfg.avoid_file), n);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_human(const Form& f, const Decomposition& dec, const VerifyReport& r) {
  std::cout << "form: " << render(f) << "\n";
  std::cout << "terms: " << dec.size() << " (bound " << r.bound_value.get_str() << ", "
            << (r.pass ? "verified" : "NOT verified") << ", " << (dec.exact() ? "exact" : "approximate") << ")\n";
  for (const auto& t : dec.terms)
    std::cout << "  " << t.coefficient.to_string(20) << " * (" << render(LinearForm{t.form.coords}) << ")^" << dec.degree << "\n";
  char residual[32];
  std::snprintf(residual, sizeof residual, "2^%.1f", r.residual.log2_abs());
  std::cout << "residual: " << (r.residual.is_zero() ? "0" : residual) << "\n";
  if (!r.forbidden_violations.empty()) {
    std::cout << "forbidden terms:";
    for (auto i : r.forbidden_violations) std::cout << " " << i;
    std::cout << "\n";
  }
  for (const auto& line : dec.trace) std::cout << "trace: " << line << "\n";
}

int cmd_decompose(const RunConfig& cfg) {
  Form f = read_form(cfg);
  ForbiddenSet v = read_avoid(cfg, f.num_vars());
  Decomposition dec = decompose(f, v, cfg.options());
  if (cfg.absorb) dec = absorb_coefficients(dec, cfg.precision);
  VerifyReport r = check_decomposition(f, dec, v, cfg.precision);
  if (cfg.structured())
    std::cout << render_record(f, dec, r, cfg.precision);
  else
    print_human(f, dec, r);
  return r.pass ? kExitOk : kExitVerify;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.record_file.empty()) throw InvalidInput("verify needs --record");
  Record rec = parse_record(read_file(cfg.record_file));
  Form f = rec.form;
  if (!cfg.form_text.empty() || !cfg.form_file.empty()) {
    RunConfig with_n = cfg;
    with_n.num_vars = cfg.num_vars > 0 ? cfg.num_vars : rec.decomposition.num_vars;
    f = read_form(with_n);
  }
  ForbiddenSet v = read_avoid(cfg, f.num_vars());
  VerifyReport r = check_decomposition(f, rec.decomposition, v, rec.precision);
  if (cfg.structured()) {
    json out;
    out["verified"] = r.pass;
    out["exact"] = r.exact;
    out["term_count"] = r.term_count;
    out["bound"] = r.bound_value.get_str();
    char log2[32];
    std::snprintf(log2, sizeof log2, "%.3f", r.residual.log2_abs());
    out["residual_log2"] = r.residual.is_zero() ? std::string("-inf") : std::string(log2);
    out["forbidden_violations"] = r.forbidden_violations;
    print_json(out);
  } else {
    print_human(f, rec.decomposition, r);
  }
  return r.pass ? kExitOk : kExitVerify;
}

int cmd_bounds(const RunConfig& cfg) {
  const int n = cfg.bound_n;
  const int d = cfg.bound_d;
  std::string bbs = bbs_bound(n, d).get_str();
  std::string improved = n >= 3 && d >= 3 ? improved_bound(n, d).get_str() : std::string("n/a");
  std::string rec_improved = recursion_bound(n, d, BaseMode::improved).get_str();
  std::string rec_bbs = recursion_bound(n, d, BaseMode::bbs).get_str();
  if (cfg.structured()) {
    print_json({{"n", n}, {"d", d}, {"bbs", bbs}, {"improved", improved}, {"recursion_improved", rec_improved},
                {"recursion_bbs", rec_bbs}});
  } else {
    std::cout << "bbs " << bbs << "\nimproved " << improved << "\nrecursion (improved base) " << rec_improved
              << "\nrecursion (bbs base) " << rec_bbs << "\n";
  }
  return kExitOk;
}

int cmd_catalecticant(const RunConfig& cfg) {
  Form f = read_form(cfg);
  CatMatrix cat = catalecticant(f, cfg.e);
  std::size_t rk = rank(cat.entries, cfg.precision);
  auto row_label = [](const Exponent& ex) { return render(DualOp::monomial(ex, 1)); };
  auto col_label = [](const Exponent& ex) { return render(Form::monomial(ex, 1)); };
  if (cfg.structured()) {
    json rows = json::array();
    for (std::size_t r = 0; r < cat.entries.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < cat.entries.cols(); ++c) row.push_back(cat.entries(r, c).to_string(40));
      rows.push_back(row);
    }
    json rl = json::array(), cl = json::array();
    for (const auto& ex : cat.row_labels) rl.push_back(row_label(ex));
    for (const auto& ex : cat.col_labels) cl.push_back(col_label(ex));
    print_json({{"e", cfg.e}, {"rows", rl}, {"cols", cl}, {"matrix", rows}, {"rank", rk}});
  } else {
    std::cout << "catalecticant e=" << cfg.e << " (" << cat.entries.rows() << "x" << cat.entries.cols() << "), rank " << rk
              << "\n";
    for (std::size_t r = 0; r < cat.entries.rows(); ++r) {
      std::cout << "  " << row_label(cat.row_labels[r]) << ":";
      for (std::size_t c = 0; c < cat.entries.cols(); ++c) std::cout << " " << cat.entries(r, c).to_string(12);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_apolar(const RunConfig& cfg) {
  Form f = read_form(cfg);
  std::vector<DualOp> basis = apolar_component(f, cfg.e, cfg.precision);
  if (cfg.structured()) {
    json b = json::array();
    for (const auto& op : basis) b.push_back(render(op));
    print_json({{"e", cfg.e}, {"dimension", basis.size()}, {"basis", b}});
  } else {
    std::cout << "dim (F^perp)_" << cfg.e << " = " << basis.size() << "\n";
    for (const auto& op : basis) std::cout << "  " << render(op) << "\n";
  }
  return kExitOk;
}

int cmd_essential(const RunConfig& cfg) {
  Form f = read_form(cfg);
  EssentialSplit s = essential_split(f, cfg.precision);
  json m = json::array();
  for (std::size_t r = 0; r < s.change.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < s.change.cols(); ++c) row.push_back(s.change(r, c).to_string(40));
    m.push_back(row);
  }
  if (cfg.structured()) {
    print_json({{"essential", s.essential}, {"change", m}, {"restricted", render(s.restricted)}});
  } else {
    std::cout << "essential variables: " << s.essential << "\nchange of coordinates x = M y:\n";
    for (std::size_t r = 0; r < s.change.rows(); ++r) {
      std::cout << " ";
      for (std::size_t c = 0; c < s.change.cols(); ++c) std::cout << " " << s.change(r, c).to_string(12);
      std::cout << "\n";
    }
    std::cout << "restricted form: " << render(s.restricted) << "\n";
  }
  return kExitOk;
}

int cmd_base_points(const RunConfig& cfg) {
  Form f = read_form(cfg);
  std::vector<ProjPoint> pts = base_points(f, cfg.e, cfg.precision, cfg.seed);
  json list = json::array();
  for (const auto& p : pts) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(c.to_string(20));
    list.push_back(coords);
  }
  if (cfg.structured()) {
    print_json({{"e", cfg.e}, {"count", pts.size()}, {"points", list}});
  } else {
    std::cout << pts.size() << " base point(s) of (F^perp)_" << cfg.e << "\n";
    for (const auto& p : pts) {
      std::cout << "  [";
      for (std::size_t i = 0; i < p.coords.size(); ++i) std::cout << (i ? " : " : "") << p.coords[i].to_string(20);
      std::cout << "]\n";
    }
  }
  return kExitOk;
}

// splitmix64 finalizer; the per-cell seed is seed ^ cell_hash(n, d, trial).
std::uint64_t cell_hash(int n, int d, int trial) {
  std::uint64_t z = (static_cast<std::uint64_t>(n) << 42) ^ (static_cast<std::uint64_t>(d) << 21) ^
                    static_cast<std::uint64_t>(trial);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int cmd_bench(const RunConfig& cfg) {
  if (cfg.max_n < 1 || cfg.max_d < 1 || cfg.trials < 1) throw InvalidInput("bench needs positive --max-n, --max-d and --trials");
  std::cout << "n,d,trials,max_terms,mean_terms,bound,failures\n";
  for (int n = 1; n <= cfg.max_n; ++n) {
    for (int d = 1; d <= cfg.max_d; ++d) {
      std::size_t most = 0;
      std::size_t total = 0;
      int ok = 0;
      int failures = 0;
      for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(cfg.seed ^ cell_hash(n, d, trial));
        Form f(n, d);
        while (f.is_zero())
          for (const auto& ex : monomials(n, d)) f.add_term(ex, Number(rng.uniform(9)));
        try {
          DecomposeOptions opt = cfg.options();
          opt.seed = rng.next();
          Decomposition dec = decompose(f, ForbiddenSet(n), opt);
          VerifyReport r = check_decomposition(f, dec, ForbiddenSet(n), cfg.precision);
          if (!r.pass) {
            ++failures;
            continue;
          }
          ++ok;
          total += dec.size();
          most = std::max(most, dec.size());
        } catch (const Error&) {
          ++failures;
        }
      }
      char mean[32];
      std::snprintf(mean, sizeof mean, "%.3f", ok ? static_cast<double>(total) / ok : 0.0);
      std::cout << n << "," << d << "," << cfg.trials << "," << most << "," << mean << ","
                << recursion_bound(n, d, BaseMode::improved).get_str() << "," << failures << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waring decompositions avoiding a forbidden set of linear forms"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("-n,--num-vars", cfg.num_vars, "number of variables x0..x{n-1}");
  app.add_option("--form-file", cfg.form_file, "read the form from a file ('-' for stdin)");
  app.add_option("--avoid", cfg.avoid_file, "forbidden set file, one constraint in l0..l{n-1} per line");
  app.add_option("--seed", cfg.seed, "random seed")->default_val(kDefaultSeed);
  app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(kMinPrecision, 1L << 20))->default_val(kDefaultPrecision);
  app.add_option("--max-retries", cfg.max_retries, "retry budget per genericity choice")->check(CLI::PositiveNumber)->default_val(64);
  app.add_flag("--absorb", cfg.absorb, "fold coefficients into the linear forms");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"human", "structured"}))->default_val("human");

  auto* dec = app.add_subcommand("decompose", "decompose a form and verify the result");
  dec->add_option("form", cfg.form_text, "the form, e.g. \"x0*x1^2 + x1*x2^2\"");
  auto* ver = app.add_subcommand("verify", "re-check a stored structured record");
  ver->add_option("--record", cfg.record_file, "record written by 'decompose --format structured' ('-' for stdin)")->required();
  ver->add_option("form", cfg.form_text, "form to check against (defaults to the record's form)");
  auto* bnd = app.add_subcommand("bounds", "print the bounds for n variables and degree d");
  bnd->add_option("n", cfg.bound_n)->required()->check(CLI::PositiveNumber);
  bnd->add_option("d", cfg.bound_d)->required()->check(CLI::PositiveNumber);
  auto* cat = app.add_subcommand("catalecticant", "print a catalecticant matrix and its rank");
  cat->add_option("e", cfg.e)->required();
  cat->add_option("form", cfg.form_text);
  auto* apo = app.add_subcommand("apolar", "print a basis of (F^perp)_e");
  apo->add_option("e", cfg.e)->required();
  apo->add_option("form", cfg.form_text);
  auto* ess = app.add_subcommand("essential", "count essential variables and print the splitting change");
  ess->add_option("form", cfg.form_text);
  auto* bp = app.add_subcommand("base-points", "base points of (F^perp)_e for n <= 3");
  bp->add_option("e", cfg.e)->required();
  bp->add_option("form", cfg.form_text);
  auto* bench = app.add_subcommand("bench", "sweep an (n, d) grid and print CSV");
  bench->add_option("--max-n", cfg.max_n, "largest number of variables")->default_val(4);
  bench->add_option("--max-d", cfg.max_d, "largest degree")->default_val(4);
  bench->add_option("--trials", cfg.trials, "random forms per cell")->default_val(5);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (dec->parsed()) return cmd_decompose(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    if (bnd->parsed()) return cmd_bounds(cfg);
    if (cat->parsed()) return cmd_catalecticant(cfg);
    if (apo->parsed()) return cmd_apolar(cfg);
    if (ess->parsed()) return cmd_essential(cfg);
    if (bp->parsed()) return cmd_base_points(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const RetryExhausted& e) {
    std::cerr << "retry budget exhausted: " << e.what() << "\n";
    for (const auto& line : e.trace()) std::cerr << "  " << line << "\n";
    return kExitRetry;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitInput;
}
