#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "kpos/combinatorics.hpp"
#include "kpos/cones.hpp"
#include "kpos/derivation.hpp"
#include "kpos/eigen.hpp"
#include "kpos/error.hpp"
#include "kpos/hyperbolic.hpp"
#include "kpos/inequalities.hpp"
#include "kpos/matrix_io.hpp"
#include "kpos/report.hpp"
#include "kpos/rng.hpp"
#include "parallel.hpp"

namespace kpos::cli {

namespace {

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

std::size_t parse_index(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range value '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("bad range value '" + s + "'");
  return static_cast<std::size_t>(v);
}

/// Output sink: stdout unless --out names a file.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open output file " + path);
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::vector<std::size_t> levels_for(const RunConfig& cfg, std::size_t n) {
  std::vector<std::size_t> out;
  if (cfg.k_values.empty()) {
    for (std::size_t k = 1; k <= n; ++k) out.push_back(k);
  } else {
    for (std::size_t k : cfg.k_values)
      if (k >= 1 && k <= n) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> grades_for(const RunConfig& cfg, std::size_t n, std::uint64_t cap) {
  std::vector<std::size_t> out;
  if (cfg.p_values.empty()) {
    for (std::size_t p = 1; p <= n; ++p)
      if (binomial(n, p) <= cap) out.push_back(p);
  } else {
    for (std::size_t p : cfg.p_values)
      if (p >= 1 && p <= n && binomial(n, p) <= kMaxDerivationDimension) out.push_back(p);
  }
  return out;
}

void write_report(std::ostream& os, const InequalityReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      os << report_to_json(r).dump() << '\n';
      break;
    case OutputFormat::csv:
      os << report_to_csv(r) << '\n';
      break;
    case OutputFormat::human:
      os << report_to_human(r) << "\n\n";
      break;
  }
  os.flush();
}

/// Every applicable statement on one matrix at one level, with the identity
/// as the second argument of the two-matrix statements.
std::vector<InequalityReport> single_matrix_suite(const SymMatrix& a, std::size_t k,
                                                  const Tolerance& tol) {
  const std::size_t n = a.n();
  std::vector<InequalityReport> out;
  out.push_back(hadamard_check(a, k, tol));
  out.push_back(cor1_check(a, k, tol));
  if (k >= 2) out.push_back(inheritance_check(a, k, tol));
  if (k >= 2) out.push_back(expand_lemma_check(a, k, tol));
  if (k >= 2 && k < n) out.push_back(key_lemma_check(a, n - 1, k, tol));
  if (k >= 2 && k < n) out.push_back(step1_check(a, k, tol));
  out.push_back(zeroing_chain_check(a, k, tol));
  const SymMatrix id = SymMatrix::identity(n);
  out.push_back(garding_check(a, id, k, tol));
  if (k >= 2) out.push_back(cor2_check(a, id, k, tol));
  return out;
}

// ---------------------------------------------------------------------------
// Sweep

struct StatusCounts {
  std::size_t holds = 0, equality = 0, violated = 0, inapplicable = 0;
  double min_margin = std::numeric_limits<double>::infinity();

  void add(const InequalityReport& r) {
    switch (r.status) {
      case Status::holds: ++holds; break;
      case Status::equality: ++equality; break;
      case Status::violated_candidate: ++violated; break;
      case Status::inapplicable: ++inapplicable; return;
    }
    min_margin = std::min(min_margin, r.margin);
  }
};

struct TrialOutcome {
  std::vector<InequalityReport> reports;
  std::string failure;  // sampling or numeric error message
};

struct Cell {
  std::size_t n, k;
  std::uint64_t seed;
};

std::uint64_t cell_seed(std::uint64_t master, std::size_t n, std::size_t k, std::size_t p = 0) {
  return derive_stream_seed(master, (static_cast<std::uint64_t>(n) << 32) |
                                        (static_cast<std::uint64_t>(p) << 16) | k);
}

TrialOutcome sweep_trial(const RunConfig& cfg, const Cell& cell, std::size_t trial) {
  TrialOutcome out;
  const std::size_t n = cell.n, k = cell.k;
  try {
    Rng rng = Rng::for_trial(cell.seed, trial);
    const SymMatrix a = sample_k_positive_one(n, k, cfg.profile, rng, cfg.tol);
    const SymMatrix b = sample_k_positive_one(n, k, Profile::generic, rng, cfg.tol);
    auto& rs = out.reports;
    rs.push_back(hadamard_check(a, k, cfg.tol));
    rs.push_back(cor1_check(a, k, cfg.tol));
    if (k >= 2) {
      rs.push_back(inheritance_check(a, k, cfg.tol));
      rs.push_back(expand_lemma_check(border_reduce(a, n - 1).reduced, k, cfg.tol));
      rs.push_back(cor2_check(a, b, k, cfg.tol));
    }
    if (k >= 2 && k < n) {
      rs.push_back(key_lemma_check(a, static_cast<std::size_t>(rng.below(n)), k, cfg.tol));
      rs.push_back(step1_check(a, k, cfg.tol));
    }
    rs.push_back(zeroing_chain_check(a, k, cfg.tol));
    rs.push_back(garding_check(a, b, k, cfg.tol));
    for (std::size_t p : grades_for(cfg, n, kSweepDerivationCap)) {
      rs.push_back(spectrum_transfer_check(a, p));
      if (k <= binomial(n, p)) rs.push_back(pcor_check(a, p, k, cfg.tol));
    }
    for (auto& r : rs) r.provenance = Provenance{cell.seed, trial};
  } catch (const std::exception& e) {
    out.reports.clear();
    out.failure = e.what();
  }
  return out;
}

void write_summary(std::ostream& os, const RunConfig& cfg, const std::string& command,
                   const std::map<std::string, StatusCounts>& counts, std::size_t trials,
                   std::size_t failures, const nlohmann::json& extra = nullptr) {
  auto margin_json = [](double m) -> nlohmann::json {
    return std::isfinite(m) ? nlohmann::json(m) : nlohmann::json(nullptr);
  };
  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::json j;
      j["format_version"] = kFormatVersion;
      j["command"] = command;
      j["seed"] = cfg.seed;
      j["count"] = cfg.count;
      j["profile"] = std::string(to_string(cfg.profile));
      j["trials"] = trials;
      j["failures"] = failures;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [name, c] : counts)
        rows.push_back({{"statement", name},
                        {"holds", c.holds},
                        {"equality", c.equality},
                        {"violated-candidate", c.violated},
                        {"inapplicable", c.inapplicable},
                        {"min_margin", margin_json(c.min_margin)}});
      j["summary"] = std::move(rows);
      if (!extra.is_null()) j["details"] = extra;
      os << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv: {
      os << "statement,holds,equality,violated-candidate,inapplicable,min_margin\n";
      os << std::setprecision(17);
      for (const auto& [name, c] : counts) {
        os << name << ',' << c.holds << ',' << c.equality << ',' << c.violated << ','
           << c.inapplicable << ',';
        if (std::isfinite(c.min_margin)) os << c.min_margin;
        os << '\n';
      }
      break;
    }
    case OutputFormat::human: {
      os << command << ": " << trials << " trials, " << failures << " failures, seed " << cfg.seed
         << "\n";
      os << std::left << std::setw(24) << "statement" << std::right << std::setw(9) << "holds"
         << std::setw(10) << "equality" << std::setw(10) << "violated" << std::setw(13)
         << "inapplicable" << "  min margin\n";
      for (const auto& [name, c] : counts) {
        os << std::left << std::setw(24) << name << std::right << std::setw(9) << c.holds
           << std::setw(10) << c.equality << std::setw(10) << c.violated << std::setw(13)
           << c.inapplicable << "  ";
        if (std::isfinite(c.min_margin)) os << std::setprecision(6) << c.min_margin;
        else os << "-";
        os << "\n";
        if (auto t = statement_title(name); t != name) os << "    " << t << "\n";
      }
      break;
    }
  }
  os.flush();
}

// ---------------------------------------------------------------------------
// Conjecture

struct FamilyCell {
  HyperbolicPolynomial poly;
  std::size_t n;
  std::size_t level;  // k for sk/detminor, p for product
  std::uint64_t seed;
  std::string family;
};

/// Spectrum inside Gamma(P) conjugated by a Haar rotation.
SymMatrix sample_for_family(const FamilyCell& cell, Rng& rng, const RunConfig& cfg) {
  if (cell.family == "sk" || cell.family == "detminor")
    return sample_k_positive_one(cell.n, cell.level, cfg.profile, rng, cfg.tol);
  const std::size_t p = cell.level;
  const ConeMarginFn margin = [p](std::span<const double> x) {
    const auto sums = lambda_brackets(x, p);
    double lo = std::numeric_limits<double>::infinity();
    double big = 0.0;
    for (double s : sums) {
      lo = std::min(lo, s);
      big = std::max(big, std::abs(s));
    }
    return lo / (1.0 + big);
  };
  const auto lam = sample_cone_point(cell.n, rng, margin, cfg.tol);
  return conjugate(SymMatrix::diagonal(lam), haar_orthogonal(cell.n, rng));
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_index(part));
      continue;
    }
    const std::size_t lo = parse_index(part.substr(0, dots));
    const std::size_t hi = parse_index(part.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + part + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty range '" + text + "'");
  return out;
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "human") return OutputFormat::human;
  throw std::invalid_argument("unknown format '" + s + "'");
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<SymMatrix> matrices;
  try {
    const auto inputs = cfg.inputs.empty() ? std::vector<std::string>{"-"} : cfg.inputs;
    for (const auto& path : inputs) {
      try {
        auto ms = path == "-" ? read_matrices(std::cin) : read_matrix_file(path);
        matrices.insert(matrices.end(), ms.begin(), ms.end());
      } catch (const ParseError& e) {
        err << "kpos: " << (path == "-" ? "<stdin>" : path) << ": " << e.what() << "\n";
        return kExitError;
      }
    }
  } catch (const std::exception& e) {
    err << "kpos: " << e.what() << "\n";
    return kExitError;
  }

  OutputTarget target(cfg.out, out);
  std::ostream& os = *target;
  if (cfg.format == OutputFormat::csv) os << report_csv_header() << '\n';
  bool violated = false;
  try {
    for (std::size_t m = 0; m < matrices.size(); ++m) {
      const SymMatrix& a = matrices[m];
      if (a.n() > kMaxN) {
        err << "kpos: matrix " << m + 1 << ": dimension " << a.n() << " exceeds " << kMaxN << "\n";
        return kExitError;
      }
      std::vector<InequalityReport> reports;
      for (std::size_t k : levels_for(cfg, a.n())) {
        auto suite = single_matrix_suite(a, k, cfg.tol);
        reports.insert(reports.end(), suite.begin(), suite.end());
      }
      for (std::size_t p : grades_for(cfg, a.n(), kMaxDerivationDimension)) {
        reports.push_back(spectrum_transfer_check(a, p));
        for (std::size_t k : levels_for(cfg, binomial(a.n(), p)))
          if (!cfg.k_values.empty() || k <= a.n()) reports.push_back(pcor_check(a, p, k, cfg.tol));
      }
      for (auto& r : reports) {
        r.provenance = Provenance{0, m};
        violated = violated || r.status == Status::violated_candidate;
        write_report(os, r, cfg.format);
      }
    }
  } catch (const std::exception& e) {
    err << "kpos: " << e.what() << "\n";
    return kExitError;
  }
  return violated ? kExitViolation : kExitClean;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto ns = cfg.n_values.empty() ? std::vector<std::size_t>{3, 4, 5, 6, 7, 8} : cfg.n_values;
  for (std::size_t n : ns)
    if (n < 2 || n > kMaxN) {
      err << "kpos: n must lie in 2.." << kMaxN << "\n";
      return kExitError;
    }

  std::unique_ptr<std::ofstream> report_file;
  if (!cfg.reports.empty()) {
    report_file = std::make_unique<std::ofstream>(cfg.reports);
    if (!*report_file) {
      err << "kpos: cannot open " << cfg.reports << "\n";
      return kExitError;
    }
  }

  std::vector<Cell> cells;
  for (std::size_t n : ns)
    for (std::size_t k : levels_for(cfg, n)) {
      if (cfg.profile == Profile::strict && k >= n) continue;
      cells.push_back({n, k, cell_seed(cfg.seed, n, k)});
    }

  std::map<std::string, StatusCounts> counts;
  std::size_t trials = 0, failures = 0;
  bool violated = false;
  nlohmann::json failure_log = nlohmann::json::array();
  const std::size_t total = cells.size() * cfg.count;
  try {
    ordered_map(
        total, cfg.threads,
        [&](std::size_t i) { return sweep_trial(cfg, cells[i / cfg.count], i % cfg.count); },
        [&](std::size_t i, TrialOutcome t) {
          ++trials;
          if (!t.failure.empty()) {
            ++failures;
            const Cell& c = cells[i / cfg.count];
            failure_log.push_back(
                {{"n", c.n}, {"k", c.k}, {"trial", i % cfg.count}, {"error", t.failure}});
            return;
          }
          for (const auto& r : t.reports) {
            counts[r.statement].add(r);
            violated = violated || r.status == Status::violated_candidate;
            if (report_file) *report_file << report_to_json(r).dump() << '\n';
          }
          if (report_file) report_file->flush();
        });
  } catch (const std::exception& e) {
    err << "kpos: " << e.what() << "\n";
    return kExitError;
  }

  OutputTarget target(cfg.out, out);
  nlohmann::json extra = nullptr;
  if (!failure_log.empty()) extra = {{"failures", failure_log}};
  write_summary(*target, cfg, "sweep", counts, trials, failures, extra);
  return violated ? kExitViolation : kExitClean;
}

int cmd_conjecture(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto ns = cfg.n_values.empty() ? std::vector<std::size_t>{3, 4, 5} : cfg.n_values;
  std::vector<FamilyCell> cells;
  try {
    for (std::size_t n : ns) {
      if (n < 1 || n > kMaxN) throw std::invalid_argument("n must lie in 1..32");
      if (cfg.family == "sk" || cfg.family == "detminor") {
        for (std::size_t k : levels_for(cfg, n)) {
          auto poly = cfg.family == "sk" ? make_sk_poly(n, k) : make_diagonal_detminor_poly(n, k);
          cells.push_back({std::move(poly), n, k, cell_seed(cfg.seed, n, k), cfg.family});
        }
      } else if (cfg.family == "product") {
        for (std::size_t p : grades_for(cfg, n, kSweepDerivationCap))
          cells.push_back({make_product_poly(n, p), n, p, cell_seed(cfg.seed, n, 0, p), cfg.family});
      } else {
        throw std::invalid_argument("unknown family '" + cfg.family + "' (sk, detminor, product)");
      }
    }
  } catch (const std::exception& e) {
    err << "kpos: " << e.what() << "\n";
    return kExitError;
  }

  OutputTarget target(cfg.out, out);
  std::ostream& os = *target;
  std::map<std::string, StatusCounts> counts;
  std::size_t trials = 0, failures = 0, candidates = 0;
  nlohmann::json per_poly = nlohmann::json::array();

  for (const auto& cell : cells) {
    StatusCounts cc;
    if (!sampled_symmetric(cell.poly, ConjectureOptions{}.symmetry_seed)) {
      err << "kpos: " << cell.poly.tag << " failed the symmetry sample; skipped\n";
      continue;
    }
    ConjectureOptions opts;
    opts.verify_symmetry = false;
    opts.primary_eps = cfg.tol.rel;
    opts.tight_eps = std::min(cfg.tol.rel, 1e-11);
    struct Outcome {
      std::optional<SymMatrix> a;
      InequalityReport r;
      std::string failure;
    };
    ordered_map(
        cfg.count, cfg.threads,
        [&](std::size_t trial) {
          Outcome o;
          try {
            Rng rng = Rng::for_trial(cell.seed, trial);
            o.a = sample_for_family(cell, rng, cfg);
            o.r = conjecture_check(cell.poly, *o.a, opts);
            if (cell.family == "product") o.r.p = cell.level;
            o.r.provenance = Provenance{cell.seed, trial};
          } catch (const std::exception& e) {
            o.failure = e.what();
          }
          return o;
        },
        [&](std::size_t, Outcome o) {
          ++trials;
          if (!o.failure.empty()) {
            ++failures;
            return;
          }
          cc.add(o.r);
          counts[o.r.statement].add(o.r);
          const bool is_candidate = o.r.status == Status::violated_candidate;
          candidates += is_candidate;
          if (!(is_candidate || cfg.all_reports)) return;
          if (cfg.format == OutputFormat::json) {
            nlohmann::json j;
            j["format_version"] = kFormatVersion;
            j["kind"] = is_candidate ? "candidate" : "report";
            j["polynomial"] = cell.poly.tag;
            j["matrix"] = matrix_to_json(*o.a);
            j["report"] = report_to_json(o.r);
            os << j.dump() << '\n';
          } else {
            write_report(os, o.r, cfg.format);
          }
          os.flush();
        });
    per_poly.push_back({{"polynomial", cell.poly.tag},
                        {"holds", cc.holds},
                        {"equality", cc.equality},
                        {"violated-candidate", cc.violated},
                        {"inapplicable", cc.inapplicable}});
  }

  nlohmann::json extra = {{"family", cfg.family}, {"candidates", candidates}, {"polynomials", per_poly}};
  if (cfg.format == OutputFormat::json) {
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "summary";
    j["family"] = cfg.family;
    j["seed"] = cfg.seed;
    j["trials"] = trials;
    j["failures"] = failures;
    j["candidates"] = candidates;
    j["polynomials"] = per_poly;
    j["note"] = "evidence only; a candidate is not a confirmed counterexample";
    os << j.dump() << '\n';
  } else {
    write_summary(os, cfg, "conjecture(" + cfg.family + ")", counts, trials, failures, extra);
  }
  return kExitClean;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n_values.size() != 1 || cfg.k_values.size() != 1) {
    err << "kpos: sample needs a single --n and --k\n";
    return kExitError;
  }
  SampleSpec spec{cfg.n_values[0], cfg.k_values[0], cfg.count, cfg.seed, cfg.profile};
  try {
    spec.validate();
  } catch (const std::exception& e) {
    err << "kpos: " << e.what() << "\n";
    return kExitError;
  }
  OutputTarget target(cfg.out, out);
  std::ostream& os = *target;
  try {
    ordered_map(
        spec.count, cfg.threads,
        [&](std::size_t i) {
          Rng rng = Rng::for_trial(spec.master_seed, i);
          return sample_k_positive_one(spec.n, spec.k, spec.profile, rng, cfg.tol);
        },
        [&](std::size_t i, SymMatrix a) {
          if (cfg.format == OutputFormat::json)
            os << sample_to_json(a, spec, i).dump() << '\n';
          else
            os << "# seed " << spec.master_seed << " trial " << i << "\n" << matrix_to_text(a) << "\n";
          os.flush();
        });
  } catch (const std::exception& e) {
    err << "kpos: " << e.what() << "\n";
    return kExitError;
  }
  return kExitClean;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"kpos: Hadamard-type inequalities for k-positive matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  RunConfig cfg;
  std::string n_text, k_text, p_text, profile_text = "generic", format_text = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "dimension(s), e.g. 5 or 3..8")->envname("KPOS_N");
    sub->add_option("--k", k_text, "level(s), default every level 1..n")->envname("KPOS_K");
    sub->add_option("--p", p_text, "grade(s) of the derivation operator")->envname("KPOS_P");
    sub->add_option("--count", cfg.count, "samples per (n, k) cell")->envname("KPOS_COUNT");
    sub->add_option("--seed", cfg.seed, "master seed")->envname("KPOS_SEED");
    sub->add_option("--profile", profile_text,
                    "generic | strict | near-boundary | near-diagonal")
        ->envname("KPOS_PROFILE");
    sub->add_option("--family", cfg.family, "sk | detminor | product")->envname("KPOS_FAMILY");
    sub->add_option("--format", format_text, "json | csv | human")->envname("KPOS_FORMAT");
    sub->add_option("--out", cfg.out, "output file (default stdout)")->envname("KPOS_OUT");
    sub->add_option("--tol-rel", cfg.tol.rel, "relative tolerance")->envname("KPOS_TOL_REL");
    sub->add_option("--tol-abs", cfg.tol.abs, "absolute tolerance")->envname("KPOS_TOL_ABS");
    sub->add_option("--threads", cfg.threads, "worker threads")->envname("KPOS_THREADS");
  };

  auto* check = app.add_subcommand("check", "run every verifier on matrices read from files");
  add_common(check);
  check->add_option("inputs", cfg.inputs, "matrix files (text or JSON); '-' for stdin");
  auto* sweep = app.add_subcommand("sweep", "randomized verification over sampled matrices");
  add_common(sweep);
  sweep->add_option("--reports", cfg.reports, "also write every report as JSON lines");
  auto* conj = app.add_subcommand("conjecture", "search for hyperbolic Hadamard candidates");
  add_common(conj);
  conj->add_flag("--all", cfg.all_reports, "dump every report, not only candidates");
  auto* sample = app.add_subcommand("sample", "emit sampled k-positive matrices");
  add_common(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForVersion& e) {
    out << "0.1.0\n";
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitClean;
    }
    err << "kpos: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (!n_text.empty()) cfg.n_values = parse_range(n_text);
    if (!k_text.empty()) cfg.k_values = parse_range(k_text);
    if (!p_text.empty()) cfg.p_values = parse_range(p_text);
    cfg.profile = profile_from_string(profile_text);
    cfg.format = format_from_string(format_text);
    if (!(cfg.tol.rel > 0.0) || !(cfg.tol.abs > 0.0))
      throw std::invalid_argument("tolerances must be positive");
    for (std::size_t n : cfg.n_values)
      if (n > kMaxN) throw std::invalid_argument("n exceeds " + std::to_string(kMaxN));
  } catch (const std::exception& e) {
    err << "kpos: " << e.what() << "\n";
    return kExitError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  try {
    if (chosen == check) return cmd_check(cfg, out, err);
    if (chosen == sweep) return cmd_sweep(cfg, out, err);
    if (chosen == conj) return cmd_conjecture(cfg, out, err);
    return cmd_sample(cfg, out, err);
  } catch (const std::exception& e) {
    err << "kpos: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace kpos::cli
