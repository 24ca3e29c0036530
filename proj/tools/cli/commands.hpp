#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kpos/sampling.hpp"
#include "kpos/tolerance.hpp"

namespace kpos::cli {

inline constexpr std::size_t kMaxN = 32;
/// C(n,p) bound for derivation checks run by default inside sweeps.
inline constexpr std::uint64_t kSweepDerivationCap = 70;

enum class OutputFormat { json, csv, human };

struct RunConfig {
  std::string command;
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> k_values;  // empty: every level 1..n
  std::vector<std::size_t> p_values;  // empty: command default
  std::size_t count = 100;
  std::uint64_t seed = 1;
  Profile profile = Profile::generic;
  std::string family = "sk";
  OutputFormat format = OutputFormat::json;
  std::string out;                  // empty: stdout
  std::string reports;              // sweep: optional per-report JSON lines
  std::vector<std::string> inputs;  // check: files, "-" for stdin
  Tolerance tol;
  unsigned threads = 1;
  bool all_reports = false;  // conjecture: dump every report, not only candidates
};

/// "5", "3..8", "2,4,6" or combinations like "2,5..7".
std::vector<std::size_t> parse_range(const std::string& text);
OutputFormat format_from_string(const std::string& s);

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_conjecture(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full front end: parses argv (with KPOS_* environment fallbacks),
/// dispatches and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kpos::cli
