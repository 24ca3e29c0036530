#include "kpos/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "kpos/error.hpp"

namespace kpos {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::equality: return "equality";
    case Status::violated_candidate: return "violated-candidate";
    case Status::inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

Status status_from_string(std::string_view s) {
  for (Status st : {Status::holds, Status::equality, Status::violated_candidate, Status::inapplicable})
    if (to_string(st) == s) return st;
  throw DomainError("unknown status '" + std::string(s) + "'");
}

std::optional<double> InequalityReport::witness_value(std::string_view key) const {
  for (const auto& [k, v] : witness)
    if (k == key) return v;
  return std::nullopt;
}

Status classify(double margin, double eps) {
  if (!std::isfinite(margin)) return Status::violated_candidate;
  if (margin > eps) return Status::holds;
  if (margin < -eps) return Status::violated_candidate;
  return Status::equality;
}

InequalityReport make_report(std::string statement, std::size_t n, std::size_t k, double lhs,
                             double rhs, double scale, const Tolerance& tol) {
  InequalityReport r;
  r.statement = std::move(statement);
  r.n = n;
  r.k = k;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = (lhs - rhs) / std::max(scale, tol.abs);
  r.tolerance_level = tol.rel;
  r.status = classify(r.margin, tol.rel);
  return r;
}

InequalityReport make_identity_report(std::string statement, std::size_t n, std::size_t k,
                                      double lhs, double rhs, double scale, double eps) {
  InequalityReport r;
  r.statement = std::move(statement);
  r.n = n;
  r.k = k;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = -std::abs(lhs - rhs) / std::max(scale, default_tolerance.abs);
  r.tolerance_level = eps;
  r.status = classify(r.margin, eps);
  return r;
}

InequalityReport make_inapplicable(std::string statement, std::size_t n, std::size_t k,
                                   std::string reason) {
  InequalityReport r;
  r.statement = std::move(statement);
  r.n = n;
  r.k = k;
  r.status = Status::inapplicable;
  r.note = std::move(reason);
  return r;
}

std::string_view statement_title(std::string_view statement) {
  struct Entry {
    std::string_view tag, title;
  };
  static constexpr Entry kTitles[] = {
      {"hadamard_type", "Hadamard-type inequality S_k(diag A) >= S_k(A) for k-positive A"},
      {"diagonal_identity", "S_1/S_2 diagonal identities for symmetric A"},
      {"diagonal_cone", "diag(A) is k-positive and dominates S_k(A)"},
      {"bordered_expansion", "S_k expansion of a matrix whose leading block is diagonal"},
      {"deletion_bound", "S_k(A) <= S_k(A[j^c]) + a_jj S_{k-1}(A[j^c])"},
      {"border_zeroing", "zeroing row/column j keeps k-positivity and raises S_m"},
      {"zeroing_chain", "iterated border zeroing is monotone and ends at diag(A)"},
      {"submatrix_inheritance", "every A[i^c] of a k-positive A is (k-1)-positive"},
      {"garding", "Garding inequality sum d_ij S_k^ij(A) >= k S_k(A)^((k-1)/k) S_k(D)^(1/k)"},
      {"weighted_deletion", "sum b_ii S_{k-1}(A[i^c]) >= k S_k(A)^((k-1)/k) S_k(B)^(1/k)"},
      {"spectrum_transfer", "spectrum of the derivation operator equals the p-fold sums"},
      {"pair_sum_hadamard", "p-fold diagonal sums dominate p-fold eigenvalue sums"},
      {"hyperbolic_hadamard", "P(diag A) >= P(lambda(A)) for a symmetric hyperbolic P"},
      {"cone_convexity", "Garding cone is closed under convex combinations"},
  };
  for (const auto& e : kTitles)
    if (e.tag == statement) return e.title;
  return statement;
}

nlohmann::json report_to_json(const InequalityReport& r) {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["statement"] = r.statement;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.p) j["p"] = *r.p;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["status"] = std::string(to_string(r.status));
  j["tolerance_level"] = r.tolerance_level;
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [k, v] : r.witness) w[k] = v;
  if (!r.note.empty()) w["note"] = r.note;
  j["witness"] = std::move(w);
  if (r.provenance)
    j["seed_provenance"] = {{"seed", r.provenance->seed}, {"trial", r.provenance->trial}};
  else
    j["seed_provenance"] = nullptr;
  return j;
}

InequalityReport report_from_json(const nlohmann::json& j) {
  InequalityReport r;
  r.statement = j.at("statement").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<std::size_t>();
  if (j.contains("p")) r.p = j.at("p").get<std::size_t>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.margin = j.at("margin").get<double>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.tolerance_level = j.at("tolerance_level").get<double>();
  for (const auto& [key, val] : j.at("witness").items()) {
    if (key == "note")
      r.note = val.get<std::string>();
    else
      r.witness.emplace_back(key, val.get<double>());
  }
  if (j.contains("seed_provenance") && !j.at("seed_provenance").is_null())
    r.provenance = Provenance{j["seed_provenance"].at("seed").get<std::uint64_t>(),
                              j["seed_provenance"].at("trial").get<std::uint64_t>()};
  return r;
}

std::string report_csv_header() {
  return "statement,n,k,p,lhs,rhs,margin,status,tolerance_level,seed,trial,note";
}

namespace {
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string report_to_csv(const InequalityReport& r) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << r.statement << ',' << r.n << ',' << r.k << ',';
  if (r.p) os << *r.p;
  os << ',' << r.lhs << ',' << r.rhs << ',' << r.margin << ',' << to_string(r.status) << ','
     << r.tolerance_level << ',';
  if (r.provenance) os << r.provenance->seed << ',' << r.provenance->trial;
  else os << ',';
  os << ',' << csv_escape(r.note);
  return os.str();
}

std::string report_to_human(const InequalityReport& r) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "[" << to_string(r.status) << "] " << statement_title(r.statement) << "\n"
     << "    " << r.statement << "  n=" << r.n << " k=" << r.k;
  if (r.p) os << " p=" << *r.p;
  if (r.status != Status::inapplicable)
    os << "  lhs=" << r.lhs << " rhs=" << r.rhs << " margin=" << r.margin
       << " (eps=" << r.tolerance_level << ")";
  for (const auto& [k, v] : r.witness) os << "\n    " << k << " = " << v;
  if (!r.note.empty()) os << "\n    note: " << r.note;
  return os.str();
}

}  // namespace kpos
