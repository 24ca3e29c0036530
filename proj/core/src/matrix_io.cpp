#include "kpos/matrix_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

namespace kpos {

namespace {

// row_lines[r] is the input line holding row r.
SymMatrix symmetric_or_throw(const Matrix& m, const std::vector<std::size_t>& row_lines) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::size_t later = std::max(i, j);
      if (!std::isfinite(m(i, j)))
        throw ParseError("non-finite entry at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")",
                         row_lines[i]);
      if (j < i && std::abs(m(i, j) - m(j, i)) > kInputSymmetryTolerance)
        throw ParseError("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")",
                         row_lines[later]);
    }
  return SymMatrix::from_dense(m, kInputSymmetryTolerance);
}

SymMatrix json_object_to_matrix(const nlohmann::json& j, std::size_t line) {
  if (!j.is_object() || !j.contains("rows")) throw ParseError("expected an object with \"rows\"", line);
  const auto& rows = j.at("rows");
  if (!rows.is_array() || rows.empty()) throw ParseError("\"rows\" must be a non-empty array", line);
  const std::size_t n = rows.size();
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<long long>() != static_cast<long long>(n))
      throw ParseError("\"n\" does not match the number of rows", line);
  }
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError("row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries",
                       line);
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_number()) throw ParseError("non-numeric entry", line);
      m(r, c) = row[c].get<double>();
    }
  }
  return symmetric_or_throw(m, std::vector<std::size_t>(m.rows(), line));
}

std::vector<SymMatrix> read_json(const std::string& text) {
  std::vector<SymMatrix> out;
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_discarded()) {
    if (doc.is_array()) {
      for (const auto& item : doc) out.push_back(json_object_to_matrix(item, 0));
    } else {
      out.push_back(json_object_to_matrix(doc, 1));
    }
    return out;
  }
  // One object per line.
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON", lineno);
    out.push_back(json_object_to_matrix(j, lineno));
  }
  return out;
}

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::vector<SymMatrix> read_text(const std::string& text) {
  std::vector<SymMatrix> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (next_content_line(in, line, lineno)) {
    const std::size_t header_line = lineno;
    std::istringstream hs(line);
    long long n = 0;
    std::string extra;
    if (!(hs >> n) || (hs >> extra) || n < 1)
      throw ParseError("expected a positive dimension on its own line", header_line);
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::vector<std::size_t> row_lines;
    for (long long r = 0; r < n; ++r) {
      if (!next_content_line(in, line, lineno))
        throw ParseError("unexpected end of input: expected " + std::to_string(n) + " rows", lineno);
      row_lines.push_back(lineno);
      std::istringstream rs(line);
      for (long long c = 0; c < n; ++c) {
        std::string tok;
        if (!(rs >> tok)) throw ParseError("expected " + std::to_string(n) + " values", lineno);
        std::size_t used = 0;
        double v = 0.0;
        try {
          v = std::stod(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok.size()) throw ParseError("malformed number '" + tok + "'", lineno);
        m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = v;
      }
      std::string more;
      if (rs >> more) throw ParseError("too many values in row", lineno);
    }
    out.push_back(symmetric_or_throw(m, row_lines));
  }
  if (out.empty()) throw ParseError("no matrix found", 0);
  return out;
}

}  // namespace

std::vector<SymMatrix> read_matrices(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input", 0);
  if (text[first] == '{' || text[first] == '[') return read_json(text);
  return read_text(text);
}

std::vector<SymMatrix> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_matrices(in);
}

SymMatrix matrix_from_json(const nlohmann::json& j) { return json_object_to_matrix(j, 0); }

nlohmann::json matrix_to_json(const SymMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.n(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return {{"n", a.n()}, {"rows", std::move(rows)}};
}

std::string matrix_to_text(const SymMatrix& a) {
  std::ostringstream os;
  os << std::setprecision(17) << a.n() << '\n';
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace kpos
