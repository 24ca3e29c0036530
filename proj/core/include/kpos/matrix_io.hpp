#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kpos/matrix.hpp"

namespace kpos {

/// Maximum |a(i,j) - a(j,i)| accepted when reading a matrix.
inline constexpr double kInputSymmetryTolerance = 1e-12;

/// Reads one or more matrices. The format is chosen from the first
/// non-whitespace byte: '{' or '[' means JSON, anything else the text format.
///
/// Text: a line holding n, then n lines of n whitespace-separated decimals;
/// several such blocks may follow each other.
/// JSON: {"n": int, "rows": [[...], ...]}, an array of such objects, or one
/// object per line (the sample dump format).
///
/// Throws ParseError with a 1-based line number on malformed input.
std::vector<SymMatrix> read_matrices(std::istream& in);
std::vector<SymMatrix> read_matrix_file(const std::string& path);

SymMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const SymMatrix& a);

/// Text format, full precision.
std::string matrix_to_text(const SymMatrix& a);

}  // namespace kpos
