#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icode/matrix.hpp"
#include "icode/problem.hpp"

namespace icode {

/// File/interchange form of a code matrix: the problem it serves (k, d,
/// variant tag), the field it was built over, and the entries row by row.
struct MatrixDocument {
    int k = 0;
    int d = 0;
    std::string variant; // "neighboring" | "shift:T" | "shifts:a,b,..." | "permuted:M"
    std::uint64_t field = 2;
    std::vector<std::vector<std::uint64_t>> rows;
};

std::string variant_tag(const AntidotePattern& pattern);
AntidotePattern parse_variant_tag(const std::string& tag);

MatrixDocument make_document(const ProblemSpec& spec, const Matrix& l);
ProblemSpec spec_of(const MatrixDocument& doc);
Matrix matrix_of(const MatrixDocument& doc);

/// Compact single-line JSON with keys k, d, variant, field, rows.
std::string to_json(const MatrixDocument& doc);
MatrixDocument document_from_json(const std::string& text);

/// One matrix row per line, comma-separated entries, no header.
std::string to_csv(const MatrixDocument& doc);

/// Aligned entry grid with a horizontal rule under row N (the identity
/// block of constructed codes), mirroring the usual figure layout.
std::string to_pretty(const MatrixDocument& doc);

} // namespace icode
