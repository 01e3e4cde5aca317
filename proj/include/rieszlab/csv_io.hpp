#pragma once

// Text formats for systems and point sets.
//
// Matrix CSV: one line per ambient coordinate, one cell per sequence member,
// cells are "a", "a+bi" or "a-bi" (no whitespace), optional first line
// "# dim=<n> count=<m>". Numbers are written with 17 significant digits so a
// write/read cycle reproduces every double exactly.
//
// Point-set CSV: "tau,mu" per line; lines starting with '#' are comments.

#include "rieszlab/generators.hpp"
#include "rieszlab/seqcore.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rieszlab {

/// Malformed text input. row/column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t row = 0, std::size_t column = 0);
    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

/// Parses one cell of the complex grammar; throws ParseError (row/column unset).
cplx parse_complex(std::string_view cell);
double parse_real(std::string_view text);

std::string format_real(double x);
std::string format_complex(cplx z);

CMatrix read_matrix_csv(std::istream& in);
CMatrix read_matrix_csv(const std::filesystem::path& path);
void write_matrix_csv(std::ostream& out, const CMatrix& m, bool header = true);

PointSet2D read_point_set_csv(std::istream& in);
PointSet2D read_point_set_csv(const std::filesystem::path& path);
void write_point_set_csv(std::ostream& out, const PointSet2D& points);

/// Writes to a sibling temp file, then renames over the destination.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

} // namespace rieszlab
