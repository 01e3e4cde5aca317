#include "rieszlab/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace rieszlab {

namespace {

std::string describe(std::size_t row, std::size_t column) {
    std::string where;
    if (row > 0)
        where += " (row " + std::to_string(row);
    if (column > 0)
        where += (row > 0 ? ", column " : " (column ") + std::to_string(column);
    if (!where.empty())
        where += ")";
    return where;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

} // namespace

ParseError::ParseError(const std::string& what, std::size_t row, std::size_t column)
    : std::runtime_error(what + describe(row, column)), row_(row), column_(column) {}

double parse_real(std::string_view text) {
    std::string_view body = text;
    const bool explicit_plus = !body.empty() && body.front() == '+';
    if (explicit_plus)
        body.remove_prefix(1);
    if (body.empty() || (explicit_plus && (body.front() == '+' || body.front() == '-')))
        throw ParseError("malformed number '" + std::string(text) + "'");
    double value = 0.0;
    const auto* first = body.data();
    const auto* last = body.data() + body.size();
    const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw ParseError("malformed number '" + std::string(text) + "'");
    return value;
}

cplx parse_complex(std::string_view cell) {
    if (cell.empty())
        throw ParseError("empty cell");
    if (cell.back() != 'i')
        return {parse_real(cell), 0.0};

    const std::string_view body = cell.substr(0, cell.size() - 1);
    std::size_t split_at = std::string_view::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split_at = p;
            break;
        }
    }
    try {
        if (split_at == std::string_view::npos)
            return {0.0, parse_real(body)};
        return {parse_real(body.substr(0, split_at)), parse_real(body.substr(split_at))};
    } catch (const ParseError&) {
        throw ParseError("malformed complex number '" + std::string(cell) + "'");
    }
}

std::string format_real(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::string format_complex(cplx z) {
    std::string out = format_real(z.real());
    if (z.imag() != 0.0) {
        if (!std::signbit(z.imag()))
            out += '+';
        out += format_real(z.imag());
        out += 'i';
    }
    return out;
}

CMatrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<cplx>> rows;
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = strip_cr(raw);
        if (is_blank(line))
            continue;
        if (line.front() == '#') {
            std::size_t dim = 0, count = 0;
            const std::string text(line);
            if (std::sscanf(text.c_str(), "# dim=%zu count=%zu", &dim, &count) == 2) {
                if (!rows.empty() || header)
                    throw ParseError("header must precede data", line_no);
                header = {dim, count};
            }
            continue;
        }
        const auto cells = split(line, ',');
        std::vector<cplx> row;
        row.reserve(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            try {
                row.push_back(parse_complex(cells[c]));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no, c + 1);
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " cells, expected " +
                                 std::to_string(rows.front().size()),
                             line_no);
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError("no data rows");
    const std::size_t n = rows.size();
    const std::size_t m = rows.front().size();
    if (header && (header->first != n || header->second != m))
        throw ParseError("shape " + std::to_string(n) + "x" + std::to_string(m) + " does not match header dim=" +
                         std::to_string(header->first) + " count=" + std::to_string(header->second));
    CMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return out;
}

CMatrix read_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    return read_matrix_csv(in);
}

void write_matrix_csv(std::ostream& out, const CMatrix& m, bool header) {
    if (header)
        out << "# dim=" << m.rows() << " count=" << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0)
                out << ',';
            out << format_complex(m(i, j));
        }
        out << '\n';
    }
}

PointSet2D read_point_set_csv(std::istream& in) {
    std::vector<TimeFrequencyNode> nodes;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = strip_cr(raw);
        if (is_blank(line) || line.front() == '#')
            continue;
        const auto cells = split(line, ',');
        if (cells.size() != 2)
            throw ParseError("expected two columns tau,mu", line_no);
        TimeFrequencyNode node;
        for (std::size_t c = 0; c < 2; ++c) {
            try {
                (c == 0 ? node.tau : node.mu) = parse_real(cells[c]);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no, c + 1);
            }
        }
        nodes.push_back(node);
    }
    if (nodes.empty())
        throw ParseError("point set is empty");
    try {
        return PointSet2D(std::move(nodes));
    } catch (const InvariantError& e) {
        throw ParseError(e.what());
    }
}

PointSet2D read_point_set_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    return read_point_set_csv(in);
}

void write_point_set_csv(std::ostream& out, const PointSet2D& points) {
    out << "# tau,mu\n";
    for (const auto& node : points.nodes())
        out << format_real(node.tau) << ',' << format_real(node.mu) << '\n';
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out)
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

} // namespace rieszlab
