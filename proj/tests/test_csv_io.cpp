#include "rieszlab/csv_io.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace rieszlab;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures{RIESZLAB_FIXTURES};

} // namespace

TEST_CASE("complex cell grammar") {
    CHECK(parse_complex("3") == cplx(3, 0));
    CHECK(parse_complex("1-2i") == cplx(1, -2));
    CHECK(parse_complex("0+1i") == cplx(0, 1));
    CHECK(parse_complex("-2i") == cplx(0, -2));
    CHECK(parse_complex("+4.5") == cplx(4.5, 0));
    CHECK(parse_complex("1e-3+2E+2i") == cplx(1e-3, 200));
    CHECK(parse_complex("-1.5e-3-2.25e-1i") == cplx(-1.5e-3, -0.225));
    CHECK(parse_complex(".5") == cplx(0.5, 0));

    for (const char* bad : {"", " 1", "1 ", "1+", "i", "1+i", "abc", "1+2", "1+2j", "1++2i", "+-1", "1,2", "nan",
                            "inf", "1e400", "2i+1", "1+2i3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_complex(bad), ParseError);
    }
}

TEST_CASE("formatting") {
    CHECK(format_complex(cplx(3, 0)) == "3");
    CHECK(format_complex(cplx(1, -2)) == "1-2i");
    CHECK(format_complex(cplx(0, 1)) == "0+1i");
    CHECK(format_complex(cplx(0.1, 0)) == "0.10000000000000001");
    CHECK(parse_complex(format_complex(cplx(-0.0, 2.5))) == cplx(0, 2.5));
}

TEST_CASE("CSV round trip reproduces entries to 1e-15 relative") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> exponent(-300, 300);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 7);
        const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng() % 7);
        CMatrix a = testsupport::random_matrix(rng, n, m);
        // spread magnitudes, sprinkle exact zeros and pure imaginary / pure real cells
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < m; ++j) {
                a(i, j) *= std::pow(10.0, exponent(rng) / 10.0);
                switch (rng() % 5) {
                case 0: a(i, j) = cplx(a(i, j).real(), 0); break;
                case 1: a(i, j) = cplx(0, a(i, j).imag()); break;
                case 2: a(i, j) = 0; break;
                default: break;
                }
            }
        std::stringstream buf;
        write_matrix_csv(buf, a, trial % 2 == 0);
        const CMatrix b = read_matrix_csv(buf);
        REQUIRE(b.rows() == n);
        REQUIRE(b.cols() == m);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < m; ++j) {
                CHECK(std::abs(b(i, j).real() - a(i, j).real()) <= 1e-15 * std::abs(a(i, j).real()));
                CHECK(std::abs(b(i, j).imag() - a(i, j).imag()) <= 1e-15 * std::abs(a(i, j).imag()));
            }
    }
}

TEST_CASE("header and shape errors") {
    SUBCASE("header mismatch") {
        CHECK_THROWS_AS(read_matrix_csv(kFixtures / "header_mismatch.csv"), ParseError);
    }
    SUBCASE("malformed cell names its row and column") {
        try {
            read_matrix_csv(kFixtures / "malformed.csv");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.row() == 3); // header is line 1
            CHECK(e.column() == 2);
            CHECK(std::strstr(e.what(), "row 3") != nullptr);
            CHECK(std::strstr(e.what(), "column 2") != nullptr);
        }
    }
    SUBCASE("ragged rows") {
        std::istringstream in("1,2\n3\n");
        CHECK_THROWS_AS(read_matrix_csv(in), ParseError);
    }
    SUBCASE("empty input") {
        std::istringstream in("");
        CHECK_THROWS_AS(read_matrix_csv(in), ParseError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(read_matrix_csv(kFixtures / "does_not_exist.csv"), ParseError);
    }
    SUBCASE("fixtures that parse") {
        CHECK(read_matrix_csv(kFixtures / "identity3.csv") == CMatrix::Identity(3, 3));
        const CMatrix c = read_matrix_csv(kFixtures / "complex2.csv");
        CHECK(c(0, 0) == cplx(1, 0.5));
        CHECK(c(1, 0) == cplx(0, -2));
        CHECK(c(1, 1) == cplx(0.3, -125));
    }
}

TEST_CASE("point-set CSV") {
    const PointSet2D one = read_point_set_csv(kFixtures / "single_node.csv");
    CHECK(one.size() == 1);
    CHECK(one.contains({0, 0}));

    const PointSet2D als = als_point_set(3);
    std::stringstream buf;
    write_point_set_csv(buf, als);
    const PointSet2D back = read_point_set_csv(buf);
    CHECK(back.nodes() == als.nodes());

    std::istringstream bad("0,0\n1\n");
    CHECK_THROWS_AS(read_point_set_csv(bad), ParseError);
    std::istringstream dup("0,0\n0,0\n");
    CHECK_THROWS_AS(read_point_set_csv(dup), ParseError);
}

TEST_CASE("atomic write leaves no temp file behind") {
    const fs::path dir = fs::temp_directory_path() / "rieszlab_csv_io_test";
    fs::create_directories(dir);
    const fs::path target = dir / "x.csv";
    write_file_atomic(target, "first\n");
    write_file_atomic(target, "second\n");
    std::ifstream in(target);
    std::string line;
    std::getline(in, line);
    CHECK(line == "second");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir))
        ++files;
    CHECK(files == 1);
    fs::remove_all(dir);
}
