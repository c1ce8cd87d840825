#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "treechol/errors.hpp"
#include "treechol/mtx.hpp"

using namespace treechol;

namespace {

Matrix load(const std::string& text, int limit = kDefaultDensifyLimit) {
    std::istringstream in(text);
    return load_matrix_market(in, limit);
}

}  // namespace

TEST_CASE("coordinate symmetric fixture densifies both triangles") {
    const Matrix a = load(
        "%%MatrixMarket matrix coordinate real symmetric\n"
        "% 3x3 SPD example\n"
        "3 3 4\n"
        "1 1 4.0\n"
        "2 2 5.0\n"
        "3 3 6.0\n"
        "3 1 -1.5\n");
    REQUIRE(a.rows() == 3);
    REQUIRE(a.cols() == 3);
    CHECK(a.at(0, 0) == 4.0);
    CHECK(a.at(1, 1) == 5.0);
    CHECK(a.at(2, 2) == 6.0);
    CHECK(a.at(2, 0) == -1.5);
    CHECK(a.at(0, 2) == -1.5);
    CHECK(a.at(1, 0) == 0.0);
    CHECK(a.at(0, 1) == 0.0);
}

TEST_CASE("coordinate general keeps entries where they are") {
    const Matrix a = load(
        "%%MatrixMarket matrix coordinate real general\n"
        "2 2 2\n"
        "2 1 7\n"
        "1 2 -7\n");
    CHECK(a.at(1, 0) == 7.0);
    CHECK(a.at(0, 1) == -7.0);
    CHECK(a.at(0, 0) == 0.0);
}

TEST_CASE("integer field parses as numbers") {
    const Matrix a = load(
        "%%MatrixMarket matrix coordinate integer general\n"
        "2 2 1\n"
        "1 1 9\n");
    CHECK(a.at(0, 0) == 9.0);
}

TEST_CASE("array general reads column-major values") {
    const Matrix a = load(
        "%%MatrixMarket matrix array real general\n"
        "2 2\n"
        "1\n2\n3\n4\n");
    CHECK(a.at(0, 0) == 1.0);
    CHECK(a.at(1, 0) == 2.0);
    CHECK(a.at(0, 1) == 3.0);
    CHECK(a.at(1, 1) == 4.0);
}

TEST_CASE("array symmetric stores the lower triangle per column") {
    const Matrix a = load(
        "%%MatrixMarket matrix array real symmetric\n"
        "3 3\n"
        "1\n2\n3\n4\n5\n6\n");
    CHECK(a.at(0, 0) == 1.0);
    CHECK(a.at(1, 0) == 2.0);
    CHECK(a.at(2, 0) == 3.0);
    CHECK(a.at(1, 1) == 4.0);
    CHECK(a.at(2, 1) == 5.0);
    CHECK(a.at(2, 2) == 6.0);
    CHECK(a.at(0, 1) == 2.0);
    CHECK(a.at(0, 2) == 3.0);
    CHECK(a.at(1, 2) == 5.0);
}

TEST_CASE("banner is case-insensitive and comments may appear anywhere") {
    const Matrix a = load(
        "%%matrixmarket MATRIX Coordinate Real General\n"
        "% leading comment\n"
        "\n"
        "% another\n"
        "1 1 1\n"
        "1 1 2.5e1\n");
    CHECK(a.at(0, 0) == 25.0);
}

TEST_CASE("unsupported headers are rejected with the right exception") {
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate complex general\n"
                         "1 1 1\n1 1 1 0\n"),
                    UnsupportedFormat);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate pattern general\n"
                         "1 1 1\n1 1\n"),
                    UnsupportedFormat);
    CHECK_THROWS_AS(
        load("%%MatrixMarket matrix coordinate real skew-symmetric\n"
             "2 2 1\n2 1 1\n"),
        UnsupportedFormat);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real hermitian\n"
                         "1 1 1\n1 1 1\n"),
                    UnsupportedFormat);
    CHECK_THROWS_AS(load("%%MatrixMarket vector coordinate real general\n"),
                    UnsupportedFormat);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real general\n"
                         "2 3 1\n1 1 1\n"),
                    UnsupportedFormat);
}

TEST_CASE("malformed input raises ParseError") {
    CHECK_THROWS_AS(load(""), ParseError);
    CHECK_THROWS_AS(load("not a banner\n1 1 1\n"), ParseError);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real general\n"),
                    ParseError);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real general\n"
                         "2 2\n"),
                    ParseError);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real general\n"
                         "2 2 1\n3 1 1\n"),
                    ParseError);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real general\n"
                         "2 2 1\n0 1 1\n"),
                    ParseError);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real general\n"
                         "2 2 2\n1 1 1\n"),
                    ParseError);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real general\n"
                         "2 2 1\n1 1 abc\n"),
                    ParseError);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix array real general\n"
                         "2 2\n1\n2\n3\n"),
                    ParseError);
}

TEST_CASE("orders beyond the densify limit raise TooLarge") {
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real symmetric\n"
                         "30000 30000 1\n1 1 1\n"),
                    TooLarge);
    CHECK_THROWS_AS(load("%%MatrixMarket matrix coordinate real symmetric\n"
                         "5 5 1\n1 1 1\n",
                         4),
                    TooLarge);
    // right at the limit is fine
    const Matrix a = load(
        "%%MatrixMarket matrix coordinate real symmetric\n"
        "4 4 1\n1 1 1\n",
        4);
    CHECK(a.rows() == 4);
}

TEST_CASE("fuzzing the parser only ever raises library exceptions") {
    std::mt19937_64 rng(2024);
    const std::string pieces[] = {
        "%%MatrixMarket", "matrix",   "coordinate", "array",  "real",
        "integer",        "complex",  "pattern",    "general", "symmetric",
        "1",              "2",        "3",          "-1",      "0",
        "1e308",          "nan",      "abc",        "%",       "\n",
        " ",              "\t",       "1 1 1",      "2 2 2",   "..",
    };
    const int npieces = int(sizeof(pieces) / sizeof(pieces[0]));
    int parsed = 0, rejected = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        std::string doc;
        const int len = 1 + int(rng() % 40);
        for (int k = 0; k < len; ++k) {
            doc += pieces[rng() % npieces];
            doc += (rng() % 4 == 0) ? '\n' : ' ';
        }
        try {
            Matrix m = load(doc, 64);
            CHECK(m.rows() >= 1);
            ++parsed;
        } catch (const Error&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 1000);
    CHECK(rejected > 0);
}
