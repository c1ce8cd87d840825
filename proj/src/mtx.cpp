#include "treechol/mtx.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "treechol/errors.hpp"

namespace treechol {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return char(std::tolower(c));
    });
    return s;
}

// next non-comment, non-blank line
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t p = line.find_first_not_of(" \t\r\n");
        if (p == std::string::npos) continue;
        if (line[p] == '%') continue;
        return true;
    }
    return false;
}

double parse_value(const std::string& tok) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad numeric value '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad numeric value '" + tok + "'");
    return v;
}

long parse_index(const std::string& tok) {
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad index '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad index '" + tok + "'");
    return v;
}

}  // namespace

Matrix load_matrix_market(std::istream& in, int densify_limit) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty file");
    std::istringstream hdr(lower(line));
    std::string banner, object, format, field, symmetry;
    hdr >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%matrixmarket") {
        throw ParseError("missing %%MatrixMarket banner");
    }
    if (object != "matrix") {
        throw UnsupportedFormat("unsupported object '" + object + "'");
    }
    if (format != "coordinate" && format != "array") {
        throw ParseError("unknown format '" + format + "'");
    }
    if (field == "complex") throw UnsupportedFormat("complex field");
    if (field == "pattern") {
        throw UnsupportedFormat("pattern field carries no values");
    }
    if (field != "real" && field != "integer" && field != "double") {
        throw ParseError("unknown field '" + field + "'");
    }
    if (symmetry == "skew-symmetric" || symmetry == "hermitian") {
        throw UnsupportedFormat("unsupported symmetry '" + symmetry + "'");
    }
    if (symmetry != "general" && symmetry != "symmetric") {
        throw ParseError("unknown symmetry '" + symmetry + "'");
    }
    const bool symmetric = symmetry == "symmetric";

    if (!next_data_line(in, line)) throw ParseError("missing size line");
    std::istringstream size_line(line);
    std::vector<std::string> st;
    for (std::string t; size_line >> t;) st.push_back(t);

    if (format == "coordinate") {
        if (st.size() != 3) throw ParseError("bad coordinate size line");
        const long rows = parse_index(st[0]);
        const long cols = parse_index(st[1]);
        const long nnz = parse_index(st[2]);
        if (rows < 1 || cols < 1 || nnz < 0) {
            throw ParseError("bad dimensions in size line");
        }
        if (rows != cols) throw UnsupportedFormat("matrix is not square");
        if (rows > densify_limit) {
            throw TooLarge("matrix order " + std::to_string(rows) +
                           " exceeds densify limit " +
                           std::to_string(densify_limit));
        }
        Matrix a{int(rows), int(cols)};
        long seen = 0;
        std::string ti, tj, tv;
        while (seen < nnz) {
            if (!(in >> ti >> tj >> tv)) {
                throw ParseError("unexpected end of file in entry list");
            }
            const long i = parse_index(ti), j = parse_index(tj);
            const double v = parse_value(tv);
            if (i < 1 || i > rows || j < 1 || j > cols) {
                throw ParseError("entry index out of range");
            }
            a.at(int(i - 1), int(j - 1)) = v;
            if (symmetric) a.at(int(j - 1), int(i - 1)) = v;
            ++seen;
        }
        return a;
    }

    // array format: dense column-major values; symmetric stores the lower
    // triangle column by column
    if (st.size() != 2) throw ParseError("bad array size line");
    const long rows = parse_index(st[0]);
    const long cols = parse_index(st[1]);
    if (rows < 1 || cols < 1) throw ParseError("bad dimensions in size line");
    if (rows != cols) throw UnsupportedFormat("matrix is not square");
    if (rows > densify_limit) {
        throw TooLarge("matrix order " + std::to_string(rows) +
                       " exceeds densify limit " +
                       std::to_string(densify_limit));
    }
    Matrix a{int(rows), int(cols)};
    std::string tv;
    for (long j = 0; j < cols; ++j) {
        for (long i = symmetric ? j : 0; i < rows; ++i) {
            if (!(in >> tv)) {
                throw ParseError("unexpected end of file in value list");
            }
            const double v = parse_value(tv);
            a.at(int(i), int(j)) = v;
            if (symmetric) a.at(int(j), int(i)) = v;
        }
    }
    return a;
}

Matrix load_matrix_market(const std::string& path, int densify_limit) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_matrix_market(in, densify_limit);
}

}  // namespace treechol
