#include "treechol/precision.hpp"

#include <cctype>

#include "treechol/errors.hpp"

namespace treechol {

const char* precision_name(Precision p) {
    switch (p) {
        case Precision::Half: return "F16";
        case Precision::Single: return "F32";
        default: return "F64";
    }
}

std::string PrecisionConfig::to_string() const {
    if (levels.size() == 1) {
        return std::string("Pure ") + precision_name(levels[0]);
    }
    std::string out = "[";
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i != 0) out += ", ";
        out += precision_name(levels[i]);
    }
    out += "]";
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

// fmt := ("F"|"FP")("16"|"32"|"64"), case-insensitive
Precision parse_format(Cursor& c) {
    c.skip_ws();
    std::string tok;
    while (c.i < c.s.size() &&
           std::isalnum(static_cast<unsigned char>(c.s[c.i]))) {
        tok += char(std::toupper(static_cast<unsigned char>(c.s[c.i])));
        ++c.i;
    }
    if (tok.starts_with("FP")) tok = "F" + tok.substr(2);
    if (tok == "F16") return Precision::Half;
    if (tok == "F32") return Precision::Single;
    if (tok == "F64") return Precision::Double;
    throw SyntaxError("unknown precision token '" + tok + "'");
}

}  // namespace

PrecisionConfig PrecisionConfig::parse(const std::string& text) {
    Cursor c{text};
    PrecisionConfig cfg;

    if (c.done()) throw SyntaxError("empty precision config");

    if (c.peek() == '[') {
        ++c.i;
        if (c.peek() == ']') throw SyntaxError("empty precision config");
        cfg.levels.push_back(parse_format(c));
        while (c.peek() == ',') {
            ++c.i;
            cfg.levels.push_back(parse_format(c));
        }
        if (c.peek() != ']') {
            throw SyntaxError("expected ',' or ']' in precision config");
        }
        ++c.i;
    } else {
        // "Pure F16" form; also accept a bare format token
        std::size_t save = c.i;
        std::string word;
        while (c.i < c.s.size() &&
               std::isalpha(static_cast<unsigned char>(c.s[c.i]))) {
            word += char(std::toupper(static_cast<unsigned char>(c.s[c.i])));
            ++c.i;
        }
        if (word != "PURE") c.i = save;
        cfg.levels.push_back(parse_format(c));
    }
    if (!c.done()) {
        throw SyntaxError("trailing characters in precision config");
    }

    for (std::size_t i = 1; i < cfg.levels.size(); ++i) {
        if (int(cfg.levels[i]) < int(cfg.levels[i - 1])) {
            throw ValidationError(
                "precision must be non-decreasing from outer to inner: " +
                text);
        }
    }
    return cfg;
}

}  // namespace treechol
