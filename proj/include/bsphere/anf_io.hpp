#pragma once

// Text formats.
//
// Bit-vector file: "n=<int>\n" then 2^n characters '0'/'1' in mask order, then "\n".
// ANF text: monomials "x<i>*x<j>*..." with ascending variables, joined by " + "
// in ascending mask order; "1" is the constant and "0" the zero polynomial.

#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bsphere/anf.hpp"
#include "bsphere/errors.hpp"

namespace bsphere {

template <class Tag>
std::string format_bit_table(const BitTable<Tag>& t) {
    std::string out = "n=" + std::to_string(t.vars()) + "\n";
    out.reserve(out.size() + t.size() + 1);
    for (std::size_t m = 0; m < t.size(); ++m) out.push_back(t.get(m) ? '1' : '0');
    out.push_back('\n');
    return out;
}

/// Parses the bit-vector file format. The caller decides whether the bits are
/// evaluations or coefficients.
template <class Tag>
BitTable<Tag> parse_bit_table(std::string_view text) {
    auto next_line = [&text](std::string_view& line) {
        if (text.empty()) return false;
        const auto nl = text.find('\n');
        line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return true;
    };
    std::string_view header, body;
    if (!next_line(header) || header.substr(0, 2) != "n=") throw ParseError("expected header line \"n=<int>\"");
    const std::string_view digits = header.substr(2);
    if (digits.empty() || digits.size() > 3) throw ParseError("bad variable count in header");
    unsigned n = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad variable count in header");
        n = n * 10 + static_cast<unsigned>(c - '0');
    }
    if (n > kMaxDenseVars) throw ParseError("variable count above " + std::to_string(kMaxDenseVars));
    if (!next_line(body)) throw ParseError("missing bit line");
    if (body.size() != (std::size_t{1} << n))
        throw ParseError("expected " + std::to_string(std::size_t{1} << n) + " bits, got " +
                         std::to_string(body.size()));
    BitTable<Tag> t(n);
    for (std::size_t m = 0; m < body.size(); ++m) {
        if (body[m] == '1') t.set(m, true);
        else if (body[m] != '0') throw ParseError("bit line may only contain '0' and '1'");
    }
    std::string_view rest;
    while (next_line(rest))
        if (!rest.empty()) throw ParseError("trailing content after bit line");
    return t;
}

inline std::string format_anf(const SparseAnf& f) {
    if (f.size() == 0) return "0";
    std::string out;
    for (Mask m : f.monomials()) {
        if (!out.empty()) out += " + ";
        if (m == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (Mask rest = m; rest != 0; rest &= rest - 1) {
            if (!first) out += "*";
            out += "x" + std::to_string(std::countr_zero(rest) + 1);
            first = false;
        }
    }
    return out;
}

/// Inverse of format_anf. Whitespace is ignored; repeated monomials cancel and
/// repeated variables inside a monomial collapse (x*x = x).
inline SparseAnf parse_anf(std::string_view text, unsigned n) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw ParseError("empty ANF text");
    std::vector<Mask> ms;
    if (compact == "0") return SparseAnf(n);
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        const auto end = std::min(compact.find('+', pos), compact.size());
        const std::string_view term(compact.data() + pos, end - pos);
        if (term.empty()) throw ParseError("empty monomial in ANF text");
        Mask m = 0;
        if (term != "1") {
            std::size_t p = 0;
            while (p < term.size()) {
                if (term[p] != 'x') throw ParseError("expected variable x<i> in \"" + std::string(term) + "\"");
                ++p;
                unsigned idx = 0;
                const std::size_t start = p;
                while (p < term.size() && std::isdigit(static_cast<unsigned char>(term[p])))
                    idx = idx * 10 + static_cast<unsigned>(term[p++] - '0');
                if (p == start || idx == 0 || idx > n || p - start > 3)
                    throw ParseError("variable index out of range in \"" + std::string(term) + "\"");
                m |= Mask{1} << (idx - 1);
                if (p < term.size()) {
                    if (term[p] != '*') throw ParseError("expected '*' in \"" + std::string(term) + "\"");
                    if (++p == term.size()) throw ParseError("dangling '*'");
                }
            }
        }
        ms.push_back(m);
        pos = end + 1;
    }
    return SparseAnf(n, std::move(ms));
}

}  // namespace bsphere
