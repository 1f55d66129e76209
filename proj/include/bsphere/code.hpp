#pragma once

// Binary codes given by a generator matrix (linear map v -> v * G) or by an
// explicit table of images (arbitrary map F with F(0) = 0).
//
// Coordinate j of a codeword is bit j of its mask, so row string character j
// of a generator matrix file lands in bit j.

#include <bit>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bsphere/errors.hpp"

namespace bsphere {

using Word = std::uint64_t;

inline constexpr unsigned kMaxCodeLength = 64;
/// Enumerations over all 2^k messages stop here.
inline constexpr unsigned kMaxMessageBits = 24;

class GeneratorMatrix {
public:
    GeneratorMatrix(unsigned n, std::vector<Word> rows) : n_(n), rows_(std::move(rows)) {
        if (n_ == 0 || n_ > kMaxCodeLength) throw std::invalid_argument("code length must be in [1, 64]");
        if (rows_.empty() || rows_.size() > n_) throw std::invalid_argument("need 1 <= k <= n rows");
        for (Word r : rows_)
            if (n_ < 64 && (r >> n_) != 0) throw std::invalid_argument("row wider than n");
    }

    unsigned k() const noexcept { return static_cast<unsigned>(rows_.size()); }
    unsigned n() const noexcept { return n_; }
    const std::vector<Word>& rows() const noexcept { return rows_; }

    /// v * G for a message mask v (bit i selects row i).
    Word encode(std::uint64_t v) const {
        Word c = 0;
        for (; v != 0; v &= v - 1) c ^= rows_[static_cast<std::size_t>(std::countr_zero(v))];
        return c;
    }

    unsigned rank() const {
        std::vector<Word> m = rows_;
        unsigned r = 0;
        for (unsigned col = 0; col < n_ && r < m.size(); ++col) {
            const Word bit = Word{1} << col;
            std::size_t piv = r;
            while (piv < m.size() && !(m[piv] & bit)) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[r], m[piv]);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (i != r && (m[i] & bit)) m[i] ^= m[r];
            ++r;
        }
        return r;
    }

    void require_full_rank() const {
        const unsigned r = rank();
        if (r != k())
            throw RankDeficientError("generator matrix has rank " + std::to_string(r) + " < k = " + std::to_string(k()));
    }

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    unsigned n_;
    std::vector<Word> rows_;
};

/// Explicit map F: F2^k -> F2^n with images[v] = F(v) and F(0) = 0.
class CodeMap {
public:
    CodeMap(unsigned k, unsigned n, std::vector<Word> images) : k_(k), n_(n), images_(std::move(images)) {
        if (k_ == 0 || k_ > kMaxMessageBits) throw std::invalid_argument("k must be in [1, 24]");
        if (n_ == 0 || n_ > kMaxCodeLength) throw std::invalid_argument("n must be in [1, 64]");
        if (images_.size() != (std::size_t{1} << k_)) throw std::invalid_argument("need exactly 2^k images");
        for (Word w : images_)
            if (n_ < 64 && (w >> n_) != 0) throw std::invalid_argument("image wider than n");
        if (images_[0] != 0) throw std::invalid_argument("F(0) must be 0");
    }

    static CodeMap from_generator(const GeneratorMatrix& g) {
        if (g.k() > kMaxMessageBits) throw BudgetExceeded("k too large to tabulate");
        std::vector<Word> im(std::size_t{1} << g.k());
        for (std::size_t v = 0; v < im.size(); ++v) im[v] = g.encode(v);
        return CodeMap(g.k(), g.n(), std::move(im));
    }

    unsigned k() const noexcept { return k_; }
    unsigned n() const noexcept { return n_; }
    Word operator()(std::uint64_t v) const { return images_[v]; }
    const std::vector<Word>& images() const noexcept { return images_; }

private:
    unsigned k_;
    unsigned n_;
    std::vector<Word> images_;
};

namespace detail {

inline std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(line.substr(first));
    }
    return out;
}

inline bool parse_uint(const std::string& s, unsigned& out) {
    if (s.empty() || s.size() > 6) return false;
    out = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        out = out * 10 + static_cast<unsigned>(c - '0');
    }
    return true;
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace detail

/// '#' comment lines, an optional "k n" header, then k rows of n '0'/'1'
/// characters (whitespace between characters allowed). A first line of two
/// integers counts as the header only when the rows after it match it.
inline GeneratorMatrix parse_generator_matrix(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("generator matrix file has no rows");

    std::size_t first_row = 0;
    unsigned hk = 0, hn = 0;
    bool has_header = false;
    if (auto tok = detail::tokens(lines[0]);
        tok.size() == 2 && detail::parse_uint(tok[0], hk) && detail::parse_uint(tok[1], hn)) {
        bool consistent = lines.size() - 1 == hk && hk > 0;
        for (std::size_t i = 1; consistent && i < lines.size(); ++i)
            consistent = detail::strip_spaces(lines[i]).size() == hn;
        if (consistent) {
            has_header = true;
            first_row = 1;
        }
    }

    std::vector<Word> rows;
    unsigned n = 0;
    for (std::size_t i = first_row; i < lines.size(); ++i) {
        const std::string bits = detail::strip_spaces(lines[i]);
        if (bits.empty() || bits.size() > kMaxCodeLength)
            throw ParseError("row " + std::to_string(rows.size() + 1) + " must have 1..64 bits");
        if (n == 0) n = static_cast<unsigned>(bits.size());
        else if (bits.size() != n) throw ParseError("rows have different lengths");
        Word r = 0;
        for (std::size_t j = 0; j < bits.size(); ++j) {
            if (bits[j] == '1') r |= Word{1} << j;
            else if (bits[j] != '0') throw ParseError("row characters must be '0' or '1'");
        }
        rows.push_back(r);
    }
    if (has_header && (rows.size() != hk || n != hn)) throw ParseError("header does not match the rows");
    if (rows.size() > n) throw ParseError("more rows than columns (k > n)");
    return GeneratorMatrix(n, std::move(rows));
}

inline std::string format_generator_matrix(const GeneratorMatrix& g) {
    std::string out = std::to_string(g.k()) + " " + std::to_string(g.n()) + "\n";
    for (Word r : g.rows()) {
        for (unsigned j = 0; j < g.n(); ++j) out.push_back((r >> j) & 1u ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

namespace detail {

inline std::string to_binary(Word v, unsigned width) {
    std::string s(width, '0');
    for (unsigned b = 0; b < width; ++b)
        if ((v >> b) & 1u) s[width - 1 - b] = '1';
    return s;
}

inline Word from_binary(const std::string& s, unsigned width) {
    if (s.size() != width) throw ParseError("binary field \"" + s + "\" must have " + std::to_string(width) + " digits");
    Word v = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw ParseError("binary field \"" + s + "\" has a non-binary digit");
        v = (v << 1) | static_cast<Word>(c - '0');
    }
    return v;
}

}  // namespace detail

/// Header "k n", then 2^k lines "v image" written as binary numerals
/// (most significant bit first) of width k and n. Every v must appear once and F(0) = 0.
inline CodeMap parse_code_map(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("code map file is empty");
    auto head = detail::tokens(lines[0]);
    unsigned k = 0, n = 0;
    if (head.size() != 2 || !detail::parse_uint(head[0], k) || !detail::parse_uint(head[1], n))
        throw ParseError("expected header \"k n\"");
    if (k == 0 || k > kMaxMessageBits || n == 0 || n > kMaxCodeLength)
        throw ParseError("need 1 <= k <= 24 and 1 <= n <= 64");
    const std::size_t count = std::size_t{1} << k;
    if (lines.size() - 1 != count)
        throw ParseError("expected " + std::to_string(count) + " image lines, got " + std::to_string(lines.size() - 1));
    std::vector<Word> images(count);
    std::vector<bool> seen(count, false);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto tok = detail::tokens(lines[i]);
        if (tok.size() != 2) throw ParseError("image line must be \"v_mask image_mask\"");
        const Word v = detail::from_binary(tok[0], k);
        if (seen[v]) throw ParseError("message " + tok[0] + " listed twice");
        seen[v] = true;
        images[v] = detail::from_binary(tok[1], n);
    }
    if (images[0] != 0) throw ParseError("F(0) must be the zero word");
    return CodeMap(k, n, std::move(images));
}

inline std::string format_code_map(const CodeMap& f) {
    std::string out = std::to_string(f.k()) + " " + std::to_string(f.n()) + "\n";
    for (std::size_t v = 0; v < f.images().size(); ++v)
        out += detail::to_binary(v, f.k()) + " " + detail::to_binary(f(v), f.n()) + "\n";
    return out;
}

}  // namespace bsphere
