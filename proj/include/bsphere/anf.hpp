#pragma once

// Dense and sparse algebraic normal forms, the binary Moebius transform, and
// expansion of sigma-basis polynomials into explicit monomials.
//
// Mask convention: bit i of a mask m is variable x_{i+1}. A point and the
// monomial X^m share the same mask.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bsphere/bit_index.hpp"
#include "bsphere/errors.hpp"
#include "bsphere/symmetric_poly.hpp"

namespace bsphere {

using Mask = std::uint32_t;

/// Dense tables hold 2^n bits.
inline constexpr unsigned kMaxDenseVars = 24;
/// The complement-set expansion is only a verifier.
inline constexpr unsigned kMaxSymbolicVars = 12;
/// Cap on the number of monomials produced by expand().
inline constexpr std::size_t kExpandBudget = std::size_t{1} << 24;

namespace detail {

inline constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

inline std::size_t words_for(unsigned n) { return n >= 6 ? std::size_t{1} << (n - 6) : 1; }

inline void check_vars(unsigned n) {
    if (n > kMaxDenseVars)
        throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the dense cap of " +
                             std::to_string(kMaxDenseVars) + " variables");
}

}  // namespace detail

/// In-place transform of a packed 2^n-bit vector: out[m] = XOR of in[b] over b inside m.
inline void moebius_in_place(std::span<std::uint64_t> words, unsigned n) {
    if (words.size() != detail::words_for(n)) throw std::invalid_argument("word count does not match 2^n bits");
    for (unsigned i = 0; i < std::min(n, 6u); ++i) {
        const std::uint64_t lo = detail::kLowHalf[i];
        const unsigned shift = 1u << i;
        for (auto& w : words) w ^= (w & lo) << shift;
    }
    for (unsigned i = 6; i < n; ++i) {
        const std::size_t step = std::size_t{1} << (i - 6);
        for (std::size_t base = 0; base < words.size(); base += 2 * step)
            for (std::size_t k = 0; k < step; ++k) words[base + step + k] ^= words[base + k];
    }
}

struct EvaluationTag {};
struct CoefficientTag {};

/// 2^n bits packed into 64-bit words. Tag separates evaluation vectors from coefficient vectors.
template <class Tag>
class BitTable {
public:
    BitTable() = default;

    explicit BitTable(unsigned n) : n_(n) {
        detail::check_vars(n);
        words_.assign(detail::words_for(n), 0);
    }

    BitTable(unsigned n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
        detail::check_vars(n);
        if (words_.size() != detail::words_for(n)) throw std::invalid_argument("word count does not match 2^n bits");
        if (n < 6) words_[0] &= (std::uint64_t{1} << (1u << n)) - 1;
    }

    /// Length must be a power of two.
    static BitTable from_bits(const std::vector<bool>& bits) {
        if (!std::has_single_bit(bits.size())) throw std::invalid_argument("length is not a power of two");
        BitTable t(static_cast<unsigned>(std::countr_zero(bits.size())));
        for (std::size_t m = 0; m < bits.size(); ++m)
            if (bits[m]) t.set(m, true);
        return t;
    }

    unsigned vars() const noexcept { return n_; }
    std::size_t size() const noexcept { return std::size_t{1} << n_; }

    bool get(std::size_t m) const { return (words_[m >> 6] >> (m & 63)) & 1u; }
    void set(std::size_t m, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (m & 63);
        if (v) words_[m >> 6] |= bit;
        else words_[m >> 6] &= ~bit;
    }
    void flip(std::size_t m) { words_[m >> 6] ^= std::uint64_t{1} << (m & 63); }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    std::vector<bool> bits() const {
        std::vector<bool> out(size());
        for (std::size_t m = 0; m < size(); ++m) out[m] = get(m);
        return out;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    friend bool operator==(const BitTable&, const BitTable&) = default;

private:
    unsigned n_ = 0;
    std::vector<std::uint64_t> words_ = {0};
};

using TruthTable = BitTable<EvaluationTag>;
using DenseAnf = BitTable<CoefficientTag>;

/// Evaluations from coefficients.
inline TruthTable moebius(const DenseAnf& f) {
    std::vector<std::uint64_t> w(f.words().begin(), f.words().end());
    moebius_in_place(w, f.vars());
    return TruthTable(f.vars(), std::move(w));
}

/// Coefficients from evaluations (the transform is an involution).
inline DenseAnf moebius(const TruthTable& f) {
    std::vector<std::uint64_t> w(f.words().begin(), f.words().end());
    moebius_in_place(w, f.vars());
    return DenseAnf(f.vars(), std::move(w));
}

/// Read an evaluation vector as a coefficient vector, bit for bit. The
/// transform theorems compare the two spaces directly.
inline DenseAnf as_coefficients(const TruthTable& t) {
    return DenseAnf(t.vars(), {t.words().begin(), t.words().end()});
}

inline TruthTable as_evaluations(const DenseAnf& f) {
    return TruthTable(f.vars(), {f.words().begin(), f.words().end()});
}

/// Untyped form on an explicit bit vector whose length must be a power of two.
inline std::vector<bool> moebius(const std::vector<bool>& v) {
    return moebius(DenseAnf::from_bits(v)).bits();
}

/// Square-free polynomial as a set of monomial masks over n variables.
class SparseAnf {
public:
    SparseAnf() = default;
    explicit SparseAnf(unsigned n) : n_(n) { detail::check_vars(n); }

    /// Duplicate monomials cancel in pairs.
    SparseAnf(unsigned n, std::vector<Mask> monomials) : n_(n), monomials_(std::move(monomials)) {
        detail::check_vars(n);
        for (Mask m : monomials_)
            if (n < 32 && (m >> n) != 0) throw std::invalid_argument("monomial uses a variable beyond x_n");
        std::sort(monomials_.begin(), monomials_.end());
        std::size_t out = 0;
        for (std::size_t i = 0; i < monomials_.size();) {
            std::size_t j = i;
            while (j < monomials_.size() && monomials_[j] == monomials_[i]) ++j;
            if ((j - i) % 2 == 1) monomials_[out++] = monomials_[i];
            i = j;
        }
        monomials_.resize(out);
    }

    static SparseAnf constant(unsigned n, bool c) { return c ? SparseAnf(n, {0}) : SparseAnf(n); }

    unsigned vars() const noexcept { return n_; }
    /// Ascending mask order.
    std::span<const Mask> monomials() const noexcept { return monomials_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    bool contains(Mask m) const { return std::binary_search(monomials_.begin(), monomials_.end(), m); }

    /// Add one monomial in F2.
    void toggle(Mask m) {
        if (n_ < 32 && (m >> n_) != 0) throw std::invalid_argument("monomial uses a variable beyond x_n");
        auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
        if (it != monomials_.end() && *it == m) monomials_.erase(it);
        else monomials_.insert(it, m);
    }

    friend bool operator==(const SparseAnf&, const SparseAnf&) = default;

private:
    unsigned n_ = 0;
    std::vector<Mask> monomials_;
};

inline DenseAnf to_dense(const SparseAnf& f) {
    DenseAnf d(f.vars());
    for (Mask m : f.monomials()) d.set(m, true);
    return d;
}

inline SparseAnf to_sparse(const DenseAnf& f) {
    std::vector<Mask> ms;
    for (std::size_t w = 0; w < f.words().size(); ++w)
        for (std::uint64_t bits = f.words()[w]; bits != 0; bits &= bits - 1)
            ms.push_back(static_cast<Mask>((w << 6) + static_cast<std::size_t>(std::countr_zero(bits))));
    return SparseAnf(f.vars(), std::move(ms));
}

/// Transform by the closed formula: each monomial X^b becomes (1 + X)^(1 + b) * X^b,
/// expanded over the complement of b. Slow; meant to cross-check moebius().
inline SparseAnf moebius_symbolic(const SparseAnf& f) {
    const unsigned n = f.vars();
    if (n > kMaxSymbolicVars)
        throw BudgetExceeded("symbolic transform is capped at " + std::to_string(kMaxSymbolicVars) + " variables");
    const Mask full = (Mask{1} << n) - 1;
    std::vector<std::uint8_t> parity(std::size_t{1} << n, 0);
    for (Mask b : f.monomials()) {
        const Mask comp = full & ~b;
        for (Mask sub = comp;; sub = (sub - 1) & comp) {
            parity[b | sub] ^= 1;
            if (sub == 0) break;
        }
    }
    std::vector<Mask> ms;
    for (Mask m = 0; m <= full; ++m)
        if (parity[m]) ms.push_back(m);
    return SparseAnf(n, std::move(ms));
}

/// XOR of the monomials whose variables are all set in point.
inline bool evaluate(const SparseAnf& f, Mask point) {
    bool acc = false;
    for (Mask m : f.monomials()) acc ^= (m & point) == m;
    return acc;
}

inline bool evaluate(const DenseAnf& f, Mask point) {
    bool acc = false;
    for (Mask sub = point;; sub = (sub - 1) & point) {
        acc ^= f.get(sub);
        if (sub == 0) break;
    }
    return acc;
}

inline TruthTable truth_table_of(const SparseAnf& f) { return moebius(to_dense(f)); }

/// C(n, i) for n <= 64 where it fits; saturates otherwise.
inline std::uint64_t binomial(unsigned n, unsigned i) {
    if (i > n) return 0;
    i = std::min(i, n - i);
    std::uint64_t r = 1;
    for (unsigned k = 1; k <= i; ++k) {
        const std::uint64_t num = n - i + k;
        if (r > UINT64_MAX / num) return UINT64_MAX;
        r = r * num / k;
    }
    return r;
}

/// Explicit monomials of a finite sigma-basis polynomial in n variables.
inline SparseAnf expand(const SymmetricPoly& p, unsigned n) {
    if (p.is_periodic()) throw std::invalid_argument("expand needs a finite polynomial; restrict it first");
    detail::check_vars(n);
    std::size_t total = p.constant() ? 1 : 0;
    for (Degree i : p.support()) {
        if (i > n) break;
        total += binomial(n, static_cast<unsigned>(i));
    }
    if (total > kExpandBudget)
        throw BudgetExceeded("expansion would produce " + std::to_string(total) + " monomials");

    std::vector<Mask> ms;
    ms.reserve(total);
    if (p.constant()) ms.push_back(0);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (Degree i : p.support()) {
        if (i > n) break;
        // Gosper's hack walks the i-subsets of n in increasing order.
        std::uint64_t m = (std::uint64_t{1} << i) - 1;
        while (m < limit) {
            ms.push_back(static_cast<Mask>(m));
            const std::uint64_t c = m & (~m + 1);
            const std::uint64_t r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return SparseAnf(n, std::move(ms));
}

/// Read an ANF back into the sigma basis; nullopt when it is not symmetric.
inline std::optional<SymmetricPoly> collect_symmetric(const SparseAnf& f) {
    const unsigned n = f.vars();
    std::vector<std::uint64_t> per_degree(n + 1, 0);
    for (Mask m : f.monomials()) ++per_degree[popcount(m)];
    bool constant = false;
    std::vector<Degree> degrees;
    for (unsigned i = 0; i <= n; ++i) {
        if (per_degree[i] == 0) continue;
        if (per_degree[i] != binomial(n, i)) return std::nullopt;
        if (i == 0) constant = true;
        else degrees.push_back(i);
    }
    return SymmetricPoly::finite(constant, std::move(degrees));
}

}  // namespace bsphere
