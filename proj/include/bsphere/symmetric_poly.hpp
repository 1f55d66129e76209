#pragma once

// Symmetric square-free polynomials over F2, written in the basis of
// elementary symmetric functions sigma_i.
//
// A SymmetricPoly is either finite (a set of degrees with coefficient 1) or
// periodic: a power-of-two period tau and a window of residues in [1, tau],
// meaning a_i = window[((i - 1) mod tau) + 1] for every i >= 1. The
// coefficient of sigma_0 = 1 is held separately as a constant bit.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bsphere/bit_index.hpp"
#include "bsphere/errors.hpp"

namespace bsphere {

namespace detail {

// Sort and cancel equal pairs (F2 accumulation).
inline void xor_normalize(std::vector<Degree>& v) {
    std::sort(v.begin(), v.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2 == 1) v[out++] = v[i];
        i = j;
    }
    v.resize(out);
}

}  // namespace detail

class SymmetricPoly {
public:
    SymmetricPoly() = default;

    static SymmetricPoly zero() { return {}; }

    static SymmetricPoly one() {
        SymmetricPoly p;
        p.constant_ = true;
        return p;
    }

    static SymmetricPoly sigma(Degree i) {
        if (i == 0) return one();
        return finite(false, {i});
    }

    /// Repeated degrees cancel in pairs.
    static SymmetricPoly finite(bool constant, std::vector<Degree> degrees) {
        for (Degree d : degrees) {
            if (d == 0) throw std::invalid_argument("degree 0 belongs in the constant bit");
            if (d > kMaxDegree) throw BudgetExceeded("degree " + std::to_string(d) + " exceeds cap");
        }
        detail::xor_normalize(degrees);
        SymmetricPoly p;
        p.constant_ = constant;
        p.support_ = std::move(degrees);
        return p;
    }

    static SymmetricPoly periodic(bool constant, Degree period, std::vector<Degree> window) {
        if (!is_power_of_two(period) || period > kMaxDegree)
            throw std::invalid_argument("period must be a power of two within the degree cap");
        for (Degree r : window)
            if (r == 0 || r > period) throw std::invalid_argument("window residue outside [1, period]");
        detail::xor_normalize(window);
        SymmetricPoly p;
        p.constant_ = constant;
        p.period_ = period;
        p.support_ = std::move(window);
        return p;
    }

    bool is_periodic() const noexcept { return period_ != 0; }
    bool constant() const noexcept { return constant_; }
    /// 0 for finite polynomials.
    Degree period() const noexcept { return period_; }
    /// Finite: the supported degrees. Periodic: the window residues in [1, period].
    std::span<const Degree> support() const noexcept { return support_; }
    bool is_zero() const noexcept { return !constant_ && support_.empty(); }

    bool coefficient(Degree i) const {
        if (i == 0) return constant_;
        if (is_periodic()) i = ((i - 1) & (period_ - 1)) + 1;
        return std::binary_search(support_.begin(), support_.end(), i);
    }

    friend bool operator==(const SymmetricPoly&, const SymmetricPoly&) = default;

private:
    bool constant_ = false;
    Degree period_ = 0;
    std::vector<Degree> support_;
};

/// Product in the sigma basis. Both operands must be finite.
inline SymmetricPoly poly_mul(const SymmetricPoly& p, const SymmetricPoly& q) {
    if (p.is_periodic() || q.is_periodic())
        throw std::invalid_argument("poly_mul needs finite operands; restrict periodic polynomials first");
    std::vector<Degree> acc;
    acc.reserve((p.support().size() + 1) * (q.support().size() + 1));
    if (q.constant()) acc.insert(acc.end(), p.support().begin(), p.support().end());
    if (p.constant()) acc.insert(acc.end(), q.support().begin(), q.support().end());
    for (Degree i : p.support())
        for (Degree j : q.support()) acc.push_back(sigma_mul(i, j));
    return SymmetricPoly::finite(p.constant() && q.constant(), std::move(acc));
}

/// Unroll a periodic polynomial through degree n; finite polynomials just drop degrees above n.
inline SymmetricPoly restrict_to(const SymmetricPoly& p, Degree n) {
    std::vector<Degree> out;
    if (!p.is_periodic()) {
        for (Degree d : p.support())
            if (d <= n) out.push_back(d);
        return SymmetricPoly::finite(p.constant(), std::move(out));
    }
    const Degree tau = p.period();
    for (Degree base = 0; base < n; base += tau) {
        for (Degree r : p.support()) {
            if (base + r > n) break;
            out.push_back(base + r);
        }
        if (n - base < tau) break;
    }
    return SymmetricPoly::finite(p.constant(), std::move(out));
}

/// Sum in F2. Operands must both be finite or both periodic.
inline SymmetricPoly poly_add(const SymmetricPoly& p, const SymmetricPoly& q) {
    if (p.is_periodic() != q.is_periodic())
        throw std::invalid_argument("poly_add cannot mix finite and periodic operands");
    const bool c = p.constant() != q.constant();
    if (!p.is_periodic()) {
        std::vector<Degree> acc(p.support().begin(), p.support().end());
        acc.insert(acc.end(), q.support().begin(), q.support().end());
        return SymmetricPoly::finite(c, std::move(acc));
    }
    // Periods are powers of two, so the lcm is the larger one.
    const Degree tau = std::max(p.period(), q.period());
    std::vector<Degree> acc;
    for (const SymmetricPoly* x : {&p, &q}) {
        for (Degree base = 0; base < tau; base += x->period())
            for (Degree r : x->support()) acc.push_back(base + r);
    }
    return SymmetricPoly::periodic(c, tau, std::move(acc));
}

inline SymmetricPoly operator*(const SymmetricPoly& p, const SymmetricPoly& q) { return poly_mul(p, q); }
inline SymmetricPoly operator+(const SymmetricPoly& p, const SymmetricPoly& q) { return poly_add(p, q); }

/// Value of p on any point of Hamming weight w: sigma_i(v) = 1 iff b(i) is inside b(w).
inline bool eval_at_weight(const SymmetricPoly& p, Degree w) {
    bool acc = p.constant();
    const auto supp = p.support();
    if (!p.is_periodic()) {
        for (Degree i : supp) {
            if (i > w) break;
            acc ^= binom_parity(w, i);
        }
        return acc;
    }
    const Degree tau = p.period();
    const unsigned ones = popcount(w);
    const Degree laps = w / tau + 1;
    // Walk whichever is shorter: the unrolled support up to w, or the submasks of w.
    if (ones < 40 && (Degree{1} << ones) < laps * (supp.size() + 1)) {
        for (Degree sub = w; sub != 0; sub = (sub - 1) & w) acc ^= p.coefficient(sub);
        return acc;
    }
    for (Degree base = 0; base <= w; base += tau) {
        for (Degree r : supp) {
            if (base + r > w) break;
            acc ^= binom_parity(w, base + r);
        }
        if (w - base < tau) break;
    }
    return acc;
}

/// Substitute y_e -> sigma_{2^e} into a polynomial of F2[y_0, ..., y_s].
/// Each monomial is a bit mask over the indeterminates (bit e = y_e); the
/// empty monomial is the constant 1.
inline SymmetricPoly from_power_basis(std::span<const std::uint64_t> monomials) {
    bool constant = false;
    std::vector<Degree> degrees;
    for (std::uint64_t m : monomials) {
        if (m > kMaxDegree) throw BudgetExceeded("power-basis monomial exceeds the degree cap");
        if (m == 0) {
            constant = !constant;
            continue;
        }
        Degree h = 0;
        for (std::uint64_t rest = m; rest != 0; rest &= rest - 1)
            h = h == 0 ? std::uint64_t{1} << std::countr_zero(rest)
                       : sigma_mul(h, std::uint64_t{1} << std::countr_zero(rest));
        degrees.push_back(h);
    }
    return SymmetricPoly::finite(constant, std::move(degrees));
}

}  // namespace bsphere
