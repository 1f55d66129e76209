#pragma once

// phi_t: the ANF that vanishes exactly on vectors of weight < t.
// rho_t: the ANF of the indicator of weight exactly t.
//
// Both are symmetric, so they live in the sigma basis. With 2^(s-1) < t <= 2^s
// the coefficients a_{t,i} are zero below t and periodic with period 2^s, so a
// built polynomial is returned in periodic form. Odd t runs the coefficient
// recurrence
//
//     a_{t,t} = 1,   a_{t,i} = 1 + sum_{j=t}^{i-1} a_{t,j} * C(i, j)  (mod 2),
//
// over the window [t, 2^s]. Even t = r * 2^e reuses the window of phi_r with
// every index and the period scaled by 2^e.

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsphere/bit_index.hpp"
#include "bsphere/errors.hpp"
#include "bsphere/symmetric_poly.hpp"

namespace bsphere {

/// Longest odd-part window [r, 2^s] the recurrence will run over.
inline constexpr Degree kMaxWindowLength = Degree{1} << 16;

namespace detail {

inline void check_threshold(Degree t) {
    if (t > kMaxThreshold)
        throw BudgetExceeded("threshold " + std::to_string(t) + " is above the cap 2^32");
}

// Indices i in [r, 2^s] with a_{r,i} = 1, for odd r.
inline std::vector<Degree> odd_window(Degree r) {
    const Degree top = ceil_pow2(r);
    const Degree len = top - r + 1;
    if (len > kMaxWindowLength)
        throw BudgetExceeded("coefficient window of length " + std::to_string(len) + " for odd part " +
                             std::to_string(r) + " exceeds " + std::to_string(kMaxWindowLength));
    std::vector<std::uint8_t> a(len, 0);
    a[0] = 1;
    for (Degree i = r + 1; i <= top; ++i) {
        std::uint8_t acc = 1;
        // Only j inside b(i) have C(i, j) odd. Submasks come out in decreasing
        // order, so stop at the first one below r.
        for (Degree j = (i - 1) & i; j >= r; j = (j - 1) & i) {
            acc ^= a[j - r];
        }
        a[i - r] = acc;
    }
    std::vector<Degree> out;
    for (Degree k = 0; k < len; ++k)
        if (a[k]) out.push_back(r + k);
    return out;
}

}  // namespace detail

/// Shape of phi_t: threshold, s with 2^(s-1) < t <= 2^s, period and the window indices a_{t,i} = 1.
struct SphereFamily {
    Degree t = 0;
    unsigned s = 0;
    Degree period = 1;
    std::vector<Degree> window;
};

inline SphereFamily phi_family(Degree t) {
    detail::check_threshold(t);
    if (t == 0) return {};
    const unsigned e = static_cast<unsigned>(std::countr_zero(t));
    const Degree r = t >> e;
    SphereFamily f;
    f.t = t;
    f.period = ceil_pow2(r) << e;
    f.s = static_cast<unsigned>(std::countr_zero(f.period));
    f.window = detail::odd_window(r);
    for (Degree& i : f.window) i <<= e;
    return f;
}

/// phi_0 is the constant 1.
inline SymmetricPoly build_phi(Degree t) {
    if (t == 0) return SymmetricPoly::periodic(true, 1, {});
    SphereFamily f = phi_family(t);
    return SymmetricPoly::periodic(false, f.period, std::move(f.window));
}

/// Closed forms for t = 2^s, t = 2^s - 1 and t = 2^(s-1) + 1; nullopt for any other t.
inline std::optional<SymmetricPoly> build_phi_closed(Degree t) {
    detail::check_threshold(t);
    if (t == 0) return std::nullopt;
    const Degree top = ceil_pow2(t);
    if (t == top) return SymmetricPoly::periodic(false, top, {top});
    if (t == top - 1) return SymmetricPoly::periodic(false, top, {top - 1, top});
    if (t == top / 2 + 1) {
        if (top - t + 1 > kMaxWindowLength) throw BudgetExceeded("closed-form window too long");
        std::vector<Degree> w;
        for (Degree i = t; i <= top; ++i) w.push_back(i);
        return SymmetricPoly::periodic(false, top, std::move(w));
    }
    return std::nullopt;
}

/// rho_t = phi_t + phi_{t+1}; rho_0 = 1 + phi_1.
inline SymmetricPoly build_rho(Degree t) {
    if (t >= kMaxThreshold) detail::check_threshold(t + 1);
    return poly_add(build_phi(t), build_phi(t + 1));
}

/// Factors of phi_t around the power of two tau = 2^s >= t:
///   psi = phi_tau + 1 (periodic), eta = sum_{i=t}^{tau} a_{t,i} sigma_i (finite).
/// psi is the indicator of weight < tau and eta agrees with phi_t there, so
/// 1 + phi_t = psi * (1 + eta) after restriction to any n. The product
/// psi * eta alone matches phi_t only below weight tau.
inline std::pair<SymmetricPoly, SymmetricPoly> phi_factor_parts(Degree t) {
    if (t == 0) throw std::invalid_argument("phi_factor_parts needs t >= 1");
    SphereFamily f = phi_family(t);
    SymmetricPoly psi = SymmetricPoly::periodic(true, f.period, {f.period});
    SymmetricPoly eta = SymmetricPoly::finite(false, std::move(f.window));
    return {std::move(psi), std::move(eta)};
}

/// Sum of rho_w restricted to n over the weights w with values[w] = 1
/// (values has n + 1 entries, one per weight 0..n).
inline SymmetricPoly expand_in_rho_basis(const std::vector<bool>& values) {
    if (values.empty()) throw std::invalid_argument("weight profile needs at least one entry");
    const Degree n = values.size() - 1;
    SymmetricPoly acc = SymmetricPoly::zero();
    for (Degree w = 0; w <= n; ++w)
        if (values[w]) acc = poly_add(acc, restrict_to(build_rho(w), n));
    return acc;
}

/// Same profile in the phi basis: f = f_0 + sum_{t=1}^{n} (f_t + f_{t-1}) phi_t.
inline SymmetricPoly expand_in_phi_basis(const std::vector<bool>& values) {
    if (values.empty()) throw std::invalid_argument("weight profile needs at least one entry");
    const Degree n = values.size() - 1;
    SymmetricPoly acc = SymmetricPoly::finite(values[0], {});
    for (Degree t = 1; t <= n; ++t)
        if (values[t] != values[t - 1]) acc = poly_add(acc, restrict_to(build_phi(t), n));
    return acc;
}

struct TableRow {
    Degree t = 0;
    Degree phi_period = 0;
    std::vector<Degree> phi_indices;
    Degree rho_period = 0;
    std::vector<Degree> rho_indices;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Rows t = 1..max_t: for phi and rho, the period and the indices with a_i = 1 inside [t, period].
inline std::vector<TableRow> emit_table(Degree max_t) {
    if (max_t == 0) throw std::invalid_argument("table needs max_t >= 1");
    std::vector<TableRow> rows;
    rows.reserve(max_t);
    for (Degree t = 1; t <= max_t; ++t) {
        const SymmetricPoly phi = build_phi(t);
        const SymmetricPoly rho = build_rho(t);
        rows.push_back({t, phi.period(), {phi.support().begin(), phi.support().end()}, rho.period(),
                        {rho.support().begin(), rho.support().end()}});
    }
    return rows;
}

/// Comma list with runs of three or more written "a..b".
inline std::string format_index_runs(const std::vector<Degree>& idx) {
    std::string out;
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j + 1 < idx.size() && idx[j + 1] == idx[j] + 1) ++j;
        if (!out.empty()) out += ",";
        if (j - i >= 2) {
            out += std::to_string(idx[i]) + ".." + std::to_string(idx[j]);
        } else {
            out += std::to_string(idx[i]);
            for (std::size_t k = i + 1; k <= j; ++k) out += "," + std::to_string(idx[k]);
        }
        i = j + 1;
    }
    return out;
}

/// Fixed-width layout: "t | tau | phi_t | tau | rho_t", phi column padded to the widest entry.
inline std::string format_table(const std::vector<TableRow>& rows) {
    auto pad_left = [](std::string s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
    auto pad_right = [](std::string s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    std::size_t num_w = 3, phi_w = 5;
    for (const auto& r : rows) {
        num_w = std::max({num_w, std::to_string(r.t).size(), std::to_string(r.rho_period).size()});
        phi_w = std::max(phi_w, format_index_runs(r.phi_indices).size());
    }
    std::string out = pad_left("t", num_w) + " | " + pad_left("tau", num_w) + " | " + pad_right("phi_t", phi_w) +
                      " | " + pad_left("tau", num_w) + " | rho_t\n";
    for (const auto& r : rows) {
        out += pad_left(std::to_string(r.t), num_w) + " | " + pad_left(std::to_string(r.phi_period), num_w) + " | " +
               pad_right(format_index_runs(r.phi_indices), phi_w) + " | " +
               pad_left(std::to_string(r.rho_period), num_w) + " | " + format_index_runs(r.rho_indices) + "\n";
    }
    return out;
}

}  // namespace bsphere
