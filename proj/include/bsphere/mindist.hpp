#pragma once

// Minimum weight / minimum distance through the composition identity
//
//     w >= t   iff   phi_t^(n) o F = phi_1^(k),
//
// where phi_t^(n) is phi_t restricted to n variables and w is the minimum
// weight of F(v) over v != 0. For a linear code w is the minimum distance.
//
// Two backends decide the identity. The evaluation backend compares both
// sides on all 2^k points. The symbolic backend expands phi_t^(n) into
// monomials, substitutes each x_j by the ANF of the j-th coordinate of F,
// reduces with y_i^2 = y_i and compares monomial sets.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bsphere/anf.hpp"
#include "bsphere/code.hpp"
#include "bsphere/errors.hpp"
#include "bsphere/sphere.hpp"
#include "bsphere/symmetric_poly.hpp"

namespace bsphere {

enum class Method { eval, symbolic };

enum class DistanceVerdict { d_lt_t, inconclusive };

struct DistanceResult {
    unsigned d = 0;
    unsigned checks_performed = 0;
};

/// Symbolic composition: cap on (substitution steps) x (words per k-variable ANF).
inline constexpr std::uint64_t kSymbolicWorkBudget = std::uint64_t{1} << 30;

namespace detail {

// Value of phi_t on each weight 0..n, read off the built polynomial.
inline std::vector<bool> phi_weight_profile(Degree t, unsigned n) {
    const SymmetricPoly phi = build_phi(t);
    std::vector<bool> profile(n + 1);
    for (unsigned w = 0; w <= n; ++w) profile[w] = eval_at_weight(phi, w);
    return profile;
}

template <class Images>
bool identity_holds_eval(const Images& images, unsigned k, unsigned n, Degree t) {
    const auto phi_t = phi_weight_profile(t, n);
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t v = 0; v < count; ++v) {
        // phi_1^(k)(v) is 1 exactly for v != 0.
        if (phi_t[popcount(images(v))] != (v != 0)) return false;
    }
    return true;
}

// P * y_i in the square-free ring.
inline void mul_by_var(DenseAnf& p, unsigned i) {
    auto w = p.words();
    if (i < 6) {
        const std::uint64_t lo = kLowHalf[i];
        const unsigned shift = 1u << i;
        for (auto& x : w) x = (x & ~lo) ^ ((x & lo) << shift);
        return;
    }
    const std::size_t step = std::size_t{1} << (i - 6);
    for (std::size_t base = 0; base < w.size(); base += 2 * step)
        for (std::size_t q = 0; q < step; ++q) {
            w[base + step + q] ^= w[base + q];
            w[base + q] = 0;
        }
}

inline DenseAnf mul(const DenseAnf& p, const SparseAnf& q) {
    DenseAnf acc(p.vars());
    for (Mask b : q.monomials()) {
        DenseAnf term = p;
        for (Mask rest = b; rest != 0; rest &= rest - 1) mul_by_var(term, static_cast<unsigned>(std::countr_zero(rest)));
        for (std::size_t i = 0; i < acc.words().size(); ++i) acc.words()[i] ^= term.words()[i];
    }
    return acc;
}

// Compose the expanded outer polynomial with the coordinate ANFs.
inline DenseAnf compose(const SparseAnf& outer, const std::vector<SparseAnf>& coords, unsigned k) {
    std::uint64_t work = 0;
    const std::uint64_t words = detail::words_for(k);
    for (Mask m : outer.monomials()) {
        std::uint64_t steps = 0;
        for (Mask rest = m; rest != 0; rest &= rest - 1)
            steps += coords[static_cast<std::size_t>(std::countr_zero(rest))].size();
        work += steps * words;
        if (work > kSymbolicWorkBudget) throw BudgetExceeded("symbolic composition exceeds the work budget");
    }

    DenseAnf one(k);
    one.set(0, true);
    DenseAnf result(k);
    // Masks sharing their high bits are contiguous in ascending order, so keep
    // partial products for the variables taken from the top down.
    std::vector<std::pair<unsigned, DenseAnf>> stack;
    for (Mask m : outer.monomials()) {
        std::vector<unsigned> vars;
        for (int b = 31; b >= 0; --b)
            if ((m >> b) & 1u) vars.push_back(static_cast<unsigned>(b));
        std::size_t keep = 0;
        while (keep < stack.size() && keep < vars.size() && stack[keep].first == vars[keep]) ++keep;
        stack.resize(keep);
        for (std::size_t i = keep; i < vars.size(); ++i) {
            const DenseAnf& prev = stack.empty() ? one : stack.back().second;
            stack.emplace_back(vars[i], mul(prev, coords[vars[i]]));
        }
        const DenseAnf& prod = stack.empty() ? one : stack.back().second;
        for (std::size_t i = 0; i < result.words().size(); ++i) result.words()[i] ^= prod.words()[i];
    }
    return result;
}

inline bool identity_holds_symbolic(const std::vector<SparseAnf>& coords, unsigned k, unsigned n, Degree t) {
    const SparseAnf outer = expand(restrict_to(build_phi(t), n), n);
    const DenseAnf lhs = compose(outer, coords, k);
    const SparseAnf rhs = expand(restrict_to(build_phi(1), k), k);
    return to_sparse(lhs) == rhs;
}

inline std::vector<SparseAnf> linear_coordinates(const GeneratorMatrix& g) {
    std::vector<SparseAnf> coords;
    for (unsigned j = 0; j < g.n(); ++j) {
        std::vector<Mask> terms;
        for (unsigned i = 0; i < g.k(); ++i)
            if ((g.rows()[i] >> j) & 1u) terms.push_back(Mask{1} << i);
        coords.emplace_back(g.k(), std::move(terms));
    }
    return coords;
}

// Coordinate j of F as an ANF in k variables.
inline std::vector<SparseAnf> map_coordinates(const CodeMap& f) {
    std::vector<SparseAnf> coords;
    for (unsigned j = 0; j < f.n(); ++j) {
        TruthTable tt(f.k());
        for (std::size_t v = 0; v < f.images().size(); ++v) tt.set(v, (f(v) >> j) & 1u);
        coords.push_back(to_sparse(moebius(tt)));
    }
    return coords;
}

inline void check_symbolic_size(unsigned k, unsigned n) {
    if (n > kMaxDenseVars || k > kMaxDenseVars)
        throw BudgetExceeded("symbolic backend needs n, k <= " + std::to_string(kMaxDenseVars));
}

}  // namespace detail

/// Decides phi_t^(n) o F = phi_1^(k), i.e. every F(v) with v != 0 has weight >= t.
inline bool weight_at_least(const CodeMap& f, Degree t, Method method = Method::eval) {
    if (t == 0) throw std::invalid_argument("threshold must be >= 1");
    if (method == Method::eval) return detail::identity_holds_eval(f, f.k(), f.n(), t);
    detail::check_symbolic_size(f.k(), f.n());
    return detail::identity_holds_symbolic(detail::map_coordinates(f), f.k(), f.n(), t);
}

/// Linear case; the matrix must have full rank.
inline bool weight_at_least(const GeneratorMatrix& g, Degree t, Method method = Method::eval) {
    if (t == 0) throw std::invalid_argument("threshold must be >= 1");
    g.require_full_rank();
    if (method == Method::eval) {
        if (g.k() > kMaxMessageBits) throw BudgetExceeded("eval backend needs k <= 24");
        return detail::identity_holds_eval([&g](std::uint64_t v) { return g.encode(v); }, g.k(), g.n(), t);
    }
    detail::check_symbolic_size(g.k(), g.n());
    return detail::identity_holds_symbolic(detail::linear_coordinates(g), g.k(), g.n(), t);
}

namespace detail {

// Largest t in [1, n] passing the check. t = 1 is taken as certified; each
// step keeps "lo passes, hi + 1 fails".
template <class Check>
DistanceResult search_threshold(unsigned n, Check&& check) {
    DistanceResult r{1, 0};
    unsigned hi = n;
    while (r.d < hi) {
        const unsigned mid = r.d + (hi - r.d + 1) / 2;
        ++r.checks_performed;
        if (check(mid)) r.d = mid;
        else hi = mid - 1;
    }
    return r;
}

}  // namespace detail

/// Minimum distance of a full-rank linear code by binary search over t in [1, n].
inline DistanceResult min_distance(const GeneratorMatrix& g, Method method = Method::eval) {
    g.require_full_rank();
    return detail::search_threshold(g.n(), [&](unsigned t) { return weight_at_least(g, t, method); });
}

/// Minimum weight over v != 0 of an arbitrary map. Only the weight: for
/// nonlinear codes the distance can be smaller.
inline DistanceResult min_weight(const CodeMap& f, Method method = Method::eval) {
    if (!weight_at_least(f, 1, method)) return {0, 1};
    auto r = detail::search_threshold(f.n(), [&](unsigned t) { return weight_at_least(f, t, method); });
    ++r.checks_performed;
    return r;
}

/// A failed identity proves d < t; a passing one says nothing about d.
inline DistanceVerdict weight_bound_nonlinear(const CodeMap& f, Degree t) {
    return weight_at_least(f, t, Method::eval) ? DistanceVerdict::inconclusive : DistanceVerdict::d_lt_t;
}

/// min over v != 0 of popcount(F(v)), by enumeration.
inline unsigned brute_force_min_weight(const CodeMap& f) {
    unsigned best = f.n() + 1;
    for (std::size_t v = 1; v < f.images().size(); ++v) best = std::min(best, popcount(f(v)));
    return best;
}

inline unsigned brute_force_min_weight(const GeneratorMatrix& g) {
    if (g.k() > kMaxMessageBits) throw BudgetExceeded("enumeration needs k <= 24");
    unsigned best = g.n() + 1;
    // Gray-code walk: one row XOR per message.
    Word c = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << g.k()); ++i) {
        c ^= g.rows()[static_cast<std::size_t>(std::countr_zero(i))];
        best = std::min(best, popcount(c));
    }
    return best;
}

}  // namespace bsphere
