#pragma once

// Bounded Kleene star and the regular solutions of A x ≤ x.
//
// For square A of order n, cycle_trace(A) = tr A ⊕ ... ⊕ tr A^n. When
// cycle_trace(A) ≤ 1 the star A* = I ⊕ A ⊕ ... ⊕ A^{n-1} exists and
// x = A* u ranges over all regular solutions of A x ≤ x as u ranges over
// regular vectors; when cycle_trace(A) > 1 there is no regular solution.
// Infeasibility is reported as a value, not an exception, so callers can
// surface the diagnosis verbatim.

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "tropic/matrix.hpp"
#include "tropic/semifield.hpp"

namespace tropic {

template <semifield S>
struct star_result {
    value<S> cycle_trace;
    /// I ⊕ A ⊕ ... ⊕ A^{n-1}; present iff cycle_trace ≤ 1.
    std::optional<matrix<S>> star;
    /// Smallest k with tr(A^k) > 1, when any.
    std::optional<std::size_t> positive_cycle_length;

    bool defined() const { return star.has_value(); }
};

// Powers accumulate in one pass since every trace tr A^1..tr A^n is needed.
template <semifield S>
star_result<S> kleene_star(const matrix<S>& a) {
    if (!a.is_square())
        throw std::invalid_argument("kleene_star: matrix must be square");
    const std::size_t n = a.rows();
    matrix<S> sum = matrix<S>::identity(n);
    matrix<S> power = a;
    value<S> tr_acc = value<S>::zero();
    std::optional<std::size_t> bad_k;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) power = power * a;
        const value<S> t = trace(power);
        if (!bad_k && !leq(t, value<S>::one())) bad_k = k;
        tr_acc = tr_acc + t;
        if (k + 1 <= n) sum = sum + power;
    }
    star_result<S> r{tr_acc, std::nullopt, bad_k};
    if (leq(tr_acc, value<S>::one())) r.star = std::move(sum);
    return r;
}

template <semifield S>
value<S> cycle_trace(const matrix<S>& a) {
    if (!a.is_square())
        throw std::invalid_argument("cycle_trace: matrix must be square");
    return kleene_star(a).cycle_trace;
}

template <semifield S>
struct inequality_solution {
    /// A* ⊗ u; present iff the inequality admits regular solutions.
    std::optional<matrix<S>> x;
    value<S> cycle_trace;
    std::optional<std::size_t> positive_cycle_length;

    bool feasible() const { return x.has_value(); }
};

/// Regular solution of A x ≤ x generated by the regular vector u.
template <semifield S>
inequality_solution<S> solve_ax_leq_x(const matrix<S>& a, const matrix<S>& u) {
    if (!a.is_square())
        throw std::invalid_argument("solve_ax_leq_x: matrix must be square");
    if (!u.is_column() || u.rows() != a.rows())
        throw std::invalid_argument("solve_ax_leq_x: u must be a column of matching order");
    if (!is_regular_vector(u))
        throw std::invalid_argument("solve_ax_leq_x: u must be regular");
    star_result<S> s = kleene_star(a);
    inequality_solution<S> r{std::nullopt, s.cycle_trace, s.positive_cycle_length};
    if (s.star) r.x = *s.star * u;
    return r;
}

}  // namespace tropic
