#pragma once

// Just-in-time project scheduling over max-plus.
//
// A project has n activities, a start-finish lag matrix C (c_ij: minimum lag
// between the initiation of activity j and the completion of activity i,
// completion as early as possible) and an optional start-start lag matrix D
// (d_ij: minimum lag between the initiations of j and i). Unspecified lags
// are -inf. The solver finds initiation times x minimizing the span
// (max - min) of the completion times y = C x subject to D x ≤ x, returning
// the optimum and the one-parameter family of optimal schedules
// x = α ⊗ x_dir, y = α ⊗ y_dir.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropic/closure.hpp"
#include "tropic/matrix.hpp"
#include "tropic/semifield.hpp"
#include "tropic/span_min.hpp"

namespace tropic {

struct project {
    std::vector<std::string> activities;
    matrix<max_plus> start_finish;                 // C, n×n
    std::optional<matrix<max_plus>> start_start;   // D, n×n
};

/// Span seminorm 1ᵀ y y⁻ 1 of a regular vector; in max-plus terms
/// max y_i − min y_i, zero exactly on constant vectors.
template <semifield S>
value<S> span(const matrix<S>& y) {
    if (!y.is_column())
        throw std::invalid_argument("span: column vector required");
    if (!is_regular_vector(y))
        throw std::invalid_argument("span: vector must be regular");
    const matrix<S> ones = matrix<S>::ones(y.rows(), 1);
    return (transpose(ones) * y).scalar() * (conjugate(y) * ones).scalar();
}

/// Optimal-span family: every real α gives an optimal schedule
/// x = α ⊗ start_dir, y = α ⊗ finish_dir with span(y) = min_span.
struct schedule_family {
    value<max_plus> min_span;
    matrix<max_plus> start_dir;
    matrix<max_plus> finish_dir;
};

struct infeasibility_info {
    double cycle_trace;        // Tr of the start-start matrix, > 0
    std::size_t cycle_length;  // smallest k with tr D^k > 0
};

struct irregularity_info {
    bool zero_row;  // false: zero column
    std::size_t index;
    std::string label;
};

struct solve_report {
    std::optional<schedule_family> family;
    std::optional<infeasibility_info> infeasible;
    std::optional<irregularity_info> irregular;
    std::vector<std::string> warnings;

    bool ok() const { return family.has_value(); }
};

namespace detail {

inline void check_project_dims(const project& p) {
    const std::size_t n = p.activities.size();
    if (n == 0) throw std::invalid_argument("project: no activities");
    if (p.start_finish.rows() != n || p.start_finish.cols() != n)
        throw std::invalid_argument("project: start-finish matrix must be n×n");
    if (p.start_start &&
        (p.start_start->rows() != n || p.start_start->cols() != n))
        throw std::invalid_argument("project: start-start matrix must be n×n");
}

inline std::optional<irregularity_info> find_irregularity(const project& p) {
    const auto& c = p.start_finish;
    for (std::size_t i = 0; i < c.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < c.cols(); ++j)
            if (c.raw(i, j) != max_plus::zero()) { nonzero = true; break; }
        if (!nonzero) return irregularity_info{true, i, p.activities[i]};
    }
    for (std::size_t j = 0; j < c.cols(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < c.rows(); ++i)
            if (c.raw(i, j) != max_plus::zero()) { nonzero = true; break; }
        if (!nonzero) return irregularity_info{false, j, p.activities[j]};
    }
    return std::nullopt;
}

// The interpretation of start-finish lags assumes c_ii ≥ 0; the solver only
// needs C regular, so violations warn rather than fail.
inline std::vector<std::string> diagonal_warnings(const project& p) {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < p.start_finish.rows(); ++i) {
        const double v = p.start_finish.raw(i, i);
        if (!(v >= 0.0))
            w.push_back("activity '" + p.activities[i] +
                        "': self lag c_ii is " + format_entry(v) +
                        ", expected >= 0");
    }
    return w;
}

}  // namespace detail

/// Minimize span(C x) subject to D x ≤ x. Solves the inequality first
/// (x = D* u over regular u), substitutes y = C D* u, minimizes over u and
/// back-substitutes.
inline solve_report solve_constrained(const project& p) {
    detail::check_project_dims(p);
    if (!p.start_start)
        throw std::invalid_argument(
            "solve_constrained: project has no start-start constraints");
    solve_report rep;
    rep.warnings = detail::diagonal_warnings(p);
    if (auto irr = detail::find_irregularity(p)) {
        rep.irregular = irr;
        return rep;
    }
    const star_result<max_plus> st = kleene_star(*p.start_start);
    if (!st.defined()) {
        rep.infeasible = infeasibility_info{st.cycle_trace.raw(),
                                            *st.positive_cycle_length};
        return rep;
    }
    const matrix<max_plus> cd = p.start_finish * *st.star;
    const span_solution<max_plus> sol = solve_symmetric(cd);  // u0 = (1ᵀ C D*)⁻
    rep.family = schedule_family{sol.delta, *st.star * sol.direction,
                                 cd * sol.direction};
    return rep;
}

/// Minimize span(C x) with start-start constraints absent or ignored.
inline solve_report solve_unconstrained(const project& p) {
    detail::check_project_dims(p);
    solve_report rep;
    rep.warnings = detail::diagonal_warnings(p);
    if (auto irr = detail::find_irregularity(p)) {
        rep.irregular = irr;
        return rep;
    }
    const span_solution<max_plus> sol = solve_symmetric(p.start_finish);
    rep.family = schedule_family{sol.delta, sol.direction,
                                 p.start_finish * sol.direction};
    return rep;
}

inline solve_report solve_project(const project& p, bool use_start_start) {
    if (use_start_start && p.start_start) return solve_constrained(p);
    return solve_unconstrained(p);
}

struct anchor_policy {
    enum class kind { fixed, due, earliest };
    kind k = kind::earliest;
    double v = 0.0;  // α for fixed, due date for due

    static anchor_policy alpha(double a) { return {kind::fixed, a}; }
    static anchor_policy due(double t) { return {kind::due, t}; }
    static anchor_policy earliest() { return {kind::earliest, 0.0}; }
};

struct schedule {
    matrix<max_plus> start;   // x
    matrix<max_plus> finish;  // y
    value<max_plus> span;
    double alpha = 0.0;
};

namespace detail {
inline double max_entry(const matrix<max_plus>& v) {
    double m = -infty;
    for (std::size_t i = 0; i < v.dim(); ++i) m = std::max(m, v.vraw(i));
    return m;
}
inline double min_entry(const matrix<max_plus>& v) {
    double m = infty;
    for (std::size_t i = 0; i < v.dim(); ++i) m = std::min(m, v.vraw(i));
    return m;
}
}  // namespace detail

/// Pick a concrete schedule from an optimal family: a fixed α, the α that
/// makes the latest completion hit a due date, or the α that makes the
/// earliest initiation time zero.
inline schedule anchor(const schedule_family& f, const anchor_policy& pol) {
    double alpha = 0.0;
    switch (pol.k) {
        case anchor_policy::kind::fixed: alpha = pol.v; break;
        case anchor_policy::kind::due:
            alpha = pol.v - detail::max_entry(f.finish_dir);
            break;
        case anchor_policy::kind::earliest:
            alpha = -detail::min_entry(f.start_dir);
            break;
    }
    const value<max_plus> a(alpha);
    return schedule{a * f.start_dir, a * f.finish_dir, f.min_span, alpha};
}

struct violation {
    enum class kind { completion_mismatch, start_lag_violated, span_mismatch };
    kind what;
    std::size_t index;  // activity row (0 for span_mismatch)
    double expected;
    double actual;
};

struct validation_report {
    std::vector<violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Check a concrete schedule against a project: C x = y exactly (each
/// completion attains its tightest start-finish bound), D x ≤ x entrywise
/// when present, and the reported span matches span(y). Never throws on
/// constraint failure; it reports.
inline validation_report validate(const project& p, const schedule& s) {
    detail::check_project_dims(p);
    const std::size_t n = p.activities.size();
    if (!s.start.is_column() || !s.finish.is_column() || s.start.rows() != n ||
        s.finish.rows() != n)
        throw std::invalid_argument("validate: schedule size mismatch");
    validation_report rep;
    const matrix<max_plus> cx = p.start_finish * s.start;
    for (std::size_t i = 0; i < n; ++i)
        if (cx.vraw(i) != s.finish.vraw(i))
            rep.violations.push_back({violation::kind::completion_mismatch, i,
                                      cx.vraw(i), s.finish.vraw(i)});
    if (p.start_start) {
        const matrix<max_plus> dx = *p.start_start * s.start;
        for (std::size_t i = 0; i < n; ++i)
            if (!(dx.vraw(i) <= s.start.vraw(i)))
                rep.violations.push_back({violation::kind::start_lag_violated, i,
                                          dx.vraw(i), s.start.vraw(i)});
    }
    if (is_regular_vector(s.finish)) {
        const value<max_plus> sp = span(s.finish);
        if (sp != s.span)
            rep.violations.push_back({violation::kind::span_mismatch, 0,
                                      sp.raw(), s.span.raw()});
    }
    return rep;
}

}  // namespace tropic
