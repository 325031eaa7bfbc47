#pragma once

// Brute-force grid search over integer vectors, max-plus only.
//
// Exists to check the closed-form solvers on desk-scale instances, not to
// solve anything at scale: every integer point of a box is enumerated and
// evaluated in exact integer arithmetic. Ties are broken by the
// lexicographically smallest argmin, so results are deterministic.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tropic/matrix.hpp"
#include "tropic/semifield.hpp"
#include "tropic/span_min.hpp"

namespace tropic {

struct grid_spec {
    long long lo = -15;
    long long hi = 15;
    long long step = 1;
    std::uint64_t cap = 1'000'000;  // maximum number of grid points
};

struct grid_result {
    /// False when no grid point satisfies the constraints (distinct from the
    /// analytic no-regular-solution case).
    bool feasible = false;
    long long best = 0;
    std::vector<long long> argmin;
};

namespace detail {

inline constexpr long long int_zero = std::numeric_limits<long long>::min();

// Integer image of a max-plus matrix; -inf maps to a sentinel. Entries must
// be integer-valued.
inline std::vector<long long> to_ints(const matrix<max_plus>& a) {
    std::vector<long long> r;
    r.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double v = a.raw(i, j);
            if (v == -infty) {
                r.push_back(int_zero);
            } else {
                if (std::nearbyint(v) != v || std::abs(v) > 1e15)
                    throw std::invalid_argument(
                        "grid search: entries must be integers");
                r.push_back(static_cast<long long>(v));
            }
        }
    return r;
}

// y_i = max_j (m_ij + x_j) over finite entries; int_zero when the row is all
// -inf.
inline void int_mat_vec(const std::vector<long long>& m, std::size_t rows,
                        std::size_t cols, const std::vector<long long>& x,
                        std::vector<long long>& out) {
    for (std::size_t i = 0; i < rows; ++i) {
        long long best = int_zero;
        for (std::size_t j = 0; j < cols; ++j) {
            const long long e = m[i * cols + j];
            if (e == int_zero) continue;
            const long long v = e + x[j];
            if (best == int_zero || v > best) best = v;
        }
        out[i] = best;
    }
}

inline std::uint64_t grid_point_count(const grid_spec& g, std::size_t dim) {
    if (g.lo > g.hi) throw std::invalid_argument("grid search: lo > hi");
    if (g.step <= 0) throw std::invalid_argument("grid search: step must be positive");
    const std::uint64_t per_axis =
        static_cast<std::uint64_t>((g.hi - g.lo) / g.step) + 1;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < dim; ++k) {
        if (total > g.cap / per_axis + 1) return g.cap + 1;
        total *= per_axis;
    }
    return total;
}

// Odometer in lexicographic order; returns false after the last point.
inline bool next_point(std::vector<long long>& x, const grid_spec& g) {
    for (std::size_t k = x.size(); k-- > 0;) {
        if (x[k] + g.step <= g.hi) {
            x[k] += g.step;
            for (std::size_t j = k + 1; j < x.size(); ++j) x[j] = g.lo;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Minimum of span(C x) over integer x in the grid, subject to D x ≤ x when
/// D is given. Exact integer arithmetic throughout.
inline grid_result grid_min_span(const matrix<max_plus>& c,
                                 const std::optional<matrix<max_plus>>& d,
                                 const grid_spec& g) {
    if (!c.is_square())
        throw std::invalid_argument("grid_min_span: C must be square");
    const std::size_t n = c.rows();
    if (d && (d->rows() != n || d->cols() != n))
        throw std::invalid_argument("grid_min_span: D must match C");
    if (detail::grid_point_count(g, n) > g.cap)
        throw std::invalid_argument("grid search: grid exceeds point cap");

    const std::vector<long long> ci = detail::to_ints(c);
    std::vector<long long> di;
    if (d) di = detail::to_ints(*d);

    grid_result res;
    std::vector<long long> x(n, g.lo), y(n);
    do {
        if (d) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const long long e = di[i * n + j];
                    if (e != detail::int_zero && e + x[j] > x[i]) { ok = false; break; }
                }
            if (!ok) continue;
        }
        detail::int_mat_vec(ci, n, n, x, y);
        long long hi = detail::int_zero, lo = 0;
        bool all_finite = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i] == detail::int_zero) { all_finite = false; break; }
            if (i == 0 || y[i] > hi) hi = y[i];
            if (i == 0 || y[i] < lo) lo = y[i];
        }
        if (!all_finite) continue;  // span undefined off the regular set
        const long long sp = hi - lo;
        if (!res.feasible || sp < res.best) {
            res.feasible = true;
            res.best = sp;
            res.argmin = x;
        }
    } while (detail::next_point(x, g));
    return res;
}

/// Minimum of q⁻ B x (A x)⁻ p over integer x in the grid, evaluated directly
/// from the definition.
inline grid_result grid_min_objective(const span_problem<max_plus>& pr,
                                      const grid_spec& g) {
    const std::size_t m = pr.a.rows(), n = pr.a.cols();
    if (pr.b.rows() != m || pr.b.cols() != n || pr.p.rows() != m ||
        pr.q.rows() != m || !pr.p.is_column() || !pr.q.is_column())
        throw std::invalid_argument("grid_min_objective: inconsistent dimensions");
    if (detail::grid_point_count(g, n) > g.cap)
        throw std::invalid_argument("grid search: grid exceeds point cap");

    const std::vector<long long> ai = detail::to_ints(pr.a);
    const std::vector<long long> bi = detail::to_ints(pr.b);
    const std::vector<long long> pi = detail::to_ints(pr.p);
    const std::vector<long long> qi = detail::to_ints(pr.q);

    grid_result res;
    std::vector<long long> x(n, g.lo), ax(m), bx(m);
    do {
        detail::int_mat_vec(ai, m, n, x, ax);
        detail::int_mat_vec(bi, m, n, x, bx);
        // over = max_i (bx_i - q_i), under = max_i (p_i - ax_i); terms with a
        // zero on either side drop out.
        long long over = detail::int_zero, under = detail::int_zero;
        for (std::size_t i = 0; i < m; ++i) {
            if (qi[i] != detail::int_zero && bx[i] != detail::int_zero) {
                const long long t = bx[i] - qi[i];
                if (over == detail::int_zero || t > over) over = t;
            }
            if (pi[i] != detail::int_zero && ax[i] != detail::int_zero) {
                const long long t = pi[i] - ax[i];
                if (under == detail::int_zero || t > under) under = t;
            }
        }
        if (over == detail::int_zero || under == detail::int_zero) continue;
        const long long obj = over + under;
        if (!res.feasible || obj < res.best) {
            res.feasible = true;
            res.best = obj;
            res.argmin = x;
        }
    } while (detail::next_point(x, g));
    return res;
}

}  // namespace tropic
