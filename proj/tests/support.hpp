#pragma once

// Shared fixtures and generators for the test suites.

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "tropic/tropic.hpp"

namespace testing_support {

inline constexpr double O = -tropic::infty;  // max-plus zero in literals

// Three-activity worked instance used across the suites: its closed-form
// solution is known exactly.
inline tropic::matrix<tropic::max_plus> sample_c() {
    return tropic::matrix<tropic::max_plus>::from_rows(
        {{4, 0, O}, {2, 3, 1}, {1, 1, 3}});
}

inline tropic::matrix<tropic::max_plus> sample_d() {
    return tropic::matrix<tropic::max_plus>::from_rows(
        {{O, -2, 1}, {0, O, 2}, {-1, O, O}});
}

inline tropic::project sample_project() {
    return tropic::project{{"cast", "machine", "fit"}, sample_c(), sample_d()};
}

inline tropic::matrix<tropic::max_plus> sample_d_star() {
    return tropic::matrix<tropic::max_plus>::from_rows(
        {{0, -2, 1}, {1, 0, 2}, {-1, -3, 0}});
}

// Integer max-plus matrix with zeros sprinkled in.
inline tropic::matrix<tropic::max_plus> random_matrix(std::mt19937_64& rng,
                                                      std::size_t rows,
                                                      std::size_t cols, int lo,
                                                      int hi, double zero_prob) {
    std::uniform_int_distribution<int> val(lo, hi);
    std::bernoulli_distribution zero(zero_prob);
    tropic::matrix<tropic::max_plus> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!zero(rng)) m.set(i, j, static_cast<double>(val(rng)));
    return m;
}

inline void force_row_regular(tropic::matrix<tropic::max_plus>& m,
                              std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> val(lo, hi);
    std::uniform_int_distribution<std::size_t> col(0, m.cols() - 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.raw(i, j) != O) { nonzero = true; break; }
        if (!nonzero) m.set(i, col(rng), static_cast<double>(val(rng)));
    }
}

inline void force_column_regular(tropic::matrix<tropic::max_plus>& m,
                                 std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> val(lo, hi);
    std::uniform_int_distribution<std::size_t> row(0, m.rows() - 1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.raw(i, j) != O) { nonzero = true; break; }
        if (!nonzero) m.set(row(rng), j, static_cast<double>(val(rng)));
    }
}

inline tropic::matrix<tropic::max_plus> random_regular_vector(
    std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> val(lo, hi);
    tropic::matrix<tropic::max_plus> v(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, 0, static_cast<double>(val(rng)));
    return v;
}

// Shifts all finite entries down until no cycle has positive weight.
inline tropic::matrix<tropic::max_plus> make_subcritical(
    tropic::matrix<tropic::max_plus> a) {
    const double t = tropic::cycle_trace(a).raw();
    if (t > 0.0) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a.raw(i, j) != O) a.set(i, j, a.raw(i, j) - t);
    }
    return a;
}

// Integer-box enumeration; fn receives each point as a vector of doubles.
inline void for_each_grid_point(std::size_t dim, long long lo, long long hi,
                                long long step,
                                const std::function<void(const std::vector<double>&)>& fn) {
    std::vector<long long> x(dim, lo);
    std::vector<double> xd(dim);
    for (;;) {
        for (std::size_t i = 0; i < dim; ++i) xd[i] = static_cast<double>(x[i]);
        fn(xd);
        std::size_t k = dim;
        while (k-- > 0) {
            if (x[k] + step <= hi) {
                x[k] += step;
                for (std::size_t j = k + 1; j < dim; ++j) x[j] = lo;
                break;
            }
            if (k == 0) return;
        }
    }
}

// Semifield law checks shared with the acceptance run. Returns the number of
// failed checks; multiplication-based laws compare within rel_tol when the
// semifield multiplication rounds.
template <tropic::semifield S, class Gen>
std::size_t count_law_failures(std::size_t triples, unsigned seed, Gen gen_value,
                               double rel_tol) {
    using V = tropic::value<S>;
    std::mt19937_64 rng(seed);
    const V zero = V::zero(), one = V::one();
    auto close = [&](V a, V b) {
        if (S::exact_mul || a == b) return a == b;
        const double x = a.raw(), y = b.raw();
        const double scale = std::max(std::abs(x), std::abs(y));
        return std::abs(x - y) <= rel_tol * scale;
    };
    std::size_t failures = 0;
    auto check = [&](bool ok) { failures += ok ? 0 : 1; };
    for (std::size_t t = 0; t < triples; ++t) {
        const V a = gen_value(rng), b = gen_value(rng), c = gen_value(rng);
        check(a + a == a);
        check(a + b == b + a);
        check((a + b) + c == a + (b + c));
        check(a + zero == a);
        check(a * b == b * a);
        check(close((a * b) * c, a * (b * c)));
        check(a * one == a);
        check(a * zero == zero);
        check(zero * a == zero);
        check(close(a * (b + c), (a * b) + (a * c)));
        if (!a.is_zero()) check(close(a.inv() * a, one));
        check(leq(a, a + b));
        check(leq(a, b) || leq(b, a));
        check(leq(zero, a));
    }
    return failures;
}

template <tropic::semifield S>
tropic::value<S> random_additive_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> val(-1000, 1000);
    std::bernoulli_distribution zero(0.08);
    if (zero(rng)) return tropic::value<S>::zero();
    return tropic::value<S>(static_cast<double>(val(rng)));
}

template <tropic::semifield S>
tropic::value<S> random_multiplicative_value(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ex(-7.0, 7.0);
    std::bernoulli_distribution zero(0.08);
    if (zero(rng)) return tropic::value<S>::zero();
    return tropic::value<S>(std::exp(ex(rng)));
}

}  // namespace testing_support
