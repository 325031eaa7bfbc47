#pragma once

// Closed-form minimization of  q⁻ B x (A x)⁻ p  over regular vectors x.
//
// With A row regular, B column regular, p nonzero and q regular, the minimum
// equals  delta = (A (q⁻ B)⁻)⁻ p  and is attained at every x = α (q⁻ B)⁻ with
// α > 0. In max-plus terms with A = B and p = q = 1 the objective is the span
// (range) seminorm of A x, which is what the scheduling layer minimizes.

#include <stdexcept>
#include <string>

#include "tropic/matrix.hpp"
#include "tropic/semifield.hpp"

namespace tropic {

template <semifield S>
struct span_problem {
    matrix<S> a;  // m×n, row regular
    matrix<S> b;  // m×n, column regular
    matrix<S> p;  // m×1, nonzero
    matrix<S> q;  // m×1, regular
};

template <semifield S>
struct span_solution {
    value<S> delta;
    /// (q⁻ B)⁻; the optimizers are exactly the scalings α ⊗ direction, α > 0.
    matrix<S> direction;
};

enum class span_hypothesis {
    a_row_regular,
    b_column_regular,
    p_nonzero,
    q_regular,
};

class span_precondition_error : public std::invalid_argument {
  public:
    span_precondition_error(span_hypothesis h, const std::string& what)
        : std::invalid_argument(what), failed_(h) {}
    span_hypothesis failed() const { return failed_; }

  private:
    span_hypothesis failed_;
};

namespace detail {
template <semifield S>
void check_span_problem(const span_problem<S>& pr) {
    const std::size_t m = pr.a.rows(), n = pr.a.cols();
    if (pr.b.rows() != m || pr.b.cols() != n || !pr.p.is_column() ||
        !pr.q.is_column() || pr.p.rows() != m || pr.q.rows() != m)
        throw std::invalid_argument("span problem: inconsistent dimensions");
    if (!is_row_regular(pr.a))
        throw span_precondition_error(span_hypothesis::a_row_regular,
                                      "span problem: A has a zero row");
    if (!is_column_regular(pr.b))
        throw span_precondition_error(span_hypothesis::b_column_regular,
                                      "span problem: B has a zero column");
    if (is_zero_matrix(pr.p))
        throw span_precondition_error(span_hypothesis::p_nonzero,
                                      "span problem: p is the zero vector");
    if (!is_regular_vector(pr.q))
        throw span_precondition_error(span_hypothesis::q_regular,
                                      "span problem: q has a zero component");
}
}  // namespace detail

/// Objective value q⁻ B x (A x)⁻ p at a regular x.
template <semifield S>
value<S> objective(const span_problem<S>& pr, const matrix<S>& x) {
    if (!x.is_column() || x.rows() != pr.a.cols())
        throw std::invalid_argument("objective: x must be a column of matching size");
    if (!is_regular_vector(x))
        throw std::invalid_argument("objective: x must be regular");
    const value<S> over = (conjugate(pr.q) * (pr.b * x)).scalar();
    const value<S> under = (conjugate(pr.a * x) * pr.p).scalar();
    return over * under;
}

template <semifield S>
span_solution<S> solve(const span_problem<S>& pr) {
    detail::check_span_problem(pr);
    matrix<S> direction = conjugate(conjugate(pr.q) * pr.b);  // (q⁻B)⁻, n×1
    value<S> delta = (conjugate(pr.a * direction) * pr.p).scalar();
    return {delta, std::move(direction)};
}

/// The special case B = A, p = q = 1 for a regular matrix A: minimizes the
/// span seminorm of A x.
template <semifield S>
span_solution<S> solve_symmetric(const matrix<S>& a) {
    const matrix<S> ones = matrix<S>::ones(a.rows(), 1);
    return solve(span_problem<S>{a, a, ones, ones});
}

}  // namespace tropic
