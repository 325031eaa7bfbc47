#pragma once

// Dense matrices over an idempotent semifield, row-major storage.
//
// Column vectors are n×1 matrices, row vectors 1×n; sizes are project-scale
// so no sparse format is provided. Matrices are immutable in spirit: all
// operations return fresh values.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropic/semifield.hpp"

namespace tropic {

template <semifield S>
class matrix {
  public:
    using semifield_type = S;

    /// r×c matrix with every entry equal to the semifield zero.
    matrix(std::size_t r, std::size_t c)
        : rows_(r), cols_(c), m_(r * c, S::zero()) {
        if (r == 0 || c == 0)
            throw std::invalid_argument("matrix: dimensions must be positive");
    }

    static matrix identity(std::size_t n) {
        matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) a.m_[i * n + i] = S::one();
        return a;
    }

    /// All entries equal to the semifield identity; ones(n, 1) is the
    /// all-identity column vector.
    static matrix ones(std::size_t r, std::size_t c) {
        matrix a(r, c);
        for (auto& v : a.m_) v = S::one();
        return a;
    }

    static matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        if (rows.size() == 0 || rows.begin()->size() == 0)
            throw std::invalid_argument("matrix: dimensions must be positive");
        matrix a(rows.size(), rows.begin()->size());
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != a.cols_)
                throw std::invalid_argument("matrix: ragged row list");
            std::size_t j = 0;
            for (double v : r) a.set(i, j++, v);
            ++i;
        }
        return a;
    }

    static matrix column(std::initializer_list<double> entries) {
        return column(std::vector<double>(entries));
    }

    static matrix column(const std::vector<double>& entries) {
        matrix a(entries.size(), 1);
        for (std::size_t i = 0; i < entries.size(); ++i) a.set(i, 0, entries[i]);
        return a;
    }

    static matrix row_vector(std::initializer_list<double> entries) {
        matrix a(1, entries.size());
        std::size_t j = 0;
        for (double v : entries) a.set(0, j++, v);
        return a;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool is_square() const { return rows_ == cols_; }
    bool is_column() const { return cols_ == 1; }
    bool is_row() const { return rows_ == 1; }
    bool is_vector() const { return is_column() || is_row(); }
    /// Entry count of a vector-shaped matrix.
    std::size_t dim() const {
        if (!is_vector()) throw std::invalid_argument("dim: not a vector");
        return rows_ * cols_;
    }

    double raw(std::size_t i, std::size_t j) const { return m_[i * cols_ + j]; }
    value<S> operator()(std::size_t i, std::size_t j) const {
        return value<S>(raw(i, j));
    }
    /// i-th entry of a vector-shaped matrix.
    double vraw(std::size_t i) const {
        if (!is_vector()) throw std::invalid_argument("vraw: not a vector");
        return m_[i];
    }

    void set(std::size_t i, std::size_t j, double v) {
        if (!S::valid(v))
            throw std::invalid_argument(std::string(S::name()) +
                                        ": value outside carrier set");
        m_[i * cols_ + j] = v;
    }
    void set(std::size_t i, std::size_t j, value<S> v) { m_[i * cols_ + j] = v.raw(); }

    matrix col(std::size_t j) const {
        matrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c.m_[i] = raw(i, j);
        return c;
    }

    matrix row(std::size_t i) const {
        matrix r(1, cols_);
        for (std::size_t j = 0; j < cols_; ++j) r.m_[j] = raw(i, j);
        return r;
    }

    /// The sole entry of a 1×1 matrix.
    value<S> scalar() const {
        if (rows_ != 1 || cols_ != 1)
            throw std::invalid_argument("scalar: matrix is not 1x1");
        return value<S>(m_[0]);
    }

    friend bool operator==(const matrix& a, const matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.m_ == b.m_;
    }

    /// Entrywise ⊕.
    friend matrix operator+(const matrix& a, const matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix add: shape mismatch");
        matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.m_.size(); ++k)
            r.m_[k] = S::add(a.m_[k], b.m_[k]);
        return r;
    }

    /// Tropical product: (AB)_ij = ⊕_k a_ik ⊗ b_kj.
    friend matrix operator*(const matrix& a, const matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument(
                "matrix mul: inner dimensions differ (" + std::to_string(a.cols_) +
                " vs " + std::to_string(b.rows_) + ")");
        matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const double aik = a.m_[i * a.cols_ + k];
                if (aik == S::zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    double& rij = r.m_[i * b.cols_ + j];
                    rij = S::add(rij, S::mul(aik, b.m_[k * b.cols_ + j]));
                }
            }
        }
        return r;
    }

    /// Scalar ⊗: (xA)_ij = x ⊗ a_ij.
    friend matrix operator*(value<S> x, const matrix& a) {
        matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.m_.size(); ++k) r.m_[k] = S::mul(x.raw(), a.m_[k]);
        return r;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<double> m_;
};

template <semifield S>
matrix<S> transpose(const matrix<S>& a) {
    matrix<S> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t.set(j, i, a.raw(i, j));
    return t;
}

/// ⊕-sum of the diagonal.
template <semifield S>
value<S> trace(const matrix<S>& a) {
    if (!a.is_square()) throw std::invalid_argument("trace: matrix must be square");
    double t = S::zero();
    for (std::size_t i = 0; i < a.rows(); ++i) t = S::add(t, a.raw(i, i));
    return value<S>(t);
}

template <semifield S>
bool is_zero_matrix(const matrix<S>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.raw(i, j) != S::zero()) return false;
    return true;
}

/// No zero rows.
template <semifield S>
bool is_row_regular(const matrix<S>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.raw(i, j) != S::zero()) { nonzero = true; break; }
        if (!nonzero) return false;
    }
    return true;
}

/// No zero columns.
template <semifield S>
bool is_column_regular(const matrix<S>& a) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a.raw(i, j) != S::zero()) { nonzero = true; break; }
        if (!nonzero) return false;
    }
    return true;
}

template <semifield S>
bool is_regular(const matrix<S>& a) {
    return is_row_regular(a) && is_column_regular(a);
}

/// A vector is regular when it has no zero components.
template <semifield S>
bool is_regular_vector(const matrix<S>& x) {
    if (!x.is_vector()) throw std::invalid_argument("is_regular_vector: not a vector");
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (x.vraw(i) == S::zero()) return false;
    return true;
}

/// Multiplicative conjugate transpose of a nonzero vector: the transposed
/// shape with entrywise inverses, zeros kept as zeros.
template <semifield S>
matrix<S> conjugate(const matrix<S>& x) {
    if (!x.is_vector()) throw std::invalid_argument("conjugate: not a vector");
    const std::size_t n = x.dim();
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i)
        if (x.vraw(i) != S::zero()) { nonzero = true; break; }
    if (!nonzero)
        throw std::domain_error("conjugate: undefined for the zero vector");
    matrix<S> r = x.is_column() ? matrix<S>(1, n) : matrix<S>(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x.vraw(i);
        const double c = v == S::zero() ? S::zero() : S::inv(v);
        if (x.is_column()) r.set(0, i, c); else r.set(i, 0, c);
    }
    return r;
}

/// Entrywise a ≤ b in the semifield order.
template <semifield S>
bool leq_entrywise(const matrix<S>& a, const matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("leq_entrywise: shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (S::add(a.raw(i, j), b.raw(i, j)) != b.raw(i, j)) return false;
    return true;
}

namespace detail {
inline bool close_rel(double a, double b, double tol) {
    if (a == b) return true;
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= tol * scale;
}
}  // namespace detail

/// Witness scalar c with y = c ⊗ x, if one exists. Zero patterns must match;
/// two zero vectors are collinear with c = 1 by convention. Comparison is
/// exact when ⊗ is exact, otherwise within 1e-9 relative tolerance.
template <semifield S>
std::optional<value<S>> collinear(const matrix<S>& x, const matrix<S>& y) {
    if (!x.is_vector() || !y.is_vector() || x.dim() != y.dim() ||
        x.is_column() != y.is_column())
        throw std::invalid_argument("collinear: vectors of equal shape required");
    const std::size_t n = x.dim();
    std::optional<double> c;
    for (std::size_t i = 0; i < n; ++i) {
        const bool xz = x.vraw(i) == S::zero(), yz = y.vraw(i) == S::zero();
        if (xz != yz) return std::nullopt;
        if (!xz && !c) c = S::mul(y.vraw(i), S::inv(x.vraw(i)));
    }
    if (!c) return value<S>::one();  // both zero vectors
    for (std::size_t i = 0; i < n; ++i) {
        if (x.vraw(i) == S::zero()) continue;
        const double want = S::mul(*c, x.vraw(i));
        const bool ok = S::exact_mul ? want == y.vraw(i)
                                     : detail::close_rel(want, y.vraw(i), 1e-9);
        if (!ok) return std::nullopt;
    }
    return value<S>(*c);
}

inline std::string format_entry(double v) {
    if (v == infty) return "inf";
    if (v == -infty) return "-inf";
    std::ostringstream os;
    os << v;
    return os.str();
}

template <semifield S>
std::string to_string(const matrix<S>& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < a.cols(); ++j)
            os << (j == 0 ? "" : " ") << format_entry(a.raw(i, j));
        os << "]" << (i + 1 == a.rows() ? "" : "\n");
    }
    os << "]";
    return os.str();
}

}  // namespace tropic
