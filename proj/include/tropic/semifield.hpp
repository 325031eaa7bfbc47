#pragma once

// Idempotent semifields over (extended) reals.
//
// A semifield here is a policy type describing <X, 0, 1, ⊕, ⊗> where ⊕ is
// idempotent and every element except the zero has a multiplicative inverse.
// Four concrete instances are provided:
//
//   max_plus    <R ∪ {-inf}, -inf, 0, max, +>
//   min_plus    <R ∪ {+inf}, +inf, 0, min, +>
//   max_times   <R+ ∪ {0},     0,  1, max, *>
//   min_times   <R+ ∪ {+inf}, +inf, 1, min, *>
//
// Policies operate on raw doubles; value<S> wraps a double and validates
// carrier membership (NaN and out-of-carrier inputs are rejected on
// construction). Mixing elements of different semifields is a type error.

#include <cmath>
#include <concepts>
#include <limits>
#include <stdexcept>
#include <string>

namespace tropic {

inline constexpr double infty = std::numeric_limits<double>::infinity();

template <class S>
concept semifield = requires(double a, double b) {
    { S::name() } -> std::convertible_to<const char*>;
    { S::zero() } -> std::same_as<double>;
    { S::one() } -> std::same_as<double>;
    { S::valid(a) } -> std::same_as<bool>;
    { S::add(a, b) } -> std::same_as<double>;
    { S::mul(a, b) } -> std::same_as<double>;
    { S::inv(a) } -> std::same_as<double>;
    { S::pow(a, b) } -> std::same_as<double>;
    { S::exact_mul } -> std::convertible_to<bool>;
};

struct max_plus {
    static constexpr const char* name() { return "max-plus"; }
    // ⊗ is conventional addition: exact whenever inputs and result carry no
    // rounding (e.g. integer-valued entries).
    static constexpr bool exact_mul = true;
    static constexpr double zero() { return -infty; }
    static constexpr double one() { return 0.0; }
    static constexpr bool valid(double v) { return v == v && v < infty; }
    static constexpr double add(double a, double b) { return a < b ? b : a; }
    static constexpr double mul(double a, double b) { return a + b; }
    static constexpr double inv(double a) { return -a; }
    // For max-plus the power extends to real exponents and equals the
    // conventional product.
    static constexpr double pow(double a, double p) { return a * p; }
};

struct min_plus {
    static constexpr const char* name() { return "min-plus"; }
    static constexpr bool exact_mul = true;
    static constexpr double zero() { return infty; }
    static constexpr double one() { return 0.0; }
    static constexpr bool valid(double v) { return v == v && v > -infty; }
    static constexpr double add(double a, double b) { return a < b ? a : b; }
    static constexpr double mul(double a, double b) { return a + b; }
    static constexpr double inv(double a) { return -a; }
    static constexpr double pow(double a, double p) { return a * p; }
};

struct max_times {
    static constexpr const char* name() { return "max-times"; }
    static constexpr bool exact_mul = false;
    static constexpr double zero() { return 0.0; }
    static constexpr double one() { return 1.0; }
    static constexpr bool valid(double v) { return v == v && v >= 0.0 && v < infty; }
    static constexpr double add(double a, double b) { return a < b ? b : a; }
    static constexpr double mul(double a, double b) { return a * b; }
    static constexpr double inv(double a) { return 1.0 / a; }
    static double pow(double a, double p) { return std::pow(a, p); }
};

struct min_times {
    static constexpr const char* name() { return "min-times"; }
    static constexpr bool exact_mul = false;
    static constexpr double zero() { return infty; }
    static constexpr double one() { return 1.0; }
    static constexpr bool valid(double v) { return v == v && v > 0.0; }
    static constexpr double add(double a, double b) { return a < b ? a : b; }
    static constexpr double mul(double a, double b) { return a * b; }
    static constexpr double inv(double a) { return 1.0 / a; }
    static double pow(double a, double p) { return std::pow(a, p); }
};

/// An element of semifield S. Immutable plain data; all operations are pure.
template <semifield S>
class value {
  public:
    using semifield_type = S;

    value() : v_(S::zero()) {}

    explicit value(double v) : v_(v) {
        if (!S::valid(v))
            throw std::invalid_argument(std::string(S::name()) +
                                        ": value outside carrier set");
    }

    static value zero() { return value(S::zero()); }
    static value one() { return value(S::one()); }

    double raw() const { return v_; }
    bool is_zero() const { return v_ == S::zero(); }

    friend value operator+(value a, value b) { return value(S::add(a.v_, b.v_)); }
    friend value operator*(value a, value b) { return value(S::mul(a.v_, b.v_)); }

    value inv() const {
        if (is_zero())
            throw std::domain_error(std::string(S::name()) +
                                    ": zero has no multiplicative inverse");
        return value(S::inv(v_));
    }

    // x^0 = 1, x^p = x^{p-1} x, x^{-p} = (x^{-1})^p; zero only to positive powers.
    value pow(long long p) const {
        if (is_zero()) {
            if (p <= 0)
                throw std::domain_error(std::string(S::name()) +
                                        ": zero admits only positive powers");
            return *this;
        }
        return value(S::pow(v_, static_cast<double>(p)));
    }

    /// Real exponent, max-plus only (there it equals the conventional product).
    value pow(double p) const
        requires std::same_as<S, max_plus>
    {
        if (is_zero()) {
            if (p <= 0)
                throw std::domain_error(std::string(S::name()) +
                                        ": zero admits only positive powers");
            return *this;
        }
        return value(S::pow(v_, p));
    }

    friend bool operator==(value a, value b) = default;

    /// Order induced by idempotent addition: a ≤ b iff a ⊕ b = b.
    friend bool leq(value a, value b) { return S::add(a.v_, b.v_) == b.v_; }
    friend bool lt(value a, value b) { return leq(a, b) && a != b; }

  private:
    double v_;
};

}  // namespace tropic
