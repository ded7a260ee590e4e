#pragma once

// Exact rational arithmetic, cached binomial coefficients and the affine
// weights consumed by the T-operator.

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace severi {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always held in lowest terms with a
/// positive denominator.
class ExactScalar {
public:
    ExactScalar() = default;

    template <std::signed_integral I>
    ExactScalar(I v) : value_(static_cast<long>(v)) {}

    explicit ExactScalar(const BigInt& v) : value_(v) {}

    /// Throws std::domain_error on a zero denominator.
    ExactScalar(const BigInt& num, const BigInt& den);

    static ExactScalar fraction(long num, long den) { return {BigInt(num), BigInt(den)}; }

    /// Accepts "[-]digits" or "[-]digits/digits". The fraction need not be
    /// reduced on input; it is canonicalized.
    static std::optional<ExactScalar> parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Plain decimal for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    ExactScalar& operator+=(const ExactScalar& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& rhs) {
        value_ -= rhs.value_;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    ExactScalar& operator/=(const ExactScalar& rhs);

    friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
    friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
    friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
    friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }
    ExactScalar operator-() const {
        ExactScalar r;
        r.value_ = -value_;
        return r;
    }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& v) { return os << v.to_string(); }

private:
    mpq_class value_{0};
};

/// C(n, k), zero whenever k < 0, n < 0 or k > n.
[[nodiscard]] BigInt binom_int(long n, long k);
[[nodiscard]] ExactScalar binom(long n, long k);

/// Makes sure rows 0..n of the shared binomial table exist. Growing it ahead
/// of a parallel region keeps the region read-only.
void reserve_binomials(long n);

/// u(d1) = a*d1 + b.
struct LinearWeight {
    long a = 0;
    long b = 0;

    static constexpr LinearWeight constant(long c) { return {0, c}; }
    static constexpr LinearWeight identity() { return {1, 0}; }

    friend constexpr LinearWeight operator+(LinearWeight u, LinearWeight v) { return {u.a + v.a, u.b + v.b}; }
    friend constexpr LinearWeight operator*(long s, LinearWeight u) { return {s * u.a, s * u.b}; }
    friend constexpr bool operator==(LinearWeight, LinearWeight) = default;
};

[[nodiscard]] ExactScalar eval_weight(LinearWeight u, long d1);

}  // namespace severi
