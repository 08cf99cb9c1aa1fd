#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "macmahon/qseries.hpp"

namespace macmahon {

/// Reduced fraction num/den with den >= 1; zero is 0/1.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den == 0.
    ExactRational(const BigInt& num, const BigInt& den);

    /// Accepts "p", "p/q", "-p/q". Throws ValidationError otherwise.
    static ExactRational parse(std::string_view text);

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }
    bool is_zero() const { return value_.is_zero(); }

    ExactRational abs() const;
    /// Integer power; negative exponents require a nonzero base.
    ExactRational pow(long long exponent) const;

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        return ExactRational(a.value_ + b.value_, Raw{});
    }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        return ExactRational(a.value_ - b.value_, Raw{});
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        return ExactRational(a.value_ * b.value_, Raw{});
    }
    /// Throws std::domain_error on division by zero.
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a) { return ExactRational(-a.value_, Raw{}); }

    ExactRational& operator+=(const ExactRational& b) { return *this = *this + b; }
    ExactRational& operator*=(const ExactRational& b) { return *this = *this * b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or "p" when den == 1.
    std::string to_string() const;

private:
    using Value = boost::multiprecision::cpp_rational;
    struct Raw {};
    ExactRational(Value v, Raw) : value_(std::move(v)) {}

    Value value_;
};

inline ExactRational rat_add(const ExactRational& x, const ExactRational& y) { return x + y; }
inline ExactRational rat_sub(const ExactRational& x, const ExactRational& y) { return x - y; }
inline ExactRational rat_mul(const ExactRational& x, const ExactRational& y) { return x * y; }
inline ExactRational rat_div(const ExactRational& x, const ExactRational& y) { return x / y; }

}  // namespace macmahon
