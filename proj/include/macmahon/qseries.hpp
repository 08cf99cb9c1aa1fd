#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace macmahon {

using BigInt = boost::multiprecision::cpp_int;

/// A power series in q with integer coefficients, truncated at order L:
/// the element of Z[[q]]/(q^L) holding the coefficients of q^0 .. q^{L-1}.
///
/// Binary operations between series of different orders truncate to the
/// smaller order, which is the only order at which both are defined.
/// Equality likewise compares coefficients at the common order.
class QSeries {
public:
    QSeries() = default;

    /// The zero series at the given order.
    explicit QSeries(std::size_t order) : coeffs_(order) {}

    /// Coefficients padded with zeros (or truncated) to `order`.
    QSeries(std::size_t order, std::vector<BigInt> coeffs);
    QSeries(std::size_t order, std::initializer_list<long long> coeffs);

    static QSeries one(std::size_t order);
    /// c * q^exponent, or zero if exponent >= order.
    static QSeries monomial(std::size_t order, std::size_t exponent, const BigInt& c = 1);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^e; zero for e >= order.
    const BigInt& operator[](std::size_t e) const;

    bool is_zero() const;

    /// Smallest exponent with nonzero coefficient; order() for the zero series.
    std::size_t valuation() const;

    /// q^k * f at the same order.
    QSeries shifted(std::size_t k) const;

    /// Restriction to a smaller order.
    QSeries truncated(std::size_t order) const;

    /// Multiplicative inverse. Requires constant term +1 or -1 so the
    /// result stays integral; throws std::domain_error otherwise.
    QSeries inverse() const;

    /// In place f <- f / (1 - q^e), e >= 1.
    void divide_by_one_minus_q_pow(std::size_t e);

    /// f <- f + q^k * g, truncated to f's order.
    QSeries& add_shifted(const QSeries& g, std::size_t k);

    QSeries& operator+=(const QSeries& g);
    QSeries& operator-=(const QSeries& g);

    friend QSeries operator+(QSeries f, const QSeries& g) { return f += g; }
    friend QSeries operator-(QSeries f, const QSeries& g) { return f -= g; }
    friend QSeries operator-(const QSeries& f);
    friend QSeries operator*(const QSeries& f, const QSeries& g);

    /// Coefficient-wise at the common order.
    friend bool operator==(const QSeries& f, const QSeries& g);

    /// Decimal strings, one per coefficient.
    std::vector<std::string> to_decimal_strings() const;
    /// "1 + q + 3q^2 + 6q^3 + O(q^4)"
    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;
};

inline QSeries qs_add(const QSeries& f, const QSeries& g) { return f + g; }
inline QSeries qs_mul(const QSeries& f, const QSeries& g) { return f * g; }
inline QSeries qs_neg(const QSeries& f) { return -f; }
inline QSeries qs_inverse(const QSeries& f) { return f.inverse(); }

}  // namespace macmahon
