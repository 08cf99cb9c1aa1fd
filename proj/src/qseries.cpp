#include "macmahon/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace macmahon {

namespace {
const BigInt kZero = 0;
}

QSeries::QSeries(std::size_t order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order);
}

QSeries::QSeries(std::size_t order, std::initializer_list<long long> coeffs) : coeffs_(order) {
    std::size_t e = 0;
    for (long long c : coeffs) {
        if (e >= order) break;
        coeffs_[e++] = c;
    }
}

QSeries QSeries::one(std::size_t order) { return monomial(order, 0); }

QSeries QSeries::monomial(std::size_t order, std::size_t exponent, const BigInt& c) {
    QSeries out(order);
    if (exponent < order) out.coeffs_[exponent] = c;
    return out;
}

const BigInt& QSeries::operator[](std::size_t e) const {
    return e < coeffs_.size() ? coeffs_[e] : kZero;
}

bool QSeries::is_zero() const { return valuation() == order(); }

std::size_t QSeries::valuation() const {
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (!coeffs_[e].is_zero()) return e;
    }
    return coeffs_.size();
}

QSeries QSeries::shifted(std::size_t k) const {
    QSeries out(order());
    for (std::size_t e = 0; e + k < order(); ++e) out.coeffs_[e + k] = coeffs_[e];
    return out;
}

QSeries QSeries::truncated(std::size_t new_order) const {
    QSeries out(std::min(new_order, order()));
    std::copy_n(coeffs_.begin(), out.order(), out.coeffs_.begin());
    return out;
}

QSeries QSeries::inverse() const {
    const std::size_t n = order();
    QSeries g(n);
    if (n == 0) return g;
    const BigInt& f0 = coeffs_[0];
    if (f0 != 1 && f0 != -1) {
        throw std::domain_error("series is not invertible over the integers: constant term " +
                                f0.str());
    }
    // f0 is its own inverse when it is +-1.
    g.coeffs_[0] = f0;
    for (std::size_t e = 1; e < n; ++e) {
        BigInt acc = 0;
        for (std::size_t j = 1; j <= e; ++j) {
            if (!coeffs_[j].is_zero()) acc += coeffs_[j] * g.coeffs_[e - j];
        }
        g.coeffs_[e] = -f0 * acc;
    }
    return g;
}

void QSeries::divide_by_one_minus_q_pow(std::size_t e) {
    if (e == 0) throw std::domain_error("1 - q^0 is not invertible");
    for (std::size_t i = e; i < coeffs_.size(); ++i) coeffs_[i] += coeffs_[i - e];
}

QSeries& QSeries::add_shifted(const QSeries& g, std::size_t k) {
    const std::size_t n = std::min(order(), g.order() + k);
    for (std::size_t e = k; e < n; ++e) {
        if (!g.coeffs_[e - k].is_zero()) coeffs_[e] += g.coeffs_[e - k];
    }
    return *this;
}

QSeries& QSeries::operator+=(const QSeries& g) {
    coeffs_.resize(std::min(order(), g.order()));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] += g.coeffs_[e];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& g) {
    coeffs_.resize(std::min(order(), g.order()));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] -= g.coeffs_[e];
    return *this;
}

QSeries operator-(const QSeries& f) {
    QSeries out(f.order());
    for (std::size_t e = 0; e < f.order(); ++e) out.coeffs_[e] = -f.coeffs_[e];
    return out;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
    const std::size_t n = std::min(f.order(), g.order());
    QSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!g.coeffs_[j].is_zero()) out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return out;
}

bool operator==(const QSeries& f, const QSeries& g) {
    const std::size_t n = std::min(f.order(), g.order());
    return std::equal(f.coeffs_.begin(), f.coeffs_.begin() + static_cast<std::ptrdiff_t>(n),
                      g.coeffs_.begin());
}

std::vector<std::string> QSeries::to_decimal_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

std::string QSeries::to_string() const {
    std::string out;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const BigInt& c = coeffs_[e];
        if (c.is_zero()) continue;
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (e == 0 || mag != 1) out += mag.str();
        if (e == 1) out += "q";
        if (e > 1) out += "q^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    out += " + O(q^" + std::to_string(coeffs_.size()) + ")";
    return out;
}

}  // namespace macmahon
