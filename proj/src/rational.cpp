#include "macmahon/rational.hpp"

#include <stdexcept>

#include "macmahon/errors.hpp"

namespace macmahon {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    value_ = den < 0 ? Value(BigInt(-num), BigInt(-den)) : Value(num, den);
}

ExactRational ExactRational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> BigInt {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw ValidationError("malformed rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw ValidationError("malformed rational '" + std::string(text) + "'");
            }
        }
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRational(parse_int(text));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den.is_zero()) throw ValidationError("rational '" + std::string(text) + "' has zero denominator");
    return ExactRational(parse_int(text.substr(0, slash)), den);
}

ExactRational ExactRational::abs() const { return value_ < 0 ? -*this : *this; }

ExactRational ExactRational::pow(long long exponent) const {
    ExactRational base = *this;
    if (exponent < 0) {
        base = ExactRational(1) / base;
        exponent = -exponent;
    }
    ExactRational result(1);
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return ExactRational(a.value_ / b.value_, ExactRational::Raw{});
}

std::string ExactRational::to_string() const {
    const BigInt d = den();
    if (d == 1) return num().str();
    return num().str() + "/" + d.str();
}

}  // namespace macmahon
