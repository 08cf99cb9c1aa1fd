#include "macmahon/commutation.hpp"

#include <algorithm>
#include <vector>

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {

void require_convergent(const ExactRational& x, const ExactRational& y) {
    if (x.is_zero() || y.is_zero()) {
        throw ValidationError("commutation check needs nonzero x and y");
    }
    if ((x * y).abs() >= ExactRational(1)) {
        throw ValidationError("commutation check needs |xy| < 1, got xy = " + (x * y).to_string());
    }
}

// z^lo + ... + z^hi, zero for an empty range.
ExactRational geometric_range(const ExactRational& z, int lo, int hi) {
    if (lo > hi) return ExactRational(0);
    return (z.pow(lo) - z.pow(hi + 1)) / (ExactRational(1) - z);
}

}  // namespace

ExactRational commutation_lhs(const Partition& mu, const Partition& mu1, const ExactRational& x,
                              const ExactRational& y) {
    require_convergent(x, y);
    const ExactRational z = x * y;
    const std::size_t n = std::max(mu.length(), mu1.length());
    auto hi = [&](std::size_t i) { return std::max(mu[i], mu1[i]); };
    auto lo = [&](std::size_t i) { return std::min(mu[i], mu1[i]); };

    ExactRational sum = z.pow(hi(0)) / (ExactRational(1) - z);
    for (std::size_t i = 1; i <= n; ++i) {
        sum *= geometric_range(z, hi(i), lo(i - 1));
        if (sum.is_zero()) break;
    }
    return sum * x.pow(-mu1.size()) * y.pow(-mu.size());
}

ExactRational commutation_rhs(const Partition& mu, const Partition& mu1, const ExactRational& x,
                              const ExactRational& y) {
    ExactRational sum(0);
    for_each_interlacing_below(mu, [&](const Partition& nu) {
        if (interlaces(mu1, nu)) sum += x.pow(mu.size() - nu.size()) * y.pow(mu1.size() - nu.size());
    });
    return sum;
}

CommutationReport commutation_check_exact(const Partition& mu, const Partition& mu1,
                                          const ExactRational& x, const ExactRational& y) {
    CommutationReport r;
    r.lhs = commutation_lhs(mu, mu1, x, y);
    r.rhs = commutation_rhs(mu, mu1, x, y);
    r.factor = ExactRational(1) - x * y;
    r.holds = r.factor * r.lhs == r.rhs;
    return r;
}

}  // namespace macmahon
