#pragma once

#include "macmahon/partition.hpp"
#include "macmahon/rational.hpp"

namespace macmahon {

/// Matrix elements of both sides of the transfer-operator commutation
/// relation at an exact rational point (x, y):
///
///   lhs = sum over nu > mu, nu > mu1 of x^{|nu|-|mu1|} y^{|nu|-|mu|}   (infinite)
///   rhs = sum over mu > nu, mu1 > nu of x^{|mu|-|nu|} y^{|mu1|-|nu|}   (finite)
///
/// and the relation (1 - xy) lhs = rhs.
struct CommutationReport {
    ExactRational lhs;
    ExactRational rhs;
    /// 1 - xy
    ExactRational factor;
    bool holds = false;
};

/// Closed form of the infinite sum. The two interlacing constraints cut
/// each row of nu to an independent range
///     nu_1 in [s_1, inf),  nu_{i+1} in [s_{i+1}, t_i]
/// with s_i = max(mu_i, mu1_i), t_i = min(mu_i, mu1_i), so the sum is a
/// product of geometric sums in xy. Requires x, y != 0 and |xy| < 1;
/// throws ValidationError otherwise.
ExactRational commutation_lhs(const Partition& mu, const Partition& mu1, const ExactRational& x,
                              const ExactRational& y);

/// The finite side, summed term by term.
ExactRational commutation_rhs(const Partition& mu, const Partition& mu1, const ExactRational& x,
                              const ExactRational& y);

CommutationReport commutation_check_exact(const Partition& mu, const Partition& mu1,
                                          const ExactRational& x, const ExactRational& y);

}  // namespace macmahon
