#pragma once

#include <cstddef>

#include "macmahon/partition.hpp"
#include "macmahon/rational.hpp"

namespace macmahon::oracle {

/// Partial sum of the infinite commutation matrix element over |nu| <= max_size,
/// with a rigorous bound on everything left out.
struct TruncatedSum {
    ExactRational partial;
    ExactRational tail_bound;
    std::size_t terms = 0;
};

/// Brute force: scans a box of candidate nu and keeps those passing the
/// interlacing predicate against both mu and mu1. Shares nothing with the
/// row-range closed form in commutation_lhs.
///
/// Every admissible nu has nu_{i+1} <= mu_i, so for a fixed total size there
/// are at most R = prod_i (max(mu_i, mu1_i) + 1) of them, and each term is
/// at most |x|^{-|mu1|} |y|^{-|mu|} |xy|^{|nu|}. The tail is therefore below
///     R |x|^{-|mu1|} |y|^{-|mu|} |xy|^{S+1} / (1 - |xy|).
TruncatedSum commutation_lhs_truncated(const Partition& mu, const Partition& mu1,
                                       const ExactRational& x, const ExactRational& y, int max_size);

}  // namespace macmahon::oracle
