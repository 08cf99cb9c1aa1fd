#pragma once

#include <cstddef>
#include <span>

#include "macmahon/partition.hpp"
#include "macmahon/qseries.hpp"

namespace macmahon {

/// Weighted count of semistandard tableaux of skew shape lambda/mu with
/// entries in 1..k (rows weakly increase, columns strictly increase):
///     sum over tableaux of q^{sum over cells of weights[entry - 1]}
/// truncated at `order`. k is weights.size().
///
/// This is a direct filling enumeration and shares no code with the
/// transfer-operator chain computation it is checked against.
/// Throws ValidationError unless mu is contained in lambda.
QSeries count_skew_ssyt_weighted(const Partition& lambda, const Partition& mu,
                                 std::span<const std::size_t> weights, std::size_t order);

}  // namespace macmahon
