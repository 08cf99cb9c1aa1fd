#pragma once

#include <cstddef>
#include <span>

#include "macmahon/partition.hpp"
#include "macmahon/qseries.hpp"

namespace macmahon {

/// <lambda| Gamma_-(q^{c_k}) ... Gamma_-(q^{c_1}) |mu> mod q^L: the sum over
/// interlacing chains mu = nu(0) < nu(1) < ... < nu(k) = lambda of
///     q^{sum_i c_i (|nu(i)| - |nu(i-1)|)}.
/// This is the skew Schur function s_{lambda/mu} specialized at
/// (q^{c_1}, ..., q^{c_k}). Zero when no chain exists.
QSeries gamma_chain_matrix_element(const Partition& lambda, const Partition& mu,
                                   std::span<const std::size_t> weights, std::size_t order);

}  // namespace macmahon
