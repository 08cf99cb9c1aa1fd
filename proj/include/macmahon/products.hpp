#pragma once

#include <cstddef>

#include "macmahon/qseries.hpp"

namespace macmahon {

/// prod_{n>=1} (1 - q^n)^{-n} mod q^L. Factors with n >= L are 1 mod q^L.
/// Built from the logarithmic-derivative recurrence, O(L^2) big-integer
/// operations. Requires L >= 1.
QSeries macmahon_product(std::size_t order);

/// prod_{n=1..T} prod_{m=0..T-1} (1 - q^{n+m})^{-1} mod q^L.
///
/// Exponent k appears min(k, T, 2T-k) times; as T grows this becomes
/// k copies of 1/(1 - q^k) and the product tends to macmahon_product.
/// Built by repeated geometric division, independent of macmahon_product.
QSeries finite_grid_product(std::size_t grid, std::size_t order);

}  // namespace macmahon
