#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "macmahon/partition.hpp"
#include "macmahon/qseries.hpp"

namespace macmahon {

/// A finite vector in the span of basis states |mu>, one per partition,
/// with coefficients in Z[[q]]/(q^L). All coefficients share the order L;
/// a partition whose coefficient vanishes mod q^L is absent.
///
/// Terms iterate size-then-lexicographic, so every operator below is
/// bit-for-bit reproducible.
class FockState {
public:
    explicit FockState(std::size_t order) : order_(order) {}

    std::size_t order() const noexcept { return order_; }
    const std::map<Partition, QSeries>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    /// Coefficient of |mu>; the zero series when absent.
    QSeries coefficient(const Partition& mu) const;

    /// terms[mu] += q^shift * c. Series longer than order() are truncated;
    /// shorter ones throw std::invalid_argument.
    void add(const Partition& mu, const QSeries& c, std::size_t shift = 0);

    /// Drops terms whose coefficient became zero.
    void prune_zeros();

    friend bool operator==(const FockState&, const FockState&) = default;

private:
    std::size_t order_;
    std::map<Partition, QSeries> terms_;
};

enum class Prune {
    /// Drop a term once its lowest exponent reaches L.
    plain,
    /// Also count the boxes every later slice must still carry: descending
    /// from nu to the empty partition costs at least sum_k (k-1) nu_k.
    sharp,
};

/// {empty -> 1} at order L.
FockState vacuum(std::size_t order);

/// Coefficient of the empty partition.
QSeries inner_vacuum(const FockState& s);

/// Counting operator: |mu> -> q^{|mu|} |mu>.
FockState apply_weight(const FockState& s);

/// |mu> -> sum over nu with mu > nu of |nu>. Finite.
FockState apply_gamma_plus(const FockState& s);

/// |mu> -> sum over nu > mu with |nu| < L of |nu>. Larger nu would vanish
/// under the next apply_weight, so the cut is exact for the transfer product.
FockState apply_gamma_minus(const FockState& s);

/// Vacuum-to-vacuum element of the slice transfer product, i.e. the sum of
/// q^{volume} over plane partitions with at most T rows and T columns,
/// mod q^L. From the vacuum: T rounds of (gamma_minus, weight) build the
/// slices up to the peak, T-1 rounds of (gamma_plus, weight) walk back
/// down, and a last gamma_plus reaches the vacuum. Each slice is weighted
/// once. T defaults to L, enough to hold every plane partition of volume < L.
QSeries transfer_partition_function(std::size_t order, std::optional<std::size_t> grid = std::nullopt,
                                    Prune prune = Prune::plain);

}  // namespace macmahon
