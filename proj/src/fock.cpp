#include "macmahon/fock.hpp"

#include <stdexcept>

namespace macmahon {

QSeries FockState::coefficient(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? QSeries(order_) : it->second;
}

void FockState::add(const Partition& mu, const QSeries& c, std::size_t shift) {
    if (c.order() < order_) {
        throw std::invalid_argument("coefficient order " + std::to_string(c.order()) +
                                    " below state order " + std::to_string(order_));
    }
    if (shift >= order_) return;
    auto [it, inserted] = terms_.try_emplace(mu, order_);
    it->second.add_shifted(c, shift);
}

void FockState::prune_zeros() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

FockState vacuum(std::size_t order) {
    if (order == 0) throw std::invalid_argument("truncation order must be >= 1");
    FockState s(order);
    s.add(Partition{}, QSeries::one(order));
    return s;
}

QSeries inner_vacuum(const FockState& s) { return s.coefficient(Partition{}); }

FockState apply_weight(const FockState& s) {
    FockState out(s.order());
    for (const auto& [mu, c] : s.terms()) out.add(mu, c, static_cast<std::size_t>(mu.size()));
    out.prune_zeros();
    return out;
}

FockState apply_gamma_plus(const FockState& s) {
    FockState out(s.order());
    for (const auto& [mu, c] : s.terms()) {
        for_each_interlacing_below(mu, [&](const Partition& nu) { out.add(nu, c); });
    }
    out.prune_zeros();
    return out;
}

FockState apply_gamma_minus(const FockState& s) {
    FockState out(s.order());
    const int max_size = static_cast<int>(s.order()) - 1;
    for (const auto& [mu, c] : s.terms()) {
        for_each_interlacing_above(mu, max_size, [&](const Partition& nu) { out.add(nu, c); });
    }
    out.prune_zeros();
    return out;
}

namespace {

std::size_t descent_cost(const Partition& nu) {
    std::size_t cost = 0;
    for (std::size_t k = 1; k < nu.length(); ++k) cost += k * static_cast<std::size_t>(nu[k]);
    return cost;
}

// Fused weight(gamma(s)): terms whose weighted coefficient would vanish are
// never materialized, which is what keeps the transfer product tractable.
template <bool Raise>
FockState step_and_weigh(const FockState& s, Prune prune) {
    const std::size_t order = s.order();
    FockState out(order);
    for (const auto& [mu, c] : s.terms()) {
        const std::size_t lowest = c.valuation();
        if (lowest >= order) continue;
        auto emit = [&](const Partition& nu) {
            const auto size = static_cast<std::size_t>(nu.size());
            std::size_t committed = lowest + size;
            if (prune == Prune::sharp) committed += descent_cost(nu);
            if (committed < order) out.add(nu, c, size);
        };
        if constexpr (Raise) {
            for_each_interlacing_above(mu, static_cast<int>(order - 1 - lowest), emit);
        } else {
            for_each_interlacing_below(mu, emit);
        }
    }
    out.prune_zeros();
    return out;
}

}  // namespace

QSeries transfer_partition_function(std::size_t order, std::optional<std::size_t> grid, Prune prune) {
    if (order == 0) throw std::invalid_argument("truncation order must be >= 1");
    const std::size_t T = grid.value_or(order);
    if (T == 0) throw std::invalid_argument("grid size must be >= 1");

    FockState s = vacuum(order);
    for (std::size_t t = 0; t < T; ++t) s = step_and_weigh<true>(s, prune);
    for (std::size_t t = 0; t + 1 < T; ++t) s = step_and_weigh<false>(s, prune);
    // Only single-row partitions step down to the vacuum, with weight q^0.
    return inner_vacuum(apply_gamma_plus(s));
}

}  // namespace macmahon
