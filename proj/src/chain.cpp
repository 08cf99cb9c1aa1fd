#include "macmahon/chain.hpp"

#include "macmahon/fock.hpp"

namespace macmahon {

QSeries gamma_chain_matrix_element(const Partition& lambda, const Partition& mu,
                                   std::span<const std::size_t> weights, std::size_t order) {
    if (!mu.contained_in(lambda)) return QSeries(order);
    FockState s(order);
    s.add(mu, QSeries::one(order));
    for (const std::size_t c : weights) {
        FockState next(order);
        for (const auto& [kappa, coeff] : s.terms()) {
            // Chains only pass through diagrams inside lambda.
            for_each_interlacing_above(kappa, lambda.size(), [&](const Partition& nu) {
                if (nu.contained_in(lambda)) {
                    next.add(nu, coeff, c * static_cast<std::size_t>(nu.size() - kappa.size()));
                }
            });
        }
        next.prune_zeros();
        s = std::move(next);
    }
    return s.coefficient(lambda);
}

}  // namespace macmahon
