#include "macmahon/products.hpp"

#include <stdexcept>
#include <vector>

namespace macmahon {

QSeries macmahon_product(std::size_t order) {
    if (order == 0) throw std::invalid_argument("truncation order must be >= 1");
    // sigma2[k] = sum of d^2 over divisors d of k.
    std::vector<BigInt> sigma2(order);
    for (std::size_t d = 1; d < order; ++d) {
        const BigInt square = BigInt(d) * d;
        for (std::size_t k = d; k < order; k += d) sigma2[k] += square;
    }
    // q Z'/Z = sum_k sigma2(k) q^k, so n a(n) = sum_{k=1..n} sigma2(k) a(n-k); the division is exact.
    std::vector<BigInt> a(order);
    a[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += sigma2[k] * a[n - k];
        a[n] = acc / n;
    }
    return QSeries(order, std::move(a));
}

QSeries finite_grid_product(std::size_t grid, std::size_t order) {
    if (order == 0) throw std::invalid_argument("truncation order must be >= 1");
    if (grid == 0) throw std::invalid_argument("grid size must be >= 1");
    QSeries z = QSeries::one(order);
    for (std::size_t n = 1; n <= grid; ++n) {
        for (std::size_t m = 0; m < grid; ++m) {
            if (n + m < order) z.divide_by_one_minus_q_pow(n + m);
        }
    }
    return z;
}

}  // namespace macmahon
