#include "macmahon/tableaux.hpp"

#include <vector>

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {

struct Cell {
    std::size_t row;
    std::size_t col;
};

}  // namespace

QSeries count_skew_ssyt_weighted(const Partition& lambda, const Partition& mu,
                                 std::span<const std::size_t> weights, std::size_t order) {
    if (!mu.contained_in(lambda)) {
        throw ValidationError("inner shape " + mu.to_string() + " is not contained in " +
                              lambda.to_string());
    }
    std::vector<Cell> cells;
    std::vector<std::vector<int>> filling(lambda.length());
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        filling[r].assign(static_cast<std::size_t>(lambda[r]), 0);
        for (std::size_t c = static_cast<std::size_t>(mu[r]); c < static_cast<std::size_t>(lambda[r]); ++c) {
            cells.push_back({r, c});
        }
    }

    std::vector<BigInt> coeffs(order);
    const int k = static_cast<int>(weights.size());
    // Row-major fill: left and upper neighbours are placed before each cell.
    auto place = [&](auto&& self, std::size_t idx, std::size_t exponent) -> void {
        if (exponent >= order) return;
        if (idx == cells.size()) {
            coeffs[exponent] += 1;
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 1;
        if (c > static_cast<std::size_t>(mu[r])) lo = std::max(lo, filling[r][c - 1]);
        if (r > 0 && c >= static_cast<std::size_t>(mu[r - 1])) lo = std::max(lo, filling[r - 1][c] + 1);
        for (int v = lo; v <= k; ++v) {
            filling[r][c] = v;
            self(self, idx + 1, exponent + weights[static_cast<std::size_t>(v - 1)]);
        }
        filling[r][c] = 0;
    };
    place(place, 0, 0);
    return QSeries(order, std::move(coeffs));
}

}  // namespace macmahon
