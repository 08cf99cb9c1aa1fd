#include <doctest.h>

#include "macmahon/chain.hpp"
#include "macmahon/tableaux.hpp"

using namespace macmahon;

namespace {
QSeries chain(const Partition& lambda, const Partition& mu, std::vector<std::size_t> c, std::size_t L = 8) {
    return gamma_chain_matrix_element(lambda, mu, c, L);
}
}  // namespace

TEST_CASE("chain matrix element examples") {
    CHECK(chain({1}, {}, {1}) == QSeries(8, {0, 1}));
    CHECK(chain({1}, {}, {1, 2}) == QSeries(8, {0, 1, 1}));
    CHECK(chain({1, 1}, {}, {1}).is_zero());
}

TEST_CASE("no chain when mu is not inside lambda") {
    CHECK(chain({2}, {1, 1}, {0, 0, 0}).is_zero());
    CHECK(chain({}, {1}, {1}).is_zero());
}

TEST_CASE("zero steps is the identity matrix") {
    CHECK(chain({2, 1}, {2, 1}, {}) == QSeries::one(8));
    CHECK(chain({2, 1}, {2}, {}).is_zero());
}

TEST_CASE("agrees with tableau enumeration inside the (3,3,3) box") {
    std::vector<Partition> shapes;
    for (const auto& p : enumerate_partitions(9)) {
        if (p.length() <= 3 && p[0] <= 3) shapes.push_back(p);
    }
    REQUIRE(shapes.size() == 20);
    std::vector<std::vector<std::size_t>> weights{{}};
    for (std::size_t a = 0; a <= 3; ++a) {
        weights.push_back({a});
        for (std::size_t b = 0; b <= 3; ++b) {
            weights.push_back({a, b});
            for (std::size_t c = 0; c <= 3; ++c) weights.push_back({a, b, c});
        }
    }
    REQUIRE(weights.size() == 85);
    std::size_t checked = 0;
    for (const auto& lambda : shapes) {
        for (const auto& mu : shapes) {
            if (!mu.contained_in(lambda)) continue;
            for (const auto& c : weights) {
                REQUIRE(gamma_chain_matrix_element(lambda, mu, c, 32) ==
                        count_skew_ssyt_weighted(lambda, mu, c, 32));
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}
