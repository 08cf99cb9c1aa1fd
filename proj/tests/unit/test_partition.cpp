#include <doctest.h>

#include <set>
#include <vector>

#include "macmahon/errors.hpp"
#include "macmahon/partition.hpp"

using namespace macmahon;

namespace {

Partition P(std::vector<std::int64_t> v) { return make_partition(v); }

// Independent: every composition of n, keeping the weakly decreasing ones.
std::vector<std::vector<int>> partitions_by_compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) return {{}};
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts{1};
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) parts.push_back(1);
            else ++parts.back();
        }
        if (std::is_sorted(parts.rbegin(), parts.rend())) out.push_back(parts);
    }
    return out;
}

// Independent: lambda/mu as cell sets; a horizontal strip has no two cells in one column.
bool horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!mu.contained_in(lambda)) return false;
    std::set<int> columns;
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        for (int c = mu[r]; c < lambda[r]; ++c) {
            if (!columns.insert(c).second) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("make_partition canonicalizes and validates") {
    CHECK(P({5, 2, 1}).parts() == std::vector<int>{5, 2, 1});
    CHECK(P({2, 0, 0}) == P({2}));
    CHECK(P({}).empty());
    CHECK(P({5, 2, 1}).size() == 8);
    CHECK_THROWS_AS(P({1, 2}), ValidationError);
    CHECK_THROWS_AS(P({3, -1}), ValidationError);
    CHECK_THROWS_AS(P({3, 0, 1}), ValidationError);
}

TEST_CASE("absent parts read as zero") {
    const Partition p{3, 1};
    CHECK(p[0] == 3);
    CHECK(p[1] == 1);
    CHECK(p[7] == 0);
}

TEST_CASE("ordering is size first, then lexicographic") {
    CHECK(Partition{3} < Partition{1, 1, 1, 1});
    CHECK(Partition{1, 1, 1} < Partition{2, 1});
    CHECK(Partition{2, 1} < Partition{3});
}

TEST_CASE("interlaces examples") {
    CHECK(interlaces(Partition{5, 2, 1}, Partition{3, 1}));
    CHECK(interlaces(Partition{}, Partition{}));
    CHECK_FALSE(interlaces(Partition{3, 3}, Partition{1}));
    CHECK(interlaces(Partition{2}, Partition{}));
    CHECK_FALSE(interlaces(Partition{}, Partition{1}));
    CHECK_FALSE(interlaces(Partition{1, 1}, Partition{}));
}

TEST_CASE("interlacing is exactly the horizontal strip relation, sizes <= 6") {
    const auto all = enumerate_partitions(6);
    for (const auto& mu : all) {
        for (const auto& nu : all) {
            INFO(mu.to_string(), " ", nu.to_string());
            CHECK(interlaces(mu, nu) == horizontal_strip(mu, nu));
        }
    }
}

TEST_CASE("enumerate_partitions counts against composition filtering") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(2).size() == 4);
    CHECK(enumerate_partitions(4).size() == 12);
    for (int m = 0; m <= 12; ++m) {
        std::size_t expected = 0;
        for (int n = 0; n <= m; ++n) expected += partitions_by_compositions(n).size();
        CHECK(enumerate_partitions(m).size() == expected);
    }
}

TEST_CASE("enumerate_partitions is sorted without duplicates") {
    const auto all = enumerate_partitions(9);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    const auto layer = partitions_of(4);
    std::vector<Partition> expected{P({1, 1, 1, 1}), P({2, 1, 1}), P({2, 2}), P({3, 1}), P({4})};
    CHECK(layer == expected);
}

TEST_CASE("interlacing neighbours match the predicate") {
    const auto all = enumerate_partitions(8);
    for (const auto& mu : enumerate_partitions(5)) {
        std::set<Partition> below, above;
        for_each_interlacing_below(mu, [&](const Partition& nu) { CHECK(below.insert(nu).second); });
        for_each_interlacing_above(mu, 8, [&](const Partition& nu) { CHECK(above.insert(nu).second); });
        std::set<Partition> want_below, want_above;
        for (const auto& nu : all) {
            if (interlaces(mu, nu)) want_below.insert(nu);
            if (interlaces(nu, mu)) want_above.insert(nu);
        }
        CHECK(below == want_below);
        CHECK(above == want_above);
    }
}

TEST_CASE("gamma_plus neighbours of (2,1)") {
    std::set<Partition> below;
    for_each_interlacing_below(Partition{2, 1}, [&](const Partition& nu) { below.insert(nu); });
    CHECK(below == std::set<Partition>{P({1}), P({2}), P({1, 1}), P({2, 1})});
}
