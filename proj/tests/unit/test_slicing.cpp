#include <doctest.h>

#include "macmahon/errors.hpp"
#include "macmahon/slicing.hpp"

using namespace macmahon;

namespace {

const std::vector<std::vector<std::int64_t>> kFigure{{5, 3, 2, 1}, {4, 2, 1}, {2, 1, 1}, {1, 1}};

SliceSequence seq(std::initializer_list<Partition> slices) { return SliceSequence(slices); }

}  // namespace

TEST_CASE("figure matrix slices into the figure's interlacing sequence") {
    const SliceSequence s = slice(make_plane_partition(kFigure));
    CHECK(s.extent() == 3);
    CHECK(s == seq({{1}, {2, 1}, {4, 1}, {5, 2, 1}, {3, 1}, {2}, {1}}));
    CHECK(s.at(0) == Partition{5, 2, 1});
    CHECK(s.at(-3) == Partition{1});
    CHECK(s.weight() == 24);
}

TEST_CASE("degenerate slices") {
    CHECK(slice(make_plane_partition({})) == SliceSequence());
    CHECK(slice(make_plane_partition({{2}})) == seq({{2}}));
    CHECK(slice(make_plane_partition({{2, 1}})) == seq({{}, {2}, {1}}));
}

TEST_CASE("unslice inverts the figure") {
    const auto s = seq({{1}, {2, 1}, {4, 1}, {5, 2, 1}, {3, 1}, {2}, {1}});
    CHECK(unslice(s) == make_plane_partition(kFigure));
    CHECK(unslice(SliceSequence()).empty());
}

TEST_CASE("unslice of (1),(3),(1)") {
    const auto s = seq({{1}, {3}, {1}});
    const PlanePartition pi = unslice(s);
    CHECK(pi.to_matrix() == std::vector<std::vector<std::int64_t>>{{3, 1}, {1}});
    CHECK(slice(pi) == s);
}

TEST_CASE("padding with empty boundary slices reconstructs the same matrix") {
    const auto s = seq({{}, {}, {1}, {3}, {1}, {}, {}});
    CHECK(unslice(s) == unslice(seq({{1}, {3}, {1}})));
    CHECK(s.trimmed() == seq({{1}, {3}, {1}}));
}

TEST_CASE("invalid slice sequences name the failing t") {
    CHECK_THROWS_WITH_AS(seq({{1}, {3}}), doctest::Contains("odd length"), ValidationError);
    // Falls before the peak: (2) then (1) at t=-1 -> 0.
    CHECK_THROWS_WITH_AS(seq({{2}, {1}, {}}), doctest::Contains("t=-1"), ValidationError);
    // Rises after the peak.
    CHECK_THROWS_WITH_AS(seq({{}, {1}, {2}}), doctest::Contains("t=0"), ValidationError);
    // Outermost slice with two parts cannot follow the empty slice beyond it.
    CHECK_THROWS_WITH_AS(seq({{1, 1}, {2, 1}, {1}}), doctest::Contains("t=-2"), ValidationError);
}

TEST_CASE("bijection over every plane partition of volume <= 8") {
    std::size_t seen = 0;
    for (int n = 0; n <= 8; ++n) {
        for (const auto& pi : list_plane_partitions(n)) {
            const SliceSequence s = slice(pi);
            // The constructor already rejected non-peaked sequences; re-check explicitly.
            const int T = s.extent();
            for (int t = -T; t < T; ++t) {
                CHECK((t < 0 ? interlaces(s.at(t + 1), s.at(t)) : interlaces(s.at(t), s.at(t + 1))));
            }
            CHECK(s.weight() == pi.volume());
            const PlanePartition back = unslice(s);
            CHECK(back == pi);
            CHECK(slice(back) == s);
            ++seen;
        }
    }
    CHECK(seen == 342);
}
