#include "macmahon/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "macmahon/chain.hpp"
#include "macmahon/commutation.hpp"
#include "macmahon/oracles.hpp"
#include "macmahon/plane_partition.hpp"
#include "macmahon/products.hpp"
#include "macmahon/slicing.hpp"
#include "macmahon/tableaux.hpp"

namespace macmahon {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "fail";
}

bool all_passed(std::span<const PropertyResult> results) noexcept {
    return std::none_of(results.begin(), results.end(),
                        [](const PropertyResult& r) { return r.verdict == Verdict::fail; });
}

namespace {

PropertyResult property(std::string name) {
    PropertyResult r;
    r.name = std::move(name);
    return r;
}

// Records a check; keeps the first counterexample only.
void record(PropertyResult& r, bool ok, const auto& describe) {
    ++r.cases;
    if (!ok && r.verdict != Verdict::fail) {
        r.verdict = Verdict::fail;
        r.counterexample = describe();
    }
}

std::string one_line(const PlanePartition& pi) {
    std::string s = pi.to_string();
    std::replace(s.begin(), s.end(), '\n', ';');
    return s.empty() ? "(empty)" : s;
}

}  // namespace

std::vector<PropertyResult> verify_slicing(int max_volume) {
    auto round_trip = property("unslice(slice(pi)) == pi");
    auto reslice = property("slice(unslice(s)) == s");
    auto peak = property("slices interlace up to t=0 and down after");
    auto weight = property("sum of slice sizes == volume");
    for (int n = 0; n <= max_volume; ++n) {
        for_each_plane_partition(n, [&](const PlanePartition& pi) {
            std::optional<SliceSequence> s;
            try {
                s = slice(pi);
                record(peak, true, [] { return std::string(); });
            } catch (const std::exception& e) {
                record(peak, false, [&] { return one_line(pi) + ": " + e.what(); });
                return;
            }
            const PlanePartition back = unslice(*s);
            record(round_trip, back == pi, [&] { return one_line(pi) + " -> " + one_line(back); });
            record(reslice, slice(back) == *s, [&] { return one_line(pi); });
            record(weight, s->weight() == pi.volume(), [&] { return one_line(pi); });
        });
    }
    return {round_trip, reslice, peak, weight};
}

std::vector<std::pair<ExactRational, ExactRational>> default_commutation_points() {
    return {{ExactRational(1, 2), ExactRational(1, 3)},
            {ExactRational(2, 3), ExactRational(1, 4)},
            {ExactRational(-1, 2), ExactRational(1, 3)}};
}

std::vector<PropertyResult> verify_commutation(
    int max_size, std::span<const std::pair<ExactRational, ExactRational>> points, int truncation) {
    auto relation = property("(1 - xy) lhs == rhs");
    auto tail = property("closed-form lhs within tail bound of truncated sum");
    const auto basis = enumerate_partitions(max_size);
    for (const auto& [x, y] : points) {
        for (const auto& mu : basis) {
            for (const auto& mu1 : basis) {
                const auto where = [&] {
                    return "mu=" + mu.to_string() + " mu1=" + mu1.to_string() + " x=" + x.to_string() +
                           " y=" + y.to_string();
                };
                const CommutationReport r = commutation_check_exact(mu, mu1, x, y);
                record(relation, r.holds, [&] {
                    return where() + " lhs=" + r.lhs.to_string() + " rhs=" + r.rhs.to_string();
                });
                const auto approx = oracle::commutation_lhs_truncated(mu, mu1, x, y, truncation);
                record(tail, (r.lhs - approx.partial).abs() <= approx.tail_bound,
                       [&] { return where() + " closed=" + r.lhs.to_string(); });
            }
        }
    }
    return {relation, tail};
}

std::vector<PropertyResult> verify_product(std::size_t max_order, Prune prune) {
    auto stable = property("transfer(L, T) independent of T >= L");
    auto grid = property("transfer(L, T) == finite_grid_product(T, L)");
    auto closed = property("transfer(L) == macmahon_product(L)");
    for (std::size_t L = 1; L <= max_order; ++L) {
        const QSeries reference = macmahon_product(L);
        const QSeries base = transfer_partition_function(L, L, prune);
        record(closed, base == reference, [&] {
            return "L=" + std::to_string(L) + ": " + base.to_string() + " vs " + reference.to_string();
        });
        for (std::size_t T = L; T <= L + 2; ++T) {
            const QSeries z = T == L ? base : transfer_partition_function(L, T, prune);
            if (T != L) {
                record(stable, z == base,
                       [&] { return "L=" + std::to_string(L) + " T=" + std::to_string(T); });
            }
            const QSeries g = finite_grid_product(T, L);
            record(grid, z == g, [&] {
                return "L=" + std::to_string(L) + " T=" + std::to_string(T) + ": " + z.to_string() +
                       " vs " + g.to_string();
            });
        }
    }
    return {stable, grid, closed};
}

std::vector<PropertyResult> verify_schur(int side, std::size_t max_weight, std::size_t order) {
    auto agree = property("chain matrix element == skew tableau count");
    std::vector<Partition> shapes;
    for (const auto& p : enumerate_partitions(side * side)) {
        if (p.length() <= static_cast<std::size_t>(side) && p[0] <= side) shapes.push_back(p);
    }
    std::vector<std::vector<std::size_t>> weight_seqs{{}};
    for (std::size_t len = 1; len <= static_cast<std::size_t>(side); ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& w : weight_seqs) {
            if (w.size() != len - 1) continue;
            for (std::size_t c = 0; c <= max_weight; ++c) {
                auto ext = w;
                ext.push_back(c);
                next.push_back(std::move(ext));
            }
        }
        weight_seqs.insert(weight_seqs.end(), next.begin(), next.end());
    }
    for (const auto& lambda : shapes) {
        for (const auto& mu : shapes) {
            if (!mu.contained_in(lambda)) continue;
            for (const auto& c : weight_seqs) {
                const QSeries chain = gamma_chain_matrix_element(lambda, mu, c, order);
                const QSeries tableaux = count_skew_ssyt_weighted(lambda, mu, c, order);
                record(agree, chain == tableaux, [&] {
                    std::string w;
                    for (auto v : c) w += std::to_string(v) + ",";
                    return lambda.to_string() + "/" + mu.to_string() + " c=(" + w + "): " +
                           chain.to_string() + " vs " + tableaux.to_string();
                });
            }
        }
    }
    return {agree};
}

std::vector<PropertyResult> verify_adjoint(int max_size) {
    auto adjoint = property("gamma_minus matrix == transpose of gamma_plus matrix");
    const auto basis = enumerate_partitions(max_size);
    const std::size_t order = static_cast<std::size_t>(max_size) + 1;
    // Column mu of each operator, restricted to the basis.
    std::map<Partition, FockState> minus, plus;
    for (const auto& mu : basis) {
        FockState e(order);
        e.add(mu, QSeries::one(order));
        minus.emplace(mu, apply_gamma_minus(e));
        plus.emplace(mu, apply_gamma_plus(e));
    }
    for (const auto& mu : basis) {
        for (const auto& nu : basis) {
            // <nu| G- |mu> against <mu| G+ |nu>
            const QSeries a = minus.at(mu).coefficient(nu);
            const QSeries b = plus.at(nu).coefficient(mu);
            record(adjoint, a == b, [&] { return "mu=" + mu.to_string() + " nu=" + nu.to_string(); });
        }
    }
    return {adjoint};
}

}  // namespace macmahon
