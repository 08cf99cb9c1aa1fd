#include "macmahon/oracles.hpp"

#include <algorithm>
#include <vector>

namespace macmahon::oracle {

TruncatedSum commutation_lhs_truncated(const Partition& mu, const Partition& mu1,
                                       const ExactRational& x, const ExactRational& y, int max_size) {
    const std::size_t rows = std::max(mu.length(), mu1.length()) + 1;
    // Candidate box: row 0 up to max_size, row i up to the larger of the two row i-1 parts.
    std::vector<int> cap(rows);
    cap[0] = max_size;
    for (std::size_t i = 1; i < rows; ++i) cap[i] = std::max(mu[i - 1], mu1[i - 1]);

    TruncatedSum out;
    std::vector<int> nu(rows, 0);
    auto scan = [&](auto&& self, std::size_t i, int used) -> void {
        if (i == rows) {
            std::vector<int> parts;
            for (int v : nu) {
                if (v == 0) break;
                parts.push_back(v);
            }
            // Candidates need not be partitions; the predicate decides.
            if (!std::is_sorted(nu.rbegin(), nu.rend())) return;
            const Partition p = Partition::from_canonical(std::move(parts));
            if (!interlaces(p, mu) || !interlaces(p, mu1)) return;
            out.partial += x.pow(p.size() - mu1.size()) * y.pow(p.size() - mu.size());
            ++out.terms;
            return;
        }
        for (int v = 0; v <= std::min(cap[i], max_size - used); ++v) {
            nu[i] = v;
            self(self, i + 1, used + v);
        }
        nu[i] = 0;
    };
    scan(scan, 0, 0);

    ExactRational shapes(1);
    for (std::size_t i = 1; i < rows; ++i) shapes *= ExactRational(cap[i] + 1);
    const ExactRational z = (x * y).abs();
    out.tail_bound = shapes * x.abs().pow(-mu1.size()) * y.abs().pow(-mu.size()) * z.pow(max_size + 1) /
                     (ExactRational(1) - z);
    return out;
}

}  // namespace macmahon::oracle
