#include "macmahon/slicing.hpp"

#include <algorithm>

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {
const Partition kEmpty;
}

SliceSequence::SliceSequence(std::vector<Partition> slices) : slices_(std::move(slices)) {
    if (slices_.size() % 2 == 0) {
        throw ValidationError("slice sequence must have odd length (t = -T..T), got " +
                              std::to_string(slices_.size()));
    }
    const int T = extent();
    // Slices beyond -T..T are empty, so the outermost pairs are checked too.
    for (int t = -T - 1; t <= T; ++t) {
        const Partition& here = at(t);
        const Partition& next = at(t + 1);
        const bool ok = t < 0 ? interlaces(next, here) : interlaces(here, next);
        if (!ok) {
            throw ValidationError("interlacing fails between t=" + std::to_string(t) + " " +
                                  here.to_string() + " and t=" + std::to_string(t + 1) + " " +
                                  next.to_string());
        }
    }
}

const Partition& SliceSequence::at(int t) const noexcept {
    const int T = extent();
    if (t < -T || t > T) return kEmpty;
    return slices_[static_cast<std::size_t>(t + T)];
}

std::int64_t SliceSequence::weight() const noexcept {
    std::int64_t w = 0;
    for (const auto& s : slices_) w += s.size();
    return w;
}

SliceSequence SliceSequence::trimmed() const {
    std::size_t lo = 0;
    std::size_t hi = slices_.size() - 1;
    while (lo < hi && slices_[lo].empty() && slices_[hi].empty()) {
        ++lo;
        --hi;
    }
    SliceSequence out;
    out.slices_.assign(slices_.begin() + static_cast<std::ptrdiff_t>(lo),
                       slices_.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    return out;
}

SliceSequence slice(const PlanePartition& pi) {
    const int rows = static_cast<int>(pi.row_count());
    const int cols = static_cast<int>(pi.column_count());
    const int T = std::max({rows - 1, cols - 1, 0});
    std::vector<Partition> slices;
    slices.reserve(static_cast<std::size_t>(2 * T + 1));
    for (int t = -T; t <= T; ++t) {
        std::vector<int> parts;
        // Starting cell of the diagonal, then step down-right while entries are positive.
        std::size_t i = t < 0 ? static_cast<std::size_t>(-t) : 0;
        std::size_t j = t < 0 ? 0 : static_cast<std::size_t>(t);
        for (; pi.at(i, j) > 0; ++i, ++j) parts.push_back(pi.at(i, j));
        slices.push_back(Partition::from_canonical(std::move(parts)));
    }
    // Validating construction: the interlacing property is checked, not assumed.
    return SliceSequence(std::move(slices));
}

PlanePartition unslice(const SliceSequence& seq) {
    const int T = seq.extent();
    std::vector<std::vector<std::int64_t>> matrix(static_cast<std::size_t>(T) + 1,
                                                  std::vector<std::int64_t>(static_cast<std::size_t>(T) + 1, 0));
    for (int t = -T; t <= T; ++t) {
        const Partition& s = seq.at(t);
        for (std::size_t k = 0; k < s.length(); ++k) {
            const std::size_t i = t < 0 ? k + static_cast<std::size_t>(-t) : k;
            const std::size_t j = t < 0 ? k : k + static_cast<std::size_t>(t);
            matrix[i][j] = s[k];
        }
    }
    return PlanePartition(matrix);
}

}  // namespace macmahon
