#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "macmahon/partition.hpp"
#include "macmahon/plane_partition.hpp"

namespace macmahon {

/// Diagonal cross-sections of a plane partition, indexed t = -T .. T.
///
/// Slices rise (in the interlacing order) up to t = 0 and fall after it:
/// slice(t) < slice(t+1) for t < 0 and slice(t) > slice(t+1) for t >= 0.
/// The constructor enforces this and names the first offending t.
class SliceSequence {
public:
    /// The single empty slice.
    SliceSequence() : slices_(1) {}

    /// `slices` holds t = -T .. T in order; its length must be odd.
    explicit SliceSequence(std::vector<Partition> slices);

    /// T, the largest |t|.
    int extent() const noexcept { return static_cast<int>(slices_.size() / 2); }
    const std::vector<Partition>& slices() const noexcept { return slices_; }

    /// Slice at diagonal offset t; empty outside -T..T.
    const Partition& at(int t) const noexcept;

    std::int64_t weight() const noexcept;

    /// Same sequence with matching empty slices dropped from both ends.
    SliceSequence trimmed() const;

    friend bool operator==(const SliceSequence&, const SliceSequence&) = default;

private:
    std::vector<Partition> slices_;
};

/// slice(t)_i = pi(i, i+t) for t >= 0 and pi(i-t, i) for t < 0.
/// T is the smallest extent that holds every nonzero diagonal.
SliceSequence slice(const PlanePartition& pi);

/// Inverse of slice. Any valid sequence (boundary empty slices allowed)
/// reconstructs the unique plane partition with those diagonals.
PlanePartition unslice(const SliceSequence& seq);

}  // namespace macmahon
