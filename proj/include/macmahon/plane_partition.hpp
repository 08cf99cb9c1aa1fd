#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "macmahon/partition.hpp"

namespace macmahon {

/// A plane partition: a finitely supported matrix of nonnegative integers,
/// weakly decreasing along every row and every column. Stored as rows of
/// positive entries; entries outside the stored rows read as 0.
class PlanePartition {
public:
    PlanePartition() = default;

    /// Validates a row-major matrix. Zero entries are stripped; a row or
    /// column that increases throws ValidationError naming the position.
    explicit PlanePartition(const std::vector<std::vector<std::int64_t>>& matrix);

    /// Rows must already be partitions; column monotonicity is still checked.
    explicit PlanePartition(std::vector<Partition> rows);

    const std::vector<Partition>& rows() const noexcept { return rows_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t column_count() const noexcept { return rows_.empty() ? 0 : rows_.front().length(); }
    bool empty() const noexcept { return rows_.empty(); }

    /// Entry pi(i, j); 0 outside the support.
    int at(std::size_t i, std::size_t j) const noexcept {
        return i < rows_.size() ? rows_[i][j] : 0;
    }

    /// Total number of boxes.
    std::int64_t volume() const noexcept;

    std::vector<std::vector<std::int64_t>> to_matrix() const;
    std::string to_string() const;

    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

private:
    void check_columns() const;
    std::vector<Partition> rows_;
};

PlanePartition make_plane_partition(const std::vector<std::vector<std::int64_t>>& matrix);

inline std::int64_t volume(const PlanePartition& pi) { return pi.volume(); }

/// Number of plane partitions of volume exactly n.
std::uint64_t enumerate_plane_partitions(int n);

/// Counts for every volume 0..max_volume in one pass.
std::vector<std::uint64_t> count_plane_partitions_up_to(int max_volume);

/// Visits every plane partition of volume exactly n, in a fixed order:
/// first row ascending (size-then-lexicographic), then recursively the rest.
void for_each_plane_partition(int n, const std::function<void(const PlanePartition&)>& visit);

std::vector<PlanePartition> list_plane_partitions(int n);

}  // namespace macmahon
