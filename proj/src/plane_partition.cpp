#include "macmahon/plane_partition.hpp"

#include "macmahon/errors.hpp"

namespace macmahon {

PlanePartition::PlanePartition(const std::vector<std::vector<std::int64_t>>& matrix) {
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        Partition row;
        try {
            row = Partition(matrix[i]);
        } catch (const ValidationError& e) {
            throw ValidationError("row " + std::to_string(i) + ": " + e.what());
        }
        rows_.push_back(std::move(row));
    }
    // Trailing empty rows carry no information; interior ones are caught below.
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    check_columns();
}

PlanePartition::PlanePartition(std::vector<Partition> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    check_columns();
}

void PlanePartition::check_columns() const {
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        const Partition& above = rows_[i - 1];
        const Partition& row = rows_[i];
        for (std::size_t j = 0; j < std::max(row.length(), std::size_t{1}); ++j) {
            if (row[j] > above[j]) {
                throw ValidationError("column " + std::to_string(j) + " increases at row " +
                                      std::to_string(i) + " (" + std::to_string(above[j]) +
                                      " < " + std::to_string(row[j]) + ")");
            }
        }
        if (row.empty()) {
            throw ValidationError("row " + std::to_string(i) + " is empty but a later row is not");
        }
    }
}

std::int64_t PlanePartition::volume() const noexcept {
    std::int64_t v = 0;
    for (const auto& r : rows_) v += r.size();
    return v;
}

std::vector<std::vector<std::int64_t>> PlanePartition::to_matrix() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.emplace_back(r.parts().begin(), r.parts().end());
    return out;
}

std::string PlanePartition::to_string() const {
    std::string out;
    for (const auto& r : rows_) {
        for (std::size_t j = 0; j < r.length(); ++j) {
            if (j) out += ' ';
            out += std::to_string(r[j]);
        }
        out += '\n';
    }
    return out;
}

PlanePartition make_plane_partition(const std::vector<std::vector<std::int64_t>>& matrix) {
    return PlanePartition(matrix);
}

namespace {

// Rows rho with rho_j <= bound_j, |rho| == target, in lexicographic order.
void rows_under(const Partition& bound, int target, std::size_t j, int cap, std::vector<int>& prefix,
                const std::function<void(const Partition&)>& emit) {
    if (target == 0) {
        emit(Partition::from_canonical(prefix));
        return;
    }
    if (j >= bound.length()) return;
    const int top = std::min({cap, bound[j], target});
    for (int v = 1; v <= top; ++v) {
        prefix.push_back(v);
        rows_under(bound, target - v, j + 1, v, prefix, emit);
        prefix.pop_back();
    }
}

// Depth-first extension row by row; each row sits entrywise under the previous one.
void extend(std::vector<Partition>& rows, const Partition& bound, int remaining,
            const std::function<void(const PlanePartition&)>& visit) {
    if (remaining == 0) {
        visit(PlanePartition(rows));
        return;
    }
    for (int s = 1; s <= std::min(remaining, bound.size()); ++s) {
        std::vector<int> prefix;
        rows_under(bound, s, 0, bound[0], prefix, [&](const Partition& row) {
            rows.push_back(row);
            extend(rows, row, remaining - s, visit);
            rows.pop_back();
        });
    }
}

void count_into(const Partition& bound, int used, int max_volume, std::vector<std::uint64_t>& counts) {
    ++counts[static_cast<std::size_t>(used)];
    for (int s = 1; s <= std::min(max_volume - used, bound.size()); ++s) {
        std::vector<int> prefix;
        rows_under(bound, s, 0, bound[0], prefix,
                   [&](const Partition& row) { count_into(row, used + s, max_volume, counts); });
    }
}

}  // namespace

void for_each_plane_partition(int n, const std::function<void(const PlanePartition&)>& visit) {
    if (n < 0) return;
    std::vector<Partition> rows;
    // The first row is unconstrained: bound it by the single row (n).
    extend(rows, Partition::from_canonical(std::vector<int>(static_cast<std::size_t>(n), n)), n,
           visit);
}

std::vector<PlanePartition> list_plane_partitions(int n) {
    std::vector<PlanePartition> out;
    for_each_plane_partition(n, [&](const PlanePartition& pi) { out.push_back(pi); });
    return out;
}

std::vector<std::uint64_t> count_plane_partitions_up_to(int max_volume) {
    if (max_volume < 0) return {};
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_volume) + 1, 0);
    count_into(Partition::from_canonical(std::vector<int>(static_cast<std::size_t>(max_volume),
                                                          max_volume)),
               0, max_volume, counts);
    return counts;
}

std::uint64_t enumerate_plane_partitions(int n) {
    if (n < 0) return 0;
    return count_plane_partitions_up_to(n).back();
}

}  // namespace macmahon
