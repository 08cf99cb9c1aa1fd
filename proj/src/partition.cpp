#include "macmahon/partition.hpp"

#include <limits>

#include "macmahon/errors.hpp"

namespace macmahon {

Partition::Partition(std::span<const std::int64_t> values) {
    std::size_t n = values.size();
    while (n > 0 && values[n - 1] == 0) --n;
    parts_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t v = values[i];
        if (v < 0) {
            throw ValidationError("partition part " + std::to_string(i) + " is negative (" +
                                  std::to_string(v) + ")");
        }
        if (v > std::numeric_limits<int>::max() / 2) {
            throw ValidationError("partition part " + std::to_string(i) + " is too large");
        }
        if (i > 0 && v > values[i - 1]) {
            throw ValidationError("partition not weakly decreasing at index " + std::to_string(i) +
                                  " (" + std::to_string(values[i - 1]) + " < " + std::to_string(v) +
                                  ")");
        }
        if (v == 0) {
            throw ValidationError("partition has an interior zero at index " + std::to_string(i));
        }
        parts_.push_back(static_cast<int>(v));
        size_ += static_cast<int>(v);
    }
}

Partition::Partition(std::initializer_list<int> values)
    : Partition(std::vector<std::int64_t>(values.begin(), values.end())) {}

Partition Partition::from_canonical(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    for (int v : p.parts_) p.size_ += v;
    return p;
}

bool Partition::contained_in(const Partition& lambda) const noexcept {
    if (length() > lambda.length()) return false;
    for (std::size_t i = 0; i < length(); ++i) {
        if (parts_[i] > lambda[i]) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.parts_ <=> b.parts_;
}

Partition make_partition(std::span<const std::int64_t> values) { return Partition(values); }

bool interlaces(const Partition& mu, const Partition& nu) noexcept {
    const std::size_t n = std::max(mu.length(), nu.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (mu[i] < nu[i] || nu[i] < mu[i + 1]) return false;
    }
    return true;
}

namespace {

void collect_partitions(int remaining, int cap, std::vector<int>& prefix,
                        std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_canonical(prefix));
        return;
    }
    // Ascending first part gives lexicographic order within a fixed size.
    for (int v = 1; v <= std::min(remaining, cap); ++v) {
        prefix.push_back(v);
        collect_partitions(remaining - v, v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> prefix;
    collect_partitions(n, n, prefix, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto layer = partitions_of(n);
        out.insert(out.end(), std::make_move_iterator(layer.begin()),
                   std::make_move_iterator(layer.end()));
    }
    return out;
}

}  // namespace macmahon
