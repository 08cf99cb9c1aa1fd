#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace macmahon {

/// An integer partition (Young diagram): a weakly decreasing sequence of
/// positive parts. The empty sequence is the empty partition.
///
/// Partitions order size-first, then lexicographically by parts. All
/// containers keyed by Partition therefore iterate deterministically.
class Partition {
public:
    Partition() = default;

    /// Validates and canonicalizes: trailing zeros are stripped, negative
    /// entries and increases are rejected with ValidationError.
    explicit Partition(std::span<const std::int64_t> values);
    Partition(std::initializer_list<int> values);

    /// Trusted construction from parts already known to be canonical.
    static Partition from_canonical(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Number of boxes.
    int size() const noexcept { return size_; }

    /// Part i (0-indexed); absent parts read as 0.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// mu.contained_in(lambda) iff mu_i <= lambda_i for all i.
    bool contained_in(const Partition& lambda) const noexcept;

    /// "(5,2,1)", or "()" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition make_partition(std::span<const std::int64_t> values);

/// mu > nu in the interlacing order: mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...
bool interlaces(const Partition& mu, const Partition& nu) noexcept;

/// All partitions of exactly n, lexicographically ascending.
std::vector<Partition> partitions_of(int n);

/// All partitions of size <= max_size, size-then-lexicographic.
std::vector<Partition> enumerate_partitions(int max_size);

/// Calls f(nu) for every nu with mu > nu. There are finitely many.
template <typename F>
void for_each_interlacing_below(const Partition& mu, F&& f);

/// Calls f(nu) for every nu > mu with |nu| <= max_size.
template <typename F>
void for_each_interlacing_above(const Partition& mu, int max_size, F&& f);

namespace detail {

// Row i of nu ranges over [lo[i], hi[i]]; budget caps the running total.
template <typename F>
void for_each_in_row_ranges(std::vector<int>& lo, std::vector<int>& hi, int budget, F& f) {
    std::vector<int> rows(lo.size(), 0);
    int base = 0;
    for (int v : lo) base += v;
    if (base > budget) return;
    // Depth-first over rows; `spare` is what the rows after i may add above their minimum.
    auto recurse = [&](auto&& self, std::size_t i, int spare) -> void {
        if (i == lo.size()) {
            std::vector<int> parts;
            parts.reserve(rows.size());
            for (int v : rows) {
                if (v == 0) break;
                parts.push_back(v);
            }
            f(Partition::from_canonical(std::move(parts)));
            return;
        }
        const int top = std::min(hi[i], lo[i] + spare);
        for (int v = lo[i]; v <= top; ++v) {
            rows[i] = v;
            self(self, i + 1, spare - (v - lo[i]));
        }
    };
    recurse(recurse, 0, budget - base);
}

}  // namespace detail

template <typename F>
void for_each_interlacing_below(const Partition& mu, F&& f) {
    // nu_i in [mu_{i+1}, mu_i]
    const std::size_t n = mu.length();
    std::vector<int> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = mu[i + 1];
        hi[i] = mu[i];
    }
    detail::for_each_in_row_ranges(lo, hi, mu.size(), f);
}

template <typename F>
void for_each_interlacing_above(const Partition& mu, int max_size, F&& f) {
    // nu_1 >= mu_1 unbounded, nu_{i+1} in [mu_{i+1}, mu_i]
    const std::size_t n = mu.length() + 1;
    std::vector<int> lo(n), hi(n);
    lo[0] = mu[0];
    hi[0] = max_size;
    for (std::size_t i = 1; i < n; ++i) {
        lo[i] = mu[i];
        hi[i] = mu[i - 1];
    }
    detail::for_each_in_row_ranges(lo, hi, max_size, f);
}

}  // namespace macmahon
