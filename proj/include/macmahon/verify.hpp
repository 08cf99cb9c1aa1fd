#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macmahon/fock.hpp"
#include "macmahon/rational.hpp"

namespace macmahon {

enum class Verdict { pass, fail, skipped };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of one property over a finite census.
struct PropertyResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::uint64_t cases = 0;
    /// First failing case, empty on pass.
    std::string counterexample;
};

bool all_passed(std::span<const PropertyResult> results) noexcept;

/// slice/unslice round trips, peak interlacing and weight over every plane
/// partition of volume <= max_volume.
std::vector<PropertyResult> verify_slicing(int max_volume);

/// (1 - xy) lhs = rhs for all pairs of partitions of size <= max_size at each
/// point, plus closed-form lhs against the brute-force truncated sum within
/// its tail bound.
std::vector<PropertyResult> verify_commutation(
    int max_size, std::span<const std::pair<ExactRational, ExactRational>> points,
    int truncation = 60);

/// The three default evaluation points.
std::vector<std::pair<ExactRational, ExactRational>> default_commutation_points();

/// For every order L in 1..max_order: transfer(L, T) is the same for
/// T = L, L+1, L+2 and equals finite_grid_product(T, L) and macmahon_product(L).
std::vector<PropertyResult> verify_product(std::size_t max_order, Prune prune = Prune::plain);

/// gamma_chain_matrix_element against the tableau count for all lambda inside
/// the box (side^side), mu inside lambda, weight sequences of length <= side
/// with entries <= max_weight.
std::vector<PropertyResult> verify_schur(int side, std::size_t max_weight = 3, std::size_t order = 32);

/// On the basis of partitions of size <= max_size, the 0/1 matrix of
/// apply_gamma_minus is the transpose of that of apply_gamma_plus.
std::vector<PropertyResult> verify_adjoint(int max_size);

}  // namespace macmahon
