#pragma once

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macmahon/fock.hpp"
#include "macmahon/plane_partition.hpp"
#include "macmahon/rational.hpp"
#include "macmahon/slicing.hpp"

namespace macmahon::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Machine-readable result of one command. Coefficients are always decimal
/// strings; verdicts are "pass", "fail" or "skipped". Serialized with
/// sorted keys, so parse-then-dump reproduces the output byte for byte.
struct RunReport {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    /// Method name to wall-clock milliseconds.
    nlohmann::json timings = nlohmann::json::object();
    int exit_code = kExitOk;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

enum class Method { product, transfer, bruteforce };

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view name);
Prune parse_prune(std::string_view name);

inline constexpr int kDefaultBruteforceCeiling = 14;

struct CountOptions {
    std::size_t terms = 10;
    std::vector<Method> methods{Method::product, Method::transfer, Method::bruteforce};
    Prune prune = Prune::plain;
    /// Largest volume the brute-force census may reach.
    int bruteforce_ceiling = kDefaultBruteforceCeiling;
};

struct VerifyOptions {
    std::string suite;
    std::optional<int> max_size;
    std::optional<std::size_t> order;
    std::vector<std::pair<ExactRational, ExactRational>> points;
    Prune prune = Prune::plain;
};

struct BenchOptions {
    std::size_t order = 10;
    Prune prune = Prune::plain;
    int bruteforce_ceiling = kDefaultBruteforceCeiling;
};

/// Suites accepted by cmd_verify.
const std::vector<std::string>& verify_suites();

/// Ceilings on the verify size parameters.
inline constexpr int kMaxSlicingVolume = 12;
inline constexpr int kMaxCommutationSize = 6;
inline constexpr std::size_t kMaxProductOrder = 40;
inline constexpr int kMaxSchurSide = 4;
inline constexpr int kMaxAdjointSize = 10;

/// Coefficients of Z mod q^terms by each selected method, plus an agreement
/// verdict. Throws ValidationError for terms == 0 or a brute-force request
/// beyond the ceiling.
RunReport cmd_count(const CountOptions& options);

RunReport cmd_slice(const PlanePartition& pi, bool roundtrip = false);
RunReport cmd_unslice(const SliceSequence& seq, bool roundtrip = false);

/// Runs one property suite; exit_code is 1 if any property fails.
RunReport cmd_verify(const VerifyOptions& options);

/// Times each method at the given order; brute force is "skipped" above its ceiling.
RunReport cmd_bench(const BenchOptions& options);

/// Plane partition from text (one row per line, whitespace-separated) or
/// JSON (array of arrays). Throws ValidationError naming the problem.
PlanePartition parse_plane_partition(std::string_view input);

/// Slice sequence t = -T..T from text (one slice per line, "0" for the
/// empty slice) or JSON (array of arrays, [] for the empty slice).
SliceSequence parse_slice_sequence(std::string_view input);

}  // namespace macmahon::cli
