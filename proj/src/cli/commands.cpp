#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "macmahon/cli.hpp"
#include "macmahon/errors.hpp"
#include "macmahon/products.hpp"
#include "macmahon/verify.hpp"

namespace macmahon::cli {

using nlohmann::json;

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::product: return "product";
        case Method::transfer: return "transfer";
        case Method::bruteforce: return "bruteforce";
    }
    return "product";
}

Method parse_method(std::string_view name) {
    if (name == "product") return Method::product;
    if (name == "transfer") return Method::transfer;
    if (name == "bruteforce") return Method::bruteforce;
    throw ValidationError("unknown method '" + std::string(name) + "'");
}

Prune parse_prune(std::string_view name) {
    if (name == "plain") return Prune::plain;
    if (name == "sharp") return Prune::sharp;
    throw ValidationError("unknown prune mode '" + std::string(name) + "'");
}

static std::string_view prune_name(Prune p) { return p == Prune::plain ? "plain" : "sharp"; }

json RunReport::to_json() const {
    return json{{"command", command},
                {"parameters", parameters},
                {"results", results},
                {"timings", timings}};
}

namespace {

void text_value(std::ostringstream& out, const std::string& key, const json& value, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (value.is_object()) {
        out << pad << key << ":\n";
        for (const auto& [k, v] : value.items()) text_value(out, k, v, depth + 1);
    } else if (value.is_array() && !value.empty() && value.front().is_string()) {
        // Coefficient arrays: one per line.
        out << pad << key << ":\n";
        for (const auto& v : value) out << pad << "  " << v.get<std::string>() << '\n';
    } else if (value.is_string()) {
        out << pad << key << ": " << value.get<std::string>() << '\n';
    } else {
        out << pad << key << ": " << value.dump() << '\n';
    }
}

json coefficients_json(const QSeries& z) { return z.to_decimal_strings(); }

template <typename F>
auto timed(F&& f, double& ms) {
    const auto start = std::chrono::steady_clock::now();
    auto value = f();
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return value;
}

json bruteforce_coefficients(std::size_t terms) {
    json out = json::array();
    for (auto c : count_plane_partitions_up_to(static_cast<int>(terms) - 1)) out.push_back(std::to_string(c));
    return out;
}

json run_method(Method m, std::size_t terms, Prune prune) {
    switch (m) {
        case Method::product: return coefficients_json(macmahon_product(terms));
        case Method::transfer: return coefficients_json(transfer_partition_function(terms, std::nullopt, prune));
        case Method::bruteforce: return bruteforce_coefficients(terms);
    }
    return json::array();
}

bool bruteforce_allowed(std::size_t terms, int ceiling) {
    return static_cast<long long>(terms) - 1 <= ceiling;
}

}  // namespace

std::string RunReport::to_text() const {
    std::ostringstream out;
    out << command << '\n';
    text_value(out, "parameters", parameters, 0);
    text_value(out, "results", results, 0);
    if (!timings.empty()) text_value(out, "timings_ms", timings, 0);
    return out.str();
}

RunReport cmd_count(const CountOptions& options) {
    if (options.terms == 0) throw ValidationError("--terms must be >= 1");
    if (options.methods.empty()) throw ValidationError("no methods selected");
    RunReport report;
    report.command = "count";
    json methods = json::array();
    for (Method m : options.methods) methods.push_back(to_string(m));
    report.parameters = {{"terms", options.terms},
                         {"methods", methods},
                         {"prune", prune_name(options.prune)},
                         {"bruteforce_ceiling", options.bruteforce_ceiling}};
    for (Method m : options.methods) {
        if (m == Method::bruteforce && !bruteforce_allowed(options.terms, options.bruteforce_ceiling)) {
            throw ValidationError("bruteforce refused: terms " + std::to_string(options.terms) +
                                  " needs volume " + std::to_string(options.terms - 1) +
                                  " > ceiling " + std::to_string(options.bruteforce_ceiling));
        }
    }

    json coefficients = json::object();
    for (Method m : options.methods) {
        double ms = 0;
        coefficients[std::string(to_string(m))] = timed([&] { return run_method(m, options.terms, options.prune); }, ms);
        report.timings[std::string(to_string(m))] = ms;
    }
    std::string verdict = "skipped";
    if (coefficients.size() >= 2) {
        const json& first = coefficients.begin().value();
        bool agree = true;
        for (const auto& [name, c] : coefficients.items()) agree = agree && c == first;
        verdict = agree ? "pass" : "fail";
        if (!agree) report.exit_code = kExitVerificationFailed;
    }
    report.results = {{"coefficients", coefficients}, {"verdict", verdict}};
    return report;
}

RunReport cmd_slice(const PlanePartition& pi, bool roundtrip) {
    RunReport report;
    report.command = "slice";
    report.parameters = {{"matrix", pi.to_matrix()}, {"roundtrip", roundtrip}};
    const SliceSequence seq = slice(pi);
    json slices = json::array();
    const int T = seq.extent();
    for (int t = -T; t <= T; ++t) slices.push_back({{"t", t}, {"parts", seq.at(t).parts()}});
    std::string check = "skipped";
    if (roundtrip) {
        check = unslice(seq) == pi ? "pass" : "fail";
        if (check == "fail") report.exit_code = kExitVerificationFailed;
    }
    report.results = {{"slices", slices}, {"volume", pi.volume()}, {"roundtrip", check}};
    return report;
}

RunReport cmd_unslice(const SliceSequence& seq, bool roundtrip) {
    RunReport report;
    report.command = "unslice";
    json input = json::array();
    for (const auto& s : seq.slices()) input.push_back(s.parts());
    report.parameters = {{"slices", input}, {"roundtrip", roundtrip}};
    const PlanePartition pi = unslice(seq);
    std::string check = "skipped";
    if (roundtrip) {
        check = slice(pi) == seq.trimmed() ? "pass" : "fail";
        if (check == "fail") report.exit_code = kExitVerificationFailed;
    }
    report.results = {{"matrix", pi.to_matrix()}, {"volume", pi.volume()}, {"roundtrip", check}};
    return report;
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> suites{"slicing", "commutation", "product", "schur", "adjoint"};
    return suites;
}

RunReport cmd_verify(const VerifyOptions& options) {
    RunReport report;
    report.command = "verify";
    report.parameters = {{"suite", options.suite}};

    auto bounded = [](const char* what, long long value, long long lo, long long hi) {
        if (value < lo || value > hi) {
            throw ValidationError(std::string(what) + " must be in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "], got " + std::to_string(value));
        }
        return value;
    };

    std::vector<PropertyResult> results;
    double ms = 0;
    if (options.suite == "slicing") {
        const int v = static_cast<int>(bounded("--max-size", options.max_size.value_or(8), 0, kMaxSlicingVolume));
        report.parameters["max_size"] = v;
        results = timed([&] { return verify_slicing(v); }, ms);
    } else if (options.suite == "commutation") {
        const int k = static_cast<int>(bounded("--max-size", options.max_size.value_or(4), 0, kMaxCommutationSize));
        auto points = options.points.empty() ? default_commutation_points() : options.points;
        json pts = json::array();
        for (const auto& [x, y] : points) pts.push_back({x.to_string(), y.to_string()});
        report.parameters["max_size"] = k;
        report.parameters["points"] = pts;
        results = timed([&] { return verify_commutation(k, points); }, ms);
    } else if (options.suite == "product") {
        const auto L = static_cast<std::size_t>(
            bounded("--order", static_cast<long long>(options.order.value_or(15)), 1, kMaxProductOrder));
        report.parameters["order"] = L;
        report.parameters["prune"] = prune_name(options.prune);
        results = timed([&] { return verify_product(L, options.prune); }, ms);
    } else if (options.suite == "schur") {
        const int side = static_cast<int>(bounded("--max-size", options.max_size.value_or(3), 0, kMaxSchurSide));
        report.parameters["max_size"] = side;
        results = timed([&] { return verify_schur(side); }, ms);
    } else if (options.suite == "adjoint") {
        const int k = static_cast<int>(bounded("--max-size", options.max_size.value_or(6), 0, kMaxAdjointSize));
        report.parameters["max_size"] = k;
        results = timed([&] { return verify_adjoint(k); }, ms);
    } else {
        throw ValidationError("unknown suite '" + options.suite + "'");
    }
    report.timings[options.suite] = ms;

    json properties = json::array();
    for (const auto& r : results) {
        json p = {{"name", r.name}, {"verdict", to_string(r.verdict)}, {"cases", r.cases}};
        if (!r.counterexample.empty()) p["counterexample"] = r.counterexample;
        properties.push_back(p);
    }
    const bool ok = all_passed(results);
    report.results = {{"properties", properties}, {"verdict", ok ? "pass" : "fail"}};
    if (!ok) report.exit_code = kExitVerificationFailed;
    return report;
}

RunReport cmd_bench(const BenchOptions& options) {
    if (options.order == 0) throw ValidationError("--order must be >= 1");
    RunReport report;
    report.command = "bench";
    report.parameters = {{"order", options.order},
                         {"prune", prune_name(options.prune)},
                         {"bruteforce_ceiling", options.bruteforce_ceiling}};
    json coefficients = json::object();
    json status = json::object();
    for (Method m : {Method::product, Method::transfer, Method::bruteforce}) {
        const std::string name(to_string(m));
        if (m == Method::bruteforce && !bruteforce_allowed(options.order, options.bruteforce_ceiling)) {
            status[name] = "skipped";
            continue;
        }
        double ms = 0;
        coefficients[name] = timed([&] { return run_method(m, options.order, options.prune); }, ms);
        report.timings[name] = ms;
    }
    const json& reference = coefficients["product"];
    bool agree = true;
    for (const auto& [name, c] : coefficients.items()) {
        status[name] = c == reference ? "pass" : "fail";
        agree = agree && c == reference;
    }
    if (!agree) report.exit_code = kExitVerificationFailed;
    report.results = {{"coefficients", coefficients}, {"status", status}, {"verdict", agree ? "pass" : "fail"}};
    return report;
}

}  // namespace macmahon::cli
