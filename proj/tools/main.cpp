// macmahon: count plane partitions three ways, slice them, and check the
// transfer-operator identities behind the product formula.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "macmahon/cli.hpp"
#include "macmahon/errors.hpp"

namespace {

using namespace macmahon;
using namespace macmahon::cli;

struct Common {
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--output", common.output, "Write the report to FILE instead of stdout");
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const RunReport& report, const Common& common) {
    const std::string body = common.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
    if (common.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(common.output);
    if (!out) throw ValidationError("cannot write output file '" + common.output + "'");
    out << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane partition generating function: product, transfer matrix and brute force"};
    app.require_subcommand(1);
    Common common;
    std::string prune = "plain";
    int ceiling = kDefaultBruteforceCeiling;

    CountOptions count;
    std::vector<std::string> methods{"product", "transfer", "bruteforce"};
    auto* count_cmd = app.add_subcommand("count", "Coefficients of the generating function by each method");
    count_cmd->add_option("--terms", count.terms, "Number of coefficients (order L)")->capture_default_str();
    count_cmd->add_option("--methods", methods, "Comma-separated subset of product,transfer,bruteforce")
        ->delimiter(',')
        ->check(CLI::IsMember({"product", "transfer", "bruteforce"}));
    count_cmd->add_option("--prune", prune, "Transfer pruning")->check(CLI::IsMember({"plain", "sharp"}));
    count_cmd->add_option("--bruteforce-ceiling", ceiling, "Largest volume for brute force")->capture_default_str();
    add_common(count_cmd, common);

    std::string input;
    bool roundtrip = false;
    auto* slice_cmd = app.add_subcommand("slice", "Diagonal slices of a plane partition");
    slice_cmd->add_option("--input", input, "Plane partition file (text or JSON); '-' for stdin")->required();
    slice_cmd->add_flag("--roundtrip", roundtrip, "Also check unslice(slice(pi)) == pi");
    add_common(slice_cmd, common);

    auto* unslice_cmd = app.add_subcommand("unslice", "Rebuild a plane partition from its slices");
    unslice_cmd->add_option("--input", input, "Slice sequence file (text or JSON); '-' for stdin")->required();
    unslice_cmd->add_flag("--roundtrip", roundtrip, "Also check slice(unslice(s)) == s");
    add_common(unslice_cmd, common);

    VerifyOptions verify;
    std::optional<int> max_size;
    std::optional<std::size_t> order;
    std::vector<std::string> points;
    auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
    verify_cmd->add_option("--suite", verify.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(verify_suites()));
    verify_cmd->add_option("--max-size", max_size, "Size bound (volume, partition size or box side)");
    verify_cmd->add_option("--order", order, "Truncation order for the product suite");
    verify_cmd->add_option("--point", points, "Commutation point x,y as rationals, e.g. 1/2,1/3 (repeatable)");
    verify_cmd->add_option("--prune", prune, "Transfer pruning")->check(CLI::IsMember({"plain", "sharp"}));
    add_common(verify_cmd, common);

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time the three methods at one order");
    bench_cmd->add_option("--order", bench.order, "Truncation order L")->capture_default_str();
    bench_cmd->add_option("--prune", prune, "Transfer pruning")->check(CLI::IsMember({"plain", "sharp"}));
    bench_cmd->add_option("--bruteforce-ceiling", ceiling, "Largest volume for brute force")->capture_default_str();
    add_common(bench_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        RunReport report;
        if (count_cmd->parsed()) {
            count.methods.clear();
            for (const auto& m : methods) count.methods.push_back(parse_method(m));
            count.prune = parse_prune(prune);
            count.bruteforce_ceiling = ceiling;
            report = cmd_count(count);
        } else if (slice_cmd->parsed()) {
            report = cmd_slice(parse_plane_partition(read_input(input)), roundtrip);
            report.parameters["input"] = input;
        } else if (unslice_cmd->parsed()) {
            report = cmd_unslice(parse_slice_sequence(read_input(input)), roundtrip);
            report.parameters["input"] = input;
        } else if (verify_cmd->parsed()) {
            verify.max_size = max_size;
            verify.order = order;
            verify.prune = parse_prune(prune);
            for (const auto& p : points) {
                const auto comma = p.find(',');
                if (comma == std::string::npos) throw ValidationError("--point needs x,y, got '" + p + "'");
                verify.points.emplace_back(ExactRational::parse(p.substr(0, comma)),
                                           ExactRational::parse(p.substr(comma + 1)));
            }
            report = cmd_verify(verify);
        } else if (bench_cmd->parsed()) {
            bench.prune = parse_prune(prune);
            bench.bruteforce_ceiling = ceiling;
            report = cmd_bench(bench);
        }
        emit(report, common);
        return report.exit_code;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}
