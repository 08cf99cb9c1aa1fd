#include <cctype>
#include <sstream>

#include "macmahon/cli.hpp"
#include "macmahon/errors.hpp"

namespace macmahon::cli {

namespace {

bool looks_like_json(std::string_view input) {
    for (char ch : input) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '[' || ch == '{';
    }
    return false;
}

std::vector<std::vector<std::int64_t>> json_rows(std::string_view input) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ValidationError("expected a JSON array of arrays");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& row = doc[i];
        if (!row.is_array()) throw ValidationError("line " + std::to_string(i) + " is not an array");
        std::vector<std::int64_t> values;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_number_integer()) {
                throw ValidationError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not an integer");
            }
            values.push_back(row[j].get<std::int64_t>());
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

// Blank lines and '#' comments are skipped.
std::vector<std::vector<std::int64_t>> text_rows(std::string_view input) {
    std::vector<std::vector<std::int64_t>> rows;
    std::istringstream in{std::string(input)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::int64_t> values;
        std::string tok;
        while (fields >> tok) {
            std::size_t used = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) {
                throw ValidationError("line " + std::to_string(line_no) + ": '" + tok +
                                      "' is not an integer");
            }
            values.push_back(v);
        }
        if (!values.empty()) rows.push_back(std::move(values));
    }
    return rows;
}

}  // namespace

PlanePartition parse_plane_partition(std::string_view input) {
    return PlanePartition(looks_like_json(input) ? json_rows(input) : text_rows(input));
}

SliceSequence parse_slice_sequence(std::string_view input) {
    const auto rows = looks_like_json(input) ? json_rows(input) : text_rows(input);
    if (rows.empty()) return SliceSequence();
    const int T = static_cast<int>(rows.size() / 2);
    std::vector<Partition> slices;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        try {
            slices.emplace_back(rows[k]);
        } catch (const ValidationError& e) {
            throw ValidationError("slice t=" + std::to_string(static_cast<int>(k) - T) + ": " + e.what());
        }
    }
    return SliceSequence(std::move(slices));
}

}  // namespace macmahon::cli
