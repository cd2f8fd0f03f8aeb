#pragma once

// Input parsing and output serialization for the fnf tool.
//
// Input is either plain text (whitespace-separated decimals, the whole file
// being the first row) or a JSON object {"first_row": [...], "n": k}. The
// first non-whitespace byte decides: '{' means JSON.

#include <tfnf/fnf.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fnf_cli {

using tfnf::Index;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputDocument {
    std::vector<double> first_row;
    std::optional<Index> n;
};

/// Entries with |x| <= tolerance are stored as exact zeros.
InputDocument parse_input(std::string_view text, double tolerance = 0.0);

tfnf::FirstRow<double> to_first_row(const InputDocument& input);

struct BlockDocument {
    Index size = 0;
    std::vector<double> first_row;
    std::vector<Index> vertices;

    bool operator==(const BlockDocument&) const = default;
};

struct OutputDocument {
    Index n = 0;
    Index component_count = 0;
    std::vector<Index> cis;
    std::vector<BlockDocument> blocks;
    std::vector<Index> permutation;
    std::optional<std::vector<tfnf::ReductionStep>> trace;

    bool operator==(const OutputDocument&) const = default;
};

OutputDocument make_output(const tfnf::FnfResult<double>& result, bool include_trace);

/// Integral values print as plain integers, everything else as the
/// shortest decimal that round-trips.
std::string format_number(double value);

nlohmann::ordered_json to_json(const OutputDocument& doc);
OutputDocument output_from_json(const nlohmann::json& j);

std::string serialize_json(const OutputDocument& doc);
std::string serialize_text(const OutputDocument& doc);

} // namespace fnf_cli
