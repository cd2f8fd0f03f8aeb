#include "fnf_cli/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace fnf_cli {

namespace {

constexpr double kMaxExactInteger = 9007199254740992.0; // 2^53

bool is_space(char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

double parse_decimal(std::string_view token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw InputError("not a decimal number: '" + std::string(token) + "'");
    }
    return value;
}

InputDocument parse_json_input(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON input: ") + e.what());
    }
    if (!j.is_object() || !j.contains("first_row") || !j["first_row"].is_array()) {
        throw InputError("JSON input must be an object with a \"first_row\" array");
    }
    InputDocument doc;
    for (const auto& entry : j["first_row"]) {
        if (!entry.is_number()) {
            throw InputError("first_row entries must be numbers");
        }
        doc.first_row.push_back(entry.get<double>());
    }
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) {
            throw InputError("\"n\" must be an integer");
        }
        doc.n = j["n"].get<Index>();
    }
    return doc;
}

InputDocument parse_text_input(std::string_view text) {
    InputDocument doc;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && is_space(text[pos])) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < text.size() && !is_space(text[pos])) {
            ++pos;
        }
        if (pos > start) {
            doc.first_row.push_back(parse_decimal(text.substr(start, pos - start)));
        }
    }
    return doc;
}

nlohmann::ordered_json number_json(double value) {
    if (std::isfinite(value) && std::trunc(value) == value && std::fabs(value) <= kMaxExactInteger) {
        return static_cast<std::int64_t>(value);
    }
    return value;
}

} // namespace

InputDocument parse_input(std::string_view text, double tolerance) {
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
        throw InputError("tolerance must be a finite non-negative number");
    }
    std::size_t first = 0;
    while (first < text.size() && is_space(text[first])) {
        ++first;
    }
    InputDocument doc = (first < text.size() && text[first] == '{')
                            ? parse_json_input(text.substr(first))
                            : parse_text_input(text);

    if (doc.first_row.empty()) {
        throw InputError("first row is empty");
    }
    if (doc.n && *doc.n != static_cast<Index>(doc.first_row.size())) {
        throw InputError("declared order n = " + std::to_string(*doc.n) +
                         " does not match first_row length " +
                         std::to_string(doc.first_row.size()));
    }
    for (double& x : doc.first_row) {
        if (!std::isfinite(x)) {
            throw InputError("first row contains a non-finite entry");
        }
        if (std::fabs(x) <= tolerance) {
            x = 0.0;
        }
    }
    return doc;
}

tfnf::FirstRow<double> to_first_row(const InputDocument& input) {
    return tfnf::FirstRow<double>(input.first_row);
}

OutputDocument make_output(const tfnf::FnfResult<double>& result, bool include_trace) {
    OutputDocument doc;
    doc.n = result.n;
    doc.component_count = result.c;
    doc.cis = result.cis.rho;
    doc.blocks.reserve(result.blocks.size());
    for (const auto& block : result.blocks) {
        doc.blocks.push_back({block.size(), block.first_row, block.vertices});
    }
    doc.permutation = result.permutation;
    if (include_trace) {
        doc.trace = result.trace.steps;
    }
    return doc;
}

std::string format_number(double value) {
    if (std::isfinite(value) && std::trunc(value) == value && std::fabs(value) <= kMaxExactInteger) {
        return std::to_string(static_cast<std::int64_t>(value));
    }
    std::array<char, 64> buffer{};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), ptr);
}

nlohmann::ordered_json to_json(const OutputDocument& doc) {
    nlohmann::ordered_json j;
    j["n"] = doc.n;
    j["component_count"] = doc.component_count;
    j["cis"] = doc.cis;
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& block : doc.blocks) {
        nlohmann::ordered_json b;
        b["size"] = block.size;
        auto row = nlohmann::ordered_json::array();
        for (double x : block.first_row) {
            row.push_back(number_json(x));
        }
        b["first_row"] = std::move(row);
        b["vertices"] = block.vertices;
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    j["permutation"] = doc.permutation;
    if (doc.trace) {
        auto trace = nlohmann::ordered_json::array();
        for (const auto& step : *doc.trace) {
            nlohmann::ordered_json s;
            s["kind"] = std::string(tfnf::to_string(step.kind));
            s["n_before"] = step.n_before;
            s["n_after"] = step.n_after;
            s["d"] = step.d;
            s["c"] = step.c;
            trace.push_back(std::move(s));
        }
        j["trace"] = std::move(trace);
    }
    return j;
}

OutputDocument output_from_json(const nlohmann::json& j) {
    try {
        OutputDocument doc;
        doc.n = j.at("n").get<Index>();
        doc.component_count = j.at("component_count").get<Index>();
        doc.cis = j.at("cis").get<std::vector<Index>>();
        for (const auto& b : j.at("blocks")) {
            doc.blocks.push_back({b.at("size").get<Index>(),
                                  b.at("first_row").get<std::vector<double>>(),
                                  b.at("vertices").get<std::vector<Index>>()});
        }
        doc.permutation = j.at("permutation").get<std::vector<Index>>();
        if (j.contains("trace")) {
            std::vector<tfnf::ReductionStep> steps;
            for (const auto& s : j.at("trace")) {
                const std::string kind = s.at("kind").get<std::string>();
                if (kind != "alpha" && kind != "beta") {
                    throw InputError("unknown reduction kind '" + kind + "'");
                }
                steps.push_back({kind == "alpha" ? tfnf::ReductionKind::Alpha
                                                 : tfnf::ReductionKind::Beta,
                                 s.at("n_before").get<Index>(), s.at("n_after").get<Index>(),
                                 s.at("d").get<Index>(), s.at("c").get<Index>()});
            }
            doc.trace = std::move(steps);
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed output document: ") + e.what());
    }
}

std::string serialize_json(const OutputDocument& doc) {
    return to_json(doc).dump(2) + "\n";
}

std::string serialize_text(const OutputDocument& doc) {
    std::ostringstream out;
    auto list = [&out](const auto& values, auto&& format) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << (i == 0 ? "" : " ") << format(values[i]);
        }
        out << '\n';
    };
    auto plain = [](Index v) { return std::to_string(v); };

    out << "order " << doc.n << '\n';
    out << "components " << doc.component_count << '\n';
    for (std::size_t k = 0; k < doc.blocks.size(); ++k) {
        const auto& block = doc.blocks[k];
        out << "block " << k + 1 << " size " << block.size << '\n';
        out << "  first_row ";
        list(block.first_row, format_number);
        out << "  vertices ";
        list(block.vertices, plain);
    }
    out << "permutation ";
    list(doc.permutation, plain);
    out << "cis ";
    list(doc.cis, plain);
    if (doc.trace) {
        for (const auto& step : *doc.trace) {
            out << "step " << tfnf::to_string(step.kind) << " n " << step.n_before << " -> "
                << step.n_after << " d " << step.d << " c " << step.c << '\n';
        }
    }
    return out.str();
}

} // namespace fnf_cli
