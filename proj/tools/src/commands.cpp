#include "fnf_cli/commands.hpp"

#include <tfnf/oracle.hpp>

#include <ostream>

namespace fnf_cli {

int cmd_compute(const InputDocument& input, const ComputeOptions& options, std::ostream& out) {
    const auto result = tfnf::compute_fnf(to_first_row(input), options.order);
    const OutputDocument doc = make_output(result, options.include_trace);
    out << (options.format == OutputFormat::Json ? serialize_json(doc) : serialize_text(doc));
    return kSuccess;
}

VerifyReport run_verify(const tfnf::FirstRow<double>& row, Index budget) {
    if (row.order() > budget) {
        throw InputError("order " + std::to_string(row.order()) + " exceeds the oracle budget of " +
                         std::to_string(budget) +
                         "; the brute-force check costs O(n^2), rerun with --budget " +
                         std::to_string(row.order()) + " if that is acceptable");
    }
    const auto result = tfnf::compute_fnf(row, tfnf::BlockOrder::Canonical);

    VerifyReport report;
    report.n = row.order();
    report.blocks = result.c;
    report.partition_matches = tfnf::oracle::partition_from_labels(result.cis.rho) ==
                               tfnf::oracle::toeplitz_components(tfnf::offsets_from_row(row));
    report.reconstruction_matches = tfnf::oracle::reconstruction_check<double>(
        row, result.blocks, result.permutation);
    report.blocks_connected = true;
    for (const auto& block : result.blocks) {
        if (tfnf::oracle::toeplitz_components(tfnf::oracle::block_offsets(block)).size() != 1) {
            report.blocks_connected = false;
            break;
        }
    }
    return report;
}

int cmd_verify(const InputDocument& input, Index budget, std::ostream& out) {
    const VerifyReport report = run_verify(to_first_row(input), budget);
    auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
    out << "order " << report.n << ", " << report.blocks << " blocks\n";
    out << "partition       " << verdict(report.partition_matches) << '\n';
    out << "reconstruction  " << verdict(report.reconstruction_matches) << '\n';
    out << "connectivity    " << verdict(report.blocks_connected) << '\n';
    out << "result          " << verdict(report.passed()) << '\n';
    return report.passed() ? kSuccess : kVerificationFailed;
}

} // namespace fnf_cli
