#include "fnf_cli/commands.hpp"
#include "fnf_cli/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_source(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw fnf_cli::InputError("cannot open input file '" + path + "'");
    }
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

int main(int argc, char** argv) {
    using namespace fnf_cli;

    CLI::App app{"Frobenius normal form of symmetric Toeplitz matrices"};
    app.require_subcommand(1);

    std::string order_name = "canonical";
    std::string format_name = "json";
    bool with_trace = false;
    double tolerance = 0.0;
    std::string compute_path;
    auto* compute = app.add_subcommand("compute", "Compute the FNF from a first row");
    compute->add_option("--order", order_name, "Block order")
        ->check(CLI::IsMember({"canonical", "discovered"}));
    compute->add_flag("--trace", with_trace, "Include the reduction trace");
    compute->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    compute->add_option("--tolerance", tolerance, "Treat |a_i| <= EPS as zero")
        ->check(CLI::NonNegativeNumber);
    compute->add_option("input", compute_path, "Input file, or - for stdin")->required();

    Index budget = kDefaultOracleBudget;
    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Check the fast path against the brute-force oracle");
    verify->add_option("--budget", budget, "Largest order the oracle will accept")
        ->check(CLI::PositiveNumber);
    verify->add_option("input", verify_path, "Input file, or - for stdin")->required();

    std::string sizes_text;
    std::string policy_name = "uniform-k";
    std::uint64_t seed = 1;
    int reps = 5;
    Index bench_budget = kDefaultOracleBudget;
    auto* bench = app.add_subcommand("bench", "Time the fast path across matrix orders");
    bench->add_option("--sizes", sizes_text, "Comma-separated ascending orders, e.g. 1e5,1e6,1e7")
        ->required();
    bench->add_option("--policy", policy_name, "Offset generation policy")
        ->check(CLI::IsMember({"uniform-k", "paper-like"}));
    bench->add_option("--seed", seed, "RNG seed (FNF_SEED overrides)");
    bench->add_option("--reps", reps, "Repetitions per size")->check(CLI::PositiveNumber);
    bench->add_option("--oracle-budget", bench_budget, "Also time the oracle up to this order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*compute) {
            ComputeOptions options;
            options.order = *tfnf::parse_block_order(order_name);
            options.include_trace = with_trace;
            options.format = format_name == "text" ? OutputFormat::Text : OutputFormat::Json;
            return cmd_compute(parse_input(read_source(compute_path), tolerance), options, std::cout);
        }
        if (*verify) {
            return cmd_verify(parse_input(read_source(verify_path)), budget, std::cout);
        }
        BenchConfig config;
        config.sizes = parse_size_list(sizes_text);
        config.policy = *parse_policy(policy_name);
        config.seed = resolve_seed(seed);
        config.reps = reps;
        config.oracle_budget = bench_budget;
        print_bench(run_bench(config), std::cout);
        return kSuccess;
    } catch (const InputError& e) {
        std::cerr << "fnf: " << e.what() << '\n';
        return kInputError;
    } catch (const tfnf::ContractError& e) {
        std::cerr << "fnf: internal invariant violated: " << e.what() << '\n';
        return kInternalError;
    }
}
