#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mclimb/engine.hpp"
#include "mclimb/stats.hpp"
#include "suites.hpp"

namespace mclimb::cli {

enum ExitCode : int { kOk = 0, kAssertionFailure = 1, kBadArguments = 2, kIoError = 3, kInsufficientData = 4 };

// One CSV row per run. Empty optionals print as empty fields.
struct ResultRow {
    std::size_t n = 0;
    std::string c;
    std::uint64_t seed = 0;
    std::string function;
    std::string alpha;
    std::size_t T = 0;
    std::optional<std::size_t> T_bad;
    std::uint64_t total_steps = 0;
    bool reached = false;
    double entropy_lb_bits = 0;
    std::optional<std::uint64_t> encoded_bits;
    std::optional<std::uint64_t> budget_bits;
    std::string phases;
    std::uint64_t wall_ms = 0;
};

std::string csv_header();
std::string to_csv(const ResultRow& row);

struct RunOptions {
    std::size_t n = 0;
    std::string c = "1";
    std::string alpha = "1/4";
    std::string function = "onemax";
    std::uint64_t seed = 0;
    std::uint64_t max_steps = 0;
    std::string start = "uniform";  // uniform | zeros | ones | file:<path>
    std::string trace_path;
    bool classify = true;
    bool timing = false;
};

// Engine, classifier, entropy bound and codec for one configuration. Throws
// std::invalid_argument (incl. FunctionSpecError) for bad options.
ResultRow execute_run(const RunOptions& opt, std::optional<Trajectory>* keep = nullptr);

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err);

struct SweepOptions {
    std::vector<std::size_t> n;
    std::vector<std::string> c{"1"};
    std::size_t reps = 1;
    RunOptions base;  // n, c, seed are overridden per cell
    std::string out_path;
    unsigned threads = 0;  // 0: MCLIMB_THREADS or hardware concurrency
};

// Rows for every (n, c, rep) in that nesting order with seed = base seed +
// row counter; body is identical regardless of thread count.
int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err);

struct FitOptions {
    std::string csv_path;
    std::size_t resamples = 1000;
    std::optional<std::string> function;
    std::optional<std::string> c;
};

struct FitReport {
    std::size_t sizes = 0;
    std::size_t rows = 0;
    std::size_t excluded_unfinished = 0;
    PowerLawFit T;
    PowerLawFit steps;
    PowerLawFit steps_per_log[3];  // steps / log2(n)^j, j = 0, 1, 2
    unsigned best_log_power = 0;   // j whose exponent is closest to 1
    double T_over_n_ratio = 0;     // max / min of mean T / n
};

// Throws std::runtime_error("insufficient data") with fewer than 4 sizes.
FitReport fit_rows(const std::vector<ResultRow>& rows, std::size_t resamples);
std::vector<ResultRow> read_result_csv(std::istream& in);

int cmd_fit(const FitOptions& opt, std::ostream& out, std::ostream& err);

int cmd_oracle(const OracleGrid& grid, const std::string& csv_path, std::ostream& out, std::ostream& err);
int cmd_verify_appendix_b(const AppendixBGrid& grid, const std::string& csv_path, std::ostream& out, std::ostream& err);
int cmd_codec_check(const CodecGrid& grid, const std::string& csv_path, std::ostream& out, std::ostream& err);

// "3..10" and "3,5,8" forms, mixable: "3..5,8".
std::vector<std::size_t> parse_size_list(const std::string& text);
std::vector<std::string> split_list(const std::string& text);

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mclimb::cli
