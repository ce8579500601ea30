#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mclimb/codec.hpp"
#include "mclimb/entropy.hpp"
#include "mclimb/oracle.hpp"

namespace mclimb::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class T>
std::string opt_field(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string fixed6(double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << x;
    return s.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

double parse_rate(const std::string& text) {
    return static_cast<double>(to_long_double(parse_rational(text)));
}

Rational parse_alpha(const std::string& text) {
    Rational alpha = parse_rational(text);
    if (alpha <= 0 || alpha > Rational(1, 2)) throw std::invalid_argument("alpha must lie in (0, 1/2]");
    return alpha;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

void configure_start(RunConfig& cfg, const std::string& start) {
    if (start == "uniform") {
        cfg.start = StartMode::Uniform;
    } else if (start == "zeros") {
        cfg.start = StartMode::Zeros;
    } else if (start == "ones") {
        cfg.start = StartMode::Ones;
    } else if (start.rfind("file:", 0) == 0) {
        std::ifstream in(start.substr(5));
        if (!in) throw IoError("cannot open start file '" + start.substr(5) + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        cfg.start = StartMode::Explicit;
        cfg.start_point = SearchPoint::from_string(trim(buf.str()));
    } else {
        throw std::invalid_argument("unknown start mode '" + start + "'");
    }
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
    unsigned workers = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MCLIMB_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, jobs)));
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

int report_suite(const SuiteResult& result, const std::string& name, std::ostream& out) {
    for (const auto& cell : result.cells) {
        out << (cell.pass ? "PASS " : "FAIL ") << cell.cell;
        if (!cell.detail.empty()) out << " : " << cell.detail;
        out << '\n';
    }
    out << name << ": " << (result.cells.size() - result.failures()) << '/' << result.cells.size()
        << " cells passed\n";
    return result.passed() ? kOk : kAssertionFailure;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const InsufficientData& e) {
        err << "error: " << e.what() << '\n';
        return kInsufficientData;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }
}

}  // namespace

std::string csv_header() {
    return "n,c,seed,function,alpha,T,T_bad,total_steps,reached,entropy_lb_bits,encoded_bits,budget_bits,phases,wall_ms";
}

std::string to_csv(const ResultRow& r) {
    std::ostringstream s;
    s << r.n << ',' << r.c << ',' << r.seed << ',' << r.function << ',' << r.alpha << ',' << r.T << ','
      << opt_field(r.T_bad) << ',' << r.total_steps << ',' << (r.reached ? "true" : "false") << ','
      << fixed6(r.entropy_lb_bits) << ',' << opt_field(r.encoded_bits) << ',' << opt_field(r.budget_bits) << ','
      << r.phases << ',' << r.wall_ms;
    return s.str();
}

ResultRow execute_run(const RunOptions& opt, std::optional<Trajectory>* keep) {
    const auto clock_start = std::chrono::steady_clock::now();
    RunConfig cfg;
    cfg.n = opt.n;
    cfg.c = parse_rate(opt.c);
    cfg.alpha = parse_alpha(opt.alpha);
    cfg.function = make_function(opt.function, opt.n);
    cfg.seed = {opt.seed, 0};
    cfg.max_steps = opt.max_steps;
    cfg.classify = opt.classify;
    configure_start(cfg, opt.start);
    cfg.validate();

    const Trajectory traj = run(cfg);

    ResultRow row;
    row.n = opt.n;
    row.c = opt.c;
    row.seed = opt.seed;
    row.function = cfg.function->spec();
    row.alpha = to_string(cfg.alpha);
    row.T = traj.updates();
    if (opt.classify) row.T_bad = traj.bad_updates();
    row.total_steps = traj.total_steps;
    row.reached = traj.reached_optimum;
    row.entropy_lb_bits = entropy_lower_bound(traj);
    row.phases = phase_summary(phase_stats(traj));
    if (traj.reached_optimum && opt.classify) {
        const EncodedTrace trace = encode_trajectory(traj, *cfg.function, cfg.alpha);
        row.encoded_bits = trace.bits.size();
        row.budget_bits = budget(traj, cfg.alpha);
        if (!opt.trace_path.empty()) {
            std::ofstream out = open_output(opt.trace_path);
            write_trace(out, trace);
            out.flush();
            if (!out) throw IoError("failed writing trace '" + opt.trace_path + "'");
        }
    }
    if (opt.timing)
        row.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                     std::chrono::steady_clock::now() - clock_start)
                                                     .count());
    if (keep) *keep = traj;
    return row;
}

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ResultRow row = execute_run(opt);
        if (!opt.trace_path.empty() && !row.encoded_bits)
            err << "warning: no trace written (run unfinished or unclassified)\n";
        out << csv_header() << '\n' << to_csv(row) << '\n' << std::flush;
        return kOk;
    });
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out_default, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (opt.n.empty() || opt.c.empty()) throw std::invalid_argument("sweep needs at least one n and one c");
        if (opt.reps < 1) throw std::invalid_argument("repetitions must be at least 1");
        const std::size_t min_n = *std::min_element(opt.n.begin(), opt.n.end());
        if (min_n < 2) throw std::invalid_argument("all n must be at least 2");
        for (const auto& c : opt.c) {
            const double cd = parse_rate(c);
            if (!(cd > 0) || !(cd < static_cast<double>(min_n)))
                throw std::invalid_argument("every c must lie in (0, min n)");
        }

        std::vector<RunOptions> jobs;
        for (std::size_t n : opt.n)
            for (const auto& c : opt.c)
                for (std::size_t r = 0; r < opt.reps; ++r) {
                    RunOptions job = opt.base;
                    job.n = n;
                    job.c = c;
                    job.seed = opt.base.seed + jobs.size();
                    job.trace_path.clear();
                    jobs.push_back(std::move(job));
                }
        // Fail fast on a bad function spec before spawning workers.
        make_function(opt.base.function, opt.n.front());

        std::ofstream file;
        if (!opt.out_path.empty()) file = open_output(opt.out_path);
        std::ostream& out = opt.out_path.empty() ? out_default : file;
        out << "# mclimb sweep " << utc_timestamp() << '\n' << csv_header() << '\n' << std::flush;

        std::vector<std::optional<std::string>> rows(jobs.size());
        std::size_t next_to_write = 0;
        std::mutex mutex;
        std::atomic<std::size_t> next_job{0};
        std::exception_ptr failure;
        bool write_failed = false;

        auto worker = [&] {
            for (;;) {
                const std::size_t i = next_job.fetch_add(1);
                if (i >= jobs.size()) return;
                std::string line;
                try {
                    line = to_csv(execute_run(jobs[i]));
                } catch (...) {
                    std::lock_guard lock(mutex);
                    if (!failure) failure = std::current_exception();
                    next_job = jobs.size();
                    return;
                }
                std::lock_guard lock(mutex);
                rows[i] = std::move(line);
                while (next_to_write < rows.size() && rows[next_to_write]) {
                    out << *rows[next_to_write] << '\n' << std::flush;
                    if (!out) write_failed = true;
                    rows[next_to_write].reset();
                    ++next_to_write;
                }
            }
        };
        const unsigned workers = worker_count(opt.threads, jobs.size());
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
        if (write_failed) throw IoError("failed writing sweep output");
        return kOk;
    });
}

std::vector<ResultRow> read_result_csv(std::istream& in) {
    std::vector<ResultRow> rows;
    std::string line;
    std::map<std::string, std::size_t> column;
    auto split = [](const std::string& s) {
        std::vector<std::string> fields;
        std::stringstream ss(s);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (!s.empty() && s.back() == ',') fields.emplace_back();
        return fields;
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split(line);
        if (column.empty()) {
            for (std::size_t i = 0; i < fields.size(); ++i) column[fields[i]] = i;
            for (const char* need : {"n", "T", "total_steps", "reached"})
                if (!column.count(need)) throw std::invalid_argument(std::string("CSV lacks column '") + need + "'");
            continue;
        }
        auto get = [&](const char* name) -> std::string {
            auto it = column.find(name);
            return it == column.end() || it->second >= fields.size() ? std::string() : fields[it->second];
        };
        ResultRow r;
        try {
            r.n = std::stoul(get("n"));
            r.T = std::stoul(get("T"));
            r.total_steps = std::stoull(get("total_steps"));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed CSV row: " + line);
        }
        r.c = get("c");
        r.function = get("function");
        r.alpha = get("alpha");
        r.reached = get("reached") == "true" || get("reached") == "1";
        rows.push_back(std::move(r));
    }
    return rows;
}

FitReport fit_rows(const std::vector<ResultRow>& rows, std::size_t resamples) {
    FitReport rep;
    std::map<std::size_t, std::pair<std::vector<double>, std::vector<double>>> by_n;
    for (const auto& r : rows) {
        ++rep.rows;
        if (!r.reached) {
            ++rep.excluded_unfinished;
            continue;
        }
        by_n[r.n].first.push_back(static_cast<double>(r.T));
        by_n[r.n].second.push_back(static_cast<double>(r.total_steps));
    }
    rep.sizes = by_n.size();
    if (rep.sizes < 4) throw InsufficientData("fit needs at least 4 distinct n with finished runs, got " +
                                              std::to_string(rep.sizes));
    std::vector<SizeGroup> t_groups, s_groups;
    double ratio_min = INFINITY, ratio_max = 0;
    for (const auto& [n, v] : by_n) {
        t_groups.push_back({static_cast<double>(n), v.first});
        s_groups.push_back({static_cast<double>(n), v.second});
        double mean_t = 0;
        for (double t : v.first) mean_t += t;
        mean_t /= static_cast<double>(v.first.size());
        ratio_min = std::min(ratio_min, mean_t / static_cast<double>(n));
        ratio_max = std::max(ratio_max, mean_t / static_cast<double>(n));
    }
    rep.T_over_n_ratio = ratio_min > 0 ? ratio_max / ratio_min : INFINITY;
    rep.T = fit_power_law(t_groups, 0, resamples, {0x5eed, 1});
    for (unsigned j = 0; j < 3; ++j) rep.steps_per_log[j] = fit_power_law(s_groups, j, resamples, {0x5eed, 2 + j});
    rep.steps = rep.steps_per_log[0];
    for (unsigned j = 1; j < 3; ++j)
        if (std::fabs(rep.steps_per_log[j].exponent - 1) < std::fabs(rep.steps_per_log[rep.best_log_power].exponent - 1))
            rep.best_log_power = j;
    return rep;
}

int cmd_fit(const FitOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::ifstream in(opt.csv_path);
        if (!in) throw IoError("cannot open '" + opt.csv_path + "'");
        auto rows = read_result_csv(in);
        std::erase_if(rows, [&](const ResultRow& r) {
            return (opt.function && r.function != *opt.function) || (opt.c && r.c != *opt.c);
        });
        const FitReport rep = fit_rows(rows, opt.resamples);
        auto line = [&](const char* q, unsigned j, const PowerLawFit& f) {
            out << q << ',' << j << ',' << fixed6(f.exponent) << ',' << fixed6(f.ci_low) << ',' << fixed6(f.ci_high)
                << '\n';
        };
        out << "quantity,log_power,exponent,ci_low,ci_high\n";
        line("T", 0, rep.T);
        for (unsigned j = 0; j < 3; ++j) line("total_steps", j, rep.steps_per_log[j]);
        out << "# sizes=" << rep.sizes << " rows=" << rep.rows << " excluded_unfinished=" << rep.excluded_unfinished
            << " best_log_power_steps=" << rep.best_log_power << " T_over_n_ratio=" << fixed6(rep.T_over_n_ratio)
            << '\n';
        return kOk;
    });
}

namespace {

template <class Runner>
int run_suite_command(const std::string& name, const std::string& csv_path, std::ostream& out, std::ostream& err,
                      Runner&& runner) {
    return guarded(err, [&] {
        std::ofstream file;
        if (!csv_path.empty()) file = open_output(csv_path);
        const SuiteResult result = runner(csv_path.empty() ? nullptr : static_cast<std::ostream*>(&file));
        if (!csv_path.empty() && !file.flush()) throw IoError("failed writing '" + csv_path + "'");
        return report_suite(result, name, out);
    });
}

}  // namespace

int cmd_oracle(const OracleGrid& grid, const std::string& csv_path, std::ostream& out, std::ostream& err) {
    return run_suite_command("oracle", csv_path, out, err, [&](std::ostream* csv) { return run_oracle_suite(grid, csv); });
}

int cmd_verify_appendix_b(const AppendixBGrid& grid, const std::string& csv_path, std::ostream& out,
                          std::ostream& err) {
    return run_suite_command("verify-appendix-b", csv_path, out, err,
                             [&](std::ostream* csv) { return run_appendix_b_suite(grid, csv); });
}

int cmd_codec_check(const CodecGrid& grid, const std::string& csv_path, std::ostream& out, std::ostream& err) {
    return run_suite_command("codec-check", csv_path, out, err,
                             [&](std::ostream* csv) { return run_codec_suite(grid, csv); });
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw std::invalid_argument("not a size: '" + s + "'");
        return static_cast<std::size_t>(v);
    };
    for (const auto& item : split_list(text)) {
        if (auto dots = item.find(".."); dots != std::string::npos) {
            const std::size_t lo = number(item.substr(0, dots));
            const std::size_t hi = number(item.substr(dots + 2));
            if (hi < lo) throw std::invalid_argument("empty range '" + item + "'");
            for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(number(item));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty size list");
    return out;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Workbench for the (1+1) evolutionary algorithm on monotone functions"};
    app.set_config("--config", "", "Read options from a TOML/INI file; command-line flags take precedence");
    app.require_subcommand(1);

    RunOptions run_opt;
    std::string run_out;
    auto add_run_flags = [](CLI::App* sub, RunOptions& o, bool single_c) {
        if (single_c) sub->add_option("--c", o.c, "Mutation parameter (decimal or p/q)")->capture_default_str();
        sub->add_option("--alpha", o.alpha, "Classification parameter in (0, 1/2]")->capture_default_str();
        sub->add_option("--function", o.function, "onemax | linear:<path> | linear-random:<seed> | expw:<base> | plugin:<name>")
            ->capture_default_str();
        sub->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
        sub->add_option("--max-steps", o.max_steps, "Step cap (0 = 10^4 n log2(n+1))")->capture_default_str();
        sub->add_option("--start", o.start, "uniform | zeros | ones | file:<path>")->capture_default_str();
        sub->add_flag("!--no-classify", o.classify, "Skip good/bad labels (and hence the codec)");
        sub->add_flag("--timing", o.timing, "Record wall_ms (otherwise 0, keeping output reproducible)");
    };

    auto* run_cmd = app.add_subcommand("run", "Single run, one CSV row");
    run_cmd->add_option("--n", run_opt.n, "Dimension")->required();
    add_run_flags(run_cmd, run_opt, true);
    run_cmd->add_option("--trace", run_opt.trace_path, "Write the encoded trajectory here");
    run_cmd->add_option("--out", run_out, "CSV output file (default stdout)");

    SweepOptions sweep_opt;
    std::string sweep_n, sweep_c = "1";
    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep to CSV");
    sweep_cmd->add_option("--n", sweep_n, "Sizes, e.g. 512,1024 or 3..10")->required();
    sweep_cmd->add_option("--c", sweep_c, "Comma-separated mutation parameters")->capture_default_str();
    sweep_cmd->add_option("--reps", sweep_opt.reps, "Repetitions per (n, c)")->capture_default_str();
    add_run_flags(sweep_cmd, sweep_opt.base, false);
    sweep_cmd->add_option("--out", sweep_opt.out_path, "CSV output file (default stdout)");

    FitOptions fit_opt;
    std::string fit_function, fit_c;
    auto* fit_cmd = app.add_subcommand("fit", "Log-log scaling exponents from a sweep CSV");
    fit_cmd->add_option("csv,--in", fit_opt.csv_path, "Sweep CSV")->required();
    fit_cmd->add_option("--resamples", fit_opt.resamples, "Bootstrap resamples")->capture_default_str();
    fit_cmd->add_option("--function", fit_function, "Only rows with this function spec");
    fit_cmd->add_option("--c", fit_c, "Only rows with this c");

    std::string oracle_n = "3..10", oracle_c = "0.5,1.0,1.3", oracle_alpha = "0.1,0.25,0.5", oracle_out;
    std::string oracle_functions = "onemax,linear-random:1,linear-random:2,linear-random:3,expw:2";
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact single-update inequality grid");
    oracle_cmd->add_option("--n", oracle_n)->capture_default_str();
    oracle_cmd->add_option("--c", oracle_c)->capture_default_str();
    oracle_cmd->add_option("--alpha", oracle_alpha)->capture_default_str();
    oracle_cmd->add_option("--function,--functions", oracle_functions)->capture_default_str();
    oracle_cmd->add_option("--out", oracle_out, "Per-cell CSV");

    AppendixBGrid ab_grid;
    std::string ab_n = "20,100,1000", ab_c = "0.5,1.0,1.3", ab_out;
    auto* ab_cmd = app.add_subcommand("verify-appendix-b", "Maximiser of a_{u,d} b_{u,d} over all (u, d)");
    ab_cmd->add_option("--n", ab_n)->capture_default_str();
    ab_cmd->add_option("--c", ab_c)->capture_default_str();
    ab_cmd->add_option("--k-samples", ab_grid.k_samples, "Evenly spaced k values when n > 100")->capture_default_str();
    ab_cmd->add_option("--out", ab_out, "Per-cell CSV");

    CodecGrid codec_grid;
    std::string codec_n = "16,64,256", codec_c = "0.8,1.0,1.2", codec_alpha = "1/4", codec_out;
    std::string codec_functions = oracle_functions;
    auto* codec_cmd = app.add_subcommand("codec-check", "Encode/decode round trips with budget and telescoping checks");
    codec_cmd->add_option("--reps,--count", codec_grid.count, "Number of trajectories")->capture_default_str();
    codec_cmd->add_option("--n", codec_n)->capture_default_str();
    codec_cmd->add_option("--c", codec_c)->capture_default_str();
    codec_cmd->add_option("--alpha", codec_alpha)->capture_default_str();
    codec_cmd->add_option("--function,--functions", codec_functions)->capture_default_str();
    codec_cmd->add_option("--seed", codec_grid.seed_base, "First seed")->capture_default_str();
    codec_cmd->add_option("--out", codec_out, "Per-trajectory CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }

    return guarded(err, [&]() -> int {
        if (run_cmd->parsed()) {
            if (run_out.empty()) return cmd_run(run_opt, out, err);
            std::ofstream file = open_output(run_out);
            return cmd_run(run_opt, file, err);
        }
        if (sweep_cmd->parsed()) {
            sweep_opt.n = parse_size_list(sweep_n);
            sweep_opt.c = split_list(sweep_c);
            return cmd_sweep(sweep_opt, out, err);
        }
        if (fit_cmd->parsed()) {
            if (!fit_function.empty()) fit_opt.function = fit_function;
            if (!fit_c.empty()) fit_opt.c = fit_c;
            return cmd_fit(fit_opt, out, err);
        }
        if (oracle_cmd->parsed()) {
            OracleGrid grid;
            grid.n = parse_size_list(oracle_n);
            grid.c.clear();
            for (const auto& c : split_list(oracle_c)) grid.c.push_back(parse_rational(c));
            grid.alpha.clear();
            for (const auto& a : split_list(oracle_alpha)) grid.alpha.push_back(parse_alpha(a));
            grid.functions = split_list(oracle_functions);
            for (std::size_t n : grid.n)
                if (n < 2 || n > kOracleMaxDimension)
                    throw std::invalid_argument("oracle n must lie in [2, 14]");
            return cmd_oracle(grid, oracle_out, out, err);
        }
        if (ab_cmd->parsed()) {
            ab_grid.n = parse_size_list(ab_n);
            ab_grid.c.clear();
            for (const auto& c : split_list(ab_c)) ab_grid.c.push_back(to_long_double(parse_rational(c)));
            return cmd_verify_appendix_b(ab_grid, ab_out, out, err);
        }
        if (codec_cmd->parsed()) {
            codec_grid.n = parse_size_list(codec_n);
            codec_grid.c.clear();
            for (const auto& c : split_list(codec_c)) codec_grid.c.push_back(parse_rate(c));
            codec_grid.alpha = parse_alpha(codec_alpha);
            codec_grid.functions = split_list(codec_functions);
            return cmd_codec_check(codec_grid, codec_out, out, err);
        }
        return kBadArguments;
    });
}

}  // namespace mclimb::cli
