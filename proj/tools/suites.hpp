#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mclimb/rational.hpp"

namespace mclimb::cli {

struct CellResult {
    std::string cell;
    bool pass = true;
    std::string detail;  // first failing check, or notes
};

struct SuiteResult {
    std::vector<CellResult> cells;
    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

// Default lists reproduce the acceptance grid.
std::vector<std::string> default_oracle_functions();

inline constexpr long double kOracleSlack = 1e-9L;

// One representative state per k in 1..n-1: ones on bits 0..k-1. Checks the
// kept-offspring inequalities for every (n, function, k, c) and the good/bad
// drift bounds for every alpha with c <= 1/(1 - alpha).
struct OracleGrid {
    std::vector<std::size_t> n{3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<Rational> c{Rational(1, 2), Rational(1), Rational(13, 10)};
    std::vector<Rational> alpha{Rational(1, 10), Rational(1, 4), Rational(1, 2)};
    std::vector<std::string> functions = default_oracle_functions();
};

// csv may be null. Cells are "function n=.. k=.. c=..".
SuiteResult run_oracle_suite(const OracleGrid& grid, std::ostream* csv);

struct AppendixBGrid {
    std::vector<std::size_t> n{20, 100, 1000};
    std::vector<long double> c{0.5L, 1.0L, 1.3L};
    std::size_t k_samples = 50;      // used when n > full_k_limit
    std::size_t full_k_limit = 100;  // every k for n up to this
};

std::vector<std::size_t> appendix_b_ks(std::size_t n, const AppendixBGrid& grid);
SuiteResult run_appendix_b_suite(const AppendixBGrid& grid, std::ostream* csv);

// Trajectory i uses cell i mod (functions x n x c) and seed seed_base + i.
struct CodecGrid {
    std::size_t count = 1000;
    std::vector<std::size_t> n{16, 64, 256};
    std::vector<double> c{0.8, 1.0, 1.2};
    Rational alpha{1, 4};
    std::vector<std::string> functions = default_oracle_functions();
    std::uint64_t seed_base = 1;
};

// Cells are grid cells; each passes when every one of its trajectories
// finished, round-tripped exactly, fit the budget and telescoped.
SuiteResult run_codec_suite(const CodecGrid& grid, std::ostream* csv);

}  // namespace mclimb::cli
