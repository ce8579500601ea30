#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mclimb/fitness.hpp"

namespace mclimb {

// Exact single-update statistics by enumerating all 2^n offspring.
inline constexpr std::size_t kOracleMaxDimension = 14;

struct OffspringProbability {
    SearchPoint z;
    std::size_t up = 0;
    std::size_t down = 0;
    Rational probability;  // (c/n)^h (1 - c/n)^(n - h), h = up + down
};

struct UpdateDistribution {
    std::vector<OffspringProbability> accepted;  // z != y with f(z) >= f(y), ascending as integers
    Rational p_keep;                             // total mass; 0 only at the all-ones state
};

// Requires n <= kOracleMaxDimension and 0 < c < n; c is exact.
UpdateDistribution exact_update_distribution(const SearchPoint& y, const Rational& c, const MonotoneFunction& f);

// Conditional quantities given that the offspring is kept. Expectations are
// exact; entropy terms are accurate to about 1e-15 bits.
struct OracleReport {
    SearchPoint state{1};
    Rational c;
    Rational alpha;
    Rational p_keep;
    Rational mean_flips;  // E[U + D | keep]
    Rational mean_down;   // E[D | keep]
    Rational mean_up;     // E[U | keep]
    Rational pr_good;     // unconditional; pr_good + pr_bad == p_keep
    Rational pr_bad;
    std::optional<Rational> gain_good;  // E[U - D | good], absent when pr_good == 0
    std::optional<Rational> gain_bad;   // E[U - D | bad], absent when pr_bad == 0
    long double entropy_bits = 0;       // H(Y' | keep)
    long double mean_log_choices = 0;   // E[log2(C(#0, U) C(#1 + U, D)) | keep]
};

// Throws std::domain_error at the all-ones state, where nothing is kept.
OracleReport oracle_report(const SearchPoint& y, const Rational& c, const MonotoneFunction& f,
                           const Rational& alpha);

// Products a_{u,d} b_{u,d} with a = (c/n)^(u+d) (1-c/n)^(n-u-d) and
// b = C(n-k, u) C(k+u, d), over 1 <= u <= n-k and 0 <= d <= k, evaluated as
// 80-bit log2 values.
struct AppendixBReport {
    std::size_t n = 0;
    std::size_t k = 0;
    long double c = 0;
    std::size_t argmax_up = 0;
    std::size_t argmax_down = 0;
    long double max_log2 = 0;        // over the whole table
    long double reference_log2 = 0;  // max of the (1,0) and (1,1) cells present
    bool bound_holds = false;
    std::vector<std::vector<long double>> log2_table;  // [u-1][d], only if requested
};

AppendixBReport verify_appendix_b(std::size_t n, std::size_t k, long double c, bool keep_table = false);

}  // namespace mclimb
