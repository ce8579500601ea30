#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mclimb/rng.hpp"

namespace mclimb {

// Least-squares slope and intercept of y on x.
struct LineFit {
    double slope = 0;
    double intercept = 0;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y);

// Repeated measurements at one problem size.
struct SizeGroup {
    double n = 0;
    std::vector<double> values;
};

// Slope of log(mean / log2(n)^log_power) against log(n), with a percentile
// bootstrap interval obtained by resampling values within each group.
struct PowerLawFit {
    double exponent = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::size_t sizes = 0;
};

PowerLawFit fit_power_law(const std::vector<SizeGroup>& groups, double log_power = 0, std::size_t resamples = 1000,
                          RngSeed seed = {0x5eed, 0}, double confidence = 0.95);

// Two-sample chi-square homogeneity test on histograms over the same bins.
// Adjacent bins are merged until every pooled bin holds at least
// `min_pooled` observations.
struct ChiSquareResult {
    double statistic = 0;
    std::size_t dof = 0;
    double p_value = 1;
};

ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                      std::uint64_t min_pooled = 10);

}  // namespace mclimb
