#include "mclimb/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace mclimb {

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("least_squares: need two or more points");
    const double k = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / k;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / k;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) throw std::invalid_argument("least_squares: x values are all equal");
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

namespace {

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

double exponent_of(const std::vector<SizeGroup>& groups, const std::vector<double>& means, double log_power) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        lx.push_back(std::log(groups[i].n));
        ly.push_back(std::log(means[i]) - log_power * std::log(std::log2(groups[i].n)));
    }
    return least_squares(lx, ly).slope;
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<SizeGroup>& groups, double log_power, std::size_t resamples, RngSeed seed,
                          double confidence) {
    if (groups.size() < 2) throw std::invalid_argument("fit_power_law: need at least two sizes");
    std::vector<double> means;
    for (const auto& g : groups) {
        if (g.values.empty() || g.n <= 1) throw std::invalid_argument("fit_power_law: empty group or n <= 1");
        means.push_back(mean(g.values));
        if (!(means.back() > 0)) throw std::invalid_argument("fit_power_law: means must be positive");
    }
    PowerLawFit fit;
    fit.sizes = groups.size();
    fit.exponent = exponent_of(groups, means, log_power);

    Rng rng(seed);
    std::vector<double> boot;
    boot.reserve(resamples);
    std::vector<double> resampled(groups.size());
    for (std::size_t r = 0; r < resamples; ++r) {
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const auto& v = groups[i].values;
            double sum = 0;
            for (std::size_t j = 0; j < v.size(); ++j) sum += v[rng.below(v.size())];
            resampled[i] = sum / static_cast<double>(v.size());
        }
        boot.push_back(exponent_of(groups, resampled, log_power));
    }
    if (boot.empty()) {
        fit.ci_low = fit.ci_high = fit.exponent;
        return fit;
    }
    std::sort(boot.begin(), boot.end());
    const double tail = (1.0 - confidence) / 2.0;
    auto quantile = [&](double q) {
        const auto idx = static_cast<std::size_t>(std::clamp(q * static_cast<double>(boot.size() - 1), 0.0,
                                                             static_cast<double>(boot.size() - 1)));
        return boot[idx];
    };
    fit.ci_low = quantile(tail);
    fit.ci_high = quantile(1.0 - tail);
    return fit;
}

ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                      std::uint64_t min_pooled) {
    if (a.size() != b.size()) throw std::invalid_argument("chi_square_two_sample: histograms differ in length");
    const double total_a = static_cast<double>(std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
    const double total_b = static_cast<double>(std::accumulate(b.begin(), b.end(), std::uint64_t{0}));
    if (total_a == 0 || total_b == 0) throw std::invalid_argument("chi_square_two_sample: empty sample");

    std::vector<std::pair<double, double>> bins;
    double acc_a = 0, acc_b = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc_a += static_cast<double>(a[i]);
        acc_b += static_cast<double>(b[i]);
        if (acc_a + acc_b >= static_cast<double>(min_pooled)) {
            bins.emplace_back(acc_a, acc_b);
            acc_a = acc_b = 0;
        }
    }
    if (acc_a + acc_b > 0) {
        if (bins.empty()) {
            bins.emplace_back(acc_a, acc_b);
        } else {
            bins.back().first += acc_a;
            bins.back().second += acc_b;
        }
    }

    ChiSquareResult res;
    if (bins.size() < 2) return res;
    const double ka = std::sqrt(total_b / total_a);
    const double kb = std::sqrt(total_a / total_b);
    for (const auto& [x, y] : bins) {
        const double diff = ka * x - kb * y;
        res.statistic += diff * diff / (x + y);
    }
    res.dof = bins.size() - 1;
    boost::math::chi_squared dist(static_cast<double>(res.dof));
    res.p_value = boost::math::cdf(boost::math::complement(dist, res.statistic));
    return res;
}

}  // namespace mclimb
