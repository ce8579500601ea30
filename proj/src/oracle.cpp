#include "mclimb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mclimb/classifier.hpp"

namespace mclimb {

namespace {

SearchPoint point_from_mask(std::size_t n, std::uint32_t mask) {
    SearchPoint x(n);
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) x.set(i, true);
    return x;
}

std::uint32_t mask_of(const SearchPoint& x) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.test(i)) mask |= std::uint32_t{1} << i;
    return mask;
}

// (c/n)^h (1 - c/n)^(n-h) for h = 0..n.
std::vector<Rational> hamming_probabilities(std::size_t n, const Rational& c) {
    const Rational p = c / Rational(static_cast<unsigned long>(n));
    const Rational q = Rational(1) - p;
    std::vector<Rational> p_pow(n + 1, Rational(1));
    std::vector<Rational> q_pow(n + 1, Rational(1));
    for (std::size_t h = 1; h <= n; ++h) {
        p_pow[h] = p_pow[h - 1] * p;
        q_pow[h] = q_pow[h - 1] * q;
    }
    std::vector<Rational> out(n + 1);
    for (std::size_t h = 0; h <= n; ++h) out[h] = p_pow[h] * q_pow[n - h];
    return out;
}

}  // namespace

UpdateDistribution exact_update_distribution(const SearchPoint& y, const Rational& c, const MonotoneFunction& f) {
    const std::size_t n = y.size();
    if (n > kOracleMaxDimension)
        throw std::invalid_argument("exact_update_distribution: n exceeds the enumeration cap of " +
                                    std::to_string(kOracleMaxDimension));
    if (f.dimension() != n) throw std::logic_error("exact_update_distribution: dimension mismatch");
    if (c <= 0 || c >= Rational(static_cast<unsigned long>(n)))
        throw std::invalid_argument("exact_update_distribution: requires 0 < c < n");

    const auto by_distance = hamming_probabilities(n, c);
    const std::uint32_t y_mask = mask_of(y);
    const FitnessValue fy = f.eval(y);

    UpdateDistribution dist;
    dist.p_keep = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (mask == y_mask) continue;
        SearchPoint z = point_from_mask(n, mask);
        if (f.eval(z) < fy) continue;
        const std::uint32_t raised = mask & ~y_mask;
        const std::uint32_t lowered = y_mask & ~mask;
        OffspringProbability entry{std::move(z), static_cast<std::size_t>(std::popcount(raised)),
                                   static_cast<std::size_t>(std::popcount(lowered)), Rational()};
        entry.probability = by_distance[entry.up + entry.down];
        dist.p_keep += entry.probability;
        dist.accepted.push_back(std::move(entry));
    }
    return dist;
}

OracleReport oracle_report(const SearchPoint& y, const Rational& c, const MonotoneFunction& f,
                           const Rational& alpha) {
    const std::size_t n = y.size();
    const std::size_t k = y.ones_count();
    const UpdateDistribution dist = exact_update_distribution(y, c, f);
    if (dist.p_keep == 0) throw std::domain_error("oracle_report: no offspring is ever kept (absorbing state)");

    // A single raised bit i is bad or good independently of the lowered bits.
    std::vector<char> bad_raise(n, 0);
    for (BitIndex i : y.zero_indices()) {
        FlipSet single;
        single.up = {i};
        bad_raise[i] = classify_update(y, single, f, alpha) == UpdateLabel::Bad;
    }

    OracleReport rep;
    rep.state = y;
    rep.c = c;
    rep.alpha = alpha;
    rep.p_keep = dist.p_keep;
    Rational flips = 0, down = 0, up = 0, gain_good = 0, gain_bad = 0;
    rep.pr_good = 0;
    rep.pr_bad = 0;
    long double plogp = 0;
    long double log_choices = 0;
    const long double log_keep = log2(dist.p_keep);
    const auto zero_bits = y.zero_indices();
    for (const auto& e : dist.accepted) {
        const Rational& pz = e.probability;
        flips += pz * static_cast<unsigned long>(e.up + e.down);
        down += pz * static_cast<unsigned long>(e.down);
        up += pz * static_cast<unsigned long>(e.up);
        bool bad = false;
        if (e.up == 1) {
            for (BitIndex i : zero_bits)
                if (e.z.test(i)) {
                    bad = bad_raise[i];
                    break;
                }
        }
        const Rational gain = pz * (Rational(static_cast<unsigned long>(e.up)) - static_cast<unsigned long>(e.down));
        if (bad) {
            rep.pr_bad += pz;
            gain_bad += gain;
        } else {
            rep.pr_good += pz;
            gain_good += gain;
        }
        const long double weight = to_long_double(pz / dist.p_keep);
        plogp += weight * (log_keep - log2(pz));
        log_choices += weight * static_cast<long double>(log2(BigInt(binomial(n - k, e.up) * binomial(k + e.up, e.down))));
    }
    rep.mean_flips = flips / dist.p_keep;
    rep.mean_down = down / dist.p_keep;
    rep.mean_up = up / dist.p_keep;
    if (rep.pr_good > 0) rep.gain_good = gain_good / rep.pr_good;
    if (rep.pr_bad > 0) rep.gain_bad = gain_bad / rep.pr_bad;
    rep.entropy_bits = plogp;
    rep.mean_log_choices = log_choices;
    return rep;
}

AppendixBReport verify_appendix_b(std::size_t n, std::size_t k, long double c, bool keep_table) {
    if (k >= n) throw std::invalid_argument("verify_appendix_b: requires 0 <= k < n");
    if (!(c > 0) || !(c < static_cast<long double>(n))) throw std::invalid_argument("verify_appendix_b: requires 0 < c < n");

    std::vector<long double> log2_factorial(n + 1, 0.0L);
    for (std::size_t i = 2; i <= n; ++i) log2_factorial[i] = log2_factorial[i - 1] + std::log2(static_cast<long double>(i));
    auto log2_choose = [&](std::size_t m, std::size_t r) {
        return log2_factorial[m] - log2_factorial[r] - log2_factorial[m - r];
    };
    const long double log2_p = std::log2(c / static_cast<long double>(n));
    const long double log2_q = std::log2(1.0L - c / static_cast<long double>(n));
    auto cell = [&](std::size_t u, std::size_t d) {
        return static_cast<long double>(u + d) * log2_p + static_cast<long double>(n - u - d) * log2_q +
               log2_choose(n - k, u) + log2_choose(k + u, d);
    };

    AppendixBReport rep;
    rep.n = n;
    rep.k = k;
    rep.c = c;
    rep.max_log2 = -std::numeric_limits<long double>::infinity();
    if (keep_table) rep.log2_table.assign(n - k, std::vector<long double>(k + 1));
    for (std::size_t u = 1; u <= n - k; ++u) {
        for (std::size_t d = 0; d <= k; ++d) {
            const long double v = cell(u, d);
            if (keep_table) rep.log2_table[u - 1][d] = v;
            if (v > rep.max_log2) {
                rep.max_log2 = v;
                rep.argmax_up = u;
                rep.argmax_down = d;
            }
        }
    }
    rep.reference_log2 = cell(1, 0);
    if (k >= 1) rep.reference_log2 = std::max(rep.reference_log2, cell(1, 1));
    const long double tolerance = 1e-12L * (1.0L + std::fabs(rep.reference_log2));
    rep.bound_holds = rep.max_log2 <= rep.reference_log2 + tolerance;
    return rep;
}

}  // namespace mclimb
