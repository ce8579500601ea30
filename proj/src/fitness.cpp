#include "mclimb/fitness.hpp"

#include <fstream>
#include <map>
#include <mutex>

namespace mclimb {

MonotoneFunction::MonotoneFunction(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("MonotoneFunction: dimension must be positive");
}

void MonotoneFunction::check_dimension(const SearchPoint& x) const {
    if (x.size() != n_)
        throw std::logic_error("MonotoneFunction: point of length " + std::to_string(x.size()) +
                               " passed to a function of dimension " + std::to_string(n_));
}

FitnessValue MonotoneFunction::eval(const SearchPoint& x) const {
    check_dimension(x);
    return do_eval(x);
}

FitnessValue MonotoneFunction::delta(const SearchPoint& x, const FlipSet& fs) const {
    check_dimension(x);
    if (!fs.valid_for(x)) throw std::logic_error("MonotoneFunction::delta: flip set is not valid for this point");
    return do_delta(x, fs);
}

FitnessValue MonotoneFunction::bit_value(const SearchPoint& z, std::size_t j) const {
    check_dimension(z);
    if (j >= n_ || !z.test(j)) throw std::logic_error("bit_value: bit " + std::to_string(j) + " is not a one-bit");
    return do_bit_value(z, j);
}

FitnessValue MonotoneFunction::do_delta(const SearchPoint& x, const FlipSet& fs) const {
    return do_eval(apply(x, fs)) - do_eval(x);
}

FitnessValue MonotoneFunction::do_bit_value(const SearchPoint& z, std::size_t j) const {
    SearchPoint lowered = z;
    lowered.set(j, false);
    return do_eval(z) - do_eval(lowered);
}

FitnessValue OneMax::do_eval(const SearchPoint& x) const {
    return FitnessValue(static_cast<unsigned long>(x.ones_count()));
}

FitnessValue OneMax::do_delta(const SearchPoint&, const FlipSet& fs) const {
    return FitnessValue(static_cast<long>(fs.up_count()) - static_cast<long>(fs.down_count()));
}

FitnessValue OneMax::do_bit_value(const SearchPoint&, std::size_t) const { return FitnessValue(1); }

LinearWeights::LinearWeights(std::vector<Rational> weights, std::string spec)
    : MonotoneFunction(weights.size()), weights_(std::move(weights)), spec_(std::move(spec)) {
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] <= 0)
            throw std::invalid_argument("LinearWeights: weight " + std::to_string(i) + " is not positive");
}

LinearWeights::LinearWeights(std::vector<Rational> weights) : LinearWeights(std::move(weights), "linear:inline") {}

FitnessValue LinearWeights::do_eval(const SearchPoint& x) const {
    FitnessValue sum = 0;
    for (BitIndex i : x.one_indices()) sum += weights_[i];
    return sum;
}

FitnessValue LinearWeights::do_delta(const SearchPoint&, const FlipSet& fs) const {
    FitnessValue sum = 0;
    for (BitIndex i : fs.up) sum += weights_[i];
    for (BitIndex i : fs.down) sum -= weights_[i];
    return sum;
}

FitnessValue LinearWeights::do_bit_value(const SearchPoint&, std::size_t j) const { return weights_[j]; }

namespace {

std::vector<Rational> powers(std::size_t n, const Rational& base) {
    if (base <= 1) throw std::invalid_argument("ExponentialWeights: base must exceed 1");
    std::vector<Rational> w(n);
    Rational p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = p;
        p *= base;
    }
    return w;
}

FunctionPtr halves_product(std::size_t n) {
    // (1 + ones in the left half) * (1 + ones in the right half).
    const std::size_t half = n / 2;
    return std::make_shared<PluginFunction>(n, "halves-product", [half](const SearchPoint& x) {
        long left = 0;
        long right = 0;
        for (BitIndex i : x.one_indices()) (i < half ? left : right) += 1;
        return FitnessValue((1 + left) * (1 + right));
    });
}

struct PluginRegistry {
    std::mutex mutex;
    std::map<std::string, PluginFactory> factories{{"halves-product", halves_product}};
};

PluginRegistry& registry() {
    static PluginRegistry r;
    return r;
}

}  // namespace

ExponentialWeights::ExponentialWeights(std::size_t n, const Rational& base)
    : LinearWeights(powers(n, base), "expw:" + to_string(base)), base_(base) {}

PluginFunction::PluginFunction(std::size_t n, std::string name, Eval eval)
    : MonotoneFunction(n), name_(std::move(name)), eval_(std::move(eval)) {
    if (!eval_) throw std::invalid_argument("PluginFunction: empty evaluation callback");
}

std::vector<Rational> random_linear_weights(std::size_t n, std::uint64_t seed) {
    Rng rng({seed, 0x11ea7ull ^ n});
    std::vector<Rational> w(n);
    for (auto& wi : w) wi = Rational(static_cast<unsigned long>(1 + rng.below(1000)));
    return w;
}

std::vector<Rational> read_weights_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FunctionSpecError("cannot open weights file '" + path + "'");
    std::vector<Rational> weights;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            weights.push_back(parse_rational(line));
        } catch (const std::invalid_argument& e) {
            throw FunctionSpecError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return weights;
}

void register_plugin(const std::string& name, PluginFactory factory) {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    r.factories[name] = std::move(factory);
}

std::vector<std::string> plugin_names() {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    std::vector<std::string> names;
    for (const auto& [name, _] : r.factories) names.push_back(name);
    return names;
}

FunctionPtr make_function(std::string_view spec, std::size_t n) {
    if (n == 0) throw FunctionSpecError("function dimension must be positive");
    const auto colon = spec.find(':');
    const std::string_view kind = spec.substr(0, colon);
    const std::string arg = colon == std::string_view::npos ? std::string() : std::string(spec.substr(colon + 1));
    const bool has_arg = colon != std::string_view::npos && !arg.empty();

    if (kind == "onemax" && colon == std::string_view::npos) return std::make_shared<OneMax>(n);
    if (kind == "linear" && has_arg) {
        auto w = read_weights_file(arg);
        if (w.size() != n)
            throw FunctionSpecError("weights file '" + arg + "' has " + std::to_string(w.size()) +
                                    " weights, expected " + std::to_string(n));
        try {
            return std::make_shared<LinearWeights>(std::move(w), std::string(spec));
        } catch (const std::invalid_argument& e) {
            throw FunctionSpecError(e.what());
        }
    }
    if (kind == "linear-random" && has_arg) {
        std::uint64_t seed = 0;
        try {
            std::size_t used = 0;
            seed = std::stoull(arg, &used);
            if (used != arg.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw FunctionSpecError("linear-random expects an unsigned seed, got '" + arg + "'");
        }
        return std::make_shared<LinearWeights>(random_linear_weights(n, seed), std::string(spec));
    }
    if (kind == "expw" && has_arg) {
        try {
            return std::make_shared<ExponentialWeights>(n, parse_rational(arg));
        } catch (const std::invalid_argument& e) {
            throw FunctionSpecError(std::string("expw: ") + e.what());
        }
    }
    if (kind == "plugin" && has_arg) {
        PluginFactory factory;
        {
            auto& r = registry();
            std::lock_guard lock(r.mutex);
            auto it = r.factories.find(arg);
            if (it == r.factories.end()) throw FunctionSpecError("unknown plugin '" + arg + "'");
            factory = it->second;
        }
        auto f = factory(n);
        if (!f || f->dimension() != n) throw FunctionSpecError("plugin '" + arg + "' returned a bad function");
        return f;
    }
    throw FunctionSpecError("unrecognised function spec '" + std::string(spec) + "'");
}

std::optional<MonotonicityViolation> check_monotone_exhaustive(const MonotoneFunction& f) {
    const std::size_t n = f.dimension();
    if (n > 16) throw std::invalid_argument("check_monotone_exhaustive: n must be at most 16");
    const std::uint32_t count = std::uint32_t{1} << n;
    std::vector<FitnessValue> values(count);
    auto point_of = [n](std::uint32_t mask) {
        SearchPoint x(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) x.set(i, true);
        return x;
    };
    for (std::uint32_t mask = 0; mask < count; ++mask) values[mask] = f.eval(point_of(mask));
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1u) continue;
            const std::uint32_t upper = mask | (std::uint32_t{1} << i);
            if (!(values[mask] < values[upper])) return MonotonicityViolation{point_of(mask), point_of(upper)};
        }
    }
    return std::nullopt;
}

std::optional<MonotonicityViolation> check_monotone_sampled(const MonotoneFunction& f, std::size_t trials,
                                                            Rng& rng) {
    const std::size_t n = f.dimension();
    for (std::size_t t = 0; t < trials; ++t) {
        SearchPoint lower = SearchPoint::uniform(n, rng);
        if (lower.all_ones()) lower.set(rng.below(n), false);
        const auto zeros = lower.zero_indices();
        SearchPoint upper = lower;
        upper.set(zeros[rng.below(zeros.size())], true);
        if (!(f.eval(lower) < f.eval(upper))) return MonotonicityViolation{lower, upper};
    }
    return std::nullopt;
}

}  // namespace mclimb
