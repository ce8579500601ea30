#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mclimb/rational.hpp"
#include "mclimb/search_point.hpp"

namespace mclimb {

using FitnessValue = Rational;

// A strictly monotone pseudo-Boolean function: raising any bit strictly
// increases the value. Implementations must be safe for concurrent const use.
//
// eval() is the definition; delta() and bit_value() are derived quantities
// that implementations may compute faster, but must agree with eval() exactly.
class MonotoneFunction {
public:
    explicit MonotoneFunction(std::size_t n);
    virtual ~MonotoneFunction() = default;

    std::size_t dimension() const noexcept { return n_; }

    FitnessValue eval(const SearchPoint& x) const;

    // eval(apply(x, fs)) - eval(x).
    FitnessValue delta(const SearchPoint& x, const FlipSet& fs) const;

    // eval(z) - eval(z - e_j); requires z^j = 1.
    FitnessValue bit_value(const SearchPoint& z, std::size_t j) const;

    // Spec string understood by make_function.
    virtual std::string spec() const = 0;

protected:
    virtual FitnessValue do_eval(const SearchPoint& x) const = 0;
    virtual FitnessValue do_delta(const SearchPoint& x, const FlipSet& fs) const;
    virtual FitnessValue do_bit_value(const SearchPoint& z, std::size_t j) const;

private:
    void check_dimension(const SearchPoint& x) const;

    std::size_t n_;
};

using FunctionPtr = std::shared_ptr<const MonotoneFunction>;

class OneMax final : public MonotoneFunction {
public:
    using MonotoneFunction::MonotoneFunction;
    std::string spec() const override { return "onemax"; }

protected:
    FitnessValue do_eval(const SearchPoint& x) const override;
    FitnessValue do_delta(const SearchPoint& x, const FlipSet& fs) const override;
    FitnessValue do_bit_value(const SearchPoint& z, std::size_t j) const override;
};

// f(x) = sum_i w_i x^i with exact positive weights.
class LinearWeights : public MonotoneFunction {
public:
    LinearWeights(std::vector<Rational> weights, std::string spec);
    explicit LinearWeights(std::vector<Rational> weights);

    const std::vector<Rational>& weights() const noexcept { return weights_; }
    std::string spec() const override { return spec_; }

protected:
    FitnessValue do_eval(const SearchPoint& x) const override;
    FitnessValue do_delta(const SearchPoint& x, const FlipSet& fs) const override;
    FitnessValue do_bit_value(const SearchPoint& z, std::size_t j) const override;

private:
    std::vector<Rational> weights_;
    std::string spec_;
};

// w_i = base^i with exact rational base > 1.
class ExponentialWeights final : public LinearWeights {
public:
    ExponentialWeights(std::size_t n, const Rational& base);
    const Rational& base() const noexcept { return base_; }

private:
    Rational base_;
};

// User-supplied evaluation. The caller is responsible for strict monotonicity;
// check_monotone_* can confirm it.
class PluginFunction final : public MonotoneFunction {
public:
    using Eval = std::function<FitnessValue(const SearchPoint&)>;
    PluginFunction(std::size_t n, std::string name, Eval eval);
    std::string spec() const override { return "plugin:" + name_; }

protected:
    FitnessValue do_eval(const SearchPoint& x) const override { return eval_(x); }

private:
    std::string name_;
    Eval eval_;
};

// Weights uniform in [1, 1000], drawn from stream (seed, n).
std::vector<Rational> random_linear_weights(std::size_t n, std::uint64_t seed);

// One exact rational per line, '#' starts a comment, blank lines ignored.
std::vector<Rational> read_weights_file(const std::string& path);

class FunctionSpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using PluginFactory = std::function<FunctionPtr(std::size_t n)>;

// Registers a factory under plugin:<name>. Not thread-safe against concurrent
// make_function calls; register at startup.
void register_plugin(const std::string& name, PluginFactory factory);
std::vector<std::string> plugin_names();

// Parses "onemax", "linear:<path>", "linear-random:<seed>", "expw:<base>" or
// "plugin:<name>". Throws FunctionSpecError; a linear weights file whose length
// differs from n is also rejected.
FunctionPtr make_function(std::string_view spec, std::size_t n);

struct MonotonicityViolation {
    SearchPoint lower;  // lower + e_i == upper
    SearchPoint upper;
};

// Scans all n * 2^(n-1) covering pairs; n <= 16.
std::optional<MonotonicityViolation> check_monotone_exhaustive(const MonotoneFunction& f);

// Random covering pairs; probabilistic guard for large n.
std::optional<MonotonicityViolation> check_monotone_sampled(const MonotoneFunction& f, std::size_t trials,
                                                            Rng& rng);

}  // namespace mclimb
