#include "mclimb/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace mclimb {

const char* to_string(UpdateLabel label) {
    switch (label) {
        case UpdateLabel::Good: return "good";
        case UpdateLabel::Bad: return "bad";
        case UpdateLabel::Unclassified: return "unclassified";
    }
    return "?";
}

FitnessValue value(const MonotoneFunction& f, const SearchPoint& z, std::size_t j) {
    return f.bit_value(z, j);
}

ValueTable value_table(const MonotoneFunction& f, const SearchPoint& z) {
    ValueTable table;
    const auto ones = z.one_indices();
    table.entries.reserve(ones.size());
    for (BitIndex j : ones) table.entries.emplace_back(j, f.bit_value(z, j));
    return table;
}

std::size_t bad_threshold(std::size_t n, const Rational& alpha) {
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("bad_threshold: alpha must lie in [0, 1]");
    const Rational scaled = (Rational(1) - alpha) * Rational(static_cast<unsigned long>(n));
    return static_cast<std::size_t>(ceil(scaled).get_ui());
}

UpdateLabel classify_update(const SearchPoint& y, const FlipSet& fs, const MonotoneFunction& f,
                            const Rational& alpha) {
    if (fs.empty()) throw std::logic_error("classify_update: empty flip set is not an update");
    if (f.delta(y, fs) < 0) throw std::logic_error("classify_update: flip set is not an accepted move");
    if (fs.up_count() != 1) return UpdateLabel::Good;

    const std::size_t threshold = bad_threshold(y.size(), alpha);
    if (y.ones_count() + 1 <= threshold) return UpdateLabel::Good;  // too few one-bits to reach it

    SearchPoint z = y;
    z.set(fs.up.front(), true);
    const FitnessValue raised = f.bit_value(z, fs.up.front());
    std::size_t cheaper = 0;
    for (BitIndex j : z.one_indices())
        if (f.bit_value(z, j) < raised) ++cheaper;
    return cheaper >= threshold ? UpdateLabel::Bad : UpdateLabel::Good;
}

std::vector<BitIndex> candidate_set(const SearchPoint& z, const MonotoneFunction& f, const Rational& alpha) {
    const std::size_t threshold = bad_threshold(z.size(), alpha);
    if (z.ones_count() <= threshold) return {};
    ValueTable table = value_table(f, z);
    std::vector<FitnessValue> sorted;
    sorted.reserve(table.entries.size());
    for (const auto& [j, v] : table.entries) sorted.push_back(v);
    std::sort(sorted.begin(), sorted.end());
    std::vector<BitIndex> out;
    for (const auto& [j, v] : table.entries) {
        const auto cheaper = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
        if (cheaper >= threshold) out.push_back(j);
    }
    return out;
}

}  // namespace mclimb
