#include <doctest.h>

#include "mclimb/classifier.hpp"

using namespace mclimb;

TEST_CASE("bit values") {
    OneMax om(6);
    const auto z = SearchPoint::from_string("110101");
    for (auto j : z.one_indices()) CHECK(value(om, z, j) == 1);
    CHECK_THROWS_AS(value(om, z, 2), std::logic_error);

    LinearWeights lw({Rational(3), Rational(1, 2), Rational(7), Rational(2)});
    CHECK(value(lw, SearchPoint::from_string("1011"), 2) == 7);
    CHECK(value(lw, SearchPoint::from_string("0011"), 2) == 7);

    ExponentialWeights ew(4, Rational(2));
    const auto table = value_table(ew, SearchPoint::ones(4));
    REQUIRE(table.entries.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(table.entries[j].first == j);
        CHECK(table.entries[j].second == Rational(1 << j));
    }
}

TEST_CASE("threshold is ceil((1 - alpha) n)") {
    CHECK(bad_threshold(8, Rational(1, 2)) == 4);
    CHECK(bad_threshold(10, Rational(1, 4)) == 8);  // 7.5 rounds up
    CHECK(bad_threshold(10, Rational(0)) == 10);
    CHECK(bad_threshold(7, Rational(1, 10)) == 7);
}

TEST_CASE("classification examples") {
    ExponentialWeights ew(8, Rational(2));
    const Rational half(1, 2);
    // Highest-weight bit 7 is zero; raising it and dropping bit 0 is accepted.
    const auto y = SearchPoint::from_string("11111110");
    CHECK(classify_update(y, FlipSet{{7}, {0}}, ew, half) == UpdateLabel::Bad);
    CHECK(classify_update(y, FlipSet{{7}, {}}, ew, half) == UpdateLabel::Bad);

    const auto y2 = SearchPoint::from_string("11110000");
    CHECK(classify_update(y2, FlipSet{{4, 5}, {}}, ew, half) == UpdateLabel::Good);

    // Raising the cheapest zero-bit: nothing cheaper among the ones.
    const auto y3 = SearchPoint::from_string("01111111");
    CHECK(classify_update(y3, FlipSet{{0}, {}}, ew, half) == UpdateLabel::Good);

    // Too few one-bits overall to reach the threshold.
    const auto y4 = SearchPoint::from_string("11000000");
    CHECK(classify_update(y4, FlipSet{{7}, {}}, ew, half) == UpdateLabel::Good);

    OneMax om(8);
    CHECK(classify_update(y, FlipSet{{7}, {}}, om, half) == UpdateLabel::Good);
    CHECK(classify_update(y, FlipSet{{7}, {0}}, om, half) == UpdateLabel::Good);

    CHECK_THROWS_AS(classify_update(y, FlipSet{}, ew, half), std::logic_error);
    // Rejected move: fitness decreases.
    CHECK_THROWS_AS(classify_update(SearchPoint::from_string("00000001"), FlipSet{{0}, {7}}, ew, half),
                    std::logic_error);
}

TEST_CASE("candidate sets") {
    ExponentialWeights ew(8, Rational(2));
    // Threshold 4: bits 4..7 each have at least four strictly cheaper one-bits.
    CHECK(candidate_set(SearchPoint::ones(8), ew, Rational(1, 2)) == std::vector<BitIndex>{4, 5, 6, 7});
    CHECK(candidate_set(SearchPoint::ones(8), OneMax(8), Rational(1, 2)).empty());
    // alpha = 0 needs n cheaper bits, never possible.
    CHECK(candidate_set(SearchPoint::ones(8), ew, Rational(0)).empty());
    // Threshold 6 at alpha = 1/4.
    CHECK(candidate_set(SearchPoint::ones(8), ew, Rational(1, 4)) == std::vector<BitIndex>{6, 7});
    // Ties are not strictly cheaper.
    LinearWeights tied({Rational(1), Rational(1), Rational(1), Rational(5)});
    CHECK(candidate_set(SearchPoint::ones(4), tied, Rational(1, 4)) == std::vector<BitIndex>{3});
}

TEST_CASE("classification and candidate set agree on random instances") {
    Rng rng({21, 0});
    const std::size_t n = 12;
    for (const char* spec : {"linear-random:1", "expw:2", "plugin:halves-product", "onemax"}) {
        const auto f = make_function(spec, n);
        for (const Rational& alpha : {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
            for (int trial = 0; trial < 300; ++trial) {
                const auto y = SearchPoint::uniform(n, rng);
                const auto zeros = y.zero_indices();
                if (zeros.empty()) continue;
                const BitIndex i = zeros[rng.below(zeros.size())];
                SearchPoint z = y;
                z.set(i, true);
                const auto s = candidate_set(z, *f, alpha);
                const auto label = classify_update(y, FlipSet{{i}, {}}, *f, alpha);
                const bool in_s = std::find(s.begin(), s.end(), i) != s.end();
                CHECK((label == UpdateLabel::Bad) == in_s);
                const std::size_t t = bad_threshold(n, alpha);
                CHECK(s.size() <= (z.ones_count() > t ? z.ones_count() - t : 0));
                // |S| never exceeds alpha * ones(z), the codec budget relies on it.
                CHECK(Rational(static_cast<unsigned long>(s.size())) <=
                      alpha * Rational(static_cast<unsigned long>(z.ones_count())));
            }
        }
    }
}
