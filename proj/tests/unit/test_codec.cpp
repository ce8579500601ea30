#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "mclimb/codec.hpp"
#include "mclimb/entropy.hpp"
#include "mclimb/subset_rank.hpp"

using namespace mclimb;

namespace {

Trajectory chain(const SearchPoint& start, const std::vector<SearchPoint>& states, const MonotoneFunction& f,
                 const Rational& alpha) {
    Trajectory t;
    t.start = start;
    SearchPoint y = start;
    for (const auto& z : states) {
        UpdateRecord r;
        r.index = t.records.size();
        r.flips = difference(y, z);
        r.ones_before = y.ones_count();
        r.ones_after = z.ones_count();
        r.label = classify_update(y, r.flips, f, alpha);
        r.steps_waited = 1;
        t.records.push_back(r);
        y = z;
    }
    t.total_steps = t.records.size();
    t.reached_optimum = y.all_ones();
    return t;
}

Trajectory random_run(const std::string& spec, std::size_t n, double c, std::uint64_t seed, const Rational& alpha) {
    RunConfig cfg;
    cfg.n = n;
    cfg.c = c;
    cfg.function = make_function(spec, n);
    cfg.seed = {seed, 0};
    cfg.alpha = alpha;
    return run(cfg);
}

}  // namespace

TEST_CASE("colex subset ranks") {
    CHECK(subset_rank({}, 5).rank == 0);
    CHECK(ceil_log2(binomial(5, 0)) == 0);
    const std::vector<std::vector<BitIndex>> order{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    for (std::size_t r = 0; r < order.size(); ++r) {
        CHECK(subset_rank(order[r], 4).rank == r);
        CHECK(subset_unrank(BigInt(static_cast<unsigned long>(r)), 4, 2) == order[r]);
    }
    CHECK_THROWS_AS(subset_rank(std::vector<BitIndex>{2, 1}, 4), std::logic_error);
    CHECK_THROWS_AS(subset_rank(std::vector<BitIndex>{1, 4}, 4), std::logic_error);
    CHECK_THROWS_AS(subset_rank(std::vector<BitIndex>{1, 1}, 4), std::logic_error);
    CHECK_THROWS_AS(subset_unrank(BigInt(6), 4, 2), std::out_of_range);
    CHECK_THROWS_AS(subset_unrank(BigInt(0), 4, 5), std::out_of_range);
}

TEST_CASE("every 4-subset of 10 round-trips and ranks are a bijection") {
    std::set<unsigned long> seen;
    for (std::uint32_t mask = 0; mask < 1024; ++mask) {
        if (std::popcount(mask) != 4) continue;
        std::vector<BitIndex> s;
        for (BitIndex i = 0; i < 10; ++i)
            if (mask >> i & 1) s.push_back(i);
        const auto r = subset_rank(s, 10);
        CHECK(r.rank < 210);
        seen.insert(r.rank.get_ui());
        CHECK(subset_unrank(r.rank, 10, 4) == s);
    }
    CHECK(seen.size() == 210);
}

TEST_CASE("large subset ranks beyond 64 bits") {
    std::vector<BitIndex> s;
    for (BitIndex i = 0; i < 300; i += 3) s.push_back(i);
    const auto r = subset_rank(s, 301);
    CHECK(r.rank >= BigInt(1) << 64);
    CHECK(subset_unrank(r.rank, 301, s.size()) == s);
}

TEST_CASE("bit strings and readers") {
    BitString b;
    b.push_back(true);
    b.append_unary(3);
    b.append_fixed(BigInt(5), 4);
    b.append_fixed(BigInt(0), 0);
    CHECK(b.to_string() == "111100101");
    CHECK(b.bytes() == std::vector<std::uint8_t>{0xF2, 0x80});
    CHECK(BitString::from_string("111100101") == b);
    CHECK(BitString::from_bytes({0xF2, 0xFF}, 9) == b);
    CHECK(b.starts_with(BitString::from_string("1111")));
    CHECK_FALSE(b.starts_with(BitString::from_string("10")));
    CHECK_THROWS(b.append_fixed(BigInt(16), 4));

    BitReader r(b);
    CHECK(r.read_bit());
    CHECK(r.read_unary(10) == 3);
    CHECK(r.read_fixed(4) == 5);
    CHECK(r.exhausted());
    CHECK_THROWS_AS(r.read_bit(), DecodeError);

    const auto ones = BitString::from_string("11110");
    BitReader limited(ones);
    CHECK_THROWS_AS(limited.read_unary(2), DecodeError);
}

TEST_CASE("single update 110 -> 111 encodes in eight bits") {
    OneMax f(3);
    const Rational alpha(1, 4);
    const auto t = chain(SearchPoint::from_string("110"), {SearchPoint::ones(3)}, f, alpha);
    const auto enc = encode_trajectory(t, f, alpha);
    CHECK(enc.bits.to_string() == "10100" "10" "0");
    CHECK(enc.bits.size() == 8);
    CHECK(budget(t, alpha) == 8);
    REQUIRE(enc.segments.size() == 1);
    CHECK(enc.segments[0].down_width == 0);
    CHECK(enc.segments[0].up_width == 2);
    const auto back = decode_trajectory(enc, f);
    CHECK(same_update_chain(back, t));
    CHECK(back.start.to_string() == "110");
}

TEST_CASE("empty trajectory is a single zero bit") {
    OneMax f(5);
    const auto t = chain(SearchPoint::ones(5), {}, f, Rational(1, 4));
    const auto enc = encode_trajectory(t, f, Rational(1, 4));
    CHECK(enc.bits.to_string() == "0");
    CHECK(budget(t, Rational(1, 4)) == 1);
    const auto back = decode_trajectory(BitString::from_string("0"), f, Rational(1, 4));
    CHECK(back.updates() == 0);
    CHECK(back.start == SearchPoint::ones(5));
    CHECK(back.reached_optimum);
}

TEST_CASE("encoder preconditions") {
    OneMax f(4);
    const Rational alpha(1, 4);
    auto t = chain(SearchPoint::from_string("1100"), {SearchPoint::from_string("1110")}, f, alpha);
    CHECK_THROWS_AS(encode_trajectory(t, f, alpha), std::logic_error);  // not finished
    t = chain(SearchPoint::from_string("1100"), {SearchPoint::ones(4)}, f, alpha);
    t.records[0].label = UpdateLabel::Unclassified;
    CHECK_THROWS_AS(encode_trajectory(t, f, alpha), std::logic_error);
    t.records[0].label = UpdateLabel::Bad;  // a two-bit raise is never bad
    CHECK_THROWS_AS(encode_trajectory(t, f, alpha), std::logic_error);
}

TEST_CASE("decoder rejects malformed streams") {
    OneMax f(3);
    const Rational alpha(1, 4);
    auto dec = [&](const char* s) { return decode_trajectory(BitString::from_string(s), f, alpha); };
    CHECK_THROWS_AS(dec(""), DecodeError);
    CHECK_THROWS_AS(dec("1010"), DecodeError);        // truncated
    CHECK_THROWS_AS(dec("00"), DecodeError);          // trailing bits
    CHECK_THROWS_AS(dec("100000"), DecodeError);      // U = 0
    CHECK_THROWS_AS(dec("11" "10" "0" "00" "0"), DecodeError);  // bad flag but S is empty for OneMax
    CHECK_THROWS_AS(dec("10" "11110" "0"), DecodeError);        // U = 4 > n
    // Rank 3 of C(3,1) = 3 subsets is out of range.
    CHECK_THROWS_AS(dec("10" "10" "0" "11" "0"), DecodeError);
    try {
        dec("1010");
    } catch (const DecodeError& e) {
        CHECK(e.bit_offset() <= 4);
    }
}

TEST_CASE("round trips, budgets and telescoping on seeded runs") {
    const Rational alpha(1, 4);
    std::size_t bad_total = 0;
    for (const char* spec : {"onemax", "linear-random:1", "expw:2", "plugin:halves-product"}) {
        for (std::size_t n : {16u, 64u}) {
            for (double c : {0.8, 1.2}) {
                for (std::uint64_t seed = 1; seed <= 6; ++seed) {
                    const auto t = random_run(spec, n, c, seed, alpha);
                    REQUIRE(t.reached_optimum);
                    const auto f = make_function(spec, n);
                    const auto enc = encode_trajectory(t, *f, alpha);
                    const auto back = decode_trajectory(enc, *f);
                    CHECK(same_update_chain(back, t));
                    CHECK(is_consistent(back));
                    const auto limit = budget(t, alpha);
                    CHECK(enc.bits.size() <= limit);
                    // Each bad update saves at least one bit against its budget.
                    CHECK(limit - enc.bits.size() >= t.bad_updates());
                    bad_total += t.bad_updates();
                    CHECK(telescoping_check(t).ok);
                    // Segments tile the stream, last update first.
                    std::size_t pos = 0;
                    for (std::size_t s = 0; s < enc.segments.size(); ++s) {
                        CHECK(enc.segments[s].offset == pos);
                        CHECK(enc.segments[s].update == t.updates() - 1 - s);
                        pos += enc.segments[s].length;
                    }
                    CHECK(pos + 1 == enc.bits.size());
                }
            }
        }
    }
    CHECK(bad_total > 0);
}

TEST_CASE("mean encoded length is at least the mean entropy lower bound") {
    const Rational alpha(1, 4);
    for (const char* spec : {"onemax", "expw:2"}) {
        double len = 0, lb = 0;
        const int runs = 500;
        for (int i = 0; i < runs; ++i) {
            const auto t = random_run(spec, 32, 1.0, 1000 + i, alpha);
            REQUIRE(t.reached_optimum);
            const auto f = make_function(spec, 32);
            len += static_cast<double>(encode_trajectory(t, *f, alpha).bits.size());
            lb += entropy_lower_bound(t);
        }
        CHECK(len / runs >= lb / runs);
    }
}

TEST_CASE("encodings of distinct small trajectories are prefix-free") {
    for (const char* spec : {"onemax", "expw:2"}) {
        for (std::size_t n : {2u, 3u, 4u}) {
            const auto f = make_function(spec, n);
            const Rational alpha(1, 2);
            std::vector<std::string> codes;
            std::set<std::string> chains;
            // All accepted update chains of length <= 3 ending at the optimum.
            std::function<void(const SearchPoint&, std::vector<SearchPoint>&)> grow;
            std::vector<SearchPoint> starts;
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                SearchPoint s(n);
                for (std::size_t i = 0; i < n; ++i) s.set(i, m >> i & 1);
                starts.push_back(s);
            }
            for (const auto& s : starts) {
                std::vector<SearchPoint> path;
                grow = [&](const SearchPoint& y, std::vector<SearchPoint>& p) {
                    if (y.all_ones()) {
                        const auto t = chain(s, p, *f, alpha);
                        codes.push_back(encode_trajectory(t, *f, alpha).bits.to_string());
                        chains.insert(canonical_text(t));
                        return;
                    }
                    if (p.size() == 3) return;
                    for (const auto& z : starts) {
                        if (z == y || f->eval(z) < f->eval(y) || difference(y, z).up_count() == 0) continue;
                        p.push_back(z);
                        grow(z, p);
                        p.pop_back();
                    }
                };
                grow(s, path);
            }
            std::sort(codes.begin(), codes.end());
            CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
            CHECK(codes.size() == chains.size());
            // In sorted order a prefix relation always shows between neighbours.
            for (std::size_t i = 1; i < codes.size(); ++i)
                CHECK_FALSE(codes[i].compare(0, codes[i - 1].size(), codes[i - 1]) == 0);
        }
    }
}

TEST_CASE("trace files round-trip") {
    const Rational alpha(1, 4);
    const auto t = random_run("expw:2", 64, 1.0, 5, alpha);
    const auto f = make_function("expw:2", 64);
    const auto enc = encode_trajectory(t, *f, alpha);
    std::stringstream buf;
    write_trace(buf, enc);
    const std::string bytes = buf.str();
    CHECK(bytes.rfind("MCLIMB1 n=64 alpha=1/4 f=expw:2\n", 0) == 0);
    CHECK(static_cast<unsigned char>(bytes.back()) == (8 - enc.bits.size() % 8) % 8);
    std::stringstream in(bytes);
    const auto back = read_trace(in);
    CHECK(back.bits == enc.bits);
    CHECK(back.n == 64);
    CHECK(back.alpha == alpha);
    CHECK(back.function_spec == "expw:2");
    CHECK(same_update_chain(decode_trajectory(back, *f), t));

    std::stringstream junk("NOPE\n\x00");
    CHECK_THROWS(read_trace(junk));
    std::stringstream bad_pad(std::string("MCLIMB1 n=3 alpha=1/4 f=onemax\n\x80\x09", 33));
    CHECK_THROWS(read_trace(bad_pad));
}
