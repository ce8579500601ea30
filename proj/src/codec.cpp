#include "mclimb/codec.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mclimb/classifier.hpp"
#include "mclimb/subset_rank.hpp"

namespace mclimb {

namespace {

// Positions of `members` inside the ascending `universe`.
std::vector<BitIndex> positions_in(const std::vector<BitIndex>& universe, const std::vector<BitIndex>& members) {
    std::vector<BitIndex> pos;
    pos.reserve(members.size());
    for (BitIndex i : members) {
        auto it = std::lower_bound(universe.begin(), universe.end(), i);
        if (it == universe.end() || *it != i) throw std::logic_error("encode: flipped bit outside its universe");
        pos.push_back(static_cast<BitIndex>(it - universe.begin()));
    }
    return pos;
}

std::vector<BitIndex> select(const std::vector<BitIndex>& universe, const std::vector<BitIndex>& positions) {
    std::vector<BitIndex> out;
    out.reserve(positions.size());
    for (BitIndex p : positions) out.push_back(universe[p]);
    return out;
}

std::uint64_t choice_width(std::uint64_t m, std::uint64_t r) { return ceil_log2(binomial(m, r)); }

std::uint64_t candidate_width(std::size_t candidates) {
    return ceil_log2(BigInt(static_cast<unsigned long>(std::max<std::size_t>(candidates, 1))));
}

// Smallest e with 2^e >= q, for q > 0.
long ceil_log2_rational(const Rational& q) {
    long e = 0;
    Rational power = 1;
    while (power < q) {
        power *= 2;
        ++e;
    }
    while (power / 2 >= q) {
        power /= 2;
        --e;
    }
    return e;
}

}  // namespace

EncodedTrace encode_trajectory(const Trajectory& traj, const MonotoneFunction& f, const Rational& alpha) {
    if (!traj.reached_optimum) throw std::logic_error("encode_trajectory: trajectory did not reach the optimum");
    if (f.dimension() != traj.n()) throw std::logic_error("encode_trajectory: dimension mismatch");
    const auto states = traj.states();

    EncodedTrace trace;
    trace.n = traj.n();
    trace.alpha = alpha;
    trace.function_spec = f.spec();
    BitString& out = trace.bits;

    for (std::size_t t = traj.records.size(); t-- > 0;) {
        const UpdateRecord& rec = traj.records[t];
        const SearchPoint& after = states[t + 1];
        if (rec.label == UpdateLabel::Unclassified) throw std::logic_error("encode_trajectory: unclassified update");
        const bool bad = rec.label == UpdateLabel::Bad;

        TraceSegment seg;
        seg.update = t;
        seg.offset = out.size();
        out.push_back(true);
        out.push_back(bad);
        out.append_unary(rec.up());
        out.append_unary(rec.down());

        const auto zero_bits = after.zero_indices();
        seg.down_width = choice_width(zero_bits.size(), rec.down());
        out.append_fixed(subset_rank(positions_in(zero_bits, rec.flips.down), zero_bits.size()).rank, seg.down_width);

        if (!bad) {
            const auto one_bits = after.one_indices();
            seg.up_width = choice_width(one_bits.size(), rec.up());
            out.append_fixed(subset_rank(positions_in(one_bits, rec.flips.up), one_bits.size()).rank, seg.up_width);
        } else {
            if (rec.up() != 1) throw std::logic_error("encode_trajectory: bad update with more than one upflip");
            SearchPoint z = after;
            for (BitIndex j : rec.flips.down) z.set(j, true);
            const auto candidates = candidate_set(z, f, alpha);
            auto it = std::find(candidates.begin(), candidates.end(), rec.flips.up.front());
            if (it == candidates.end()) throw std::logic_error("encode_trajectory: bad upflip is not a candidate");
            seg.up_width = candidate_width(candidates.size());
            out.append_fixed(BigInt(static_cast<unsigned long>(it - candidates.begin())), seg.up_width);
        }
        seg.length = out.size() - seg.offset;
        trace.segments.push_back(seg);
    }
    out.push_back(false);
    return trace;
}

Trajectory decode_trajectory(const BitString& bits, const MonotoneFunction& f, const Rational& alpha) {
    const std::size_t n = f.dimension();
    BitReader in(bits);
    SearchPoint y = SearchPoint::ones(n);
    std::vector<UpdateRecord> backwards;

    for (;;) {
        const std::size_t segment_start = in.position();
        if (!in.read_bit()) break;
        const bool bad = in.read_bit();
        const std::uint64_t up = in.read_unary(n);
        const std::uint64_t down = in.read_unary(n);
        if (up == 0) throw DecodeError("update without an upflip", segment_start);
        if (down > y.zeros_count()) throw DecodeError("more downflips than zero-bits", segment_start);
        if (up > y.ones_count()) throw DecodeError("more upflips than one-bits", segment_start);
        if (bad && up != 1) throw DecodeError("bad update must have exactly one upflip", segment_start);

        const auto zero_bits = y.zero_indices();
        const std::size_t down_at = in.position();
        const BigInt down_rank = in.read_fixed(choice_width(zero_bits.size(), down));
        FlipSet fs;
        try {
            fs.down = select(zero_bits, subset_unrank(down_rank, zero_bits.size(), down));
        } catch (const std::out_of_range&) {
            throw DecodeError("downflip rank out of range", down_at);
        }
        SearchPoint z = y;
        for (BitIndex j : fs.down) z.set(j, true);

        const std::size_t up_at = in.position();
        if (!bad) {
            const auto one_bits = y.one_indices();
            const BigInt up_rank = in.read_fixed(choice_width(one_bits.size(), up));
            try {
                fs.up = select(one_bits, subset_unrank(up_rank, one_bits.size(), up));
            } catch (const std::out_of_range&) {
                throw DecodeError("upflip rank out of range", up_at);
            }
        } else {
            const auto candidates = candidate_set(z, f, alpha);
            if (candidates.empty()) throw DecodeError("bad update with an empty candidate set", segment_start);
            const BigInt pos = in.read_fixed(candidate_width(candidates.size()));
            if (pos >= static_cast<unsigned long>(candidates.size()))
                throw DecodeError("candidate position out of range", up_at);
            fs.up = {candidates[pos.get_ui()]};
        }

        SearchPoint before = z;
        for (BitIndex i : fs.up) before.set(i, false);
        UpdateLabel label;
        try {
            label = classify_update(before, fs, f, alpha);
        } catch (const std::logic_error&) {
            throw DecodeError("decoded move would have been rejected", segment_start);
        }
        if ((label == UpdateLabel::Bad) != bad) throw DecodeError("good/bad flag contradicts the function", segment_start);

        UpdateRecord rec;
        rec.flips = std::move(fs);
        rec.ones_before = before.ones_count();
        rec.ones_after = y.ones_count();
        rec.label = label;
        backwards.push_back(std::move(rec));
        y = std::move(before);
    }
    if (!in.exhausted()) throw DecodeError("trailing bits after the terminator", in.position());

    Trajectory traj;
    traj.start = y;
    traj.reached_optimum = true;
    traj.records.assign(std::make_move_iterator(backwards.rbegin()), std::make_move_iterator(backwards.rend()));
    for (std::size_t t = 0; t < traj.records.size(); ++t) traj.records[t].index = t;
    return traj;
}

Trajectory decode_trajectory(const EncodedTrace& trace, const MonotoneFunction& f) {
    if (trace.n != f.dimension()) throw DecodeError("trace dimension differs from the function", 0);
    return decode_trajectory(trace.bits, f, trace.alpha);
}

std::uint64_t budget(const Trajectory& traj, const Rational& alpha) {
    const std::size_t n = traj.n();
    std::uint64_t bits = 1;
    for (const auto& r : traj.records) {
        const std::size_t zeros_after = n - r.ones_after;
        bits += 2 + (r.up() + r.down() + 2) + choice_width(zeros_after, r.down());
        if (r.label == UpdateLabel::Bad) {
            const Rational pool = alpha * Rational(static_cast<unsigned long>(r.ones_after + r.down()));
            const long width = pool > 0 ? ceil_log2_rational(pool) + 1 : 1;
            bits += static_cast<std::uint64_t>(std::max(1L, width));
        } else {
            bits += choice_width(r.ones_after, r.up());
        }
    }
    return bits;
}

void write_trace(std::ostream& out, const EncodedTrace& trace) {
    out << "MCLIMB1 n=" << trace.n << " alpha=" << trace.alpha.get_num().get_str() << '/'
        << trace.alpha.get_den().get_str() << " f=" << trace.function_spec << '\n';
    const auto& bytes = trace.bits.bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    const char pad = static_cast<char>((8 - trace.bits.size() % 8) % 8);
    out.put(pad);
    if (!out) throw std::runtime_error("write_trace: output stream failure");
}

EncodedTrace read_trace(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("read_trace: missing header");
    std::istringstream fields(header);
    std::string magic, n_field, alpha_field, f_field;
    fields >> magic >> n_field >> alpha_field;
    std::getline(fields >> std::ws, f_field);
    if (magic != "MCLIMB1" || n_field.rfind("n=", 0) != 0 || alpha_field.rfind("alpha=", 0) != 0 ||
        f_field.rfind("f=", 0) != 0)
        throw std::runtime_error("read_trace: malformed header '" + header + "'");

    EncodedTrace trace;
    try {
        trace.n = std::stoul(n_field.substr(2));
        trace.alpha = parse_rational(alpha_field.substr(6));
    } catch (const std::exception&) {
        throw std::runtime_error("read_trace: malformed header '" + header + "'");
    }
    trace.function_spec = f_field.substr(2);

    std::vector<std::uint8_t> payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (payload.empty()) throw std::runtime_error("read_trace: missing pad byte");
    const std::uint8_t pad = payload.back();
    payload.pop_back();
    if (pad > 7 || (payload.empty() && pad != 0)) throw std::runtime_error("read_trace: invalid pad byte");
    const std::size_t bit_count = payload.size() * 8 - pad;
    trace.bits = BitString::from_bytes(std::move(payload), bit_count);
    return trace;
}

}  // namespace mclimb
