#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mclimb/bitstream.hpp"
#include "mclimb/engine.hpp"

namespace mclimb {

// Backward encoding of a finished update chain. Updates are written last to
// first, starting from the all-ones state. Each segment is
//
//   '1'  flag (0 good, 1 bad)  unary(U)  unary(D)  down-rank  up-choice
//
// where unary(x) is x ones and a zero; down-rank is the colex rank of the
// lowered bits among the zero-bits of Y_{t+1} in ceil(log2 C(#0_{t+1}, D))
// bits; up-choice is, for a good update, the colex rank of the raised bits
// among the one-bits of Y_{t+1} in ceil(log2 C(#1_{t+1}, U)) bits and, for a
// bad update, the position of the raised bit inside
// candidate_set(Y_{t+1} + lowered bits) in ceil(log2 |S|) bits. A single '0'
// ends the stream. Fixed-width fields are big-endian.
struct TraceSegment {
    std::size_t update = 0;  // index t in the forward chain
    std::size_t offset = 0;  // first bit (the marker)
    std::size_t length = 0;
    std::uint64_t down_width = 0;
    std::uint64_t up_width = 0;
};

struct EncodedTrace {
    BitString bits;
    std::size_t n = 0;
    Rational alpha;
    std::string function_spec;
    std::vector<TraceSegment> segments;  // stream order; not serialized
};

// Requires a finished trajectory whose every record is labeled with the same
// (f, alpha); throws std::logic_error otherwise.
EncodedTrace encode_trajectory(const Trajectory& traj, const MonotoneFunction& f, const Rational& alpha);

// Rebuilds start point, flips, labels and one-counts. Step counts are not part
// of the stream and come back as zero. Throws DecodeError on malformed input.
Trajectory decode_trajectory(const EncodedTrace& trace, const MonotoneFunction& f);
Trajectory decode_trajectory(const BitString& bits, const MonotoneFunction& f, const Rational& alpha);

// Deterministic upper bound on the encoded length: 1 + sum over updates of
// 2 + (U + D + 2) + ceil(log2 C(#0_{t+1}, D)) + choice, where choice is
// ceil(log2 C(#1_{t+1}, U)) for good updates and
// max(1, ceil(log2(alpha (#1_{t+1} + D))) + 1) for bad ones.
std::uint64_t budget(const Trajectory& traj, const Rational& alpha);

// File form: "MCLIMB1 n=<n> alpha=<num>/<den> f=<spec>\n", the packed bits,
// then one byte holding the number of zero pad bits in the last data byte.
void write_trace(std::ostream& out, const EncodedTrace& trace);
EncodedTrace read_trace(std::istream& in);

}  // namespace mclimb
