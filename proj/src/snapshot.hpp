#pragma once

// Binary snapshot format, bit-exact for interoperability:
//
//   64-byte header: magic "CHFL" | version u32 | N u32 | L f64 | t f64 |
//                   alpha f64 | field_count u32 | 24 reserved zero bytes,
//   then field_count arrays of N*N little-endian f64, row-major, in the
//   order n, c, u1, u2. Physical-space samples.

#include <string>

#include "model.hpp"

namespace chemoflow {

struct Snapshot {
    SpectralGrid grid;
    double t = 0.0;
    double alpha = 1.0;
    Field n, c, u1, u2;
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

Snapshot snapshot_from_state(const State& s, double t, double alpha);
State state_from_snapshot(const Snapshot& snap);

}  // namespace chemoflow
