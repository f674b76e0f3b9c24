#include "snapshot.hpp"

#include <cstring>
#include <fstream>

namespace chemoflow {

namespace {

constexpr char kMagic[4] = {'C', 'H', 'F', 'L'};
constexpr uint32_t kVersion = 1;
constexpr std::size_t kHeaderSize = 64;

void put_u32(char* dst, uint32_t v) {
    std::memcpy(dst, &v, 4);
}

void put_f64(char* dst, double v) {
    std::memcpy(dst, &v, 8);
}

}  // namespace

void write_snapshot(const std::string& path, const Snapshot& snap) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");

    char header[kHeaderSize] = {};
    std::memcpy(header, kMagic, 4);
    put_u32(header + 4, kVersion);
    put_u32(header + 8, static_cast<uint32_t>(snap.grid.n));
    put_f64(header + 12, snap.grid.length);
    put_f64(header + 20, snap.t);
    put_f64(header + 28, snap.alpha);
    put_u32(header + 36, 4);
    out.write(header, kHeaderSize);

    for (const Field* f : {&snap.n, &snap.c, &snap.u1, &snap.u2}) {
        require(f->grid.n == snap.grid.n, ErrorCode::InvalidArgument, "snapshot: field/grid mismatch");
        out.write(reinterpret_cast<const char*>(f->v.data()),
                  static_cast<std::streamsize>(f->v.size() * sizeof(double)));
    }
    if (!out)
        throw Error(ErrorCode::Io, "failed writing snapshot '" + path + "'");
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open snapshot '" + path + "'");

    char header[kHeaderSize];
    in.read(header, kHeaderSize);
    if (!in || std::memcmp(header, kMagic, 4) != 0)
        throw Error(ErrorCode::Io, "'" + path + "' is not a chemoflow snapshot");

    uint32_t version, n, field_count;
    double length, t, alpha;
    std::memcpy(&version, header + 4, 4);
    std::memcpy(&n, header + 8, 4);
    std::memcpy(&length, header + 12, 8);
    std::memcpy(&t, header + 20, 8);
    std::memcpy(&alpha, header + 28, 8);
    std::memcpy(&field_count, header + 36, 4);
    if (version != kVersion)
        throw Error(ErrorCode::Io, "unsupported snapshot version " + std::to_string(version));
    if (field_count != 4)
        throw Error(ErrorCode::Io, "unexpected snapshot field count " + std::to_string(field_count));

    Snapshot snap;
    snap.grid = SpectralGrid(static_cast<int>(n), length);
    snap.t = t;
    snap.alpha = alpha;
    for (Field* f : {&snap.n, &snap.c, &snap.u1, &snap.u2}) {
        *f = Field(snap.grid);
        in.read(reinterpret_cast<char*>(f->v.data()),
                static_cast<std::streamsize>(f->v.size() * sizeof(double)));
    }
    if (!in)
        throw Error(ErrorCode::Io, "snapshot '" + path + "' is truncated");
    return snap;
}

Snapshot snapshot_from_state(const State& s, double t, double alpha) {
    Snapshot snap;
    snap.grid = s.grid();
    snap.t = t;
    snap.alpha = alpha;
    snap.n = to_physical(s.n);
    snap.c = to_physical(s.c);
    snap.u1 = to_physical(s.u.x);
    snap.u2 = to_physical(s.u.y);
    return snap;
}

State state_from_snapshot(const Snapshot& snap) {
    VectorField u;
    u.x = snap.u1;
    u.y = snap.u2;
    return make_state(snap.n, snap.c, u);
}

}  // namespace chemoflow
