#include "hyperfourier/field_io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

namespace hyperfourier {

static_assert(std::endian::native == std::endian::little,
              "field files are little-endian; big-endian hosts are not supported");

namespace {

constexpr std::uint32_t kVersion = 1;
constexpr char kMagicQ2[4] = {'H', 'Q', 'F', '1'};
constexpr char kMagicMv4[4] = {'H', 'M', 'F', '4'};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    return in;
}

void put_u32(std::ofstream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ofstream& out, double v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t get_u32(std::ifstream& in, const std::string& path) {
    std::uint32_t v = 0;
    if (!in.read(reinterpret_cast<char*>(&v), sizeof v))
        throw FormatError("truncated header in " + path);
    return v;
}

double get_f64(std::ifstream& in, const std::string& path) {
    double v = 0.0;
    if (!in.read(reinterpret_cast<char*>(&v), sizeof v))
        throw FormatError("truncated header in " + path);
    return v;
}

void read_payload(std::ifstream& in, const std::string& path, double* dst, std::size_t count) {
    if (!in.read(reinterpret_cast<char*>(dst), std::streamsize(count * sizeof(double))))
        throw FormatError("truncated payload in " + path);
    // Any trailing bytes mean the header shape disagrees with the payload.
    in.peek();
    if (!in.eof()) throw FormatError("payload size does not match header shape in " + path);
}

void check_magic(std::ifstream& in, const std::string& path, const char expect[4]) {
    char magic[4] = {};
    if (!in.read(magic, 4)) throw FormatError("truncated header in " + path);
    if (std::memcmp(magic, expect, 4) != 0)
        throw FormatError("bad magic in " + path + " (expected " +
                          std::string(expect, 4) + ")");
}

void write_q2(const std::string& path, const Grid2Spec& spec,
              const std::vector<Quaternion>& samples) {
    std::ofstream out = open_out(path);
    out.write(kMagicQ2, 4);
    put_u32(out, kVersion);
    put_u32(out, std::uint32_t(spec.n1));
    put_u32(out, std::uint32_t(spec.n2));
    put_f64(out, spec.h1);
    put_f64(out, spec.h2);
    for (const Quaternion& q : samples) {
        put_f64(out, q.r);
        put_f64(out, q.i);
        put_f64(out, q.j);
        put_f64(out, q.k);
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_mv4(const std::string& path, const Grid4Spec& spec,
               const std::vector<Multivector31>& samples) {
    std::ofstream out = open_out(path);
    out.write(kMagicMv4, 4);
    put_u32(out, kVersion);
    for (std::size_t c : spec.n) put_u32(out, std::uint32_t(c));
    for (double h : spec.h) put_f64(out, h);
    for (const Multivector31& m : samples)
        for (double v : m.c) put_f64(out, v);
    if (!out) throw IoError("write failed: " + path);
}

std::pair<Grid2Spec, std::vector<Quaternion>> read_q2(const std::string& path) {
    std::ifstream in = open_in(path);
    check_magic(in, path, kMagicQ2);
    const std::uint32_t version = get_u32(in, path);
    if (version != kVersion)
        throw FormatError("unsupported version " + std::to_string(version) + " in " + path);
    const std::size_t n1 = get_u32(in, path), n2 = get_u32(in, path);
    const double h1 = get_f64(in, path), h2 = get_f64(in, path);
    Grid2Spec spec;
    try {
        spec = Grid2Spec(n1, n2, h1, h2);
    } catch (const Error& e) {
        throw FormatError("bad grid header in " + path + ": " + e.what());
    }
    std::vector<Quaternion> samples(spec.samples());
    read_payload(in, path, &samples[0].r, samples.size() * 4);
    return {spec, std::move(samples)};
}

std::pair<Grid4Spec, std::vector<Multivector31>> read_mv4(const std::string& path) {
    std::ifstream in = open_in(path);
    check_magic(in, path, kMagicMv4);
    const std::uint32_t version = get_u32(in, path);
    if (version != kVersion)
        throw FormatError("unsupported version " + std::to_string(version) + " in " + path);
    std::array<std::size_t, 4> n{};
    std::array<double, 4> h{};
    for (auto& c : n) c = get_u32(in, path);
    for (auto& s : h) s = get_f64(in, path);
    Grid4Spec spec;
    try {
        spec = Grid4Spec(n, h);
    } catch (const Error& e) {
        throw FormatError("bad grid header in " + path + ": " + e.what());
    }
    std::vector<Multivector31> samples(spec.samples());
    read_payload(in, path, samples[0].c.data(), samples.size() * 16);
    return {spec, std::move(samples)};
}

}  // namespace

FieldKind probe_field_kind(const std::string& path) {
    std::ifstream in = open_in(path);
    char magic[4] = {};
    if (!in.read(magic, 4)) throw FormatError("truncated header in " + path);
    if (std::memcmp(magic, kMagicQ2, 4) == 0) return FieldKind::q2;
    if (std::memcmp(magic, kMagicMv4, 4) == 0) return FieldKind::mv4;
    throw FormatError("unrecognized magic in " + path);
}

void write_field(const std::string& path, const QField2& f) { write_q2(path, f.spec, f.samples); }
void write_field(const std::string& path, const MVField4& f) { write_mv4(path, f.spec, f.samples); }
void write_field(const std::string& path, const Spectrum2& f) { write_q2(path, f.spec, f.samples); }
void write_field(const std::string& path, const Spectrum4& f) { write_mv4(path, f.spec, f.samples); }

QField2 read_qfield2(const std::string& path) {
    auto [spec, samples] = read_q2(path);
    return QField2(spec, std::move(samples));
}

MVField4 read_mvfield4(const std::string& path) {
    auto [spec, samples] = read_mv4(path);
    return MVField4(spec, std::move(samples));
}

Spectrum2 read_spectrum2(const std::string& path) {
    auto [spec, samples] = read_q2(path);
    return Spectrum2(spec, std::move(samples));
}

Spectrum4 read_spectrum4(const std::string& path) {
    auto [spec, samples] = read_mv4(path);
    return Spectrum4(spec, std::move(samples));
}

namespace {

void append_double(std::string& line, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    line.push_back(',');
    line.append(buf, res.ptr);
}

}  // namespace

void write_csv(const std::string& path, const QField2& f) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "x1,x2,r,i,j,k\n";
    for (std::size_t n1 = 0; n1 < f.spec.n1; ++n1) {
        for (std::size_t n2 = 0; n2 < f.spec.n2; ++n2) {
            const Quaternion& q = f.at(n1, n2);
            char buf[32];
            auto res = std::to_chars(buf, buf + sizeof buf, f.spec.x1(n1));
            std::string line(buf, res.ptr);
            append_double(line, f.spec.x2(n2));
            append_double(line, q.r);
            append_double(line, q.i);
            append_double(line, q.j);
            append_double(line, q.k);
            out << line << '\n';
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_csv(const std::string& path, const MVField4& f) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "t,x,y,z";
    for (const auto& name : blades::kNames) out << ',' << name;
    out << '\n';
    for (std::size_t it = 0; it < f.spec.n[0]; ++it)
        for (std::size_t ix = 0; ix < f.spec.n[1]; ++ix)
            for (std::size_t iy = 0; iy < f.spec.n[2]; ++iy)
                for (std::size_t iz = 0; iz < f.spec.n[3]; ++iz) {
                    char buf[32];
                    auto res = std::to_chars(buf, buf + sizeof buf, f.spec.coord(0, it));
                    std::string line(buf, res.ptr);
                    append_double(line, f.spec.coord(1, ix));
                    append_double(line, f.spec.coord(2, iy));
                    append_double(line, f.spec.coord(3, iz));
                    for (double v : f.at(it, ix, iy, iz).c) append_double(line, v);
                    out << line << '\n';
                }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace hyperfourier
