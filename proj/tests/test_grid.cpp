#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "hyperfourier/field_io.hpp"
#include "hyperfourier/generators.hpp"
#include "hyperfourier/grid.hpp"

using namespace hyperfourier;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hf_grid_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("grid spec validation") {
    CHECK_THROWS_AS(Grid2Spec(4, 16, 0.5, 0.5), Error);
    CHECK_THROWS_AS(Grid2Spec(16, 9, 0.5, 0.5), Error);
    CHECK_THROWS_AS(Grid2Spec(16, 16, 0.0, 0.5), Error);
    CHECK_THROWS_AS(Grid2Spec(16, 16, 0.5, -1.0), Error);
    CHECK_THROWS_AS(Grid4Spec({8, 8, 8, 6}, {1, 1, 1, 1}), Error);
    CHECK_NOTHROW(Grid2Spec(8, 8, 0.5, 0.5));
}

TEST_CASE("node and frequency conventions") {
    const Grid2Spec g(16, 32, 0.25, 0.5);
    CHECK(g.x1(8) == 0.0);
    CHECK(g.x2(16) == 0.0);
    // symmetric pairing about zero
    for (std::size_t m = 1; m < g.n1; ++m) CHECK(g.x1(m) == -g.x1(g.n1 - m));
    // delta_omega * h * n == 2 pi, exact for power-of-two spacings
    CHECK(g.delta_omega1() * g.h1 * double(g.n1) == 2.0 * kPi);
    CHECK(g.delta_omega2() * g.h2 * double(g.n2) == 2.0 * kPi);
    CHECK(g.omega1(8) == 0.0);
    CHECK(g.omega1(9) == g.delta_omega1());

    const Grid4Spec g4({8, 8, 16, 8}, {0.5, 0.25, 0.5, 1.0});
    CHECK(g4.coord(2, 8) == 0.0);
    for (int axis = 0; axis < 4; ++axis)
        CHECK(g4.delta_omega(axis) * g4.h[std::size_t(axis)] * double(g4.n[std::size_t(axis)]) ==
              2.0 * kPi);
}

TEST_CASE("gaussian sampling") {
    const Grid2Spec g(128, 128, 0.125, 0.125);

    SUBCASE("center node value is exactly c0") {
        const QField2 f = sample_gaussian2({kQuatOne, 0.5, 0.5}, g);
        CHECK(f.at(64, 64) == kQuatOne);
    }

    SUBCASE("discrete energy matches the closed-form integral pi") {
        const QField2 f = sample_gaussian2({kQuatOne, 0.5, 0.5}, g);
        double e = 0.0;
        for (const Quaternion& q : f.samples) e += q.norm_sq();
        CHECK(e * g.cell_area() == doctest::Approx(kPi).epsilon(1e-6));
    }

    SUBCASE("k-valued amplitude stays k-valued") {
        const QField2 f = sample_gaussian2({kQuatK, 0.5, 0.25}, g);
        for (std::size_t n1 = 0; n1 < g.n1; n1 += 17) {
            for (std::size_t n2 = 0; n2 < g.n2; n2 += 13) {
                const Quaternion& q = f.at(n1, n2);
                CHECK(q.r == 0.0);
                CHECK(q.i == 0.0);
                CHECK(q.j == 0.0);
                const double x1 = g.x1(n1), x2 = g.x2(n2);
                CHECK(q.k == doctest::Approx(std::exp(-0.5 * x1 * x1 - 0.25 * x2 * x2))
                                 .epsilon(1e-14));
            }
        }
    }

    SUBCASE("nonpositive alpha is rejected") {
        CHECK_THROWS_AS((void)sample_gaussian2({kQuatOne, -0.5, 0.5}, g), InvalidAlpha);
        CHECK_THROWS_AS((void)sample_gaussian2({kQuatOne, 0.5, 0.0}, g), InvalidAlpha);
    }

    SUBCASE("coverage predicate") {
        // alpha = 1/2 needs half-extent >= 6; this grid spans +-8.
        CHECK(gaussian_coverage_ok({kQuatOne, 0.5, 0.5}, g));
        CHECK_FALSE(gaussian_coverage_ok({kQuatOne, 0.005, 0.5}, g));
        const Grid4Spec g4({16, 16, 16, 16}, {0.75, 0.75, 0.75, 0.75});
        CHECK(gaussian_coverage_ok({mv_one, {0.5, 0.5, 0.5, 0.5}}, g4));
        CHECK_FALSE(gaussian_coverage_ok({mv_one, {0.01, 0.5, 0.5, 0.5}}, g4));
    }
}

TEST_CASE("field split") {
    const Grid2Spec g(16, 16, 0.5, 0.5);

    SUBCASE("constant field splits into the idempotent-weighted halves") {
        QField2 f(g);
        for (Quaternion& q : f.samples) q = kQuatOne;
        const QFieldSplit parts = field_split(f);
        for (std::size_t n = 0; n < f.samples.size(); ++n) {
            CHECK(parts.plus.samples[n] == (kQuatOne + kQuatK) * 0.5);
            CHECK(parts.minus.samples[n] == (kQuatOne - kQuatK) * 0.5);
        }
    }

    SUBCASE("split commutes with the real envelope") {
        const Quaternion c0{1, 2, 3, 4};
        const QField2 f = sample_gaussian2({c0, 0.5, 0.5}, g);
        const QFieldSplit parts = field_split(f);
        const SplitPair c0s = quat_split(c0);
        for (std::size_t n1 = 0; n1 < g.n1; n1 += 3) {
            for (std::size_t n2 = 0; n2 < g.n2; n2 += 3) {
                const double x1 = g.x1(n1), x2 = g.x2(n2);
                const double env = std::exp(-0.5 * x1 * x1 - 0.5 * x2 * x2);
                CHECK((parts.plus.at(n1, n2) - c0s.plus * env).norm() <= 1e-15);
                CHECK((parts.minus.at(n1, n2) - c0s.minus * env).norm() <= 1e-15);
            }
        }
    }

    SUBCASE("reconstruction and pointwise modulus identity on random fields") {
        const QField2 f = random_qfield(g, 99);
        const QFieldSplit parts = field_split(f);
        for (std::size_t n = 0; n < f.samples.size(); ++n) {
            const Quaternion sum = parts.minus.samples[n] + parts.plus.samples[n];
            CHECK((sum - f.samples[n]).norm() <= 1e-15 * f.samples[n].norm());
            CHECK(std::abs(f.samples[n].norm_sq() - parts.minus.samples[n].norm_sq() -
                           parts.plus.samples[n].norm_sq()) <= 1e-12 * f.samples[n].norm_sq());
        }
    }

    SUBCASE("4D split reconstructs") {
        const Grid4Spec g4({8, 8, 8, 8}, {0.5, 0.5, 0.5, 0.5});
        const MVField4 f = random_mvfield(g4, 100);
        const MVFieldSplit parts = field_split4(f);
        for (std::size_t n = 0; n < f.samples.size(); ++n)
            CHECK((parts.minus.samples[n] + parts.plus.samples[n] - f.samples[n]).norm() <=
                  1e-15 * f.samples[n].norm());
    }
}

TEST_CASE("binary field files round trip bit-exactly") {
    TempDir tmp;

    SUBCASE("2D") {
        const Grid2Spec g(16, 16, 0.5, 0.25);
        const QField2 f = random_qfield(g, 1234);
        const std::string p1 = tmp.file("a.hqf");
        const std::string p2 = tmp.file("b.hqf");
        write_field(p1, f);
        const QField2 back = read_qfield2(p1);
        CHECK(back.spec == g);
        CHECK(back.samples == f.samples);
        write_field(p2, back);
        CHECK(slurp(p1) == slurp(p2));
        CHECK(probe_field_kind(p1) == FieldKind::q2);
    }

    SUBCASE("4D") {
        const Grid4Spec g({8, 8, 8, 8}, {0.5, 0.75, 0.5, 1.0});
        const MVField4 f = random_mvfield(g, 4321);
        const std::string p1 = tmp.file("a.hmf");
        const std::string p2 = tmp.file("b.hmf");
        write_field(p1, f);
        const MVField4 back = read_mvfield4(p1);
        CHECK(back.spec == g);
        CHECK(back.samples == f.samples);
        write_field(p2, back);
        CHECK(slurp(p1) == slurp(p2));
        CHECK(probe_field_kind(p1) == FieldKind::mv4);
    }
}

TEST_CASE("field file error paths") {
    TempDir tmp;
    const Grid2Spec g(16, 16, 0.5, 0.5);
    const QField2 f = random_qfield(g, 7);
    const std::string good = tmp.file("good.hqf");
    write_field(good, f);

    SUBCASE("missing file") {
        CHECK_THROWS_AS((void)read_qfield2(tmp.file("nope.hqf")), IoError);
    }

    SUBCASE("truncated payload") {
        std::string bytes = slurp(good);
        bytes.resize(bytes.size() - 13);
        const std::string bad = tmp.file("trunc.hqf");
        std::ofstream(bad, std::ios::binary) << bytes;
        CHECK_THROWS_AS((void)read_qfield2(bad), FormatError);
    }

    SUBCASE("trailing bytes contradict the header shape") {
        std::string bytes = slurp(good);
        bytes += std::string(8, '\0');
        const std::string bad = tmp.file("long.hqf");
        std::ofstream(bad, std::ios::binary) << bytes;
        CHECK_THROWS_AS((void)read_qfield2(bad), FormatError);
    }

    SUBCASE("bad magic") {
        std::string bytes = slurp(good);
        bytes[0] = 'X';
        const std::string bad = tmp.file("magic.hqf");
        std::ofstream(bad, std::ios::binary) << bytes;
        CHECK_THROWS_AS((void)read_qfield2(bad), FormatError);
        CHECK_THROWS_AS((void)probe_field_kind(bad), FormatError);
    }

    SUBCASE("wrong kind for the reader") {
        CHECK_THROWS_AS((void)read_mvfield4(good), FormatError);
    }

    SUBCASE("unsupported version") {
        std::string bytes = slurp(good);
        bytes[4] = 9;
        const std::string bad = tmp.file("ver.hqf");
        std::ofstream(bad, std::ios::binary) << bytes;
        CHECK_THROWS_AS((void)read_qfield2(bad), FormatError);
    }
}

TEST_CASE("csv export") {
    TempDir tmp;
    const Grid2Spec g(8, 8, 0.5, 0.5);
    const QField2 f = random_qfield(g, 3);
    const std::string path = tmp.file("f.csv");
    write_csv(path, f);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x1,x2,r,i,j,k");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == g.samples());
}

TEST_CASE("boundary decay") {
    const Grid2Spec g(64, 64, 0.25, 0.25);
    const QField2 gauss = sample_gaussian2({kQuatOne, 0.5, 0.5}, g);
    CHECK(boundary_decay(gauss) < 1e-10);
    QField2 flat(g);
    for (Quaternion& q : flat.samples) q = kQuatOne;
    CHECK(boundary_decay(flat) == 1.0);
}
