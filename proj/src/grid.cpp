#include "hyperfourier/grid.hpp"

#include <cmath>
#include <string>

namespace hyperfourier {

namespace {

void check_axis(std::size_t n, double h, const char* axis) {
    if (n < 8 || n % 2 != 0)
        throw Error(std::string("grid axis ") + axis + ": sample count must be even and >= 8");
    if (!(h > 0.0) || !std::isfinite(h))
        throw Error(std::string("grid axis ") + axis + ": spacing must be positive and finite");
}

}  // namespace

Grid2Spec::Grid2Spec(std::size_t n1_, std::size_t n2_, double h1_, double h2_)
    : n1(n1_), n2(n2_), h1(h1_), h2(h2_) {
    check_axis(n1, h1, "1");
    check_axis(n2, h2, "2");
}

QField2::QField2(const Grid2Spec& s, std::vector<Quaternion> values)
    : spec(s), samples(std::move(values)) {
    if (samples.size() != spec.samples())
        throw Error("QField2: sample count does not match grid spec");
}

Spectrum2::Spectrum2(const Grid2Spec& s, std::vector<Quaternion> values)
    : spec(s), samples(std::move(values)) {
    if (samples.size() != spec.samples())
        throw Error("Spectrum2: sample count does not match grid spec");
}

Grid4Spec::Grid4Spec(std::array<std::size_t, 4> counts, std::array<double, 4> spacings)
    : n(counts), h(spacings) {
    static const char* names[4] = {"t", "x", "y", "z"};
    for (int a = 0; a < 4; ++a) check_axis(n[std::size_t(a)], h[std::size_t(a)], names[a]);
}

MVField4::MVField4(const Grid4Spec& s, std::vector<Multivector31> values)
    : spec(s), samples(std::move(values)) {
    if (samples.size() != spec.samples())
        throw Error("MVField4: sample count does not match grid spec");
}

Spectrum4::Spectrum4(const Grid4Spec& s, std::vector<Multivector31> values)
    : spec(s), samples(std::move(values)) {
    if (samples.size() != spec.samples())
        throw Error("Spectrum4: sample count does not match grid spec");
}

QField2 sample_gaussian2(const Gaussian2Spec& g, const Grid2Spec& s) {
    if (!(g.alpha1 > 0.0) || !(g.alpha2 > 0.0))
        throw InvalidAlpha("gaussian decay rates must be positive");
    QField2 f(s);
    for (std::size_t n1 = 0; n1 < s.n1; ++n1) {
        const double x1 = s.x1(n1);
        const double e1 = -g.alpha1 * x1 * x1;
        for (std::size_t n2 = 0; n2 < s.n2; ++n2) {
            const double x2 = s.x2(n2);
            f.at(n1, n2) = g.c0 * std::exp(e1 - g.alpha2 * x2 * x2);
        }
    }
    return f;
}

MVField4 sample_gaussian4(const Gaussian4Spec& g, const Grid4Spec& s) {
    for (double a : g.alpha)
        if (!(a > 0.0)) throw InvalidAlpha("gaussian decay rates must be positive");
    MVField4 f(s);
    for (std::size_t it = 0; it < s.n[0]; ++it) {
        const double t = s.coord(0, it);
        const double et = -g.alpha[0] * t * t;
        for (std::size_t ix = 0; ix < s.n[1]; ++ix) {
            const double x = s.coord(1, ix);
            const double ex = et - g.alpha[1] * x * x;
            for (std::size_t iy = 0; iy < s.n[2]; ++iy) {
                const double y = s.coord(2, iy);
                const double ey = ex - g.alpha[2] * y * y;
                for (std::size_t iz = 0; iz < s.n[3]; ++iz) {
                    const double z = s.coord(3, iz);
                    f.at(it, ix, iy, iz) = g.c0 * std::exp(ey - g.alpha[3] * z * z);
                }
            }
        }
    }
    return f;
}

namespace {

double min_alpha2(const Gaussian2Spec& g) { return g.alpha1 < g.alpha2 ? g.alpha1 : g.alpha2; }

bool covers(double half_extent, double min_alpha) {
    return half_extent >= 6.0 / std::sqrt(2.0 * min_alpha);
}

}  // namespace

bool gaussian_coverage_ok(const Gaussian2Spec& g, const Grid2Spec& s) {
    const double need = min_alpha2(g);
    return covers(double(s.n1) / 2.0 * s.h1, need) && covers(double(s.n2) / 2.0 * s.h2, need);
}

bool gaussian_coverage_ok(const Gaussian4Spec& g, const Grid4Spec& s) {
    double need = g.alpha[0];
    for (double a : g.alpha) need = a < need ? a : need;
    for (int axis = 0; axis < 4; ++axis) {
        const std::size_t ax = std::size_t(axis);
        if (!covers(double(s.n[ax]) / 2.0 * s.h[ax], need)) return false;
    }
    return true;
}

QFieldSplit field_split(const QField2& f) {
    QFieldSplit out{QField2(f.spec), QField2(f.spec)};
    for (std::size_t n = 0; n < f.samples.size(); ++n) {
        const SplitPair sp = quat_split(f.samples[n]);
        out.minus.samples[n] = sp.minus;
        out.plus.samples[n] = sp.plus;
    }
    return out;
}

MVFieldSplit field_split4(const MVField4& f) {
    MVFieldSplit out{MVField4(f.spec), MVField4(f.spec)};
    for (std::size_t n = 0; n < f.samples.size(); ++n) {
        const STSplitPair sp = st_split(f.samples[n]);
        out.minus.samples[n] = sp.minus;
        out.plus.samples[n] = sp.plus;
    }
    return out;
}

double boundary_decay(const QField2& f) {
    double peak = 0.0, edge = 0.0;
    for (std::size_t n1 = 0; n1 < f.spec.n1; ++n1) {
        for (std::size_t n2 = 0; n2 < f.spec.n2; ++n2) {
            const double v = f.at(n1, n2).norm();
            peak = v > peak ? v : peak;
            if (n1 == 0 || n1 + 1 == f.spec.n1 || n2 == 0 || n2 + 1 == f.spec.n2)
                edge = v > edge ? v : edge;
        }
    }
    return peak == 0.0 ? 1.0 : edge / peak;
}

double boundary_decay(const MVField4& f) {
    double peak = 0.0, edge = 0.0;
    const auto& n = f.spec.n;
    for (std::size_t it = 0; it < n[0]; ++it)
        for (std::size_t ix = 0; ix < n[1]; ++ix)
            for (std::size_t iy = 0; iy < n[2]; ++iy)
                for (std::size_t iz = 0; iz < n[3]; ++iz) {
                    const double v = f.at(it, ix, iy, iz).norm();
                    peak = v > peak ? v : peak;
                    const bool b = it == 0 || it + 1 == n[0] || ix == 0 || ix + 1 == n[1] ||
                                   iy == 0 || iy + 1 == n[2] || iz == 0 || iz + 1 == n[3];
                    if (b) edge = v > edge ? v : edge;
                }
    return peak == 0.0 ? 1.0 : edge / peak;
}

}  // namespace hyperfourier
