#include "hyperfourier/generators.hpp"

#include <array>
#include <cmath>

#include "hyperfourier/fft.hpp"

namespace hyperfourier {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * kPi * u2);
}

QField2 random_qfield(const Grid2Spec& s, std::uint64_t seed) {
    Rng rng(seed);
    QField2 f(s);
    for (Quaternion& q : f.samples)
        q = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
             rng.uniform(-1.0, 1.0)};
    return f;
}

MVField4 random_mvfield(const Grid4Spec& s, std::uint64_t seed) {
    Rng rng(seed);
    MVField4 f(s);
    for (Multivector31& m : f.samples)
        for (double& v : m.c) v = rng.uniform(-1.0, 1.0);
    return f;
}

namespace {

// Random spectrum on the low modes, inverse transformed component-wise.
template <typename Field, typename SetComp>
void fill_band_limited(Field& f, std::span<const std::size_t> dims, std::size_t n_components,
                       Rng& rng, double band_fraction, SetComp&& set_comp,
                       auto&& mode_in_band) {
    const std::size_t total = f.samples.size();
    std::vector<cplx> plane(total);
    for (std::size_t comp = 0; comp < n_components; ++comp) {
        for (std::size_t m = 0; m < total; ++m)
            plane[m] = mode_in_band(m, band_fraction)
                           ? cplx(rng.normal(), rng.normal())
                           : cplx(0.0, 0.0);
        centered_dft_nd(plane, dims, true);
        for (std::size_t n = 0; n < total; ++n) set_comp(f.samples[n], comp, plane[n].real());
    }
}

}  // namespace

QField2 random_band_limited_qfield(const Grid2Spec& s, std::uint64_t seed, double band_fraction,
                                   bool envelope) {
    Rng rng(seed);
    QField2 f(s);
    const std::array<std::size_t, 2> dims{s.n1, s.n2};
    auto in_band = [&](std::size_t m, double frac) {
        const std::size_t m1 = m / s.n2, m2 = m % s.n2;
        const double lim1 = frac * double(s.n1) / 2.0, lim2 = frac * double(s.n2) / 2.0;
        return std::abs(double(m1) - double(s.n1) / 2.0) <= lim1 &&
               std::abs(double(m2) - double(s.n2) / 2.0) <= lim2;
    };
    auto set_comp = [](Quaternion& q, std::size_t comp, double v) {
        switch (comp) {
            case 0: q.r = v; break;
            case 1: q.i = v; break;
            case 2: q.j = v; break;
            default: q.k = v; break;
        }
    };
    fill_band_limited(f, dims, 4, rng, band_fraction, set_comp, in_band);

    if (envelope) {
        const double s1 = double(s.n1) / 2.0 * s.h1 / 8.0;
        const double s2 = double(s.n2) / 2.0 * s.h2 / 8.0;
        for (std::size_t n1 = 0; n1 < s.n1; ++n1) {
            const double x1 = s.x1(n1);
            for (std::size_t n2 = 0; n2 < s.n2; ++n2) {
                const double x2 = s.x2(n2);
                const double env =
                    std::exp(-x1 * x1 / (2.0 * s1 * s1) - x2 * x2 / (2.0 * s2 * s2));
                f.at(n1, n2) = f.at(n1, n2) * env;
            }
        }
    }
    double peak = 0.0;
    for (const Quaternion& q : f.samples) peak = std::max(peak, q.norm());
    if (peak > 0.0)
        for (Quaternion& q : f.samples) q = q * (1.0 / peak);
    return f;
}

MVField4 random_band_limited_mvfield(const Grid4Spec& s, std::uint64_t seed, double band_fraction,
                                     bool envelope) {
    Rng rng(seed);
    MVField4 f(s);
    auto in_band = [&](std::size_t m, double frac) {
        std::size_t rem = m;
        for (int axis = 3; axis >= 0; --axis) {
            const std::size_t count = s.n[std::size_t(axis)];
            const std::size_t idx = rem % count;
            rem /= count;
            if (std::abs(double(idx) - double(count) / 2.0) > frac * double(count) / 2.0)
                return false;
        }
        return true;
    };
    auto set_comp = [](Multivector31& m, std::size_t comp, double v) { m.c[comp] = v; };
    fill_band_limited(f, s.n, 16, rng, band_fraction, set_comp, in_band);

    if (envelope) {
        std::array<double, 4> sig{};
        for (int axis = 0; axis < 4; ++axis) {
            const std::size_t ax = std::size_t(axis);
            sig[ax] = double(s.n[ax]) / 2.0 * s.h[ax] / 7.0;
        }
        for (std::size_t it = 0; it < s.n[0]; ++it)
            for (std::size_t ix = 0; ix < s.n[1]; ++ix)
                for (std::size_t iy = 0; iy < s.n[2]; ++iy)
                    for (std::size_t iz = 0; iz < s.n[3]; ++iz) {
                        const double t = s.coord(0, it), x = s.coord(1, ix);
                        const double y = s.coord(2, iy), z = s.coord(3, iz);
                        const double env = std::exp(
                            -t * t / (2.0 * sig[0] * sig[0]) - x * x / (2.0 * sig[1] * sig[1]) -
                            y * y / (2.0 * sig[2] * sig[2]) - z * z / (2.0 * sig[3] * sig[3]));
                        f.at(it, ix, iy, iz) = f.at(it, ix, iy, iz) * env;
                    }
    }
    double peak = 0.0;
    for (const Multivector31& m : f.samples) peak = std::max(peak, m.norm());
    if (peak > 0.0)
        for (Multivector31& m : f.samples) m = m * (1.0 / peak);
    return f;
}

Direction2 random_direction2(Rng& rng) {
    return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

Direction4 random_direction4(Rng& rng) {
    return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
            rng.uniform(-1.0, 1.0)};
}

}  // namespace hyperfourier
