#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "hyperfourier/errors.hpp"
#include "hyperfourier/multivector.hpp"
#include "hyperfourier/quaternion.hpp"

namespace hyperfourier {

inline constexpr double kPi = std::numbers::pi;

/// Centered uniform 2D grid: node x_a[n] = (n - n_a/2) h_a and frequency node
/// w_a[m] = 2 pi (m - n_a/2) / (n_a h_a). The node at index n_a/2 is exactly 0.
struct Grid2Spec {
    std::size_t n1 = 0, n2 = 0;
    double h1 = 0.0, h2 = 0.0;

    Grid2Spec() = default;
    Grid2Spec(std::size_t n1_, std::size_t n2_, double h1_, double h2_);

    double x1(std::size_t n) const { return (double(n) - double(n1) / 2.0) * h1; }
    double x2(std::size_t n) const { return (double(n) - double(n2) / 2.0) * h2; }
    double delta_omega1() const { return 2.0 * kPi / (double(n1) * h1); }
    double delta_omega2() const { return 2.0 * kPi / (double(n2) * h2); }
    double omega1(std::size_t m) const { return delta_omega1() * (double(m) - double(n1) / 2.0); }
    double omega2(std::size_t m) const { return delta_omega2() * (double(m) - double(n2) / 2.0); }

    std::size_t samples() const { return n1 * n2; }
    double cell_area() const { return h1 * h2; }
    double cell_area_omega() const { return delta_omega1() * delta_omega2(); }

    bool operator==(const Grid2Spec&) const = default;
};

/// Quaternion-valued samples on a centered 2D grid, row-major (axis 1 slow).
struct QField2 {
    Grid2Spec spec;
    std::vector<Quaternion> samples;

    QField2() = default;
    explicit QField2(const Grid2Spec& s) : spec(s), samples(s.samples()) {}
    QField2(const Grid2Spec& s, std::vector<Quaternion> values);

    std::size_t idx(std::size_t n1, std::size_t n2) const { return n1 * spec.n2 + n2; }
    Quaternion& at(std::size_t n1, std::size_t n2) { return samples[idx(n1, n2)]; }
    const Quaternion& at(std::size_t n1, std::size_t n2) const { return samples[idx(n1, n2)]; }
};

/// Quaternion spectrum on the frequency side of the generating grid.
struct Spectrum2 {
    Grid2Spec spec;  // spatial spec of the generating grid; frequency nodes via omega()
    std::vector<Quaternion> samples;

    Spectrum2() = default;
    explicit Spectrum2(const Grid2Spec& s) : spec(s), samples(s.samples()) {}
    Spectrum2(const Grid2Spec& s, std::vector<Quaternion> values);

    std::size_t idx(std::size_t m1, std::size_t m2) const { return m1 * spec.n2 + m2; }
    Quaternion& at(std::size_t m1, std::size_t m2) { return samples[idx(m1, m2)]; }
    const Quaternion& at(std::size_t m1, std::size_t m2) const { return samples[idx(m1, m2)]; }
};

/// Centered uniform 4D grid over axes (t, x, y, z).
struct Grid4Spec {
    std::array<std::size_t, 4> n{};  // n_t, n_x, n_y, n_z
    std::array<double, 4> h{};       // spacings

    Grid4Spec() = default;
    Grid4Spec(std::array<std::size_t, 4> counts, std::array<double, 4> spacings);

    double coord(int axis, std::size_t idx) const {
        return (double(idx) - double(n[std::size_t(axis)]) / 2.0) * h[std::size_t(axis)];
    }
    double delta_omega(int axis) const {
        return 2.0 * kPi / (double(n[std::size_t(axis)]) * h[std::size_t(axis)]);
    }
    double omega(int axis, std::size_t idx) const {
        return delta_omega(axis) * (double(idx) - double(n[std::size_t(axis)]) / 2.0);
    }

    std::size_t samples() const { return n[0] * n[1] * n[2] * n[3]; }
    double cell_volume() const { return h[0] * h[1] * h[2] * h[3]; }
    double cell_volume_omega() const {
        return delta_omega(0) * delta_omega(1) * delta_omega(2) * delta_omega(3);
    }

    bool operator==(const Grid4Spec&) const = default;
};

/// Cl(3,1)-valued samples on a centered 4D grid, row-major (t slowest).
struct MVField4 {
    Grid4Spec spec;
    std::vector<Multivector31> samples;

    MVField4() = default;
    explicit MVField4(const Grid4Spec& s) : spec(s), samples(s.samples()) {}
    MVField4(const Grid4Spec& s, std::vector<Multivector31> values);

    std::size_t idx(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) const {
        return ((it * spec.n[1] + ix) * spec.n[2] + iy) * spec.n[3] + iz;
    }
    Multivector31& at(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
        return samples[idx(it, ix, iy, iz)];
    }
    const Multivector31& at(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) const {
        return samples[idx(it, ix, iy, iz)];
    }
};

struct Spectrum4 {
    Grid4Spec spec;
    std::vector<Multivector31> samples;

    Spectrum4() = default;
    explicit Spectrum4(const Grid4Spec& s) : spec(s), samples(s.samples()) {}
    Spectrum4(const Grid4Spec& s, std::vector<Multivector31> values);

    std::size_t idx(std::size_t mt, std::size_t mx, std::size_t my, std::size_t mz) const {
        return ((mt * spec.n[1] + mx) * spec.n[2] + my) * spec.n[3] + mz;
    }
    Multivector31& at(std::size_t mt, std::size_t mx, std::size_t my, std::size_t mz) {
        return samples[idx(mt, mx, my, mz)];
    }
};

/// Separable Gaussian c0 exp(-alpha1 x1^2 - alpha2 x2^2).
struct Gaussian2Spec {
    Quaternion c0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

/// Separable Gaussian c0 exp(-alpha_t t^2 - alpha_x x^2 - alpha_y y^2 - alpha_z z^2).
struct Gaussian4Spec {
    Multivector31 c0;
    std::array<double, 4> alpha{};  // t, x, y, z
};

QField2 sample_gaussian2(const Gaussian2Spec& g, const Grid2Spec& s);
MVField4 sample_gaussian4(const Gaussian4Spec& g, const Grid4Spec& s);

// Half-extent per axis must cover 6 / sqrt(2 min alpha) for negligible truncation.
bool gaussian_coverage_ok(const Gaussian2Spec& g, const Grid2Spec& s);
bool gaussian_coverage_ok(const Gaussian4Spec& g, const Grid4Spec& s);

/// Pointwise ± split of a field; minus + plus reconstructs f.
struct QFieldSplit {
    QField2 minus;
    QField2 plus;
};
QFieldSplit field_split(const QField2& f);

struct MVFieldSplit {
    MVField4 minus;
    MVField4 plus;
};
MVFieldSplit field_split4(const MVField4& f);

// max |f| over boundary nodes divided by max |f| overall (1 for empty fields).
double boundary_decay(const QField2& f);
double boundary_decay(const MVField4& f);

}  // namespace hyperfourier
