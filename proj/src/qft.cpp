#include "hyperfourier/qft.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hyperfourier/fft.hpp"

namespace hyperfourier {

namespace {

void require_pow2(const Grid2Spec& s) {
    if (!is_pow2(s.n1) || !is_pow2(s.n2))
        throw GridNotPow2("fast transform requires power-of-two axes, got " +
                          std::to_string(s.n1) + "x" + std::to_string(s.n2));
}

void require_cap(const Grid2Spec& s, std::size_t max_samples, const char* what) {
    if (s.samples() > max_samples)
        throw GridTooLarge(std::string(what) + ": " + std::to_string(s.samples()) +
                           " samples exceed the cap of " + std::to_string(max_samples));
}

// Unit phase tables e^{-i theta} per axis pair (node, frequency index).
struct PhaseTable {
    std::vector<double> c, s;  // n * m entries
    std::size_t m_count;
    double cos_at(std::size_t n, std::size_t m) const { return c[n * m_count + m]; }
    double sin_at(std::size_t n, std::size_t m) const { return s[n * m_count + m]; }
};

PhaseTable make_phase_table(std::size_t count, auto x_of, auto w_of) {
    PhaseTable t{std::vector<double>(count * count), std::vector<double>(count * count), count};
    for (std::size_t n = 0; n < count; ++n) {
        const double x = x_of(n);
        for (std::size_t m = 0; m < count; ++m) {
            const double th = x * w_of(m);
            t.c[n * count + m] = std::cos(th);
            t.s[n * count + m] = std::sin(th);
        }
    }
    return t;
}

// Complex-plane encodings of the split parts; c_pm(q_pm) == c_pm(q), so the
// encoding can be read off the original field.
cplx encode_minus(const Quaternion& q) { return {q.r - q.k, q.j + q.i}; }
cplx encode_plus(const Quaternion& q) { return {q.r + q.k, q.j - q.i}; }
// (1 -+ k)/2 (Re + j Im), expanded over {1, i, j, k}.
Quaternion decode_minus(const cplx& c) {
    return {0.5 * c.real(), 0.5 * c.imag(), 0.5 * c.imag(), -0.5 * c.real()};
}
Quaternion decode_plus(const cplx& c) {
    return {0.5 * c.real(), -0.5 * c.imag(), 0.5 * c.imag(), 0.5 * c.real()};
}

}  // namespace

Spectrum2 qft_brute(const QField2& f, std::size_t max_samples) {
    require_cap(f.spec, max_samples, "qft_brute");
    const Grid2Spec& g = f.spec;
    const PhaseTable t1 = make_phase_table(
        g.n1, [&](std::size_t n) { return g.x1(n); }, [&](std::size_t m) { return g.omega1(m); });
    const PhaseTable t2 = make_phase_table(
        g.n2, [&](std::size_t n) { return g.x2(n); }, [&](std::size_t m) { return g.omega2(m); });

    Spectrum2 F(g);
    const double area = g.cell_area();
    for (std::size_t m1 = 0; m1 < g.n1; ++m1) {
        for (std::size_t m2 = 0; m2 < g.n2; ++m2) {
            Quaternion acc;
            for (std::size_t n1 = 0; n1 < g.n1; ++n1) {
                const Quaternion left{t1.cos_at(n1, m1), -t1.sin_at(n1, m1), 0.0, 0.0};
                for (std::size_t n2 = 0; n2 < g.n2; ++n2) {
                    const Quaternion right{t2.cos_at(n2, m2), 0.0, -t2.sin_at(n2, m2), 0.0};
                    acc += left * f.at(n1, n2) * right;
                }
            }
            F.at(m1, m2) = acc * area;
        }
    }
    return F;
}

Spectrum2 qft_fast(const QField2& f) {
    require_pow2(f.spec);
    const Grid2Spec& g = f.spec;
    const std::array<std::size_t, 2> dims{g.n1, g.n2};
    const std::size_t total = g.samples();
    const double area = g.cell_area();

    std::vector<cplx> minus_plane(total), plus_plane(total);
    for (std::size_t n = 0; n < total; ++n) {
        minus_plane[n] = encode_minus(f.samples[n]);
        plus_plane[n] = encode_plus(f.samples[n]);
    }
    centered_dft_nd(minus_plane, dims, false);
    centered_dft_nd(plus_plane, dims, false);
    // The plus part transforms against e^{-j x.(U1 w)}: evaluate at -w1.
    flip_axis(plus_plane, dims, 0);

    Spectrum2 F(g);
    for (std::size_t n = 0; n < total; ++n)
        F.samples[n] = (decode_minus(minus_plane[n]) + decode_plus(plus_plane[n])) * area;
    return F;
}

QField2 qft_inverse(const Spectrum2& F) {
    require_pow2(F.spec);
    const Grid2Spec& g = F.spec;
    const std::array<std::size_t, 2> dims{g.n1, g.n2};
    const std::size_t total = g.samples();
    const double scale =
        g.cell_area_omega() / (2.0 * kPi) / (2.0 * kPi);

    std::vector<cplx> minus_plane(total), plus_plane(total);
    for (std::size_t n = 0; n < total; ++n) {
        minus_plane[n] = encode_minus(F.samples[n]);
        plus_plane[n] = encode_plus(F.samples[n]);
    }
    flip_axis(plus_plane, dims, 0);
    centered_dft_nd(minus_plane, dims, true);
    centered_dft_nd(plus_plane, dims, true);

    QField2 f(g);
    for (std::size_t n = 0; n < total; ++n)
        f.samples[n] = (decode_minus(minus_plane[n]) + decode_plus(plus_plane[n])) * scale;
    return f;
}

Spectrum2 qft_right_sided(const QField2& f) {
    require_pow2(f.spec);
    const Grid2Spec& g = f.spec;
    const std::array<std::size_t, 2> dims{g.n1, g.n2};
    const std::size_t total = g.samples();
    const double area = g.cell_area();

    // f = c1 + c2 j with c1 = f_r + f_i i, c2 = f_j + f_k i; the kernel mixes
    // the four sign variants of their transforms.
    std::vector<cplx> p1(total), p2(total);
    for (std::size_t n = 0; n < total; ++n) {
        p1[n] = {f.samples[n].r, f.samples[n].i};
        p2[n] = {f.samples[n].j, f.samples[n].k};
    }
    centered_dft_nd(p1, dims, false);
    centered_dft_nd(p2, dims, false);

    std::vector<cplx> p1_f2 = p1;  // C1(w1, -w2)
    flip_axis(p1_f2, dims, 1);
    std::vector<cplx> p2_f1 = p2;  // C2(-w1, w2)
    flip_axis(p2_f1, dims, 0);
    std::vector<cplx> p2_f12 = p2_f1;  // C2(-w1, -w2)
    flip_axis(p2_f12, dims, 1);

    const cplx half(0.5, 0.0);
    const cplx half_i(0.0, 0.5);
    Spectrum2 F(g);
    for (std::size_t n = 0; n < total; ++n) {
        const cplx a = half * (p1[n] + p1_f2[n]) + half_i * (p2_f1[n] - p2_f12[n]);
        const cplx b = half_i * (p1_f2[n] - p1[n]) + half * (p2_f1[n] + p2_f12[n]);
        F.samples[n] = Quaternion{a.real(), a.imag(), b.real(), b.imag()} * area;
    }
    return F;
}

Spectrum2 qft_right_sided_brute(const QField2& f, std::size_t max_samples) {
    require_cap(f.spec, max_samples, "qft_right_sided_brute");
    const Grid2Spec& g = f.spec;
    const PhaseTable t1 = make_phase_table(
        g.n1, [&](std::size_t n) { return g.x1(n); }, [&](std::size_t m) { return g.omega1(m); });
    const PhaseTable t2 = make_phase_table(
        g.n2, [&](std::size_t n) { return g.x2(n); }, [&](std::size_t m) { return g.omega2(m); });

    Spectrum2 F(g);
    const double area = g.cell_area();
    for (std::size_t m1 = 0; m1 < g.n1; ++m1) {
        for (std::size_t m2 = 0; m2 < g.n2; ++m2) {
            Quaternion acc;
            for (std::size_t n1 = 0; n1 < g.n1; ++n1) {
                const Quaternion ei{t1.cos_at(n1, m1), -t1.sin_at(n1, m1), 0.0, 0.0};
                for (std::size_t n2 = 0; n2 < g.n2; ++n2) {
                    const Quaternion ej{t2.cos_at(n2, m2), 0.0, -t2.sin_at(n2, m2), 0.0};
                    acc += f.at(n1, n2) * ei * ej;
                }
            }
            F.at(m1, m2) = acc * area;
        }
    }
    return F;
}

Spectrum2 spectrum_reflect_u1(const Spectrum2& F) {
    const Grid2Spec& g = F.spec;
    Spectrum2 out(g);
    for (std::size_t m1 = 0; m1 < g.n1; ++m1) {
        const std::size_t src = (g.n1 - m1) % g.n1;
        for (std::size_t m2 = 0; m2 < g.n2; ++m2) out.at(m1, m2) = F.at(src, m2);
    }
    return out;
}

QField2 directional_derivative(const QField2& f, const Direction2& b) {
    require_pow2(f.spec);
    const Grid2Spec& g = f.spec;
    const std::array<std::size_t, 2> dims{g.n1, g.n2};
    const std::size_t total = g.samples();
    const double inv_total = 1.0 / double(total);

    QField2 out(g);
    std::vector<cplx> plane(total);
    for (int comp = 0; comp < 4; ++comp) {
        auto get = [comp](const Quaternion& q) {
            switch (comp) {
                case 0: return q.r;
                case 1: return q.i;
                case 2: return q.j;
                default: return q.k;
            }
        };
        auto set = [comp](Quaternion& q, double v) {
            switch (comp) {
                case 0: q.r = v; break;
                case 1: q.i = v; break;
                case 2: q.j = v; break;
                default: q.k = v; break;
            }
        };
        for (std::size_t n = 0; n < total; ++n) plane[n] = {get(f.samples[n]), 0.0};
        centered_dft_nd(plane, dims, false);
        for (std::size_t m1 = 0; m1 < g.n1; ++m1) {
            const double w1 = g.omega1(m1);
            for (std::size_t m2 = 0; m2 < g.n2; ++m2) {
                const double bw = b.a1 * w1 + b.a2 * g.omega2(m2);
                plane[m1 * g.n2 + m2] *= cplx(0.0, bw);
            }
        }
        centered_dft_nd(plane, dims, true);
        for (std::size_t n = 0; n < total; ++n)
            set(out.samples[n], plane[n].real() * inv_total);
    }
    return out;
}

}  // namespace hyperfourier
