#include "hyperfourier/sft.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hyperfourier/fft.hpp"

namespace hyperfourier {

namespace {

void require_pow2(const Grid4Spec& s) {
    for (std::size_t c : s.n)
        if (!is_pow2(c))
            throw GridNotPow2("fast SFT requires power-of-two axes, got count " +
                              std::to_string(c));
}

// Coefficient pairing under right-multiplication by i3: blade[anchor] i3 =
// sign * blade[partner]. Right-multiplying by e^{-i3 theta} is then complex
// multiplication of (m_anchor + i sign m_partner) by e^{-i theta}.
struct PlanePair {
    int anchor;
    int partner;
    double sign;
};

std::array<PlanePair, 8> make_plane_pairs() {
    std::array<PlanePair, 8> pairs{};
    std::size_t count = 0;
    for (int idx = 0; idx < 16; ++idx) {
        const unsigned mask = blades::kIndexToMask[std::size_t(idx)];
        const unsigned pmask = mask ^ blades::kIndexToMask[blades::kI3];
        const int partner = blades::kMaskToIndex[pmask];
        if (idx < partner) {
            const double sign =
                double(blades::product_sign(mask, blades::kIndexToMask[blades::kI3]));
            pairs[count++] = {idx, partner, sign};
        }
    }
    return pairs;
}

const std::array<PlanePair, 8>& plane_pairs() {
    static const std::array<PlanePair, 8> pairs = make_plane_pairs();
    return pairs;
}

// One split part transforms by the right phase alone; the + part needs the
// omega_t axis reflected because its kernel carries e^{+i3 t w_t}.
Spectrum4 part_transform(const MVField4& part, bool flip_time, bool inverse) {
    const Grid4Spec& g = part.spec;
    const std::size_t total = g.samples();
    const std::array<std::size_t, 4> dims = g.n;
    const double scale = inverse
                             ? g.cell_volume_omega() / ((2.0 * kPi) * (2.0 * kPi) * (2.0 * kPi) *
                                                        (2.0 * kPi))
                             : g.cell_volume();

    Spectrum4 out(g);
    std::vector<cplx> plane(total);
    for (const PlanePair& p : plane_pairs()) {
        for (std::size_t n = 0; n < total; ++n) {
            const auto& c = part.samples[n].c;
            plane[n] = {c[std::size_t(p.anchor)], p.sign * c[std::size_t(p.partner)]};
        }
        if (inverse && flip_time) flip_axis(plane, dims, 0);
        centered_dft_nd(plane, dims, inverse);
        if (!inverse && flip_time) flip_axis(plane, dims, 0);
        for (std::size_t n = 0; n < total; ++n) {
            auto& c = out.samples[n].c;
            c[std::size_t(p.anchor)] = scale * plane[n].real();
            c[std::size_t(p.partner)] = scale * p.sign * plane[n].imag();
        }
    }
    return out;
}

}  // namespace

Spectrum4 sft_brute(const MVField4& f, std::size_t max_samples) {
    if (f.spec.samples() > max_samples)
        throw GridTooLarge("sft_brute: " + std::to_string(f.spec.samples()) +
                           " samples exceed the cap of " + std::to_string(max_samples));
    const Grid4Spec& g = f.spec;
    std::vector<Multivector31> data = f.samples;

    for (int axis = 0; axis < 4; ++axis) {
        const std::size_t len = g.n[std::size_t(axis)];
        std::size_t stride = 1;
        for (int d = axis + 1; d < 4; ++d) stride *= g.n[std::size_t(d)];
        const std::size_t block = stride * len;

        std::vector<Multivector31> line(len), res(len);
        for (std::size_t base = 0; base < data.size(); base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t q = 0; q < len; ++q) line[q] = data[base + off + q * stride];
                for (std::size_t m = 0; m < len; ++m) {
                    Multivector31 acc;
                    const double w = g.omega(axis, m);
                    for (std::size_t n = 0; n < len; ++n) {
                        const double th = g.coord(axis, n) * w;
                        const double co = std::cos(th), si = std::sin(th);
                        if (axis == 0)
                            acc += line[n] * co - (mv_et * line[n]) * si;
                        else
                            acc += line[n] * co - (line[n] * mv_i3) * si;
                    }
                    res[m] = acc;
                }
                for (std::size_t q = 0; q < len; ++q) data[base + off + q * stride] = res[q];
            }
        }
    }

    const double vol = g.cell_volume();
    Spectrum4 F(g);
    for (std::size_t n = 0; n < data.size(); ++n) F.samples[n] = data[n] * vol;
    return F;
}

WavePackets wave_packets(const MVField4& f) {
    require_pow2(f.spec);
    const MVFieldSplit parts = field_split4(f);
    return {part_transform(parts.plus, /*flip_time=*/true, /*inverse=*/false),
            part_transform(parts.minus, /*flip_time=*/false, /*inverse=*/false)};
}

Spectrum4 sft_fast(const MVField4& f) {
    WavePackets p = wave_packets(f);
    Spectrum4 F(f.spec);
    for (std::size_t n = 0; n < F.samples.size(); ++n)
        F.samples[n] = p.plus.samples[n] + p.minus.samples[n];
    return F;
}

MVField4 sft_inverse(const Spectrum4& F) {
    require_pow2(F.spec);
    // The packet split survives the transform, so the spectrum splits the
    // same way and each part inverts along its own kernel.
    MVField4 minus_part(F.spec), plus_part(F.spec);
    for (std::size_t n = 0; n < F.samples.size(); ++n) {
        const STSplitPair sp = st_split(F.samples[n]);
        minus_part.samples[n] = sp.minus;
        plus_part.samples[n] = sp.plus;
    }
    const Spectrum4 im = part_transform(minus_part, /*flip_time=*/false, /*inverse=*/true);
    const Spectrum4 ip = part_transform(plus_part, /*flip_time=*/true, /*inverse=*/true);

    MVField4 f(F.spec);
    for (std::size_t n = 0; n < f.samples.size(); ++n)
        f.samples[n] = im.samples[n] + ip.samples[n];
    return f;
}

Spectrum4 spectrum_reflect_ut(const Spectrum4& F) {
    const Grid4Spec& g = F.spec;
    Spectrum4 out(g);
    for (std::size_t mt = 0; mt < g.n[0]; ++mt) {
        const std::size_t src = (g.n[0] - mt) % g.n[0];
        for (std::size_t mx = 0; mx < g.n[1]; ++mx)
            for (std::size_t my = 0; my < g.n[2]; ++my)
                for (std::size_t mz = 0; mz < g.n[3]; ++mz)
                    out.at(mt, mx, my, mz) = F.samples[F.idx(src, mx, my, mz)];
    }
    return out;
}

}  // namespace hyperfourier
