#pragma once

#include <cstddef>

#include "hyperfourier/grid.hpp"

namespace hyperfourier {

/// Constant spacetime vector a_t e_t + a1 e1 + a2 e2 + a3 e3.
struct Direction4 {
    double at = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    constexpr bool operator==(const Direction4&) const = default;
    constexpr double spatial_dot(const Direction4& o) const {
        return a1 * o.a1 + a2 * o.a2 + a3 * o.a3;
    }
};

/// Reflection of the time component (the 4D analogue of U1 for the + packet).
constexpr Direction4 reflect_ut(const Direction4& d) { return {-d.at, d.a1, d.a2, d.a3}; }

inline constexpr std::size_t kSftBruteCap = 16 * 16 * 16 * 16;

/// Spacetime Fourier transform by separable per-axis summation:
///   F[m] = dt dx dy dz sum_n e^{-e_t t w_t} f[n] e^{-i3 (x.w)}.
/// The t axis applies cos - e_t sin on the left, the spatial axes apply
/// cos - i3 sin on the right. Throws GridTooLarge above max_samples.
Spectrum4 sft_brute(const MVField4& f, std::size_t max_samples = kSftBruteCap);

/// SFT via the spacetime split: each part transforms by a single right phase
/// e^{-i3 theta}, computed as 8 complex 4D FFTs per part; the + part's
/// omega_t axis is reflected. Requires power-of-two axes.
Spectrum4 sft_fast(const MVField4& f);

/// The two terms of the split SFT: the right and left travelling multivector
/// wave packets. plus + minus == sft_fast(f).
struct WavePackets {
    Spectrum4 plus;
    Spectrum4 minus;
};
WavePackets wave_packets(const MVField4& f);

/// Inverse under the centered convention with (2 pi)^{-4} scaling.
MVField4 sft_inverse(const Spectrum4& F);

/// Spectrum re-indexed at negated omega_t (centered pairing, index 0 fixed).
Spectrum4 spectrum_reflect_ut(const Spectrum4& F);

}  // namespace hyperfourier
