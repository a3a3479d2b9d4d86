#pragma once

#include <cstddef>

#include "hyperfourier/grid.hpp"

namespace hyperfourier {

/// Constant direction vector in R^2 (not required to be unit length).
struct Direction2 {
    double a1 = 0.0;
    double a2 = 0.0;

    constexpr bool operator==(const Direction2&) const = default;
    constexpr double dot(const Direction2& o) const { return a1 * o.a1 + a2 * o.a2; }
};

/// The reflection U1: negates the first component.
constexpr Direction2 reflect_u1(const Direction2& d) { return {-d.a1, d.a2}; }

inline constexpr std::size_t kQftBruteCap = 64 * 64;

/// Double-sided QFT by direct summation:
///   F[m] = h1 h2 sum_n e^{-i x1 w1} f[n] e^{-j x2 w2}.
/// O(N^2 M^2); throws GridTooLarge above max_samples.
Spectrum2 qft_brute(const QField2& f, std::size_t max_samples = kQftBruteCap);

/// Double-sided QFT via the ± split: two complex FFTs, with the omega_1 axis
/// of the plus part reflected by U1. Requires power-of-two axes.
Spectrum2 qft_fast(const QField2& f);

/// Inverse of qft_fast under the centered Riemann-sum convention:
///   f[n] = (2 pi)^{-2} dw1 dw2 sum_m e^{+i x1 w1} F[m] e^{+j x2 w2}.
QField2 qft_inverse(const Spectrum2& F);

/// Right-sided QFT, both kernel factors on the right:
///   F[m] = h1 h2 sum_n f[n] e^{-i w1 x1} e^{-j w2 x2}.
Spectrum2 qft_right_sided(const QField2& f);
Spectrum2 qft_right_sided_brute(const QField2& f, std::size_t max_samples = kQftBruteCap);

/// Spectrum re-indexed at U1 omega: G[m1][m2] = F[(n1 - m1) mod n1][m2].
Spectrum2 spectrum_reflect_u1(const Spectrum2& F);

/// Spectral directional derivative (b . grad) f, computed component-wise by
/// multiplying the centered spectrum with i (b . omega). Power-of-two axes.
QField2 directional_derivative(const QField2& f, const Direction2& b);

}  // namespace hyperfourier
