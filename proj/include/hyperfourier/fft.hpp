#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hyperfourier {

using cplx = std::complex<double>;

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place radix-2 transform, unnormalized: X[m] = sum_n x[n] e^{-+ 2pi i n m / N}
/// (forward uses the minus sign). Length must be a power of two.
void fft_radix2(std::span<cplx> a, bool inverse);

/// Centered-grid transform, unnormalized:
///   X[m] = sum_n x[n] e^{-+ 2pi i (n - N/2)(m - N/2) / N}.
void centered_dft_1d(std::span<cplx> a, bool inverse);

/// Separable centered transform over a row-major n-d array (last dim fastest).
void centered_dft_nd(std::span<cplx> data, std::span<const std::size_t> dims, bool inverse);

/// Reverses one frequency axis with the centered pairing m <-> (N - m) mod N
/// (index 0 fixed), i.e. evaluates the spectrum at the negated frequency.
void flip_axis(std::span<cplx> data, std::span<const std::size_t> dims, std::size_t axis);

}  // namespace hyperfourier
