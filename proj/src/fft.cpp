#include "hyperfourier/fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace hyperfourier {

void fft_radix2(std::span<cplx> a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;

    for (std::size_t i = 1, rev = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; rev & bit; bit >>= 1) rev ^= bit;
        rev |= bit;
        if (i < rev) std::swap(a[i], a[rev]);
    }

    // One table of N/2 roots keeps twiddle error at the sincos level.
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cplx> tw(n / 2);
    for (std::size_t t = 0; t < n / 2; ++t)
        tw[t] = std::polar(1.0, sign * 2.0 * std::numbers::pi * double(t) / double(n));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t step = n / len;
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t t = 0; t < half; ++t) {
                const cplx u = a[base + t];
                const cplx v = a[base + t + half] * tw[t * step];
                a[base + t] = u + v;
                a[base + t + half] = u - v;
            }
        }
    }
}

void centered_dft_1d(std::span<cplx> a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    // (n - N/2)(m - N/2) = nm - (n + m) N/2 + N^2/4: fold the linear terms into
    // (-1)^n pre- and (-1)^m post-scaling, the constant into (-1)^{N/2}.
    for (std::size_t t = 1; t < n; t += 2) a[t] = -a[t];
    fft_radix2(a, inverse);
    for (std::size_t t = 1; t < n; t += 2) a[t] = -a[t];
    if ((n / 2) % 2 != 0)
        for (auto& v : a) v = -v;
}

namespace {

template <typename LineFn>
void for_each_line(std::span<cplx> data, std::span<const std::size_t> dims, std::size_t axis,
                   LineFn&& fn) {
    std::size_t stride = 1;
    for (std::size_t d = axis + 1; d < dims.size(); ++d) stride *= dims[d];
    const std::size_t len = dims[axis];
    const std::size_t block = stride * len;
    std::vector<cplx> line(len);
    for (std::size_t base = 0; base < data.size(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t q = 0; q < len; ++q) line[q] = data[base + off + q * stride];
            fn(std::span<cplx>(line));
            for (std::size_t q = 0; q < len; ++q) data[base + off + q * stride] = line[q];
        }
    }
}

}  // namespace

void centered_dft_nd(std::span<cplx> data, std::span<const std::size_t> dims, bool inverse) {
    for (std::size_t axis = 0; axis < dims.size(); ++axis)
        for_each_line(data, dims, axis,
                      [inverse](std::span<cplx> line) { centered_dft_1d(line, inverse); });
}

void flip_axis(std::span<cplx> data, std::span<const std::size_t> dims, std::size_t axis) {
    for_each_line(data, dims, axis, [](std::span<cplx> line) {
        const std::size_t n = line.size();
        for (std::size_t m = 1; m <= (n - 1) / 2; ++m) std::swap(line[m], line[n - m]);
    });
}

}  // namespace hyperfourier
