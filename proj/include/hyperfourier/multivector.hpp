#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <string_view>

#include "hyperfourier/errors.hpp"
#include "hyperfourier/quaternion.hpp"

namespace hyperfourier {

// Canonical blade basis of Cl(3,1), metric -e_t^2 = e1^2 = e2^2 = e3^2 = 1.
// Storage order is grade-major, lexicographic within a grade, e_t < e1 < e2 < e3:
//
//   idx  blade          idx  blade             idx  blade
//    0   1               6   e_t e2            12   e_t e1 e3
//    1   e_t             7   e_t e3            13   e_t e2 e3
//    2   e1              8   e1 e2             14   e1 e2 e3   (= i3)
//    3   e2              9   e1 e3             15   e_t e1 e2 e3 (= i_st)
//    4   e3             10   e2 e3
//    5   e_t e1         11   e_t e1 e2
//
// Internally a blade is a 4-bit mask (bit0 = e_t, bit1 = e1, bit2 = e2, bit3 = e3).
namespace blades {

inline constexpr std::array<unsigned, 16> kIndexToMask = {
    0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0101, 0b1001,
    0b0110, 0b1010, 0b1100, 0b0111, 0b1011, 0b1101, 0b1110, 0b1111,
};

inline constexpr std::array<int, 16> make_mask_to_index() {
    std::array<int, 16> out{};
    for (int idx = 0; idx < 16; ++idx) out[kIndexToMask[std::size_t(idx)]] = idx;
    return out;
}
inline constexpr std::array<int, 16> kMaskToIndex = make_mask_to_index();

inline constexpr std::array<std::string_view, 16> kNames = {
    "1",     "et",    "e1",    "e2",    "e3",     "ete1",   "ete2",   "ete3",
    "e1e2",  "e1e3",  "e2e3",  "ete1e2", "ete1e3", "ete2e3", "e1e2e3", "ete1e2e3",
};

// Transpositions needed to merge the ascending generator lists of a and b.
inline constexpr int reorder_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
    return (swaps & 1) ? -1 : 1;
}

// Product of canonical blades: result mask is a^b, sign combines the
// reordering parity with the metric (only e_t squares to -1).
inline constexpr int product_sign(unsigned a, unsigned b) {
    int sign = reorder_sign(a, b);
    if ((a & b) & 1u) sign = -sign;
    return sign;
}

struct MulTables {
    std::array<std::array<int, 16>, 16> index{};
    std::array<std::array<double, 16>, 16> sign{};
};

inline constexpr MulTables make_mul_tables() {
    MulTables t{};
    for (int ia = 0; ia < 16; ++ia) {
        for (int ib = 0; ib < 16; ++ib) {
            const unsigned a = kIndexToMask[std::size_t(ia)];
            const unsigned b = kIndexToMask[std::size_t(ib)];
            t.index[std::size_t(ia)][std::size_t(ib)] = kMaskToIndex[a ^ b];
            t.sign[std::size_t(ia)][std::size_t(ib)] = double(product_sign(a, b));
        }
    }
    return t;
}
inline constexpr MulTables kMul = make_mul_tables();

inline constexpr int kScalar = 0;
inline constexpr int kEt = 1;
inline constexpr int kE1 = 2;
inline constexpr int kE2 = 3;
inline constexpr int kE3 = 4;
inline constexpr int kI3 = 14;
inline constexpr int kIst = 15;

}  // namespace blades

/// Element of the spacetime algebra Cl(3,1), 16 real coefficients over the
/// canonical blade basis above.
struct Multivector31 {
    std::array<double, 16> c{};

    constexpr Multivector31() = default;
    constexpr explicit Multivector31(double scalar) { c[0] = scalar; }
    constexpr explicit Multivector31(const std::array<double, 16>& coeffs) : c(coeffs) {}

    static constexpr Multivector31 basis(int idx) {
        Multivector31 m;
        m.c[std::size_t(idx)] = 1.0;
        return m;
    }

    constexpr bool operator==(const Multivector31&) const = default;

    constexpr double& operator[](std::size_t idx) { return c[idx]; }
    constexpr double operator[](std::size_t idx) const { return c[idx]; }

    constexpr Multivector31 operator+(const Multivector31& o) const {
        Multivector31 out;
        for (std::size_t n = 0; n < 16; ++n) out.c[n] = c[n] + o.c[n];
        return out;
    }
    constexpr Multivector31 operator-(const Multivector31& o) const {
        Multivector31 out;
        for (std::size_t n = 0; n < 16; ++n) out.c[n] = c[n] - o.c[n];
        return out;
    }
    constexpr Multivector31 operator-() const {
        Multivector31 out;
        for (std::size_t n = 0; n < 16; ++n) out.c[n] = -c[n];
        return out;
    }
    constexpr Multivector31& operator+=(const Multivector31& o) {
        for (std::size_t n = 0; n < 16; ++n) c[n] += o.c[n];
        return *this;
    }
    constexpr Multivector31 operator*(double s) const {
        Multivector31 out;
        for (std::size_t n = 0; n < 16; ++n) out.c[n] = c[n] * s;
        return out;
    }
    friend constexpr Multivector31 operator*(double s, const Multivector31& m) { return m * s; }

    // Geometric product from the blade sign table.
    constexpr Multivector31 operator*(const Multivector31& o) const {
        Multivector31 out;
        for (std::size_t a = 0; a < 16; ++a) {
            if (c[a] == 0.0) continue;
            for (std::size_t b = 0; b < 16; ++b) {
                out.c[std::size_t(blades::kMul.index[a][b])] +=
                    blades::kMul.sign[a][b] * c[a] * o.c[b];
            }
        }
        return out;
    }

    // Coefficient-Euclidean norm; coincides with the quaternion norm on the
    // volume-time subalgebra.
    constexpr double norm_sq() const {
        double s = 0.0;
        for (double v : c) s += v * v;
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline constexpr Multivector31 mv_one = Multivector31::basis(blades::kScalar);
inline constexpr Multivector31 mv_et = Multivector31::basis(blades::kEt);
inline constexpr Multivector31 mv_i3 = Multivector31::basis(blades::kI3);
inline constexpr Multivector31 mv_ist = Multivector31::basis(blades::kIst);

/// Volume-time embedding {1, i, j, k} -> {1, e_t, i3, i_st}; an algebra
/// homomorphism onto the subalgebra spanned by those blades.
constexpr Multivector31 quat_embed(const Quaternion& q) {
    Multivector31 m;
    m.c[std::size_t(blades::kScalar)] = q.r;
    m.c[std::size_t(blades::kEt)] = q.i;
    m.c[std::size_t(blades::kI3)] = q.j;
    m.c[std::size_t(blades::kIst)] = q.k;
    return m;
}

inline constexpr double kSubalgebraTol = 1e-12;

/// Inverse of quat_embed; requires M supported on {1, e_t, i3, i_st}.
inline Quaternion quat_extract(const Multivector31& m, double tol = kSubalgebraTol) {
    for (std::size_t idx = 0; idx < 16; ++idx) {
        const int b = int(idx);
        if (b == blades::kScalar || b == blades::kEt || b == blades::kI3 || b == blades::kIst)
            continue;
        const double v = m.c[idx] < 0.0 ? -m.c[idx] : m.c[idx];
        if (v >= tol)
            throw NotInSubalgebra("multivector has support outside span{1, e_t, i3, i_st}");
    }
    return {m.c[std::size_t(blades::kScalar)], m.c[std::size_t(blades::kEt)],
            m.c[std::size_t(blades::kI3)], m.c[std::size_t(blades::kIst)]};
}

/// The spacetime split f = f_minus + f_plus, f_± = (f ± e_t f i3)/2.
struct STSplitPair {
    Multivector31 minus;
    Multivector31 plus;
};

// e_t M i3 permutes and flips coefficients only, so it is exact.
constexpr Multivector31 sandwich_et_i3(const Multivector31& m) {
    return mv_et * m * mv_i3;
}

constexpr STSplitPair st_split(const Multivector31& m) {
    const Multivector31 t = sandwich_et_i3(m);
    return {(m - t) * 0.5, (m + t) * 0.5};
}

}  // namespace hyperfourier
