#pragma once

#include <cmath>
#include <utility>

namespace hyperfourier {

/// Quaternion q = r + i q_i + j q_j + k q_k with ij = -ji = k and
/// i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
    double r = 0.0;
    double i = 0.0;
    double j = 0.0;
    double k = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double r_, double i_, double j_, double k_)
        : r(r_), i(i_), j(j_), k(k_) {}
    constexpr explicit Quaternion(double real) : r(real) {}

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {r + o.r, i + o.i, j + o.j, k + o.k};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {r - o.r, i - o.i, j - o.j, k - o.k};
    }
    constexpr Quaternion operator-() const { return {-r, -i, -j, -k}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        r += o.r; i += o.i; j += o.j; k += o.k;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        r -= o.r; i -= o.i; j -= o.j; k -= o.k;
        return *this;
    }

    // Hamilton product.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {r * o.r - i * o.i - j * o.j - k * o.k,
                r * o.i + i * o.r + j * o.k - k * o.j,
                r * o.j - i * o.k + j * o.r + k * o.i,
                r * o.k + i * o.j - j * o.i + k * o.r};
    }

    constexpr Quaternion operator*(double s) const { return {r * s, i * s, j * s, k * s}; }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

    constexpr Quaternion conj() const { return {r, -i, -j, -k}; }

    constexpr double norm_sq() const { return r * r + i * i + j * j + k * k; }
    double norm() const { return std::sqrt(norm_sq()); }

    // Sc(q) = q_r = (q + conj(q)) / 2.
    constexpr double scalar_part() const { return r; }
};

inline constexpr Quaternion kQuatOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kQuatI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kQuatJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kQuatK{0.0, 0.0, 0.0, 1.0};

/// The two halves of the ± split q = q_minus + q_plus, q_± = (q ± iqj)/2.
struct SplitPair {
    Quaternion minus;
    Quaternion plus;
};

// i q j is a pure sign/permutation of the components, so it is exact.
constexpr Quaternion sandwich_iqj(const Quaternion& q) {
    return {q.k, -q.j, -q.i, q.r};
}

constexpr SplitPair quat_split(const Quaternion& q) {
    const Quaternion t = sandwich_iqj(q);
    return {(q - t) * 0.5, (q + t) * 0.5};
}

/// Sc(p conj(q)) — the Euclidean inner product of the coefficient vectors.
constexpr double sc_inner(const Quaternion& p, const Quaternion& q) {
    return p.r * q.r + p.i * q.i + p.j * q.j + p.k * q.k;
}

/// (Sc(p_+ conj(q_-)), Sc(p_- conj(q_+))); both vanish for all p, q.
inline std::pair<double, double> mixed_scalar(const Quaternion& p, const Quaternion& q) {
    const SplitPair ps = quat_split(p);
    const SplitPair qs = quat_split(q);
    return {sc_inner(ps.plus, qs.minus), sc_inner(ps.minus, qs.plus)};
}

}  // namespace hyperfourier
