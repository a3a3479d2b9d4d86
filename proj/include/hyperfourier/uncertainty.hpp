#pragma once

#include <string>
#include <vector>

#include "hyperfourier/grid.hpp"
#include "hyperfourier/qft.hpp"
#include "hyperfourier/sft.hpp"

namespace hyperfourier {

/// Discrete energies of a field and its split parts; f_total = f_minus + f_plus.
struct EnergyReport {
    double f_total = 0.0;
    double f_minus = 0.0;
    double f_plus = 0.0;
};

EnergyReport split_energies(const QField2& f);
EnergyReport split_energies(const MVField4& f);

/// h1 h2 sum (a.x)^2 |f|^2, a raw moment about the origin. With recenter the
/// directional mean of a.x is subtracted first.
double directional_second_moment(const QField2& f, const Direction2& a, bool recenter = false);
double spectral_second_moment(const Spectrum2& F, const Direction2& b, bool recenter = false);

// 4D moments weight by the scalar combinations (a_t t - a.x) and
// (b_t w_t - b.w) literally.
double directional_second_moment(const MVField4& f, const Direction4& a, bool recenter = false);
double spectral_second_moment(const Spectrum4& F, const Direction4& b, bool recenter = false);

/// (2 pi)^2/4 [ (a.b)^2 F_-^2 + (a.b')^2 F_+^2 ] with b' = U1 b.
double directional_bound_2d(const Direction2& a, const Direction2& b, const EnergyReport& e);

/// (2 pi)^4/4 [ (a_t b_t - a.b)^2 F_-^2 + (a_t b_t + a.b)^2 F_+^2 ]
/// (spatial dot products).
double directional_bound_4d(const Direction4& a, const Direction4& b, const EnergyReport& e);

inline constexpr double kDefaultSlack = 1e-6;

/// One directional uncertainty verification: lhs_product is the product of the
/// spatial and spectral second moments, rhs_bound the energy-weighted constant,
/// satisfied <=> lhs_product >= rhs_bound (1 - slack_tolerance).
struct UncertaintyReport {
    double lhs_product = 0.0;
    double rhs_bound = 0.0;
    double ratio = 0.0;  // lhs/rhs, +inf when rhs == 0
    std::vector<double> a, b, b_prime;
    EnergyReport energies;
    bool satisfied = false;
    double slack_tolerance = kDefaultSlack;
};

UncertaintyReport verify_directional_up_2d(const QField2& f, const Direction2& a,
                                           const Direction2& b, double slack = kDefaultSlack,
                                           bool recenter = false);

UncertaintyReport verify_directional_up_4d(const MVField4& f, const Direction4& a,
                                           const Direction4& b, double slack = kDefaultSlack,
                                           bool recenter = false);

/// Component-wise principle for the right-sided QFT along axis k (1 or 2):
///   int x_k^2 |f|^2  int w_k^2 |F_r f|^2  >=  (2 pi)^2/4 (int |f|^2)^2.
/// Equality holds exactly for separable Gaussians; check it with
/// equality_within(report, tol).
UncertaintyReport component_up_check(const QField2& f, int axis, double slack = kDefaultSlack);

/// ratio - 1 < tol (the equality flag for component_up_check).
bool equality_within(const UncertaintyReport& r, double tol);

std::string report_to_json(const UncertaintyReport& r, int indent = 2);
std::string report_csv_header(std::size_t direction_size);
std::string report_to_csv_row(const UncertaintyReport& r);

}  // namespace hyperfourier
