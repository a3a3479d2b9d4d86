#pragma once

#include <cstdint>
#include <random>

#include "hyperfourier/grid.hpp"
#include "hyperfourier/qft.hpp"
#include "hyperfourier/sft.hpp"

namespace hyperfourier {

/// Deterministic RNG: mt19937_64 with hand-rolled variates, so streams are
/// identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal();

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Field with iid uniform [-1, 1] coefficients.
QField2 random_qfield(const Grid2Spec& s, std::uint64_t seed);
MVField4 random_mvfield(const Grid4Spec& s, std::uint64_t seed);

/// Random band-limited field: random spectrum on the centered modes with
/// |omega_a| <= band_fraction * omega_max, inverse transformed, optionally
/// damped by a Gaussian envelope (sigma = half-extent / 7) so it also decays
/// at the grid boundary. Unit peak normalization.
QField2 random_band_limited_qfield(const Grid2Spec& s, std::uint64_t seed,
                                   double band_fraction = 0.25, bool envelope = true);
MVField4 random_band_limited_mvfield(const Grid4Spec& s, std::uint64_t seed,
                                     double band_fraction = 0.25, bool envelope = true);

Direction2 random_direction2(Rng& rng);
Direction4 random_direction4(Rng& rng);

}  // namespace hyperfourier
