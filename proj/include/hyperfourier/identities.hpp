#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperfourier {

/// One algebraic identity evaluated on seeded random inputs. residual is a
/// relative (scale-normalized) defect; pass <=> residual <= tolerance.
struct IdentityCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Runs the full property suite: quaternion split and mixed-product scalars,
/// Cl(3,1) product laws, the volume-time isomorphism, QFT/SFT linearity,
/// split additivity, Parseval, the vector-differential identities, the
/// proof-chain steps of the directional uncertainty bound, and wave-packet
/// reconstruction.
std::vector<IdentityCheck> run_identity_suite(std::uint64_t seed);

}  // namespace hyperfourier
