#pragma once

#include <stdexcept>

namespace hyperfourier {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// quat_extract on a multivector with support outside span{1, e_t, i3, i_st}.
struct NotInSubalgebra : Error { using Error::Error; };

// Brute-force transform requested on a grid above its runtime cap.
struct GridTooLarge : Error { using Error::Error; };

// Fast transform requested on a grid with a non power-of-two axis.
struct GridNotPow2 : Error { using Error::Error; };

// Gaussian generator called with a nonpositive decay rate.
struct InvalidAlpha : Error { using Error::Error; };

// Field file with bad magic, version, or shape.
struct FormatError : Error { using Error::Error; };

// Underlying I/O failure while reading or writing a field file.
struct IoError : Error { using Error::Error; };

}  // namespace hyperfourier
