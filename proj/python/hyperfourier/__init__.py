"""Quaternion and Cl(3,1) spacetime Fourier transforms with directional
uncertainty verification."""

from ._core import (  # noqa: F401
    BLADE_NAMES,
    FormatError,
    Grid2Spec,
    Grid4Spec,
    GridNotPow2,
    GridTooLarge,
    InvalidAlpha,
    IoError,
    MVField4,
    Multivector31,
    NotInSubalgebra,
    QField2,
    Quaternion,
    Spectrum2,
    Spectrum4,
    __version__,
    component_up_check,
    directional_derivative,
    directional_second_moment,
    field_split,
    field_split4,
    mixed_scalar,
    qft_brute,
    qft_fast,
    qft_inverse,
    qft_right_sided,
    qft_right_sided_brute,
    quat_embed,
    quat_extract,
    random_band_limited_mvfield,
    random_band_limited_qfield,
    random_mvfield,
    random_qfield,
    read_mvfield4,
    read_qfield2,
    run_identity_suite,
    sample_gaussian2,
    sample_gaussian4,
    sft_brute,
    sft_fast,
    sft_inverse,
    spectral_second_moment,
    spectrum_reflect_u1,
    split_energies,
    split_energies4,
    verify_directional_up_2d,
    verify_directional_up_4d,
    wave_packets,
    write_mvfield4,
    write_qfield2,
)
