#pragma once

#include <string>

#include "hyperfourier/grid.hpp"

namespace hyperfourier {

// Binary field format, little-endian:
//   magic   4 bytes, "HQF1" (2D quaternion) or "HMF4" (4D multivector)
//   version u32 (currently 1)
//   counts  u32 per axis (2 or 4)
//   spacing f64 per axis
//   payload row-major f64 coefficients, 4 per sample for HQF1, 16 for HMF4
// Read/write round trips are bit-exact.

enum class FieldKind { q2, mv4 };

/// Kind of the field stored at path, from the magic bytes.
FieldKind probe_field_kind(const std::string& path);

void write_field(const std::string& path, const QField2& f);
void write_field(const std::string& path, const MVField4& f);
void write_field(const std::string& path, const Spectrum2& f);
void write_field(const std::string& path, const Spectrum4& f);

QField2 read_qfield2(const std::string& path);
MVField4 read_mvfield4(const std::string& path);
Spectrum2 read_spectrum2(const std::string& path);
Spectrum4 read_spectrum4(const std::string& path);

// CSV export: one sample per line, node coordinates then coefficients.
void write_csv(const std::string& path, const QField2& f);
void write_csv(const std::string& path, const MVField4& f);

}  // namespace hyperfourier
