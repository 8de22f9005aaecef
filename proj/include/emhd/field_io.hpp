#pragma once

#include "emhd/grid.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace emhd::io {

/// Fixed-format double with 17 significant digits; identical bytes for identical values.
std::string format_double(double v);

/// Two-column CSV "x,B" of the physical samples.
void write_csv(const Field& f, const std::filesystem::path& path);
Field read_csv(const std::filesystem::path& path, const GridSpec& g);

// Checkpoint layout, all little-endian:
//   8 bytes magic "EMHDSPEC", u32 version (1), u64 n_modes, f64 half_length,
//   then n/2+1 pairs (f64 re, f64 im) for k = 0..n/2.
void write_checkpoint(const Spectrum& s, std::ostream& out);
Spectrum read_checkpoint(std::istream& in);
void write_checkpoint(const Spectrum& s, const std::filesystem::path& path);
Spectrum read_checkpoint(const std::filesystem::path& path);

/// Coefficient list text: one "k re im" triple per line (k >= 0), '#' comments.
/// Missing modes are zero.
Spectrum read_coeff_list(const std::filesystem::path& path, const GridSpec& g);

}  // namespace emhd::io
