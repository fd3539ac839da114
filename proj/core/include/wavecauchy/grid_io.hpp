#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "wavecauchy/solvers.hpp"
#include "wavecauchy/spectral.hpp"

namespace wavecauchy {

/// Shortest round-trip decimal form of v ("nan", "inf", "-inf" for non-finite values).
std::string format_real(double v);

/// Header "x1,...,xn,t,u,method,error_estimate".
std::string solution_csv_header(int n);

/// One row per sample, header first. Samples must share a dimension.
void write_samples_csv(std::ostream& out, std::span<const SolutionSample> samples);

/// One row per grid node, same columns as write_samples_csv.
void write_grid_csv(std::ostream& out, const SolutionGrid& grid);

/// Little-endian layout:
///   "WAVE" | u32 version = 1 | u32 n | u32 N (per axis, n times) | f64 L | f64 t | f64 values[N^n]
void write_grid_binary(std::ostream& out, const SolutionGrid& grid);
SolutionGrid read_grid_binary(std::istream& in);

inline constexpr std::uint32_t kGridFormatVersion = 1;

}  // namespace wavecauchy
