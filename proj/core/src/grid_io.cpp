#include "wavecauchy/grid_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>

namespace wavecauchy {
namespace {

template <class T>
void put(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(bytes.data(), bytes.size());
}

template <class T>
T get(std::istream& in) {
  std::array<char, sizeof(T)> bytes;
  if (!in.read(bytes.data(), bytes.size())) throw UsageError("truncated WAVE stream");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

void write_row(std::ostream& out, std::span<const double> x, double t, double u, Method method, double err) {
  for (double c : x) out << format_real(c) << ',';
  out << format_real(t) << ',' << format_real(u) << ',' << to_string(method) << ',' << format_real(err) << '\n';
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string solution_csv_header(int n) {
  std::string h;
  for (int k = 1; k <= n; ++k) h += "x" + std::to_string(k) + ",";
  return h + "t,u,method,error_estimate";
}

void write_samples_csv(std::ostream& out, std::span<const SolutionSample> samples) {
  const std::size_t n = samples.empty() ? 1 : samples.front().x.size();
  out << solution_csv_header(static_cast<int>(n)) << '\n';
  for (const auto& s : samples) {
    if (s.x.size() != n) throw UsageError("samples with different dimensions in one CSV");
    write_row(out, s.x, s.t, s.u, s.method, s.error_estimate);
  }
}

void write_grid_csv(std::ostream& out, const SolutionGrid& grid) {
  out << solution_csv_header(grid.grid.n) << '\n';
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    write_row(out, grid.grid.node(i), grid.t, grid.values[i], grid.method, grid.error_estimate);
  }
}

void write_grid_binary(std::ostream& out, const SolutionGrid& grid) {
  if (grid.values.size() != grid.grid.size()) throw UsageError("grid value count does not match its shape");
  out.write("WAVE", 4);
  put<std::uint32_t>(out, kGridFormatVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.grid.n));
  for (int k = 0; k < grid.grid.n; ++k) put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.grid.points));
  put<double>(out, grid.grid.half_width);
  put<double>(out, grid.t);
  for (double v : grid.values) put<double>(out, v);
}

SolutionGrid read_grid_binary(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), 4) || std::memcmp(magic.data(), "WAVE", 4) != 0) {
    throw UsageError("not a WAVE stream");
  }
  const auto version = get<std::uint32_t>(in);
  if (version != kGridFormatVersion) throw UsageError("unsupported WAVE version " + std::to_string(version));
  SolutionGrid out;
  out.grid.n = static_cast<int>(get<std::uint32_t>(in));
  Dimension{out.grid.n};
  for (int k = 0; k < out.grid.n; ++k) {
    const auto N = static_cast<int>(get<std::uint32_t>(in));
    if (k > 0 && N != out.grid.points) throw UsageError("WAVE grids with unequal axes are not supported");
    out.grid.points = N;
  }
  out.grid.half_width = get<double>(in);
  out.t = get<double>(in);
  out.grid.validate();
  out.values.resize(out.grid.size());
  for (double& v : out.values) v = get<double>(in);
  return out;
}

}  // namespace wavecauchy
