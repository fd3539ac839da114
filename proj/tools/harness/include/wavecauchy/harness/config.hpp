#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavecauchy/fields.hpp"

namespace wavecauchy::harness {

enum class Command { solve, verify_identities, verify_reduction, constants, converge };

std::string_view to_string(Command command);
/// UsageError for unknown names.
Command parse_command(std::string_view name);

/// One built-in datum as written in a [phi] or [psi] section.
struct FieldSpec {
  std::string kind = "zero";  // gaussian, bump, harmonic, constant, zero, cosine
  double sigma = 0.5;
  double a = 0.5;
  double amplitude = 1.0;
  double c = 1.0;
  int id = 0;
  std::vector<double> center;
  std::vector<double> k;

  ScalarField build(int n) const;
  /// Harmonic polynomials, constants and zero: u = phi + t psi holds exactly.
  bool harmonic() const { return kind == "harmonic" || kind == "constant" || kind == "zero"; }
};

struct QuadratureSpec {
  std::optional<int> latitude;
  std::optional<int> azimuth;
  std::optional<int> radial;
  std::optional<int> nodes;  // 1-D rules: reductions and oscillatory integrals
  double max_h = 0.05;
};

struct SolveSpec {
  std::vector<std::vector<double>> probes;
  int random_probes = 0;
  double probe_radius = 1.0;
  std::vector<double> times;
  std::string oracle = "none";  // none, harmonic, spectral
  double tolerance = 1e-8;
  int spectral_points = 64;
  double spectral_half_width = 4.0;
  std::optional<std::filesystem::path> grid_out;
};

struct IdentitySpec {
  std::vector<int> dims{3, 5, 7, 2, 4, 6};
  int cases = 200;
  double max_rxi = 20.0;
  double r_min = 0.25;
  double r_max = 2.0;
  double tol_odd = 1e-8;
  double tol_n3 = 1e-10;
  double tol_even = 1e-6;
  double tol_route = 1e-8;
};

struct ReductionSpec {
  std::vector<int> dims{3, 4, 5, 7};
  std::vector<double> radii{0.5, 1.0, 2.0};
  std::vector<std::string> functions{"1", "s2", "cos"};
  std::size_t mc_samples = 1'000'000;
  double tolerance = 1e-10;
  double mc_sigmas = 3.0;
};

struct ConstantsSpec {
  std::vector<int> dims{2, 3, 4, 5, 6, 7};
  double tolerance = 1e-10;
};

struct ConvergeSpec {
  std::string target = "analytic";  // analytic, solution, identity
  std::string analytic = "cos_cos";  // cos_cos, linear, quadratic
  std::vector<double> levels;
  std::optional<double> min_order;
  std::optional<double> max_order;
  bool require_decreasing = false;
  bool expect_saturated = false;
  double floor = 1e-10;
  std::vector<double> center;
  double t = 1.0;
  std::vector<double> xi;
  double radius = 1.0;
};

struct RunConfig {
  Command command = Command::solve;
  int dim = 3;
  std::uint64_t seed = 0x5eed;
  std::optional<double> tol_override;
  FieldSpec phi;
  FieldSpec psi;
  QuadratureSpec quadrature;
  SolveSpec solve;
  IdentitySpec identities;
  ReductionSpec reduction;
  ConstantsSpec constants;
  ConvergeSpec converge;
  std::optional<std::filesystem::path> output;
  /// FNV-1a of the config text and the command line overrides.
  std::uint64_t hash = 0;

  /// Throws ConfigError naming every offending key.
  void validate() const;
};

/// Parses INI text: [section] headers, key = value lines, comma-separated
/// lists, '#' or ';' comments. Unknown sections and keys are errors.
RunConfig parse_config(std::string_view text, Command command);
RunConfig load_config(const std::filesystem::path& path, Command command);

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace wavecauchy::harness
