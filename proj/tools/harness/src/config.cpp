#include "wavecauchy/harness/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wavecauchy/errors.hpp"

namespace wavecauchy::harness {
namespace pt = boost::property_tree;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep = ',') {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    auto item = trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Collects errors instead of throwing on the first one.
class Reader {
 public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  void allow(const std::string& section, std::set<std::string> keys) { allowed_[section] = std::move(keys); }

  std::optional<std::string> raw(const std::string& section, const std::string& key) const {
    const auto sec = tree_.get_child_optional(section);
    if (!sec) return std::nullopt;
    const auto v = sec->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!v) return std::nullopt;
    return trim(*v);
  }

  template <class T>
  void read(const std::string& section, const std::string& key, T& target) {
    const auto v = raw(section, key);
    if (!v) return;
    if (!parse(*v, target)) fail(section, key, "cannot parse '" + *v + "'");
  }

  template <class T>
  void read(const std::string& section, const std::string& key, std::optional<T>& target) {
    const auto v = raw(section, key);
    if (!v) return;
    T value{};
    if (parse(*v, value)) {
      target = value;
    } else {
      fail(section, key, "cannot parse '" + *v + "'");
    }
  }

  template <class T>
  void read(const std::string& section, const std::string& key, std::vector<T>& target) {
    const auto v = raw(section, key);
    if (!v) return;
    std::vector<T> out;
    for (const auto& item : split(*v)) {
      T value{};
      if (!parse(item, value)) {
        fail(section, key, "cannot parse list item '" + item + "'");
        return;
      }
      out.push_back(value);
    }
    target = std::move(out);
  }

  void fail(const std::string& section, const std::string& key, const std::string& why) {
    const std::string name = key.empty() ? section : section + "." + key;
    keys_.push_back(name);
    messages_ << "\n  " << name << ": " << why;
  }

  void check_unknown() {
    for (const auto& [section, body] : tree_) {
      const auto it = allowed_.find(section);
      if (it == allowed_.end()) {
        fail(section, "", "unknown section");
        continue;
      }
      if (it->second.count("*")) continue;
      for (const auto& [key, value] : body) {
        if (!it->second.count(key)) fail(section, key, "unknown key");
      }
    }
  }

  // Validation of the values that did parse runs too, so one pass lists every problem.
  void finish(const RunConfig& cfg) {
    if (keys_.empty()) return;
    try {
      cfg.validate();
    } catch (const ConfigError& e) {
      // validate() writes one "  key: reason" line per problem after its first line.
      std::istringstream lines(e.what());
      std::string line;
      std::getline(lines, line);
      while (std::getline(lines, line)) {
        const auto colon = line.find(": ");
        const std::string key = line.substr(2, colon == std::string::npos ? std::string::npos : colon - 2);
        if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) continue;
        keys_.push_back(key);
        messages_ << '\n' << line;
      }
    }
    throw ConfigError("invalid configuration:" + messages_.str(), keys_);
  }

  const std::vector<std::string>& keys() const { return keys_; }

 private:
  static bool parse(const std::string& s, std::string& out) {
    out = s;
    return true;
  }
  static bool parse(const std::string& s, bool& out) {
    if (s == "true" || s == "1" || s == "yes") return out = true, true;
    if (s == "false" || s == "0" || s == "no") return out = false, true;
    return false;
  }
  template <class T>
  static bool parse(const std::string& s, T& out) {
    if constexpr (std::is_floating_point_v<T>) {
      // strtod accepts the exponent forms people write in configs (1e6, 2.5E-3).
      char* end = nullptr;
      out = std::strtod(s.c_str(), &end);
      return end == s.c_str() + s.size() && !s.empty();
    } else {
      double as_real = 0.0;
      const auto* last = s.data() + s.size();
      auto [ptr, ec] = std::from_chars(s.data(), last, out);
      if (ec == std::errc() && ptr == last) return true;
      // Integers written in exponent form, e.g. samples = 1e6.
      if (!parse(s, as_real) || as_real != std::floor(as_real) || as_real < 0) return false;
      out = static_cast<T>(as_real);
      return static_cast<double>(out) == as_real;
    }
  }

  const pt::ptree& tree_;
  std::map<std::string, std::set<std::string>> allowed_;
  std::vector<std::string> keys_;
  std::ostringstream messages_;
};

void read_field(Reader& r, const std::string& section, FieldSpec& f) {
  r.read(section, "kind", f.kind);
  r.read(section, "sigma", f.sigma);
  r.read(section, "a", f.a);
  r.read(section, "amplitude", f.amplitude);
  r.read(section, "c", f.c);
  r.read(section, "id", f.id);
  r.read(section, "center", f.center);
  r.read(section, "k", f.k);
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::solve: return "solve";
    case Command::verify_identities: return "verify-identities";
    case Command::verify_reduction: return "verify-reduction";
    case Command::constants: return "constants";
    case Command::converge: return "converge";
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::solve, Command::verify_identities, Command::verify_reduction, Command::constants,
                 Command::converge}) {
    if (to_string(c) == name) return c;
  }
  throw UsageError("unknown command '" + std::string(name) + "'");
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ScalarField FieldSpec::build(int n) const {
  auto centre = center;
  if (centre.empty()) centre.assign(static_cast<std::size_t>(n), 0.0);
  if (kind == "gaussian") return fields::gaussian(n, sigma, centre, amplitude);
  if (kind == "bump") return fields::bump(n, a, centre);
  if (kind == "harmonic") return fields::harmonic(n, id);
  if (kind == "constant") return fields::constant(n, c);
  if (kind == "zero") return fields::zero(n);
  if (kind == "cosine") return fields::cosine_mode(k);
  throw UsageError("unknown field kind '" + kind + "'");
}

RunConfig parse_config(std::string_view text, Command command) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what(), {"<file>"});
  }

  RunConfig cfg;
  cfg.command = command;
  cfg.hash = fnv1a(text);
  Reader r(tree);
  const std::set<std::string> field_keys{"kind", "sigma", "a", "amplitude", "c", "id", "center", "k"};
  r.allow("run", {"command", "dim", "seed", "tol", "output"});
  r.allow("phi", field_keys);
  r.allow("psi", field_keys);
  r.allow("quadrature", {"latitude", "azimuth", "radial", "nodes", "max_h"});
  r.allow("probes", {"*"});
  r.allow("solve", {"t", "oracle", "tol", "grid_out"});
  r.allow("spectral", {"points", "half_width"});
  r.allow("identities", {"dims", "cases", "max_rxi", "r_min", "r_max", "tol_odd", "tol_n3", "tol_even", "tol_route"});
  r.allow("reduction", {"dims", "radii", "functions", "mc_samples", "tol", "mc_sigmas"});
  r.allow("constants", {"dims", "tol"});
  r.allow("converge", {"target", "analytic", "levels", "min_order", "max_order", "require_decreasing",
                       "expect_saturated", "floor", "center", "t", "xi", "R"});
  r.check_unknown();

  if (const auto c = r.raw("run", "command"); c && *c != to_string(command)) {
    r.fail("run", "command", "config is for '" + *c + "', invoked as '" + std::string(to_string(command)) + "'");
  }
  r.read("run", "dim", cfg.dim);
  r.read("run", "seed", cfg.seed);
  std::optional<double> tol;
  r.read("run", "tol", tol);
  cfg.tol_override = tol;
  std::optional<std::string> output;
  r.read("run", "output", output);
  if (output) cfg.output = *output;

  read_field(r, "phi", cfg.phi);
  read_field(r, "psi", cfg.psi);

  r.read("quadrature", "latitude", cfg.quadrature.latitude);
  r.read("quadrature", "azimuth", cfg.quadrature.azimuth);
  r.read("quadrature", "radial", cfg.quadrature.radial);
  r.read("quadrature", "nodes", cfg.quadrature.nodes);
  r.read("quadrature", "max_h", cfg.quadrature.max_h);

  if (const auto probes = tree.get_child_optional("probes")) {
    for (const auto& [key, value] : *probes) {
      if (key == "random") {
        r.read("probes", "random", cfg.solve.random_probes);
      } else if (key == "radius") {
        r.read("probes", "radius", cfg.solve.probe_radius);
      } else {
        std::vector<double> point;
        r.read("probes", key, point);
        cfg.solve.probes.push_back(point);
      }
    }
  }
  r.read("solve", "t", cfg.solve.times);
  r.read("solve", "oracle", cfg.solve.oracle);
  r.read("solve", "tol", cfg.solve.tolerance);
  std::optional<std::string> grid_out;
  r.read("solve", "grid_out", grid_out);
  if (grid_out) cfg.solve.grid_out = *grid_out;
  r.read("spectral", "points", cfg.solve.spectral_points);
  r.read("spectral", "half_width", cfg.solve.spectral_half_width);

  auto& id = cfg.identities;
  r.read("identities", "dims", id.dims);
  r.read("identities", "cases", id.cases);
  r.read("identities", "max_rxi", id.max_rxi);
  r.read("identities", "r_min", id.r_min);
  r.read("identities", "r_max", id.r_max);
  r.read("identities", "tol_odd", id.tol_odd);
  r.read("identities", "tol_n3", id.tol_n3);
  r.read("identities", "tol_even", id.tol_even);
  r.read("identities", "tol_route", id.tol_route);

  auto& red = cfg.reduction;
  r.read("reduction", "dims", red.dims);
  r.read("reduction", "radii", red.radii);
  r.read("reduction", "functions", red.functions);
  r.read("reduction", "mc_samples", red.mc_samples);
  r.read("reduction", "tol", red.tolerance);
  r.read("reduction", "mc_sigmas", red.mc_sigmas);

  r.read("constants", "dims", cfg.constants.dims);
  r.read("constants", "tol", cfg.constants.tolerance);

  auto& cv = cfg.converge;
  r.read("converge", "target", cv.target);
  r.read("converge", "analytic", cv.analytic);
  r.read("converge", "levels", cv.levels);
  r.read("converge", "min_order", cv.min_order);
  r.read("converge", "max_order", cv.max_order);
  r.read("converge", "require_decreasing", cv.require_decreasing);
  r.read("converge", "expect_saturated", cv.expect_saturated);
  r.read("converge", "floor", cv.floor);
  r.read("converge", "center", cv.center);
  r.read("converge", "t", cv.t);
  r.read("converge", "xi", cv.xi);
  r.read("converge", "R", cv.radius);

  r.finish(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, Command command) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string(), {"--config"});
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), command);
}

void RunConfig::validate() const {
  std::vector<std::string> keys;
  std::ostringstream why;
  const auto bad = [&](const std::string& key, const std::string& message) {
    keys.push_back(key);
    why << "\n  " << key << ": " << message;
  };
  const auto positive = [&](const std::string& key, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) bad(key, "must be positive");
  };
  const auto dim_ok = [](int n) { return n >= 1 && n <= Dimension::kMax; };
  const std::set<std::string> kinds{"gaussian", "bump", "harmonic", "constant", "zero", "cosine"};

  if (tol_override) positive("--tol", *tol_override);
  if (quadrature.latitude && *quadrature.latitude < 1) bad("quadrature.latitude", "must be >= 1");
  if (quadrature.azimuth && *quadrature.azimuth < 1) bad("quadrature.azimuth", "must be >= 1");
  if (quadrature.radial && *quadrature.radial < 1) bad("quadrature.radial", "must be >= 1");
  if (quadrature.nodes && *quadrature.nodes < 2) bad("quadrature.nodes", "must be >= 2");
  positive("quadrature.max_h", quadrature.max_h);

  const auto check_field = [&](const std::string& name, const FieldSpec& f) {
    if (!kinds.count(f.kind)) {
      bad(name + ".kind", "unknown built-in '" + f.kind + "'");
      return;
    }
    if (f.kind == "gaussian") positive(name + ".sigma", f.sigma);
    if (f.kind == "bump") positive(name + ".a", f.a);
    if (f.kind == "harmonic" && (f.id < 0 || f.id >= fields::kHarmonicCount)) bad(name + ".id", "unknown harmonic id");
    if (f.kind == "harmonic" && ((f.id >= 2 && f.id != 5 && dim < 2) || (f.id == 5 && dim < 3))) {
      bad(name + ".id", "harmonic id needs more dimensions");
    }
    if (!f.center.empty() && static_cast<int>(f.center.size()) != dim) bad(name + ".center", "wrong dimension");
    if (f.kind == "cosine" && static_cast<int>(f.k.size()) != dim) bad(name + ".k", "needs one entry per dimension");
  };

  switch (command) {
    case Command::solve: {
      if (!dim_ok(dim)) bad("run.dim", "must be in 1..12");
      check_field("phi", phi);
      check_field("psi", psi);
      if (solve.times.empty()) bad("solve.t", "needs at least one time");
      for (double t : solve.times) {
        if (!(t > 0.0)) {
          bad("solve.t", "times must be positive");
          break;
        }
      }
      if (solve.probes.empty() && solve.random_probes <= 0) bad("probes", "needs explicit probes or random = k");
      for (const auto& p : solve.probes) {
        if (static_cast<int>(p.size()) != dim) {
          bad("probes", "probe with " + std::to_string(p.size()) + " components in dimension " + std::to_string(dim));
          break;
        }
      }
      if (solve.random_probes < 0) bad("probes.random", "must be >= 0");
      positive("probes.radius", solve.probe_radius);
      if (solve.oracle != "none" && solve.oracle != "harmonic" && solve.oracle != "spectral") {
        bad("solve.oracle", "expected none, harmonic or spectral");
      }
      if (solve.oracle == "harmonic" && (!phi.harmonic() || !psi.harmonic())) {
        bad("solve.oracle", "harmonic oracle needs harmonic, constant or zero data");
      }
      positive("solve.tol", solve.tolerance);
      if (solve.spectral_points < 2 || solve.spectral_points % 2) bad("spectral.points", "must be even and >= 2");
      positive("spectral.half_width", solve.spectral_half_width);
      if (solve.grid_out && solve.oracle != "spectral") bad("solve.grid_out", "needs oracle = spectral");
      break;
    }
    case Command::verify_identities:
      if (identities.dims.empty()) bad("identities.dims", "needs at least one dimension");
      for (int n : identities.dims) {
        if (n < 2 || n > Dimension::kMax) bad("identities.dims", "dimensions must be in 2..12");
      }
      if (identities.cases < 1) bad("identities.cases", "must be >= 1");
      positive("identities.max_rxi", identities.max_rxi);
      positive("identities.r_min", identities.r_min);
      if (!(identities.r_max >= identities.r_min)) bad("identities.r_max", "must be >= r_min");
      positive("identities.tol_odd", identities.tol_odd);
      positive("identities.tol_n3", identities.tol_n3);
      positive("identities.tol_even", identities.tol_even);
      positive("identities.tol_route", identities.tol_route);
      break;
    case Command::verify_reduction:
      if (reduction.dims.empty()) bad("reduction.dims", "needs at least one dimension");
      for (int n : reduction.dims) {
        if (n < 3 || n > Dimension::kMax) bad("reduction.dims", "dimensions must be in 3..12");
      }
      for (double R : reduction.radii) positive("reduction.radii", R);
      if (reduction.radii.empty()) bad("reduction.radii", "needs at least one radius");
      for (const auto& f : reduction.functions) {
        if (f != "1" && f != "s2" && f != "cos") bad("reduction.functions", "unknown function '" + f + "'");
      }
      if (reduction.mc_samples < 2) bad("reduction.mc_samples", "must be >= 2");
      positive("reduction.tol", reduction.tolerance);
      positive("reduction.mc_sigmas", reduction.mc_sigmas);
      break;
    case Command::constants:
      for (int n : constants.dims) {
        if (n < 2 || n > Dimension::kMax) bad("constants.dims", "dimensions must be in 2..12");
      }
      if (constants.dims.empty()) bad("constants.dims", "needs at least one dimension");
      positive("constants.tol", constants.tolerance);
      break;
    case Command::converge: {
      const auto& cv = converge;
      if (cv.target != "analytic" && cv.target != "solution" && cv.target != "identity") {
        bad("converge.target", "expected analytic, solution or identity");
      }
      if (cv.levels.size() < 3) bad("converge.levels", "a ladder needs at least 3 levels");
      for (std::size_t i = 0; i < cv.levels.size(); ++i) {
        if (!(cv.levels[i] > 0.0) || (i > 0 && !(cv.levels[i] < cv.levels[i - 1]))) {
          bad("converge.levels", "levels must be positive and strictly decreasing");
          break;
        }
      }
      if (!dim_ok(dim)) bad("run.dim", "must be in 1..12");
      if (cv.target == "analytic" && cv.analytic != "cos_cos" && cv.analytic != "linear" &&
          cv.analytic != "quadratic") {
        bad("converge.analytic", "expected cos_cos, linear or quadratic");
      }
      if (cv.target == "solution") {
        check_field("phi", phi);
        check_field("psi", psi);
      }
      if (cv.target != "identity" && !cv.center.empty() && static_cast<int>(cv.center.size()) != dim) {
        bad("converge.center", "wrong dimension");
      }
      if (cv.target == "identity") {
        if (dim < 2) bad("run.dim", "identity ladder needs n >= 2");
        if (!cv.xi.empty() && static_cast<int>(cv.xi.size()) != dim) bad("converge.xi", "wrong dimension");
        positive("converge.R", cv.radius);
      }
      if (cv.target != "identity") positive("converge.t", cv.t);
      positive("converge.floor", cv.floor);
      break;
    }
  }
  if (!keys.empty()) throw ConfigError("invalid configuration:" + why.str(), keys);
}

}  // namespace wavecauchy::harness
