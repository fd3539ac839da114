#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wavecauchy::harness {

struct Provenance {
  std::string command;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  std::string version;
};

/// One CSV table per run. Every row carries its residual, the tolerance it
/// was held to and a pass flag, so pass/fail can be recomputed from the file.
class Report {
 public:
  Report(std::vector<std::string> columns, Provenance provenance);

  /// Appends a row. `cells` must match columns(); the report adds the
  /// residual, tolerance, status and note columns itself. `note` is filled
  /// with the violated check when the row fails.
  void add_row(std::vector<std::string> cells, double residual, double tolerance, bool pass, std::string check);

  /// Row with residual <= tolerance as its pass condition.
  void add_checked(std::vector<std::string> cells, double residual, double tolerance, const std::string& check);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  std::size_t passed() const noexcept { return passed_; }
  std::size_t failed() const noexcept { return rows_.size() - passed_; }
  double max_residual() const noexcept { return max_residual_; }
  bool ok() const noexcept { return failed() == 0 && !rows_.empty(); }

  /// Provenance as '#' comment lines, the header, the rows, then the summary
  /// as '#' lines. No timestamps, so equal inputs give equal bytes.
  void write_csv(std::ostream& out) const;
  std::string summary() const;

 private:
  std::vector<std::string> columns_;
  Provenance provenance_;
  std::vector<std::vector<std::string>> rows_;
  std::size_t passed_ = 0;
  double max_residual_ = 0.0;
};

}  // namespace wavecauchy::harness
