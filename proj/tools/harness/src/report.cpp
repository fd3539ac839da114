#include "wavecauchy/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "wavecauchy/errors.hpp"
#include "wavecauchy/grid_io.hpp"

namespace wavecauchy::harness {
namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Report::Report(std::vector<std::string> columns, Provenance provenance)
    : columns_(std::move(columns)), provenance_(std::move(provenance)) {
  for (const char* extra : {"residual", "tolerance", "status", "note"}) columns_.emplace_back(extra);
}

void Report::add_row(std::vector<std::string> cells, double residual, double tolerance, bool pass,
                     std::string check) {
  if (cells.size() + 4 != columns_.size()) throw UsageError("report row does not match its columns");
  for (auto& cell : cells) std::replace(cell.begin(), cell.end(), ',', ';');
  cells.push_back(format_real(residual));
  cells.push_back(format_real(tolerance));
  cells.emplace_back(pass ? "pass" : "fail");
  if (pass) {
    cells.emplace_back();
  } else {
    std::replace(check.begin(), check.end(), ',', ';');
    cells.push_back(std::move(check));
  }
  rows_.push_back(std::move(cells));
  if (pass) ++passed_;
  if (std::isnan(residual)) {
    max_residual_ = residual;
  } else if (!std::isnan(max_residual_)) {
    max_residual_ = std::max(max_residual_, residual);
  }
}

void Report::add_checked(std::vector<std::string> cells, double residual, double tolerance,
                         const std::string& check) {
  const bool pass = residual <= tolerance;
  add_row(std::move(cells), residual, tolerance, pass,
          check + ": residual " + format_real(residual) + " > tolerance " + format_real(tolerance));
}

void Report::write_csv(std::ostream& out) const {
  out << "# command=" << provenance_.command << '\n'
      << "# config_hash=" << hex(provenance_.config_hash) << '\n'
      << "# seed=" << provenance_.seed << '\n'
      << "# version=" << provenance_.version << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  out << "# cases=" << rows_.size() << " passed=" << passed_ << " failed=" << failed()
      << " max_residual=" << format_real(max_residual_) << '\n';
}

std::string Report::summary() const {
  std::ostringstream s;
  s << provenance_.command << ": " << passed_ << "/" << rows_.size() << " passed, max residual "
    << format_real(max_residual_);
  return s.str();
}

}  // namespace wavecauchy::harness
