#pragma once

// Machine-readable (versioned JSON) and human-readable renderings of a run.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plectic/verify.hpp"

namespace plectic {

inline constexpr int kReportSchemaVersion = 1;

struct Report {
  std::string command;
  std::string model;
  std::string chi_fingerprint;  ///< empty when no splitting exists
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<Check> checks;
  std::vector<OrbitTable> orbits;
  std::optional<ChiDependence> chi;
  double seconds = 0;

  /// No failed check, and chi-dependence (if present) found lambda invariant.
  bool ok() const;
};

/// Fills model, flags and the default chi_F fingerprint.
Report start_report(std::string command, const Model& model);

/// Pass include_timing = false for byte-identical output across runs.
std::string to_json(const Report& r, bool include_timing = true);
std::string to_table(const Report& r);

}  // namespace plectic
