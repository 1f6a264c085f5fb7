#pragma once

// Exhaustive verification suites over a loaded model, the orbit table for
// CM types, and the chi_F-dependence probe.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plectic/config.hpp"

namespace plectic {

enum class Status { Pass, Fail, Skip };
std::string_view to_string(Status s) noexcept;

struct Check {
  std::string suite;
  std::string name;
  Status status = Status::Pass;
  std::size_t cases = 0;
  std::string detail;
  std::string flag;  ///< axiom flag responsible for a skip
  std::vector<std::string> counterexamples;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite.
std::vector<Check> run_suite(const Model& model, std::string_view suite);

struct OrbitTable {
  std::string group;  ///< "galois" or "plectic"
  std::vector<std::vector<CMType>> orbits;

  std::vector<std::size_t> sizes() const;
};

/// group is "galois", "plectic", or "none" (no generators).
OrbitTable compute_orbits(const Model& model, std::string_view group);

struct ChiDependence {
  struct PerChi {
    std::string fingerprint;
    std::vector<std::string> taniyama;  ///< one entry per (alpha, Phi), empty if not Cartesian
    /// per torus: membership bitmap over the enumerated plectic group
    std::vector<std::vector<bool>> members;
  };
  struct TorusSummary {
    std::string name;
    bool membership_varies = false;
    std::size_t common_members = 0;
    bool pi0_invariant = true;       ///< lambda(alpha) agrees across chi_F on common members
    std::size_t pi0_compared = 0;
    bool point_action_varies = false;
    std::size_t point_differences = 0;
    std::size_t point_compared = 0;
  };

  std::size_t splittings = 0;
  bool conjugation_applied = false;
  bool cyclotomic_applied = false;
  std::vector<PerChi> per_chi;
  bool taniyama_varies = false;
  std::size_t taniyama_differences = 0;
  std::vector<TorusSummary> tori;

  bool ok() const;
};

ChiDependence chi_dependence(const Model& model);

}  // namespace plectic
