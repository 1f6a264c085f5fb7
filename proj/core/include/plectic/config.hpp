#pragma once

// Model files (TOML). Groups are given by `units_mod` or an explicit table of
// element names; subgroups by member lists; maps into an abelianization by
// the element names of the images of the basis vectors; maps between the
// idele-class models by row-major integer matrices (one row per codomain
// coordinate). Unknown keys are rejected. Axiom flags are always computed.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "plectic/actions.hpp"

namespace plectic {

struct Model {
  std::string id;
  std::string description;
  bool synthetic = false;
  GroupPtr gamma;
  ContextPtr base;
  CMPtr cm;
  RecipPtr recip;
  QuotAb class_group;
  std::vector<TorusModel> tori;

  const TorusModel& torus(std::string_view name) const;
};

/// Throws ConfigError for malformed or unknown keys; model errors propagate.
Model load_model(const std::filesystem::path& file);
Model parse_model(std::string_view toml_text, std::string id);

/// PLECTIC_CM_MODEL_DIR if set, else the directory of the shipped fixtures.
std::filesystem::path model_directory();
/// A path to an existing file, or `<dir>/<id>.toml`. Throws ConfigError.
std::filesystem::path resolve_model(std::string_view id_or_path, const std::filesystem::path& dir);

}  // namespace plectic
