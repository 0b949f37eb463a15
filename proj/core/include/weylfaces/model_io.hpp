#pragma once

#include <optional>
#include <string>

#include "weylfaces/faces.hpp"

namespace weylfaces {

/// A parsed model file: the module descriptor plus the optional node subset J
/// used by the universal-polyhedron command.
struct Model {
  ModuleDescriptor module;
  std::optional<NodeSet> universal_j;
};

/// Parses the JSON model format:
/// {
///   "cartan": [[2,-1],[-1,2]],
///   "labels": ["a","b"],                      // optional
///   "highest_weight": {"pairings": ["3/2", 1]},
///   "integrability": [0, 1],                  // indices or labels
///   "flavor": "classical",                    // or "quantum"
///   "torus_values": ["generic","pm_one",{"q_power":3}],  // quantum only
///   "J": [0]                                  // optional
/// }
/// Rationals are JSON integers or exact "p/q" strings.
/// Throws ModelError (and the underlying validation errors).
Model parse_model_json(const std::string& text);
Model parse_model_file(const std::string& path);

}  // namespace weylfaces
