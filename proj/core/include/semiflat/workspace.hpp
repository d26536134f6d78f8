#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semiflat/limits.hpp"

namespace semiflat {

using Json = nlohmann::json;

inline constexpr int kWorkspaceFormat = 1;

struct WorkspaceConfig {
  std::size_t max_size = 4;
  double budget = 300.0;
  std::uint64_t seed = 0;
  std::vector<std::string> universe;  // module names; empty means the whole catalog
};

struct NamedMorphism {
  std::string name;
  Morphism morphism;
};

struct SystemEdge {
  std::size_t from = 0, to = 0;
  std::string map;
};

// kind "directed": map is nodes[from] -> nodes[to]; "inverse": the reverse.
struct NamedSystem {
  std::string name;
  std::string kind;
  std::vector<std::string> nodes;
  std::vector<SystemEdge> edges;
};

// arrows are morphism names; each equality relates two paths, applied left
// to right, that must agree.
struct Diagram {
  std::string name;
  std::vector<std::string> nodes;
  std::vector<std::string> arrows;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> equalities;
};

struct WorkspaceIssue {
  std::string pointer;
  std::string kind;  // "SchemaError" or "AxiomViolation"
  std::string message;
};

class Workspace {
 public:
  int format = kWorkspaceFormat;
  WorkspaceConfig config;
  std::vector<SemiringPtr> semirings;
  std::vector<ModulePtr> semimodules;
  std::vector<NamedMorphism> morphisms;
  std::vector<NamedSystem> systems;
  std::vector<Diagram> diagrams;

  // Workspace entries first, then the built-in names; UnknownObject otherwise.
  SemiringPtr semiring(const std::string& name) const;
  const ModulePtr& module(const std::string& name) const;
  const Morphism& morphism(const std::string& name) const;
  const NamedSystem& system(const std::string& name) const;
  const Diagram& diagram(const std::string& name) const;
  bool has_module(const std::string& name) const;

  DirectedSystem directed(const NamedSystem& s) const;
  InverseSystem inverse(const NamedSystem& s) const;
  // Checks every equality; returns the first failing one as "p = q".
  std::optional<std::string> diagram_failure(const Diagram& d) const;
};

// Everything wrong with a document: schema problems first, then axiom
// failures, each with a JSON pointer to the object.
std::vector<WorkspaceIssue> check_workspace(const Json& doc);

// Throws the first SchemaError, or AxiomViolation for the first invalid
// object.
Workspace parse_workspace(const Json& doc);
Workspace load_workspace(const std::string& path);

Json workspace_to_json(const Workspace& ws);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string emit_workspace(const Workspace& ws);

Json semiring_to_json(const Semiring& s);
Json module_to_json(const Semimodule& m);
Json morphism_to_json(const std::string& name, const Morphism& f);

// The built-in catalog plus the fixtures the CLI examples refer to.
Workspace catalog_workspace();

}  // namespace semiflat
