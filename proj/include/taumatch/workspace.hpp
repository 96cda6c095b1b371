#pragma once

// JSON workspace files: a quiver with relations, named modules and named
// pairs. See docs/workspace-format.md for the schema.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "taumatch/artrans.hpp"

namespace taumatch {

/// Parse failure with a location: "line:column" for syntax errors, a JSON
/// pointer ("/modules/X2/maps/a") for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message);
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct WorkspaceSpec {
  std::string name;
  AlgebraPtr algebra;
  std::vector<NamedModule> modules;  // declaration order
  std::vector<SupportPair> pairs;    // declaration order

  const NamedModule* find_module(const std::string& name) const;
  const SupportPair* find_pair(const std::string& name) const;
  /// Declared module, or a "P<i>" / "I<i>" / "S<i>" shorthand.
  /// Throws ParseError for dangling names.
  NamedModule resolve_module(const std::string& name) const;
};

struct WorkspaceOptions {
  BuildOptions build;
};

WorkspaceSpec parse_workspace_text(const std::string& text, const WorkspaceOptions& options = {});
WorkspaceSpec parse_workspace(const std::filesystem::path& path, const WorkspaceOptions& options = {});

}  // namespace taumatch
