#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "taumatch/quiver_algebra.hpp"
#include "taumatch/representation.hpp"

namespace taumatch {

/// P(i) = A e_i: at vertex v the basis paths i -> v; arrows act by
/// post-composition. Top is S(i).
Representation projective(const AlgebraPtr& algebra, std::size_t vertex);

/// I(i) = D(e_i A): at vertex v the dual basis of paths v -> i; arrows act
/// by pre-composition, dualized. Socle is S(i).
Representation injective(const AlgebraPtr& algebra, std::size_t vertex);

/// S(i): one-dimensional at i, zero elsewhere.
Representation simple(const AlgebraPtr& algebra, std::size_t vertex);

enum class StandardKind { Projective, Injective, Simple };

struct VertexLabeledModuleName {
  StandardKind kind;
  std::size_t vertex;  // 0-based
};

/// Parses "P1", "I2", "S3" (1-based). nullopt when the text is not of that
/// shape or the vertex is out of range.
std::optional<VertexLabeledModuleName> parse_standard_name(const std::string& text, std::size_t vertex_count);

Representation standard_module(const AlgebraPtr& algebra, const VertexLabeledModuleName& name);

}  // namespace taumatch
