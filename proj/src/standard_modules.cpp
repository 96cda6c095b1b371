#include "taumatch/standard_modules.hpp"

#include <cctype>

namespace taumatch {

namespace {

void check_vertex(const AlgebraPtr& algebra, std::size_t vertex) {
  if (vertex >= algebra->vertex_count())
    throw RepresentationError("vertex " + std::to_string(vertex + 1) + " out of range");
}

Path arrow_path(const Quiver& q, std::size_t arrow) {
  return Path{q.arrow(arrow).source, q.arrow(arrow).target, {arrow}};
}

}  // namespace

Representation projective(const AlgebraPtr& algebra, std::size_t vertex) {
  check_vertex(algebra, vertex);
  const auto& q = algebra->quiver();
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(algebra->basis_between(vertex, v).size());
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    const auto& from = algebra->basis_between(vertex, a.source);
    Matrix mat(dims[a.target], dims[a.source]);
    for (std::size_t c = 0; c < from.size(); ++c) {
      const Coordinates image = algebra->reduce(*concatenate(from[c], arrow_path(q, k)));
      for (std::size_t r = 0; r < image.size(); ++r) mat(r, c) = image[r];
    }
    maps.push_back(std::move(mat));
  }
  return {algebra, std::move(dims), std::move(maps)};
}

Representation injective(const AlgebraPtr& algebra, std::size_t vertex) {
  check_vertex(algebra, vertex);
  const auto& q = algebra->quiver();
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(algebra->basis_between(v, vertex).size());
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    const auto& to = algebra->basis_between(a.target, vertex);
    Matrix mat(dims[a.target], dims[a.source]);
    // Row q* picks the coefficients of (a then q) over the paths a.source -> vertex.
    for (std::size_t r = 0; r < to.size(); ++r) {
      const Coordinates pre = algebra->reduce(*concatenate(arrow_path(q, k), to[r]));
      for (std::size_t c = 0; c < pre.size(); ++c) mat(r, c) = pre[c];
    }
    maps.push_back(std::move(mat));
  }
  return {algebra, std::move(dims), std::move(maps)};
}

Representation simple(const AlgebraPtr& algebra, std::size_t vertex) {
  check_vertex(algebra, vertex);
  const auto& q = algebra->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  return {algebra, std::move(dims), std::move(maps)};
}

std::optional<VertexLabeledModuleName> parse_standard_name(const std::string& text, std::size_t vertex_count) {
  if (text.size() < 2) return std::nullopt;
  StandardKind kind;
  switch (text.front()) {
    case 'P': kind = StandardKind::Projective; break;
    case 'I': kind = StandardKind::Injective; break;
    case 'S': kind = StandardKind::Simple; break;
    default: return std::nullopt;
  }
  if (text[1] == '0') return std::nullopt;
  std::size_t vertex = 0;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return std::nullopt;
    vertex = vertex * 10 + static_cast<std::size_t>(text[k] - '0');
    if (vertex > vertex_count) return std::nullopt;
  }
  if (vertex == 0) return std::nullopt;
  return VertexLabeledModuleName{kind, vertex - 1};
}

Representation standard_module(const AlgebraPtr& algebra, const VertexLabeledModuleName& name) {
  switch (name.kind) {
    case StandardKind::Projective: return projective(algebra, name.vertex);
    case StandardKind::Injective: return injective(algebra, name.vertex);
    case StandardKind::Simple: return simple(algebra, name.vertex);
  }
  throw RepresentationError("unknown module kind");
}

}  // namespace taumatch
