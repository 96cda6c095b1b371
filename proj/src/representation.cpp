#include "taumatch/representation.hpp"

#include <numeric>

namespace taumatch {

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!algebra_) throw RepresentationError("representation without an algebra");
}

Representation Representation::checked(AlgebraPtr algebra, std::vector<std::size_t> dims,
                                       std::vector<Matrix> maps) {
  Representation rep(std::move(algebra), std::move(dims), std::move(maps));
  const ValidationReport report = validate(rep);
  if (!report.ok()) throw RepresentationError(report.violations.front().message);
  return rep;
}

Representation Representation::zero(AlgebraPtr algebra) {
  std::vector<std::size_t> dims(algebra->vertex_count(), 0);
  std::vector<Matrix> maps(algebra->quiver().arrows().size());
  return {std::move(algebra), std::move(dims), std::move(maps)};
}

std::size_t Representation::total_dimension() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix Representation::path_action(const Path& p) const {
  Matrix acc = Matrix::identity(dim(p.source));
  for (std::size_t a : p.arrows) acc = map(a) * acc;
  return acc;
}

ValidationReport validate(const Representation& m) {
  ValidationReport report;
  const auto& q = m.algebra()->quiver();
  if (m.dims().size() != q.vertex_count()) {
    report.violations.push_back({"dimension vector has " + std::to_string(m.dims().size()) +
                                     " entries, quiver has " + std::to_string(q.vertex_count()) + " vertices",
                                 std::nullopt, {}});
    return report;
  }
  if (m.maps().size() != q.arrows().size()) {
    report.violations.push_back({"expected one matrix per arrow", std::nullopt, {}});
    return report;
  }
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    const Matrix& mat = m.map(k);
    if (mat.rows() != m.dim(a.target) || mat.cols() != m.dim(a.source)) {
      report.violations.push_back({"arrow '" + a.name + "' needs a " + std::to_string(m.dim(a.target)) + "x" +
                                       std::to_string(m.dim(a.source)) + " matrix, got " +
                                       std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()),
                                   std::nullopt, {}});
    }
  }
  if (!report.ok()) return report;

  const auto& rels = m.algebra()->relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    Matrix value;
    bool first = true;
    std::string text;
    for (const auto& term : rels[r].terms) {
      Path p;
      for (const auto& name : term.arrows) {
        const std::size_t a = *q.find_arrow(name);
        if (p.arrows.empty()) p.source = q.arrow(a).source;
        p.arrows.push_back(a);
        p.target = q.arrow(a).target;
      }
      Matrix contribution = m.path_action(p) * term.coefficient;
      if (first) {
        value = contribution;
        first = false;
      } else {
        value += contribution;
      }
      text += (text.empty() ? "" : " + ") + to_string(term.coefficient) + "*" + m.algebra()->path_name(p);
    }
    if (!value.is_zero())
      report.violations.push_back({"relation #" + std::to_string(r + 1) + " (" + text + ") does not vanish", r,
                                   value});
  }
  return report;
}

bool Morphism::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

Morphism compose(const Morphism& after, const Morphism& before) {
  if (after.components.size() != before.components.size())
    throw RepresentationError("composing morphisms over different quivers");
  Morphism out;
  for (std::size_t v = 0; v < after.components.size(); ++v)
    out.components.push_back(after.components[v] * before.components[v]);
  return out;
}

Morphism identity_morphism(const Representation& m) {
  Morphism out;
  for (std::size_t d : m.dims()) out.components.push_back(Matrix::identity(d));
  return out;
}

Morphism zero_morphism(const Representation& from, const Representation& to) {
  Morphism out;
  for (std::size_t v = 0; v < from.dims().size(); ++v) out.components.emplace_back(to.dim(v), from.dim(v));
  return out;
}

Morphism linear_combination(const std::vector<Morphism>& terms, const std::vector<Scalar>& coeffs) {
  if (terms.empty() || terms.size() != coeffs.size())
    throw RepresentationError("linear_combination needs matching non-empty inputs");
  Morphism out;
  for (const auto& c : terms.front().components) out.components.emplace_back(c.rows(), c.cols());
  for (std::size_t k = 0; k < terms.size(); ++k)
    for (std::size_t v = 0; v < out.components.size(); ++v) out.components[v] += terms[k].components[v] * coeffs[k];
  return out;
}

bool is_morphism(const Representation& from, const Representation& to, const Morphism& f) {
  const auto& q = from.algebra()->quiver();
  if (f.components.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (f.components[v].rows() != to.dim(v) || f.components[v].cols() != from.dim(v)) return false;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    if (!(f.components[a.target] * from.map(k) == to.map(k) * f.components[a.source])) return false;
  }
  return true;
}

Representation direct_sum(const std::vector<Representation>& summands, const AlgebraPtr& algebra) {
  for (const auto& s : summands)
    if (s.algebra() != algebra) throw RepresentationError("direct sum of modules over different algebras");
  const auto& q = algebra->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (const auto& s : summands)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += s.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    std::vector<Matrix> blocks;
    for (const auto& s : summands) blocks.push_back(s.map(k));
    maps.push_back(block_diagonal(blocks));
  }
  return {algebra, std::move(dims), std::move(maps)};
}

Representation direct_sum(const std::vector<Representation>& summands) {
  if (summands.empty()) throw RepresentationError("empty direct sum needs an explicit algebra");
  return direct_sum(summands, summands.front().algebra());
}

Representation dual_rep(const Representation& m, const AlgebraPtr& target) {
  const auto& from = m.algebra()->quiver();
  const auto& to = target->quiver();
  bool compatible = from.vertex_count() == to.vertex_count() && from.arrows().size() == to.arrows().size();
  for (std::size_t k = 0; compatible && k < from.arrows().size(); ++k)
    compatible = from.arrow(k).source == to.arrow(k).target && from.arrow(k).target == to.arrow(k).source;
  if (!compatible) throw RepresentationError("dual_rep: target algebra is not the opposite quiver");
  std::vector<Matrix> maps;
  for (const auto& mat : m.maps()) maps.push_back(mat.transpose());
  return {target, m.dims(), std::move(maps)};
}

}  // namespace taumatch
