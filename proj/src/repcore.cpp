#include "taumatch/repcore.hpp"

#include "taumatch/standard_modules.hpp"

namespace taumatch {

HomSpace hom_basis(const Representation& from, const Representation& to) {
  if (from.algebra() != to.algebra()) throw RepresentationError("Hom between modules over different algebras");
  const auto& q = from.algebra()->quiver();
  const std::size_t n = q.vertex_count();

  // phi_v is dim_to(v) x dim_from(v), stored row-major at offset[v].
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + to.dim(v) * from.dim(v);
  const std::size_t unknowns = offset[n];
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * from.dim(v) + c; };

  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += to.dim(a.target) * from.dim(a.source);
  Matrix system(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    const Matrix& m_a = from.map(k);
    const Matrix& n_a = to.map(k);
    // (phi_t M_a - N_a phi_s)(r, c) = 0
    for (std::size_t r = 0; r < to.dim(a.target); ++r)
      for (std::size_t c = 0; c < from.dim(a.source); ++c, ++row) {
        for (std::size_t j = 0; j < from.dim(a.target); ++j)
          if (m_a(j, c) != 0) system(row, var(a.target, r, j)) += m_a(j, c);
        for (std::size_t j = 0; j < to.dim(a.source); ++j)
          if (n_a(r, j) != 0) system(row, var(a.source, j, c)) -= n_a(r, j);
      }
  }

  const Matrix solutions = kernel_basis(system);
  HomSpace space{from, to, {}};
  for (std::size_t s = 0; s < solutions.cols(); ++s) {
    Morphism f;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix comp(to.dim(v), from.dim(v));
      for (std::size_t r = 0; r < to.dim(v); ++r)
        for (std::size_t c = 0; c < from.dim(v); ++c) comp(r, c) = solutions(var(v, r, c), s);
      f.components.push_back(std::move(comp));
    }
    space.basis.push_back(std::move(f));
  }
  return space;
}

std::size_t hom_dim(const Representation& from, const Representation& to) {
  return hom_basis(from, to).dimension();
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

Matrix vectorize(const Morphism& f) {
  std::vector<Scalar> entries;
  for (const auto& c : f.components)
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) entries.push_back(c(r, k));
  return Matrix::column(entries);
}

// Fitting decomposition M = ker y^D + im y^D of a singular, non-nilpotent
// endomorphism; returns the projection onto the kernel part.
Morphism fitting_idempotent(const Morphism& y, std::size_t total_dim) {
  Morphism e;
  for (const auto& comp : y.components) {
    const std::size_t d = comp.rows();
    if (d == 0) {
      e.components.emplace_back(0, 0);
      continue;
    }
    const Matrix high = power(comp, total_dim);
    const Matrix ker = kernel_basis(high);
    const Matrix img = column_space_basis(high);
    const Matrix change = hstack({ker, img}, d);
    Matrix diag(d, d);
    for (std::size_t k = 0; k < ker.cols(); ++k) diag(k, k) = 1;
    e.components.push_back(change * diag * *inverse(change));
  }
  return e;
}

std::optional<Morphism> find_idempotent(const EndomorphismRing& ring) {
  const Representation& m = ring.module();
  const std::size_t total = m.total_dimension();
  const auto& basis = ring.basis();
  std::vector<Morphism> candidates = basis;
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t l = k + 1; l < basis.size(); ++l) {
      candidates.push_back(linear_combination({basis[k], basis[l]}, {Scalar(1), Scalar(1)}));
      candidates.push_back(linear_combination({basis[k], basis[l]}, {Scalar(1), Scalar(-1)}));
    }
  for (const auto& x : candidates) {
    const Matrix full = block_diagonal(x.components);
    for (const Scalar& lambda : rational_roots(characteristic_polynomial(full))) {
      const Matrix shifted = full - Matrix::identity(total) * lambda;
      if (is_nilpotent(shifted)) continue;
      Morphism y = x;
      for (std::size_t v = 0; v < y.components.size(); ++v)
        y.components[v] -= Matrix::identity(m.dim(v)) * lambda;
      Morphism e = fitting_idempotent(y, total);
      if (is_morphism(m, m, e) && compose(e, e) == e && !e.is_zero() && !(e == identity_morphism(m))) return e;
    }
  }
  return std::nullopt;
}

IsomorphismCertificate compare_certified(const Representation& m, const Representation& n) {
  IsomorphismCertificate cert;
  if (m.dims() != n.dims()) return cert;
  const HomSpace there = hom_basis(m, n);
  if (there.dimension() == 0) return cert;
  const HomSpace back = hom_basis(n, m);
  const EndomorphismRing ring(m);
  for (const auto& phi : there.basis)
    for (const auto& psi : back.basis)
      if (!ring.in_radical(compose(psi, phi))) {
        cert.isomorphic = true;
        cert.forward = phi;
        cert.backward = psi;
        return cert;
      }
  return cert;
}

}  // namespace

EndomorphismRing::EndomorphismRing(const Representation& m) : module_(m), basis_(hom_basis(m, m).basis) {
  const std::size_t d = basis_.size();
  std::vector<Matrix> columns;
  for (const auto& b : basis_) columns.push_back(vectorize(b));
  std::size_t len = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) len += m.dim(v) * m.dim(v);
  vectorized_ = hstack(columns, len);

  // structure[k][l] = coordinates of b_k * b_l
  std::vector<std::vector<std::vector<Scalar>>> structure(d, std::vector<std::vector<Scalar>>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) structure[k][l] = coordinates(compose(basis_[k], basis_[l]));
  // trace of left multiplication by b_m
  std::vector<Scalar> trace(d);
  for (std::size_t mi = 0; mi < d; ++mi)
    for (std::size_t l = 0; l < d; ++l) trace[mi] += structure[mi][l][l];
  gram_ = Matrix(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t mi = 0; mi < d; ++mi) gram_(k, l) += structure[k][l][mi] * trace[mi];
  radical_ = kernel_basis(gram_.transpose());
}

std::vector<Scalar> EndomorphismRing::coordinates(const Morphism& f) const {
  const auto x = solve(vectorized_, vectorize(f));
  if (!x) throw RepresentationError("morphism is not an endomorphism of the module");
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < x->rows(); ++k) out.push_back((*x)(k, 0));
  return out;
}

bool EndomorphismRing::in_radical(const Morphism& f) const {
  const Matrix x = Matrix::column(coordinates(f));
  return (gram_.transpose() * x).is_zero();
}

EndAlgebraInfo end_info(const Representation& m) {
  const EndomorphismRing ring(m);
  EndAlgebraInfo info;
  info.dimension = ring.dimension();
  info.radical_dimension = ring.radical_dimension();
  if (info.dimension == 0) {
    info.local = Verdict::No;
  } else if (info.dimension - info.radical_dimension == 1) {
    info.local = Verdict::Yes;
  } else if (auto e = find_idempotent(ring)) {
    info.local = Verdict::No;
    info.idempotent = std::move(e);
  } else {
    info.local = Verdict::Undetermined;
  }
  return info;
}

Verdict is_indecomposable(const Representation& m) {
  if (m.is_zero()) throw RepresentationError("zero module");
  return end_info(m).local;
}

IsomorphismCertificate compare_indecomposables(const Representation& m, const Representation& n) {
  return compare_certified(m, n);
}

IsomorphismCertificate isomorphism_certificate(const Representation& m, const Representation& n) {
  if (m.is_zero() || n.is_zero() || is_indecomposable(m) != Verdict::Yes || is_indecomposable(n) != Verdict::Yes)
    throw RepresentationError("inputs not certified indecomposable");
  return compare_certified(m, n);
}

bool is_isomorphic(const Representation& m, const Representation& n) {
  return isomorphism_certificate(m, n).isomorphic;
}

Submodule subrepresentation(const Representation& m, const std::vector<Matrix>& bases) {
  const auto& q = m.algebra()->quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    const Matrix image = m.map(k) * bases[a.source];
    auto restricted = solve(bases[a.target], image);
    if (!restricted) throw RepresentationError("subspace family is not closed under arrow '" + a.name + "'");
    maps.push_back(std::move(*restricted));
  }
  return {Representation(m.algebra(), std::move(dims), std::move(maps)), Morphism{bases}};
}

Submodule kernel(const Representation& from, const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& c : f.components) bases.push_back(kernel_basis(c));
  return subrepresentation(from, bases);
}

Submodule radical_submodule(const Representation& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Matrix> images;
    for (std::size_t k = 0; k < q.arrows().size(); ++k)
      if (q.arrow(k).target == v) images.push_back(m.map(k));
    bases.push_back(column_space_basis(hstack(images, m.dim(v))));
  }
  return subrepresentation(m, bases);
}

std::vector<std::size_t> top(const Representation& m) {
  const Submodule rad = radical_submodule(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.dims().size(); ++v) out.push_back(m.dim(v) - rad.module.dim(v));
  return out;
}

ProjectiveSum projective_sum(const AlgebraPtr& algebra, std::vector<std::size_t> vertices) {
  std::vector<Representation> parts;
  for (std::size_t v : vertices) parts.push_back(projective(algebra, v));
  return {std::move(vertices), direct_sum(parts, algebra)};
}

ProjectiveCover projective_cover_map(const Representation& m) {
  const AlgebraPtr& algebra = m.algebra();
  const std::size_t n = algebra->vertex_count();
  const Submodule rad = radical_submodule(m);

  std::vector<std::pair<std::size_t, Matrix>> generators;
  for (std::size_t v = 0; v < n; ++v) {
    Matrix span = rad.inclusion.components[v];
    std::size_t current = rank(span);
    for (std::size_t k = 0; k < m.dim(v) && current < m.dim(v); ++k) {
      Matrix unit(m.dim(v), 1);
      unit(k, 0) = 1;
      Matrix extended = hstack({span, unit}, m.dim(v));
      if (rank(extended) > current) {
        span = std::move(extended);
        ++current;
        generators.emplace_back(v, std::move(unit));
      }
    }
  }

  std::vector<std::size_t> vertices;
  for (const auto& g : generators) vertices.push_back(g.first);
  ProjectiveSum cover = projective_sum(algebra, vertices);

  Morphism map;
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Matrix> blocks;
    for (const auto& [i, gen] : generators)
      for (const Path& p : algebra->basis_between(i, w)) blocks.push_back(m.path_action(p) * gen);
    map.components.push_back(hstack(blocks, m.dim(w)));
  }
  Submodule ker = kernel(cover.module, map);
  return {std::move(cover), std::move(map), std::move(ker)};
}

ProjectivePresentation minimal_projective_presentation(const Representation& m) {
  ProjectiveCover c0 = projective_cover_map(m);
  ProjectiveCover c1 = projective_cover_map(c0.kernel.module);
  Morphism map = compose(c0.kernel.inclusion, c1.map);
  return {std::move(c1.cover), std::move(c0.cover), std::move(map), std::move(c0.map)};
}

std::vector<std::vector<Coordinates>> element_matrix(const ProjectiveSum& from, const ProjectiveSum& to,
                                                     const Morphism& f) {
  const AlgebraPtr& algebra = from.module.algebra();
  std::vector<std::vector<Coordinates>> out(to.vertices.size(), std::vector<Coordinates>(from.vertices.size()));
  for (std::size_t k = 0; k < from.vertices.size(); ++k) {
    const std::size_t j = from.vertices[k];
    std::size_t column = *algebra->basis_position(trivial_path(j));
    for (std::size_t prev = 0; prev < k; ++prev) column += algebra->basis_between(from.vertices[prev], j).size();
    std::size_t row = 0;
    for (std::size_t l = 0; l < to.vertices.size(); ++l) {
      const std::size_t len = algebra->basis_between(to.vertices[l], j).size();
      Coordinates coords(len);
      for (std::size_t r = 0; r < len; ++r) coords[r] = f.components[j](row + r, column);
      out[l][k] = std::move(coords);
      row += len;
    }
  }
  return out;
}

bool is_projective(const Representation& m) {
  return m.is_zero() || projective_cover_map(m).kernel.module.is_zero();
}

}  // namespace taumatch
