#pragma once

// Homological bookkeeping for representations: Hom spaces, endomorphism
// rings, indecomposability and isomorphism certificates, radicals, tops,
// projective covers and minimal projective presentations.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "taumatch/representation.hpp"

namespace taumatch {

struct HomSpace {
  Representation source;
  Representation target;
  std::vector<Morphism> basis;

  std::size_t dimension() const { return basis.size(); }
};

HomSpace hom_basis(const Representation& from, const Representation& to);
std::size_t hom_dim(const Representation& from, const Representation& to);

enum class Verdict { Yes, No, Undetermined };

const char* to_string(Verdict v);

/// End(M) with its Jacobson radical (Dickson's trace criterion over Q).
struct EndAlgebraInfo {
  std::size_t dimension = 0;
  std::size_t radical_dimension = 0;
  Verdict local = Verdict::Undetermined;
  /// Set when local == No: a nontrivial idempotent e (1 - e is the other half).
  std::optional<Morphism> idempotent;
};

/// Basis of End(M) with multiplication and radical membership.
class EndomorphismRing {
 public:
  explicit EndomorphismRing(const Representation& m);

  const Representation& module() const { return module_; }
  const std::vector<Morphism>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t radical_dimension() const { return radical_.cols(); }

  /// Coordinates of an endomorphism in basis(); throws if it is not one.
  std::vector<Scalar> coordinates(const Morphism& f) const;
  /// x lies in rad End(M) iff tr(L_{x y}) = 0 for every y.
  bool in_radical(const Morphism& f) const;
  /// Columns span the radical, in coordinates.
  const Matrix& radical() const { return radical_; }

 private:
  Representation module_;
  std::vector<Morphism> basis_;
  Matrix vectorized_;           // column k = vec(basis_[k])
  Matrix gram_;                 // gram_(k, l) = tr(L_{b_k b_l})
  Matrix radical_;
};

EndAlgebraInfo end_info(const Representation& m);

/// Throws RepresentationError("zero module") for the zero representation.
Verdict is_indecomposable(const Representation& m);

struct IsomorphismCertificate {
  bool isomorphic = false;
  /// When isomorphic: phi: M -> N and psi: N -> M with psi * phi outside rad End(M).
  std::optional<Morphism> forward;
  std::optional<Morphism> backward;
};

/// Both inputs must be certified indecomposable (Verdict::Yes); throws
/// RepresentationError("inputs not certified indecomposable") otherwise.
IsomorphismCertificate isomorphism_certificate(const Representation& m, const Representation& n);
bool is_isomorphic(const Representation& m, const Representation& n);
/// Same certificate without re-certifying; callers guarantee both inputs
/// already passed is_indecomposable with Verdict::Yes.
IsomorphismCertificate compare_indecomposables(const Representation& m, const Representation& n);

/// Subrepresentation with its inclusion.
struct Submodule {
  Representation module;
  Morphism inclusion;
};

/// Subrepresentation spanned at each vertex by the columns of bases[v]
/// (which must be independent and arrow-stable).
Submodule subrepresentation(const Representation& m, const std::vector<Matrix>& bases);

Submodule kernel(const Representation& from, const Morphism& f);

/// rad M at v = sum of images of arrows ending at v.
Submodule radical_submodule(const Representation& m);

/// Multiplicity of S(v) in the top of M, per vertex.
std::vector<std::size_t> top(const Representation& m);

/// Direct sum of standard projectives P(vertices[0]) + P(vertices[1]) + ...
struct ProjectiveSum {
  std::vector<std::size_t> vertices;
  Representation module;
};

ProjectiveSum projective_sum(const AlgebraPtr& algebra, std::vector<std::size_t> vertices);

struct ProjectiveCover {
  ProjectiveSum cover;
  Morphism map;  // cover.module -> M, surjective
  Submodule kernel;
};

/// Generators are the first standard basis vectors completing the radical
/// at each vertex, in vertex order.
ProjectiveCover projective_cover_map(const Representation& m);

struct ProjectivePresentation {
  ProjectiveSum p1;
  ProjectiveSum p0;
  Morphism map;    // p1 -> p0
  Morphism cover;  // p0 -> M
};

ProjectivePresentation minimal_projective_presentation(const Representation& m);

/// Element matrix of a morphism between standard projective sums: entry
/// [l][k] holds coordinates over basis_between(to.vertices[l], from.vertices[k])
/// of the image of the generator of summand k in summand l.
std::vector<std::vector<Coordinates>> element_matrix(const ProjectiveSum& from, const ProjectiveSum& to,
                                                     const Morphism& f);

/// True iff the projective cover of M is an isomorphism.
bool is_projective(const Representation& m);

}  // namespace taumatch
