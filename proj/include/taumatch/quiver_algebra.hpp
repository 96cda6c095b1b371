#pragma once

// Bound quiver algebras A = KQ/I with an explicit path basis.
//
// Conventions: vertices are 0-based internally (the workspace format and all
// printed output are 1-based). A path lists its arrows in application order,
// first-applied first, so the composition written "ba" elsewhere (first a,
// then b) is the path {a, b}. Left modules are representations where an
// arrow a: i -> j acts as a linear map M_i -> M_j.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taumatch/exactlinalg.hpp"

namespace taumatch {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
 public:
  explicit Quiver(std::size_t vertex_count);

  /// Throws AlgebraError on a duplicate name or an out-of-range endpoint.
  std::size_t add_arrow(std::string name, std::size_t source, std::size_t target);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t index) const { return arrows_.at(index); }
  std::optional<std::size_t> find_arrow(const std::string& name) const;

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
};

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // arrow indices, application order

  std::size_t length() const { return arrows.size(); }
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Trivial path e_v.
Path trivial_path(std::size_t vertex);

/// `first` followed by `second`; nullopt when they do not compose.
std::optional<Path> concatenate(const Path& first, const Path& second);

struct RelationTerm {
  Scalar coefficient;
  std::vector<std::string> arrows;  // application order
};

struct Relation {
  std::vector<RelationTerm> terms;
};

/// Monomial relation: a single path with coefficient 1.
Relation monomial_relation(std::vector<std::string> arrows);

struct BuildOptions {
  std::size_t max_path_length = 64;
  /// Guard against non-admissible inputs whose path count explodes.
  std::size_t max_path_count = 20000;
};

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// Coordinates of an element of e_target A e_source with respect to
/// basis_between(source, target).
using Coordinates = std::vector<Scalar>;

class BoundQuiverAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }

  /// Total dimension of A.
  std::size_t dimension() const { return basis_.size(); }
  /// Smallest N such that every path of length N vanishes in A.
  std::size_t nilpotency_degree() const { return nilpotency_degree_; }

  const std::vector<Path>& basis() const { return basis_; }
  /// Basis paths from `source` to `target`, in a fixed order.
  const std::vector<Path>& basis_between(std::size_t source, std::size_t target) const;

  /// Normal form of a path, in coordinates over basis_between(p.source, p.target).
  Coordinates reduce(const Path& p) const;

  /// Index of a path inside basis_between, if it is itself a basis path.
  std::optional<std::size_t> basis_position(const Path& p) const;

  std::string path_name(const Path& p) const;

 private:
  friend AlgebraPtr build_algebra(const Quiver&, const std::vector<Relation>&, const BuildOptions&);
  BoundQuiverAlgebra(Quiver quiver, std::vector<Relation> relations);

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::size_t nilpotency_degree_ = 0;
  std::vector<Path> basis_;
  std::vector<std::vector<std::vector<Path>>> between_;  // [source][target]
  std::map<Path, Coordinates> normal_forms_;              // every path shorter than the degree
};

/// Degree-by-degree construction of the path basis. Throws AlgebraError
/// ("malformed relation ...", "not finite dimensional ...").
///
/// The ideal generated by the relations is assumed admissible. Truncation
/// at the first length N with every length-N path inside the ideal modulo
/// longer paths is then exact; for homogeneous relations (monomial ones in
/// particular) it is exact unconditionally.
AlgebraPtr build_algebra(const Quiver& quiver, const std::vector<Relation>& relations,
                         const BuildOptions& options = {});

/// Opposite algebra: every arrow and relation path reversed, names kept.
AlgebraPtr opposite(const BoundQuiverAlgebra& algebra, const BuildOptions& options = {});

}  // namespace taumatch
