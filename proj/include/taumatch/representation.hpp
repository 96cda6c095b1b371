#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taumatch/exactlinalg.hpp"
#include "taumatch/quiver_algebra.hpp"

namespace taumatch {

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite-dimensional left A-module as a quiver representation: one
/// vector space per vertex and, per arrow a: i -> j, a (dim_j x dim_i) matrix.
///
/// The plain constructor stores its arguments as given; use checked() for
/// untrusted input. Every operation in this library returns representations
/// that satisfy the relations.
class Representation {
 public:
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  /// Validates shapes and relations; throws RepresentationError on failure.
  static Representation checked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);
  static Representation zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t vertex) const { return dims_.at(vertex); }
  std::size_t total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }

  const std::vector<Matrix>& maps() const { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }

  /// Linear map M_source -> M_target of a path (identity for trivial paths).
  Matrix path_action(const Path& p) const;

  friend bool operator==(const Representation& lhs, const Representation& rhs) {
    return lhs.algebra_ == rhs.algebra_ && lhs.dims_ == rhs.dims_ && lhs.maps_ == rhs.maps_;
  }

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

struct Violation {
  std::string message;
  std::optional<std::size_t> relation;  // index into algebra().relations()
  Matrix evaluation;                    // nonzero value of the violated relation
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Shape check of every arrow matrix, then evaluation of every relation.
ValidationReport validate(const Representation& m);

/// Module homomorphism as one matrix per vertex, component v: M_v -> N_v.
struct Morphism {
  std::vector<Matrix> components;

  bool is_zero() const;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// `after` composed with `before` (before applied first).
Morphism compose(const Morphism& after, const Morphism& before);
Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(const Representation& from, const Representation& to);
Morphism linear_combination(const std::vector<Morphism>& terms, const std::vector<Scalar>& coeffs);
/// Commutes with every arrow and has the right shapes.
bool is_morphism(const Representation& from, const Representation& to, const Morphism& f);

/// Block-diagonal direct sum; all summands must share one algebra.
/// An empty list needs the algebra passed explicitly.
Representation direct_sum(const std::vector<Representation>& summands, const AlgebraPtr& algebra);
Representation direct_sum(const std::vector<Representation>& summands);

/// Vector-space dual D M as a representation of `target`, which must be the
/// opposite quiver of M's algebra (same arrow order, reversed endpoints).
/// Applying it twice returns M unchanged.
Representation dual_rep(const Representation& m, const AlgebraPtr& target);

}  // namespace taumatch
