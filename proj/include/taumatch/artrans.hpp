#pragma once

// Auslander-Reiten translation through the Nakayama functor, and the
// rigidity predicates built on it: tau-rigid modules, tau-rigid pairs and
// basic support tau-tilting pairs.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taumatch/repcore.hpp"

namespace taumatch {

/// nu(f) : nu(from) -> nu(to) for a map f between standard projective sums,
/// where nu(P(i)) = I(i) and the injective sums keep the summand order.
struct NakayamaImage {
  Representation source;  // injective sum for `from`
  Representation target;  // injective sum for `to`
  Morphism map;
};

/// Throws RepresentationError("not presented as a sum of standard
/// projectives") when f does not map from.module to to.module.
NakayamaImage nakayama(const ProjectiveSum& from, const ProjectiveSum& to, const Morphism& f);

struct TauResult {
  Representation translate;
  Representation nu_p1;
  Representation nu_p0;
  Morphism connecting_map;  // nu_p1 -> nu_p0
  Morphism inclusion;       // translate -> nu_p1
};

/// tau M = kernel of nu(P1) -> nu(P0) for the minimal presentation P1 -> P0 -> M.
TauResult tau(const Representation& m);

/// tau^- M = D tau_{A^op} D M.
Representation tau_minus(const Representation& m);

struct RigidityResult {
  bool rigid = true;
  /// A nonzero morphism violating rigidity when rigid == false.
  std::optional<Morphism> witness;
  /// Which Hom space the witness lives in: "Hom(T, tau T)" or "Hom(P, T)".
  std::string failed_condition;
};

/// Hom(M, tau M) = 0.
RigidityResult is_tau_rigid(const Representation& m);

/// T tau-rigid and Hom(P, T) = 0. Throws RepresentationError("second
/// argument not projective") when P is not projective.
RigidityResult is_tau_rigid_pair(const Representation& t, const Representation& p);

struct NamedModule {
  std::string name;
  Representation module;
};

/// A pair (T, P) given as explicit lists of indecomposable summands.
struct SupportPair {
  std::string name;
  AlgebraPtr algebra;
  std::vector<NamedModule> t_summands;
  std::vector<NamedModule> p_summands;
};

enum class PairStatus { SupportTauTilting, TauRigidPairOnly, Failed };

const char* to_string(PairStatus s);

/// Checks are run in this order; the first one that fails is reported.
enum class PairCheck { Validates, Indecomposable, Basic, Projective, TauRigid, HomPT, SummandCount };

const char* to_string(PairCheck c);

struct PairVerification {
  PairStatus status = PairStatus::Failed;
  std::optional<PairCheck> failed_check;
  std::string message;  // human-readable detail for the failed check
  std::size_t summand_count = 0;
  std::size_t vertex_count = 0;
  /// Pairwise non-isomorphism table over T summands then P summands:
  /// entry [i][j] is true when summand i is isomorphic to summand j.
  std::vector<std::vector<bool>> isomorphism_table;
  /// For every P summand, the vertex v with summand ~ P(v).
  std::vector<std::size_t> projective_vertices;
  std::optional<Morphism> witness;
};

PairVerification verify_support_pair(const SupportPair& pair);

/// A pair that passed verification as support tau-tilting.
struct VerifiedPair {
  SupportPair pair;
  PairVerification verification;

  std::size_t size() const { return pair.t_summands.size() + pair.p_summands.size(); }
  /// Summand i in T-then-P order (0-based).
  const NamedModule& summand(std::size_t i) const;
  bool in_projective_part(std::size_t i) const { return i >= pair.t_summands.size(); }
  const AlgebraPtr& algebra() const { return pair.algebra; }
};

class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string pair_name, PairVerification verification);
  const std::string& pair_name() const { return pair_name_; }
  const PairVerification& verification() const { return verification_; }

 private:
  std::string pair_name_;
  PairVerification verification_;
};

/// Throws VerificationError unless the pair is basic support tau-tilting.
VerifiedPair require_support_tau_tilting(const SupportPair& pair);

}  // namespace taumatch
