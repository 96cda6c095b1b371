#include "taumatch/artrans.hpp"

#include "taumatch/standard_modules.hpp"

namespace taumatch {

NakayamaImage nakayama(const ProjectiveSum& from, const ProjectiveSum& to, const Morphism& f) {
  if (!is_morphism(from.module, to.module, f))
    throw RepresentationError("not presented as a sum of standard projectives");
  const AlgebraPtr& algebra = from.module.algebra();
  const auto x = element_matrix(from, to, f);

  std::vector<Representation> src_parts, dst_parts;
  for (std::size_t j : from.vertices) src_parts.push_back(injective(algebra, j));
  for (std::size_t i : to.vertices) dst_parts.push_back(injective(algebra, i));
  Representation source = direct_sum(src_parts, algebra);
  Representation target = direct_sum(dst_parts, algebra);

  // Block (l, k) at vertex v: row y in paths v -> i_l, column q in paths
  // v -> j_k, entry = coefficient of q in (y then x_lk).
  Morphism map;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) {
    Matrix comp(target.dim(v), source.dim(v));
    std::size_t row0 = 0;
    for (std::size_t l = 0; l < to.vertices.size(); ++l) {
      const auto& ys = algebra->basis_between(v, to.vertices[l]);
      std::size_t col0 = 0;
      for (std::size_t k = 0; k < from.vertices.size(); ++k) {
        const auto& ps = algebra->basis_between(to.vertices[l], from.vertices[k]);
        for (std::size_t r = 0; r < ys.size(); ++r)
          for (std::size_t pi = 0; pi < ps.size(); ++pi) {
            const Scalar& coeff = x[l][k][pi];
            if (coeff == 0) continue;
            const Coordinates image = algebra->reduce(*concatenate(ys[r], ps[pi]));
            for (std::size_t c = 0; c < image.size(); ++c) comp(row0 + r, col0 + c) += coeff * image[c];
          }
        col0 += algebra->basis_between(v, from.vertices[k]).size();
      }
      row0 += ys.size();
    }
    map.components.push_back(std::move(comp));
  }
  return {std::move(source), std::move(target), std::move(map)};
}

TauResult tau(const Representation& m) {
  const ProjectivePresentation pres = minimal_projective_presentation(m);
  NakayamaImage nu = nakayama(pres.p1, pres.p0, pres.map);
  Submodule ker = kernel(nu.source, nu.map);
  return {std::move(ker.module), std::move(nu.source), std::move(nu.target), std::move(nu.map),
          std::move(ker.inclusion)};
}

Representation tau_minus(const Representation& m) {
  const AlgebraPtr op = opposite(*m.algebra());
  const Representation translated = tau(dual_rep(m, op)).translate;
  return dual_rep(translated, m.algebra());
}

RigidityResult is_tau_rigid(const Representation& m) {
  RigidityResult result;
  if (m.is_zero()) return result;
  const HomSpace h = hom_basis(m, tau(m).translate);
  if (h.dimension() > 0) {
    result.rigid = false;
    result.witness = h.basis.front();
    result.failed_condition = "Hom(T, tau T)";
  }
  return result;
}

RigidityResult is_tau_rigid_pair(const Representation& t, const Representation& p) {
  if (!is_projective(p)) throw RepresentationError("second argument not projective");
  RigidityResult result = is_tau_rigid(t);
  if (!result.rigid) return result;
  const HomSpace h = hom_basis(p, t);
  if (h.dimension() > 0) {
    result.rigid = false;
    result.witness = h.basis.front();
    result.failed_condition = "Hom(P, T)";
  }
  return result;
}

const char* to_string(PairStatus s) {
  switch (s) {
    case PairStatus::SupportTauTilting: return "support tau-tilting";
    case PairStatus::TauRigidPairOnly: return "tau-rigid pair only";
    case PairStatus::Failed: return "failed";
  }
  return "?";
}

const char* to_string(PairCheck c) {
  switch (c) {
    case PairCheck::Validates: return "invalid module";
    case PairCheck::Indecomposable: return "not indecomposable";
    case PairCheck::Basic: return "not basic";
    case PairCheck::Projective: return "not projective";
    case PairCheck::TauRigid: return "not tau-rigid";
    case PairCheck::HomPT: return "Hom(P, T) nonzero";
    case PairCheck::SummandCount: return "summand count differs from vertex count";
  }
  return "?";
}

PairVerification verify_support_pair(const SupportPair& pair) {
  PairVerification out;
  std::vector<const NamedModule*> all;
  for (const auto& s : pair.t_summands) all.push_back(&s);
  for (const auto& s : pair.p_summands) all.push_back(&s);
  out.summand_count = all.size();
  out.vertex_count = pair.algebra ? pair.algebra->vertex_count() : 0;

  auto fail = [&](PairCheck check, std::string message) {
    out.status = PairStatus::Failed;
    out.failed_check = check;
    out.message = std::move(message);
    return out;
  };

  if (!pair.algebra) return fail(PairCheck::Validates, "pair has no algebra");
  for (const auto* s : all) {
    if (s->module.algebra() != pair.algebra) return fail(PairCheck::Validates, s->name + " lives over another algebra");
    const ValidationReport report = validate(s->module);
    if (!report.ok()) return fail(PairCheck::Validates, s->name + ": " + report.violations.front().message);
  }
  for (const auto* s : all) {
    if (s->module.is_zero()) return fail(PairCheck::Indecomposable, s->name + " is the zero module");
    const Verdict v = is_indecomposable(s->module);
    if (v != Verdict::Yes)
      return fail(PairCheck::Indecomposable, s->name + ": indecomposable = " + to_string(v));
  }
  out.isomorphism_table.assign(all.size(), std::vector<bool>(all.size(), false));
  for (std::size_t i = 0; i < all.size(); ++i) {
    out.isomorphism_table[i][i] = true;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const bool iso = compare_indecomposables(all[i]->module, all[j]->module).isomorphic;
      out.isomorphism_table[i][j] = out.isomorphism_table[j][i] = iso;
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (out.isomorphism_table[i][j])
        return fail(PairCheck::Basic, all[i]->name + " and " + all[j]->name + " are isomorphic");
  for (const auto& s : pair.p_summands) {
    std::optional<std::size_t> vertex;
    for (std::size_t v = 0; v < pair.algebra->vertex_count() && !vertex; ++v)
      if (compare_indecomposables(projective(pair.algebra, v), s.module).isomorphic) vertex = v;
    if (!vertex) return fail(PairCheck::Projective, s.name + " is not isomorphic to any P(i)");
    out.projective_vertices.push_back(*vertex);
  }

  std::vector<Representation> ts, ps;
  for (const auto& s : pair.t_summands) ts.push_back(s.module);
  for (const auto& s : pair.p_summands) ps.push_back(s.module);
  const Representation t = direct_sum(ts, pair.algebra);
  const Representation p = direct_sum(ps, pair.algebra);
  const RigidityResult rigid = is_tau_rigid(t);
  if (!rigid.rigid) {
    out.witness = rigid.witness;
    return fail(PairCheck::TauRigid, "Hom(T, tau T) is nonzero");
  }
  const HomSpace pt = hom_basis(p, t);
  if (pt.dimension() > 0) {
    out.witness = pt.basis.front();
    return fail(PairCheck::HomPT, "Hom(P, T) has dimension " + std::to_string(pt.dimension()));
  }
  if (all.size() != out.vertex_count) {
    out.status = PairStatus::TauRigidPairOnly;
    out.failed_check = PairCheck::SummandCount;
    out.message = std::to_string(all.size()) + " summands for " + std::to_string(out.vertex_count) + " simples";
    return out;
  }
  out.status = PairStatus::SupportTauTilting;
  return out;
}

const NamedModule& VerifiedPair::summand(std::size_t i) const {
  if (i < pair.t_summands.size()) return pair.t_summands.at(i);
  return pair.p_summands.at(i - pair.t_summands.size());
}

VerificationError::VerificationError(std::string pair_name, PairVerification verification)
    : std::runtime_error("pair '" + pair_name + "' " +
                         (verification.failed_check ? std::string(to_string(*verification.failed_check)) + ": "
                                                    : std::string()) +
                         verification.message),
      pair_name_(std::move(pair_name)),
      verification_(std::move(verification)) {}

VerifiedPair require_support_tau_tilting(const SupportPair& pair) {
  PairVerification v = verify_support_pair(pair);
  if (v.status != PairStatus::SupportTauTilting) throw VerificationError(pair.name, std::move(v));
  return {pair, std::move(v)};
}

}  // namespace taumatch
