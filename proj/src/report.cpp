#include "taumatch/report.hpp"

#include <iomanip>
#include <sstream>

namespace taumatch {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_dims(const std::vector<std::size_t>& dims) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < dims.size(); ++k) out << (k ? ", " : "") << dims[k];
  out << ')';
  return out.str();
}

std::string format_set(const std::vector<std::size_t>& set) {
  if (set.empty()) return "{}";
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < set.size(); ++k) out << (k ? ", " : "") << set[k] + 1;
  out << '}';
  return out.str();
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    entries.push_back(std::move(row));
  }
  return ordered_json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  Matrix m(rows, cols);
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw std::invalid_argument("matrix row count mismatch");
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw std::invalid_argument("matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(entries[r][c].get<std::string>());
  }
  return m;
}

ordered_json morphism_to_json(const Morphism& f) {
  ordered_json out = ordered_json::array();
  for (const auto& c : f.components) out.push_back(matrix_to_json(c));
  return out;
}

Morphism morphism_from_json(const json& j) {
  Morphism f;
  for (const auto& c : j) f.components.push_back(matrix_from_json(c));
  return f;
}

namespace {

ordered_json plain_matrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json one_based(const std::vector<std::size_t>& v) {
  ordered_json out = ordered_json::array();
  for (std::size_t x : v) out.push_back(x + 1);
  return out;
}

std::vector<std::size_t> zero_based(const json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    const auto v = x.get<std::size_t>();
    if (v == 0) throw std::invalid_argument("indices are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

ordered_json pair_summary_to_json(const PairSummary& p) {
  ordered_json summands = ordered_json::array();
  for (std::size_t k = 0; k < p.summands.size(); ++k) {
    const auto& s = p.summands[k];
    summands.push_back(ordered_json{{"index", k + 1}, {"name", s.name}, {"role", s.role}, {"dims", s.dims}});
  }
  return ordered_json{{"name", p.name}, {"status", p.status}, {"summands", std::move(summands)}};
}

PairSummary pair_summary_from_json(const json& j) {
  PairSummary p{j.at("name").get<std::string>(), j.at("status").get<std::string>(), {}};
  for (const auto& s : j.at("summands"))
    p.summands.push_back(
        {s.at("name").get<std::string>(), s.at("role").get<std::string>(), s.at("dims").get<std::vector<std::size_t>>()});
  return p;
}

ordered_json conditions_to_json(const std::vector<Condition>& cs) {
  ordered_json out = ordered_json::array();
  for (Condition c : cs) out.push_back(std::string(1, condition_letter(c)));
  return out;
}

std::vector<Condition> conditions_from_json(const json& j) {
  std::vector<Condition> out;
  for (const auto& c : j) out.push_back(parse_condition(c.get<std::string>().at(0)));
  return out;
}

std::string flag_letters(const EdgeLabel& label) {
  std::string out;
  for (std::size_t k = 0; k < label.flags.size(); ++k)
    if (label.flags[k].holds) out += condition_letter(static_cast<Condition>(k));
  return out.empty() ? "-" : out;
}

}  // namespace

ordered_json representation_to_json(const Representation& m) {
  ordered_json maps = ordered_json::object();
  const auto& q = m.algebra()->quiver();
  for (std::size_t k = 0; k < q.arrows().size(); ++k) maps[q.arrow(k).name] = plain_matrix(m.map(k));
  return ordered_json{{"dims", m.dims()}, {"maps", std::move(maps)}};
}

ordered_json to_json(const BijectionReport& report) {
  ordered_json out;
  out["schema"] = kReportSchema;
  out["kind"] = "bijection";
  out["left"] = pair_summary_to_json(report.left);
  out["right"] = pair_summary_to_json(report.right);
  out["n"] = report.fsets.n;
  ordered_json f = ordered_json::array();
  for (const auto& s : report.fsets.sets) f.push_back(one_based(s));
  out["F"] = std::move(f);
  ordered_json edges = ordered_json::array();
  for (std::size_t i = 0; i < report.fsets.n; ++i)
    for (std::size_t j = 0; j < report.fsets.n; ++j) {
      ordered_json edge{{"i", i + 1}, {"j", j + 1}};
      const EdgeLabel& label = report.fsets.labels[i][j];
      for (std::size_t k = 0; k < label.flags.size(); ++k) {
        ordered_json flag{{"holds", label.flags[k].holds}};
        if (!label.flags[k].witness.empty()) {
          ordered_json witness = ordered_json::array();
          for (const auto& w : label.flags[k].witness) witness.push_back(morphism_to_json(w));
          flag["witness"] = std::move(witness);
        }
        edge[std::string(1, condition_letter(static_cast<Condition>(k)))] = std::move(flag);
      }
      edges.push_back(std::move(edge));
    }
  out["edges"] = std::move(edges);
  ordered_json hall{{"ok", report.hall.ok}};
  if (!report.hall.ok) hall["deficient"] = one_based(report.hall.deficient);
  out["hall"] = std::move(hall);
  out["matching"] = ordered_json{{"permutation", one_based(report.matching)},
                                 {"cycles", cycle_notation(report.matching)},
                                 {"conditions", conditions_to_json(report.matched_conditions)}};
  if (report.all) {
    ordered_json perms = ordered_json::array(), cycles = ordered_json::array();
    for (const auto& p : report.all->permutations) {
      perms.push_back(one_based(p));
      cycles.push_back(cycle_notation(p));
    }
    out["all_matchings"] = ordered_json{
        {"permutations", std::move(perms)}, {"cycles", std::move(cycles)}, {"truncated", report.all->truncated}};
  }
  if (report.restricted) {
    ordered_json sets = ordered_json::array();
    for (const auto& s : *report.restricted) sets.push_back(one_based(s));
    out["restricted"] = ordered_json{{"drop", conditions_to_json(report.dropped)}, {"sets", std::move(sets)}};
  }
  return out;
}

BijectionReport bijection_report_from_json(const json& j) {
  if (j.at("schema").get<int>() != kReportSchema) throw std::invalid_argument("unsupported report schema");
  if (j.at("kind").get<std::string>() != "bijection") throw std::invalid_argument("not a bijection report");
  BijectionReport r;
  r.left = pair_summary_from_json(j.at("left"));
  r.right = pair_summary_from_json(j.at("right"));
  r.fsets.n = j.at("n").get<std::size_t>();
  for (const auto& s : j.at("F")) r.fsets.sets.push_back(zero_based(s));
  r.fsets.labels.assign(r.fsets.n, std::vector<EdgeLabel>(r.fsets.n));
  for (const auto& edge : j.at("edges")) {
    const auto i = edge.at("i").get<std::size_t>() - 1;
    const auto jj = edge.at("j").get<std::size_t>() - 1;
    EdgeLabel& label = r.fsets.labels.at(i).at(jj);
    for (std::size_t k = 0; k < label.flags.size(); ++k) {
      const auto& flag = edge.at(std::string(1, condition_letter(static_cast<Condition>(k))));
      label.flags[k].holds = flag.at("holds").get<bool>();
      if (flag.contains("witness"))
        for (const auto& w : flag["witness"]) label.flags[k].witness.push_back(morphism_from_json(w));
    }
  }
  r.hall.ok = j.at("hall").at("ok").get<bool>();
  if (j.at("hall").contains("deficient")) r.hall.deficient = zero_based(j["hall"]["deficient"]);
  r.matching = zero_based(j.at("matching").at("permutation"));
  r.matched_conditions = conditions_from_json(j.at("matching").at("conditions"));
  if (j.contains("all_matchings")) {
    MatchingList all;
    for (const auto& p : j["all_matchings"].at("permutations")) all.permutations.push_back(zero_based(p));
    all.truncated = j["all_matchings"].at("truncated").get<bool>();
    r.all = std::move(all);
  }
  if (j.contains("restricted")) {
    r.dropped = conditions_from_json(j["restricted"].at("drop"));
    IndexSets sets;
    for (const auto& s : j["restricted"].at("sets")) sets.push_back(zero_based(s));
    r.restricted = std::move(sets);
  }
  return r;
}

ordered_json pair_verification_to_json(const SupportPair& pair, const PairVerification& v) {
  ordered_json out;
  out["schema"] = kReportSchema;
  out["kind"] = "check-pair";
  out["pair"] = pair.name;
  out["status"] = to_string(v.status);
  ordered_json summands = ordered_json::array();
  std::size_t index = 1;
  for (const auto* part : {&pair.t_summands, &pair.p_summands})
    for (const auto& s : *part)
      summands.push_back(ordered_json{{"index", index++},
                                      {"name", s.name},
                                      {"role", part == &pair.t_summands ? "T" : "P"},
                                      {"dims", s.module.dims()}});
  out["summands"] = std::move(summands);
  ordered_json checks = ordered_json::array();
  for (PairCheck c : {PairCheck::Validates, PairCheck::Indecomposable, PairCheck::Basic, PairCheck::Projective,
                      PairCheck::TauRigid, PairCheck::HomPT, PairCheck::SummandCount}) {
    std::string state = "passed";
    if (v.failed_check) {
      if (c == *v.failed_check) state = "failed";
      else if (static_cast<int>(c) > static_cast<int>(*v.failed_check)) state = "not run";
    }
    static const char* kNames[] = {"validates", "indecomposable", "basic", "projective",
                                   "tau-rigid", "hom-p-t-zero", "summand-count"};
    checks.push_back(ordered_json{{"check", kNames[static_cast<int>(c)]}, {"result", state}});
  }
  out["checks"] = std::move(checks);
  if (v.failed_check) {
    out["failed_check"] = to_string(*v.failed_check);
    out["message"] = v.message;
  }
  out["summand_count"] = v.summand_count;
  out["vertex_count"] = v.vertex_count;
  if (!v.projective_vertices.empty()) out["projective_vertices"] = one_based(v.projective_vertices);
  if (v.witness) out["witness"] = morphism_to_json(*v.witness);
  return out;
}

std::string render_text(const Representation& m) {
  std::ostringstream out;
  out << "dims " << format_dims(m.dims()) << '\n';
  const auto& q = m.algebra()->quiver();
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    const Matrix& mat = m.map(k);
    out << "  " << a.name << ": " << a.source + 1 << " -> " << a.target + 1 << "  ";
    if (mat.empty()) {
      out << "(" << mat.rows() << "x" << mat.cols() << ")\n";
      continue;
    }
    out << '[';
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      out << (r ? "; " : "");
      for (std::size_t c = 0; c < mat.cols(); ++c) out << (c ? " " : "") << to_string(mat(r, c));
    }
    out << "]\n";
  }
  return out.str();
}

std::string render_text(const SupportPair& pair, const PairVerification& v) {
  std::ostringstream out;
  out << "Pair '" << pair.name << "': " << to_string(v.status);
  if (v.failed_check) out << " (" << to_string(*v.failed_check) << ": " << v.message << ")";
  out << '\n';
  std::size_t index = 1;
  for (const auto* part : {&pair.t_summands, &pair.p_summands})
    for (const auto& s : *part)
      out << "  " << std::setw(2) << index++ << "  " << (part == &pair.t_summands ? 'T' : 'P') << "  "
          << std::left << std::setw(10) << s.name << std::right << " dims " << format_dims(s.module.dims()) << '\n';
  out << "  summands " << v.summand_count << ", simples " << v.vertex_count << '\n';
  return out.str();
}

std::string render_text(const BijectionReport& report) {
  std::ostringstream out;
  for (const auto* p : {&report.left, &report.right}) {
    out << (p == &report.left ? "Left" : "Right") << " pair '" << p->name << "': " << p->status << '\n';
    for (std::size_t k = 0; k < p->summands.size(); ++k)
      out << "  " << (p == &report.left ? 'X' : 'Y') << k + 1 << "  " << p->summands[k].role << "  " << std::left
          << std::setw(10) << p->summands[k].name << std::right << " dims " << format_dims(p->summands[k].dims)
          << '\n';
  }
  const std::size_t n = report.fsets.n;
  out << "\nConditions per edge (row i = X_i, column j = Y_j)\n     ";
  for (std::size_t j = 0; j < n; ++j) out << std::setw(6) << j + 1;
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << "  " << std::setw(3) << i + 1;
    for (std::size_t j = 0; j < n; ++j) out << std::setw(6) << flag_letters(report.fsets.labels[i][j]);
    out << '\n';
  }
  out << "\nCandidate sets\n";
  for (std::size_t i = 0; i < n; ++i) out << "  F(" << i + 1 << ") = " << format_set(report.fsets.sets[i]) << '\n';
  out << "\nHall condition: " << (report.hall.ok ? "ok" : "violated by " + format_set(report.hall.deficient)) << '\n';
  out << "\nMatching s = " << cycle_notation(report.matching) << '\n';
  for (std::size_t i = 0; i < n; ++i)
    out << "  X" << i + 1 << " -> Y" << report.matching[i] + 1 << "  (" << report.left.summands[i].name << " -> "
        << report.right.summands[report.matching[i]].name << ")  via ("
        << condition_letter(report.matched_conditions[i]) << ")\n";
  if (report.all) {
    out << "\nAll matchings (" << report.all->permutations.size() << (report.all->truncated ? ", truncated" : "")
        << "):";
    for (const auto& p : report.all->permutations) out << ' ' << cycle_notation(p);
    out << '\n';
  }
  if (report.restricted) {
    out << "\nRestricted sets without condition";
    for (Condition c : report.dropped) out << " (" << condition_letter(c) << ")";
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) out << "  " << i + 1 << ": " << format_set((*report.restricted)[i]) << '\n';
  }
  return out.str();
}

}  // namespace taumatch
