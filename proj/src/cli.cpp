#include "taumatch/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "taumatch/report.hpp"
#include "taumatch/standard_modules.hpp"
#include "taumatch/workspace.hpp"

namespace taumatch::cli {

using nlohmann::ordered_json;

namespace {

struct Settings {
  std::string workspace;
  std::string json_path;
  std::size_t max_path_length = BuildOptions{}.max_path_length;
  std::size_t limit = BijectionOptions{}.limit;
  bool all = false;
  std::vector<std::string> drop;
  std::string module;
  std::string pair;
  std::string left, right;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes JSON to the requested sink. Returns true when the text rendering
// should be suppressed ("--json -").
bool emit_json(const Settings& s, const ordered_json& doc, std::ostream& out) {
  if (s.json_path.empty()) return false;
  const std::string text = doc.dump(2) + "\n";
  if (s.json_path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(s.json_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + s.json_path + "'");
  file << text;
  return false;
}

ordered_json envelope(const char* kind) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = kind;
  return doc;
}

// Names of declared and standard modules isomorphic to an indecomposable m.
std::vector<std::string> isomorphic_names(const WorkspaceSpec& ws, const Representation& m) {
  std::vector<std::string> names;
  if (m.is_zero() || is_indecomposable(m) != Verdict::Yes) return names;
  auto consider = [&](const std::string& name, const Representation& candidate) {
    if (candidate.dims() != m.dims()) return;
    if (is_indecomposable(candidate) != Verdict::Yes) return;
    if (compare_indecomposables(m, candidate).isomorphic) names.push_back(name);
  };
  for (const auto& named : ws.modules) consider(named.name, named.module);
  const std::size_t n = ws.algebra->vertex_count();
  for (const char* prefix : {"P", "I", "S"})
    for (std::size_t v = 1; v <= n; ++v) {
      const std::string name = prefix + std::to_string(v);
      consider(name, standard_module(ws.algebra, *parse_standard_name(name, n)));
    }
  return names;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

const SupportPair& lookup_pair(const WorkspaceSpec& ws, const std::string& name) {
  const SupportPair* p = ws.find_pair(name);
  if (!p) throw ParseError("<command line>", "unknown pair '" + name + "'");
  return *p;
}

BijectionOptions bijection_options(const Settings& s) {
  BijectionOptions o;
  o.enumerate_all = s.all;
  o.limit = s.limit;
  for (const auto& d : s.drop) {
    if (d.size() != 1 || (d[0] != 'c' && d[0] != 'd'))
      throw UsageError("--drop expects 'c' or 'd', got '" + d + "'");
    o.drop.push_back(parse_condition(d[0]));
  }
  return o;
}

int cmd_tau(const Settings& s, const WorkspaceSpec& ws, std::ostream& out) {
  const NamedModule m = ws.resolve_module(s.module);
  const TauResult result = tau(m.module);
  const Representation& t = result.translate;
  const auto names = isomorphic_names(ws, t);

  ordered_json doc = envelope("tau");
  doc["module"] = m.name;
  doc["zero"] = t.is_zero();
  doc["translate"] = representation_to_json(t);
  doc["isomorphic_to"] = names;
  if (emit_json(s, doc, out)) return kOk;

  if (t.is_zero()) {
    out << "tau(" << m.name << ") = 0\n";
    return kOk;
  }
  out << "tau(" << m.name << "):\n" << render_text(t);
  if (!names.empty()) out << "isomorphic to " << joined(names) << '\n';
  return kOk;
}

int cmd_check_rigid(const Settings& s, const WorkspaceSpec& ws, std::ostream& out) {
  const NamedModule m = ws.resolve_module(s.module);
  const RigidityResult r = is_tau_rigid(m.module);

  ordered_json doc = envelope("check-rigid");
  doc["module"] = m.name;
  doc["rigid"] = r.rigid;
  if (!r.rigid) doc["failed_condition"] = r.failed_condition;
  if (r.witness) doc["witness"] = morphism_to_json(*r.witness);
  if (!emit_json(s, doc, out)) {
    out << m.name << ": " << (r.rigid ? "tau-rigid" : "not tau-rigid") << '\n';
    if (!r.rigid) out << "  " << r.failed_condition << '\n';
  }
  return r.rigid ? kOk : kVerification;
}

int cmd_check_pair(const Settings& s, const WorkspaceSpec& ws, std::ostream& out) {
  const SupportPair& pair = lookup_pair(ws, s.pair);
  const PairVerification v = verify_support_pair(pair);
  if (!emit_json(s, pair_verification_to_json(pair, v), out)) out << render_text(pair, v);
  return v.status == PairStatus::SupportTauTilting ? kOk : kVerification;
}

int cmd_bijection(const Settings& s, const WorkspaceSpec& ws, std::ostream& out, std::ostream& err) {
  const BijectionOptions options = bijection_options(s);
  const SupportPair& left = lookup_pair(ws, s.left);
  const SupportPair& right = lookup_pair(ws, s.right);
  BijectionReport report;
  try {
    report = build_report(left, right, options);
  } catch (const VerificationError& e) {
    err << "error: pair '" << e.pair_name() << "' is not a basic support tau-tilting pair: " << e.verification().message
        << '\n';
    return kVerification;
  }
  if (!emit_json(s, to_json(report), out)) out << render_text(report);
  return kOk;
}

int cmd_report(const Settings& s, const WorkspaceSpec& ws, std::ostream& out) {
  const BijectionOptions options = bijection_options(s);
  std::vector<VerifiedPair> verified;
  ordered_json pairs = ordered_json::array();
  std::string text;
  bool all_verified = true;
  for (const auto& pair : ws.pairs) {
    const PairVerification v = verify_support_pair(pair);
    pairs.push_back(pair_verification_to_json(pair, v));
    text += render_text(pair, v);
    if (v.status == PairStatus::SupportTauTilting) verified.push_back({pair, v});
    else all_verified = false;
  }
  ordered_json bijections = ordered_json::array();
  for (const auto& l : verified)
    for (const auto& r : verified) {
      const BijectionReport report = build_report(l, r, options);
      bijections.push_back(to_json(report));
      text += "\n== " + l.pair.name + " -> " + r.pair.name + " ==\n" + render_text(report);
    }

  ordered_json doc = envelope("report");
  doc["workspace"] = ws.name;
  doc["pairs"] = std::move(pairs);
  doc["bijections"] = std::move(bijections);
  if (!emit_json(s, doc, out)) out << text;
  return all_verified ? kOk : kVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Support tau-tilting pairs and the summand bijection between them", "taumatch"};
  app.require_subcommand(1);
  app.add_option("-w,--workspace", s.workspace, "Workspace JSON file")->required();
  app.add_option("--json", s.json_path, "Write the JSON report to this file ('-' for stdout only)");
  app.add_option("--max-path-length", s.max_path_length, "Longest path considered when building the algebra")
      ->check(CLI::PositiveNumber);

  auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate of a module")->fallthrough();
  tau_cmd->add_option("module", s.module, "Module name or P<i>/I<i>/S<i>")->required();

  auto* rigid_cmd = app.add_subcommand("check-rigid", "Decide whether a module is tau-rigid")->fallthrough();
  rigid_cmd->add_option("module", s.module, "Module name or P<i>/I<i>/S<i>")->required();

  auto* pair_cmd = app.add_subcommand("check-pair", "Verify a basic support tau-tilting pair")->fallthrough();
  pair_cmd->add_option("pair", s.pair, "Pair name")->required();

  auto* bij_cmd = app.add_subcommand("bijection", "Candidate sets and a matching between two pairs")->fallthrough();
  bij_cmd->add_option("left", s.left, "Left pair")->required();
  bij_cmd->add_option("right", s.right, "Right pair")->required();

  auto* report_cmd = app.add_subcommand("report", "Verify every pair and match every ordered pair of them")
                         ->fallthrough();

  for (auto* sub : {bij_cmd, report_cmd}) {
    sub->add_flag("--all", s.all, "Enumerate every admissible permutation");
    sub->add_option("--drop", s.drop, "Drop condition c or d from the candidate sets (repeatable)");
    sub->add_option("--limit", s.limit, "Cap on enumerated permutations")->check(CLI::PositiveNumber);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    WorkspaceOptions options;
    options.build.max_path_length = s.max_path_length;
    const WorkspaceSpec ws = parse_workspace(s.workspace, options);
    if (*tau_cmd) return cmd_tau(s, ws, out);
    if (*rigid_cmd) return cmd_check_rigid(s, ws, out);
    if (*pair_cmd) return cmd_check_pair(s, ws, out);
    if (*bij_cmd) return cmd_bijection(s, ws, out, err);
    return cmd_report(s, ws, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return kVerification;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace taumatch::cli
