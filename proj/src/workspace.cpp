#include "taumatch/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "taumatch/standard_modules.hpp"

namespace taumatch {

using nlohmann::ordered_json;

ParseError::ParseError(std::string location, const std::string& message)
    : std::runtime_error(location + ": " + message), location_(std::move(location)) {}

const NamedModule* WorkspaceSpec::find_module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

const SupportPair* WorkspaceSpec::find_pair(const std::string& name) const {
  for (const auto& p : pairs)
    if (p.name == name) return &p;
  return nullptr;
}

NamedModule WorkspaceSpec::resolve_module(const std::string& name) const {
  if (const auto* m = find_module(name)) return *m;
  if (auto standard = parse_standard_name(name, algebra->vertex_count()))
    return {name, standard_module(algebra, *standard)};
  throw ParseError("<command line>", "unknown module '" + name + "'");
}

namespace {

std::string pointer(const std::string& base, const std::string& token) {
  std::string escaped;
  for (char c : token) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return base + "/" + escaped;
}

std::string pointer(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

[[noreturn]] void fail(const std::string& where, const std::string& message) { throw ParseError(where, message); }

const ordered_json& member(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

std::size_t positive_index(const ordered_json& v, const std::string& where, std::size_t upper) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  const auto value = v.get<long long>();
  if (value < 1 || static_cast<unsigned long long>(value) > upper)
    fail(where, "expected an integer in 1.." + std::to_string(upper));
  return static_cast<std::size_t>(value);
}

std::string text_of(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

Scalar scalar_of(const ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (!v.is_string()) fail(where, "expected a rational as a string (\"-2/3\") or an integer");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

std::vector<std::string> arrow_path(const ordered_json& v, const Quiver& q, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "expected a non-empty array of arrow names");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string name = text_of(v[k], pointer(where, k));
    if (!q.find_arrow(name)) fail(pointer(where, k), "unknown arrow '" + name + "'");
    out.push_back(name);
  }
  return out;
}

Matrix matrix_of(const ordered_json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of rows");
  Matrix m(rows, cols);
  if ((rows == 0 || cols == 0) && v.empty()) return m;
  if (v.size() != rows)
    fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = v[r];
    if (!row.is_array() || row.size() != cols)
      fail(pointer(where, r), "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_of(row[c], pointer(pointer(where, r), c));
  }
  return m;
}

Quiver quiver_of(const ordered_json& doc) {
  const auto& q = member(doc, "quiver", "");
  const auto& vertices = member(q, "vertices", "/quiver");
  if (!vertices.is_number_integer() || vertices.get<long long>() < 1)
    fail("/quiver/vertices", "expected a positive integer");
  Quiver quiver(vertices.get<std::size_t>());
  if (!q.contains("arrows")) return quiver;
  const auto& arrows = q["arrows"];
  if (!arrows.is_array()) fail("/quiver/arrows", "expected an array");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::string where = pointer("/quiver/arrows", k);
    const std::string name = text_of(member(arrows[k], "name", where), where + "/name");
    const std::size_t s = positive_index(member(arrows[k], "source", where), where + "/source", quiver.vertex_count());
    const std::size_t t = positive_index(member(arrows[k], "target", where), where + "/target", quiver.vertex_count());
    try {
      quiver.add_arrow(name, s - 1, t - 1);
    } catch (const AlgebraError& e) {
      fail(where, e.what());
    }
  }
  return quiver;
}

std::vector<Relation> relations_of(const ordered_json& doc, const Quiver& quiver) {
  std::vector<Relation> rels;
  if (!doc.contains("relations")) return rels;
  const auto& list = doc["relations"];
  if (!list.is_array()) fail("/relations", "expected an array");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = pointer("/relations", k);
    const auto& entry = list[k];
    if (!entry.is_object()) fail(where, "expected an object with \"path\" or \"terms\"");
    Relation rel;
    if (entry.contains("path")) {
      rel.terms.push_back({Scalar(1), arrow_path(entry["path"], quiver, where + "/path")});
    } else if (entry.contains("terms")) {
      const auto& terms = entry["terms"];
      if (!terms.is_array() || terms.empty()) fail(where + "/terms", "expected a non-empty array");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = pointer(where + "/terms", t);
        Scalar coeff(1);
        if (terms[t].is_object() && terms[t].contains("coefficient"))
          coeff = scalar_of(terms[t]["coefficient"], tw + "/coefficient");
        rel.terms.push_back({coeff, arrow_path(member(terms[t], "path", tw), quiver, tw + "/path")});
      }
    } else {
      fail(where, "expected \"path\" or \"terms\"");
    }
    rels.push_back(std::move(rel));
  }
  return rels;
}

Representation explicit_module(const ordered_json& spec, const AlgebraPtr& algebra, const std::string& where) {
  const auto& q = algebra->quiver();
  const auto& dims_json = member(spec, "dims", where);
  if (!dims_json.is_array() || dims_json.size() != q.vertex_count())
    fail(where + "/dims", "expected " + std::to_string(q.vertex_count()) + " dimensions");
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < dims_json.size(); ++v) {
    if (!dims_json[v].is_number_integer() || dims_json[v].get<long long>() < 0)
      fail(pointer(where + "/dims", v), "expected a non-negative integer");
    dims.push_back(dims_json[v].get<std::size_t>());
  }
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  if (spec.contains("maps")) {
    const auto& given = spec["maps"];
    if (!given.is_object()) fail(where + "/maps", "expected an object keyed by arrow name");
    for (const auto& [name, value] : given.items()) {
      const auto arrow = q.find_arrow(name);
      if (!arrow) fail(pointer(where + "/maps", name), "unknown arrow '" + name + "'");
      const Arrow& a = q.arrow(*arrow);
      maps[*arrow] = matrix_of(value, dims[a.target], dims[a.source], pointer(where + "/maps", name));
    }
  }
  Representation rep(algebra, std::move(dims), std::move(maps));
  const ValidationReport report = validate(rep);
  if (!report.ok()) fail(where, report.violations.front().message);
  return rep;
}

// Object keys must be unique at every level.
ordered_json parse_document(const std::string& text) {
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  auto callback = [&](int /*depth*/, ordered_json::parse_event_t event, ordered_json& parsed) {
    switch (event) {
      case ordered_json::parse_event_t::object_start: keys.emplace_back(); break;
      case ordered_json::parse_event_t::object_end: keys.pop_back(); break;
      case ordered_json::parse_event_t::key:
        if (!keys.back().insert(parsed.get<std::string>()).second && duplicate.empty())
          duplicate = parsed.get<std::string>();
        break;
      default: break;
    }
    return true;
  };
  ordered_json doc;
  try {
    doc = ordered_json::parse(text, callback);
  } catch (const ordered_json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(std::to_string(line) + ":" + std::to_string(column), "JSON syntax error");
  }
  if (!duplicate.empty()) fail("", "duplicate key '" + duplicate + "'");
  return doc;
}

}  // namespace

WorkspaceSpec parse_workspace_text(const std::string& text, const WorkspaceOptions& options) {
  const ordered_json doc = parse_document(text);
  if (!doc.is_object()) fail("", "workspace must be a JSON object");
  if (doc.contains("schema") && doc["schema"] != 1) fail("/schema", "unsupported schema version");

  WorkspaceSpec ws;
  if (doc.contains("name")) ws.name = text_of(doc["name"], "/name");
  const Quiver quiver = quiver_of(doc);
  const std::vector<Relation> rels = relations_of(doc, quiver);
  try {
    ws.algebra = build_algebra(quiver, rels, options.build);
  } catch (const AlgebraError& e) {
    fail("/relations", e.what());
  }

  if (doc.contains("modules")) {
    const auto& modules = doc["modules"];
    if (!modules.is_object()) fail("/modules", "expected an object keyed by module name");
    for (const auto& [name, spec] : modules.items()) {
      const std::string where = pointer("/modules", name);
      if (spec.is_string()) {
        const std::string shorthand = spec.get<std::string>();
        const auto standard = parse_standard_name(shorthand, ws.algebra->vertex_count());
        if (!standard) fail(where, "unknown shorthand '" + shorthand + "' (expected P<i>, I<i> or S<i>)");
        ws.modules.push_back({name, standard_module(ws.algebra, *standard)});
      } else {
        ws.modules.push_back({name, explicit_module(spec, ws.algebra, where)});
      }
    }
  }

  if (doc.contains("pairs")) {
    const auto& pairs = doc["pairs"];
    if (!pairs.is_object()) fail("/pairs", "expected an object keyed by pair name");
    for (const auto& [name, spec] : pairs.items()) {
      const std::string where = pointer("/pairs", name);
      if (!spec.is_object()) fail(where, "expected {\"T\": [...], \"P\": [...]}");
      SupportPair pair{name, ws.algebra, {}, {}};
      for (const char* part : {"T", "P"}) {
        if (!spec.contains(part)) continue;
        const auto& list = spec[part];
        const std::string pw = where + "/" + part;
        if (!list.is_array()) fail(pw, "expected an array of module names");
        for (std::size_t k = 0; k < list.size(); ++k) {
          const std::string ref = text_of(list[k], pointer(pw, k));
          NamedModule resolved{ref, Representation::zero(ws.algebra)};
          try {
            resolved = ws.resolve_module(ref);
          } catch (const ParseError&) {
            fail(pointer(pw, k), "dangling module name '" + ref + "'");
          }
          (part[0] == 'T' ? pair.t_summands : pair.p_summands).push_back(std::move(resolved));
        }
      }
      ws.pairs.push_back(std::move(pair));
    }
  }
  return ws;
}

WorkspaceSpec parse_workspace(const std::filesystem::path& path, const WorkspaceOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open workspace file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace_text(buffer.str(), options);
}

}  // namespace taumatch
