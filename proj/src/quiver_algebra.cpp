#include "taumatch/quiver_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace taumatch {

Quiver::Quiver(std::size_t vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count == 0) throw AlgebraError("quiver needs at least one vertex");
}

std::size_t Quiver::add_arrow(std::string name, std::size_t source, std::size_t target) {
  if (name.empty()) throw AlgebraError("arrow name must be non-empty");
  if (find_arrow(name)) throw AlgebraError("duplicate arrow name '" + name + "'");
  if (source >= vertex_count_ || target >= vertex_count_)
    throw AlgebraError("arrow '" + name + "' has an endpoint outside the quiver");
  arrows_.push_back({std::move(name), source, target});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].name == name) return k;
  return std::nullopt;
}

Path trivial_path(std::size_t vertex) { return Path{vertex, vertex, {}}; }

std::optional<Path> concatenate(const Path& first, const Path& second) {
  if (first.target != second.source) return std::nullopt;
  Path out{first.source, second.target, first.arrows};
  out.arrows.insert(out.arrows.end(), second.arrows.begin(), second.arrows.end());
  return out;
}

Relation monomial_relation(std::vector<std::string> arrows) {
  return Relation{{RelationTerm{Scalar(1), std::move(arrows)}}};
}

BoundQuiverAlgebra::BoundQuiverAlgebra(Quiver quiver, std::vector<Relation> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {}

const std::vector<Path>& BoundQuiverAlgebra::basis_between(std::size_t source, std::size_t target) const {
  return between_.at(source).at(target);
}

Coordinates BoundQuiverAlgebra::reduce(const Path& p) const {
  if (p.length() >= nilpotency_degree_) return Coordinates(basis_between(p.source, p.target).size());
  auto it = normal_forms_.find(p);
  if (it == normal_forms_.end()) throw AlgebraError("path is not a path of the quiver");
  return it->second;
}

std::optional<std::size_t> BoundQuiverAlgebra::basis_position(const Path& p) const {
  const auto& list = basis_between(p.source, p.target);
  auto it = std::find(list.begin(), list.end(), p);
  if (it == list.end()) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

std::string BoundQuiverAlgebra::path_name(const Path& p) const {
  if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
  std::ostringstream out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k > 0) out << '.';
    out << quiver_.arrow(p.arrows[k]).name;
  }
  return out.str();
}

namespace {

struct ResolvedRelation {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t min_length = 0;
  std::vector<std::pair<Scalar, Path>> terms;
};

std::string describe(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
  return out;
}

ResolvedRelation resolve(const Quiver& q, const Relation& rel, std::size_t index) {
  const std::string where = "malformed relation #" + std::to_string(index + 1) + ": ";
  ResolvedRelation out;
  std::map<Path, Scalar> merged;
  bool first = true;
  for (const auto& term : rel.terms) {
    if (term.arrows.size() < 2)
      throw AlgebraError(where + "path '" + describe(term.arrows) + "' has length < 2");
    Path p;
    for (std::size_t k = 0; k < term.arrows.size(); ++k) {
      auto a = q.find_arrow(term.arrows[k]);
      if (!a) throw AlgebraError(where + "unknown arrow '" + term.arrows[k] + "'");
      const Arrow& arrow = q.arrow(*a);
      if (k == 0) {
        p.source = arrow.source;
      } else if (q.arrow(p.arrows.back()).target != arrow.source) {
        throw AlgebraError(where + "path '" + describe(term.arrows) + "' does not compose");
      }
      p.arrows.push_back(*a);
      p.target = arrow.target;
    }
    if (first) {
      out.source = p.source;
      out.target = p.target;
      first = false;
    } else if (p.source != out.source || p.target != out.target) {
      throw AlgebraError(where + "terms have different endpoints");
    }
    merged[p] += term.coefficient;
  }
  for (auto& [p, c] : merged)
    if (c != 0) out.terms.emplace_back(c, p);
  if (out.terms.empty()) throw AlgebraError(where + "no nonzero term");
  out.min_length = out.terms.front().second.length();
  for (const auto& t : out.terms) out.min_length = std::min(out.min_length, t.second.length());
  return out;
}

// All paths grouped by length, up to `max_length`.
class PathTable {
 public:
  explicit PathTable(const Quiver& q) : quiver_(q) {
    std::vector<Path> zero;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) zero.push_back(trivial_path(v));
    by_length_.push_back(std::move(zero));
  }

  void extend_to(std::size_t length, std::size_t max_count) {
    while (by_length_.size() <= length) {
      std::vector<Path> next;
      for (const auto& p : by_length_.back())
        for (std::size_t a = 0; a < quiver_.arrows().size(); ++a)
          if (quiver_.arrow(a).source == p.target) {
            Path longer = p;
            longer.arrows.push_back(a);
            longer.target = quiver_.arrow(a).target;
            next.push_back(std::move(longer));
          }
      total_ += next.size();
      if (total_ > max_count)
        throw AlgebraError("not finite dimensional: path enumeration exceeded " +
                           std::to_string(max_count) + " paths");
      by_length_.push_back(std::move(next));
    }
  }

  const std::vector<Path>& of_length(std::size_t k) const { return by_length_.at(k); }

 private:
  const Quiver& quiver_;
  std::vector<std::vector<Path>> by_length_;
  std::size_t total_ = 0;
};

// Column layout for paths of length <= max_length: longest first so that
// elimination pivots on long paths and keeps short ones as basis elements.
struct ColumnIndex {
  std::vector<Path> paths;
  std::map<Path, std::size_t> column;

  ColumnIndex(const PathTable& table, std::size_t max_length) {
    for (std::size_t len = max_length + 1; len-- > 0;)
      for (const auto& p : table.of_length(len)) {
        column.emplace(p, paths.size());
        paths.push_back(p);
      }
  }
};

// Spanning set of the ideal modulo paths longer than `max_length`: every
// u * relation * v whose shortest term fits, longer terms dropped.
Matrix ideal_generators(const PathTable& table, const std::vector<ResolvedRelation>& rels,
                        const ColumnIndex& cols, std::size_t max_length) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& rel : rels) {
    if (rel.min_length > max_length) continue;
    const std::size_t slack = max_length - rel.min_length;
    for (std::size_t lu = 0; lu <= slack; ++lu)
      for (const auto& u : table.of_length(lu)) {
        if (u.target != rel.source) continue;
        for (std::size_t lv = 0; lu + lv <= slack; ++lv)
          for (const auto& v : table.of_length(lv)) {
            if (v.source != rel.target) continue;
            std::vector<Scalar> row(cols.paths.size());
            bool nonzero = false;
            for (const auto& [c, p] : rel.terms) {
              Path full = *concatenate(*concatenate(u, p), v);
              if (full.length() > max_length) continue;
              row[cols.column.at(full)] += c;
              nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
          }
      }
  }
  return Matrix::from_rows(rows, cols.paths.size());
}

}  // namespace

AlgebraPtr build_algebra(const Quiver& quiver, const std::vector<Relation>& relations,
                         const BuildOptions& options) {
  std::vector<ResolvedRelation> rels;
  for (std::size_t k = 0; k < relations.size(); ++k) rels.push_back(resolve(quiver, relations[k], k));

  PathTable table(quiver);
  std::optional<std::size_t> degree;
  for (std::size_t len = 1; len <= options.max_path_length; ++len) {
    table.extend_to(len, options.max_path_count);
    const auto& top = table.of_length(len);
    if (top.empty()) {
      degree = len;
      break;
    }
    const ColumnIndex cols(table, len);
    const Matrix gens = ideal_generators(table, rels, cols, len);
    Matrix units(top.size(), cols.paths.size());
    for (std::size_t k = 0; k < top.size(); ++k) units(k, cols.column.at(top[k])) = 1;
    if (rank(vstack({gens, units}, cols.paths.size())) == rank(gens)) {
      degree = len;
      break;
    }
  }
  if (!degree)
    throw AlgebraError("not finite dimensional: some path of length " +
                       std::to_string(options.max_path_length) + " survives the relations");

  auto algebra = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra(quiver, relations));
  algebra->nilpotency_degree_ = *degree;

  // Quotient of the span of paths shorter than the degree.
  const std::size_t max_len = *degree - 1;
  const ColumnIndex cols(table, max_len);
  const RowEchelon ech = row_reduce(ideal_generators(table, rels, cols, max_len));
  std::vector<std::ptrdiff_t> pivot_row(cols.paths.size(), -1);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = static_cast<std::ptrdiff_t>(r);

  const std::size_t n = quiver.vertex_count();
  algebra->between_.assign(n, std::vector<std::vector<Path>>(n));
  // Shortest paths first inside each block.
  for (std::size_t c = cols.paths.size(); c-- > 0;) {
    if (pivot_row[c] >= 0) continue;
    const Path& p = cols.paths[c];
    algebra->between_[p.source][p.target].push_back(p);
    algebra->basis_.push_back(p);
  }
  std::map<Path, std::size_t> position;
  for (const auto& row : algebra->between_)
    for (const auto& block : row)
      for (std::size_t k = 0; k < block.size(); ++k) position.emplace(block[k], k);

  for (std::size_t c = 0; c < cols.paths.size(); ++c) {
    const Path& p = cols.paths[c];
    Coordinates coords(algebra->between_[p.source][p.target].size());
    if (pivot_row[c] < 0) {
      coords[position.at(p)] = 1;
    } else {
      const auto r = static_cast<std::size_t>(pivot_row[c]);
      for (std::size_t j = 0; j < cols.paths.size(); ++j) {
        if (j == c || ech.reduced(r, j) == 0) continue;
        coords[position.at(cols.paths[j])] = -ech.reduced(r, j);
      }
    }
    algebra->normal_forms_.emplace(p, std::move(coords));
  }
  return algebra;
}

AlgebraPtr opposite(const BoundQuiverAlgebra& algebra, const BuildOptions& options) {
  Quiver q(algebra.vertex_count());
  for (const auto& a : algebra.quiver().arrows()) q.add_arrow(a.name, a.target, a.source);
  std::vector<Relation> rels;
  for (const auto& rel : algebra.relations()) {
    Relation reversed;
    for (const auto& t : rel.terms)
      reversed.terms.push_back({t.coefficient, {t.arrows.rbegin(), t.arrows.rend()}});
    rels.push_back(std::move(reversed));
  }
  return build_algebra(q, rels, options);
}

}  // namespace taumatch
