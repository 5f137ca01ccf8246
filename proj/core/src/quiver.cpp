#include "plift/quiver.hpp"

#include <set>

#include "plift/error.hpp"

namespace plift {

QuiverPresentation::QuiverPresentation(PrimeField field, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                                       std::vector<Relation> relations)
    : field_(field), vertices_(std::move(vertices)), arrows_(std::move(arrows)), relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidArgument, "duplicate vertex label '" + v + "'");
  seen.clear();
  for (const auto& a : arrows_) {
    if (!seen.insert(a.label).second) throw Error(ErrorKind::InvalidArgument, "duplicate arrow label '" + a.label + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
      throw Error(ErrorKind::InvalidArgument, "arrow '" + a.label + "' has an endpoint outside the vertex list");
    }
  }
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    const auto& rel = relations_[r];
    if (rel.terms.empty()) throw Error(ErrorKind::InvalidArgument, "relation " + std::to_string(r) + " has no terms");
    for (const auto& term : rel.terms) {
      if (term.coeff.value >= field_.modulus()) throw Error(ErrorKind::InvalidArgument, "relation coefficient not reduced");
      if (!composable(term.path)) {
        throw Error(ErrorKind::InvalidArgument, "relation " + std::to_string(r) + " contains a non-composable path");
      }
      const Path& first = rel.terms.front().path;
      if (term.path.start != first.start || path_target(term.path) != path_target(first)) {
        throw Error(ErrorKind::InvalidArgument, "relation " + std::to_string(r) + " mixes non-parallel paths");
      }
    }
  }
}

QuiverPresentation QuiverPresentation::linear(PrimeField field, std::size_t n) {
  return zigzag(field, std::vector<bool>(n == 0 ? 0 : n - 1, true));
}

QuiverPresentation QuiverPresentation::zigzag(PrimeField field, const std::vector<bool>& forward) {
  const std::size_t n = forward.size() + 1;
  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::string label = "a" + std::to_string(i + 1);
    arrows.push_back(forward[i] ? Arrow{label, i, i + 1} : Arrow{label, i + 1, i});
  }
  return QuiverPresentation(field, std::move(vertices), std::move(arrows), {});
}

QuiverPresentation QuiverPresentation::loop_square_zero(PrimeField field) {
  Relation rel{{RelationTerm{field.one(), Path{0, {0, 0}}}}};
  return QuiverPresentation(field, {"1"}, {Arrow{"gamma", 0, 0}}, {rel});
}

std::optional<std::size_t> QuiverPresentation::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> QuiverPresentation::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return i;
  return std::nullopt;
}

bool QuiverPresentation::composable(const Path& path) const {
  if (path.start >= vertices_.size()) return false;
  std::size_t at = path.start;
  for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it) {
    if (*it >= arrows_.size() || arrows_[*it].source != at) return false;
    at = arrows_[*it].target;
  }
  return true;
}

std::size_t QuiverPresentation::path_target(const Path& path) const {
  return path.arrows.empty() ? path.start : arrows_.at(path.arrows.front()).target;
}

Path QuiverPresentation::path_from_labels(const std::vector<std::string>& labels, std::optional<std::size_t> start) const {
  Path path;
  for (const auto& l : labels) {
    auto a = arrow_index(l);
    if (!a) throw Error(ErrorKind::InvalidArgument, "unknown arrow '" + l + "'");
    path.arrows.push_back(*a);
  }
  if (path.arrows.empty()) {
    if (!start) throw Error(ErrorKind::InvalidArgument, "an empty path needs an explicit vertex");
    path.start = *start;
  } else {
    path.start = arrows_[path.arrows.back()].source;
    if (start && *start != path.start) throw Error(ErrorKind::InvalidArgument, "path does not start at the given vertex");
  }
  if (!composable(path)) throw Error(ErrorKind::NotComposable, "arrows do not compose");
  return path;
}

std::optional<std::vector<std::size_t>> linear_order(const QuiverPresentation& q) {
  const std::size_t n = q.vertex_count();
  if (!q.relations().empty() || q.arrow_count() + 1 != n) {
    if (n == 0 && q.arrow_count() == 0 && q.relations().empty()) return std::vector<std::size_t>{};
    return std::nullopt;
  }
  std::vector<int> out_arrow(n, -1), in_count(n, 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (arr.source == arr.target || out_arrow[arr.source] != -1) return std::nullopt;
    out_arrow[arr.source] = static_cast<int>(a);
    ++in_count[arr.target];
  }
  std::optional<std::size_t> first;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_count[v] > 1) return std::nullopt;
    if (in_count[v] == 0) {
      if (first) return std::nullopt;
      first = v;
    }
  }
  if (!first) return std::nullopt;
  std::vector<std::size_t> order{*first};
  while (out_arrow[order.back()] != -1) {
    order.push_back(q.arrow(static_cast<std::size_t>(out_arrow[order.back()])).target);
    if (order.size() > n) return std::nullopt;
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace plift
