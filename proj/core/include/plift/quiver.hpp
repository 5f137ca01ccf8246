#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plift/field.hpp"

namespace plift {

struct Arrow {
  std::string label;
  std::size_t source;
  std::size_t target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Composable arrow sequence, rightmost applied first. `start` is the vertex the
// path leaves from; it is the only data of an empty (identity) path.
struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  friend bool operator==(const Path&, const Path&) = default;
};

struct RelationTerm {
  FieldElem coeff;
  Path path;

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

// sum_j coeff_j * path_j = 0, all paths parallel.
struct Relation {
  std::vector<RelationTerm> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// A finite quiver with relations, presenting the index category: morphisms
// x -> y are paths modulo the relations.
class QuiverPresentation {
 public:
  // Throws Error(InvalidArgument) on bad endpoints, duplicate labels,
  // non-composable or non-parallel relation paths.
  QuiverPresentation(PrimeField field, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                     std::vector<Relation> relations);

  // 1 -> 2 -> ... -> n, arrows labelled a1, a2, ...
  static QuiverPresentation linear(PrimeField field, std::size_t n);
  // A_n with arrow i between vertex i and i+1 pointing forward when
  // forward[i] is true. The vertex order is the path order either way.
  static QuiverPresentation zigzag(PrimeField field, const std::vector<bool>& forward);
  // One vertex "1", loop "gamma", relation gamma^2 = 0.
  static QuiverPresentation loop_square_zero(PrimeField field);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  std::optional<std::size_t> vertex_index(const std::string& label) const;
  std::optional<std::size_t> arrow_index(const std::string& label) const;

  bool composable(const Path& path) const;
  std::size_t path_target(const Path& path) const;
  Path path_from_labels(const std::vector<std::string>& labels, std::optional<std::size_t> start) const;

  friend bool operator==(const QuiverPresentation&, const QuiverPresentation&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

using QuiverPtr = std::shared_ptr<const QuiverPresentation>;

// Vertex order along a linearly oriented relation-free A_n quiver, or nullopt
// if the quiver is not of that shape.
std::optional<std::vector<std::size_t>> linear_order(const QuiverPresentation& q);

}  // namespace plift
