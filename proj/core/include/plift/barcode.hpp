#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plift/decompose.hpp"

namespace plift {

// Closed interval of positions along the A_n order, 1-based.
struct Interval {
  std::size_t birth;
  std::size_t death;

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct Barcode {
  std::vector<std::string> vertex_labels;  // in path order
  std::vector<Interval> intervals;         // sorted by (birth, death)
};

// Whether a summand over k on a linear A_n is an interval module: ranks 0/1
// with contiguous support along `order` and every arrow inside the support
// of full rank.
bool is_interval_module(const RepModule& m, const std::vector<std::size_t>& order);

// Decomposes a module over k on a relation-free linearly oriented A_n and
// reads each summand as an interval. Throws Error(NotTotallyOrdered) for other
// quivers or R != k, Error(NonIntervalSummand) if a summand fails the
// interval check.
Barcode barcode(const ModulePtr& m, std::uint64_t seed = kDefaultSeed);

// One row per interval, three columns of '─' per covered vertex.
std::string render_barcode(const Barcode& b);

}  // namespace plift
