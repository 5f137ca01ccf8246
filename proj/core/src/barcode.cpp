#include "plift/barcode.hpp"

#include <algorithm>
#include <optional>

namespace plift {

namespace {

std::optional<std::size_t> arrow_between(const QuiverPresentation& q, std::size_t from, std::size_t to) {
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (q.arrow(a).source == from && q.arrow(a).target == to) return a;
  return std::nullopt;
}

std::optional<Interval> read_interval(const RepModule& m, const std::vector<std::size_t>& order) {
  std::optional<std::size_t> first, last;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t r = m.rank(order[i]);
    if (r > 1) return std::nullopt;
    if (r == 0) continue;
    if (last && *last + 1 != i) return std::nullopt;
    if (!first) first = i;
    last = i;
  }
  if (!first) return std::nullopt;
  for (std::size_t i = *first; i < *last; ++i) {
    const auto a = arrow_between(*m.quiver(), order[i], order[i + 1]);
    if (!a || m.arrow_map(*a).residue().at(0, 0).value == 0) return std::nullopt;
  }
  return Interval{*first + 1, *last + 1};
}

}  // namespace

bool is_interval_module(const RepModule& m, const std::vector<std::size_t>& order) {
  return m.algebra()->is_field() && read_interval(m, order).has_value();
}

Barcode barcode(const ModulePtr& m, std::uint64_t seed) {
  const auto order = linear_order(*m->quiver());
  if (!order) throw Error(ErrorKind::NotTotallyOrdered, "quiver is not a relation-free linearly oriented A_n");
  if (!m->algebra()->is_field()) throw Error(ErrorKind::NotTotallyOrdered, "barcodes need a module over k");

  Barcode out;
  for (std::size_t v : *order) out.vertex_labels.push_back(m->quiver()->vertices()[v]);
  const DecompositionReport report = decompose(m, seed);
  for (std::size_t i = 0; i < report.summands.size(); ++i) {
    const auto& s = report.summands[i];
    const auto interval = s.certificate == Certificate::ScalarRing ? read_interval(*s.summand.module, *order)
                                                                   : std::nullopt;
    if (!interval) {
      throw Error(ErrorKind::NonIntervalSummand,
                  "summand " + std::to_string(i) + " (" + to_string(s.certificate) + ") is not an interval module");
    }
    out.intervals.push_back(*interval);
  }
  std::sort(out.intervals.begin(), out.intervals.end());
  return out;
}

std::string render_barcode(const Barcode& b) {
  std::string out;
  for (const auto& iv : b.intervals) {
    std::string row;
    for (std::size_t pos = 1; pos <= iv.death; ++pos) row += pos >= iv.birth ? "───" : "   ";
    out += row + "\n";
  }
  return out;
}

}  // namespace plift
