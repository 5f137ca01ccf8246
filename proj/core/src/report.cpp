#include "plift/report.hpp"

#include "plift/io.hpp"

namespace plift {

using nlohmann::json;

json summands_to_json(const std::vector<CertifiedSummand>& summands,
                      const std::optional<std::vector<std::size_t>>& matching) {
  json out = json::array();
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const CertifiedSummand& s = summands[i];
    json j = module_to_json(*s.summand.module);
    j["certificate"] = to_string(s.certificate);
    j["end_dimension"] = s.end_dimension;
    if (matching) j["matched"] = (*matching)[i];
    out.push_back(std::move(j));
  }
  return out;
}

json report_to_json(const DecompositionReport& report) {
  json j{{"verdict", to_string(report.verdict)}, {"summands", summands_to_json(report.summands, report.matching)}};
  if (!report.reason.empty()) j["reason"] = report.reason;
  if (!report.base_summands.empty()) j["base_summands"] = summands_to_json(report.base_summands);
  j["matching"] = report.matching ? json(*report.matching) : json(nullptr);
  return j;
}

json chain_to_json(const std::vector<SmallExtension>& chain) {
  json out = json::array();
  for (const SmallExtension& e : chain) {
    json t = json::array();
    for (FieldElem c : e.t.coeffs) t.push_back(c.value);
    out.push_back({{"source_basis", e.source->basis_names()},
                   {"target_basis", e.target->basis_names()},
                   {"t", std::move(t)},
                   {"t_display", e.source->format(e.t)},
                   {"target_length", e.target->length()}});
  }
  return out;
}

json transforms_to_json(const std::vector<NatTransform>& basis) {
  json out = json::array();
  for (const NatTransform& f : basis) {
    json comps = json::array();
    for (const MatrixR& c : f.components()) comps.push_back(matrix_to_json(c));
    out.push_back(std::move(comps));
  }
  return out;
}

json end_algebra_to_json(const EndAlgebra& end) {
  json table = json::array();
  for (FieldElem c : end.mult_table) table.push_back(c.value);
  return json{{"dimension", end.dim()}, {"basis", transforms_to_json(end.basis)}, {"mult_table", std::move(table)}};
}

json barcode_to_json(const Barcode& b) {
  json intervals = json::array();
  for (const Interval& iv : b.intervals) intervals.push_back(json::array({iv.birth, iv.death}));
  return json{{"vertices", b.vertex_labels}, {"intervals", std::move(intervals)}};
}

json battery_to_json(const std::vector<InstanceOutcome>& outcomes) {
  json out = json::array();
  for (const InstanceOutcome& o : outcomes) {
    json j{{"index", o.index},
           {"instance", o.description},
           {"lemma", o.lemma_ok},
           {"theorem", to_string(o.theorem)},
           {"summands", o.summands},
           {"krull_schmidt", o.krull_schmidt_ok},
           {"passed", o.passed()}};
    j["scalar"] = o.scalar_ok ? json(*o.scalar_ok) : json(nullptr);
    if (!o.detail.empty()) j["detail"] = o.detail;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace plift
