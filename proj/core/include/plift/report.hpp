#pragma once

#include <nlohmann/json.hpp>

#include "plift/barcode.hpp"
#include "plift/decompose.hpp"
#include "plift/extension.hpp"
#include "plift/witness.hpp"

namespace plift {

// Per-summand blocks: ranks, arrow matrices, certificate, End dimension, and
// the matched base summand when a matching is present.
nlohmann::json summands_to_json(const std::vector<CertifiedSummand>& summands,
                                const std::optional<std::vector<std::size_t>>& matching = std::nullopt);
// verdict, reason, summands, and for theorem reports base_summands + matching.
nlohmann::json report_to_json(const DecompositionReport& report);

// One block per step: source and target basis, t, target length.
nlohmann::json chain_to_json(const std::vector<SmallExtension>& chain);

nlohmann::json end_algebra_to_json(const EndAlgebra& end);
nlohmann::json transforms_to_json(const std::vector<NatTransform>& basis);
nlohmann::json barcode_to_json(const Barcode& b);
nlohmann::json battery_to_json(const std::vector<InstanceOutcome>& outcomes);

}  // namespace plift
