#include "plift/theorem.hpp"

#include "plift/hom.hpp"

namespace plift {

bool are_isomorphic(const ModulePtr& a, const ModulePtr& b, XorShift64Star& rng) {
  if (!same_algebra_and_quiver(*a, *b) || a->ranks() != b->ranks()) return false;
  if (a->is_zero()) return true;
  const auto forward = hom_basis(a, b);
  if (forward.empty()) return false;
  if (forward.size() == 1) return is_isomorphism(forward.front());
  if (hom_dimension(b, a) == 0) return false;

  for (const auto& f : forward)
    if (is_isomorphism(f)) return true;
  const PrimeField& field = a->algebra()->field();
  for (std::size_t attempt = 0; attempt < kRandomSplitAttempts; ++attempt) {
    std::vector<FieldElem> coeffs;
    for (std::size_t i = 0; i < forward.size(); ++i) coeffs.push_back(rng.element(field));
    if (is_isomorphism(linear_combination(forward, coeffs))) return true;
  }
  return false;
}

std::vector<std::size_t> match_summands(const std::vector<CertifiedSummand>& lift_summands,
                                        const std::vector<CertifiedSummand>& base_summands, std::uint64_t seed) {
  if (lift_summands.size() != base_summands.size()) {
    throw Error(ErrorKind::NoMatch, std::to_string(lift_summands.size()) + " lift summands against " +
                                        std::to_string(base_summands.size()) + " base summands");
  }
  XorShift64Star rng(seed);
  std::vector<bool> used(base_summands.size(), false);
  std::vector<std::size_t> sigma;
  for (std::size_t i = 0; i < lift_summands.size(); ++i) {
    const auto residue = make_module(residue_module(*lift_summands[i].summand.module));
    bool found = false;
    for (std::size_t j = 0; j < base_summands.size() && !found; ++j) {
      if (used[j] || !are_isomorphic(residue, base_summands[j].summand.module, rng)) continue;
      used[j] = true;
      sigma.push_back(j);
      found = true;
    }
    if (!found) throw Error(ErrorKind::NoMatch, "lift summand " + std::to_string(i) + " has no matching base summand");
  }
  return sigma;
}

bool same_isomorphism_classes(const std::vector<CertifiedSummand>& a, const std::vector<CertifiedSummand>& b,
                              std::uint64_t seed) {
  if (a.size() != b.size()) return false;
  XorShift64Star rng(seed);
  std::vector<bool> used(b.size(), false);
  for (const auto& s : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (used[j] || !are_isomorphic(s.summand.module, b[j].summand.module, rng)) continue;
      used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

DecompositionReport verify_theorem(const LiftWitness& w, std::uint64_t seed) {
  if (auto d = validate_lift(w)) throw Error(ErrorKind::ValidationError, d->to_string());

  const DecompositionReport base = decompose(w.base, seed);
  DecompositionReport report;
  report.base_summands = base.summands;
  for (std::size_t j = 0; j < base.summands.size(); ++j) {
    if (base.summands[j].certificate != Certificate::ScalarRing) {
      report.verdict = Verdict::Undecided;
      report.reason = "base summand " + std::to_string(j) + " has End of dimension " +
                      std::to_string(base.summands[j].end_dimension) + ", hypothesis End_k = k fails";
      return report;
    }
  }

  const DecompositionReport lift = decompose(w.lift, seed);
  report.summands = lift.summands;
  for (std::size_t i = 0; i < lift.summands.size(); ++i) {
    const Certificate c = lift.summands[i].certificate;
    if (c == Certificate::ScalarRing) continue;
    report.verdict = c == Certificate::LocalUnknown ? Verdict::Fail : Verdict::Undecided;
    report.reason = "lift summand " + std::to_string(i) + " certified " + to_string(c) + " with End of dimension " +
                    std::to_string(lift.summands[i].end_dimension);
    return report;
  }

  try {
    report.matching = match_summands(lift.summands, base.summands, mix_seed(seed, 1));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoMatch) throw;
    report.verdict = Verdict::Fail;
    report.reason = e.what();
    return report;
  }
  report.verdict = Verdict::Pass;
  return report;
}

}  // namespace plift
