#include "plift/decompose.hpp"

#include <algorithm>
#include <deque>

#include "plift/hom.hpp"

namespace plift {

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::ScalarRing: return "scalar_ring";
    case Certificate::LocalUnknown: return "local_unknown";
    case Certificate::Undecided: return "undecided";
  }
  return "undecided";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

EndAlgebra end_algebra(const ModulePtr& m) {
  EndAlgebra e{m, hom_basis(m, m), {}};
  const std::size_t d = e.dim();
  e.mult_table.resize(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto c = coordinates(e.basis, compose(e.basis[i], e.basis[j]));
      if (!c) throw Error(ErrorKind::Internal, "End basis is not closed under composition");
      std::copy(c->begin(), c->end(), e.mult_table.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
    }
  return e;
}

bool end_is_scalar(const ModulePtr& m) {
  if (m->is_zero()) throw Error(ErrorKind::ZeroModule, "End of the zero module");
  return hom_basis(m, m).size() == m->algebra()->length();
}

bool end_is_local(const ModulePtr& m, const std::vector<NatTransform>& end_basis) {
  if (end_basis.empty()) return false;
  const PrimeField& f = m->algebra()->field();
  const NatTransform id = NatTransform::identity(m);

  std::vector<NatTransform> radical_span;
  for (const auto& b : end_basis) {
    const auto factors = endomorphism_factors(b);
    if (factors.size() != 1 || factors.front().base.degree() != 1) return false;
    const FieldElem lambda = f.neg(factors.front().base.coeff(0));
    radical_span.push_back(subtract(b, scalar_action(m->algebra()->from_scalar(lambda), id)));
  }
  const auto independent = [&](const std::vector<NatTransform>& elems) {
    std::vector<VectorK> cols;
    for (const auto& e : elems) cols.push_back(e.flatten());
    const MatrixK mat = MatrixK::from_columns(f, cols.front().size(), cols);
    const MatrixK basis = column_basis(mat);
    std::vector<NatTransform> out;
    for (std::size_t j = 0; j < basis.cols(); ++j) out.push_back(NatTransform::unflatten(m, m, basis.column(j)));
    return out;
  };
  const std::vector<NatTransform> radical = independent(radical_span);
  if (radical.size() + 1 != end_basis.size()) return false;
  if (radical.empty()) return true;

  // J closed under products and J^d = 0 makes it a nilpotent ideal of codimension one.
  std::vector<NatTransform> power = radical;
  for (std::size_t step = 0; step <= end_basis.size(); ++step) {
    std::vector<NatTransform> products;
    for (const auto& u : radical)
      for (const auto& v : power) {
        NatTransform uv = compose(u, v);
        if (step == 0 && !coordinates(radical, uv)) return false;
        if (!uv.is_zero()) products.push_back(std::move(uv));
      }
    if (products.empty()) return true;
    power = independent(products);
  }
  return false;
}

namespace {

struct WorkItem {
  Summand summand;
};

std::optional<std::vector<Summand>> try_split(const ModulePtr& piece, const std::vector<NatTransform>& basis,
                                              XorShift64Star& rng) {
  const auto attempt = [&](const NatTransform& f) -> std::optional<std::vector<Summand>> {
    if (auto s = minpoly_split(piece, f)) return std::move(s->summands);
    return std::nullopt;
  };
  const auto attempt_fitting = [&](const NatTransform& f) -> std::optional<std::vector<Summand>> {
    if (auto s = fitting_split(piece, f)) return std::vector<Summand>{std::move(s->kernel), std::move(s->image)};
    return std::nullopt;
  };

  for (const auto& b : basis)
    if (auto s = attempt(b)) return s;
  for (const auto& b : basis)
    if (auto s = attempt_fitting(b)) return s;

  const PrimeField& f = piece->algebra()->field();
  for (std::size_t tries = 0; tries < kRandomSplitAttempts; ++tries) {
    std::vector<FieldElem> coeffs;
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs.push_back(rng.element(f));
    const NatTransform combo = linear_combination(basis, coeffs);
    if (auto s = attempt(combo)) return s;
    if (auto s = attempt_fitting(combo)) return s;
  }
  return std::nullopt;
}

}  // namespace

DecompositionReport decompose(const ModulePtr& m, std::uint64_t seed) {
  DecompositionReport report;
  XorShift64Star rng(seed);
  if (m->is_zero()) {
    report.verdict = Verdict::Pass;
    return report;
  }

  std::deque<WorkItem> work;
  work.push_back({Summand{m, NatTransform::identity(m), NatTransform::identity(m)}});
  const std::size_t ring_length = m->algebra()->length();

  while (!work.empty()) {
    WorkItem item = std::move(work.front());
    work.pop_front();
    const ModulePtr& piece = item.summand.module;
    const std::vector<NatTransform> basis = hom_basis(piece, piece);

    if (basis.size() == ring_length) {
      report.summands.push_back({std::move(item.summand), Certificate::ScalarRing, basis.size(), report.summands.size()});
      continue;
    }
    if (auto parts = try_split(piece, basis, rng)) {
      for (auto& part : *parts) {
        Summand s{part.module, compose(item.summand.inclusion, part.inclusion),
                  compose(part.projection, item.summand.projection)};
        work.push_back({std::move(s)});
      }
      continue;
    }
    const Certificate cert = end_is_local(piece, basis) ? Certificate::LocalUnknown : Certificate::Undecided;
    report.summands.push_back({std::move(item.summand), cert, basis.size(), report.summands.size()});
  }

  std::sort(report.summands.begin(), report.summands.end(), [](const CertifiedSummand& a, const CertifiedSummand& b) {
    const auto& ma = *a.summand.module;
    const auto& mb = *b.summand.module;
    if (ma.total_rank() != mb.total_rank()) return ma.total_rank() < mb.total_rank();
    if (ma.ranks() != mb.ranks()) return ma.ranks() < mb.ranks();
    return a.discovery < b.discovery;
  });

  const bool all_scalar = std::all_of(report.summands.begin(), report.summands.end(),
                                      [](const CertifiedSummand& s) { return s.certificate == Certificate::ScalarRing; });
  report.verdict = all_scalar ? Verdict::Pass : Verdict::Undecided;
  if (!all_scalar) report.reason = "some summand is not certified scalar_ring";
  return report;
}

NatTransform reassembly_map(const ModulePtr& ambient, const std::vector<CertifiedSummand>& summands) {
  if (summands.empty()) {
    auto zero = make_module(RepModule::zero(ambient->algebra(), ambient->quiver()));
    return NatTransform::zero(zero, ambient);
  }
  std::vector<ModulePtr> parts;
  for (const auto& s : summands) parts.push_back(s.summand.module);
  const DirectSum sum = direct_sum(parts);
  std::vector<MatrixR> comps;
  for (std::size_t x = 0; x < ambient->ranks().size(); ++x) {
    MatrixR c(ambient->algebra(), ambient->rank(x), 0);
    for (const auto& s : summands) c = hstack(c, s.summand.inclusion.component(x));
    comps.push_back(std::move(c));
  }
  return NatTransform(sum.module, ambient, std::move(comps));
}

}  // namespace plift
