#include "plift/extension.hpp"

#include <algorithm>

namespace plift {

RingElem SmallExtension::apply(const RingElem& a) const { return RingElem{theta.apply(a.coeffs)}; }

RingElem SmallExtension::lift(const RingElem& a) const { return RingElem{section.apply(a.coeffs)}; }

MatrixR SmallExtension::apply(const MatrixR& m) const {
  if (!(*m.algebra() == *source)) throw Error(ErrorKind::ShapeMismatch, "matrix is not over the extension's source");
  MatrixR out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, apply(m.at(i, j)));
  return out;
}

SmallExtension small_extension(const AlgebraPtr& algebra) {
  const ArtinAlgebra& R = *algebra;
  const PrimeField& f = R.field();
  const std::size_t n = R.dim();
  if (n < 2) throw Error(ErrorKind::LengthOne, "R = k has no small extension");

  const std::size_t p = nilpotency_index(R);
  const std::vector<RingElem> socle_power = ideal_power_basis(R, p - 1);
  const RingElem t = socle_power.front();
  const auto pivot = static_cast<std::size_t>(
      std::find_if(t.coeffs.begin(), t.coeffs.end(), [](FieldElem c) { return c.value != 0; }) - t.coeffs.begin());

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) kept.push_back(i);
  const std::size_t n0 = kept.size();

  // b_pivot = t - sum_{l != pivot} t_l b_l, and t maps to 0.
  MatrixK theta(f, n0, n);
  MatrixK section(f, n, n0);
  for (std::size_t k = 0; k < n0; ++k) {
    theta.at(k, kept[k]) = f.one();
    theta.at(k, pivot) = f.neg(t.coeffs[kept[k]]);
    section.at(kept[k], k) = f.one();
  }

  std::vector<std::string> names;
  for (std::size_t i : kept) names.push_back(R.basis_names()[i]);
  std::vector<FieldElem> table(n0 * n0 * n0);
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n0; ++b) {
      const VectorK prod = theta.apply(R.mul(R.basis(kept[a]), R.basis(kept[b])).coeffs);
      std::copy(prod.begin(), prod.end(), table.begin() + static_cast<std::ptrdiff_t>((a * n0 + b) * n0));
    }
  auto target = std::make_shared<const ArtinAlgebra>(f, std::move(names), std::move(table));
  return SmallExtension{algebra, std::move(target), std::move(theta), std::move(section), t};
}

std::vector<SmallExtension> extension_chain(const AlgebraPtr& algebra) {
  std::vector<SmallExtension> chain;
  AlgebraPtr current = algebra;
  while (current->dim() > 1) {
    chain.push_back(small_extension(current));
    current = chain.back().target;
  }
  return chain;
}

}  // namespace plift
