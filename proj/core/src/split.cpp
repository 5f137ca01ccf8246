#include "plift/split.hpp"

#include <string>

namespace plift {

namespace {

void require_endomorphism(const ModulePtr& m, const NatTransform& f) {
  if (!(f.source() == m || *f.source() == *m) || !(f.target() == m || *f.target() == *m)) {
    throw Error(ErrorKind::NotEndomorphism, "transform is not an endomorphism of the module");
  }
}

MatrixK power(MatrixK a, std::size_t e) {
  MatrixK result = MatrixK::identity(a.field(), a.rows());
  while (e > 0) {
    if (e & 1u) result = result * a;
    a = a * a;
    e >>= 1;
  }
  return result;
}

}  // namespace

MatrixR free_basis(const AlgebraPtr& algebra, const MatrixK& spanning_columns, std::size_t rank) {
  const std::size_t n = algebra->dim();
  const PrimeField& f = algebra->field();
  if (spanning_columns.rows() != rank * n) throw Error(ErrorKind::ShapeMismatch, "free_basis: wrong coordinate count");
  const MatrixK basis = column_basis(spanning_columns);

  std::vector<VectorK> chosen, chosen_residues;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    VectorK res(rank);
    for (std::size_t i = 0; i < rank; ++i) res[i] = basis.at(i * n, j);
    chosen_residues.push_back(res);
    if (plift::rank(MatrixK::from_columns(f, rank, chosen_residues)) == chosen_residues.size()) {
      chosen.push_back(basis.column(j));
    } else {
      chosen_residues.pop_back();
    }
  }
  if (chosen.size() * n != basis.cols()) {
    throw Error(ErrorKind::Internal, "submodule of k-dimension " + std::to_string(basis.cols()) + " has " +
                                         std::to_string(chosen.size()) + " residue generators; it is not free");
  }
  MatrixR out(algebra, rank, chosen.size());
  for (std::size_t k = 0; k < chosen.size(); ++k)
    for (std::size_t i = 0; i < rank; ++i)
      out.set(i, k, RingElem{VectorK(chosen[k].begin() + static_cast<std::ptrdiff_t>(i * n),
                                     chosen[k].begin() + static_cast<std::ptrdiff_t>((i + 1) * n))});
  return out;
}

std::vector<Summand> summands_from_subspaces(const ModulePtr& m, const std::vector<std::vector<MatrixK>>& parts) {
  const AlgebraPtr& alg = m->algebra();
  const QuiverPresentation& q = *m->quiver();
  const std::size_t nv = q.vertex_count();

  // bases[k][x]: r_x x s_kx inclusion matrix; projections from the inverse of
  // the assembled change of basis.
  std::vector<std::vector<MatrixR>> bases(parts.size());
  std::vector<std::vector<MatrixR>> projs(parts.size());
  for (std::size_t x = 0; x < nv; ++x) {
    MatrixR full(alg, m->rank(x), 0);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      bases[k].push_back(free_basis(alg, parts[k].at(x), m->rank(x)));
      full = hstack(full, bases[k].back());
    }
    MatrixR inv(alg, 0, 0);
    try {
      inv = inverse(full);
    } catch (const Error& e) {
      throw Error(ErrorKind::Internal, "subfunctors do not form a direct sum at vertex '" + q.vertices()[x] + "': " + e.what());
    }
    std::size_t row = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const std::size_t s = bases[k][x].cols();
      projs[k].push_back(inv.block(row, 0, s, m->rank(x)));
      row += s;
    }
  }

  std::vector<Summand> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<std::size_t> ranks;
    for (std::size_t x = 0; x < nv; ++x) ranks.push_back(bases[k][x].cols());
    std::vector<MatrixR> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(a);
      const MatrixR pushed = m->arrow_map(a) * bases[k][arr.source];
      MatrixR induced = projs[k][arr.target] * pushed;
      if (!(bases[k][arr.target] * induced == pushed)) {
        throw Error(ErrorKind::Internal, "piece " + std::to_string(k) + " is not closed under arrow '" + arr.label + "'");
      }
      maps.push_back(std::move(induced));
    }
    auto sub = make_module(alg, m->quiver(), std::move(ranks), std::move(maps));
    out.push_back(Summand{sub, NatTransform(sub, m, bases[k]), NatTransform(m, sub, projs[k])});
  }
  return out;
}

std::vector<Factor> endomorphism_factors(const NatTransform& f) {
  std::vector<std::vector<Factor>> per_vertex;
  for (const auto& c : f.components()) {
    if (c.rows() == 0) continue;
    per_vertex.push_back(factor_poly(minimal_polynomial(c.expand())));
  }
  return lcm_factors(per_vertex);
}

NatTransform evaluate(const PolyK& p, const NatTransform& f) {
  if (!f.is_endomorphism()) throw Error(ErrorKind::NotEndomorphism, "polynomial in a non-endomorphism");
  std::vector<MatrixR> comps;
  for (const auto& c : f.components()) {
    MatrixR acc(c.algebra(), c.rows(), c.cols());
    const MatrixR id = MatrixR::identity(c.algebra(), c.rows());
    for (int i = p.degree(); i >= 0; --i) acc = acc * c + id.scaled(p.coeff(static_cast<std::size_t>(i)));
    comps.push_back(std::move(acc));
  }
  return NatTransform(f.source(), f.target(), std::move(comps));
}

std::optional<FittingSplit> fitting_split(const ModulePtr& m, const NatTransform& f) {
  require_endomorphism(m, f);
  const std::size_t exponent = m->k_dimension();
  std::vector<MatrixK> kernels, images;
  std::size_t kernel_dim = 0, image_dim = 0;
  for (std::size_t x = 0; x < m->ranks().size(); ++x) {
    const MatrixK g = power(f.component(x).expand(), exponent);
    const auto ker = kernel_basis(g);
    kernels.push_back(MatrixK::from_columns(g.field(), g.rows(), ker));
    images.push_back(column_basis(g));
    kernel_dim += ker.size();
    image_dim += images.back().cols();
  }
  if (kernel_dim == 0 || image_dim == 0) return std::nullopt;
  auto parts = summands_from_subspaces(m, {kernels, images});
  return FittingSplit{std::move(parts[0]), std::move(parts[1])};
}

std::optional<MinpolySplit> minpoly_split(const ModulePtr& m, const NatTransform& f) {
  require_endomorphism(m, f);
  const PrimeField& field = m->algebra()->field();
  std::vector<Factor> factors = endomorphism_factors(f);
  if (factors.size() < 2) return std::nullopt;

  const PolyK total = product(factors, field);
  MinpolySplit out;
  std::vector<std::vector<MatrixK>> parts;
  for (const auto& fac : factors) {
    const PolyK prime_power = fac.base.pow(fac.multiplicity);
    const PolyK cofactor = total / prime_power;
    // s*cofactor + t*prime_power = 1, so s*cofactor is 1 mod q_i^e_i and 0 mod the rest.
    const ExtendedGcd eg = extended_gcd(cofactor, prime_power);
    const PolyK idem = (eg.s * cofactor) % total;
    NatTransform e = evaluate(idem, f);
    std::vector<MatrixK> images;
    for (const auto& c : e.components()) images.push_back(c.expand());
    parts.push_back(std::move(images));
    out.idempotents.push_back(std::move(e));
  }
  out.summands = summands_from_subspaces(m, parts);
  out.factors = std::move(factors);
  return out;
}

}  // namespace plift
