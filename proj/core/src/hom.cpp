#include "plift/hom.hpp"

namespace plift {

MatrixK naturality_system(const RepModule& m, const RepModule& n) {
  if (!same_algebra_and_quiver(m, n)) {
    throw Error(ErrorKind::ShapeMismatch, "Hom between modules over different algebras or quivers");
  }
  const ArtinAlgebra& R = *m.algebra();
  const PrimeField& f = R.field();
  const QuiverPresentation& q = *m.quiver();
  const std::size_t d = R.dim();
  const std::size_t nv = q.vertex_count();

  // Unknown layout matches NatTransform::flatten.
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t x = 0; x < nv; ++x) offset[x + 1] = offset[x] + n.rank(x) * m.rank(x) * d;
  const auto unknown = [&](std::size_t x, std::size_t i, std::size_t j, std::size_t l) {
    return offset[x] + (i * m.rank(x) + j) * d + l;
  };

  std::size_t equations = 0;
  for (const auto& arr : q.arrows()) equations += n.rank(arr.target) * m.rank(arr.source) * d;
  MatrixK sys(f, equations, offset[nv]);

  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const std::size_t x = arr.source, y = arr.target;
    const MatrixR& ma = m.arrow_map(a);
    const MatrixR& na = n.arrow_map(a);
    std::vector<MatrixK> l_m, l_n;
    for (std::size_t k = 0; k < m.rank(y); ++k)
      for (std::size_t j = 0; j < m.rank(x); ++j) l_m.push_back(R.multiplication_matrix(ma.at(k, j)));
    for (std::size_t i = 0; i < n.rank(y); ++i)
      for (std::size_t k = 0; k < n.rank(x); ++k) l_n.push_back(R.multiplication_matrix(na.at(i, k)));

    for (std::size_t i = 0; i < n.rank(y); ++i)
      for (std::size_t j = 0; j < m.rank(x); ++j)
        for (std::size_t c = 0; c < d; ++c, ++row) {
          // (f_y M(a))[i][j] = sum_k f_y[i][k] M(a)[k][j]
          for (std::size_t k = 0; k < m.rank(y); ++k) {
            const MatrixK& lm = l_m[k * m.rank(x) + j];
            for (std::size_t l = 0; l < d; ++l) {
              auto& e = sys.at(row, unknown(y, i, k, l));
              e = f.add(e, lm.at(c, l));
            }
          }
          // -(N(a) f_x)[i][j] = -sum_k N(a)[i][k] f_x[k][j]
          for (std::size_t k = 0; k < n.rank(x); ++k) {
            const MatrixK& ln = l_n[i * n.rank(x) + k];
            for (std::size_t l = 0; l < d; ++l) {
              auto& e = sys.at(row, unknown(x, k, j, l));
              e = f.sub(e, ln.at(c, l));
            }
          }
        }
  }
  return sys;
}

std::vector<NatTransform> hom_basis(const ModulePtr& m, const ModulePtr& n) {
  const MatrixK sys = naturality_system(*m, *n);
  std::vector<NatTransform> out;
  if (sys.cols() == 0) return out;
  for (const auto& v : kernel_basis(sys)) out.push_back(NatTransform::unflatten(m, n, v));
  return out;
}

std::optional<VectorK> coordinates(const std::vector<NatTransform>& basis, const NatTransform& f) {
  const VectorK target = f.flatten();
  const PrimeField& field = f.source()->algebra()->field();
  if (basis.empty()) {
    for (FieldElem c : target)
      if (c.value != 0) return std::nullopt;
    return VectorK{};
  }
  std::vector<VectorK> cols;
  for (const auto& b : basis) cols.push_back(b.flatten());
  return solve(MatrixK::from_columns(field, target.size(), cols), target);
}

bool ResidueHom::is_natural() const {
  const QuiverPresentation& q = *source->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (!(components[arr.target] * source->arrow_map(a).residue() ==
          target->arrow_map(a).residue() * components[arr.source])) {
      return false;
    }
  }
  return true;
}

MatrixK ResidueHom::k_linear_component(std::size_t vertex) const {
  const std::size_t n = source->algebra()->dim();
  const MatrixK& g = components.at(vertex);
  MatrixK out(g.field(), g.rows(), g.cols() * n);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out.at(i, j * n) = g.at(i, j);
  return out;
}

bool ResidueHom::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<ResidueHom> hom_to_residue_target(const ModulePtr& m, const ModulePtr& v) {
  if (!v->algebra()->is_field()) throw Error(ErrorKind::InvalidArgument, "residue target must be a module over k");
  if (!(*m->quiver() == *v->quiver()) || !(m->algebra()->field() == v->algebra()->field())) {
    throw Error(ErrorKind::ShapeMismatch, "Hom between modules over different quivers or fields");
  }
  // An R-linear map from a free module into a module killed by m_R is
  // determined by k-linear images of the free generators, and it commutes
  // with M(a) exactly when it commutes with residue(M(a)).
  auto residue = make_module(residue_module(*m));
  std::vector<ResidueHom> out;
  for (const auto& h : hom_basis(residue, v)) {
    std::vector<MatrixK> comps;
    for (const auto& c : h.components()) comps.push_back(c.residue());
    out.push_back(ResidueHom{m, v, std::move(comps)});
  }
  return out;
}

}  // namespace plift
