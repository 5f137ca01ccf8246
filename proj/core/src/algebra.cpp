#include "plift/algebra.hpp"

#include <sstream>

namespace plift {

ArtinAlgebra::ArtinAlgebra(PrimeField field, std::vector<std::string> basis_names, std::vector<FieldElem> structure)
    : field_(field), names_(std::move(basis_names)), table_(std::move(structure)) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "algebra needs at least the basis element 1");
  if (names_[0] != "1") throw Error(ErrorKind::InvalidArgument, "first basis element must be named \"1\"");
  if (table_.size() != n * n * n) {
    throw Error(ErrorKind::ShapeMismatch, "structure table has " + std::to_string(table_.size()) +
                                              " constants, expected " + std::to_string(n * n * n));
  }
  for (FieldElem c : table_)
    if (c.value >= field_.modulus()) throw Error(ErrorKind::InvalidArgument, "structure constant not reduced");
}

ArtinAlgebra ArtinAlgebra::field_algebra(PrimeField field) { return ArtinAlgebra(field, {"1"}, {field.one()}); }

ArtinAlgebra ArtinAlgebra::truncated_polynomial(PrimeField field, std::size_t length, const std::string& var) {
  if (length == 0) throw Error(ErrorKind::InvalidArgument, "truncated polynomial ring needs length >= 1");
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < length; ++i) names.push_back(i == 1 ? var : var + "^" + std::to_string(i));
  std::vector<FieldElem> table(length * length * length);
  for (std::size_t i = 0; i < length; ++i)
    for (std::size_t j = 0; j < length; ++j)
      if (i + j < length) table[(i * length + j) * length + i + j] = field.one();
  return ArtinAlgebra(field, std::move(names), std::move(table));
}

ArtinAlgebra ArtinAlgebra::square_zero(PrimeField field, const std::vector<std::string>& generators) {
  std::vector<std::string> names{"1"};
  names.insert(names.end(), generators.begin(), generators.end());
  const std::size_t n = names.size();
  std::vector<FieldElem> table(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[(0 * n + i) * n + i] = field.one();
    table[(i * n + 0) * n + i] = field.one();
  }
  return ArtinAlgebra(field, std::move(names), std::move(table));
}

void ArtinAlgebra::check_element(const RingElem& a) const {
  if (a.coeffs.size() != dim()) {
    throw Error(ErrorKind::ShapeMismatch,
                "ring element has " + std::to_string(a.coeffs.size()) + " coordinates, algebra has dimension " +
                    std::to_string(dim()));
  }
}

RingElem ArtinAlgebra::basis(std::size_t i) const {
  RingElem e = zero();
  e.coeffs.at(i) = field_.one();
  return e;
}

RingElem ArtinAlgebra::from_scalar(FieldElem c) const {
  RingElem e = zero();
  e.coeffs[0] = c;
  return e;
}

RingElem ArtinAlgebra::from_ints(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() != dim()) throw Error(ErrorKind::ShapeMismatch, "coefficient vector length differs from dim R");
  RingElem e = zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.coeffs[i] = field_.from_int(coeffs[i]);
  return e;
}

RingElem ArtinAlgebra::add(const RingElem& a, const RingElem& b) const {
  check_element(a);
  check_element(b);
  RingElem r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

RingElem ArtinAlgebra::sub(const RingElem& a, const RingElem& b) const {
  check_element(a);
  check_element(b);
  RingElem r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

RingElem ArtinAlgebra::neg(const RingElem& a) const {
  check_element(a);
  RingElem r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.neg(a.coeffs[i]);
  return r;
}

RingElem ArtinAlgebra::scale(FieldElem c, const RingElem& a) const {
  check_element(a);
  RingElem r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = field_.mul(c, a.coeffs[i]);
  return r;
}

RingElem ArtinAlgebra::mul(const RingElem& a, const RingElem& b) const {
  check_element(a);
  check_element(b);
  const std::size_t n = dim();
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i].value == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs[j].value == 0) continue;
      const std::uint64_t ab = std::uint64_t{a.coeffs[i].value} * b.coeffs[j].value % p;
      const FieldElem* c = &table_[(i * n + j) * n];
      for (std::size_t l = 0; l < n; ++l) acc[l] = (acc[l] + ab * c[l].value) % p;
    }
  }
  RingElem r = zero();
  for (std::size_t l = 0; l < n; ++l) r.coeffs[l] = {static_cast<std::uint32_t>(acc[l])};
  return r;
}

bool ArtinAlgebra::is_zero(const RingElem& a) const {
  check_element(a);
  for (FieldElem c : a.coeffs)
    if (c.value != 0) return false;
  return true;
}

RingElem ArtinAlgebra::inverse(const RingElem& a) const {
  check_element(a);
  const FieldElem u = residue(a);
  if (u.value == 0) throw Error(ErrorKind::NotAUnit, format(a) + " has zero residue");
  const FieldElem u_inv = field_.inv(u);
  // a = u (1 - x) with x = 1 - a/u nilpotent, so a^{-1} = u^{-1} (1 + x + x^2 + ...).
  const RingElem x = sub(one(), scale(u_inv, a));
  RingElem sum = zero();
  RingElem term = one();
  for (std::size_t i = 0; i < dim(); ++i) {
    sum = add(sum, term);
    term = mul(term, x);
  }
  return scale(u_inv, sum);
}

MatrixK ArtinAlgebra::multiplication_matrix(const RingElem& a) const {
  check_element(a);
  const std::size_t n = dim();
  MatrixK m(field_, n, n);
  // column l is a * b_l
  for (std::size_t q = 0; q < n; ++q) {
    if (a.coeffs[q].value == 0) continue;
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t r = 0; r < n; ++r) m.at(r, l) = field_.fma(m.at(r, l), a.coeffs[q], structure_constant(q, l, r));
  }
  return m;
}

std::string ArtinAlgebra::format(const RingElem& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const auto c = a.coeffs[i].value;
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << names_[i];
    }
  }
  if (first) os << '0';
  return os.str();
}

namespace {

std::vector<VectorK> echelon_rows(PrimeField field, std::size_t n, const std::vector<VectorK>& rows) {
  if (rows.empty()) return {};
  const RrefResult r = rref(MatrixK::from_rows(field, n, rows));
  std::vector<VectorK> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.reduced.row(i));
  return out;
}

// powers[k-1] = echelon basis of m^k, for k = 1..max_power.
std::vector<std::vector<VectorK>> ideal_powers(const ArtinAlgebra& a, std::size_t max_power) {
  const std::size_t n = a.dim();
  std::vector<std::vector<VectorK>> powers;
  std::vector<VectorK> current;
  for (std::size_t i = 1; i < n; ++i) current.push_back(a.basis(i).coeffs);
  current = echelon_rows(a.field(), n, current);
  for (std::size_t k = 1; k <= max_power; ++k) {
    powers.push_back(current);
    if (current.empty()) {
      // all further powers vanish too
      continue;
    }
    std::vector<VectorK> next;
    for (std::size_t i = 1; i < n; ++i)
      for (const auto& v : current) next.push_back(a.mul(a.basis(i), RingElem{v}).coeffs);
    current = echelon_rows(a.field(), n, next);
  }
  return powers;
}

}  // namespace

std::vector<RingElem> ideal_power_basis(const ArtinAlgebra& a, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "ideal power exponent must be >= 1");
  const auto powers = ideal_powers(a, k);
  std::vector<RingElem> out;
  for (const auto& v : powers.back()) out.push_back(RingElem{v});
  return out;
}

std::size_t nilpotency_index(const ArtinAlgebra& a) {
  const auto powers = ideal_powers(a, a.dim() + 1);
  for (std::size_t k = 0; k < powers.size(); ++k)
    if (powers[k].empty()) return k + 1;
  throw Error(ErrorKind::InvalidArgument, "maximal ideal is not nilpotent");
}

Validation validate_algebra(const ArtinAlgebra& a) {
  const std::size_t n = a.dim();
  const auto idx = [](std::initializer_list<std::size_t> ids) {
    std::string s = "(";
    bool first = true;
    for (std::size_t i : ids) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(i);
    }
    return s + ")";
  };

  for (std::size_t i = 0; i < n; ++i) {
    const RingElem bi = a.basis(i);
    if (!(a.mul(a.one(), bi) == bi) || !(a.mul(bi, a.one()) == bi)) {
      return Diagnostic{"NotUnital", "b_0 does not act as identity on basis index " + idx({i})};
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(a.mul(a.basis(i), a.basis(j)) == a.mul(a.basis(j), a.basis(i))))
        return Diagnostic{"NotCommutative", "b_i b_j != b_j b_i at basis indices " + idx({i, j})};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RingElem bij = a.mul(a.basis(i), a.basis(j));
      for (std::size_t l = 0; l < n; ++l)
        if (!(a.mul(bij, a.basis(l)) == a.mul(a.basis(i), a.mul(a.basis(j), a.basis(l)))))
          return Diagnostic{"NotAssociative", "(b_i b_j) b_l != b_i (b_j b_l) at basis indices " + idx({i, j, l})};
    }
  const auto powers = ideal_powers(a, n);
  if (!powers.back().empty()) {
    const RingElem w{powers.back().front()};
    return Diagnostic{"MaxIdealNotNilpotent",
                      "m^" + std::to_string(n) + " contains the nonzero element " + a.format(w)};
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (a.residue(a.mul(a.basis(i), a.basis(j))).value != 0)
        return Diagnostic{"MaxIdealNotClosed", "b_i b_j has a nonzero b_0 coefficient at basis indices " + idx({i, j})};
  return std::nullopt;
}

}  // namespace plift
