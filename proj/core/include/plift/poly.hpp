#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "plift/field.hpp"

namespace plift {

// Univariate polynomial over F_p, lowest degree first, trailing zeros
// stripped. The zero polynomial has no coefficients and degree -1.
class PolyK {
 public:
  explicit PolyK(PrimeField field);
  PolyK(PrimeField field, std::vector<FieldElem> coeffs);
  static PolyK from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs);
  static PolyK monomial(PrimeField field, std::size_t degree);
  static PolyK constant(PrimeField field, FieldElem c);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  FieldElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FieldElem{}; }
  FieldElem leading() const noexcept { return coeffs_.empty() ? FieldElem{} : coeffs_.back(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == field_.one(); }

  PolyK monic() const;

  PolyK operator+(const PolyK& rhs) const;
  PolyK operator-(const PolyK& rhs) const;
  PolyK operator*(const PolyK& rhs) const;
  PolyK scaled(FieldElem c) const;
  PolyK pow(unsigned e) const;

  // Euclidean division; throws InvalidArgument on a zero divisor.
  std::pair<PolyK, PolyK> divmod(const PolyK& divisor) const;
  PolyK operator/(const PolyK& rhs) const { return divmod(rhs).first; }
  PolyK operator%(const PolyK& rhs) const { return divmod(rhs).second; }

  FieldElem evaluate(FieldElem x) const;

  friend bool operator==(const PolyK&, const PolyK&) = default;

  std::string to_string() const;

 private:
  void strip();

  PrimeField field_;
  std::vector<FieldElem> coeffs_;
};

// Monic gcd (zero if both inputs are zero).
PolyK gcd(const PolyK& a, const PolyK& b);

struct ExtendedGcd {
  PolyK g;  // monic
  PolyK s;
  PolyK t;  // s*a + t*b = g
};
ExtendedGcd extended_gcd(const PolyK& a, const PolyK& b);

struct Factor {
  PolyK base;  // monic irreducible
  unsigned multiplicity;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Factorization of a monic polynomial of degree >= 1 by trial division against
// the monic irreducibles in degree-then-lexicographic order. Factors are
// returned in that order.
std::vector<Factor> factor_poly(const PolyK& f);

// Merge factorizations into the factorization of their least common multiple.
std::vector<Factor> lcm_factors(const std::vector<std::vector<Factor>>& parts);

PolyK product(const std::vector<Factor>& factors, PrimeField field);

}  // namespace plift
