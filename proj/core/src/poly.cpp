#include "plift/poly.hpp"

#include <algorithm>
#include <sstream>

#include "plift/error.hpp"

namespace plift {

PolyK::PolyK(PrimeField field) : field_(field) {}

PolyK::PolyK(PrimeField field, std::vector<FieldElem> coeffs) : field_(field), coeffs_(std::move(coeffs)) { strip(); }

PolyK PolyK::from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElem> c;
  for (std::int64_t v : coeffs) c.push_back(field.from_int(v));
  return PolyK(field, std::move(c));
}

PolyK PolyK::monomial(PrimeField field, std::size_t degree) {
  std::vector<FieldElem> c(degree + 1);
  c[degree] = field.one();
  return PolyK(field, std::move(c));
}

PolyK PolyK::constant(PrimeField field, FieldElem c) { return PolyK(field, {c}); }

void PolyK::strip() {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

PolyK PolyK::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

PolyK PolyK::operator+(const PolyK& rhs) const {
  std::vector<FieldElem> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.add(coeff(i), rhs.coeff(i));
  return PolyK(field_, std::move(c));
}

PolyK PolyK::operator-(const PolyK& rhs) const {
  std::vector<FieldElem> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.sub(coeff(i), rhs.coeff(i));
  return PolyK(field_, std::move(c));
}

PolyK PolyK::operator*(const PolyK& rhs) const {
  if (is_zero() || rhs.is_zero()) return PolyK(field_);
  std::vector<FieldElem> c(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] = field_.fma(c[i + j], coeffs_[i], rhs.coeffs_[j]);
  return PolyK(field_, std::move(c));
}

PolyK PolyK::scaled(FieldElem c) const {
  std::vector<FieldElem> out(coeffs_);
  for (auto& e : out) e = field_.mul(e, c);
  return PolyK(field_, std::move(out));
}

PolyK PolyK::pow(unsigned e) const {
  PolyK result = constant(field_, field_.one());
  PolyK base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::pair<PolyK, PolyK> PolyK::divmod(const PolyK& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<FieldElem> rem(coeffs_);
  const int dd = divisor.degree();
  if (degree() < dd) return {PolyK(field_), *this};
  std::vector<FieldElem> quot(static_cast<std::size_t>(degree() - dd + 1));
  const FieldElem lead_inv = field_.inv(divisor.leading());
  for (int i = degree(); i >= dd; --i) {
    const FieldElem q = field_.mul(rem[static_cast<std::size_t>(i)], lead_inv);
    quot[static_cast<std::size_t>(i - dd)] = q;
    if (q.value == 0) continue;
    const FieldElem nq = field_.neg(q);
    for (int j = 0; j <= dd; ++j) {
      auto& r = rem[static_cast<std::size_t>(i - dd + j)];
      r = field_.fma(r, nq, divisor.coeffs_[static_cast<std::size_t>(j)]);
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {PolyK(field_, std::move(quot)), PolyK(field_, std::move(rem))};
}

FieldElem PolyK::evaluate(FieldElem x) const {
  FieldElem acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.fma(*it, acc, x);
  return acc;
}

std::string PolyK::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const FieldElem c = coeffs_[static_cast<std::size_t>(i)];
    if (c.value == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c.value != 1) os << c.value;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

PolyK gcd(const PolyK& a, const PolyK& b) {
  PolyK x = a, y = b;
  while (!y.is_zero()) {
    PolyK r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const PolyK& a, const PolyK& b) {
  const PrimeField& f = a.field();
  PolyK r0 = a, r1 = b;
  PolyK s0 = PolyK::constant(f, f.one()), s1(f);
  PolyK t0(f), t1 = PolyK::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyK s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    PolyK t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElem li = f.inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

namespace {

// Degree first, then coefficients compared from x^{d-1} downwards.
bool enumeration_less(const PolyK& a, const PolyK& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ca = a.coeff(static_cast<std::size_t>(i)).value;
    const auto cb = b.coeff(static_cast<std::size_t>(i)).value;
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

std::vector<Factor> factor_poly(const PolyK& f) {
  if (f.degree() < 1 || !f.is_monic()) {
    throw Error(ErrorKind::InvalidArgument, "factor_poly expects a monic polynomial of degree >= 1");
  }
  const PrimeField& field = f.field();
  const std::uint32_t p = field.modulus();
  std::vector<Factor> out;
  PolyK rem = f;

  // Any candidate that divides `rem` is irreducible, because every monic
  // polynomial of smaller degree has already been divided out.
  for (int d = 1; 2 * d <= rem.degree(); ++d) {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(d), 0);  // digits[0] is the x^{d-1} coefficient
    while (true) {
      std::vector<FieldElem> c(static_cast<std::size_t>(d) + 1);
      c[static_cast<std::size_t>(d)] = field.one();
      for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(d - 1 - i)] = {digits[static_cast<std::size_t>(i)]};
      const PolyK candidate(field, std::move(c));

      unsigned mult = 0;
      while (true) {
        auto [q, r] = rem.divmod(candidate);
        if (!r.is_zero()) break;
        rem = std::move(q);
        ++mult;
      }
      if (mult > 0) out.push_back({candidate, mult});
      if (2 * d > rem.degree()) break;

      int pos = d - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p) digits[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
  }
  if (rem.degree() >= 1) out.push_back({rem, 1});
  return out;
}

std::vector<Factor> lcm_factors(const std::vector<std::vector<Factor>>& parts) {
  std::vector<Factor> out;
  for (const auto& part : parts) {
    for (const auto& fac : part) {
      auto it = std::find_if(out.begin(), out.end(), [&](const Factor& o) { return o.base == fac.base; });
      if (it == out.end()) {
        out.push_back(fac);
      } else {
        it->multiplicity = std::max(it->multiplicity, fac.multiplicity);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return enumeration_less(a.base, b.base); });
  return out;
}

PolyK product(const std::vector<Factor>& factors, PrimeField field) {
  PolyK acc = PolyK::constant(field, field.one());
  for (const auto& f : factors) acc = acc * f.base.pow(f.multiplicity);
  return acc;
}

}  // namespace plift
