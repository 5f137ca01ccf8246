#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace plift {

// Canonical residue in [0, p). Only PrimeField produces these; arithmetic goes
// through the field so that every stored value stays reduced.
struct FieldElem {
  std::uint32_t value = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

using VectorK = std::vector<FieldElem>;

// The prime field F_p, 2 <= p <= 2^31 - 1.
class PrimeField {
 public:
  // Throws Error(InvalidArgument) if p is out of range or composite.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }

  FieldElem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + (p_ - b.value)};
  }
  FieldElem neg(FieldElem a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    return {static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % p_)};
  }
  // a + b*c
  FieldElem fma(FieldElem a, FieldElem b, FieldElem c) const noexcept {
    return {static_cast<std::uint32_t>((std::uint64_t{a.value} + std::uint64_t{b.value} * c.value) % p_)};
  }
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  // Throws Error(NotAUnit) on zero.
  FieldElem inv(FieldElem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace plift
