#include "plift/field.hpp"

#include <string>

#include "plift/error.hpp"

namespace plift {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p > 0x7FFFFFFFu) {
    throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " outside [2, 2^31-1]");
  }
  if (!is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
  }
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem result = one();
  while (e > 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a.value == 0) throw Error(ErrorKind::NotAUnit, "zero has no inverse in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

}  // namespace plift
