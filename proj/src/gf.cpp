#include "budr/gf.hpp"

namespace budr {

std::uint32_t Fp::p_ = 0;

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

void Fp::set_modulus(std::uint32_t p) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("GF(p) modulus must be an odd prime >= 3, got " +
                                std::to_string(p));
  p_ = p;
}

Fp Fp::inv() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in GF(p)");
  // extended Euclid on (v, p)
  std::int64_t r0 = v_, r1 = p_, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  std::int64_t s = s0 % static_cast<std::int64_t>(p_);
  if (s < 0) s += p_;
  return raw(static_cast<std::uint32_t>(s));
}

}  // namespace budr
