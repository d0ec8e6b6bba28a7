#pragma once

#include <cstdint>
#include <ostream>

namespace charp {

/// Largest modulus accepted by ring construction. Products of two residues
/// always fit in 64 bits well below this.
inline constexpr std::uint32_t kMaxModulus = 1u << 16;

/// Trial division; adequate for moduli below kMaxModulus.
bool is_prime(std::uint64_t n) noexcept;

namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) noexcept { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept;
/// a must be nonzero mod p.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
/// Reduce an arbitrary signed integer into [0, p).
std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept;

}  // namespace fp

/// An element of the prime field F_p.
class FpScalar {
 public:
  FpScalar(std::int64_t value, std::uint32_t modulus)
      : value_(fp::reduce(value, modulus)), modulus_(modulus) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpScalar operator+(FpScalar o) const { return {fp::add(value_, o.value_, modulus_), modulus_}; }
  FpScalar operator-(FpScalar o) const { return {fp::sub(value_, o.value_, modulus_), modulus_}; }
  FpScalar operator*(FpScalar o) const { return {fp::mul(value_, o.value_, modulus_), modulus_}; }
  FpScalar operator-() const { return {fp::neg(value_, modulus_), modulus_}; }
  FpScalar inverse() const { return {fp::inv(value_, modulus_), modulus_}; }

  bool operator==(const FpScalar&) const = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

inline std::ostream& operator<<(std::ostream& os, FpScalar s) { return os << s.value(); }

}  // namespace charp
