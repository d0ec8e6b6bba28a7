#include "charp/fp.hpp"

#include "charp/error.hpp"

namespace charp {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
  std::uint32_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_p");
  return pow(a, p - 2, p);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace fp
}  // namespace charp
