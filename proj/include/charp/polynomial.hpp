#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "charp/fp.hpp"
#include "charp/multi_index.hpp"
#include "charp/ring.hpp"

namespace charp {

/// Sparse polynomial over F_p in the ring's basis elements. Terms are kept
/// sorted ascending by RingContext::compare, with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    MultiIndex exponent;
    std::uint32_t coeff;
    bool operator==(const Term&) const = default;
  };

  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, std::size_t position);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial monomial(Ring ring, MultiIndex exponent, std::int64_t c = 1);
  /// Sorts, combines duplicates, drops zeros. Coefficients must be < p.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term coefficient.
  std::uint32_t constant_value() const noexcept;
  std::uint32_t coefficient(const MultiIndex& exponent) const noexcept;
  /// Highest term under the canonical order. Requires !is_zero().
  const Term& leading_term() const { return terms_.back(); }
  std::uint64_t total_degree() const noexcept;
  /// Componentwise maximum of term exponents.
  MultiIndex max_exponents() const;
  /// True if every term involves only base parameters.
  bool is_parameter_only() const noexcept;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(std::uint32_t c) const;
  Polynomial shift(const MultiIndex& m) const;  // multiply by B^m

  /// Exact equality of term lists; throws RingMismatch on incompatible rings.
  bool operator==(const Polynomial& o) const;

  /// Canonical text form, highest term first: `x^2+v*y^2`, `0`.
  std::string to_string() const;

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms);
  void check_ring(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, std::uint64_t e);

/// Product over positions of C(a_i, b_i) mod p, via base-p digits (Lucas).
FpScalar lucas_binomial(const MultiIndex& a, const MultiIndex& b, std::uint32_t p);
/// Single binomial C(n, k) mod p by Lucas' digitwise rule.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// f = sum_alpha g_alpha^p * B^alpha with every alpha entry in [0, p).
using PPowerDecomposition = std::map<MultiIndex, Polynomial>;
PPowerDecomposition p_power_decompose(const Polynomial& f);
Polynomial p_power_reconstruct(const Ring& ring, const PPowerDecomposition& parts);

}  // namespace charp
