#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "charp/polynomial.hpp"

namespace charp {

/// D^[B;beta](f): each term c*B^alpha maps to C(alpha, beta)*c*B^(alpha-beta).
Polynomial hasse(const Polynomial& f, const MultiIndex& beta);

/// The same operator computed from its definition as a Taylor coefficient:
/// substitute b -> b + t_b for every b in the support of beta, expand, and
/// read off the coefficient of T^beta. Shares no code path with hasse().
Polynomial taylor_hasse(const Polynomial& f, const MultiIndex& beta);

/// First-order partial with respect to a basis element.
Polynomial partial(const Polynomial& f, std::size_t position);
Polynomial partial(const Polynomial& f, std::string_view name);

/// c with D^beta o D^beta' = c * D^(beta + beta').
FpScalar compose_scalar(const MultiIndex& beta, const MultiIndex& beta_prime, std::uint32_t p);

/// A finite combination sum_beta c_beta * D^beta with polynomial coefficients.
class DiffOperator {
 public:
  DiffOperator(Ring ring, std::uint64_t declared_order);

  /// Adds c to the coefficient of D^beta. Throws InvalidArgument if
  /// |beta| exceeds the declared order.
  void add_term(const MultiIndex& beta, const Polynomial& c);

  const Ring& ring() const noexcept { return ring_; }
  std::uint64_t declared_order() const noexcept { return order_; }
  const std::map<MultiIndex, Polynomial>& coefficients() const noexcept { return coeffs_; }
  /// Zero polynomial when beta is not in the support.
  Polynomial coefficient(const MultiIndex& beta) const;

  Polynomial apply(const Polynomial& f) const;
  Polynomial operator()(const Polynomial& f) const { return apply(f); }

 private:
  Ring ring_;
  std::uint64_t order_;
  std::map<MultiIndex, Polynomial> coeffs_;
};

using OpaqueOperator = std::function<Polynomial(const Polynomial&)>;

/// Recovers the coefficients of an operator of order <= n from its action on
/// monomials: c_beta = sum_{gamma <= beta} C(beta, gamma)(-1)^|gamma| B^gamma
/// op(B^(beta - gamma)). The result is checked against op on every monomial
/// of degree <= degree_bound - n; a mismatch raises OrderViolation.
DiffOperator decompose_blackbox(const Ring& ring, const OpaqueOperator& op, std::uint64_t n,
                                std::uint64_t degree_bound);

}  // namespace charp
