#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "charp/fraction.hpp"
#include "charp/polynomial.hpp"

namespace charp {

/// An ideal of k[x] given by generators in F_p[v, x]. Zero generators are
/// dropped, so the zero ideal has no generators.
class Ideal {
 public:
  explicit Ideal(Ring ring);
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

/// Compares exponents over the geometric variables only (relative indices).
class TermOrder {
 public:
  TermOrder(MonomialOrder order, std::size_t num_variables) : order_(order), n_(num_variables) {}
  std::strong_ordering operator()(const MultiIndex& a, const MultiIndex& b) const noexcept;
  MonomialOrder tag() const noexcept { return order_; }

 private:
  MonomialOrder order_;
  std::size_t n_;
};

/// A polynomial in the geometric variables with coefficients in F_p(v).
/// Exponent position i refers to the ring's i-th geometric variable. Terms
/// are sorted ascending under the term order.
class KPolynomial {
 public:
  struct Term {
    MultiIndex exponent;
    Fraction coeff;
  };

  KPolynomial(Ring ring, TermOrder order) : ring_(std::move(ring)), order_(order) {}
  static KPolynomial from_polynomial(const Polynomial& f, TermOrder order);

  const Ring& ring() const noexcept { return ring_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading_term() const { return terms_.back(); }
  const MultiIndex& leading_monomial() const { return terms_.back().exponent; }

  /// this - c * x^shift * g
  KPolynomial sub_scaled(const Fraction& c, const MultiIndex& shift, const KPolynomial& g) const;
  KPolynomial monic() const;
  KPolynomial tail() const;
  void push_leading(Term t) { terms_.push_back(std::move(t)); }
  void pop_leading() { terms_.pop_back(); }

  /// The associate in F_p[v, x]: denominators cleared, content over F_p[v]
  /// removed, canonical leading coefficient 1.
  Polynomial to_polynomial() const;
  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  Ring ring_;
  TermOrder order_;
  std::vector<Term> terms_;
};

/// Reduced Groebner basis: monic, interreduced, largest leading monomial first.
struct GroebnerBasis {
  Ring ring;
  MonomialOrder order;
  std::vector<KPolynomial> elements;

  bool is_unit() const;
  /// Associates in F_p[v, x], in basis order.
  std::vector<Polynomial> polynomials() const;
};

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order = MonomialOrder::Grevlex);

KPolynomial s_polynomial(const KPolynomial& f, const KPolynomial& g);
/// Full reduction against a set of monic polynomials.
KPolynomial reduce(const KPolynomial& f, const std::vector<KPolynomial>& divisors);
/// Complete reduction of f modulo G, returned as an associate in F_p[v, x].
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool member(const Polynomial& f, const Ideal& ideal);
bool member(const Polynomial& f, const GroebnerBasis& basis);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Krull dimension of k[x]/I from the leading-term ideal: the size of a
/// largest set of variables containing no leading monomial's support.
/// Throws UnitIdeal if 1 is in I.
std::size_t dimension(const Ideal& ideal);
/// The same, from leading monomials (relative exponents) directly.
std::size_t monomial_dimension(const std::vector<MultiIndex>& monomials, std::size_t num_variables);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// All r-element subsets of {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r);

/// Cofactor expansion along the first row; T needs +, -, * and is_zero().
template <typename T>
T determinant(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  T acc = m[0][0] - m[0][0];
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<T>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    T term = m[0][j] * determinant(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// The submatrix on the given rows and columns.
template <typename T>
std::vector<std::vector<T>> submatrix(const std::vector<std::vector<T>>& m,
                                      const std::vector<std::size_t>& rows,
                                      const std::vector<std::size_t>& cols) {
  std::vector<std::vector<T>> out;
  out.reserve(rows.size());
  for (std::size_t i : rows) {
    std::vector<T> row;
    row.reserve(cols.size());
    for (std::size_t j : cols) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

/// All r x r minors, ordered lexicographically by (row tuple, column tuple).
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t r);

}  // namespace charp
