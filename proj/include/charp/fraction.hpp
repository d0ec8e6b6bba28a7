#pragma once

#include <map>
#include <string>
#include <vector>

#include "charp/polynomial.hpp"

namespace charp {

/// Greatest common divisor in F_p[basis], normalized so the leading
/// coefficient is 1 (gcd(0, 0) = 0). Recursive content / primitive-part
/// computation over one basis element at a time.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// a / b when b divides a exactly; throws InvalidArgument otherwise.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
/// Scales f so its leading coefficient is 1 (zero stays zero).
Polynomial make_monic(const Polynomial& f);

/// f viewed as a polynomial in one basis element: coefficient i multiplies
/// that element to the power i and no longer involves it.
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t position);
Exponent degree_in(const Polynomial& f, std::size_t position);

/// An element of k = F_p(v), numerator and denominator supported on base
/// parameters only. Always stored reduced with a monic denominator.
class Fraction {
 public:
  explicit Fraction(Polynomial numerator);
  Fraction(Polynomial numerator, Polynomial denominator);

  static Fraction zero(const Ring& ring) { return Fraction(Polynomial(ring)); }
  static Fraction one(const Ring& ring) { return Fraction(Polynomial::constant(ring, 1)); }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  const Ring& ring() const noexcept { return num_.ring(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  Fraction operator-() const;
  Fraction inverse() const;

  bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// `num` when the denominator is 1, otherwise `(num)/(den)`.
  std::string to_string() const;

 private:
  struct Reduced {};
  Fraction(Polynomial numerator, Polynomial denominator, Reduced);

  Polynomial num_;
  Polynomial den_;
};

/// A rational point: geometric variable name -> coordinate in F_p(v).
using Point = std::map<std::string, Fraction>;

/// Exact substitution of every geometric variable; base parameters stay
/// symbolic. Throws IncompleteAssignment if a variable is missing.
Fraction evaluate(const Polynomial& f, const Point& point);

}  // namespace charp
