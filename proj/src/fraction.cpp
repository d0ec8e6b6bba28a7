#include "charp/fraction.hpp"

#include <algorithm>
#include <set>

#include "charp/error.hpp"

namespace charp {

namespace {

int top_position(const Polynomial& f) {
  int top = -1;
  for (const auto& t : f.terms()) top = std::max(top, static_cast<int>(t.exponent.length()) - 1);
  return top;
}

Polynomial content_in(const Polynomial& f, std::size_t position) {
  Polynomial c(f.ring());
  for (const auto& coeff : coefficients_in(f, position)) {
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

Polynomial primitive_part(const Polynomial& f, std::size_t position) {
  if (f.is_zero()) return f;
  return divide_exact(f, content_in(f, position));
}

// lc(b)^k * a reduced against b in the given basis element.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t position) {
  const Exponent db = degree_in(b, position);
  const auto bc = coefficients_in(b, position);
  const Polynomial& lcb = bc[db];
  while (!a.is_zero()) {
    Exponent da = degree_in(a, position);
    if (da < db) break;
    Polynomial lca = coefficients_in(a, position)[da];
    a = a * lcb - (lca * b).shift(MultiIndex::unit(position, da - db));
  }
  return a;
}

Polynomial univariate_gcd(Polynomial a, Polynomial b) {
  // Euclid over F_p; exact division by a monic divisor never leaves F_p.
  while (!b.is_zero()) {
    b = make_monic(b);
    const auto& lt = b.leading_term();
    while (!a.is_zero() && lt.exponent.le(a.leading_term().exponent)) {
      const auto& la = a.leading_term();
      a -= b.shift(la.exponent - lt.exponent).scale(la.coeff);
    }
    std::swap(a, b);
  }
  return make_monic(a);
}

}  // namespace

Exponent degree_in(const Polynomial& f, std::size_t position) {
  Exponent d = 0;
  for (const auto& t : f.terms()) d = std::max(d, t.exponent[position]);
  return d;
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t position) {
  const Exponent deg = degree_in(f, position);
  std::vector<std::vector<Polynomial::Term>> buckets(deg + 1);
  for (const auto& t : f.terms())
    buckets[t.exponent[position]].push_back({t.exponent.with(position, 0), t.coeff});
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.ring(), std::move(b)));
  return out;
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  std::uint32_t lc = f.leading_term().coeff;
  if (lc == 1) return f;
  return f.scale(fp::inv(lc, f.ring()->modulus()));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  const auto p = a.ring()->modulus();
  const auto& lb = b.leading_term();
  const std::uint32_t inv_lb = fp::inv(lb.coeff, p);
  std::vector<Polynomial::Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!lb.exponent.le(lr.exponent))
      throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    MultiIndex m = lr.exponent - lb.exponent;
    std::uint32_t c = fp::mul(lr.coeff, inv_lb, p);
    quotient.push_back({m, c});
    r -= b.shift(m).scale(c);
  }
  return Polynomial::from_terms(a.ring(), std::move(quotient));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
  const int ta = top_position(a), tb = top_position(b);
  const std::size_t var = static_cast<std::size_t>(std::max(ta, tb));

  // Univariate fast path: both live in the same single basis element.
  auto single_var = [](const Polynomial& f, std::size_t v) {
    for (const auto& t : f.terms())
      for (std::size_t i = 0; i < t.exponent.length(); ++i)
        if (i != v && t.exponent[i] != 0) return false;
    return true;
  };
  if (single_var(a, var) && single_var(b, var)) return univariate_gcd(a, b);

  if (degree_in(a, var) == 0) return gcd(a, content_in(b, var));
  if (degree_in(b, var) == 0) return gcd(content_in(a, var), b);

  Polynomial ca = content_in(a, var), cb = content_in(b, var);
  Polynomial pa = divide_exact(a, ca), pb = divide_exact(b, cb);
  Polynomial c = gcd(ca, cb);
  if (degree_in(pa, var) < degree_in(pb, var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (degree_in(r, var) == 0) {
      pa = Polynomial::constant(a.ring(), 1);
      break;
    }
    pb = primitive_part(r, var);
  }
  return make_monic(c * pa);
}

Fraction::Fraction(Polynomial numerator)
    : Fraction(numerator, Polynomial::constant(numerator.ring(), 1)) {}

Fraction::Fraction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (!num_.ring()->compatible(*den_.ring()))
    throw Error(ErrorCode::RingMismatch, "fraction parts from different rings");
  if (!num_.is_parameter_only() || !den_.is_parameter_only())
    throw Error(ErrorCode::InvalidArgument,
                "field elements may only involve base parameters");
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.ring(), 1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  std::uint32_t lc = den_.leading_term().coeff;
  if (lc != 1) {
    std::uint32_t inv = fp::inv(lc, num_.ring()->modulus());
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

Fraction::Fraction(Polynomial numerator, Polynomial denominator, Reduced)
    : num_(std::move(numerator)), den_(std::move(denominator)) {}

bool Fraction::is_one() const {
  return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1;
}

Fraction Fraction::operator+(const Fraction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Fraction(num_ + o.num_, den_);
  return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_, Reduced{}); }

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::operator*(const Fraction& o) const {
  if (is_zero() || o.is_zero()) return zero(ring());
  if (den_.is_constant() && o.den_.is_constant()) {
    if (num_.is_constant() || o.num_.is_constant())
      return Fraction(num_ * o.num_, den_ * o.den_, Reduced{});
  }
  Polynomial g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Polynomial a = g1.is_constant() ? num_ : divide_exact(num_, g1);
  Polynomial d = g1.is_constant() ? o.den_ : divide_exact(o.den_, g1);
  Polynomial c = g2.is_constant() ? o.num_ : divide_exact(o.num_, g2);
  Polynomial b = g2.is_constant() ? den_ : divide_exact(den_, g2);
  Polynomial den = b * d;
  Polynomial num = a * c;
  std::uint32_t lc = den.leading_term().coeff;
  if (lc != 1) {
    std::uint32_t inv = fp::inv(lc, ring()->modulus());
    num = num.scale(inv);
    den = den.scale(inv);
  }
  return Fraction(std::move(num), std::move(den), Reduced{});
}

Fraction Fraction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_p(v)");
  Polynomial num = den_, den = num_;
  std::uint32_t lc = den.leading_term().coeff;
  if (lc != 1) {
    std::uint32_t inv = fp::inv(lc, ring()->modulus());
    num = num.scale(inv);
    den = den.scale(inv);
  }
  return Fraction(std::move(num), std::move(den), Reduced{});
}

Fraction Fraction::operator/(const Fraction& o) const { return *this * o.inverse(); }

std::string Fraction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Fraction evaluate(const Polynomial& f, const Point& point) {
  const Ring& ring = f.ring();
  const std::size_t m = ring->num_params();
  const std::size_t n = ring->num_variables();
  for (const auto& [name, value] : point) {
    auto pos = ring->find(name);
    if (!pos || ring->is_parameter(*pos))
      throw Error(ErrorCode::UnknownIdentifier, "'" + name + "' is not a geometric variable");
    if (!value.ring()->compatible(*ring))
      throw Error(ErrorCode::RingMismatch, "point coordinate from a different ring");
  }
  std::vector<const Fraction*> coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& name = ring->element(m + i).name;
    auto it = point.find(name);
    if (it == point.end())
      throw Error(ErrorCode::IncompleteAssignment, "no coordinate for '" + name + "'");
    coords[i] = &it->second;
  }
  // Common denominator prod d_i^maxdeg_i; each term contributes
  // c * v^gamma * prod n_i^e_i * d_i^(maxdeg_i - e_i).
  MultiIndex maxdeg = f.max_exponents();
  std::vector<std::vector<Polynomial>> num_pows(n), den_pows(n);
  Polynomial common = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent d = maxdeg[m + i];
    num_pows[i].push_back(Polynomial::constant(ring, 1));
    den_pows[i].push_back(Polynomial::constant(ring, 1));
    for (Exponent e = 1; e <= d; ++e) {
      num_pows[i].push_back(num_pows[i].back() * coords[i]->numerator());
      den_pows[i].push_back(den_pows[i].back() * coords[i]->denominator());
    }
    common *= den_pows[i][d];
  }
  Polynomial numerator(ring);
  for (const auto& t : f.terms()) {
    std::vector<Exponent> params(std::min<std::size_t>(m, t.exponent.length()));
    for (std::size_t j = 0; j < params.size(); ++j) params[j] = t.exponent[j];
    Polynomial term = Polynomial::monomial(ring, MultiIndex(std::move(params)), t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e = t.exponent[m + i];
      Exponent d = maxdeg[m + i];
      if (d == 0) continue;
      term = term * num_pows[i][e] * den_pows[i][d - e];
    }
    numerator += term;
  }
  return Fraction(std::move(numerator), std::move(common));
}

}  // namespace charp
