#include "charp/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "charp/error.hpp"

namespace charp {

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(Ring ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  return monomial(std::move(ring), MultiIndex{}, c);
}

Polynomial Polynomial::variable(Ring ring, std::size_t position) {
  if (position >= ring->size())
    throw Error(ErrorCode::InvalidArgument, "basis position out of range");
  return monomial(std::move(ring), MultiIndex::unit(position), 1);
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  auto pos = ring->find(name);
  if (!pos) throw Error(ErrorCode::UnknownIdentifier, std::string(name));
  return variable(std::move(ring), *pos);
}

Polynomial Polynomial::monomial(Ring ring, MultiIndex exponent, std::int64_t c) {
  if (exponent.length() > ring->size())
    throw Error(ErrorCode::InvalidArgument, "exponent outside the ring basis");
  std::uint32_t r = fp::reduce(c, ring->modulus());
  std::vector<Term> terms;
  if (r != 0) terms.push_back({std::move(exponent), r});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const auto p = ring->modulus();
  for (const auto& t : terms)
    if (t.exponent.length() > ring->size())
      throw Error(ErrorCode::InvalidArgument, "exponent outside the ring basis");
  const RingContext& ctx = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ctx.compare(a.exponent, b.exponent) < 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % p;
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff = fp::add(out.back().coeff, c, p);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back({std::move(t.exponent), c});
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!ring_->compatible(*o.ring_))
    throw Error(ErrorCode::RingMismatch, "operands belong to different rings");
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint32_t Polynomial::constant_value() const noexcept { return coefficient(MultiIndex{}); }

std::uint32_t Polynomial::coefficient(const MultiIndex& exponent) const noexcept {
  const RingContext& ctx = *ring_;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [&](const Term& t, const MultiIndex& e) { return ctx.compare(t.exponent, e) < 0; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponent.order());
  return d;
}

MultiIndex Polynomial::max_exponents() const {
  MultiIndex m;
  for (const auto& t : terms_) m = lcm(m, t.exponent);
  return m;
}

bool Polynomial::is_parameter_only() const noexcept {
  for (const auto& t : terms_)
    if (t.exponent.length() > ring_->num_params()) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  const auto p = ring_->modulus();
  const RingContext& ctx = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && ctx.compare(a->exponent, b->exponent) < 0)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || ctx.compare(a->exponent, b->exponent) > 0) {
      out.push_back(*b++);
    } else {
      std::uint32_t c = fp::add(a->coeff, b->coeff, p);
      if (c != 0) out.push_back({a->exponent, c});
      ++a;
      ++b;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const auto p = ring_->modulus();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = fp::neg(t.coeff, p);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const auto p = ring_->modulus();
  std::unordered_map<MultiIndex, std::uint32_t> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) {
      auto& slot = acc[s.exponent + t.exponent];
      slot = fp::add(slot, fp::mul(s.coeff, t.coeff, p), p);
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back({e, c});
  const RingContext& ctx = *ring_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ctx.compare(a.exponent, b.exponent) < 0; });
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(std::uint32_t c) const {
  const auto p = ring_->modulus();
  c %= p;
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = fp::mul(t.coeff, c, p);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::shift(const MultiIndex& m) const {
  if (m.length() > ring_->size()) throw Error(ErrorCode::InvalidArgument, "exponent outside basis");
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exponent = t.exponent + m;
  // Multiplication by a monomial preserves a monomial order.
  return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_ring(o);
  return terms_ == o.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += '+';
    bool wrote = false;
    if (it->coeff != 1 || it->exponent.is_zero()) {
      out += std::to_string(it->coeff);
      wrote = true;
    }
    for (std::size_t i = 0; i < it->exponent.length(); ++i) {
      Exponent e = it->exponent[i];
      if (e == 0) continue;
      if (wrote) out += '*';
      out += ring_->element(i).name;
      if (e != 1) out += '^' + std::to_string(e);
      wrote = true;
    }
  }
  return out;
}

Polynomial pow(const Polynomial& f, std::uint64_t e) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint32_t result = 1;
  while (n > 0 || k > 0) {
    std::uint32_t nd = static_cast<std::uint32_t>(n % p);
    std::uint32_t kd = static_cast<std::uint32_t>(k % p);
    if (kd > nd) return 0;
    // C(nd, kd) with nd < p: ratio of factorials, all invertible.
    std::uint32_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < kd; ++i) {
      num = fp::mul(num, nd - i, p);
      den = fp::mul(den, i + 1, p);
    }
    result = fp::mul(result, fp::mul(num, fp::inv(den, p), p), p);
    n /= p;
    k /= p;
  }
  return result;
}

FpScalar lucas_binomial(const MultiIndex& a, const MultiIndex& b, std::uint32_t p) {
  if (!b.le(a)) return FpScalar(0, p);
  std::uint32_t result = 1 % p;
  for (std::size_t i = 0; i < b.length() && result != 0; ++i)
    result = fp::mul(result, binomial_mod(a[i], b[i], p), p);
  return FpScalar(result, p);
}

PPowerDecomposition p_power_decompose(const Polynomial& f) {
  const Ring& ring = f.ring();
  const auto p = ring->modulus();
  std::map<MultiIndex, std::vector<Polynomial::Term>> buckets;
  for (const auto& t : f.terms()) {
    std::vector<Exponent> rem(t.exponent.length()), quo(t.exponent.length());
    for (std::size_t i = 0; i < t.exponent.length(); ++i) {
      rem[i] = t.exponent[i] % p;
      quo[i] = t.exponent[i] / p;
    }
    // c^(1/p) = c in F_p.
    buckets[MultiIndex(std::move(rem))].push_back({MultiIndex(std::move(quo)), t.coeff});
  }
  PPowerDecomposition out;
  for (auto& [alpha, terms] : buckets)
    out.emplace(alpha, Polynomial::from_terms(ring, std::move(terms)));
  return out;
}

Polynomial p_power_reconstruct(const Ring& ring, const PPowerDecomposition& parts) {
  Polynomial out(ring);
  for (const auto& [alpha, g] : parts) out += pow(g, ring->modulus()).shift(alpha);
  return out;
}

}  // namespace charp
