#include "charp/diffops.hpp"

#include "charp/error.hpp"

namespace charp {

Polynomial hasse(const Polynomial& f, const MultiIndex& beta) {
  const Ring& ring = f.ring();
  if (beta.length() > ring->size())
    throw Error(ErrorCode::InvalidArgument, "multi-index outside the ring basis");
  if (beta.is_zero()) return f;
  const auto p = ring->modulus();
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms()) {
    if (!beta.le(t.exponent)) continue;
    std::uint32_t c = lucas_binomial(t.exponent, beta, p).value();
    if (c == 0) continue;
    out.push_back({t.exponent - beta, fp::mul(c, t.coeff, p)});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial taylor_hasse(const Polynomial& f, const MultiIndex& beta) {
  const Ring& ring = f.ring();
  if (beta.length() > ring->size())
    throw Error(ErrorCode::InvalidArgument, "multi-index outside the ring basis");

  // Extended ring: original basis followed by one shift variable per
  // element in the support of beta.
  std::vector<std::size_t> shifted;
  for (std::size_t i = 0; i < beta.length(); ++i)
    if (beta[i] != 0) shifted.push_back(i);
  std::vector<std::string> params, vars;
  for (const auto& b : ring->basis())
    (b.role == BasisRole::BaseParameter ? params : vars).push_back(b.name);
  std::vector<std::string> shift_names;
  for (std::size_t i : shifted) {
    std::string name = "t_" + ring->element(i).name;
    while (ring->find(name)) name += "_";
    shift_names.push_back(name);
    vars.push_back(name);
  }
  Ring ext = RingContext::create(ring->modulus(), params, vars);
  const std::size_t base = ring->size();

  // Images b + t_b, and powers cached per exponent.
  std::vector<std::vector<Polynomial>> image_pows(ring->size());
  MultiIndex maxdeg = f.max_exponents();
  for (std::size_t j = 0; j < shifted.size(); ++j) {
    std::size_t i = shifted[j];
    Polynomial image = Polynomial::variable(ext, i) + Polynomial::variable(ext, base + j);
    image_pows[i].push_back(Polynomial::constant(ext, 1));
    for (Exponent e = 1; e <= maxdeg[i]; ++e) image_pows[i].push_back(image_pows[i].back() * image);
  }

  Polynomial expanded(ext);
  for (const auto& t : f.terms()) {
    std::vector<Exponent> rest(t.exponent.exponents().begin(), t.exponent.exponents().end());
    for (std::size_t i : shifted)
      if (i < rest.size()) rest[i] = 0;
    Polynomial term = Polynomial::monomial(ext, MultiIndex(std::move(rest)), t.coeff);
    for (std::size_t i : shifted) term = term * image_pows[i][t.exponent[i]];
    expanded += term;
  }

  // Coefficient of T^beta, mapped back to the original ring.
  std::vector<Polynomial::Term> out;
  for (const auto& t : expanded.terms()) {
    bool match = true;
    for (std::size_t j = 0; j < shifted.size(); ++j)
      if (t.exponent[base + j] != beta[shifted[j]]) match = false;
    if (!match) continue;
    std::vector<Exponent> e(base, 0);
    for (std::size_t i = 0; i < base; ++i) e[i] = t.exponent[i];
    out.push_back({MultiIndex(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial partial(const Polynomial& f, std::size_t position) {
  if (position >= f.ring()->size())
    throw Error(ErrorCode::InvalidArgument, "basis position out of range");
  return hasse(f, MultiIndex::unit(position));
}

Polynomial partial(const Polynomial& f, std::string_view name) {
  auto pos = f.ring()->find(name);
  if (!pos) throw Error(ErrorCode::UnknownIdentifier, std::string(name));
  return partial(f, *pos);
}

FpScalar compose_scalar(const MultiIndex& beta, const MultiIndex& beta_prime, std::uint32_t p) {
  return lucas_binomial(beta + beta_prime, beta, p);
}

DiffOperator::DiffOperator(Ring ring, std::uint64_t declared_order)
    : ring_(std::move(ring)), order_(declared_order) {}

void DiffOperator::add_term(const MultiIndex& beta, const Polynomial& c) {
  if (beta.order() > order_)
    throw Error(ErrorCode::InvalidArgument, "index order exceeds the declared operator order");
  if (beta.length() > ring_->size())
    throw Error(ErrorCode::InvalidArgument, "multi-index outside the ring basis");
  if (!c.ring()->compatible(*ring_)) throw Error(ErrorCode::RingMismatch, "coefficient ring");
  auto it = coeffs_.find(beta);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(beta, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Polynomial DiffOperator::coefficient(const MultiIndex& beta) const {
  auto it = coeffs_.find(beta);
  return it == coeffs_.end() ? Polynomial(ring_) : it->second;
}

Polynomial DiffOperator::apply(const Polynomial& f) const {
  if (!f.ring()->compatible(*ring_))
    throw Error(ErrorCode::RingMismatch, "operator and operand belong to different rings");
  Polynomial out(ring_);
  for (const auto& [beta, c] : coeffs_) {
    Polynomial d = hasse(f, beta);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

DiffOperator decompose_blackbox(const Ring& ring, const OpaqueOperator& op, std::uint64_t n,
                                std::uint64_t degree_bound) {
  const auto p = ring->modulus();
  const std::size_t size = ring->size();
  DiffOperator result(ring, n);
  for (const MultiIndex& beta : enumerate_indices(size, n)) {
    Polynomial c(ring);
    for (const MultiIndex& gamma : enumerate_indices(size, beta.order(), &beta)) {
      std::uint32_t binom = lucas_binomial(beta, gamma, p).value();
      if (binom == 0) continue;
      if (gamma.order() % 2 == 1) binom = fp::neg(binom, p);
      Polynomial image = op(Polynomial::monomial(ring, beta - gamma));
      c += image.shift(gamma).scale(binom);
    }
    result.add_term(beta, c);
  }
  if (degree_bound >= n) {
    for (const MultiIndex& alpha : enumerate_indices(size, degree_bound - n)) {
      Polynomial probe = Polynomial::monomial(ring, alpha);
      if (!(result.apply(probe) == op(probe)))
        throw Error(ErrorCode::OrderViolation,
                    "operator disagrees with its order-" + std::to_string(n) +
                        " decomposition on " + probe.to_string());
    }
  }
  return result;
}

}  // namespace charp
