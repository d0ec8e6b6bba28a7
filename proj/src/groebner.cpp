#include "charp/groebner.hpp"

#include <algorithm>
#include <set>

#include "charp/error.hpp"

namespace charp {

Ideal::Ideal(Ring ring) : ring_(std::move(ring)) {}

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!g.ring()->compatible(*ring_))
      throw Error(ErrorCode::RingMismatch, "generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::strong_ordering TermOrder::operator()(const MultiIndex& a, const MultiIndex& b) const noexcept {
  if (order_ == MonomialOrder::Lex) return lex_compare(a, b, 0, n_);
  return grevlex_compare(a, b, 0, n_);
}

KPolynomial KPolynomial::from_polynomial(const Polynomial& f, TermOrder order) {
  const Ring& ring = f.ring();
  const std::size_t m = ring->num_params();
  const std::size_t n = ring->num_variables();
  std::map<MultiIndex, std::vector<Polynomial::Term>> groups;
  for (const auto& t : f.terms()) {
    std::vector<Exponent> x(n), v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = t.exponent[i];
    for (std::size_t i = 0; i < n; ++i) x[i] = t.exponent[m + i];
    groups[MultiIndex(std::move(x))].push_back({MultiIndex(std::move(v)), t.coeff});
  }
  KPolynomial out(ring, order);
  for (auto& [x, terms] : groups)
    out.terms_.push_back({x, Fraction(Polynomial::from_terms(ring, std::move(terms)))});
  std::sort(out.terms_.begin(), out.terms_.end(),
            [&](const Term& a, const Term& b) { return order(a.exponent, b.exponent) < 0; });
  return out;
}

KPolynomial KPolynomial::sub_scaled(const Fraction& c, const MultiIndex& shift,
                                    const KPolynomial& g) const {
  KPolynomial out(ring_, order_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.terms_.push_back(*a++);
      continue;
    }
    MultiIndex be = b->exponent + shift;
    auto cmp = a == terms_.end() ? std::strong_ordering::greater : order_(a->exponent, be);
    if (cmp < 0) {
      out.terms_.push_back(*a++);
    } else if (cmp > 0) {
      out.terms_.push_back({std::move(be), -(c * b->coeff)});
      ++b;
    } else {
      Fraction v = a->coeff - c * b->coeff;
      if (!v.is_zero()) out.terms_.push_back({std::move(be), std::move(v)});
      ++a;
      ++b;
    }
  }
  return out;
}

KPolynomial KPolynomial::monic() const {
  if (is_zero() || leading_term().coeff.is_one()) return *this;
  Fraction inv = leading_term().coeff.inverse();
  KPolynomial out(ring_, order_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.exponent, t.coeff * inv});
  out.terms_.back().coeff = Fraction::one(ring_);
  return out;
}

KPolynomial KPolynomial::tail() const {
  KPolynomial out = *this;
  if (!out.terms_.empty()) out.terms_.pop_back();
  return out;
}

Polynomial KPolynomial::to_polynomial() const {
  if (is_zero()) return Polynomial(ring_);
  Polynomial common = Polynomial::constant(ring_, 1);
  for (const auto& t : terms_) {
    const Polynomial& d = t.coeff.denominator();
    if (d.is_constant()) continue;
    common = divide_exact(common * d, gcd(common, d));
  }
  std::vector<Polynomial> nums;
  nums.reserve(terms_.size());
  for (const auto& t : terms_)
    nums.push_back(t.coeff.numerator() * divide_exact(common, t.coeff.denominator()));
  Polynomial content = nums[0];
  for (std::size_t k = 1; k < nums.size() && !content.is_constant(); ++k)
    content = gcd(content, nums[k]);
  const std::size_t m = ring_->num_params();
  std::vector<Polynomial::Term> out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    Polynomial c = content.is_constant() ? nums[k] : divide_exact(nums[k], content);
    for (const auto& ct : c.terms()) {
      std::vector<Exponent> e(m + terms_[k].exponent.length(), 0);
      for (std::size_t i = 0; i < m; ++i) e[i] = ct.exponent[i];
      for (std::size_t i = 0; i < terms_[k].exponent.length(); ++i) e[m + i] = terms_[k].exponent[i];
      out.push_back({MultiIndex(std::move(e)), ct.coeff});
    }
  }
  return make_monic(Polynomial::from_terms(ring_, std::move(out)));
}

bool GroebnerBasis::is_unit() const {
  return elements.size() == 1 && elements[0].leading_monomial().is_zero();
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.to_polynomial());
  return out;
}

KPolynomial s_polynomial(const KPolynomial& f, const KPolynomial& g) {
  const MultiIndex l = lcm(f.leading_monomial(), g.leading_monomial());
  const Fraction& cf = f.leading_term().coeff;
  const Fraction& cg = g.leading_term().coeff;
  // (l / lm f) f / lc f - (l / lm g) g / lc g
  KPolynomial zero(f.ring(), f.order());
  KPolynomial left = zero.sub_scaled(-cf.inverse(), l - f.leading_monomial(), f);
  return left.sub_scaled(cg.inverse(), l - g.leading_monomial(), g);
}

KPolynomial reduce(const KPolynomial& f, const std::vector<KPolynomial>& divisors) {
  KPolynomial rest = f;
  std::vector<KPolynomial::Term> kept;  // descending
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    const KPolynomial* divisor = nullptr;
    for (const auto& g : divisors)
      if (g.leading_monomial().le(lt.exponent)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      Fraction c = lt.coeff / divisor->leading_term().coeff;
      rest = rest.sub_scaled(c, lt.exponent - divisor->leading_monomial(), *divisor);
    } else {
      kept.push_back(lt);
      rest.pop_leading();
    }
  }
  KPolynomial out(f.ring(), f.order());
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) out.push_leading(std::move(*it));
  return out;
}

namespace {

bool coprime(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < std::min(a.length(), b.length()); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order) {
  const Ring& ring = ideal.ring();
  const TermOrder term_order(order, ring->num_variables());
  std::vector<KPolynomial> basis;
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  auto add = [&](KPolynomial h) {
    h = h.monic();
    const std::size_t k = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) pairs.insert({i, k});
  };

  for (const auto& g : ideal.generators()) {
    KPolynomial h = reduce(KPolynomial::from_polynomial(g, term_order), basis);
    if (!h.is_zero()) add(std::move(h));
  }

  auto lcm_of = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return lcm(basis[pr.first].leading_monomial(), basis[pr.second].leading_monomial());
  };
  auto has_pair = [&](std::size_t a, std::size_t b) {
    return pairs.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm, ties by index.
    auto best = pairs.begin();
    MultiIndex best_lcm = lcm_of(*best);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      MultiIndex l = lcm_of(*it);
      if (term_order(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);

    const auto& lmi = basis[i].leading_monomial();
    const auto& lmj = basis[j].leading_monomial();
    if (coprime(lmi, lmj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (basis[k].leading_monomial().le(best_lcm) && !has_pair(i, k) && !has_pair(j, k))
        chain = true;
    }
    if (chain) continue;

    KPolynomial h = reduce(s_polynomial(basis[i], basis[j]), basis);
    if (!h.is_zero()) add(std::move(h));
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<KPolynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = basis[j].leading_monomial();
      const auto& b = basis[i].leading_monomial();
      if (a.le(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails.
  GroebnerBasis out{ring, order, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<KPolynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    KPolynomial tail = reduce(minimal[i].tail(), others);
    KPolynomial g(ring, term_order);
    g = g.sub_scaled(-Fraction::one(ring), MultiIndex{}, tail);
    g.push_leading(minimal[i].leading_term());
    out.elements.push_back(g.monic());
  }
  std::sort(out.elements.begin(), out.elements.end(), [&](const KPolynomial& a, const KPolynomial& b) {
    return term_order(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!f.ring()->compatible(*basis.ring))
    throw Error(ErrorCode::RingMismatch, "polynomial and basis belong to different rings");
  TermOrder order(basis.order, basis.ring->num_variables());
  return reduce(KPolynomial::from_polynomial(f, order), basis.elements).to_polynomial();
}

bool member(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.is_zero()) return true;
  TermOrder order(basis.order, basis.ring->num_variables());
  return reduce(KPolynomial::from_polynomial(f, order), basis.elements).is_zero();
}

bool member(const Polynomial& f, const Ideal& ideal) {
  if (!f.ring()->compatible(*ideal.ring()))
    throw Error(ErrorCode::RingMismatch, "polynomial and ideal belong to different rings");
  if (f.is_zero()) return true;
  return member(f, buchberger(ideal));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!a.ring()->compatible(*b.ring()))
    throw Error(ErrorCode::RingMismatch, "ideals belong to different rings");
  GroebnerBasis ga = buchberger(a), gb = buchberger(b);
  for (const auto& g : b.generators())
    if (!member(g, ga)) return false;
  for (const auto& g : a.generators())
    if (!member(g, gb)) return false;
  return true;
}

namespace {

// Smallest set of variables meeting every support; branches on the
// variables of the first support not yet met.
std::size_t min_hitting_set(const std::vector<std::vector<std::size_t>>& supports,
                            std::vector<bool>& chosen, std::size_t size, std::size_t best) {
  if (size >= best) return best;
  for (const auto& s : supports) {
    bool hit = false;
    for (std::size_t v : s)
      if (chosen[v]) hit = true;
    if (hit) continue;
    for (std::size_t v : s) {
      chosen[v] = true;
      best = std::min(best, min_hitting_set(supports, chosen, size + 1, best));
      chosen[v] = false;
    }
    return best;
  }
  return size;
}

}  // namespace

std::size_t monomial_dimension(const std::vector<MultiIndex>& monomials, std::size_t num_variables) {
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : monomials) {
    if (m.is_zero()) throw Error(ErrorCode::UnitIdeal, "the ideal contains 1");
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m.length(); ++i)
      if (m[i] != 0) s.push_back(i);
    supports.push_back(std::move(s));
  }
  std::vector<bool> chosen(num_variables, false);
  return num_variables - min_hitting_set(supports, chosen, 0, num_variables + 1);
}

std::size_t dimension(const Ideal& ideal) {
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::Grevlex);
  std::vector<MultiIndex> lms;
  for (const auto& g : gb.elements) lms.push_back(g.leading_monomial());
  return monomial_dimension(lms, ideal.ring()->num_variables());
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t k = i; k < r; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t r) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw Error(ErrorCode::BadSize, "ragged matrix");
  if (r < 1 || r > std::min(rows, cols))
    throw Error(ErrorCode::BadSize, "minor size " + std::to_string(r) + " out of range for a " +
                                        std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  std::vector<Polynomial> out;
  for (const auto& rs : combinations(rows, r))
    for (const auto& cs : combinations(cols, r)) out.push_back(determinant(submatrix(m, rs, cs)));
  return out;
}

}  // namespace charp
