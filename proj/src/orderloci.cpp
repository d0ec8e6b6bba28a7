#include "charp/orderloci.hpp"

#include <algorithm>
#include <thread>

#include "charp/diffops.hpp"
#include "charp/error.hpp"

namespace charp {

std::vector<Polynomial> SaturationResult::generators() const {
  std::vector<Polynomial> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.value);
  return out;
}

SaturationResult diff_saturate(const Ideal& ideal, std::uint64_t n, unsigned threads) {
  struct Task {
    std::size_t generator;
    MultiIndex beta;
  };
  std::vector<Task> tasks;
  const auto& gens = ideal.generators();
  const std::size_t size = ideal.ring()->size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    MultiIndex cap = gens[i].max_exponents();
    for (auto& beta : enumerate_indices(size, n, &cap)) tasks.push_back({i, std::move(beta)});
  }

  std::vector<std::optional<Polynomial>> values(tasks.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < tasks.size(); k += stride)
      values[k] = hasse(gens[tasks[k].generator], tasks[k].beta);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  SaturationResult out;
  out.n = n;
  for (std::size_t k = 0; k < tasks.size(); ++k)
    if (!values[k]->is_zero())
      out.entries.push_back({tasks[k].generator, std::move(tasks[k].beta), std::move(*values[k])});
  return out;
}

OrderValue order_at(const Polynomial& f, const PrimeMembership& prime) {
  if (f.is_zero()) return OrderValue::infinity();
  const MultiIndex cap = f.max_exponents();
  const std::size_t size = f.ring()->size();
  for (std::uint64_t k = 0; k <= f.total_degree(); ++k) {
    for (const auto& beta : enumerate_indices_of_order(size, k, &cap)) {
      Polynomial d = hasse(f, beta);
      if (!d.is_zero() && !prime.contains(d)) return OrderValue(k);
    }
  }
  // The top-degree Hasse derivative of f is a nonzero constant.
  throw Error(ErrorCode::ImproperPrime, "prime contains a nonzero constant");
}

OrderValue order_at(const Polynomial& f, const PrimeSpec& prime) {
  return order_at(f, PrimeMembership(f.ring(), prime));
}

OrderValue ideal_order_at(const Ideal& ideal, const PrimeSpec& prime) {
  PrimeMembership membership(ideal.ring(), prime);
  OrderValue best = OrderValue::infinity();
  for (const auto& g : ideal.generators()) best = std::min(best, order_at(g, membership));
  return best;
}

namespace {

Ideal dedup(const Ring& ring, const std::vector<SaturationEntry>& entries, bool reduce) {
  std::vector<Polynomial> gens;
  for (const auto& e : entries)
    if (std::find(gens.begin(), gens.end(), e.value) == gens.end()) gens.push_back(e.value);
  Ideal ideal(ring, std::move(gens));
  if (!reduce) return ideal;
  return Ideal(ring, buchberger(ideal).polynomials());
}

}  // namespace

Ideal order_locus(const Ideal& ideal, std::uint64_t n, bool reduce, unsigned threads) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "order threshold N must be at least 1");
  return dedup(ideal.ring(), diff_saturate(ideal, n - 1, threads).entries, reduce);
}

std::vector<StratumLevel> stratify(const Ideal& ideal, std::uint64_t n_max, bool reduce,
                                   unsigned threads) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "N_max must be at least 1");
  SaturationResult sat = diff_saturate(ideal, n_max - 1, threads);
  std::vector<StratumLevel> out;
  for (std::uint64_t level = 1; level <= n_max; ++level) {
    std::vector<SaturationEntry> entries;
    for (const auto& e : sat.entries)
      if (e.beta.order() <= level - 1) entries.push_back(e);
    Ideal locus = dedup(ideal.ring(), entries, reduce);
    out.push_back({level, std::move(locus), std::move(entries)});
  }
  return out;
}

OrderValue oracle_order_at_point(const Polynomial& f, const Point& point) {
  const Ring& ring = f.ring();
  const std::size_t m = ring->num_params();
  const std::size_t n = ring->num_variables();
  if (f.is_zero()) return OrderValue::infinity();
  std::vector<Polynomial> shifted_var, denom;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& name = ring->element(m + i).name;
    auto it = point.find(name);
    if (it == point.end())
      throw Error(ErrorCode::IncompleteAssignment, "no coordinate for '" + name + "'");
    const Fraction& a = it->second;
    // d * (x + n/d) = d*x + n
    shifted_var.push_back(Polynomial::variable(ring, m + i) * a.denominator() + a.numerator());
    denom.push_back(a.denominator());
  }
  const MultiIndex maxdeg = f.max_exponents();
  Polynomial g(ring);
  for (const auto& t : f.terms()) {
    std::vector<Exponent> params(std::min(m, t.exponent.length()));
    for (std::size_t j = 0; j < params.size(); ++j) params[j] = t.exponent[j];
    Polynomial term = Polynomial::monomial(ring, MultiIndex(std::move(params)), t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e = t.exponent[m + i];
      term = term * pow(shifted_var[i], e) * pow(denom[i], maxdeg[m + i] - e);
    }
    g += term;
  }
  if (g.is_zero()) return OrderValue::infinity();
  std::uint64_t low = UINT64_MAX;
  for (const auto& t : g.terms()) low = std::min(low, t.exponent.order_in(m, m + n));
  return OrderValue(low);
}

}  // namespace charp
