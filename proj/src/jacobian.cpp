#include "charp/jacobian.hpp"

#include <algorithm>

#include "charp/diffops.hpp"
#include "charp/error.hpp"

namespace charp {

namespace {

const Ring& ring_of(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "empty generator list");
  for (const auto& g : gens)
    if (!g.ring()->compatible(*gens[0].ring()))
      throw Error(ErrorCode::RingMismatch, "generators from different rings");
  return gens[0].ring();
}

}  // namespace

PrimeMembership::PrimeMembership(const Ring& ring, const PrimeSpec& prime) : ring_(ring) {
  if (const auto* pt = std::get_if<RationalPoint>(&prime)) {
    for (std::size_t i = 0; i < ring->num_variables(); ++i) {
      const auto& name = ring->element(ring->first_variable() + i).name;
      if (!pt->coords.count(name))
        throw Error(ErrorCode::IncompleteAssignment, "no coordinate for '" + name + "'");
    }
    // Validates names and rings.
    evaluate(Polynomial(ring), pt->coords);
    point_ = pt->coords;
    return;
  }
  const auto& gens = std::get<PrimeGenerators>(prime);
  if (!gens.asserted_prime)
    throw Error(ErrorCode::UnverifiedPrime, "generator prime used without asserting primality");
  if (!gens.ideal.ring()->compatible(*ring))
    throw Error(ErrorCode::RingMismatch, "prime from a different ring");
  basis_ = buchberger(gens.ideal);
  if (basis_->is_unit()) throw Error(ErrorCode::ImproperPrime, "asserted prime is the unit ideal");
}

bool PrimeMembership::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (point_) return evaluate(f, *point_).is_zero();
  return member(f, *basis_);
}

std::vector<BasisElement> finite_support(const std::vector<Polynomial>& gens) {
  std::vector<BasisElement> out;
  if (gens.empty()) return out;
  const Ring& ring = ring_of(gens);
  for (const auto& b : ring->basis()) {
    for (const auto& f : gens)
      if (!partial(f, b.position).is_zero()) {
        out.push_back(b);
        break;
      }
  }
  return out;
}

JacobianMatrix extended_jacobian(const std::vector<Polynomial>& gens) {
  return extended_jacobian(gens, finite_support(gens));
}

JacobianMatrix extended_jacobian(const std::vector<Polynomial>& gens,
                                 const std::vector<BasisElement>& columns) {
  JacobianMatrix m{columns, {}};
  if (gens.empty()) return m;
  const Ring& ring = ring_of(gens);
  for (const auto& c : columns)
    if (c.position >= ring->size() || !(ring->element(c.position) == c))
      throw Error(ErrorCode::InvalidArgument, "column '" + c.name + "' is not a basis element");
  for (const auto& f : gens) {
    std::vector<Polynomial> row;
    row.reserve(columns.size());
    for (const auto& c : columns) row.push_back(partial(f, c.position));
    m.entries.push_back(std::move(row));
  }
  return m;
}

std::optional<MinorWitness> find_minor_outside(const JacobianMatrix& m, std::size_t s,
                                               const PrimeMembership& prime) {
  if (s == 0) return MinorWitness{};
  if (s > std::min(m.rows(), m.cols())) return std::nullopt;
  if (prime.is_point()) {
    // det of the evaluated minor = evaluation of the det.
    std::vector<std::vector<Fraction>> values;
    for (const auto& row : m.entries) {
      std::vector<Fraction> vrow;
      for (const auto& e : row) vrow.push_back(evaluate(e, prime.point()));
      values.push_back(std::move(vrow));
    }
    for (const auto& rs : combinations(m.rows(), s))
      for (const auto& cs : combinations(m.cols(), s))
        if (!determinant(submatrix(values, rs, cs)).is_zero()) return MinorWitness{rs, cs};
    return std::nullopt;
  }
  for (const auto& rs : combinations(m.rows(), s))
    for (const auto& cs : combinations(m.cols(), s))
      if (!prime.contains(determinant(submatrix(m.entries, rs, cs)))) return MinorWitness{rs, cs};
  return std::nullopt;
}

std::size_t rank_mod_prime(const JacobianMatrix& m, const PrimeMembership& prime) {
  for (std::size_t s = std::min(m.rows(), m.cols()); s > 0; --s)
    if (find_minor_outside(m, s, prime)) return s;
  return 0;
}

std::size_t rank_mod_prime(const JacobianMatrix& m, const PrimeSpec& prime) {
  if (m.entries.empty() || m.columns.empty()) {
    // Still validate the prime.
    if (const auto* g = std::get_if<PrimeGenerators>(&prime); g && !g->asserted_prime)
      throw Error(ErrorCode::UnverifiedPrime, "generator prime used without asserting primality");
    return 0;
  }
  return rank_mod_prime(m, PrimeMembership(m.entries[0][0].ring(), prime));
}

RegularityReport regularity_test(const std::vector<Polynomial>& gens, const PrimeSpec& prime,
                                 std::size_t r) {
  const Ring& ring = ring_of(gens);
  PrimeMembership membership(ring, prime);
  for (const auto& f : gens)
    if (!membership.contains(f))
      throw Error(ErrorCode::PrimeDoesNotContainIdeal,
                  "generator " + f.to_string() + " is not in the prime");
  JacobianMatrix m = extended_jacobian(gens);
  RegularityReport report;
  report.r = r;
  report.rank_mod_prime = rank_mod_prime(m, membership);
  report.regular = report.rank_mod_prime == r;
  if (report.rank_mod_prime >= r) report.witness = find_minor_outside(m, r, membership);
  return report;
}

SingularLocus singular_locus(const std::vector<Polynomial>& gens, std::size_t r) {
  const Ring& ring = ring_of(gens);
  std::vector<Polynomial> out;
  auto push = [&](const Polynomial& f) {
    if (f.is_zero()) return;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  };
  for (const auto& g : gens) push(g);
  JacobianMatrix m = extended_jacobian(gens);
  if (r == 0 || r > std::min(m.rows(), m.cols())) return {Ideal(ring, out), true};
  for (const auto& minor : minors(m.entries, r)) push(minor);
  return {Ideal(ring, std::move(out)), false};
}

BasisRefit refit_p_basis(const std::vector<Polynomial>& params, const PrimeSpec& prime) {
  const Ring& ring = ring_of(params);
  PrimeMembership membership(ring, prime);
  JacobianMatrix m = extended_jacobian(params, ring->basis());
  const std::size_t d = params.size();
  if (d > ring->size())
    throw Error(ErrorCode::RankDeficient, "more parameters than basis elements");
  for (const auto& cs : combinations(ring->size(), d)) {
    std::vector<std::size_t> rows(d);
    for (std::size_t i = 0; i < d; ++i) rows[i] = i;
    Polynomial det = determinant(submatrix(m.entries, rows, cs));
    if (membership.contains(det)) continue;
    BasisRefit refit{{}, {}, params, det};
    for (std::size_t j = 0, k = 0; j < ring->size(); ++j) {
      if (k < cs.size() && cs[k] == j) {
        refit.removed.push_back(ring->element(j));
        ++k;
      } else {
        refit.kept.push_back(ring->element(j));
      }
    }
    return refit;
  }
  throw Error(ErrorCode::RankDeficient,
              "no " + std::to_string(d) + "x" + std::to_string(d) +
                  " minor of the parameter Jacobian survives modulo the prime");
}

QuotientBasis quotient_p_basis(const std::vector<Polynomial>& params, std::size_t r,
                               const PrimeSpec& prime) {
  if (r > params.size())
    throw Error(ErrorCode::InvalidArgument, "r exceeds the number of parameters");
  BasisRefit refit = refit_p_basis(params, prime);
  const Ring& ring = params[0].ring();
  std::vector<Polynomial> relations(params.begin(), params.begin() + r);
  std::vector<Polynomial> rest(params.begin() + r, params.end());
  return {refit.kept, std::move(rest), Ideal(ring, std::move(relations)), refit.localizer, refit};
}

}  // namespace charp
