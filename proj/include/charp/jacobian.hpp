#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "charp/fraction.hpp"
#include "charp/groebner.hpp"

namespace charp {

/// The maximal ideal <x_i - a_i> of a point with coordinates in F_p(v).
struct RationalPoint {
  Point coords;
};

/// A prime given by generators. Primality is never checked; the flag records
/// that the caller vouches for it.
struct PrimeGenerators {
  Ideal ideal;
  bool asserted_prime = false;
};

using PrimeSpec = std::variant<RationalPoint, PrimeGenerators>;

/// Membership oracle for a prime: evaluation at a point, or normal form
/// against a Groebner basis computed once at construction.
class PrimeMembership {
 public:
  PrimeMembership(const Ring& ring, const PrimeSpec& prime);

  bool contains(const Polynomial& f) const;
  bool is_point() const noexcept { return point_.has_value(); }
  const Point& point() const { return *point_; }
  const GroebnerBasis& basis() const { return *basis_; }

 private:
  Ring ring_;
  std::optional<Point> point_;
  std::optional<GroebnerBasis> basis_;
};

/// Extended Jacobian: rows are generators, columns are basis elements
/// (base parameters and geometric variables), entries are partials.
struct JacobianMatrix {
  std::vector<BasisElement> columns;
  PolyMatrix entries;

  std::size_t rows() const noexcept { return entries.size(); }
  std::size_t cols() const noexcept { return columns.size(); }
};

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

struct RegularityReport {
  std::size_t rank_mod_prime = 0;
  std::size_t r = 0;
  bool regular = false;
  /// An r x r minor outside P, present iff rank_mod_prime >= r.
  std::optional<MinorWitness> witness;
};

/// Basis elements b with some nonzero partial(f_i, b), in basis order.
std::vector<BasisElement> finite_support(const std::vector<Polynomial>& gens);

/// Columns restricted to finite_support(gens).
JacobianMatrix extended_jacobian(const std::vector<Polynomial>& gens);
/// Columns given explicitly (e.g. the full basis).
JacobianMatrix extended_jacobian(const std::vector<Polynomial>& gens,
                                 const std::vector<BasisElement>& columns);

/// Largest size of a minor that is not in P; 0 when every entry lies in P.
std::size_t rank_mod_prime(const JacobianMatrix& m, const PrimeSpec& prime);
std::size_t rank_mod_prime(const JacobianMatrix& m, const PrimeMembership& prime);

/// First s x s minor (lexicographic in rows, then columns) not in P.
std::optional<MinorWitness> find_minor_outside(const JacobianMatrix& m, std::size_t s,
                                               const PrimeMembership& prime);

/// Regularity of (A/J)_P given height(J A_P) = r, supplied by the caller.
RegularityReport regularity_test(const std::vector<Polynomial>& gens, const PrimeSpec& prime,
                                 std::size_t r);

struct SingularLocus {
  Ideal ideal;
  /// r exceeded the Jacobian's dimensions; the ideal is just <gens>.
  bool no_minors = false;
};

/// J + <all r x r minors of the extended Jacobian>, zero and repeated
/// polynomials removed.
SingularLocus singular_locus(const std::vector<Polynomial>& gens, std::size_t r);

struct BasisRefit {
  std::vector<BasisElement> removed;
  std::vector<BasisElement> kept;
  std::vector<Polynomial> parameters;
  /// Determinant of the d x d Jacobian (dz_i / db_j) on the removed columns.
  Polynomial localizer;
};

/// Swaps d basis elements for the parameters z_1..z_d, choosing the first
/// column tuple whose minor is not in P. Throws RankDeficient otherwise.
BasisRefit refit_p_basis(const std::vector<Polynomial>& params, const PrimeSpec& prime);

struct QuotientBasis {
  /// B_0, as residue classes in C_g.
  std::vector<BasisElement> kept;
  /// z_{r+1}..z_d, as residue classes in C_g.
  std::vector<Polynomial> parameters;
  /// J = <z_1..z_r>, so that C_g = A_f / J A_f.
  Ideal relations;
  Polynomial localizer;
  BasisRefit refit;
};

QuotientBasis quotient_p_basis(const std::vector<Polynomial>& params, std::size_t r,
                               const PrimeSpec& prime);

}  // namespace charp
