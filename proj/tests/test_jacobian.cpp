#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charp/error.hpp"
#include "charp/jacobian.hpp"
#include "charp/parse.hpp"
#include "support/random.hpp"

using namespace charp;
using charp::testing::Gen;

namespace {

Polynomial P(const Ring& r, const char* s) { return parse_poly(s, r); }
std::vector<Polynomial> L(const Ring& r, const char* s) { return parse_poly_list(s, r); }

std::vector<std::string> names(const std::vector<BasisElement>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.name);
  return out;
}

PrimeSpec origin(const Ring& r) {
  Point pt;
  for (std::size_t i = 0; i < r->num_variables(); ++i)
    pt.emplace(r->element(r->first_variable() + i).name, Fraction::zero(r));
  return RationalPoint{pt};
}

PrimeSpec generic(const Ring& r, const char* gens) {
  return PrimeGenerators{Ideal(r, L(r, gens)), true};
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("finite_support") {
  auto r2 = ring_new(2, {"v"}, {"x", "y"});
  CHECK(names(finite_support(L(r2, "x^2+v*y^2"))) == std::vector<std::string>{"v"});
  CHECK(names(finite_support(L(r2, "x+y"))) == std::vector<std::string>{"x", "y"});
  CHECK(finite_support(L(r2, "v^2")).empty());
  CHECK(finite_support(L(r2, "1")).empty());
}

TEST_CASE("extended_jacobian") {
  auto r2 = ring_new(2, {"v"}, {"x", "y"});
  auto gens = L(r2, "x^2+v*y^2");
  auto full = extended_jacobian(gens, r2->basis());
  CHECK(names(full.columns) == std::vector<std::string>{"v", "x", "y"});
  CHECK(full.entries == PolyMatrix{{P(r2, "y^2"), P(r2, "0"), P(r2, "0")}});
  auto compact = extended_jacobian(gens);
  CHECK(compact.entries == PolyMatrix{{P(r2, "y^2")}});

  auto id = extended_jacobian(L(r2, "x;y"));
  CHECK(names(id.columns) == std::vector<std::string>{"x", "y"});
  CHECK(id.entries == PolyMatrix{{P(r2, "1"), P(r2, "0")}, {P(r2, "0"), P(r2, "1")}});

  auto r3 = ring_new(3, {"v"}, {"x", "y"});
  auto m3 = extended_jacobian(L(r3, "x^3+v*y^3;y^3"));
  CHECK(names(m3.columns) == std::vector<std::string>{"v"});
  CHECK(m3.entries == PolyMatrix{{P(r3, "y^3")}, {P(r3, "0")}});
}

TEST_CASE("rank_mod_prime") {
  auto r = ring_new(2, {"v"}, {"x", "y"});
  auto m = extended_jacobian(L(r, "x^2+v*y^2"), r->basis());
  CHECK(rank_mod_prime(m, origin(r)) == 0);
  CHECK(rank_mod_prime(m, generic(r, "x^2+v*y^2")) == 1);

  auto id = extended_jacobian(L(r, "x;y"));
  CHECK(rank_mod_prime(id, origin(r)) == 2);
  CHECK(rank_mod_prime(id, generic(r, "x^2+v*y^2")) == 2);

  CHECK(code_of([&] { rank_mod_prime(m, PrimeGenerators{Ideal(r, L(r, "x")), false}); }) ==
        ErrorCode::UnverifiedPrime);
  CHECK(code_of([&] { rank_mod_prime(m, generic(r, "x;x+1")); }) == ErrorCode::ImproperPrime);
}

TEST_CASE("regularity_test") {
  auto r = ring_new(2, {"v"}, {"x", "y"});
  auto f = L(r, "x^2+v*y^2");
  auto at_origin = regularity_test(f, origin(r), 1);
  CHECK_FALSE(at_origin.regular);
  CHECK(at_origin.rank_mod_prime == 0);
  CHECK_FALSE(at_origin.witness.has_value());

  auto at_generic = regularity_test(f, generic(r, "x^2+v*y^2"), 1);
  CHECK(at_generic.regular);
  REQUIRE(at_generic.witness.has_value());
  CHECK(at_generic.witness->rows == std::vector<std::size_t>{0});

  auto line = regularity_test(L(r, "x"), origin(r), 1);
  CHECK(line.regular);
  CHECK(line.r == 1);

  Point off{{"x", Fraction(P(r, "1"))}, {"y", Fraction::zero(r)}};
  CHECK(code_of([&] { regularity_test(f, RationalPoint{off}, 1); }) ==
        ErrorCode::PrimeDoesNotContainIdeal);
  CHECK(code_of([&] { regularity_test(f, generic(r, "x"), 1); }) ==
        ErrorCode::PrimeDoesNotContainIdeal);
  CHECK(code_of([&] { regularity_test(f, PrimeGenerators{Ideal(r, f), false}, 1); }) ==
        ErrorCode::UnverifiedPrime);
}

TEST_CASE("singular_locus") {
  auto r2 = ring_new(2, {"v"}, {"x", "y"});
  auto s = singular_locus(L(r2, "x^2+v*y^2"), 1);
  CHECK_FALSE(s.no_minors);
  CHECK(s.ideal.generators() == L(r2, "x^2+v*y^2;y^2"));
  CHECK(ideal_equal(s.ideal, Ideal(r2, L(r2, "x^2;y^2"))));

  auto smooth = singular_locus(L(r2, "x"), 1);
  CHECK(buchberger(smooth.ideal).is_unit());

  auto r3 = ring_new(3, {"v"}, {"x", "y"});
  auto s3 = singular_locus(L(r3, "x^3+v*y^3"), 1);
  CHECK(s3.ideal.generators() == L(r3, "x^3+v*y^3;y^3"));
  // The locus is the origin: on an F_3 grid only (0,0) kills both generators.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Point pt{{"x", Fraction(Polynomial::constant(r3, a))}, {"y", Fraction(Polynomial::constant(r3, b))}};
      bool vanishes = true;
      for (const auto& g : s3.ideal.generators()) vanishes = vanishes && evaluate(g, pt).is_zero();
      CHECK(vanishes == (a == 0 && b == 0));
    }

  auto tall = singular_locus(L(r2, "x^2+v*y^2"), 2);
  CHECK(tall.no_minors);
  CHECK(tall.ideal.generators() == L(r2, "x^2+v*y^2"));
}

TEST_CASE("refit_p_basis") {
  auto r = ring_new(2, {"v"}, {"x"});
  auto a = refit_p_basis(L(r, "v+x"), origin(r));
  CHECK(names(a.removed) == std::vector<std::string>{"v"});
  CHECK(names(a.kept) == std::vector<std::string>{"x"});
  CHECK(a.localizer == P(r, "1"));

  auto b = refit_p_basis(L(r, "x"), origin(r));
  CHECK(names(b.removed) == std::vector<std::string>{"x"});
  CHECK(names(b.kept) == std::vector<std::string>{"v"});
  CHECK(b.localizer == P(r, "1"));

  CHECK(code_of([&] { refit_p_basis(L(r, "x^2"), origin(r)); }) == ErrorCode::RankDeficient);
}

TEST_CASE("quotient_p_basis") {
  auto r = ring_new(2, {"v"}, {"x", "y"});
  auto q = quotient_p_basis(L(r, "x;y"), 1, origin(r));
  CHECK(names(q.kept) == std::vector<std::string>{"v"});
  CHECK(q.parameters == L(r, "y"));
  CHECK(q.relations.generators() == L(r, "x"));
  CHECK(q.localizer == P(r, "1"));

  auto q2 = quotient_p_basis(L(r, "x+v;y"), 1, origin(r));
  CHECK(names(q2.refit.removed) == std::vector<std::string>{"v", "y"});
  CHECK(names(q2.kept) == std::vector<std::string>{"x"});
  CHECK(q2.parameters == L(r, "y"));
  auto sub = extended_jacobian(L(r, "x+v;y"), q2.refit.removed);
  CHECK(determinant(sub.entries) == q2.localizer);
  CHECK_FALSE(evaluate(q2.localizer, std::get<RationalPoint>(origin(r)).coords).is_zero());

  CHECK(code_of([&] { quotient_p_basis(L(r, "x^2"), 1, origin(r)); }) == ErrorCode::RankDeficient);
}

TEST_CASE("jacobian properties") {
  Gen gen(61);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ring_new(p, {"v"}, {"x", "y"});
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> gens{gen.poly(r, 3, 4), gen.poly(r, 3, 4)};
      Point pt = gen.point(r);
      PrimeMembership at(r, RationalPoint{pt});

      // Omitted columns never change the rank.
      auto compact = extended_jacobian(gens);
      auto full = extended_jacobian(gens, r->basis());
      CHECK(rank_mod_prime(compact, at) == rank_mod_prime(full, at));

      // Adding a row never lowers the rank.
      auto one_row = extended_jacobian({gens[0]}, r->basis());
      CHECK(rank_mod_prime(one_row, at) <= rank_mod_prime(full, at));

      // The singular locus contains J.
      auto s = singular_locus(gens, 1);
      for (const auto& g : gens)
        if (!g.is_zero()) CHECK(member(g, s.ideal));

      // Refit certificate, re-checked by evaluation.
      try {
        auto fit = refit_p_basis({gens[0]}, RationalPoint{pt});
        auto sub = extended_jacobian({gens[0]}, fit.removed);
        CHECK(determinant(sub.entries) == fit.localizer);
        CHECK_FALSE(evaluate(fit.localizer, pt).is_zero());
        CHECK(fit.removed.size() + fit.kept.size() == r->size());
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankDeficient);
        CHECK(rank_mod_prime(one_row, at) == 0);
      }
    }
  }
}
