#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charp/diffops.hpp"
#include "charp/error.hpp"
#include "charp/parse.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace charp;
using charp::testing::Gen;

namespace {

Polynomial P(const Ring& r, const char* s) { return parse_poly(s, r); }
MultiIndex B(const Ring& r, const char* s) { return parse_multi_index(s, r); }

}  // namespace

TEST_CASE("hasse examples") {
  auto r2 = ring_new(2, {"v"}, {"x", "y"});
  Polynomial f = P(r2, "x^2+v*y^2");
  CHECK(hasse(f, B(r2, "v:1")) == P(r2, "y^2"));
  CHECK(hasse(f, MultiIndex{}) == f);
  CHECK(hasse(f, B(r2, "x:1")).is_zero());
  CHECK(hasse(f, B(r2, "y:1")).is_zero());

  // C(5,2) = 10 = 1 mod 3.
  auto r3 = ring_new(3, {}, {"x"});
  CHECK(charp::testing::factorial_binomial(5, 2) % 3 == 1);
  CHECK(hasse(P(r3, "x^5"), B(r3, "x:2")) == P(r3, "x^3"));
  CHECK(taylor_hasse(P(r3, "x^5"), B(r3, "x:2")) == P(r3, "x^3"));
}

TEST_CASE("taylor_hasse examples") {
  auto r2 = ring_new(2, {"v"}, {"x", "y"});
  CHECK(taylor_hasse(P(r2, "x^2+v*y^2"), B(r2, "v:1")) == P(r2, "y^2"));

  auto r = ring_new(5, {"v"}, {"x", "y"});
  MultiIndex beta = B(r, "v:2,x:1,y:3");
  CHECK(taylor_hasse(Polynomial::monomial(r, beta), beta) == P(r, "1"));

  // (v + t_v)(x + t_x)^4: coefficient of t_v t_x^2 is C(1,1) C(4,2) x^2 = 6 x^2 = 0 mod 3.
  auto r3 = ring_new(3, {"v"}, {"x"});
  CHECK(charp::testing::factorial_binomial(4, 2) == 6);
  CHECK(taylor_hasse(P(r3, "v*x^4"), MultiIndex{1, 2}).is_zero());
  CHECK(hasse(P(r3, "v*x^4"), MultiIndex{1, 2}).is_zero());
}

TEST_CASE("partial") {
  auto r = ring_new(2, {"v"}, {"x", "y"});
  CHECK(partial(P(r, "x^2+v*y^2"), "v") == P(r, "y^2"));
  for (std::size_t b = 0; b < r->size(); ++b)
    for (std::size_t c = 0; c < r->size(); ++c)
      CHECK(partial(Polynomial::variable(r, c), b) == Polynomial::constant(r, b == c ? 1 : 0));

  Gen gen(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto rp = ring_new(p, {"v"}, {"x", "y"});
    for (int trial = 0; trial < 30; ++trial) {
      Polynomial f = gen.poly(rp, 4, 4), g = gen.poly(rp, 4, 4);
      for (std::size_t b = 0; b < rp->size(); ++b) {
        CHECK(partial(f * g, b) == f * partial(g, b) + g * partial(f, b));
        CHECK(partial(pow(g, p) * f, b) == pow(g, p) * partial(f, b));
        CHECK(partial(f, b) == hasse(f, MultiIndex::unit(b)));
      }
    }
  }
}

TEST_CASE("compose_scalar") {
  auto r2 = ring_new(2, {}, {"x", "y"});
  MultiIndex ex = B(r2, "x:1"), ey = B(r2, "y:1");
  CHECK(compose_scalar(ex, ex, 2).is_zero());
  Polynomial x2 = P(r2, "x^2");
  CHECK(hasse(hasse(x2, ex), ex).is_zero());
  CHECK(hasse(x2, ex + ex) == P(r2, "1"));
  CHECK(compose_scalar(ex, ey, 2).value() == 1);

  auto r5 = ring_new(5, {}, {"x"});
  MultiIndex e1 = MultiIndex{1}, e2 = MultiIndex{2};
  CHECK(charp::testing::factorial_binomial(3, 2) == 3);
  CHECK(compose_scalar(e2, e1, 5).value() == 3);
  Polynomial x4 = P(r5, "x^4");
  CHECK(hasse(hasse(x4, e1), e2) == hasse(x4, MultiIndex{3}).scale(3));
}

TEST_CASE("DiffOperator apply") {
  auto r = ring_new(2, {"v"}, {"x", "y"});
  Polynomial g = P(r, "x+v"), f = P(r, "x^2+v*y^2");
  DiffOperator mult(r, 0);
  mult.add_term(MultiIndex{}, g);
  CHECK(mult.apply(f) == g * f);

  DiffOperator dv(r, 1);
  dv.add_term(B(r, "v:1"), P(r, "1"));
  CHECK(dv(f) == P(r, "y^2"));

  CHECK(DiffOperator(r, 3).apply(f).is_zero());
  CHECK_THROWS_AS(dv.add_term(B(r, "x:2"), g), Error);
  auto other = ring_new(2, {"v"}, {"x", "z"});
  CHECK_THROWS_AS(dv.apply(P(other, "z")), Error);
}

TEST_CASE("decompose_blackbox examples") {
  auto r = ring_new(3, {"v"}, {"x", "y"});
  MultiIndex beta0 = B(r, "v:1,x:1");
  DiffOperator d = decompose_blackbox(r, [&](const Polynomial& f) { return hasse(f, beta0); }, 2, 6);
  REQUIRE(d.coefficients().size() == 1);
  CHECK(d.coefficient(beta0) == P(r, "1"));

  Polynomial g = P(r, "x*y+2*v");
  DiffOperator m = decompose_blackbox(r, [&](const Polynomial& f) { return g * f; }, 0, 5);
  REQUIRE(m.coefficients().size() == 1);
  CHECK(m.coefficient(MultiIndex{}) == g);

  DiffOperator gd = decompose_blackbox(
      r, [&](const Polynomial& f) { return g * partial(f, "x"); }, 1, 5);
  REQUIRE(gd.coefficients().size() == 1);
  CHECK(gd.coefficient(B(r, "x:1")) == g);

  // Second-order operator declared as first-order.
  CHECK_THROWS_AS(
      decompose_blackbox(r, [&](const Polynomial& f) { return hasse(f, B(r, "x:2")); }, 1, 4),
      Error);
}

TEST_CASE("hasse equals taylor_hasse on random inputs") {
  Gen gen(101);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ring_new(p, {"v"}, {"x", "y"});
    for (int trial = 0; trial < 80; ++trial) {
      Polynomial f = gen.poly(r, 5, 8);
      MultiIndex beta = gen.index(0, r->size(), 8);
      CHECK(hasse(f, beta) == taylor_hasse(f, beta));
    }
  }
}

TEST_CASE("operator identities") {
  Gen gen(202);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ring_new(p, {"v"}, {"x", "y"});
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = gen.poly(r, 5, 7), g = gen.poly(r, 4, 5);
      MultiIndex beta = gen.index(0, r->size(), 4), beta2 = gen.index(0, r->size(), 4);
      std::uint32_t a = gen.uniform(0, p - 1);

      // F_p-linearity.
      CHECK(hasse(f.scale(a) + g, beta) == hasse(f, beta).scale(a) + hasse(g, beta));

      // Composition in both orders.
      Polynomial single = hasse(f, beta + beta2).scale(compose_scalar(beta, beta2, p).value());
      CHECK(hasse(hasse(f, beta2), beta) == single);
      CHECK(hasse(hasse(f, beta), beta2) == single);

      // Linearity over p^e-th powers when p^e > |beta|.
      std::uint64_t pe = p;
      while (pe <= beta.order()) pe *= p;
      Polynomial s = gen.poly(r, 2, 2);
      CHECK(hasse(pow(s, pe) * f, beta) == pow(s, pe) * hasse(f, beta));
    }
  }
}

TEST_CASE("finite support of D^beta(f)") {
  Gen gen(303);
  auto r = ring_new(3, {"v"}, {"x", "y"});
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = gen.poly(r, 4, 5);
    // Every beta with a nonzero image lies below some term exponent.
    for (const auto& beta : enumerate_indices(r->size(), 7)) {
      if (hasse(f, beta).is_zero()) continue;
      bool below = false;
      for (const auto& t : f.terms()) below = below || beta.le(t.exponent);
      CHECK(below);
    }
  }
}

TEST_CASE("decomposition round trip on random operators") {
  Gen gen(404);
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ring_new(p, {"v"}, {"x"});
    for (int trial = 0; trial < 10; ++trial) {
      const std::uint64_t n = gen.uniform(0, 3);
      DiffOperator op(r, n);
      for (int k = 0; k < 3; ++k) op.add_term(gen.index(0, r->size(), n), gen.poly(r, 2, 2));
      DiffOperator back = decompose_blackbox(r, op, n, n + 4);
      for (const auto& alpha : enumerate_indices(r->size(), 4)) {
        Polynomial probe = Polynomial::monomial(r, alpha);
        CHECK(back.apply(probe) == op.apply(probe));
      }
      CHECK(back.coefficients().size() == op.coefficients().size());
      for (const auto& [beta, c] : op.coefficients()) CHECK(back.coefficient(beta) == c);
    }
  }
}
