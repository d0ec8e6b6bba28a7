import math

import pytest

import charp


@pytest.fixture
def ring():
    return charp.Ring(2, base=["v"], vars=["x", "y"])


def test_ring_basis(ring):
    assert ring.p == 2
    assert ring.basis == ["v", "x", "y"]


def test_composite_modulus_is_rejected():
    with pytest.raises(charp.CharpError) as info:
        charp.Ring(4, vars=["x"])
    assert info.value.kind == "CompositeModulus"
    assert info.value.input_error


def test_polynomial_arithmetic(ring):
    f = ring.poly("x^2 + v*y^2")
    assert str(f) == "x^2+v*y^2"
    assert f + f == ring.poly("0")
    assert (ring.poly("x") + ring.poly("y")) ** 2 == ring.poly("x^2+y^2")


def test_hasse_and_taylor(ring):
    assert str(ring.hasse("x^2+v*y^2", "v:1")) == "y^2"
    assert ring.hasse("x^2+v*y^2", "v:1") == ring.taylor_hasse("x^2+v*y^2", "v:1")
    assert str(ring.partial("x^2+v*y^2", "v")) == "y^2"


def test_p_power_decompose(ring):
    parts = ring.p_power_decompose("v*x^2+v^3")
    assert {k: str(g) for k, g in parts.items()} == {"v:1": "x+v"}


def test_groebner_and_membership(ring):
    assert [str(g) for g in ring.groebner("x^2+v*y^2;y^2")] == ["x^2", "y^2"]
    assert ring.member("x^2", "x^2+v*y^2;y^2")
    assert not ring.member("x", "x^2")
    assert ring.ideal_equal("x^2+v*y^2;y^2", ["x^2", "y^2"])
    assert ring.dimension("x^2+v*y^2") == 1


def test_singular_locus_and_regularity(ring):
    assert [str(g) for g in ring.singular_locus("x^2+v*y^2", r=1)] == ["x^2+v*y^2", "y^2"]
    generic = ring.regularity_test("x^2+v*y^2", 1, prime_gens="x^2+v*y^2", assert_prime=True)
    assert generic["regular"] is True
    origin = ring.regularity_test("x^2+v*y^2", 1, point="x=0,y=0")
    assert origin["regular"] is False and origin["witness_rows"] is None


def test_orders(ring):
    assert ring.order_at("x^2+v*y^2", point="x=0,y=0") == 2
    assert ring.oracle_order_at_point("x^2+v*y^2", "x=0,y=0") == 2
    assert ring.order_at("x^2+v*y^2", prime_gens="x^2+v*y^2", assert_prime=True) == 1
    assert math.isinf(ring.order_at("0", point="x=0,y=0"))
    assert ring.ideal_order_at("x;y^2", point="x=0,y=0") == 1


def test_order_locus_and_stratify(ring):
    assert [str(g) for g in ring.order_locus("x^2+v*y^2", 2)] == ["x^2+v*y^2", "y^2"]
    levels = ring.stratify("x^2+v*y^2", 3)
    assert len(levels) == 3
    assert [str(g) for g in levels[1]] == ["x^2+v*y^2", "y^2"]


def test_refit(ring):
    fit = ring.refit("x+v;y", point="x=0,y=0")
    assert fit["removed"] == ["v", "y"]
    assert str(fit["localizer"]) == "1"
    with pytest.raises(charp.CharpError) as info:
        ring.refit("x^2", point="x=0,y=0")
    assert info.value.kind == "RankDeficient"
    assert not info.value.input_error


def test_cli_entry_point():
    code, out, _ = charp.run(["--p", "2", "--base", "v", "--vars", "x,y", "hasse", "x^2+v*y^2", "--beta", "v:1"])
    assert code == 0 and out == "y^2\n"
    code, _, err = charp.run(["--p", "2", "--vars", "x", "groebner", "x+w"])
    assert code == 2 and "UnknownIdentifier" in err
