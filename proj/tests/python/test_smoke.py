import pytest

import wrembed


def test_normal_forms():
    assert str(wrembed.GElement("f s f s^-1")) == "[(0,1),(1,1)] ; 0"
    assert str(wrembed.LElement("z b1 z^-1 b1^-1")) == "[(1,1,1),(1,0,-1)] ; 0"
    assert wrembed.normalize_word("x3 x3^-1", "x") == ""
    assert wrembed.GElement("s^3").delta == 3


def test_big_integers_cross_the_boundary():
    a = wrembed.phi_encode("x100")
    assert a.factors[1] == (2**100 - 1, 1)
    assert wrembed.phi_decode(a) == "x100"
    assert wrembed.GElement.s(10**30).delta == 10**30


def test_deciders():
    phi = wrembed.phi_encode
    assert wrembed.is_trivial(phi("x1 x2 x1^-1 x2^-1"))
    assert not wrembed.is_trivial(wrembed.GElement("f s f^-1 s^-1"))
    assert wrembed.in_image(phi("x3 x1^-2"))
    assert not wrembed.in_image(wrembed.GElement.s())
    assert wrembed.min_support(phi("x1")) == 1
    assert wrembed.min_support(wrembed.GElement()) is None
    assert wrembed.l_eval(wrembed.LElement("z b1 z^-1 b1^-1"), 0) == "x1"


def test_orders_and_reductions():
    assert wrembed.compare(wrembed.phi_encode("x1"), wrembed.GElement.s()) == ("LT", "s-exponent")
    assert wrembed.insep_decide("a2 a1^-2")
    assert not wrembed.insep_decide("a2 a1^-1")
    assert wrembed.prime(5) == 11
    report = wrembed.theorem1_demo("odd-even", 6)
    assert "summary,violations,0" in report
    assert wrembed.theorem2_probe(1, 1) == ("TRIVIAL", False)
    assert wrembed.theorem2_probe(2, 50) == ("UNKNOWN", False)


def test_errors():
    with pytest.raises(ValueError):
        wrembed.GElement("f q")
    with pytest.raises(ValueError):
        wrembed.phi_decode(wrembed.GElement.f())
