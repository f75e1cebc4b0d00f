import pathlib

import pytest

import gaugekit as gk

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"
SPEC = {"n": 4, "q": 3, "xi": [1, 0]}


def test_bezout_and_big_integers():
    g, u, v = gk.bezout(240, 46)
    assert g == 2 and u * 240 + v * 46 == 2
    big = 10**40 + 7
    assert gk.gcd_m(0, [big, 2 * big]) == big


def test_orbit_reduce_certificate():
    x = [4, 6, 9]
    cert = gk.orbit_reduce(12, x)
    assert cert["canonical"] == [1, 0, 0]
    assert abs(gk.determinant(cert["transform"])) == 1
    for i, row in enumerate(cert["transform"]):
        want = 1 if i == 0 else 0
        assert (sum(a * b for a, b in zip(row, x)) - want) % 12 == 0
    assert gk.same_orbit(12, [1, 0], [5, 7])
    assert not gk.same_orbit(12, [2, 6], [3, 9])


def test_row_echelon_and_smith():
    d, b = gk.row_echelon([[2, 3], [4, 5]], [0, 12])
    assert abs(gk.determinant(d)) == 1
    assert b[1][0] == 0
    assert gk.smith_invariants([[2, 4], [6, 8]]) == [2, 4]


def test_tables():
    assert gk.pi6_order("SU2") == 12
    assert gk.pi6_order("G2") == 3
    assert gk.pi6_order("E8") == 1
    assert gk.lookup("sphere:3", 6)["group"]["text"] == "Z/12"
    assert gk.lookup("SU7", 30) is None
    entry = gk.lookup("SU7", 30, tables=[str(DATA / "extra_tables.json")])
    assert entry["citation"] == "test fixture"
    assert "SU(2)" in gk.shipped_lie_groups()


def test_classify_decompose_equivalent():
    c = gk.classify("SU2", SPEC)
    assert c["case"] == "Dim7_pi6coprime"
    assert c["bundles"]["free_rank"] == 2
    assert gk.classify("SU2", {"n": 4, "q": 3, "xi": [2, 2]})["case"] == "Unsupported"
    assert gk.tbar(SPEC) == 1

    e = gk.decompose("SU2", SPEC, [1, 2])
    assert e["pretty"] == "G^1(S^4) x Omega^4 SU(2) x Omega^3 SU(2) x Map*(Y_F, SU(2))"
    assert gk.decompose("SU2", SPEC, pointed=True)["factors"][0]["multiplicity"] == 2

    assert gk.equivalent("SU2", SPEC, [5, 7], [1, 0])["verdict"] == "Equivalent"
    assert gk.equivalent("SU2", SPEC, [2, 4], [1, 0])["verdict"] == "NotEquivalent"

    p = gk.pointed_homotopy_groups("SU2", SPEC, 0)
    assert p["complete"] and p["text"] == "Z (+) Z/2 (+) Z/2"


def test_errors():
    with pytest.raises(gk.ParseError):
        gk.classify("SU2", '{"n":4,')
    with pytest.raises(gk.DomainError):
        gk.decompose("SU2", SPEC, [1])
    with pytest.raises(ValueError):
        gk.pi6_order("Spin3")
