from fractions import Fraction

import pytest

import lahbell


def test_numbers():
    assert [lahbell.lah_bell_number(n) for n in range(9)] == [1, 1, 3, 13, 73, 501, 4051, 37633, 394353]
    assert lahbell.bell_number(25) == 4638590332229999353
    assert lahbell.lah(4, 2) == 36
    assert lahbell.stirling1(3, 1) == 2
    assert lahbell.stirling1(3, 2) == -3
    assert lahbell.stirling2(5, 3) == 25
    assert lahbell.table("lah", 3) == [[1], [0, 1], [0, 2, 1], [0, 6, 6, 1]]


def test_big_values_are_python_ints():
    v = lahbell.lah_bell_number(40)
    assert isinstance(v, int)
    assert v > 2**64


def test_polys():
    assert lahbell.poly("lah_bell", 2) == "x^2 + 2*x"
    assert lahbell.poly("laguerre", 1, alpha=Fraction(1, 2)) == "-x + 3/2"
    assert lahbell.poly_terms("lah_bell", 2) == {(2, 0, 0, 0): 1, (1, 0, 0, 0): 2}
    assert "degenerate_lah_bell" in lahbell.families()


def test_gf():
    assert lahbell.gf("lah_bell", 4) == ["1", "1", "3", "13", "73"]
    assert lahbell.gf("lah_bell_poly", 2, x=2) == ["1", "2", "8"]
    assert len(lahbell.gf_names()) == 9


def test_verify():
    records = lahbell.verify(["all"], max_n=6)
    assert records
    assert all(r["status"] == "pass" for r in records)
    assert {"id", "anchor", "description", "range", "status"} <= set(records[0])


def test_dobinski():
    r = lahbell.dobinski(3, Fraction(1, 2))
    assert abs(r["value"] - Fraction(37, 8)) <= r["error_bound"]
    assert r["error_bound"] <= Fraction(1, 10**20)
    assert r["value_decimal"].startswith("4.625")
    b = lahbell.dobinski(4, "3", eps="1e-10", family="bell")
    assert abs(b["value"] - (81 + 6 * 27 + 7 * 9 + 3)) <= b["error_bound"]


def test_oracle():
    assert lahbell.count_ordered_partitions(3) == {1: 6, 2: 6, 3: 1}
    assert sum(lahbell.count_set_partitions(5).values()) == 52


def test_errors():
    with pytest.raises(lahbell.UnknownNameError):
        lahbell.poly("hermite", 2)
    with pytest.raises(KeyError):
        lahbell.verify(["nope"])
    with pytest.raises(lahbell.PreconditionError):
        lahbell.dobinski(2, 0)
    with pytest.raises(ValueError):
        lahbell.count_ordered_partitions(11)
    with pytest.raises(lahbell.PrecisionNotReached):
        lahbell.dobinski(0, 30000, eps="1/100", family="bell")
