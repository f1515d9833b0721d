import pytest

import findom

SQUARE = """complex sq
field Fp 32003
vars a b
degrees 0..2
rank 0 1
rank 1 2
rank 2 1
d 1 { 1 - a*b, 1 - a }
d 2 { -1 + a ; 1 - a*b }
"""


def test_square_is_finitely_dominated():
    c = findom.read_complex(SQUARE)
    assert c.ranks == [1, 2, 1]
    assert c.vars == ["a", "b"]
    r = findom.findom(c)
    assert r["verdict"] == "FinitelyDominated"
    assert len(r["decisions"]) == 4
    assert all(d["verdict"] == "Acyclic" for d in r["decisions"])


def test_decision_is_certified():
    c = findom.example_square(2)
    d = findom.novikov(c, 1, "-")
    assert d["verdict"] == "Acyclic"
    assert d["certified"]


def test_swapped_ordering_never_refutes():
    r = findom.findom(findom.example_square(2), order=[2, 1])
    assert all(d["verdict"] != "NotAcyclic" for d in r["decisions"])


def test_free_module_is_refuted():
    c = findom.read_complex("complex f\nvars x\ndegrees 0..0\nrank 0 1\n")
    r = findom.findom(c)
    assert r["verdict"] == "NotFinitelyDominated"
    assert r["oracle"] == "NotFinitelyDominated"
    assert findom.homology(c)[0]["free_rank"] == 1


def test_stuck_fixture_is_inconclusive():
    c = findom.read_complex("complex s\nvars x1 x2\ndegrees 0..1\nrank 0 1\nrank 1 1\nd 1 { 1 - x1 - x2 }\n")
    assert findom.novikov(c, 1, "+")["verdict"] == "Inconclusive"


def test_field_check_and_torus():
    assert findom.field_check(findom.example_square(2))["verdict"] == "FinitelyDominated"
    base = findom.read_complex("complex p\nvars x\ndegrees 0..0\nrank 0 1\n")
    t = findom.mapping_torus(base, "x")
    assert t.vars == ["x", "t"]
    assert t.ranks == [1, 1]
    assert t.entry(1, 0, 0) == "-t + x"
    # H_0 = F[x^±] is infinite-dimensional, but no generic rank sees it.
    r = findom.findom(t)
    assert r["verdict"] == "Inconclusive"
    assert [d["verdict"] for d in r["decisions"][:2]] == ["Acyclic", "Acyclic"]


def test_random_matches_truth():
    for seed in range(1, 21):
        c, truth = findom.random_complex(seed)
        verdict = findom.findom(c)["verdict"]
        assert (verdict == "FinitelyDominated") == truth["finitely_dominated"]


def test_round_trip_and_fields():
    c = findom.read_complex(SQUARE, field="Q")
    assert c.field == "Q"
    again = findom.read_complex(c.to_text())
    assert again.to_text() == c.to_text()
    q = findom.read_complex("complex h\nfield Q\nvars x\ndegrees 0..1\nrank 0 1\nrank 1 1\nd 1 { 1/2 - x }\n")
    assert q.entry(1, 0, 0) == "1/2 - x"
    # The Q complex keeps its field while another field is in use.
    findom.example_square(1, field="Fp 7")
    assert findom.homology(q)[0]["dim_f"] == 1


def test_errors():
    with pytest.raises(findom.ParseError):
        findom.read_complex("complex b\nvars x\ndegrees 0..2\nrank 0 1\nrank 1 1\nrank 2 1\nd 1 { x }\nd 2 { x }\n")
    with pytest.raises(ValueError):
        findom.novikov(findom.example_square(2), 3)
