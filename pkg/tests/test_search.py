import pytest

from qbecc.gf import GF2, GF4, Poly
from qbecc.registry import load_registry, registry_entry
from qbecc.search import (GenPolyError, SearchPlan, build_registry_code,
                          enumerate_cyclic_generators, format_genpoly,
                          genpoly_to_poly, parse_genpoly, poly_to_genpoly,
                          records_to_csv, reproduce_table1, search)

W = 2


def test_parse_genpoly_table_row():
    spec = parse_genpoly("1^6 2^3 1^0", 15)
    assert spec.terms == ((1, 6), (2, 3), (1, 0))
    assert genpoly_to_poly(spec, GF4) == Poly(GF4, (1, 0, 0, W, 0, 0, 1))


def test_parse_genpoly_constant():
    spec = parse_genpoly("1^0", 7)
    assert genpoly_to_poly(spec, GF2) == Poly.one(GF2)


def test_parse_genpoly_errors():
    with pytest.raises(GenPolyError):
        parse_genpoly("1^6 1^6", 15)
    with pytest.raises(GenPolyError):
        parse_genpoly("4^2", 15)
    with pytest.raises(GenPolyError):
        parse_genpoly("1^15", 15)
    with pytest.raises(GenPolyError):
        parse_genpoly("", 15)
    with pytest.raises(GenPolyError):
        parse_genpoly("1^2 w^1", 15)


def test_parse_genpoly_roundtrip():
    for text, n in [("1^6 2^3 1^0", 15), ("1^8 3^7 3^5 3^4 3^3 3^1 1^0", 17)]:
        spec = parse_genpoly(text, n)
        assert format_genpoly(spec) == text
        poly = genpoly_to_poly(spec, GF4)
        assert format_genpoly(poly_to_genpoly(poly, n)) == text


def test_binary_genpoly_rejects_nonbinary_coefficients():
    spec = parse_genpoly("2^1 1^0", 7)
    with pytest.raises(GenPolyError):
        genpoly_to_poly(spec, GF2)


def test_enumerate_cyclic_generators_counts():
    assert len(enumerate_cyclic_generators(3, GF2)) == 4
    assert len(enumerate_cyclic_generators(5, GF4)) == 8
    divisors = enumerate_cyclic_generators(15, GF4)
    assert len(divisors) == 512  # 9 irreducible factors
    assert Poly(GF4, (1, 0, 0, W, 0, 0, 1)) in divisors


def test_enumerate_cyclic_generators_rejects_even():
    with pytest.raises(ValueError):
        enumerate_cyclic_generators(4, GF2)


def test_search_n13_hermitian_contains_table_row():
    outcome = search(SearchPlan((13,), ("hermitian",)))
    assert outcome.complete
    hits = [r for r in outcome.records if (r.n, r.k, r.l) == (13, 1, 3)]
    assert hits and all(r.saturates for r in hits)


def test_search_n7_css_contains_steane():
    outcome = search(SearchPlan((7,), ("css",)))
    assert outcome.complete
    hits = [r for r in outcome.records if (r.n, r.k) == (7, 1) and r.l >= 1]
    assert hits


def test_search_empty_plan():
    outcome = search(SearchPlan((), ("hermitian", "css")))
    assert outcome.records == () and outcome.complete


def test_search_budget_marks_incomplete():
    outcome = search(SearchPlan((13, 15), ("hermitian",), max_candidates=3))
    assert not outcome.complete
    assert len(outcome.records) == 3


def test_search_deterministic_csv():
    a = records_to_csv(search(SearchPlan((7,), ("hermitian", "css"))).records)
    b = records_to_csv(search(SearchPlan((7,), ("hermitian", "css"))).records)
    assert a == b
    assert a.splitlines()[0] == "n,k,l,qrb,saturates,degenerate,construction,genpoly1,genpoly2"


def test_search_records_revalidate():
    from qbecc.burst import quantum_burst_capability
    outcome = search(SearchPlan((7,), ("hermitian",)))
    for record in outcome.records[:6]:
        entry_like = type("E", (), {
            "construction": record.construction, "n": record.n,
            "genpolys": (record.genpoly1, record.genpoly2)})
        stab = build_registry_code(entry_like)
        analysis = quantum_burst_capability(stab)
        assert (stab.k, analysis.l, analysis.degenerate) == \
            (record.k, record.l, record.degenerate)


def test_plan_validation():
    with pytest.raises(ValueError):
        SearchPlan((7,), ("hermitian",), max_seconds=0)
    with pytest.raises(ValueError):
        SearchPlan((7,), ("weird",))


def test_registry_loads_15_rows():
    entries = load_registry()
    assert len(entries) == 15
    assert [e.id for e in entries][:2] == ["13_1", "15_3"]
    entry = registry_entry("35_25")
    assert entry.note  # carries the printed-typo correction note


def test_registry_unknown_id():
    with pytest.raises(KeyError):
        registry_entry("99_9")


def test_reproduce_quick_rows():
    entries = [e for e in load_registry() if e.n <= 17]
    report = reproduce_table1(entries)
    assert len(report.rows) == 4
    assert report.all_match
