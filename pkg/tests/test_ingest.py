
import pytest
from hypothesis import given, settings, strategies as st

from kosnet.errors import IntegrityError
from kosnet.ingest import Catalog, build_catalog, catalog_to_triples
from kosnet.triples import NS, Triple, parse_triples, serialize_triples

from helpers import AUTHOR, ORG, PAPER

S = NS


def T(s, p, o, lit=False):
    return Triple(s, S + p if not p.startswith("http") else p, o, lit)


def small_paper(authors=("urn:a1", "urn:a2"), keyword="elearning"):
    ts = [T("urn:p1", "type", S + "Paper"), T("urn:p1", "title", "A paper", True),
          T("urn:p1", "keyword", keyword, True)]
    for a in authors:
        ts += [T(a, "type", S + "Author"), T(a, "name", a[-2:], True), T("urn:p1", "hasAuthor", a)]
    return ts


def test_small_catalog():
    cat = build_catalog(small_paper())
    assert list(cat.papers) == ["urn:p1"]
    paper = cat.papers["urn:p1"]
    assert paper.author_iris == ("urn:a1", "urn:a2")
    assert paper.keywords == ("elearning",)
    assert len(cat.authors) == 2
    assert cat.orgs == {}


def test_untyped_author_is_integrity_error():
    ts = small_paper(authors=("urn:a1",)) + [T("urn:p1", "hasAuthor", "urn:a9")]
    with pytest.raises(IntegrityError) as exc:
        build_catalog(ts)
    assert exc.value.iri == "urn:a9"


def test_paper_without_authors_rejected():
    with pytest.raises(IntegrityError) as exc:
        build_catalog([T("urn:p1", "type", S + "Paper"), T("urn:p1", "title", "x", True)])
    assert exc.value.iri == "urn:p1"
    assert "no authors" in exc.value.reason


def test_empty_triple_set():
    assert build_catalog(parse_triples("")) == Catalog()


def test_affiliation_must_be_org():
    ts = small_paper(authors=("urn:a1",)) + [T("urn:a1", "affiliatedWith", "urn:o1")]
    with pytest.raises(IntegrityError) as exc:
        build_catalog(ts)
    assert exc.value.iri == "urn:o1"


def test_conflicting_types():
    ts = small_paper() + [T("urn:a1", "type", S + "Org")]
    with pytest.raises(IntegrityError, match="conflicting types"):
        build_catalog(ts)


def test_wrong_object_kind():
    ts = small_paper() + [T("urn:p1", "hasAuthor", "urn:a1-as-text", True)]
    with pytest.raises(IntegrityError, match="expects an IRI"):
        build_catalog(ts)


def test_bad_year_and_country():
    with pytest.raises(IntegrityError, match="year"):
        build_catalog(small_paper() + [T("urn:p1", "year", "twenty", True)])
    org = [T("urn:o1", "type", S + "Org"), T("urn:o1", "orgName", "O", True)]
    with pytest.raises(IntegrityError, match="2-letter"):
        build_catalog(org + [T("urn:o1", "country", "ECU", True)])
    cat = build_catalog(org + [T("urn:o1", "country", "ec", True)])
    assert cat.orgs["urn:o1"].country == "EC"


def test_unknown_predicates_are_counted_not_fatal():
    ts = small_paper() + [T("urn:p1", "http://purl.org/dc/terms/abstract", "x", True),
                          T("urn:p1", "http://purl.org/dc/terms/subject", "urn:x")]
    cat = build_catalog(ts)
    assert cat.warnings["unknown_predicate"] == 2
    assert cat == build_catalog(small_paper())


def test_untyped_subject_and_mismatch_warnings():
    ts = small_paper() + [T("urn:ghost", "title", "boo", True), T("urn:a1", "title", "wrong", True)]
    cat = build_catalog(ts)
    assert cat.warnings["untyped_subject"] == 1
    assert cat.warnings["predicate_type_mismatch"] == 1


def test_conflicting_single_values_pick_smallest():
    ts = small_paper() + [T("urn:p1", "title", "Another title", True)]
    cat = build_catalog(ts)
    assert cat.papers["urn:p1"].title == "A paper"
    assert cat.warnings["conflicting_value"] == 1


def test_f1_counts(f1_catalog):
    assert len(f1_catalog.papers) == 8
    assert len(f1_catalog.authors) == 10
    assert len(f1_catalog.orgs) == 3
    assert {o.country for o in f1_catalog.orgs.values()} == {"EC", "ES"}
    assert f1_catalog.authors[AUTHOR + "a10"].org_iri is None
    assert f1_catalog.warnings == {"unknown_predicate": 1}
    p1 = f1_catalog.papers[PAPER + "p1"]
    # the duplicated keyword triple collapses
    assert p1.keywords == ("OCW", "e-Learning")
    assert p1.author_iris == (AUTHOR + "a01", AUTHOR + "a02")
    assert f1_catalog.papers[PAPER + "p7"].title == 'Predicting "MOOC" dropout'
    assert f1_catalog.authors[AUTHOR + "a06"].org_iri == ORG + "upm"


def test_f1_iteration_order_is_lexicographic(f1_catalog):
    for mapping in (f1_catalog.papers, f1_catalog.authors, f1_catalog.orgs):
        assert list(mapping) == sorted(mapping)


def test_f1_round_trip(f1_catalog):
    text = serialize_triples(catalog_to_triples(f1_catalog))
    again = build_catalog(parse_triples(text))
    assert again == f1_catalog
    assert serialize_triples(catalog_to_triples(again)) == text


@settings(max_examples=50, deadline=None)
@given(st.randoms(use_true_random=False))
def test_f1_permutation_determinism(f1_paths, rnd):
    lines = f1_paths["data"].read_text(encoding="utf-8").splitlines()
    base = build_catalog(parse_triples("\n".join(lines)))
    rnd.shuffle(lines)
    shuffled = build_catalog(parse_triples("\n".join(lines)))
    assert shuffled == base
    assert serialize_triples(catalog_to_triples(shuffled)) == serialize_triples(catalog_to_triples(base))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 200), max_size=30))
def test_duplicates_never_change_counts(f1_paths, picks):
    ts = list(parse_triples(f1_paths["data"].read_text(encoding="utf-8")))
    base = build_catalog(ts)
    extra = [ts[i % len(ts)] for i in picks]
    dup = build_catalog(ts + extra)
    assert dup == base
    assert dup.stats() == base.stats()


def test_papers_by_author(f1_catalog):
    index = f1_catalog.papers_by_author()
    assert index[AUTHOR + "a06"] == (PAPER + "p4", PAPER + "p6", PAPER + "p8")
    assert set(index) == set(f1_catalog.authors)
