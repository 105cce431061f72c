import pytest

from gqla import parse
from gqla.errors import EmptyCorpus
from gqla.lint import corpus_convention_summary, is_mutation_name, lint


def test_company_conventions(company):
    report = lint(company)
    assert report.status("R1") == "consistent"
    assert report.status("R5") == "consistent"
    assert report.status("R6") == "consistent"
    assert report.status("R3") == report.status("R4") == "not_applicable"


def test_snake_case_overlaps_camel_case():
    report = lint(parse("type Query { total_count: Int }"))
    assert report.status("R7") == "consistent"
    assert report.status("R1") == "consistent"


@pytest.mark.parametrize(
    "name, prefix, infix",
    [
        ("createOffice", True, True),
        ("create", True, True),
        ("deleteUser", True, True),
        ("upsertItem", True, True),
        ("addMember", True, True),
        ("creates", False, False),
        ("address", False, False),
        ("office", False, False),
        ("bulkCreateUsers", False, True),
        ("bulkCreated", False, False),
    ],
)
def test_mutation_names(name, prefix, infix):
    assert is_mutation_name(name) is prefix
    assert is_mutation_name(name, infix=True) is infix


def test_offenders_listed_and_capped():
    doc = parse("type Query { " + " ".join(f"F{i}: Int" for i in range(60)) + " ok: Int }")
    r1 = lint(doc)["R1"]
    assert r1.violations == 60 and r1.status == "partial"
    assert len(r1.to_dict()["offenders"]) == 50
    assert len(r1.to_dict(cap=5)["offenders"]) == 5


def test_summary_proportion():
    good = lint(parse("type Query { a: Int }"))
    mixed = lint(parse("type Query { a: Int B: Int }"))
    summary = corpus_convention_summary([good, mixed])
    assert summary["R1"]["proportion"] == 0.5
    assert summary["R3"]["proportion"] == "not_applicable"


def test_summary_enum_rule():
    reports = [lint(parse(f"type Query {{ a: E{i} }} enum E{i} {{ A }}")) for i in range(3)]
    assert corpus_convention_summary(reports)["R3"]["proportion"] == 1.0


def test_summary_empty():
    with pytest.raises(EmptyCorpus):
        corpus_convention_summary([])
