import pytest

from gqla import parse
from gqla.errors import EmptyCorpus
from gqla.metrics import LARGE_THRESHOLD, characteristics, corpus_aggregate, is_large, lower_median


def stats_with(count):
    return characteristics(parse(" ".join(f"type T{i} {{ a: Int }}" for i in range(count))))


def test_company_characteristics(company):
    s = characteristics(company)
    assert s.definition_count == 8
    assert s.object_type_count == 6
    assert s.input_object_type_count == 1
    assert s.supports_mutation and not s.supports_subscription
    assert not s.has_interfaces and not s.has_unions and not s.has_custom_directives
    assert s.fields_per_object_type == (1, 1, 5, 3, 2, 2)
    assert characteristics(company, include_schema_definition=False).definition_count == 7


def test_minimal():
    s = characteristics(parse("type Query { a: Int }"))
    assert (s.definition_count, s.object_type_count) == (1, 1)


def test_features():
    s = characteristics(
        parse(
            "type Query { a: U } union U = A | B type A { x: Int } type B { y: Int } "
            "type Subscription { tick: Int } directive @cost(v: Int) on FIELD_DEFINITION interface I { x: Int }"
        )
    )
    assert s.has_unions and s.has_interfaces and s.has_custom_directives and s.supports_subscription


@pytest.mark.parametrize("count, large", [(36, False), (37, True), (8, False)])
def test_large_threshold_is_strict(count, large):
    assert LARGE_THRESHOLD == 36
    assert is_large(stats_with(count)) is large


def test_lower_median():
    assert lower_median([6, 60]) == 6
    assert lower_median([3, 1, 2]) == 2
    assert lower_median([4, 1, 3, 2]) == 2
    assert lower_median([]) is None


def test_corpus_single():
    s = characteristics(parse("type Query { a: Int b: Int }"))
    agg = corpus_aggregate([s])
    assert agg.median_object_types == 1
    assert agg.median_fields_in_object_types == 2
    assert set(agg.feature_proportions.values()) <= {0.0, 1.0}


def test_corpus_medians_and_proportions():
    a, b = stats_with(6), stats_with(60)
    assert corpus_aggregate([a, b]).median_object_types == 6
    u = characteristics(parse("type Query { a: U } union U = A type A { x: Int }"))
    agg = corpus_aggregate([a, b, u])
    assert agg.feature_proportions["has_unions"] == pytest.approx(1 / 3)


def test_empty_corpus():
    with pytest.raises(EmptyCorpus):
        corpus_aggregate([])
