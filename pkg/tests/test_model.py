import json
import math

import pytest
from hypothesis import given, settings

from docgen import documents, json_values
from fixtures import DEMO_ROWS, DEMO_TEXT
from jsonbench.model import (JsonParseError, deep_equal, enumerate_nodes,
                             format_number, height, iter_values, kind_of,
                             minified_byte_size, minify, parse, resolve_pointer)


# -- parsing ------------------------------------------------------------------------

def test_parse_empty_object():
    assert parse("{}") == {}


def test_parse_single_pair():
    assert parse('{ "foo": "bar" }') == {"foo": "bar"}


def test_duplicate_keys_rejected():
    with pytest.raises(JsonParseError, match="duplicate"):
        parse('{"a":1,"a":2}')


def test_duplicate_keys_in_nested_object_rejected():
    with pytest.raises(JsonParseError):
        parse('[{"x":{"k":1,"k":1}}]')


def test_parse_error_carries_position():
    with pytest.raises(JsonParseError) as info:
        parse('{"a": tru}')
    assert info.value.pos == 6
    assert info.value.lineno == 1


@pytest.mark.parametrize("text", ["NaN", "Infinity", "-Infinity", "[1e400]", "-1e999"])
def test_non_finite_numbers_rejected(text):
    with pytest.raises(JsonParseError):
        parse(text)


def test_lone_surrogate_rejected():
    with pytest.raises(JsonParseError):
        parse('"\\ud800"')
    with pytest.raises(JsonParseError):
        parse('{"\\udc00": 1}')


def test_surrogate_pair_accepted():
    assert parse('"\\ud83d\\ude00"') == "\U0001F600"


def test_invalid_utf8_rejected_with_offset():
    with pytest.raises(JsonParseError) as info:
        parse(b'["ok", "\xff"]')
    assert info.value.pos == 8


def test_int64_range():
    assert parse(str(2**63 - 1)) == 2**63 - 1
    assert isinstance(parse(str(-(2**63))), int)


def test_out_of_range_integer_literal():
    # Exactly representable as binary64: kept as a float.
    value = parse("100000000000000000000")
    assert isinstance(value, float) and value == 1e20
    with pytest.raises(JsonParseError):
        parse("18446744073709551617")


def test_trailing_garbage_rejected():
    with pytest.raises(JsonParseError):
        parse("{} {}")


# -- number rendering ------------------------------------------------------------------

@pytest.mark.parametrize("n, text", [
    (0, "0"), (-0.0, "0"), (100.0, "100"), (1.5, "1.5"), (-18000, "-18000"),
    (46.20833, "46.20833"), (1e21, "1e+21"), (1e20, "100000000000000000000"),
    (1e-7, "1e-7"), (1.5e-7, "1.5e-7"), (0.000001, "0.000001"), (123e-20, "1.23e-18"),
    (5e-324, "5e-324"), (1.7976931348623157e308, "1.7976931348623157e+308"),
    (0.1, "0.1"), (282.55, "282.55"), (2**63 - 1, "9223372036854775807"),
    (6.089342891559977e16, "60893428915599768"), (float(2**63), "9223372036854775808"),
])
def test_format_number(n, text):
    assert format_number(n) == text


def test_integral_float_reads_back_exactly():
    for x in (6.089342891559977e16, float(2**63), 9.999999999999999e20, -1.2345e19):
        assert deep_equal(parse(format_number(x)), x)
        assert len(format_number(x)) == len(format_number(parse(format_number(x))))


def test_format_number_rejects_non_finite():
    with pytest.raises(ValueError):
        format_number(math.inf)
    with pytest.raises(TypeError):
        format_number(True)


# -- minification and byte sizes -------------------------------------------------------

def test_minify_known_sizes():
    assert minify({"foo": "bar"}) == b'{"foo":"bar"}'
    assert minified_byte_size({"foo": "bar"}) == 13
    assert [minified_byte_size(v) for v in (True, False, None)] == [4, 5, 4]
    assert minified_byte_size("") == 2


def test_minify_demo_document():
    assert minify(parse(DEMO_TEXT)) == DEMO_TEXT.encode()
    assert minified_byte_size(parse(DEMO_TEXT)) == 184


def test_minify_counts_utf8_bytes():
    assert minified_byte_size("é") == 4
    assert minified_byte_size("\U0001F600") == 6


def test_minify_escapes_controls():
    assert minify("a\n\x01\"\\/") == b'"a\\n\\u0001\\"\\\\/"'


def test_minify_agrees_with_stdlib_for_non_floats():
    for doc in documents(200, seed=3):
        if any(isinstance(v, float) for v in iter_values(doc)):
            continue
        expected = json.dumps(doc, separators=(",", ":"), ensure_ascii=False).encode()
        assert minify(doc) == expected


def test_parse_minify_round_trip_generated():
    for doc in documents(1000, seed=11):
        text = minify(doc)
        again = parse(text)
        assert deep_equal(again, doc)
        assert minify(again) == text


@settings(max_examples=200, deadline=None)
@given(json_values)
def test_parse_minify_round_trip_property(doc):
    assert deep_equal(parse(minify(doc)), doc)


# -- equality ---------------------------------------------------------------------------

def test_deep_equal_rules():
    assert deep_equal({"a": 1, "b": 2}, {"b": 2, "a": 1})
    assert not deep_equal([1, 2], [2, 1])
    assert deep_equal(1, 1.0)
    assert not deep_equal(True, 1)
    assert not deep_equal(0, False)
    assert not deep_equal(None, False)
    assert not deep_equal([], {})
    assert not deep_equal({"a": None}, {"b": None})


def test_deep_equal_demo_duplicates():
    doc = parse(DEMO_TEXT)
    assert deep_equal(resolve_pointer(doc, "/data/0"), resolve_pointer(doc, "/data/2"))


# -- pointers and nodes --------------------------------------------------------------

def test_resolve_pointer():
    doc = {"a/b": {"m~n": [10, 20]}, "": 5}
    assert resolve_pointer(doc, "") is doc
    assert resolve_pointer(doc, "/a~1b/m~0n/1") == 20
    assert resolve_pointer(doc, "/") == 5
    with pytest.raises(KeyError):
        resolve_pointer(doc, "/a~1b/m~0n/01")


def test_demo_node_table():
    nodes = enumerate_nodes(parse(DEMO_TEXT))
    rows = [(n.pointer, n.kind, n.level, n.byte_size, n.duplicate_of) for n in nodes]
    assert rows == DEMO_ROWS
    assert sum(1 for n in nodes if n.duplicate_of) == 5


def test_scalar_document_is_one_node():
    (node,) = enumerate_nodes(7)
    assert (node.pointer, node.level, node.kind, node.byte_size) == ("/", 1, "numeric", 1)


def test_null_counts_as_boolean():
    assert kind_of(None) == "boolean"
    assert kind_of(False) == "boolean"


def test_empty_array_and_object_are_distinct_values():
    nodes = enumerate_nodes([[], {}])
    assert [n.duplicate_of for n in nodes] == [None, None, None]


def test_root_and_empty_key_member_are_not_confused():
    nodes = enumerate_nodes({"": {}, "x": {"": {}}})
    assert nodes[0].pointer == "/" and nodes[1].pointer == "/"
    assert nodes[1].path == ("",)
    # /x/ duplicates the empty-key member, not the root.
    assert nodes[3].duplicate_of == "/" and nodes[3].path == ("x", "")
    assert nodes[2].duplicate_of is None


def test_node_invariants_on_generated_documents():
    for doc in documents(300, seed=5):
        nodes = enumerate_nodes(doc)
        assert nodes[0].level == 1 and nodes[0].byte_size == minified_byte_size(doc)
        by_path = {n.path: n for n in nodes}
        for i, n in enumerate(nodes):
            assert n.byte_size == minified_byte_size(resolve_pointer_path(doc, n.path))
            if n.path:
                parent = by_path[n.path[:-1]]
                assert n.level == parent.level + 1
            if n.duplicate_of is not None:
                earlier = [m for m in nodes[:i] if m.pointer == n.duplicate_of]
                assert earlier
        assert height(doc) == max(n.level for n in nodes) - 1


def resolve_pointer_path(doc, path):
    for token in path:
        doc = doc[token]
    return doc
