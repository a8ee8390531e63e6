import sys
import time
from pathlib import Path

import pytest

from docgen import documents
from fixtures import DEMO_TEXT
from jsonbench.codecs import MESSAGEPACK, CodecError, external_codec, roundtrip_verify
from jsonbench.model import iter_values, parse

PLUGINS = Path(__file__).parent / "plugins"


def plugin(name, script, **kw):
    path = str(PLUGINS / script)
    return external_codec(name, [sys.executable, path, "encode"],
                          [sys.executable, path, "decode"], **kw)


def test_cat_is_an_identity_codec():
    cat = external_codec("cat", ["cat"], ["cat"])
    doc = parse(DEMO_TEXT)
    report = roundtrip_verify(cat, doc)
    assert report.ok
    assert report.encoded == DEMO_TEXT.encode()


def test_failing_command_is_reported():
    broken = external_codec("broken", ["false"], ["cat"])
    report = roundtrip_verify(broken, {"a": 1})
    assert not report.ok
    assert "exited with status 1" in report.reason


def test_missing_executable_is_reported():
    ghost = external_codec("ghost", ["/nonexistent/encoder"], ["cat"])
    with pytest.raises(CodecError, match="not found"):
        ghost.encode([1])


def test_timeout_is_enforced():
    slow = external_codec("slow", ["sleep", "5"], ["cat"], timeout=0.3)
    start = time.monotonic()
    report = roundtrip_verify(slow, [1])
    assert not report.ok and "timed out" in report.reason
    assert time.monotonic() - start < 3


def test_non_json_decode_output_is_a_protocol_violation():
    codec = plugin("garbage", "garbage_codec.py")
    report = roundtrip_verify(codec, {"a": 1})
    assert not report.ok and "protocol violation" in report.reason


def test_lossy_codec_reports_the_missing_member():
    lossy = plugin("lossy", "lossy_codec.py")
    report = roundtrip_verify(lossy, parse(DEMO_TEXT))
    assert not report.ok
    assert report.pointer == "/tags"
    assert report.expected == "[]" and report.actual == "<missing>"


def test_external_flags_are_carried():
    codec = external_codec("pb", ["cat"], ["cat"], schema_driven=True, sequential=False)
    assert codec.kind == "external" and codec.schema_driven and not codec.sequential
    with pytest.raises(ValueError):
        external_codec("half", ["cat"], [])


def test_external_msgpack_matches_builtin_sizes():
    # The reference msgpack package, wrapped as a plugin, must produce the
    # same byte counts as the builtin encoder.
    codec = plugin("msgpack-ext", "msgpack_codec.py")
    corpus = [parse(DEMO_TEXT)] + [
        d for d in documents(60, seed=77)
        if not any(isinstance(v, float) and v.is_integer() and abs(v) >= 2**53
                   for v in iter_values(d))
    ][:20]
    for doc in corpus:
        report = roundtrip_verify(codec, doc)
        assert report.ok, report.reason
        assert len(report.encoded) == len(MESSAGEPACK.encode(doc))
