import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from fixtures import DEMO_TEXT
from jsonbench.cli import CliConfig, cmd_bench, main
from jsonbench.registry import RegistryError, load_registry, registry_from_data

PLUGINS = Path(__file__).parent / "plugins"


@pytest.fixture
def demo_file(tmp_path):
    path = tmp_path / "demo.json"
    path.write_text(DEMO_TEXT, encoding="utf-8")
    return path


def lossy_registry(tmp_path):
    script = str(PLUGINS / "lossy_codec.py")
    path = tmp_path / "registry.json"
    path.write_text(json.dumps({
        "codecs": ["CBOR", {"name": "lossy", "encode": [sys.executable, script, "encode"],
                            "decode": [sys.executable, script, "decode"],
                            "schema_driven": True}],
        "compressors": ["identity"],
    }))
    return path


# -- analyze ---------------------------------------------------------------------------

def test_analyze_demo(demo_file, capsys):
    assert main(["analyze", str(demo_file)]) == 0
    out = capsys.readouterr().out
    assert "Tier 2 Minified ≥ 100 < 1000 bytes, numeric, non-redundant, nested" in out
    assert "Summary" in out and "Full Analysis" in out


def test_analyze_json_with_nodes(demo_file, capsys):
    assert main(["analyze", "--format", "json", "--nodes", str(demo_file)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["taxonomy"]["acronyms"] == ["Tier 2 NNN"]
    assert len(payload["nodes"]) == 24
    assert payload["nodes"][5] == {"pointer": "/days/1", "type": "numeric", "level": 3,
                                   "byte_size": 1, "same_as": "/days/0"}


def test_analyze_empty_object(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text("{}")
    assert main(["analyze", str(path)]) == 0
    assert "Tier 1 TNF, Tier 1 NNF, Tier 1 BNF" in capsys.readouterr().out


def test_analyze_malformed_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"a": [1, 2}')
    assert main(["analyze", str(path)]) == 2
    assert "line 1 column 12" in capsys.readouterr().err


def test_analyze_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"[1,1,1,1]")))
    assert main(["analyze", "-"]) == 0
    assert "Tier 1 NRF" in capsys.readouterr().out


# -- classify --------------------------------------------------------------------------

def test_classify_three_files(tmp_path, demo_file, capsys):
    (tmp_path / "a.json").write_text("[1,1,1,1]")
    (tmp_path / "b.json").write_text('"ab"')
    assert main(["classify", str(demo_file), str(tmp_path / "a.json"), str(tmp_path / "b.json")]) == 0
    out = capsys.readouterr().out
    lines, _, dist = out.partition("\nCategory distribution\n")
    assert lines.splitlines() == [f"{demo_file}: Tier 2 NNN", f"{tmp_path / 'a.json'}: Tier 1 NRF",
                                  f"{tmp_path / 'b.json'}: Tier 1 TNF"]
    assert sum(int(line.split()[-1]) for line in dist.splitlines()) == 3


def test_classify_unreadable_path_is_partial(demo_file, tmp_path, capsys):
    assert main(["classify", str(tmp_path / "missing.json"), str(demo_file)]) == 1
    captured = capsys.readouterr()
    assert "missing.json" in captured.err
    assert "Tier 2 NNN" in captured.out


def test_classify_only_bad_input_exits_2(tmp_path, capsys):
    (tmp_path / "bad.json").write_text("{")
    assert main(["classify", str(tmp_path / "bad.json")]) == 2


# -- corpus ----------------------------------------------------------------------------

def test_corpus_histograms(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "demo.json").write_text(DEMO_TEXT)
    (corpus / "tiny.json").write_text('{"foo":"bar"}')
    (corpus / "notes.txt").write_text("ignored")
    out_dir = tmp_path / "out"
    assert main(["corpus", str(corpus), "--output-dir", str(out_dir)]) == 0
    files = sorted(p.name for p in out_dir.iterdir())
    assert files == ["categories.csv", "nesting.csv", "redundancy.csv", "size.csv"]
    size = (out_dir / "size.csv").read_text().splitlines()
    assert size == ["lower_bound,count", "0,1", "100,1"]
    redundancy = (out_dir / "redundancy.csv").read_text().splitlines()
    assert redundancy[1] == "0.0,1" and redundancy[-1] == "20.0,1"
    for name in files:
        rows = (out_dir / name).read_text().splitlines()[1:]
        assert sum(int(r.rsplit(",", 1)[1]) for r in rows) == 2


def test_empty_corpus_is_an_error(tmp_path, capsys):
    assert main(["corpus", str(tmp_path), "--output-dir", str(tmp_path / "o")]) == 2
    assert "empty" in capsys.readouterr().err


# -- bench -----------------------------------------------------------------------------

def test_bench_minimal_run(demo_file, capsys):
    assert main(["bench", str(demo_file), "--codecs", "cbor", "--format", "csv"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["document,codec,group,Uncompressed",
                   f"{demo_file},JSON,baseline,184",
                   f"{demo_file},CBOR,schema-less,118"]


def test_bench_lossy_plugin_exits_3(demo_file, tmp_path, capsys):
    registry = lossy_registry(tmp_path)
    code = main(["bench", str(demo_file), "--registry", str(registry), "--format", "markdown"])
    assert code == 3
    captured = capsys.readouterr()
    assert "lossy" in captured.err and "/tags" in captured.err
    assert "Round-trip failures" in captured.out


def test_bench_output_file(demo_file, tmp_path):
    target = tmp_path / "report.json"
    assert main(["bench", str(demo_file), "--format", "json", "-o", str(target)]) == 0
    payload = json.loads(target.read_text())
    assert payload["matrix"]["documents"] == [str(demo_file)]


def test_bench_unknown_codec(demo_file, capsys):
    assert main(["bench", str(demo_file), "--codecs", "protobuf"]) == 2
    assert "unknown builtin codec" in capsys.readouterr().err


def test_bench_csv_is_deterministic(demo_file, tmp_path):
    cfg = CliConfig(command="bench", inputs=(str(demo_file),), format="csv",
                    compressors=("identity", "gzip", "xz"))
    runs = []
    for _ in range(2):
        out = io.StringIO()
        assert cmd_bench(cfg, out=out, err=io.StringIO()) == 0
        runs.append(out.getvalue())
    assert runs[0] == runs[1]


def test_module_entry_point(demo_file):
    proc = subprocess.run([sys.executable, "-m", "jsonbench", "classify", str(demo_file)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "Tier 2 NNN" in proc.stdout


# -- registry --------------------------------------------------------------------------

def test_registry_entries(tmp_path):
    reg = registry_from_data({
        "codecs": ["msgpack", {"name": "ext", "encode": "cat", "decode": ["cat"],
                               "schema_driven": True, "timeout": 5}],
        "compressors": ["identity", {"name": "gzip", "level": 6},
                        {"name": "rev", "compress": "rev", "decompress": "rev", "label": "REV"}],
    })
    assert [c.name for c in reg.codecs] == ["MessagePack", "ext"]
    ext = reg.codecs[1]
    assert ext.encode_cmd == ("cat",) and ext.schema_driven and ext.timeout == 5
    assert [c.title for c in reg.compressors] == ["Uncompressed", "GZIP", "REV"]
    assert reg.compressors[1].compress_cmd[1] == "-6"


@pytest.mark.parametrize("data", [
    [],
    {"codecs": ["nope"]},
    {"codecs": [{"name": "x", "encode": "cat"}]},
    {"codecs": [{"name": "x", "encode": "cat", "decode": "cat", "schema_driven": "yes"}]},
    {"codecs": ["cbor", "CBOR"]},
    {"compressors": ["zip"]},
])
def test_bad_registries(data):
    with pytest.raises((RegistryError, ValueError)):
        registry_from_data(data)


def test_registry_file_errors(tmp_path):
    with pytest.raises(RegistryError, match="cannot read"):
        load_registry(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(RegistryError, match="not valid JSON"):
        load_registry(bad)
