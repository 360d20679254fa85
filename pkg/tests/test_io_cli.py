import csv
import io
import json

import pytest

from meander.cli import main
from meander.compositions import seaweed
from meander.io import (decode_graph, decode_trace, dumps, encode_graph, encode_trace,
                        graph_document, read_records_csv, write_records_csv)
from meander.frobenius import EnumerationRecord, enumerate_records
from meander.reduction import reduce_trace
from meander.render import arc_levels, render_ascii, render_svg


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_index_commands(capsys):
    code, out, _ = run(capsys, "index", "--type", "D", "--n", "5", "--a", "5", "--b", "5", "--crossing")
    assert code == 0 and json.loads(out)["index"] == 3
    _, out, _ = run(capsys, "index", "--type", "A", "--n", "9", "--a", "2,4,3", "--b", "5,4")
    assert json.loads(out)["index"] == 3
    _, out, _ = run(capsys, "index", "--type", "A", "--n", "9", "--a", "2,4,3", "--b", "5,4", "--sl")
    assert json.loads(out)["index"] == 2
    _, out, _ = run(capsys, "index", "--type", "D", "--n", "5", "--s", "", "--t", "1,2,3,4,5")
    doc = json.loads(out)
    assert (doc["index"], doc["epsilon"], doc["schema_version"]) == (1, 1, "1")


@pytest.mark.parametrize("argv", [
    ["index", "--n", "5", "--a", "2,2", "--b", "3", "--crossing"],
    ["index", "--n", "5"],
    ["index", "--n", "4", "--s", "1,7", "--t", ""],
    ["index", "--n", "4", "--a", "x", "--b", ""],
    ["index", "--type", "C", "--n", "3", "--a", "2", "--b", "", "--sl"],
    ["index", "--n", "4", "--s", "1", "--t", "2", "--crossing"],
])
def test_invalid_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert len(err.strip().splitlines()) == 1 and err.startswith("error:")


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    err = capsys.readouterr().err
    assert e.value.code == 2 and len(err.strip().splitlines()) == 1


def test_reduce_commands(capsys):
    code, out, _ = run(capsys, "reduce", "--n", "5", "--a", "2,3", "--b", "1,4", "--crossing", "--trace")
    d = json.loads(out)
    assert code == 0 and len(d["steps"]) == 6 and d["total_index"] == 1
    assert d["chain"][-1] == "0"
    _, out, _ = run(capsys, "reduce", "--n", "5", "--a", "2,3", "--b", "1,4", "--crossing")
    lines = out.strip().splitlines()
    assert lines[0] == "q_5(2,3|1,4)_c" and len(lines) == 8
    assert lines[3].startswith("⟿ * q_3(3|2,1)")
    _, out, _ = run(capsys, "reduce", "--n", "7", "--a", "7", "--b", "7", "--crossing", "--trace")
    d = json.loads(out)
    assert (d["terminal"], d["total_index"], d["steps"]) == ("q_ec", 5, [])
    _, out, _ = run(capsys, "reduce", "--n", "4", "--a", "2,2", "--b", "", "--trace")
    assert json.loads(out)["terminal"] == "parabolic"


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--exhaustive")
    assert code == 0 and "pairs = 16" in out and "mismatches: 0" in out and "seed = " in out
    code, out, _ = run(capsys, "verify", "--n", "3", "--samples", "10", "--oracles", "graph,matrix", "--seed", "4")
    assert code == 0 and "pairs = 10" in out
    code, _, _ = run(capsys, "verify", "--n", "3", "--oracles", "graph,magic")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--n", "20", "--oracles", "graph")
    assert code == 2


def test_verify_reports_mismatch(capsys, monkeypatch):
    import meander.cli as cli
    monkeypatch.setattr(cli, "tyj_index", lambda n, S, T, t: 99)
    code, out, _ = run(capsys, "verify", "--n", "2", "--oracles", "graph,tyj")
    assert code == 1 and "MISMATCH" in out


def test_enumerate_command(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--n", "1", "--out", "-")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == EnumerationRecord.columns() and len(rows) == 5
    path = tmp_path / "e.csv"
    code, _, err = run(capsys, "enumerate", "--n", "3", "--out", str(path), "--stats")
    assert code == 0 and "distinct" in err
    with open(path) as fh:
        assert len(read_records_csv(fh)) == 64
    code, _, err = run(capsys, "enumerate", "--n", "2", "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 2 and "no/x.csv" in err
    _, out, _ = run(capsys, "enumerate", "--n", "4", "--frobenius-only")
    assert all(r.frobenius for r in read_records_csv(io.StringIO(out)))


def test_graph_ascii_borel(capsys):
    code, out, _ = run(capsys, "graph", "--type", "D", "--n", "5", "--a", "1,1,1,1,1", "--b", "",
                       "--format", "ascii")
    lines = out.splitlines()[1:]
    label = next(i for i, l in enumerate(lines) if l.strip().startswith("1 "))
    assert label == 5 and len(lines) == 6  # five arc rows above, none below
    assert all("+" in l for l in lines[:5])


def test_graph_json_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "graph", "--n", "6", "--a", "2,4", "--b", "6", "--crossing", "--format", "json")
    doc = decode_graph(json.loads(out))
    assert doc == graph_document(seaweed("D", 6, (2, 4), (6,), True))
    path = tmp_path / "g.svg"
    assert run(capsys, "graph", "--n", "3", "--a", "3", "--b", "3", "--crossing", "--format", "svg",
               "--out", str(path))[0] == 0
    assert path.read_text().startswith("<svg")


def test_svg_features():
    svg = render_svg(graph_document(seaweed("D", 4, (4,), (4,), True)))
    assert svg.count('class="arc below"') == 4 and svg.count('class="arc above"') == 4
    assert 'stroke-dasharray' in svg and svg.count("<circle") == 8


def test_render_is_pure():
    doc = graph_document(seaweed("D", 5, (2, 2, 1), (3, 2)))
    before = encode_graph(doc)
    assert render_ascii(doc) == render_ascii(doc)
    render_svg(doc)
    assert encode_graph(doc) == before


def test_arc_levels():
    lv = arc_levels({(1, 10), (2, 9), (3, 4), (5, 6)})
    assert lv == {(3, 4): 1, (5, 6): 1, (2, 9): 2, (1, 10): 3}


def test_trace_round_trip():
    tr = reduce_trace(seaweed("D", 5, (2, 3), (1, 4), True))
    assert decode_trace(json.loads(dumps(encode_trace(tr)))) == tr


def test_csv_round_trip():
    recs = list(enumerate_records(3))
    buf = io.StringIO()
    assert write_records_csv(recs, buf) == 64
    buf.seek(0)
    assert read_records_csv(buf) == recs


def test_schema_version_checked():
    d = encode_graph(graph_document(seaweed("C", 2, (1,), ())))
    d["schema_version"] = "2"
    from meander.compositions import SpecError
    with pytest.raises(SpecError):
        decode_graph(d)
