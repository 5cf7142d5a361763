"""Command-line surface: parsing, output formats, exit codes, census records."""

import io
import json

import pytest

from normal7.cli import (
    EXIT_INCONCLUSIVE,
    EXIT_INPUT,
    EXIT_OK,
    InputError,
    census_line,
    main,
    parse_graph_text,
)

K4_G6 = "C~"
K4_EDGE_LIST = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
PETERSEN_G6 = "IheA@GUAo"
DOUBLE_GADGET_G6 = "Ir]?GGB?w"


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


class TestParsing:
    def test_single_line_without_spaces_is_graph6(self):
        assert parse_graph_text(K4_G6).num_vertices == 4

    def test_header_line_is_edge_list(self):
        g = parse_graph_text(K4_EDGE_LIST)
        assert g.num_vertices == 4 and g.num_edges == 6

    def test_bad_inputs(self):
        for text in ("", "not graph6 at all!!", "3 1\n0 9\n"):
            with pytest.raises(InputError):
                parse_graph_text(text)


class TestColor:
    def test_json_document(self, capsys, tmp_path):
        path = tmp_path / "g.g6"
        path.write_text(K4_G6 + "\n")
        rc, out, _ = run(capsys, ["color", str(path)])
        assert rc == EXIT_OK
        doc = json.loads(out)
        assert doc["n"] == 4 and doc["m"] == 6
        assert doc["verified"] is True
        assert set(doc["colors"]) == {str(e) for e in range(6)}
        assert all(1 <= c <= 7 for c in doc["colors"].values())
        assert doc["certificate"], "replay certificate must be present"
        step = doc["certificate"][0]
        assert set(step) == {"case", "fingerprint", "permutation"}

    def test_edge_list_on_stdin(self, capsys, monkeypatch):
        rc, out, _ = run(capsys, ["color"], stdin=K4_EDGE_LIST, monkeypatch=monkeypatch)
        assert rc == EXIT_OK
        assert json.loads(out)["verified"] is True

    def test_g6_format_echoes_graph(self, capsys, monkeypatch):
        rc, out, _ = run(
            capsys, ["color", "--format", "g6"], stdin=K4_EDGE_LIST,
            monkeypatch=monkeypatch,
        )
        assert rc == EXIT_OK
        assert out.strip() == K4_G6

    def test_dot_output(self, capsys, monkeypatch):
        rc, out, _ = run(
            capsys, ["color", "--dot"], stdin=K4_G6, monkeypatch=monkeypatch
        )
        assert rc == EXIT_OK
        assert out.startswith("graph G {")

    def test_non_cubic_is_input_error(self, capsys, monkeypatch):
        rc, _, err = run(
            capsys, ["color"], stdin="3 3\n0 1\n1 2\n2 0\n", monkeypatch=monkeypatch
        )
        assert rc == EXIT_INPUT
        assert "vertex 0" in err and "degree 2" in err

    def test_bad_graph6_is_input_error(self, capsys, monkeypatch):
        rc, _, err = run(capsys, ["color"], stdin="!!!", monkeypatch=monkeypatch)
        assert rc == EXIT_INPUT
        assert "error" in err


class TestExact:
    def test_k4(self, capsys, monkeypatch):
        rc, out, _ = run(capsys, ["exact"], stdin=K4_G6, monkeypatch=monkeypatch)
        assert rc == EXIT_OK
        doc = json.loads(out)
        assert doc["chi_n"] == 3
        assert doc["witness"]

    def test_exceeds_max_k(self, capsys, monkeypatch):
        rc, out, _ = run(
            capsys, ["exact", "--max-k", "2"], stdin=K4_G6, monkeypatch=monkeypatch
        )
        assert rc == EXIT_OK
        doc = json.loads(out)
        assert doc["chi_n"] is None and doc["exceeds"] == 2

    def test_budget_is_inconclusive(self, capsys, monkeypatch):
        rc, out, _ = run(
            capsys, ["exact", "--budget", "2"], stdin=PETERSEN_G6,
            monkeypatch=monkeypatch,
        )
        assert rc == EXIT_INCONCLUSIVE
        assert json.loads(out)["inconclusive"] is True


class TestCensus:
    def test_records_and_summary(self, capsys, tmp_path):
        path = tmp_path / "list.g6"
        path.write_text(f"{K4_G6}\nbroken line\n{PETERSEN_G6}\n")
        rc, out, _ = run(capsys, ["census", str(path), "--exact-up-to", "4"])
        assert rc == EXIT_OK
        lines = [json.loads(ln) for ln in out.splitlines()]
        assert len(lines) == 4
        k4_rec, bad_rec, pet_rec, summary = lines
        assert k4_rec["graph6"] == K4_G6
        assert k4_rec["verified"] is True
        assert k4_rec["bridges"] == 0
        assert k4_rec["exact_chi"] == 3 and k4_rec["solver_nodes"] > 0
        assert k4_rec["elapsed_ms"] >= 0
        assert "error" in bad_rec
        assert pet_rec["exact_chi"] is None  # above the exact-up-to bound
        assert summary["summary"] is True
        assert summary["graphs"] == 3 and summary["failures"] == 1
        assert summary["exact_chi_histogram"] == {"3": 1}

    def test_parallel_jobs_match_serial_order(self, capsys, tmp_path):
        path = tmp_path / "list.g6"
        path.write_text(f"{K4_G6}\n{PETERSEN_G6}\n{DOUBLE_GADGET_G6}\n")
        rc1, out1, _ = run(capsys, ["census", str(path)])
        rc2, out2, _ = run(capsys, ["census", str(path), "--jobs", "2"])
        assert rc1 == rc2 == EXIT_OK

        def strip_timing(text):
            rows = []
            for ln in text.splitlines():
                doc = json.loads(ln)
                doc.pop("elapsed_ms", None)
                rows.append(doc)
            return rows

        assert strip_timing(out1) == strip_timing(out2)

    def test_census_line_isolates_failures(self):
        rec = census_line("garbage!!", exact_up_to=0, budget=None)
        assert "error" in rec and rec["graph6"] == "garbage!!"


class TestCertify:
    def test_single_claim(self, capsys):
        rc, out, _ = run(capsys, ["certify", "fig6-flow-poor"])
        assert rc == EXIT_OK
        doc = json.loads(out)
        assert doc["claim"] == "fig6-flow-poor"
        assert doc["verdict"] == "holds"

    def test_unknown_claim(self, capsys):
        rc, _, err = run(capsys, ["certify", "nonsense"])
        assert rc == EXIT_INPUT
        assert "unknown claims" in err

    def test_no_claims(self, capsys):
        rc, _, err = run(capsys, ["certify"])
        assert rc == EXIT_INPUT
        assert "--all" in err
