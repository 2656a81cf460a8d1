"""End-to-end tests of the command-line surface.

Canonical outputs are frozen as exact byte strings where the payload is
small; everything else is checked structurally plus a byte-for-byte
determinism assertion between repeated runs.
"""

import io
import json
import shutil
import subprocess
from fractions import Fraction

import pytest

from irrtypes import (
    ConnectionGerm,
    IrregularType,
    IrregularTypeAtInfinity,
    LaurentTail,
    RootOrderVector,
    RootSystem,
    TruncatedSeries,
    build_root_system,
    gauss,
)
from irrtypes.cli import run
from irrtypes.serialization import (
    atinf_to_json,
    germ_to_json,
    irregular_type_to_json,
    order_vector_to_json,
    pair_to_json,
    scalar_to_json,
)

A1 = build_root_system("A", 1)
A1SPAN = RootSystem(1, [(Fraction(2),), (Fraction(-2),)], family="A1r1")


def _invoke(capsys, monkeypatch, argv, document=None):
    if document is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(document)))
    code = run(argv)
    return code, capsys.readouterr().out


class TestGoldenOutputs:
    def test_strata_enumerate_rank_one(self, capsys, monkeypatch):
        code, out = _invoke(
            capsys, monkeypatch, ["strata", "enumerate", "--family", "A", "--rank", "1", "-p", "3"]
        )
        assert code == 0
        assert out == (
            '[{"d":[3,3],"levels":[[],[],[]]},'
            '{"d":[2,2],"levels":[[],[],[0,1]]},'
            '{"d":[1,1],"levels":[[],[0,1],[0,1]]},'
            '{"d":[0,0],"levels":[[0,1],[0,1],[0,1]]}]\n'
        )

    def test_classify_zero_type_dimension_zero(self, capsys, monkeypatch):
        doc = irregular_type_to_json(IrregularType.zero(A1SPAN, 2))
        code, out = _invoke(capsys, monkeypatch, ["classify"], doc)
        assert code == 0
        assert out == '{"d":[0,0],"dimension":0,"levels":[[0,1],[0,1]]}\n'

    def test_dm_check_elliptic_unmarked_orders(self, capsys, monkeypatch):
        doc = [order_vector_to_json(RootOrderVector(A1, 1, [0, 0]))]
        code, out = _invoke(capsys, monkeypatch, ["dm-check", "--g", "1", "--m", "1"], doc)
        assert code == 0
        assert out == '{"deligne_mumford":true,"relevant":true}\n'

    def test_version(self, capsys, monkeypatch):
        code, out = _invoke(capsys, monkeypatch, ["version"])
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert isinstance(payload["version"], str)

    def test_stabilizer_finite_and_infinite(self, capsys, monkeypatch):
        finite = atinf_to_json(IrregularTypeAtInfinity(A1SPAN, 4, [[0], [1], [0], [1]]))
        code, out = _invoke(capsys, monkeypatch, ["stabilizer", "--group", "g1"], finite)
        assert code == 0 and out == '{"order":2}\n'
        tame = atinf_to_json(IrregularTypeAtInfinity(A1SPAN, 1, [[1]]))
        code, out = _invoke(capsys, monkeypatch, ["stabilizer", "--group", "g1"], tame)
        assert code == 0 and out == '{"order":"infinite"}\n'

    def test_orbit_equal_counterexample(self, capsys, monkeypatch):
        doc = {
            "first": [[scalar_to_json(gauss(1))], [scalar_to_json(gauss(1))]],
            "second": [[scalar_to_json(gauss(1))], [scalar_to_json(gauss(-1))]],
            "weights": [2, 4],
        }
        code, out = _invoke(capsys, monkeypatch, ["orbit-equal"], doc)
        assert code == 0 and out == '{"equivalent":false}\n'

    def test_sl2z_inversion(self, capsys, monkeypatch):
        doc = {
            "gamma": [0, -1, 1, 0],
            "tau": scalar_to_json(gauss(0, 1)),
            "type": irregular_type_to_json(IrregularType(A1SPAN, 1, [[1]])),
        }
        code, out = _invoke(capsys, monkeypatch, ["sl2z-act"], doc)
        assert code == 0
        payload = json.loads(out)
        assert payload["tau"] == {"im": "1", "re": "0"}
        assert payload["type"]["coefficients"][0][0] == {"im": "-1", "re": "0"}


class TestRoutingAndModes:
    def test_levi_list_flags(self, capsys, monkeypatch):
        code, out = _invoke(capsys, monkeypatch, ["levi", "list", "--family", "A", "--rank", "2"])
        assert code == 0
        assert len(json.loads(out)) == 5

    def test_exchange(self, capsys, monkeypatch):
        doc = {
            "regular": [scalar_to_json(gauss(1)), scalar_to_json(gauss(-3)), scalar_to_json(gauss(2))],
            "configuration": [scalar_to_json(gauss(2)), scalar_to_json(gauss(-1))],
        }
        code, out = _invoke(capsys, monkeypatch, ["exchange"], doc)
        assert code == 0
        payload = json.loads(out)
        assert payload["configuration"] == [{"im": "0", "re": "-4"}, {"im": "0", "re": "1"}]
        assert payload["regular"][0] == {"im": "0", "re": "-1/3"}

    def test_connection_extract(self, capsys, monkeypatch):
        def cell(tail):
            return (LaurentTail(3, tail), TruncatedSeries(1, [0]))

        germ = ConnectionGerm(
            2,
            2,
            [
                [cell([4, 0, 0]), cell([0, 0, 0])],
                [cell([0, 0, 0]), cell([-6, 0, 0])],
            ],
        )
        code, out = _invoke(capsys, monkeypatch, ["connection", "extract"], germ_to_json(germ))
        assert code == 0
        payload = json.loads(out)
        assert payload["p"] == 2
        assert payload["coefficients"][1] == [{"im": "0", "re": "-2"}, {"im": "0", "re": "3"}]
        assert payload["coefficients"][0] == [{"im": "0", "re": "0"}, {"im": "0", "re": "0"}]

    def test_strata_witness_round_trip(self, capsys, monkeypatch):
        vec = order_vector_to_json(RootOrderVector(A1, 2, [2, 2]))
        code, out = _invoke(capsys, monkeypatch, ["strata", "witness"], vec)
        assert code == 0
        witness = json.loads(out)
        code, out = _invoke(capsys, monkeypatch, ["classify"], witness)
        assert code == 0
        assert json.loads(out)["d"] == [2, 2]

    def test_input_file(self, capsys, monkeypatch, tmp_path):
        doc = irregular_type_to_json(IrregularType.zero(A1SPAN, 1))
        path = tmp_path / "type.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        code, out = _invoke(capsys, monkeypatch, ["classify", "--input", str(path)])
        assert code == 0
        assert json.loads(out)["d"] == [0, 0]

    def test_pretty_mode_same_object(self, capsys, monkeypatch):
        doc = irregular_type_to_json(IrregularType.zero(A1SPAN, 1))
        code, pretty = _invoke(capsys, monkeypatch, ["classify", "--output", "pretty"], doc)
        assert code == 0
        assert "\n  " in pretty
        code, canonical = _invoke(capsys, monkeypatch, ["classify"], doc)
        assert json.loads(pretty) == json.loads(canonical)

    def test_canonical_is_deterministic(self, capsys, monkeypatch):
        runs = []
        for _ in range(2):
            code, out = _invoke(
                capsys,
                monkeypatch,
                ["strata", "enumerate", "--family", "B", "--rank", "2", "-p", "2"],
            )
            assert code == 0
            runs.append(out)
        assert runs[0] == runs[1]


class TestErrorChannel:
    def test_bad_json_exits_one(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("not json"))
        code = run(["classify"])
        out = capsys.readouterr().out
        assert code == 1
        payload = json.loads(out)
        assert payload["error"] == "MalformedInput"
        assert "message" in payload

    def test_unknown_key_exits_one(self, capsys, monkeypatch):
        doc = irregular_type_to_json(IrregularType.zero(A1SPAN, 1))
        doc["stray"] = 1
        code, out = _invoke(capsys, monkeypatch, ["classify"], doc)
        assert code == 1
        assert json.loads(out)["error"] == "MalformedInput"

    def test_missing_subcommand_exits_one(self, capsys, monkeypatch):
        code, out = _invoke(capsys, monkeypatch, [])
        assert code == 1
        assert json.loads(out)["error"] == "MalformedInput"

    def test_precondition_exits_two(self, capsys, monkeypatch):
        A2 = build_root_system("A", 2)
        orders = [1 if root[2] == 0 else 0 for root in A2.roots]
        doc = order_vector_to_json(RootOrderVector(A2, 1, orders))
        code, out = _invoke(capsys, monkeypatch, ["strata", "dimension"], doc)
        assert code == 2
        assert json.loads(out)["error"] == "NotRelevant"

    def test_zero_pair_exits_two(self, capsys, monkeypatch):
        doc = pair_to_json(
            (IrregularType.zero(A1SPAN, 1), IrregularTypeAtInfinity.zero(A1SPAN, 1))
        )
        code, out = _invoke(capsys, monkeypatch, ["stabilizer", "--group", "g2"], doc)
        assert code == 2
        assert json.loads(out)["error"] == "ZeroPair"

    def test_resource_guard_exits_three(self, capsys, monkeypatch):
        code, out = _invoke(
            capsys, monkeypatch, ["strata", "enumerate", "--family", "A", "--rank", "8", "-p", "1"]
        )
        assert code == 3
        assert json.loads(out)["error"] == "TooLarge"

    def test_unreadable_file_exits_one(self, capsys, monkeypatch, tmp_path):
        code, out = _invoke(capsys, monkeypatch, ["classify", "--input", str(tmp_path / "no.json")])
        assert code == 1
        assert json.loads(out)["error"] == "MalformedInput"


class TestConsoleScript:
    def test_installed_entry_point(self):
        exe = shutil.which("irrtypes")
        if exe is None:
            pytest.skip("console script not on PATH")
        result = subprocess.run(
            [exe, "version"], capture_output=True, text=True, timeout=60
        )
        assert result.returncode == 0
        assert json.loads(result.stdout)["schema"] == 1
