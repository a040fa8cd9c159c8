import json
import subprocess
import sys
from urllib.parse import quote

import jsonschema
import pytest

from legcalc import cli


def output_validator(command):
    cli.schema_validator("output.schema.json")  # builds the registry
    ref = "legcalc/output.schema.json#/$defs/" + quote(command)
    return jsonschema.Draft202012Validator({"$ref": ref}, registry=cli._REGISTRY)


def call(*argv, expect=0):
    status, out = cli.run(list(argv))
    assert status == expect, out
    doc = json.loads(out)
    name = "error" if status == 2 else " ".join(argv[:2])
    output_validator(name).validate(doc)
    return doc


LINK3 = json.dumps([{"tb": -21, "r": 4}, {"tb": -21, "r": 2}])


class TestFarey:
    def test_mediant(self):
        assert call("farey", "mediant", "0", "inf")["mediant"] == "1"

    def test_intersect(self):
        assert call("farey", "intersect", "5/2", "1/3")["intersection_number"] == 13

    def test_contains(self):
        assert call("farey", "contains", "--", "-3", "-2", "-7/3")["contains"] is True
        call("farey", "contains", "--", "-3", "-2", "0", expect=1)

    def test_path(self):
        assert call("farey", "path", "--", "-5/3", "-1")["path"] == ["-5/3", "-3/2", "-1"]

    def test_bad_slope(self):
        doc = call("farey", "mediant", "x", "1", expect=2)
        assert doc["error"]["type"] == "InvalidParameters"


class TestRange:
    def test_peaks(self):
        doc = call("range", "peaks", "--knot", "torus:3:-7")
        assert {(p["tb"], p["r"]) for p in doc["peaks"]} == {(-21, -4), (-21, -2), (-21, 2), (-21, 4)}

    def test_check(self):
        call("range", "check", "--knot", "torus:2:3", "--tb", "0", "--r", "1")
        call("range", "check", "--knot", "torus:2:3", "--tb", "0", "--r", "0", expect=1)
        call("range", "check", "--knot", "torus:2:3", "--tb", "2", "--r", "1", expect=1)

    def test_lattice(self):
        assert len(call("range", "lattice", "--knot", "unknot", "--tb0", "-3")["points"]) == 6

    def test_range_file(self, tmp_path):
        path = tmp_path / "r.json"
        path.write_text(json.dumps({"peaks": [{"tb": -3, "r": 0}]}))
        call("range", "check", "--range-file", str(path), "--tb", "-4", "--r", "1")


class TestTorus:
    args = ["-n", "2", "-p", "3", "-q", "7", "--sign", "-"]

    def test_reps(self):
        assert call("torus", "reps", *self.args)["count"] == 4

    def test_realize_no(self):
        doc = call("torus", "realize", *self.args, "--link", LINK3, expect=1)
        assert doc["realizable"] is False

    def test_realize_yes(self):
        link = json.dumps([{"tb": -21, "r": 4}] * 2)
        doc = call("torus", "realize", *self.args, "--link", link)
        assert [w["r0"] for w in doc["witnesses"]] == [4]

    def test_isotopic_names_bad_link(self):
        good = json.dumps([{"tb": -21, "r": 4}] * 2)
        doc = call("torus", "isotopic", *self.args, "--link", good, "--other", LINK3, expect=2)
        assert doc["error"]["which"] == "second"

    def test_destab(self):
        doc = call("torus", "destab", *self.args, "--link", json.dumps([{"tb": -22, "r": 3}] * 2))
        assert sorted(r["r0"] for r in doc["reps"]) == [2, 4]

    def test_tb(self):
        doc = call("torus", "tb", "-n", "2", "-p", "2", "-q", "3", "--sign", "+",
                   "--link", json.dumps([{"tb": 1, "r": 0}] * 2))
        assert doc["total_tb"] == 14

    def test_perms(self):
        link = json.dumps([{"tb": -10, "r": 1}] * 3)
        base = ["-n", "3", "-p", "2", "-q", "5", "--sign", "-", "--link", link]
        assert call("torus", "perms", *base)["count"] == 3
        call("torus", "perms", *base, "--sigma", "1,2,0")
        call("torus", "perms", *base, "--sigma", "1,0,2", expect=1)
        doc = call("torus", "perms", *base, "--sigma", "1,1,0", expect=2)
        assert doc["error"]["type"] == "MalformedPermutation"

    def test_perms_with_labels(self):
        link = json.dumps([{"tb": -10, "r": 1, "cyclic": k} for k in (0, 2, 1, 3)])
        base = ["-n", "4", "-p", "2", "-q", "5", "--sign", "-", "--link", link]
        call("torus", "perms", *base, "--sigma", "2,3,1,0")
        call("torus", "perms", *base, "--sigma", "1,2,3,0", expect=1)

    def test_transverse(self):
        base = ["-n", "2", "-p", "2", "-q", "3", "--sign", "+"]
        assert call("torus", "transverse", *base)["sl_max_component"] == 1
        call("torus", "transverse", *base, "--sl", "1,1")
        call("torus", "transverse", *base, "--sl", "1,0", expect=1)

    def test_malformed_json_pointer(self):
        bad = json.dumps([{"tb": -21, "r": 4}, {"tb": "x", "r": 2}])
        doc = call("torus", "realize", *self.args, "--link", bad, expect=2)
        assert doc["error"]["path"] == "--link/1/tb"

    def test_invalid_json(self):
        doc = call("torus", "realize", *self.args, "--link", "[{", expect=2)
        assert doc["error"]["path"] == "--link"

    def test_mixed_orientation(self):
        link = json.dumps([{"tb": -21, "r": 4, "orientation": "+"}, {"tb": -21, "r": 4, "orientation": "-"}])
        call("torus", "realize", *self.args, "--link", link, expect=2)

    def test_size_mismatch(self):
        doc = call("torus", "realize", *self.args, "--link", json.dumps([{"tb": -21, "r": 4}]), expect=2)
        assert doc["error"]["type"] == "SizeMismatch"

    def test_invalid_spec(self):
        call("torus", "reps", "-n", "2", "-p", "2", "-q", "4", "--sign", "-", expect=2)


class TestCable:
    def test_regime(self):
        assert call("cable", "regime", "--knot", "fig8", "-n", "2", "-p", "2", "-q", "-7")["regime"] == "NonintegralLesser"

    def test_std(self):
        doc = call("cable", "std", "--knot", "fig8", "-n", "3", "-p", "2", "-q", "-5")
        assert doc["reps"][0]["components"] == [{"tb": -11, "r": 0}] * 3

    def test_reps(self):
        assert call("cable", "reps", "--knot", "fig8", "-n", "3", "-p", "1", "-q", "-4")["count"] == 3

    def test_assumption_violated(self):
        doc = call("cable", "reps", "--knot", "unknot", "-n", "3", "-p", "1", "-q", "-4", expect=2)
        assert doc["error"]["type"] == "AssumptionViolated"

    def test_knot_file(self, tmp_path):
        path = tmp_path / "k.json"
        path.write_text(json.dumps({
            "name": "thick unknot", "peaks": [{"tb": -1, "r": 0}],
            "uniformly_thick": True, "legendrian_simple": True, "cable_of": None,
        }))
        doc = call("cable", "reps", "--knot-file", str(path), "-n", "3", "-p", "1", "-q", "-3")
        assert doc["count"] == 6

    def test_maxtb(self):
        assert call("cable", "maxtb", "--knot", "fig8", "-n", "3", "-p", "1", "-q", "-4")["tb_max_component"] == -3

    def test_realize(self):
        link = json.dumps([{"tb": -3, "r": 0}] * 3)
        call("cable", "realize", "--knot", "fig8", "-n", "3", "-p", "1", "-q", "-4", "--link", link, expect=1)

    def test_perms_unknown(self):
        link = json.dumps([{"tb": -6, "r": 1}] * 3)
        doc = call("cable", "perms", "--knot", "torus:2:-3", "-n", "3", "-p", "1", "-q", "-6",
                   "--link", link, "--sigma", "1,2,0", expect=3)
        assert doc["decision"] == "unknown"

    def test_transverse(self):
        assert call("cable", "transverse", "--knot", "fig8", "-p", "2", "-q", "-5")["sl_max_component"] == -11


class TestFront:
    def test_cable(self, tmp_path):
        svg = tmp_path / "c.svg"
        doc = call("front", "cable", "--knot", "fig8", "-n", "3", "-p", "1", "-q", "-3", "--svg", str(svg), "--ascii")
        assert doc["components"] == [{"tb": -3, "r": 0}] * 3
        assert svg.read_text().startswith("<svg")
        assert "ascii" in doc

    def test_twisted(self):
        doc = call("front", "twisted", "--knot", "unknot", "-n", "3", "-t", "2")
        assert doc["components"] == [{"tb": -1, "r": 0}, {"tb": -5, "r": 0}, {"tb": -5, "r": 0}]

    def test_torus(self):
        doc = call("front", "torus", "-n", "3", "-p", "2", "-q", "3")
        assert doc["components"] == [{"tb": 1, "r": 0}] * 3

    def test_knot(self):
        doc = call("front", "knot", "--knot", "fig8", "--tb", "-5", "--r", "0")
        assert doc["components"] == [{"tb": -5, "r": 0}]

    def test_show(self):
        word = json.dumps({"events": [["L", 0], ["R", 0]]})
        assert call("front", "show", "--word", word)["components"] == [{"tb": -1, "r": 0}]
        bad = json.dumps({"events": [["L", 0]]})
        assert call("front", "show", "--word", bad, expect=2)["error"]["type"] == "FrontError"


def test_explain():
    doc = call("torus", "reps", "-n", "2", "-p", "1", "-q", "3", "--sign", "-", "--explain")
    assert isinstance(doc["explanation"], str) and doc["explanation"]


def test_deterministic():
    argv = ["front", "cable", "--knot", "fig8", "-n", "2", "-p", "2", "-q", "-7", "--ascii"]
    assert cli.run(argv) == cli.run(argv)


def test_usage_error_exit_code():
    status, _ = cli.run(["torus", "reps"])
    assert status == 2


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "legcalc.cli", "farey", "mediant", "1/2", "1/3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["mediant"] == "2/5"
