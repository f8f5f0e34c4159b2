import csv
import io
import json
import math
import shutil
import subprocess
import xml.etree.ElementTree as ET

import pytest

from hullvol.bodyspec import parse_body
from hullvol.cli import main
from hullvol.errors import ParseError


def write(tmp_path, doc, name="body.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestBodyDocuments:
    def test_rational_strings(self):
        spec = parse_body({"kind": "polygon", "vertices": [["0", "0"], ["1/2", "0"], ["0", "0.25"]]})
        assert spec.body.area == pytest.approx(1 / 16)
        assert spec.body.exact

    @pytest.mark.parametrize(
        "doc",
        [
            {"kind": "blob"},
            {"kind": "polygon"},
            {"kind": "polygon", "vertices": [["0", "0"], ["1", "0"], ["2", "0"]]},
            {"kind": "polygon", "vertices": [["0", "0"], ["2", "0"], ["1", "1/3"], ["1", "2"]]},
            {"kind": "ball", "dim": 3, "radius": -1},
            {"kind": "regular_gon", "m": 2},
        ],
    )
    def test_rejects(self, doc):
        with pytest.raises(ParseError):
            parse_body(doc)


class TestCompute:
    def test_pentagon(self, tmp_path, capsys):
        code, out, _ = run(capsys, "compute", "--body", write(tmp_path, {"kind": "regular_gon", "m": 5}), "--functional", "ctr")
        assert code == 0
        value = float(out.split("=")[1].split()[0])
        assert abs(value - (10 + math.sqrt(5)) / 5) <= 1e-6
        assert "maximizer:" in out and "exact: false" in out and "approximation" in out

    def test_triangle_c0(self, tmp_path, capsys):
        body = write(tmp_path, {"kind": "polygon", "vertices": [["0", "0"], ["3", "1"], ["1", "2"]]})
        code, out, _ = run(capsys, "compute", "--body", body, "--functional", "c0")
        assert code == 0 and "4 (exact: 4/1)" in out

    def test_ball_cylinder(self, tmp_path, capsys):
        code, out, _ = run(capsys, "compute", "--body", write(tmp_path, {"kind": "ball", "dim": 3}), "--functional", "cylinder")
        assert code == 0
        assert float(out.split("=")[1].split()[0]) == pytest.approx(1.5, abs=1e-9)

    def test_chyp_on_polygon_routes_to_c1(self, tmp_path, capsys):
        code, out, _ = run(capsys, "compute", "--body", write(tmp_path, {"kind": "regular_gon", "m": 4}), "--functional", "chyp")
        assert code == 0 and "line-reflection" in out
        assert float(out.split("=")[1].split()[0]) == pytest.approx(3, abs=1e-6)

    def test_c1_on_ball_is_dimension_mismatch(self, tmp_path, capsys):
        code, _, err = run(capsys, "compute", "--body", write(tmp_path, {"kind": "ball", "dim": 3}), "--functional", "c1")
        assert code == 1 and "chyp" in err

    def test_json_report(self, tmp_path, capsys):
        body = write(tmp_path, {"kind": "polygon", "vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]})
        code, out, _ = run(capsys, "compute", "--body", body, "--functional", "ctr", "--format", "json", "--seed", "3")
        rep = json.loads(out)
        assert code == 0
        assert set(rep) >= {"command", "config_hash", "results", "wall_time", "seed"}
        assert rep["seed"] == 3 and rep["results"]["exact"] is True
        assert rep["results"]["exact_value"] == "3"

    def test_deterministic(self, tmp_path, capsys):
        body = write(tmp_path, {"kind": "polytope", "vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]})
        reps = [json.loads(run(capsys, "compute", "--body", body, "--functional", "ctr", "--format", "json")[1]) for _ in range(2)]
        assert reps[0]["config_hash"] == reps[1]["config_hash"]
        assert abs(reps[0]["results"]["value"] - reps[1]["results"]["value"]) <= 1e-12

    def test_exact_outputs_bit_identical(self, tmp_path, capsys):
        body = write(tmp_path, {"kind": "regular_gon", "m": 7})
        a = json.loads(run(capsys, "compute", "--body", body, "--functional", "c0", "--format", "json")[1])
        b = json.loads(run(capsys, "compute", "--body", body, "--functional", "c0", "--format", "json")[1])
        assert a["results"] == b["results"]


class TestExitCodes:
    def test_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run(capsys, "compute", "--body", str(bad))[0] == 2

    def test_missing_file(self, tmp_path, capsys):
        assert run(capsys, "compute", "--body", str(tmp_path / "nope.json"))[0] == 2

    def test_usage(self, capsys):
        assert run(capsys, "compute", "--bogus")[0] == 1
        assert run(capsys, "frobnicate")[0] == 1
        assert run(capsys, "search")[0] == 1
        assert run(capsys, "search", "--m", "2")[0] == 1

    def test_unknown_functional(self, tmp_path, capsys):
        body = write(tmp_path, {"kind": "ball", "dim": 3})
        assert run(capsys, "compute", "--body", body, "--functional", "c7")[0] == 1

    def test_verify_failure(self, capsys, monkeypatch):
        import hullvol.cli as cli
        from hullvol.verify import Check

        monkeypatch.setattr(cli, "run_suite", lambda name, seed=0: [Check("forced", 1.0, "2", False)])
        code, out, _ = run(capsys, "verify", "thm5")
        assert code == 3 and "[FAIL]" in out


class TestProfile:
    def test_disk_csv(self, tmp_path, capsys):
        body = write(tmp_path, {"kind": "disk_gon", "m": 4096})
        out_csv = tmp_path / "disk.csv"
        code, _, _ = run(capsys, "profile", "--body", body, "--samples", "256", "--out", str(out_csv))
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out_csv.read_text())))
        assert len(rows) == 256
        assert all(abs(float(r["f"]) - 4) <= 1e-4 for r in rows)
        assert (tmp_path / "disk.png").stat().st_size > 1000

    def test_square_values(self, tmp_path, capsys):
        body = write(tmp_path, {"kind": "polygon", "vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]})
        code, out, _ = run(capsys, "profile", "--body", body, "--samples", "8")
        lines = out.strip().splitlines()
        assert code == 0 and lines[0] == "theta,f"
        f = {round(float(t), 12): float(v) for t, v in (ln.split(",") for ln in lines[1:])}
        assert f[0.0] == pytest.approx(1.0, abs=1e-12)
        assert f[round(math.pi / 4, 12)] == pytest.approx(2.0, abs=1e-12)

    def test_svg(self, tmp_path, capsys):
        body = write(tmp_path, {"kind": "regular_gon", "m": 7})
        code, out, _ = run(capsys, "profile", "--body", body, "--format", "svg")
        root = ET.fromstring(out)
        ns = "{http://www.w3.org/2000/svg}"
        assert code == 0 and root.tag == f"{ns}svg"
        assert root.get("viewBox") == "0 0 800 600"
        assert len(root.findall(f".//{ns}polyline")) == 1

    def test_profile_needs_planar_body(self, tmp_path, capsys):
        assert run(capsys, "profile", "--body", write(tmp_path, {"kind": "ball", "dim": 3}))[0] == 1


class TestSearchCommand:
    def test_writes_body_and_figure(self, tmp_path, capsys):
        out_body, fig = tmp_path / "best.json", tmp_path / "best.png"
        code, out, _ = run(capsys, "search", "--m", "4", "--functional", "c0", "--restarts", "2", "--out", str(out_body), "--figure", str(fig))
        assert code == 0
        spec = parse_body(json.loads(out_body.read_text()))
        assert len(spec.body) == 4
        assert fig.stat().st_size > 1000
        assert "best c0 over 4-gons" in out

    def test_banner_for_open_cases(self, capsys):
        code, out, _ = run(capsys, "search", "--m", "6", "--restarts", "1")
        assert code == 0 and "no acceptance claim (open problem)" in out

    def test_seed_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("HULLVOL_SEED", "17")
        rep = json.loads(run(capsys, "search", "--m", "3", "--restarts", "1", "--format", "json")[1])
        assert rep["seed"] == 17
        rep = json.loads(run(capsys, "search", "--m", "3", "--restarts", "1", "--format", "json", "--seed", "2")[1])
        assert rep["seed"] == 2


class TestVerifyCommand:
    def test_polygon_minima_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "thm5")
        assert code == 0
        assert out.count("[PASS]") == 8 and "[FAIL]" not in out

    def test_identities(self, capsys):
        code, out, _ = run(capsys, "verify", "identities")
        assert code == 0 and "8A identity (exact)" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "thm3", "--format", "json")
        rep = json.loads(out)
        assert code == 0 and all(c["passed"] for c in rep["results"]["thm3"])


@pytest.mark.skipif(shutil.which("hullvol") is None, reason="console script not installed")
def test_console_script(tmp_path):
    body = write(tmp_path, {"kind": "polygon", "vertices": [["0", "0"], ["1", "0"], ["0", "1"]]})
    proc = subprocess.run(["hullvol", "compute", "--body", body, "--functional", "ctr"], capture_output=True, text=True)
    assert proc.returncode == 0 and "3 (exact: 3/1)" in proc.stdout
