import csv
import io
import json
import math
import subprocess
import sys
from contextlib import redirect_stdout

import numpy as np
import pytest

import qwparrondo.verification as verification
import qwparrondo.walk as walk
from qwparrondo.cli import main
from qwparrondo.coins import coin
from qwparrondo.game import GameConfig, PlayerCoins, play_alternating
from qwparrondo.walk import GAME_INITIAL_STATE, dense_oracle_evolve, distribution

pi = math.pi


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestWalk:
    def test_biased_walk(self, capsys, tmp_path):
        out_csv, out_json = tmp_path / "d.csv", tmp_path / "s.json"
        code, _, _ = run(capsys, "walk", "--steps", "100", "--theta", "pi/4", "--xi", "pi/6",
                         "--zeta", "0", "--output", str(out_csv), "--summary", str(out_json))
        assert code == 0
        text = out_csv.read_text()
        assert text.startswith("x,p\n")
        p = np.array([float(r["p"]) for r in rows(text)])
        assert len(p) == 201 and abs(p.sum() - 1) < 1e-10
        summary = json.loads(out_json.read_text())
        assert set(summary) == {"t", "P_L", "P_R", "P_origin", "mean", "variance"}
        assert summary["P_L"] > summary["P_R"]

    def test_zero_steps(self, capsys):
        code, out, _ = run(capsys, "walk", "--steps", "0")
        assert code == 0
        data = rows(out)
        assert len(data) == 1 and data[0]["x"] == "0" and float(data[0]["p"]) == 1.0

    def test_unbiased_walk_summary(self, capsys):
        code, out, err = run(capsys, "walk", "--steps", "100", "--theta", "pi/4", "--xi", "0", "--zeta", "0")
        summary = json.loads(err)
        assert abs(summary["P_L"] - summary["P_R"]) <= 1e-10

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "walk", "--steps", "3", "--format", "json")
        data = json.loads(out)
        assert data["distribution"]["x"] == [-3, -2, -1, 0, 1, 2, 3]

    def test_unwritable_path(self, capsys, tmp_path):
        code, _, err = run(capsys, "walk", "--steps", "2", "--output", str(tmp_path / "no" / "such" / "f.csv"))
        assert code != 0 and "error" in err

    def test_bad_angle_literal(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["walk", "--xi", "5pi/1x"])
        assert exc.value.code != 0
        assert "position 5" in capsys.readouterr().err

    def test_byte_identical_output(self, capsys):
        argv = ("walk", "--steps", "50", "--xi", "pi/5", "--theta", "pi/3", "--format", "json")
        assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


class TestGame:
    def game(self, capsys, *argv):
        code, out, err = run(capsys, "game", *argv)
        assert code == 0, err
        return json.loads(out)

    def test_alternating_record(self, capsys):
        rec = self.game(capsys, "--strategy", "(A B)^50", "--xi", "pi/6", "--zeta", "pi/6", "--theta", "pi/4")
        assert set(rec) == {"P_L", "P_R", "P_origin", "winner", "margin", "steps", "strategy"}
        ref = play_alternating("A", PlayerCoins(pi / 6, pi / 6), GameConfig(steps=100))
        assert rec["steps"] == 100 and rec["strategy"] == "(A B)^50"
        assert rec["winner"] == ref.winner.value
        assert rec["margin"] == pytest.approx(ref.margin, abs=1e-15)

    def test_composite_guarantee(self, capsys):
        rec = self.game(capsys, "--strategy", "(AB)^100", "--xi", "pi/2", "--zeta", "pi/3", "--theta", "pi/4")
        assert rec["winner"] == "Joint"

    def test_solo_player_a_loses(self, capsys):
        rec = self.game(capsys, "--strategy", "(A)^100", "--xi", "pi/6", "--theta", "pi/4")
        assert rec["winner"] == "B"

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "game", "--strategy", "(A B", "--xi", "pi/6")
        assert code == 2
        assert "position 4" in err

    def test_out_of_range_parameter(self, capsys):
        code, _, err = run(capsys, "game", "--strategy", "(A)^3", "--xi", "pi")
        assert code == 1 and "xi_a" in err

    def test_config_file_and_override(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"strategy": "(AB)^100", "xi": "pi/2", "zeta": 0.3}))
        assert self.game(capsys, "--config", str(cfg))["winner"] == "Joint"
        assert self.game(capsys, "--config", str(cfg), "--xi", "0.1")["winner"] == "B"


@pytest.fixture(scope="module")
def table():
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(["sweep", "--order", "BA", "--steps", "100", "--theta", "pi/4", "--resolution", "25"]) == 0
    return rows(buf.getvalue())


class TestSweep:

    def test_covers_grid(self, table):
        assert len(table) == 625
        assert list(table[0]) == ["xi", "zeta", "margin", "winner"]

    def test_regions(self, table):
        for r in table:
            xi, zeta = float(r["xi"]), float(r["zeta"])
            if math.isclose(xi, zeta) or math.isclose(xi, pi / 2):
                assert r["winner"] == "Joint"
            elif zeta > xi:
                assert r["winner"] == "B"
            else:
                assert r["winner"] == "A"

    def test_threads_do_not_change_output(self, capsys, monkeypatch):
        argv = ("sweep", "--resolution", "6", "--steps", "20")
        serial = run(capsys, *argv)[1]
        monkeypatch.setenv("QWALK_THREADS", "3")
        assert run(capsys, *argv)[1] == serial


class TestFigure:
    def test_fig2(self, capsys, tmp_path):
        code, out, _ = run(capsys, "figure", "fig2", "--outdir", str(tmp_path))
        assert code == 0
        manifest = json.loads((tmp_path / "fig2_manifest.json").read_text())
        panels = {p["panel"]: p for p in manifest["panels"]}
        assert sorted(panels) == ["a", "b", "c", "d"]
        for name in "ac":
            assert panels[name]["summary"]["P_L"] > panels[name]["summary"]["P_R"]
        for name in "bd":
            assert panels[name]["summary"]["P_R"] > panels[name]["summary"]["P_L"]
        assert panels["c"]["xi"] == pytest.approx(5 * pi / 12)
        assert panels["d"]["theta"] == pytest.approx(pi / 3)

    def test_fig2_panels_a_b_mirror_small_t(self):
        for t in range(1, 11):
            a = distribution(dense_oracle_evolve(t, GAME_INITIAL_STATE, [[coin(pi / 6, pi / 6, 0)]] * t)).p
            b = distribution(dense_oracle_evolve(t, GAME_INITIAL_STATE, [[coin(0, pi / 6, pi / 6)]] * t)).p
            assert np.max(np.abs(a - b[::-1])) < 1e-12

    def test_fig2_panels_a_b_mirror(self, capsys, tmp_path):
        run(capsys, "figure", "fig2", "--outdir", str(tmp_path))
        a = np.array([float(r["p"]) for r in rows((tmp_path / "fig2a.csv").read_text())])
        b = np.array([float(r["p"]) for r in rows((tmp_path / "fig2b.csv").read_text())])
        assert np.max(np.abs(a - b[::-1])) < 1e-10

    def test_fig3(self, capsys, tmp_path):
        code, _, _ = run(capsys, "figure", "fig3", "--outdir", str(tmp_path))
        assert code == 0
        manifest = json.loads((tmp_path / "fig3_manifest.json").read_text())
        assert manifest["panels"][0]["order"] == "BA"
        assert len(rows((tmp_path / "fig3.csv").read_text())) == 25 * 25


class TestVerify:
    def test_reports_every_check(self, capsys):
        code, out, _ = run(capsys, "verify")
        lines = [l for l in out.splitlines() if l.startswith("[")]
        assert len(lines) == 10
        failed = [l for l in lines if l.startswith("[FAIL]")]
        assert code == (1 if failed else 0)

    def test_reversed_shift_is_caught(self, monkeypatch):
        def reversed_shift(amp):
            amp[1, :-1] = amp[1, 1:].copy()
            amp[1, -1] = 0
            amp[0, 1:] = amp[0, :-1].copy()
            amp[0, 0] = 0

        monkeypatch.setattr(walk, "_shift", reversed_shift)
        rng = np.random.default_rng(0)
        assert not verification.check_first_step_closed_form(rng).passed
        assert not verification.check_solo_futility(rng).passed
        assert not verification.check_oracle(rng).passed

    def test_tampered_composite_is_caught(self, monkeypatch):
        real = verification.composite_ba

        def tampered(xi, theta, zeta):
            m = np.array(real(xi, theta, zeta))
            m[1, 1] = np.conj(m[1, 1])
            return m

        monkeypatch.setattr(verification, "composite_ba", tampered)
        assert not verification.check_algebra(np.random.default_rng(0)).passed


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qwparrondo.cli", "game", "--strategy", "(AB)^4", "--xi", "pi/2"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["winner"] == "Joint"
