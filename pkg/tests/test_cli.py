import json

import pytest

from swissfair.cli import main

STATE = {
    "name": "club",
    "total_rounds": 5,
    "players": [
        {"id": "ana", "rating": 2310},
        {"id": "bo", "rating": 2290},
        {"id": "cy", "rating": 2180},
        {"id": "dee", "rating": 2405},
        {"id": "eli", "rating": 2120},
        {"id": "fay", "rating": 2055},
        {"id": "gus", "rating": 1990},
        {"id": "hal", "rating": 2230},
    ],
}


@pytest.fixture
def state_file(tmp_path):
    path = tmp_path / "state.json"
    path.write_text(json.dumps(STATE))
    return path


@pytest.fixture
def experiment_file(tmp_path):
    path = tmp_path / "exp.json"
    path.write_text(
        json.dumps(
            {
                "seed": 12,
                "rounds": 9,
                "replications": 6,
                "field": {"size": 20, "kind": "normal"},
                "model": {"delta": 25},
            }
        )
    )
    return path


class TestPair:
    def test_round_one_prints_four_boards(self, state_file, tmp_path, capsys):
        out = tmp_path / "round.json"
        rc = main(["pair", str(state_file), "--seed", "3", "--out", str(out)])
        assert rc == 0
        stdout = capsys.readouterr().out
        assert stdout.count("board") == 4
        skeleton = json.loads(out.read_text())
        assert skeleton["round"] == 1
        assert len(skeleton["boards"]) == 4
        assert skeleton["bye"] is None

    def test_identical_bytes_for_same_seed(self, state_file, tmp_path):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["pair", str(state_file), "--seed", "9", "--out", str(out1)]) == 0
        assert main(["pair", str(state_file), "--seed", "9", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_exhausted_pairings_exit_infeasible(self, tmp_path, capsys):
        others = ["b", "c", "d"]
        state = {
            "total_rounds": 5,
            "players": [
                {
                    "id": pid,
                    "rating": 2200.0,
                    "score": 1.5,
                    "opponents": [o for o in ["a", "b", "c", "d"] if o != pid],
                    "colour_history": ["W", "B", "W"],
                }
                for pid in ["a", "b", "c", "d"]
            ],
        }
        path = tmp_path / "stuck.json"
        path.write_text(json.dumps(state))
        rc = main(["pair", str(path)])
        assert rc == 3
        assert "unmatched" in capsys.readouterr().err

    def test_bad_state_is_data_error(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["pair", str(path)]) == 4

    def test_unknown_config_key_is_validation_error(self, state_file, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"mode": "standard", "typo_key": 1}))
        assert main(["pair", str(state_file), "--config", str(cfg)]) == 2


class TestSimulateAndAudit:
    def test_round_trip(self, experiment_file, tmp_path, capsys):
        csv_path = tmp_path / "records.csv"
        rc = main(
            ["simulate", str(experiment_file), "--out", str(csv_path), "--workers", "2"]
        )
        assert rc == 0
        assert "mean points" in capsys.readouterr().out

        rc = main(["audit", str(csv_path), "--rounds", "9", "--battery", "points"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "Points regressions" in out
        assert "Elo equivalent" in out or "Elo" in out

    def test_audit_json_payload(self, experiment_file, tmp_path):
        csv_path = tmp_path / "records.csv"
        main(["simulate", str(experiment_file), "--out", str(csv_path)])
        json_path = tmp_path / "audit.json"
        rc = main(
            [
                "audit",
                str(csv_path),
                "--rounds",
                "9",
                "--battery",
                "points",
                "--battery",
                "threshold",
                "--threshold",
                "6",
                "--json",
                str(json_path),
            ]
        )
        assert rc == 0
        payload = json.loads(json_path.read_text())
        assert "points" in payload["batteries"]
        assert "6.0" in payload["batteries"]["threshold"]
        model = payload["batteries"]["points"][3]
        assert set(model["terms"]) == {
            "constant",
            "elo_centered",
            "expected_points",
            "extra_white",
        }

    def test_missing_seed_is_validation_error(self, tmp_path):
        cfg = tmp_path / "no_seed.json"
        cfg.write_text(json.dumps({"rounds": 5, "replications": 2, "field": {"size": 8}}))
        assert main(["simulate", str(cfg), "--out", str(tmp_path / "x.csv")]) == 2

    def test_zero_replications_rejected(self, tmp_path):
        cfg = tmp_path / "zero.json"
        cfg.write_text(
            json.dumps({"seed": 1, "rounds": 5, "replications": 0, "field": {"size": 8}})
        )
        assert main(["simulate", str(cfg), "--out", str(tmp_path / "x.csv")]) == 2

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "extra.json"
        cfg.write_text(json.dumps({"seed": 1, "field": {"size": 8}, "verbose": True}))
        assert main(["simulate", str(cfg), "--out", str(tmp_path / "x.csv")]) == 2

    def test_audit_schema_mismatch_is_data_error(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("nope,nope\n1,2\n")
        assert main(["audit", str(bad), "--rounds", "9"]) == 4

    def test_audit_empty_after_filter_is_data_error(self, experiment_file, tmp_path):
        csv_path = tmp_path / "records.csv"
        main(["simulate", str(experiment_file), "--out", str(csv_path)])
        rc = main(["audit", str(csv_path), "--rounds", "9", "--min-points", "99"])
        assert rc == 4


class TestReport:
    def test_crosstable_stats_and_conversion(self, tmp_path, capsys):
        table = tmp_path / "cross.txt"
        table.write_text(
            "tournament demo rounds 2\n"
            "player a 2400 b:W:1 c:B:=\n"
            "player b 2300 a:B:0 d:W:1\n"
            "player c 2500 d:W:= a:W:=\n"
            "player d 2200 c:B:= b:B:0\n"
            "player e 2350 f:W:1 g:B:0\n"
            "player f 2250 e:B:0 h:W:=\n"
            "player g 2450 h:W:= e:W:1\n"
            "player h 2150 g:B:= f:B:=\n"
        )
        out_csv = tmp_path / "records.csv"
        svg = tmp_path / "hist.svg"
        rc = main(
            [
                "report",
                "--crosstable",
                str(table),
                "--records-out",
                str(out_csv),
                "--svg",
                str(svg),
            ]
        )
        assert rc == 0
        out = capsys.readouterr().out
        assert "valid:        8" in out
        assert svg.read_text().startswith("<svg")
        rc = main(
            [
                "audit",
                str(out_csv),
                "--rounds",
                "2",
                "--min-points",
                "0",
                "--battery",
                "points",
            ]
        )
        assert rc == 0

    def test_invalid_crosstable_is_data_error(self, tmp_path):
        table = tmp_path / "bad.txt"
        table.write_text("tournament demo rounds 1\nplayer a 2400 b:W:1\nplayer b 2300 a:W:0\n")
        assert main(["report", "--crosstable", str(table)]) == 4
