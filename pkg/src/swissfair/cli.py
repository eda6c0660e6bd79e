"""Command-line interface.

Subcommands: ``pair`` (next round from a state file), ``simulate`` (run an
experiment config to a records CSV), ``audit`` (regression batteries over a
records CSV), ``report`` (descriptive statistics, conversion, SVG plot).

Exit codes: 0 success, 2 validation error, 3 pairing infeasibility,
4 data error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ingest, records, report, stats
from .pairing import BYE, PairingConfig, PairingError, PairingInfeasibleError, PlayerState, pair_round
from .ratings import BLACK, WHITE
from .records import DELTA_GRID
from .simulate import ExperimentSpec, FieldSpec, OutcomeModel, run_experiment

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3
EXIT_DATA = 4

_PAIRING_KEYS = {
    "mode",
    "beta",
    "base_weight",
    "score_diff_penalty_per_point",
    "colour_bonus_mild",
    "colour_bonus_strong",
    "colour_bonus_absolute",
    "quantization_scale",
    "allow_last_round_exception",
}


class DataError(Exception):
    """Input file is structurally broken (exit code 4)."""


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: invalid JSON ({exc})") from None


def _pairing_config(payload) -> PairingConfig:
    if payload is None:
        return PairingConfig()
    unknown = set(payload) - _PAIRING_KEYS
    if unknown:
        raise ValueError(f"unknown pairing config keys: {sorted(unknown)}")
    return PairingConfig(**payload)


def _load_state(path):
    payload = _load_json(path)
    if not isinstance(payload, dict) or "players" not in payload:
        raise DataError(f"{path}: state must be an object with a 'players' list")
    try:
        total_rounds = int(payload["total_rounds"])
    except (KeyError, TypeError, ValueError):
        raise DataError(f"{path}: missing or invalid 'total_rounds'") from None
    players = []
    lengths = set()
    for entry in payload["players"]:
        try:
            history = list(entry.get("colour_history", []))
            for item in history:
                if item not in (WHITE, BLACK, BYE):
                    raise DataError(
                        f"{path}: colour history entry {item!r} for player "
                        f"{entry.get('id')!r} (expected W/B/bye)"
                    )
            state = PlayerState(
                player_id=str(entry["id"]),
                rating=float(entry["rating"]),
                score=float(entry.get("score", 0.0)),
                opponents=set(map(str, entry.get("opponents", []))),
                colour_history=history,
                had_bye=bool(entry.get("had_bye", BYE in history)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"{path}: bad player entry ({exc})") from None
        players.append(state)
        lengths.add(len(history))
    if not players:
        raise DataError(f"{path}: empty player list")
    if len(lengths) > 1:
        raise DataError(f"{path}: players disagree on rounds played")
    next_round = (lengths.pop() if lengths else 0) + 1
    if next_round > total_rounds:
        raise DataError(f"{path}: all {total_rounds} rounds already played")
    return payload, players, next_round, total_rounds


def _cmd_pair(args) -> int:
    _, players, round_no, total_rounds = _load_state(args.state)
    config = _pairing_config(_load_json(args.config) if args.config else None)
    pairing = pair_round(players, config, round_no, total_rounds, rng_seed=args.seed)
    lines = [f"Round {round_no} of {total_rounds}"]
    for board_no, (white_id, black_id) in enumerate(pairing.boards, start=1):
        lines.append(f"  board {board_no}: {white_id} (white) vs {black_id} (black)")
    if pairing.bye is not None:
        lines.append(f"  bye: {pairing.bye} (+0.5)")
    print("\n".join(lines))
    out_path = args.out or f"{args.state}.round{round_no}.json"
    skeleton = {
        "round": round_no,
        "boards": [
            {"white": w, "black": b, "result": None} for w, b in pairing.boards
        ],
        "bye": pairing.bye,
    }
    with open(out_path, "w") as fh:
        json.dump(skeleton, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {out_path}")
    return EXIT_OK


def _experiment_spec(payload, seed_override) -> ExperimentSpec:
    if not isinstance(payload, dict):
        raise ValueError("experiment config must be a JSON object")
    known = {"seed", "rounds", "replications", "field", "model", "pairing"}
    unknown = set(payload) - known
    if unknown:
        raise ValueError(f"unknown experiment config keys: {sorted(unknown)}")
    seed = seed_override if seed_override is not None else payload.get("seed")
    if seed is None:
        raise ValueError("a seed is required (config 'seed' or --seed)")
    field_payload = dict(payload.get("field") or {})
    if "ratings_file" in field_payload:
        path = field_payload.pop("ratings_file")
        with open(path) as fh:
            ratings = tuple(float(line) for line in fh.read().split())
        field_payload["kind"] = "fixed"
        field_payload["ratings"] = ratings
        field_payload.setdefault("size", len(ratings))
    if "ratings" in field_payload:
        field_payload["ratings"] = tuple(field_payload["ratings"])
        field_payload.setdefault("size", len(field_payload["ratings"]))
    field_keys = {"size", "kind", "mean", "sd", "low", "high", "ratings"}
    unknown = set(field_payload) - field_keys
    if unknown:
        raise ValueError(f"unknown field keys: {sorted(unknown)}")
    if "size" not in field_payload:
        raise ValueError("field.size is required")
    model_payload = payload.get("model") or {}
    unknown = set(model_payload) - {"delta", "draw_ceiling"}
    if unknown:
        raise ValueError(f"unknown model keys: {sorted(unknown)}")
    return ExperimentSpec(
        field=FieldSpec(**field_payload),
        rounds=int(payload.get("rounds", 9)),
        replications=int(payload.get("replications", 1)),
        pairing=_pairing_config(payload.get("pairing")),
        model=OutcomeModel(**model_payload),
        seed=int(seed),
    )


def _cmd_simulate(args) -> int:
    spec = _experiment_spec(_load_json(args.config), args.seed)
    recs = run_experiment(spec, workers=args.workers)
    records.write_csv(recs, args.out)
    by_group = {0: [], 1: []}
    for r in recs:
        by_group[r.extra_white].append(r.points)
    print(f"replications: {spec.replications}")
    print(f"records: {len(recs)} -> {args.out}")
    for flag, label in ((1, "extra white"), (0, "no extra white")):
        pts = by_group[flag]
        mean = sum(pts) / len(pts) if pts else float("nan")
        print(f"mean points, {label:>14}: {mean:.4f}  (n={len(pts)})")
    return EXIT_OK


def _default_thresholds(rounds: int):
    if rounds == 9:
        return (6.0, 6.5)
    if rounds == 11:
        return (7.0, 7.5)
    return (round(rounds * 2 / 3 * 2) / 2,)


def _cmd_audit(args) -> int:
    recs = records.read_csv(args.records)
    if not recs:
        raise DataError(f"{args.records}: no records")
    min_points = (
        args.min_points
        if args.min_points is not None
        else stats.default_min_points(args.rounds)
    )
    filtered = stats.outlier_filter(recs, min_points)
    if not filtered:
        raise DataError(
            f"no records left after the outlier filter (points >= {min_points})"
        )
    print(
        f"records: {len(recs)} total, {len(filtered)} after outlier filter "
        f"(points >= {min_points})\n"
    )
    batteries = args.battery or ["points", "surprise", "threshold"]
    payload = {"records": len(recs), "filtered": len(filtered), "batteries": {}}

    if "points" in batteries:
        fits = stats.points_battery(filtered, delta=args.delta)
        print(report.render_table(fits, title="Points regressions"))
        plain = fits[1]
        controlled = fits[3]
        print(
            "implied white-advantage Elo equivalent: "
            f"{stats.elo_equivalent(plain):.1f} "
            f"(with expected-points control: {stats.elo_equivalent(controlled):.1f})\n"
        )
        payload["batteries"]["points"] = [report.fit_to_dict(f) for f in fits]
        payload["elo_equivalent"] = stats.elo_equivalent(plain)
        payload["elo_equivalent_controlled"] = stats.elo_equivalent(controlled)
    if "surprise" in batteries:
        fits_by_delta = stats.surprise_battery(filtered)
        print(
            report.render_table(
                list(fits_by_delta.values()),
                headers=[f"D={d}" for d in fits_by_delta],
                title="Surprise-point regressions over the white-advantage grid",
            )
        )
        print()
        payload["batteries"]["surprise"] = {
            str(d): report.fit_to_dict(f) for d, f in fits_by_delta.items()
        }
    if "threshold" in batteries:
        thresholds = tuple(args.threshold) if args.threshold else _default_thresholds(args.rounds)
        fits_by_t = stats.threshold_battery(filtered, thresholds)
        print(
            report.render_table(
                list(fits_by_t.values()),
                headers=[f"t={t:g}" for t in fits_by_t],
                title="Logistic models of reaching a points threshold",
            )
        )
        payload["batteries"]["threshold"] = {
            str(t): report.fit_to_dict(f) for t, f in fits_by_t.items()
        }
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {args.json}")
    return EXIT_OK


def _cmd_report(args) -> int:
    total = None
    if args.crosstable:
        raw = ingest.parse_crosstable(args.crosstable)
        recs = ingest.clean(raw)
        total = len(raw.players)
    else:
        recs = records.read_csv(args.records)
        if not recs:
            raise DataError(f"{args.records}: no records")
    summary = ingest.descriptive_stats(recs, total_count=total)
    print(f"players:      {summary['count']}")
    print(f"valid:        {summary['valid_count']}")
    print(f"mean rating:  {summary['mean']:.2f}")
    print(f"sd (pop.):    {summary['sd']:.2f}")
    print(f"min..max:     {summary['min']:.0f}..{summary['max']:.0f}")
    print(f"extra-white share: {100 * summary['white_share']:.2f}%")
    if args.records_out:
        records.write_csv(recs, args.records_out)
        print(f"wrote {args.records_out}")
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(report.points_histogram_svg(recs))
            fh.write("\n")
        print(f"wrote {args.svg}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swissfair",
        description="Swiss-system pairing, simulation, and fairness auditing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_pair = sub.add_parser("pair", help="pair the next round from a state file")
    p_pair.add_argument("state", help="tournament state JSON")
    p_pair.add_argument("--config", help="pairing config JSON")
    p_pair.add_argument("--seed", type=int, default=None, help="tie-break seed")
    p_pair.add_argument("--out", help="output path for the round skeleton")
    p_pair.set_defaults(func=_cmd_pair)

    p_sim = sub.add_parser("simulate", help="run a Monte Carlo experiment")
    p_sim.add_argument("config", help="experiment config JSON")
    p_sim.add_argument("--out", required=True, help="records CSV to write")
    p_sim.add_argument("--seed", type=int, default=None, help="override config seed")
    p_sim.add_argument("--workers", type=int, default=1)
    p_sim.set_defaults(func=_cmd_simulate)

    p_audit = sub.add_parser("audit", help="regression batteries over records")
    p_audit.add_argument("records", help="records CSV")
    p_audit.add_argument("--rounds", type=int, required=True, help="rounds per tournament")
    p_audit.add_argument("--min-points", type=float, default=None)
    p_audit.add_argument(
        "--battery",
        action="append",
        choices=["points", "surprise", "threshold"],
        help="battery to run (repeatable; default: all)",
    )
    p_audit.add_argument(
        "--threshold",
        action="append",
        type=float,
        help="points threshold for the logistic battery (repeatable)",
    )
    p_audit.add_argument(
        "--delta",
        type=int,
        default=0,
        choices=DELTA_GRID,
        help="white-advantage grid point for expected points",
    )
    p_audit.add_argument("--json", help="also write results as JSON")
    p_audit.set_defaults(func=_cmd_audit)

    p_rep = sub.add_parser("report", help="descriptive statistics and plots")
    source = p_rep.add_mutually_exclusive_group(required=True)
    source.add_argument("--records", help="records CSV")
    source.add_argument("--crosstable", help="crosstable text file")
    p_rep.add_argument("--records-out", help="write records CSV (conversion)")
    p_rep.add_argument("--svg", help="write the points histogram SVG")
    p_rep.set_defaults(func=_cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PairingInfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.unmatched:
            print(f"unmatched players: {', '.join(map(str, exc.unmatched))}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except PairingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (DataError, ingest.CrosstableError, records.RecordSchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except stats.StatsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
