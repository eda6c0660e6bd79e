import math
import random

import pytest

from swissfair.pairing import PairingConfig
from swissfair.records import DELTA_GRID
from swissfair.simulate import (
    ExperimentSpec,
    FieldSpec,
    GameResult,
    OutcomeModel,
    derive_seed,
    generate_field,
    run_experiment,
    sample_game,
    simulate_tournament,
)


class TestOutcomeModel:
    def test_validation(self):
        with pytest.raises(ValueError):
            OutcomeModel(delta=-1)
        with pytest.raises(ValueError):
            OutcomeModel(draw_ceiling=1.5)

    def test_game_result_scores(self):
        with pytest.raises(ValueError):
            GameResult("a", "b", 0.7)
        assert GameResult("a", "b", 1.0).black_score == 0.0


def _frequencies(r_white, r_black, model, n=100_000, seed=6):
    rng = random.Random(seed)
    counts = {0.0: 0, 0.5: 0, 1.0: 0}
    for _ in range(n):
        counts[sample_game(r_white, r_black, model, rng)] += 1
    return {k: v / n for k, v in counts.items()}


class TestSampleGame:
    def test_no_draws_when_ceiling_zero(self):
        # p = 0.75 via a 400-advantage... use ratings giving p close to 0.75
        model = OutcomeModel(delta=0.0, draw_ceiling=0.0)
        freq = _frequencies(2600, 2409, model)  # p ~ 0.75
        assert freq[0.5] == 0.0
        p = 1 / (1 + 10 ** ((2409 - 2600) / 400))
        se = math.sqrt(p * (1 - p) / 100_000)
        assert abs(freq[1.0] - p) < 3 * se

    def test_draw_probability_clamps_near_certain_outcomes(self):
        model = OutcomeModel(delta=0.0, draw_ceiling=0.35)
        p = 1 / (1 + 10 ** (-1200 / 400))  # ~0.9990
        freq = _frequencies(3000, 1800, model, n=50_000)
        d = min(0.35, 2 * p, 2 * (1 - p))
        se = math.sqrt(d * (1 - d) / 50_000)
        assert abs(freq[0.5] - d) < 3 * se + 1e-9

    def test_three_way_split_at_equal_ratings(self):
        model = OutcomeModel(delta=0.0, draw_ceiling=0.35)
        freq = _frequencies(2400, 2400, model)
        for outcome, want in ((1.0, 0.325), (0.5, 0.35), (0.0, 0.325)):
            se = math.sqrt(want * (1 - want) / 100_000)
            assert abs(freq[outcome] - want) < 3 * se

    @pytest.mark.parametrize("gap,ceiling", [(0, 0.35), (200, 0.35), (400, 0.9), (150, 0.0)])
    def test_expected_score_equals_model_probability(self, gap, ceiling):
        model = OutcomeModel(delta=10.0, draw_ceiling=ceiling)
        r_white, r_black = 2400 + gap, 2400
        p = 1 / (1 + 10 ** ((r_black - r_white - 10) / 400))
        rng = random.Random(99)
        n = 100_000
        mean = sum(sample_game(r_white, r_black, model, rng) for _ in range(n)) / n
        # score variance is at most Bernoulli variance at the same mean
        se = math.sqrt(p * (1 - p) / n)
        assert abs(mean - p) < 3 * se + 1e-9


class TestFieldGeneration:
    def test_uniform_is_even_spread(self):
        field = generate_field(FieldSpec(size=5, kind="uniform", low=2000, high=2400), 1)
        assert sorted(r for _, r in field) == [2000, 2100, 2200, 2300, 2400]

    def test_ids_not_aligned_with_strength(self):
        field = generate_field(FieldSpec(size=64), seed=10)
        ratings = [r for _, r in field]
        assert ratings != sorted(ratings)

    def test_fixed_ratings(self):
        field = generate_field(FieldSpec(size=0, kind="fixed", ratings=(2000.0, 2100.0)), 4)
        assert sorted(r for _, r in field) == [2000.0, 2100.0]

    def test_validation(self):
        with pytest.raises(ValueError):
            FieldSpec(size=1)
        with pytest.raises(ValueError):
            FieldSpec(size=4, kind="lognormal")
        with pytest.raises(ValueError):
            FieldSpec(size=4, kind="fixed")


class TestSimulateTournament:
    def test_two_players_one_round_conserves_points(self):
        records, pairings = simulate_tournament(
            [("a", 2400.0), ("b", 2300.0)], 1, PairingConfig(), OutcomeModel(), seed=1
        )
        assert len(pairings) == 1 and len(pairings[0].boards) == 1
        assert sum(r.points for r in records) == 1.0

    def test_point_conservation_with_byes(self):
        field = generate_field(FieldSpec(size=9), seed=2)
        records, pairings = simulate_tournament(
            field, 5, PairingConfig(), OutcomeModel(delta=20), seed=2
        )
        boards = sum(len(p.boards) for p in pairings)
        byes = sum(1 for p in pairings if p.bye is not None)
        assert byes == 5
        assert sum(r.points for r in records) == pytest.approx(boards + 0.5 * byes)

    def test_record_grid_and_consistency(self):
        field = generate_field(FieldSpec(size=12), seed=3)
        records, _ = simulate_tournament(field, 9, PairingConfig(), OutcomeModel(), seed=3)
        mean = sum(r for _, r in field) / len(field)
        for rec in records:
            assert tuple(sorted(rec.expected_points_at)) == DELTA_GRID
            for d in DELTA_GRID:
                assert rec.surprise_points_at[d] == pytest.approx(
                    rec.points - rec.expected_points_at[d]
                )
            assert rec.extra_white == int(rec.n_white > rec.n_black)
            assert rec.n_white + rec.n_black == 9
            assert rec.elo_centered == pytest.approx((rec.elo - mean) / 100)

    def test_symmetry_at_zero_delta(self):
        field = [(f"p{i:02d}", 2400.0) for i in range(16)]
        totals = {0: [], 1: []}
        for rep in range(300):
            records, _ = simulate_tournament(
                field, 9, PairingConfig(), OutcomeModel(delta=0.0), seed=rep
            )
            for r in records:
                totals[r.extra_white].append(r.points)
        means = {k: sum(v) / len(v) for k, v in totals.items()}
        assert abs(means[1] - means[0]) < 0.1

    def test_white_advantage_lifts_extra_white_group(self):
        spec = ExperimentSpec(
            field=FieldSpec(size=100, sd=150.0),
            rounds=9,
            replications=500,
            model=OutcomeModel(delta=30.0),
            seed=314,
        )
        records = run_experiment(spec, workers=2)
        by_group = {0: [], 1: []}
        for r in records:
            by_group[r.extra_white].append(r.points)
        mean1 = sum(by_group[1]) / len(by_group[1])
        mean0 = sum(by_group[0]) / len(by_group[0])
        assert mean1 > mean0

    def test_extra_white_share_near_half(self):
        spec = ExperimentSpec(
            field=FieldSpec(size=40), rounds=9, replications=50, seed=77
        )
        records = run_experiment(spec, workers=1)
        share = sum(r.extra_white for r in records) / len(records)
        assert 0.45 <= share <= 0.55

    def test_validation(self):
        with pytest.raises(ValueError):
            simulate_tournament([("a", 2400.0)], 1, PairingConfig(), OutcomeModel(), 1)
        with pytest.raises(ValueError):
            simulate_tournament(
                [("a", 2400.0), ("b", 2300.0)], 0, PairingConfig(), OutcomeModel(), 1
            )


class TestRunExperiment:
    def test_single_replication_matches_direct_call(self):
        spec = ExperimentSpec(field=FieldSpec(size=10), rounds=5, replications=1, seed=42)
        via_experiment = run_experiment(spec)
        rep_seed = derive_seed(42, "rep", 0)
        direct, _ = simulate_tournament(
            generate_field(spec.field, rep_seed),
            5,
            spec.pairing,
            spec.model,
            rep_seed,
            tournament_id="sim-00000",
        )
        assert via_experiment == direct

    def test_same_seed_is_bit_identical(self):
        spec = ExperimentSpec(field=FieldSpec(size=14), rounds=7, replications=5, seed=9)
        assert run_experiment(spec) == run_experiment(spec)

    def test_workers_do_not_change_output(self):
        spec = ExperimentSpec(field=FieldSpec(size=14), rounds=7, replications=6, seed=9)
        assert run_experiment(spec, workers=1) == run_experiment(spec, workers=2)

    def test_record_cardinality(self):
        spec = ExperimentSpec(field=FieldSpec(size=30), rounds=9, replications=12, seed=4)
        records = run_experiment(spec, workers=2)
        assert len(records) == 12 * 30
        assert len({r.tournament_id for r in records}) == 12

    def test_replications_validated(self):
        with pytest.raises(ValueError):
            ExperimentSpec(field=FieldSpec(size=10), rounds=5, replications=0, seed=1)
