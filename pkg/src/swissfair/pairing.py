"""Swiss-system round pairing via maximum-weight matching.

Hard rules: no rematch, colour imbalance capped at +/-2, never the same
colour three times running, at most one bye each.  Soft rules (same-score
pairing, colour preference satisfaction) become edge weights; a
maximum-cardinality maximum-weight matching then picks the round.

The balanced mode additionally forces every player's colour imbalance to
zero after each even round by restricting even-round edges to players with
opposite imbalance, and trades score adherence for that guarantee via the
``beta`` attenuation factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import matching
from .ratings import BLACK, WHITE

BYE = "bye"

# Colour preference levels, weakest to strongest.
PREF_NONE = 0
PREF_MILD = 1
PREF_STRONG = 2
PREF_ABSOLUTE = 3


class PairingError(Exception):
    """Base class for pairing failures."""


class PairingInfeasibleError(PairingError):
    """No legal pairing exists for the given state.

    ``unmatched`` lists the player ids that could not be paired.
    """

    def __init__(self, message, unmatched=()):
        super().__init__(message)
        self.unmatched = tuple(unmatched)


class ByeUnavailableError(PairingError):
    """Every player has already received a bye."""


class ColourPreference(NamedTuple):
    """Preference strength (PREF_*) and preferred colour (None iff no games)."""

    level: int
    colour: str | None


@dataclass
class PlayerState:
    """One player's standing within a tournament."""

    player_id: str
    rating: float
    score: float = 0.0
    opponents: set = field(default_factory=set)
    colour_history: list = field(default_factory=list)
    had_bye: bool = False

    def games_played(self) -> int:
        return sum(1 for c in self.colour_history if c in (WHITE, BLACK))


@dataclass(frozen=True)
class PairingConfig:
    """Weights and mode switches of the pairing engine.

    All weights are in abstract units; ``quantization_scale`` converts a
    unit into integer weight for the exact matching core.  The defaults
    make a one-point score difference cost 100 units against colour
    bonuses of at most 30 per player, so score-group adherence dominates
    colour comfort but never feasibility.
    """

    mode: str = "standard"  # "standard" | "balanced"
    beta: float = 0.5  # balanced mode only, in (0, 0.5]
    base_weight: float = 1000.0
    score_diff_penalty_per_point: float = 100.0
    colour_bonus_mild: float = 10.0
    colour_bonus_strong: float = 20.0
    colour_bonus_absolute: float = 30.0
    quantization_scale: int = 10**6
    allow_last_round_exception: bool = False

    def __post_init__(self):
        if self.mode not in ("standard", "balanced"):
            raise ValueError(f"unknown pairing mode {self.mode!r}")
        if self.mode == "balanced" and not (0.0 < self.beta <= 0.5):
            raise ValueError("beta must lie in (0, 0.5] for balanced mode")
        for name in (
            "base_weight",
            "score_diff_penalty_per_point",
            "colour_bonus_mild",
            "colour_bonus_strong",
            "colour_bonus_absolute",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.quantization_scale < 1:
            raise ValueError("quantization_scale must be a positive integer")

    def effective_score_penalty(self) -> float:
        """Score-difference penalty after balanced-mode attenuation.

        Smaller beta shrinks the float penalty, tolerating more
        cross-score pairs in exchange for the colour-balance guarantee.
        """
        if self.mode == "balanced":
            return self.score_diff_penalty_per_point * (self.beta / 0.5)
        return self.score_diff_penalty_per_point

    def level_bonus(self, level: int) -> float:
        return (
            0.0,
            self.colour_bonus_mild,
            self.colour_bonus_strong,
            self.colour_bonus_absolute,
        )[level]


@dataclass(frozen=True)
class RoundPairing:
    """Boards as (white_id, black_id) plus the bye recipient, if any."""

    boards: tuple
    bye: object = None


def colour_imbalance(history) -> int:
    """White games minus black games; byes do not count."""
    white = sum(1 for c in history if c == WHITE)
    black = sum(1 for c in history if c == BLACK)
    return white - black


def colour_preference(history) -> ColourPreference:
    """Colour preference implied by a (constraint-respecting) history.

    Absolute: the other colour would break a hard rule (imbalance at the
    +/-2 cap, or the last two played games had the same colour).
    Strong: imbalance is +/-1.  Mild: balanced, alternate from the last
    played colour.  No games at all means no preference.  Byes are
    transparent for both the counts and the run of consecutive colours.
    """
    played = [c for c in history if c in (WHITE, BLACK)]
    if not played:
        return ColourPreference(PREF_NONE, None)
    imbalance = sum(1 for c in played if c == WHITE) - sum(
        1 for c in played if c == BLACK
    )
    two_in_row = len(played) >= 2 and played[-1] == played[-2]
    if imbalance >= 2 or (two_in_row and played[-1] == WHITE):
        return ColourPreference(PREF_ABSOLUTE, BLACK)
    if imbalance <= -2 or (two_in_row and played[-1] == BLACK):
        return ColourPreference(PREF_ABSOLUTE, WHITE)
    if imbalance == 1:
        return ColourPreference(PREF_STRONG, BLACK)
    if imbalance == -1:
        return ColourPreference(PREF_STRONG, WHITE)
    return ColourPreference(PREF_MILD, BLACK if played[-1] == WHITE else WHITE)


def _preference_direction(pref: ColourPreference) -> int:
    """+1 prefers white, -1 prefers black, 0 no preference."""
    if pref.colour == WHITE:
        return 1
    if pref.colour == BLACK:
        return -1
    return 0


def select_bye(players) -> object:
    """Pick the bye recipient: lowest (score, rating) without a prior bye.

    Ties beyond rating break on player id, so the choice is invariant
    under permutations of the input list.
    """
    eligible = [p for p in players if not p.had_bye]
    if not eligible:
        raise ByeUnavailableError("every player has already received a bye")
    return min(eligible, key=lambda p: (p.score, p.rating, p.player_id)).player_id


def assign_colours(p: PlayerState, q: PlayerState):
    """Choose colours for an eligible pair; returns (white_id, black_id).

    The stronger preference wins.  Equal strength with opposite directions
    satisfies both; equal strength in the same direction falls back to the
    lower colour imbalance, then the lower player id.
    """
    pref_p = colour_preference(p.colour_history)
    pref_q = colour_preference(q.colour_history)
    dir_p = _preference_direction(pref_p)
    dir_q = _preference_direction(pref_q)
    if (
        pref_p.level == PREF_ABSOLUTE
        and pref_q.level == PREF_ABSOLUTE
        and dir_p == dir_q
    ):
        raise PairingError(
            f"players {p.player_id!r} and {q.player_id!r} hold the same "
            "absolute colour preference; no legal assignment"
        )
    if pref_p.level > pref_q.level:
        p_white = dir_p == 1
    elif pref_q.level > pref_p.level:
        p_white = dir_q == -1
    elif dir_p == 1 and dir_q == -1:
        p_white = True
    elif dir_p == -1 and dir_q == 1:
        p_white = False
    else:
        imb_p = colour_imbalance(p.colour_history)
        imb_q = colour_imbalance(q.colour_history)
        if imb_p != imb_q:
            p_white = imb_p < imb_q
        else:
            p_white = p.player_id < q.player_id
    if p_white:
        return p.player_id, q.player_id
    return q.player_id, p.player_id


def eligible_pairs(players, config: PairingConfig, round_no: int, total_rounds: int):
    """All pairs that respect the hard constraints this round.

    Excludes rematches and pairs whose members hold the same absolute
    colour preference (no legal colour split) unless the configured
    last-round exception applies.  In balanced mode, even rounds only
    admit pairs whose forced colours bring both imbalances to zero; the
    last-round exception never relaxes that guarantee.
    """
    relax_colours = (
        config.allow_last_round_exception and round_no == total_rounds
    )
    balanced_round = config.mode == "balanced" and round_no % 2 == 0
    prefs = [colour_preference(p.colour_history) for p in players]
    imbalances = [colour_imbalance(p.colour_history) for p in players]
    out = []
    for i, p in enumerate(players):
        for j in range(i + 1, len(players)):
            q = players[j]
            if q.player_id in p.opponents:
                continue
            if (
                not relax_colours
                and prefs[i].level == PREF_ABSOLUTE
                and prefs[j].level == PREF_ABSOLUTE
                and prefs[i].colour == prefs[j].colour
            ):
                continue
            if balanced_round and imbalances[i] * imbalances[j] != -1:
                continue
            out.append((p.player_id, q.player_id))
    return out


def edge_weight(p: PlayerState, q: PlayerState, config: PairingConfig) -> int:
    """Quantized desirability of pairing p with q.

    base - penalty * |score difference| + colour satisfaction bonuses,
    clamped at zero, scaled to integer units for the exact matcher.
    Same-score pairs with both preferences satisfied attain the maximum.
    """
    white_id, _ = assign_colours(p, q)
    pref_p = colour_preference(p.colour_history)
    pref_q = colour_preference(q.colour_history)
    p_white = white_id == p.player_id
    bonus = 0.0
    if pref_p.colour == (WHITE if p_white else BLACK):
        bonus += config.level_bonus(pref_p.level)
    if pref_q.colour == (BLACK if p_white else WHITE):
        bonus += config.level_bonus(pref_q.level)
    units = (
        config.base_weight
        - config.effective_score_penalty() * abs(p.score - q.score)
        + bonus
    )
    units = max(units, 0.0)
    return int(round(units * config.quantization_scale))


def _candidate_edges(players, config: PairingConfig, round_no: int, total_rounds: int):
    """Vectorised eligible_pairs + edge_weight + colour decision.

    Returns (i_idx, j_idx, weights, white_is_i) over the players list.
    Must agree exactly with the per-pair reference functions; the test
    suite enforces the equivalence.
    """
    n = len(players)
    index_of = {p.player_id: i for i, p in enumerate(players)}
    scores = np.array([p.score for p in players], dtype=np.float64)
    prefs = [colour_preference(p.colour_history) for p in players]
    lev = np.array([pr.level for pr in prefs], dtype=np.int64)
    dirn = np.array([_preference_direction(pr) for pr in prefs], dtype=np.int64)
    imb = np.array(
        [colour_imbalance(p.colour_history) for p in players], dtype=np.int64
    )
    order = sorted(range(n), key=lambda i: players[i].player_id)
    id_rank = np.empty(n, dtype=np.int64)
    for rank, i in enumerate(order):
        id_rank[i] = rank

    met = np.zeros((n, n), dtype=bool)
    for i, p in enumerate(players):
        for opp in p.opponents:
            j = index_of.get(opp)
            if j is not None:
                met[i, j] = True
                met[j, i] = True

    iu, ju = np.triu_indices(n, k=1)
    ok = ~met[iu, ju]
    if not (config.allow_last_round_exception and round_no == total_rounds):
        ok &= ~(
            (lev[iu] == PREF_ABSOLUTE)
            & (lev[ju] == PREF_ABSOLUTE)
            & (dirn[iu] == dirn[ju])
        )
    if config.mode == "balanced" and round_no % 2 == 0:
        ok &= imb[iu] * imb[ju] == -1
    iu = iu[ok]
    ju = ju[ok]

    li, lj = lev[iu], lev[ju]
    di, dj = dirn[iu], dirn[ju]
    white_is_i = np.where(
        li > lj,
        di == 1,
        np.where(
            lj > li,
            dj == -1,
            np.where(
                (di == 1) & (dj == -1),
                True,
                np.where(
                    (di == -1) & (dj == 1),
                    False,
                    np.where(
                        imb[iu] != imb[ju],
                        imb[iu] < imb[ju],
                        id_rank[iu] < id_rank[ju],
                    ),
                ),
            ),
        ),
    )
    level_bonus = np.array(
        [
            0.0,
            config.colour_bonus_mild,
            config.colour_bonus_strong,
            config.colour_bonus_absolute,
        ]
    )
    sat_i = np.where(white_is_i, di == 1, di == -1)
    sat_j = np.where(white_is_i, dj == -1, dj == 1)
    bonus = np.where(sat_i, level_bonus[li], 0.0) + np.where(
        sat_j, level_bonus[lj], 0.0
    )
    units = (
        config.base_weight
        - config.effective_score_penalty() * np.abs(scores[iu] - scores[ju])
        + bonus
    )
    units = np.maximum(units, 0.0)
    weights = np.rint(units * config.quantization_scale).astype(np.int64)
    return iu, ju, weights, white_is_i


def pair_round(
    players,
    config: PairingConfig,
    round_no: int,
    total_rounds: int,
    rng_seed: int | None = None,
) -> RoundPairing:
    """Pair one round: bye first if the field is odd, then matching.

    ``rng_seed`` deterministically shuffles the candidate edge order,
    varying the tie-break among equally good pairings (round 1 in
    particular) while keeping the result a pure function of
    (state, config, seed).

    Raises PairingInfeasibleError when no full pairing exists, carrying
    the unmatched player ids.  Balanced mode refuses odd fields: a bye
    leaves its recipient with an odd number of games, which makes the
    zero-imbalance-after-even-rounds guarantee unattainable.
    """
    if round_no < 1 or round_no > total_rounds:
        raise ValueError("round_no must lie in 1..total_rounds")
    ids = [p.player_id for p in players]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate player ids")
    if config.mode == "balanced" and len(players) % 2 == 1:
        raise PairingInfeasibleError(
            "balanced mode requires an even number of players: a bye breaks "
            "the zero-imbalance guarantee",
            unmatched=ids,
        )

    bye_id = None
    active = list(players)
    if len(active) % 2 == 1:
        bye_id = select_bye(active)
        active = [p for p in active if p.player_id != bye_id]

    if not active:
        return RoundPairing(boards=(), bye=bye_id)

    iu, ju, weights, white_is_i = _candidate_edges(
        active, config, round_no, total_rounds
    )
    if rng_seed is not None:
        perm = np.random.default_rng(rng_seed).permutation(len(weights))
        iu, ju, weights, white_is_i = (
            iu[perm],
            ju[perm],
            weights[perm],
            white_is_i[perm],
        )

    mate = [-1] * len(active)
    if len(weights):
        boost = (len(active) // 2) * int(weights.max()) + 1
        mate = matching._solve(
            len(active),
            iu.tolist(),
            ju.tolist(),
            (weights + boost).tolist(),
        )
    unmatched = [active[i].player_id for i, m in enumerate(mate) if m == -1]
    if unmatched:
        raise PairingInfeasibleError(
            f"no legal full pairing in round {round_no}: "
            f"{len(unmatched)} players unmatched",
            unmatched=unmatched,
        )

    boards = []
    for i, m in enumerate(mate):
        if m > i:
            white_id, black_id = assign_colours(active[i], active[m])
            boards.append((white_id, black_id))
    by_id = {p.player_id: p for p in active}
    boards.sort(
        key=lambda b: (
            -max(by_id[b[0]].score, by_id[b[1]].score),
            -min(by_id[b[0]].score, by_id[b[1]].score),
            str(b[0]),
        )
    )
    return RoundPairing(boards=tuple(boards), bye=bye_id)
