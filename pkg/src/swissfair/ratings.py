"""Elo-based scoring formulas.

Win probability with a white-advantage offset, expected points over a
schedule, surprise points, and the centred-rating transform used as the
strength covariate in every regression.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

WHITE = "W"
BLACK = "B"


@dataclass(frozen=True)
class GameSlot:
    """One game of a schedule: the opponent's rating and our colour."""

    opponent_rating: float
    colour: str

    def __post_init__(self):
        if self.colour not in (WHITE, BLACK):
            raise ValueError(f"colour must be {WHITE!r} or {BLACK!r}, got {self.colour!r}")


@dataclass(frozen=True)
class ScoreSummary:
    """Points scored, expected points, and their difference."""

    points: float
    expected_points: float

    @property
    def surprise_points(self) -> float:
        return self.points - self.expected_points


def win_probability(r_white: float, r_black: float, delta: float = 0.0) -> float:
    """Expected score of the white player against the black player.

    The white player receives a rating offset ``delta`` >= 0 representing
    the first-move advantage:

        p = 1 / (1 + 10 ** ((r_black - r_white - delta) / 400))

    Strictly increasing in ``r_white`` and ``delta``; at ``delta = 0`` the
    two colours' probabilities sum to one.
    """
    if not (math.isfinite(r_white) and math.isfinite(r_black) and math.isfinite(delta)):
        raise ValueError("ratings and delta must be finite")
    if delta < 0:
        raise ValueError("white advantage delta must be non-negative")
    return 1.0 / (1.0 + 10.0 ** ((r_black - r_white - delta) / 400.0))


def expected_points(schedule, rating: float, delta: float = 0.0) -> float:
    """Expected points of a player over their realised schedule.

    White games contribute the player's own win probability; black games
    contribute one minus the opponent's win probability (the opponent holds
    the white advantage there).  At ``delta = 0`` the two readings of the
    black-game term coincide.

    Args:
        schedule: Iterable of :class:`GameSlot`.
        rating: The player's own rating.
        delta: White-advantage offset in Elo points.
    """
    slots = list(schedule)
    if not slots:
        raise ValueError("schedule is empty: no games to evaluate")
    total = 0.0
    for slot in slots:
        if slot.colour == WHITE:
            total += win_probability(rating, slot.opponent_rating, delta)
        else:
            total += 1.0 - win_probability(slot.opponent_rating, rating, delta)
    return total


def surprise_points(points: float, expected: float) -> float:
    """Actual minus expected points; positive means over-performance."""
    return points - expected


def elo_centered(rating: float, tournament_mean: float) -> float:
    """Rating minus the tournament mean, in hundred-point units.

    The 1/100 scale keeps regression coefficients near the points-per-draw
    magnitude (100 Elo is worth roughly half a point).
    """
    return (rating - tournament_mean) / 100.0
