"""Crosstable parsing, cleaning, and descriptive statistics.

Input format (one tournament per file, '#' starts a comment):

    tournament <id> rounds <N>
    player <id> <rating|-> <round-1> <round-2> ... <round-N>

Each round token is one of
    <opponent>:<W|B>:<1|=|0>   a played game (colour and result for this row)
    H                          half-point bye
    -                          unplayed / absent
    any other single letter    preserved as an annotation code

A player is *valid* when they hold a rating, played every round over the
board, and faced only rated opponents; everyone else is dropped in one
cleaning pass.  Valid players become the shared analysis records, centred
on the mean rating of the valid players.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ratings import BLACK, WHITE, GameSlot, elo_centered, expected_points
from .records import DELTA_GRID, PlayerRecord


class CrosstableError(Exception):
    """Malformed or inconsistent crosstable input."""


_RESULT_POINTS = {"1": 1.0, "=": 0.5, "0": 0.0}
_RECIPROCAL_RESULT = {"1": "0", "=": "=", "0": "1"}
_GAME_TOKEN = re.compile(r"^(?P<opp>[^:\s]+):(?P<colour>[WB]):(?P<result>[1=0])$")


@dataclass(frozen=True)
class RoundEntry:
    kind: str  # "game" | "bye" | "unplayed" | "annotation"
    opponent: str | None = None
    colour: str | None = None
    result: str | None = None
    code: str | None = None


@dataclass
class RawPlayerRow:
    player_id: str
    rating: float | None
    entries: list
    line_no: int


@dataclass
class RawCrosstable:
    tournament_id: str
    rounds: int
    players: list


def _parse_round_token(token: str, line_no: int) -> RoundEntry:
    if token == "-":
        return RoundEntry(kind="unplayed")
    if token == "H":
        return RoundEntry(kind="bye")
    match = _GAME_TOKEN.match(token)
    if match:
        return RoundEntry(
            kind="game",
            opponent=match.group("opp"),
            colour=match.group("colour"),
            result=match.group("result"),
        )
    if re.fullmatch(r"[A-Za-z]", token):
        return RoundEntry(kind="annotation", code=token)
    raise CrosstableError(f"line {line_no}: unrecognised round token {token!r}")


def parse_crosstable(source) -> RawCrosstable:
    """Parse a crosstable file (path or open text file) losslessly.

    Validates structure and reciprocity: every game must appear in both
    players' rows with opposite colours and complementary results.
    """
    if hasattr(source, "read"):
        lines = source.read().splitlines()
        name = getattr(source, "name", "<stream>")
    else:
        with open(source) as fh:
            lines = fh.read().splitlines()
        name = str(source)

    tournament_id = None
    rounds = None
    players = []
    for line_no, raw_line in enumerate(lines, start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "tournament":
            if tournament_id is not None:
                raise CrosstableError(f"line {line_no}: duplicate tournament header")
            if len(tokens) != 4 or tokens[2] != "rounds":
                raise CrosstableError(
                    f"line {line_no}: expected 'tournament <id> rounds <N>'"
                )
            tournament_id = tokens[1]
            try:
                rounds = int(tokens[3])
            except ValueError:
                raise CrosstableError(
                    f"line {line_no}: round count {tokens[3]!r} is not an integer"
                ) from None
            if rounds < 1:
                raise CrosstableError(f"line {line_no}: rounds must be positive")
        elif tokens[0] == "player":
            if rounds is None:
                raise CrosstableError(
                    f"line {line_no}: player line before tournament header"
                )
            if len(tokens) != 3 + rounds:
                raise CrosstableError(
                    f"line {line_no}: expected {rounds} round entries, "
                    f"got {len(tokens) - 3}"
                )
            player_id = tokens[1]
            if tokens[2] == "-":
                rating = None
            else:
                try:
                    rating = float(tokens[2])
                except ValueError:
                    raise CrosstableError(
                        f"line {line_no}: rating {tokens[2]!r} is not a number"
                    ) from None
                if rating <= 0:
                    raise CrosstableError(f"line {line_no}: rating must be positive")
            entries = [_parse_round_token(t, line_no) for t in tokens[3:]]
            players.append(RawPlayerRow(player_id, rating, entries, line_no))
        else:
            raise CrosstableError(f"line {line_no}: unknown line kind {tokens[0]!r}")

    if tournament_id is None:
        raise CrosstableError(f"{name}: missing tournament header")
    if not players:
        raise CrosstableError(f"{name}: no player rows")

    by_id = {}
    for row in players:
        if row.player_id in by_id:
            raise CrosstableError(
                f"line {row.line_no}: duplicate player id {row.player_id!r}"
            )
        by_id[row.player_id] = row

    # Reciprocity: both rows of a board must tell the same story.
    for row in players:
        for round_idx, entry in enumerate(row.entries):
            if entry.kind != "game":
                continue
            other = by_id.get(entry.opponent)
            if other is None:
                raise CrosstableError(
                    f"line {row.line_no}: round {round_idx + 1} opponent "
                    f"{entry.opponent!r} has no player row"
                )
            mirror = other.entries[round_idx]
            problem = None
            if mirror.kind != "game" or mirror.opponent != row.player_id:
                problem = "opponent's row does not list this game"
            elif mirror.colour == entry.colour:
                problem = f"both rows claim colour {entry.colour}"
            elif mirror.result != _RECIPROCAL_RESULT[entry.result]:
                problem = (
                    f"results disagree ({entry.result} vs {mirror.result})"
                )
            if problem:
                raise CrosstableError(
                    f"round {round_idx + 1}, players {row.player_id!r} "
                    f"(line {row.line_no}) and {other.player_id!r} "
                    f"(line {other.line_no}): {problem}"
                )
    return RawCrosstable(tournament_id=tournament_id, rounds=rounds, players=players)


def clean(raw: RawCrosstable) -> list:
    """Apply the validity rules in one pass and build analysis records.

    Drops players without a rating, with any non-game round (bye,
    unplayed, annotation), or with at least one unrated opponent.
    Opponents of dropped-but-rated players are kept; only unrated
    opponents disqualify.
    """
    rating_of = {row.player_id: row.rating for row in raw.players}

    def is_valid(row) -> bool:
        if row.rating is None:
            return False
        if len(row.entries) != raw.rounds:
            return False
        for entry in row.entries:
            if entry.kind != "game":
                return False
            if rating_of.get(entry.opponent) is None:
                return False
        return True

    valid_rows = [row for row in raw.players if is_valid(row)]
    if not valid_rows:
        raise CrosstableError(
            f"tournament {raw.tournament_id!r}: no valid players after cleaning"
        )
    mean_rating = sum(row.rating for row in valid_rows) / len(valid_rows)

    records = []
    for row in valid_rows:
        points = sum(_RESULT_POINTS[e.result] for e in row.entries)
        schedule = [
            GameSlot(rating_of[e.opponent], WHITE if e.colour == WHITE else BLACK)
            for e in row.entries
        ]
        n_white = sum(1 for e in row.entries if e.colour == WHITE)
        n_black = raw.rounds - n_white
        expected = {
            d: expected_points(schedule, row.rating, d) for d in DELTA_GRID
        }
        records.append(
            PlayerRecord(
                tournament_id=raw.tournament_id,
                player_id=row.player_id,
                elo=row.rating,
                elo_centered=elo_centered(row.rating, mean_rating),
                points=points,
                expected_points_at=expected,
                surprise_points_at={d: points - expected[d] for d in DELTA_GRID},
                extra_white=int(n_white > n_black),
                n_white=n_white,
                n_black=n_black,
            )
        )
    return records


def descriptive_stats(players, total_count: int | None = None) -> dict:
    """Field summary over valid players (population standard deviation)."""
    if not players:
        raise ValueError("no players to summarise")
    ratings = [p.elo for p in players]
    n = len(ratings)
    mean = sum(ratings) / n
    variance = sum((r - mean) ** 2 for r in ratings) / n
    return {
        "count": total_count if total_count is not None else n,
        "valid_count": n,
        "mean": mean,
        "sd": variance**0.5,
        "min": min(ratings),
        "max": max(ratings),
        "white_share": sum(p.extra_white for p in players) / n,
    }
