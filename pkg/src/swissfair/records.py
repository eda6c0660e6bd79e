"""Per-player analysis records and their CSV schema.

One record per (tournament, player): points, expected and surprise points
over the white-advantage grid, the extra-white dummy, and colour counts.
The CSV layout is shared by the simulator (writer) and the audit pipeline
(reader), and matches what crosstable ingestion produces.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

# Grid of white-advantage values (Elo points) carried by every record.
DELTA_GRID = (0, 10, 20, 30, 40, 50)

CSV_COLUMNS = (
    "tournament_id",
    "player_id",
    "elo",
    "elo_centered",
    "points",
    *(f"expected_points_d{d}" for d in DELTA_GRID),
    *(f"surprise_d{d}" for d in DELTA_GRID),
    "extra_white",
    "n_white",
    "n_black",
)


@dataclass
class PlayerRecord:
    tournament_id: str
    player_id: str
    elo: float
    elo_centered: float
    points: float
    expected_points_at: dict
    surprise_points_at: dict
    extra_white: int
    n_white: int
    n_black: int


class RecordSchemaError(Exception):
    """CSV does not conform to the shared record schema."""


def write_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow(
                [
                    r.tournament_id,
                    r.player_id,
                    repr(r.elo),
                    repr(r.elo_centered),
                    repr(r.points),
                    *(repr(r.expected_points_at[d]) for d in DELTA_GRID),
                    *(repr(r.surprise_points_at[d]) for d in DELTA_GRID),
                    r.extra_white,
                    r.n_white,
                    r.n_black,
                ]
            )


def read_csv(path) -> list:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise RecordSchemaError(f"{path}: empty file") from None
        if tuple(header) != CSV_COLUMNS:
            raise RecordSchemaError(
                f"{path}: header mismatch, expected {','.join(CSV_COLUMNS)}"
            )
        records = []
        for line_no, row in enumerate(reader, start=2):
            if len(row) != len(CSV_COLUMNS):
                raise RecordSchemaError(f"{path}:{line_no}: wrong field count")
            try:
                records.append(
                    PlayerRecord(
                        tournament_id=row[0],
                        player_id=row[1],
                        elo=float(row[2]),
                        elo_centered=float(row[3]),
                        points=float(row[4]),
                        expected_points_at={
                            d: float(row[5 + i]) for i, d in enumerate(DELTA_GRID)
                        },
                        surprise_points_at={
                            d: float(row[5 + len(DELTA_GRID) + i])
                            for i, d in enumerate(DELTA_GRID)
                        },
                        extra_white=int(row[5 + 2 * len(DELTA_GRID)]),
                        n_white=int(row[6 + 2 * len(DELTA_GRID)]),
                        n_black=int(row[7 + 2 * len(DELTA_GRID)]),
                    )
                )
            except ValueError as exc:
                raise RecordSchemaError(f"{path}:{line_no}: {exc}") from None
    return records
