"""Swiss-system chess tournament toolkit.

Constraint-respecting round pairing via maximum-weight matching, Monte
Carlo tournament simulation under an Elo outcome model with a
white-advantage parameter, and a regression pipeline for auditing
colour-assignment fairness.
"""

__version__ = "0.1.0"
