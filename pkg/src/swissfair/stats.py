"""Regression engine for the fairness audit.

OLS with classical standard errors, binary logistic regression fitted by
iteratively reweighted least squares, pseudo-R-squared statistics, the
classification rate at a 0.5 cut, and rank-based AUC.  Model "batteries"
bundle the predictor sets the audit runs over simulated or ingested
records: the points battery, the surprise battery across the
white-advantage grid, and threshold logistic models.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._dist import normal_two_sided, student_t_two_sided
from .records import DELTA_GRID

PREDICTORS = ("constant", "elo_centered", "expected_points", "extra_white", "elo_x_white")

# Model shapes of the points battery: six regressions of the score on
# strength, schedule and colour covariates.
POINTS_BATTERY = (
    ("constant", "elo_centered"),
    ("constant", "elo_centered", "extra_white"),
    ("constant", "elo_centered", "expected_points"),
    ("constant", "elo_centered", "expected_points", "extra_white"),
    ("constant", "elo_centered", "elo_x_white"),
    ("constant", "elo_centered", "expected_points", "elo_x_white"),
)
SURPRISE_PREDICTORS = ("constant", "elo_centered", "expected_points", "extra_white")
THRESHOLD_PREDICTORS = ("constant", "elo_centered", "expected_points", "extra_white")


class StatsError(Exception):
    pass


class RankDeficientError(StatsError):
    def __init__(self, columns):
        super().__init__(f"design is rank deficient; collinear columns: {columns}")
        self.columns = tuple(columns)


class SingleClassError(StatsError):
    pass


class SeparationError(StatsError):
    pass


class NonConvergenceError(StatsError):
    def __init__(self, trace):
        super().__init__(
            f"IRLS did not converge in {len(trace)} iterations; "
            f"last max |step| = {trace[-1]:.3e}"
        )
        self.trace = tuple(trace)


@dataclass
class DesignMatrix:
    columns: tuple
    x: np.ndarray
    y: np.ndarray
    response: str

    def __post_init__(self):
        if self.x.shape[0] != self.y.shape[0]:
            raise ValueError("x and y row counts differ")
        if len(self.columns) != self.x.shape[1]:
            raise ValueError("column names do not match x width")
        if len(set(self.columns)) != len(self.columns):
            raise ValueError("duplicate column names")
        if self.x.shape[0] <= self.x.shape[1]:
            raise ValueError("need more rows than columns")
        if not (np.isfinite(self.x).all() and np.isfinite(self.y).all()):
            raise ValueError("design contains non-finite values")


@dataclass
class LinearFit:
    columns: tuple
    coefficients: np.ndarray
    std_errors: np.ndarray
    t_stats: np.ndarray
    p_values: np.ndarray
    r_squared: float
    adj_r_squared: float
    n: int
    response: str = ""

    def coef(self, name: str) -> float:
        return float(self.coefficients[self.columns.index(name)])

    def p_value(self, name: str) -> float:
        return float(self.p_values[self.columns.index(name)])

    def std_error(self, name: str) -> float:
        return float(self.std_errors[self.columns.index(name)])


@dataclass
class LogisticFit:
    columns: tuple
    coefficients: np.ndarray
    std_errors: np.ndarray
    z_stats: np.ndarray
    p_values: np.ndarray
    log_likelihood: float
    null_log_likelihood: float
    cox_snell_r2: float
    nagelkerke_r2: float
    classification_rate_at_half: float
    auc: float
    n: int
    response: str = ""

    def coef(self, name: str) -> float:
        return float(self.coefficients[self.columns.index(name)])

    def p_value(self, name: str) -> float:
        return float(self.p_values[self.columns.index(name)])

    def std_error(self, name: str) -> float:
        return float(self.std_errors[self.columns.index(name)])


def significance_stars(p: float) -> str:
    """Legend: * p < 5%, ** p < 1%, *** p < 0.1%."""
    if p < 0.001:
        return "***"
    if p < 0.01:
        return "**"
    if p < 0.05:
        return "*"
    return ""


def outlier_filter(records, min_points: float):
    """Keep records with at least ``min_points`` points."""
    return [r for r in records if r.points >= min_points]


def default_min_points(rounds: int) -> float:
    """Outlier threshold by tournament length.

    Removes players with at most (rounds - 3) / 2 points, i.e. keeps
    scores of at least that plus half a point: 3.5 for 9 rounds, 4.5
    for 11 rounds.
    """
    if rounds < 3:
        raise ValueError("outlier rule needs at least 3 rounds")
    return (rounds - 3) / 2 + 0.5


def build_design(
    records,
    predictors,
    response="points",
    delta=0,
    threshold=None,
    expected_delta=None,
):
    """Assemble a design matrix from player records.

    ``response``: "points" (linear), "surprise" (linear, at the requested
    delta), or "threshold" (binary indicator of points >= threshold).
    ``expected_points`` predictors are taken at ``expected_delta``, which
    defaults to the response delta.  The surprise battery pins the control
    at the grid default instead: moving it with the response would fold
    the white-game count into the control and reverse the attenuation
    pattern the battery exists to measure.
    """
    records = list(records)
    if not records:
        raise ValueError("no records to build a design from")
    for name in predictors:
        if name not in PREDICTORS:
            raise ValueError(f"unknown predictor {name!r}")
    if expected_delta is None:
        expected_delta = delta
    for d in {delta, expected_delta}:
        if d not in records[0].expected_points_at:
            raise ValueError(
                f"delta {d} not on the record grid {sorted(records[0].expected_points_at)}"
            )

    n = len(records)
    cols = []
    for name in predictors:
        if name == "constant":
            cols.append(np.ones(n))
        elif name == "elo_centered":
            cols.append(np.array([r.elo_centered for r in records]))
        elif name == "expected_points":
            cols.append(
                np.array([r.expected_points_at[expected_delta] for r in records])
            )
        elif name == "extra_white":
            cols.append(np.array([float(r.extra_white) for r in records]))
        else:
            cols.append(
                np.array([r.elo_centered * r.extra_white for r in records])
            )
    x = np.column_stack(cols)

    if response == "points":
        y = np.array([r.points for r in records])
        label = "points"
    elif response == "surprise":
        y = np.array([r.surprise_points_at[delta] for r in records])
        label = f"surprise@{delta}"
    elif response == "threshold":
        if threshold is None:
            raise ValueError("threshold response requires a threshold value")
        y = np.array([1.0 if r.points >= threshold else 0.0 for r in records])
        label = f"points>={threshold:g}"
    else:
        raise ValueError(f"unknown response {response!r}")
    return DesignMatrix(columns=tuple(predictors), x=x, y=y, response=label)


def _check_full_rank(design: DesignMatrix) -> None:
    x = design.x
    rank = np.linalg.matrix_rank(x)
    if rank == x.shape[1]:
        return
    # Name the offenders: columns that do not extend an independent prefix.
    keep = []
    collinear = []
    for j, name in enumerate(design.columns):
        trial = x[:, keep + [j]]
        if np.linalg.matrix_rank(trial) > len(keep):
            keep.append(j)
        else:
            collinear.append(name)
    raise RankDeficientError(collinear)


def ols_fit(design: DesignMatrix) -> LinearFit:
    """Least squares with classical (homoskedastic) standard errors."""
    _check_full_rank(design)
    x, y = design.x, design.y
    n, k = x.shape
    beta, _, _, _ = np.linalg.lstsq(x, y, rcond=None)
    resid = y - x @ beta
    rss = float(resid @ resid)
    dof = n - k
    s2 = rss / dof
    cov = s2 * np.linalg.inv(x.T @ x)
    se = np.sqrt(np.diag(cov))
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(se > 0, beta / se, 0.0)
    p = np.array([student_t_two_sided(float(ti), dof) for ti in t])
    if "constant" in design.columns:
        tss = float(np.sum((y - y.mean()) ** 2))
    else:
        tss = float(y @ y)
    if tss == 0.0:
        r2 = adj = 0.0
    else:
        r2 = 1.0 - rss / tss
        if "constant" in design.columns:
            adj = 1.0 - (1.0 - r2) * (n - 1) / dof
        else:
            adj = 1.0 - (1.0 - r2) * n / dof
    return LinearFit(
        columns=design.columns,
        coefficients=beta,
        std_errors=se,
        t_stats=t,
        p_values=p,
        r_squared=r2,
        adj_r_squared=adj,
        n=n,
        response=design.response,
    )


def logistic_fit(
    design: DesignMatrix,
    tol: float = 1e-8,
    max_iter: int = 100,
    divergence_bound: float = 500.0,
) -> LogisticFit:
    """Maximum-likelihood logit via iteratively reweighted least squares.

    Converges when the largest coefficient change drops below ``tol``.
    Perfect separation is flagged by the divergence guard: every fitted
    probability saturating onto its label, coefficients racing past
    ``divergence_bound``, or a singular working Hessian.
    """
    _check_full_rank(design)
    x, y = design.x, design.y
    classes = np.unique(y)
    if not np.array_equal(classes, [0.0, 1.0]):
        if classes.size < 2:
            raise SingleClassError("response takes a single value")
        raise ValueError("logistic response must be coded 0/1")

    n, _ = x.shape
    beta = np.zeros(x.shape[1])
    trace = []
    converged = False
    for _ in range(max_iter):
        eta = np.clip(x @ beta, -700, 700)
        mu = 1.0 / (1.0 + np.exp(-eta))
        if np.abs(y - mu).max() < 1e-8:
            raise SeparationError(
                "fitted probabilities saturated onto the labels: "
                "perfect separation in the design"
            )
        w = np.clip(mu * (1.0 - mu), 1e-12, None)
        hessian = x.T @ (w[:, None] * x)
        gradient = x.T @ (y - mu)
        try:
            step = np.linalg.solve(hessian, gradient)
        except np.linalg.LinAlgError:
            raise SeparationError(
                "singular working Hessian: fitted probabilities saturated"
            ) from None
        beta = beta + step
        trace.append(float(np.abs(step).max()))
        if np.abs(beta).max() > divergence_bound:
            raise SeparationError(
                "coefficients diverged: perfect separation in the design"
            )
        if trace[-1] < tol:
            converged = True
            break
    if not converged:
        raise NonConvergenceError(trace)

    eta = np.clip(x @ beta, -700, 700)
    mu = 1.0 / (1.0 + np.exp(-eta))
    mu_safe = np.clip(mu, 1e-300, 1.0 - 1e-16)
    ll = float(np.sum(y * np.log(mu_safe) + (1.0 - y) * np.log1p(-mu_safe)))
    share = float(y.mean())
    ll0 = n * (share * np.log(share) + (1.0 - share) * np.log(1.0 - share))
    cox_snell = 1.0 - np.exp(2.0 * (ll0 - ll) / n)
    nagelkerke = cox_snell / (1.0 - np.exp(2.0 * ll0 / n))

    w = np.clip(mu * (1.0 - mu), 1e-12, None)
    cov = np.linalg.inv(x.T @ (w[:, None] * x))
    se = np.sqrt(np.diag(cov))
    z = beta / se
    p = np.array([normal_two_sided(float(zi)) for zi in z])
    classification = float(np.mean((mu >= 0.5) == (y == 1.0)))
    return LogisticFit(
        columns=design.columns,
        coefficients=beta,
        std_errors=se,
        z_stats=z,
        p_values=p,
        log_likelihood=ll,
        null_log_likelihood=float(ll0),
        cox_snell_r2=float(cox_snell),
        nagelkerke_r2=float(nagelkerke),
        classification_rate_at_half=classification,
        auc=auc(mu, y),
        n=n,
        response=design.response,
    )


def auc(scores, labels) -> float:
    """Probability a random positive outscores a random negative.

    Midranks handle ties (the Mann-Whitney convention): equal scores
    count as half a concordant pair.
    """
    scores = np.asarray(scores, dtype=float)
    labels = np.asarray(labels)
    pos = labels == 1
    n_pos = int(pos.sum())
    n_neg = labels.size - n_pos
    if n_pos == 0 or n_neg == 0:
        raise SingleClassError("AUC needs both classes present")
    _, inverse, counts = np.unique(scores, return_inverse=True, return_counts=True)
    cum = np.cumsum(counts)
    midranks = cum[inverse] - (counts[inverse] - 1) / 2.0
    rank_sum = float(midranks[pos].sum())
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def points_battery(records, delta=0):
    """The six points regressions, in battery order."""
    return [
        ols_fit(build_design(records, predictors, response="points", delta=delta))
        for predictors in POINTS_BATTERY
    ]


def surprise_battery(records, deltas=DELTA_GRID):
    """Surprise-point regressions across the white-advantage grid.

    The response moves along the grid; the expected-points control stays
    at the grid default (delta 0), mirroring the points battery.
    """
    return {
        d: ols_fit(
            build_design(
                records,
                SURPRISE_PREDICTORS,
                response="surprise",
                delta=d,
                expected_delta=0,
            )
        )
        for d in deltas
    }


def threshold_battery(records, thresholds, delta=0):
    """Logistic models of reaching each points threshold."""
    return {
        t: logistic_fit(
            build_design(
                records,
                THRESHOLD_PREDICTORS,
                response="threshold",
                delta=delta,
                threshold=t,
            )
        )
        for t in thresholds
    }


def elo_equivalent(fit) -> float:
    """Extra-white effect expressed in Elo points.

    Ratio of the extra-white coefficient to the per-100-Elo strength
    coefficient, times 100.
    """
    return fit.coef("extra_white") / fit.coef("elo_centered") * 100.0
