"""Parameter-family sweeps, detection-threshold bisection and random audits.

Report rows follow the fixed column order
family,parameter,criterion,statistic,threshold,verdict with numbers rendered
to 12 significant digits; identical seeds and grids give byte-identical
output.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .criteria import CRITERIA, TOL, Verdict, applicable_criteria, evaluate
from .errors import NoCrossingError, OutOfRangeError
from .linalg import BipartiteDims
from .states import (
    PureState,
    bell_diagonal,
    pure_state,
    pure_to_density,
    random_mixed,
    random_pure,
    random_separable,
    rho_p_family,
    werner,
)

FAMILIES = ("werner", "rho_p", "bell_diagonal", "pure_schmidt_angle")

_FAMILY_RANGE = {
    "werner": (0.0, 1.0),
    "rho_p": (0.0, 1.0),
    "bell_diagonal": (0.0, 1.0),
    "pure_schmidt_angle": (0.0, np.pi / 4),
}


def family_state(family: str, x: float):
    """State at one point of a one-parameter family.

    werner(x): x |psi+><psi+| + (1-x)/4 I.
    rho_p(x): x |00><00| + (1-x) |psi+><psi+|.
    bell_diagonal(x): correlation diag(1, 2x-1, 1-2x), the segment between
    two Bell vertices of the tetrahedron; zero Bloch vectors throughout.
    pure_schmidt_angle(x): cos(x)|00> + sin(x)|11> (a PureState).
    """
    if family not in FAMILIES:
        raise OutOfRangeError(f"unknown family {family!r}; known: {list(FAMILIES)}")
    lo, hi = _FAMILY_RANGE[family]
    if not lo <= x <= hi:
        raise OutOfRangeError(f"{family} parameter {x!r} outside [{lo}, {hi:.6g}]")
    if family == "werner":
        return werner(x)
    if family == "rho_p":
        return rho_p_family(x)
    if family == "bell_diagonal":
        return bell_diagonal(np.array([1.0, 2.0 * x - 1.0, 1.0 - 2.0 * x]))
    vec = np.zeros(4, dtype=complex)
    vec[0] = np.cos(x)
    vec[3] = np.sin(x)
    return pure_state(vec, BipartiteDims(2, 2))


@dataclass(frozen=True)
class FamilySpec:
    """A family id plus its parameter grid (either explicit or linspace)."""

    family: str
    values: tuple = ()
    start: float = 0.0
    stop: float = 1.0
    steps: int = 0

    def grid(self) -> np.ndarray:
        if self.family not in FAMILIES:
            raise OutOfRangeError(f"unknown family {self.family!r}")
        if self.values:
            g = np.asarray(self.values, dtype=float)
        else:
            if self.steps < 1:
                raise OutOfRangeError("grid needs explicit values or steps >= 1")
            g = np.linspace(self.start, self.stop, self.steps)
        lo, hi = _FAMILY_RANGE[self.family]
        if g.size and (g.min() < lo or g.max() > hi):
            raise OutOfRangeError(
                f"{self.family} grid [{g.min()}, {g.max()}] outside [{lo}, {hi:.6g}]"
            )
        return g


@dataclass(frozen=True)
class SweepRow:
    family: str
    parameter: float
    criterion: str
    statistic: float
    threshold: float
    verdict: Verdict


@dataclass(frozen=True)
class SweepReport:
    rows: tuple
    thresholds: dict = field(default_factory=dict)  # criterion -> estimated p*


def _resolve_criteria(names, dims: BipartiteDims, pure: bool) -> list[str]:
    available = applicable_criteria(dims, pure)
    if names is None:
        return available
    requested = list(names)
    unknown = [n for n in requested if n not in CRITERIA]
    if unknown:
        raise OutOfRangeError(f"unknown criteria {unknown}; known: {sorted(CRITERIA)}")
    inapplicable = [n for n in requested if n not in available]
    if inapplicable:
        raise OutOfRangeError(
            f"criteria {inapplicable} not applicable to this family "
            f"(dims {tuple(dims)}, pure={pure})"
        )
    return requested


def sweep(spec: FamilySpec, criteria=None, tol: float = TOL, seed: int = 0) -> SweepReport:
    """Evaluate criteria over a family grid; deterministic given the seed.

    For the pure family every registered criterion applies (mixed-state tests
    see the projector); for mixed families pure-only criteria are rejected.
    """
    grid = spec.grid()
    pure = spec.family == "pure_schmidt_angle"
    names = _resolve_criteria(criteria, BipartiteDims(2, 2), pure)
    rows = []
    for x in grid:
        state = family_state(spec.family, float(x))
        for name in names:
            v = evaluate(name, state, tol=tol, seed=seed)
            rows.append(SweepRow(spec.family, float(x), name, v.statistic,
                                 v.threshold, v.verdict))
    rows.sort(key=lambda r: (r.family, r.parameter, r.criterion))
    thresholds = {}
    for name in names:
        flags = [(r.parameter, r.verdict == Verdict.ENTANGLED)
                 for r in rows if r.criterion == name]
        flips = [(p0, p1) for (p0, f0), (p1, f1) in zip(flags, flags[1:]) if f0 != f1]
        if len(flips) == 1:
            thresholds[name] = 0.5 * (flips[0][0] + flips[0][1])
    return SweepReport(tuple(rows), thresholds)


def render_report(report: SweepReport) -> str:
    lines = ["family,parameter,criterion,statistic,threshold,verdict"]
    for r in report.rows:
        lines.append(
            f"{r.family},{r.parameter:.12g},{r.criterion},"
            f"{r.statistic:.12g},{r.threshold:.12g},{r.verdict.value}"
        )
    return "\n".join(lines) + "\n"


def threshold_bisect(family: str, criterion: str, tol_p: float = 1e-6,
                     lo: float | None = None, hi: float | None = None,
                     tol: float = TOL, seed: int = 0) -> float:
    """Bisect the Entangled / not-Entangled boundary of a monotone family.

    The caller asserts the verdict is monotone in the parameter between the
    endpoints; identical endpoint verdicts raise NoCrossingError.
    """
    if family not in FAMILIES:
        raise OutOfRangeError(f"unknown family {family!r}")
    if criterion not in CRITERIA:
        raise OutOfRangeError(f"unknown criterion {criterion!r}")
    f_lo, f_hi = _FAMILY_RANGE[family]
    a = f_lo if lo is None else lo
    b = f_hi if hi is None else hi

    def entangled(x: float) -> bool:
        state = family_state(family, x)
        return evaluate(criterion, state, tol=tol, seed=seed).verdict == Verdict.ENTANGLED

    ea, eb = entangled(a), entangled(b)
    if ea == eb:
        raise NoCrossingError(
            f"{criterion} verdict is the same at both endpoints "
            f"({a:.6g} and {b:.6g}) of family {family!r}"
        )
    while b - a > tol_p:
        mid = 0.5 * (a + b)
        if entangled(mid) == ea:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)


@dataclass(frozen=True)
class AuditCounts:
    criterion: str
    true_positive: int = 0
    false_positive: int = 0
    true_negative: int = 0
    false_negative: int = 0

    @property
    def agreement(self) -> float:
        total = (self.true_positive + self.false_positive
                 + self.true_negative + self.false_negative)
        return (self.true_positive + self.true_negative) / total if total else 0.0


@dataclass(frozen=True)
class AuditSummary:
    generator: str
    n: int
    counts: dict  # criterion -> AuditCounts


def audit(n: int, seed: int, generator: str = "separable",
          dims: BipartiteDims = BipartiteDims(2, 2), terms: int = 8,
          tol: float = TOL) -> AuditSummary:
    """Randomized audit against the partial-transpose oracle.

    generator "separable": every Entangled verdict is a false positive
    (soundness check). "mixed" / "pure": the partial-transpose verdict is
    ground truth, which is why oracle-labeled audits are refused for
    dimensions where it is not decisive.
    """
    if n < 1:
        raise OutOfRangeError(f"n must be >= 1, got {n}")
    if generator not in ("separable", "mixed", "pure"):
        raise OutOfRangeError(f"unknown generator {generator!r}")
    dims = BipartiteDims(*dims)
    if tuple(sorted(dims)) not in ((2, 2), (2, 3)):
        raise OutOfRangeError(
            f"audits need the exact oracle, only dims 2x2 / 2x3 are allowed, got {tuple(dims)}"
        )
    pure = generator == "pure"
    names = applicable_criteria(dims, pure)
    if generator != "separable":
        names = [name for name in names if name != "ppt"]  # ppt is the oracle
    tallies = {name: [0, 0, 0, 0] for name in names}  # tp, fp, tn, fn
    rng = np.random.default_rng(seed)
    for i in range(n):
        sub = int(rng.integers(0, 2**63 - 1))
        if generator == "separable":
            state = random_separable(dims, terms, sub)
        elif generator == "mixed":
            state = random_mixed(dims, dims.side, sub)
        else:
            state = random_pure(dims, sub)
        rho = pure_to_density(state) if isinstance(state, PureState) else state
        truth = evaluate("ppt", rho, tol=tol).verdict == Verdict.ENTANGLED
        if generator == "separable":
            truth = False
        for name in names:
            flagged = evaluate(name, state, tol=tol, seed=sub).verdict == Verdict.ENTANGLED
            t = tallies[name]
            if flagged and truth:
                t[0] += 1
            elif flagged:
                t[1] += 1
            elif not truth:
                t[2] += 1
            else:
                t[3] += 1
    counts = {
        name: AuditCounts(name, *t) for name, t in sorted(tallies.items())
    }
    return AuditSummary(generator, n, counts)


def render_audit(summary: AuditSummary) -> str:
    lines = ["criterion,true_positive,false_positive,true_negative,false_negative,agreement"]
    for name in sorted(summary.counts):
        c = summary.counts[name]
        lines.append(
            f"{name},{c.true_positive},{c.false_positive},{c.true_negative},"
            f"{c.false_negative},{c.agreement:.12g}"
        )
    return "\n".join(lines) + "\n"
