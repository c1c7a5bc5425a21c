"""Parameter sweeps, random sampling, and the entropy-vs-deviation harness.

Three layers live here:

* grid sweeps of two- and four-dimensional Gram families with closed-form or
  spectral entropies (``scan_d2`` / ``scan_d4``),
* seeded random generators for states and unit-trace PSD matrices,
* the harness that probes whether positive deviation forces an entropy gap
  (``verify_conjecture``), backed by a penalty-method entropy maximizer over
  the Cholesky-factor parametrization (``maximize_entropy``).

Everything is deterministic per seed: child RNG streams are split from the
master seed by index, so reports are bit-identical across reruns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import numerics
from .entangle import (
    D2Params,
    d2_closed_form,
    deviation_from_entries,
    entropy_from_eigenvalues,
    max_deviation,
)
from .errors import (
    InfeasibleConstraint,
    InvalidInput,
    UnknownFamily,
)
from .gram import GramMatrix, check_g4_membership, gram_from_entries
from .serialize import format_float
from .state import PureState, make_state

__all__ = [
    "GridAxis",
    "ScanGrid",
    "ScanRecord",
    "ScanResult",
    "scan_d2",
    "scan_d4",
    "scan_to_csv",
    "scan_to_json",
    "FAMILIES",
    "FAMILY_SWEPT",
    "DEFAULT_SIGMA2_FIXED",
    "random_state",
    "random_gram",
    "MaximizeResult",
    "maximize_entropy",
    "VerifyReport",
    "verify_conjecture",
    "verify_report_to_json",
]

D4_DIAGONAL = 0.25  # every four-dimensional family keeps this diagonal

# --- grids -------------------------------------------------------------------


@dataclass(frozen=True)
class GridAxis:
    """One swept parameter: ``count`` evenly spaced values in [lo, hi]."""

    name: str
    lo: float
    hi: float
    count: int

    def __post_init__(self):
        if self.count < 2:
            raise InvalidInput(
                "grid", f"axis '{self.name}' needs at least 2 points, got {self.count}"
            )
        if not (self.lo < self.hi):
            raise InvalidInput(
                "grid", f"axis '{self.name}' needs lo < hi, got [{self.lo}, {self.hi}]"
            )

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.count)


@dataclass(frozen=True)
class ScanGrid:
    """Axes swept in row-major order plus values for held parameters."""

    axes: tuple[GridAxis, ...]
    fixed: dict = field(default_factory=dict)

    def __post_init__(self):
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise InvalidInput("grid", f"duplicate axis names in {names}")

    @property
    def point_count(self) -> int:
        n = 1
        for axis in self.axes:
            n *= axis.count
        return n


@dataclass(frozen=True)
class ScanRecord:
    """One grid point: parameter values, feasibility, entropy, deviation.

    ``entropy`` is None exactly when the point is infeasible; the deviation is
    defined for any Hermitian candidate and is always present.
    """

    params: dict
    feasible: bool
    entropy: float | None
    deviation: float


@dataclass(frozen=True)
class ScanResult:
    d: int
    family: str | None
    base: str
    grid: ScanGrid
    records: tuple[ScanRecord, ...]

    def feasible_max(self) -> ScanRecord | None:
        """Record with the largest entropy, or None if nothing is feasible."""
        best = None
        for rec in self.records:
            if rec.feasible and (best is None or rec.entropy > best.entropy):
                best = rec
        return best


def scan_d2(grid: ScanGrid, base: str = "e") -> ScanResult:
    """Sweep the two-dimensional family [[p, s], [s, 1-p]] over a (p, s) grid.

    Entropies come from the closed-form eigenvalue pair; points with
    ``s^2 > p(1-p)`` (beyond roundoff slack) are infeasible and carry no
    entropy.  Axes must be named ``p`` and ``sigma`` in that order.
    """
    names = tuple(axis.name for axis in grid.axes)
    if names != ("p", "sigma"):
        raise InvalidInput("grid", f"two-dim scan needs axes ('p', 'sigma'), got {names}")
    log_div = math.log(2.0) if base == "2" else 1.0
    records = []
    for p in grid.axes[0].values():
        p = float(p)
        for s in grid.axes[1].values():
            s = float(s)
            feasible = s * s <= p * (1.0 - p) + numerics.TOL_FEASIBLE
            dev = math.sqrt(2.0 * (p - 0.5) ** 2 + s * s)
            if feasible:
                pair = d2_closed_form(D2Params(p=p, sigma=s))
                ent = entropy_from_eigenvalues(pair) / log_div
            else:
                ent = None
            records.append(
                ScanRecord(
                    params={"p": p, "sigma": s},
                    feasible=feasible,
                    entropy=ent,
                    deviation=dev,
                )
            )
    return ScanResult(d=2, family=None, base=base, grid=grid, records=tuple(records))


# Family placement masks: which strict-upper-triangle positions carry which
# swept parameter (0-based row/column indices; value k means "sigma{k+1}").
FAMILIES: dict[str, dict[tuple[int, int], int]] = {
    "A": {(0, 1): 0, (0, 2): 1, (0, 3): 2},
    "B": {(0, 1): 0, (1, 2): 1, (2, 3): 2},
    "C": {(0, 1): 0, (2, 3): 0, (0, 2): 1, (1, 3): 1, (0, 3): 2, (1, 2): 2},
    "D": {(0, 1): 0, (0, 2): 1, (0, 3): 2, (1, 2): 0, (1, 3): 1, (2, 3): 2},
    "E": {(0, 1): 0},
    "F": {(0, 1): 0, (0, 2): 1, (0, 3): 2},  # like A, with sigma2 held fixed
}

FAMILY_SWEPT = {
    "A": ("sigma1", "sigma2", "sigma3"),
    "B": ("sigma1", "sigma2", "sigma3"),
    "C": ("sigma1", "sigma2", "sigma3"),
    "D": ("sigma1", "sigma2", "sigma3"),
    "E": ("sigma1",),
    "F": ("sigma1", "sigma3"),
}

DEFAULT_SIGMA2_FIXED = 0.1
"""Held value of sigma2 for family F when the grid does not override it."""


def _family_entries(family: str, sigmas: tuple[float, float, float]) -> np.ndarray:
    m = np.eye(4, dtype=np.complex128) * D4_DIAGONAL
    for (i, j), k in FAMILIES[family].items():
        m[i, j] = sigmas[k]
        m[j, i] = np.conj(m[i, j])
    return m


def scan_d4(grid: ScanGrid, family: str, base: str = "e") -> ScanResult:
    """Sweep a four-dimensional family with the diagonal pinned at 1/4.

    Families place the swept parameters on fixed off-diagonal positions:

    * ``A``: sigma1, sigma2, sigma3 across the first row;
    * ``B``: sigma1, sigma2, sigma3 down the superdiagonal;
    * ``C``: each sigma on a complementary position pair;
    * ``D``: all six off-diagonal slots filled (sigma1, sigma2, sigma3 twice,
      row-major);
    * ``E``: sigma1 only, at position (1, 2);
    * ``F``: family A's mask with sigma2 held at ``fixed['sigma2']``
      (default ``DEFAULT_SIGMA2_FIXED``).

    Feasibility per point comes from the full 15-minor membership check;
    infeasible points carry no entropy, but are recorded.
    """
    if family not in FAMILIES:
        raise UnknownFamily(
            f"family {family!r} not in {sorted(FAMILIES)}"
        )
    swept = FAMILY_SWEPT[family]
    names = tuple(axis.name for axis in grid.axes)
    if names != swept:
        raise InvalidInput(
            "grid", f"family {family} sweeps axes {swept}, got {names}"
        )
    log_div = math.log(2.0) if base == "2" else 1.0

    sigma2_fixed = float(grid.fixed.get("sigma2", DEFAULT_SIGMA2_FIXED))

    value_lists = [axis.values() for axis in grid.axes]
    combos = []
    entries_list = []
    for values in product(*value_lists):
        values = tuple(float(v) for v in values)
        if family == "E":
            sigmas = (values[0], 0.0, 0.0)
        elif family == "F":
            sigmas = (values[0], sigma2_fixed, values[1])
        else:
            sigmas = values
        combos.append(sigmas)
        entries_list.append(_family_entries(family, sigmas))

    records = []
    feasible_mask = [
        check_g4_membership(entries, minors="all").is_member for entries in entries_list
    ]
    stack = np.array(entries_list)
    feasible_idx = [i for i, ok in enumerate(feasible_mask) if ok]
    entropies: dict[int, float] = {}
    if feasible_idx:
        eigs = numerics.eigenvalues_batch(stack[feasible_idx])
        clipped = np.maximum(eigs, 0.0)
        safe = np.where(clipped > numerics.TOL_ZERO_EIG, clipped, 1.0)
        ent = -np.sum(clipped * np.log(safe), axis=1) / log_div
        entropies = dict(zip(feasible_idx, ent))
    for i, sigmas in enumerate(combos):
        records.append(
            ScanRecord(
                params={
                    "p": D4_DIAGONAL,
                    "sigma1": sigmas[0],
                    "sigma2": sigmas[1],
                    "sigma3": sigmas[2],
                },
                feasible=feasible_mask[i],
                entropy=float(entropies[i]) if feasible_mask[i] else None,
                deviation=deviation_from_entries(stack[i]),
            )
        )
    return ScanResult(d=4, family=family, base=base, grid=grid, records=tuple(records))


# --- scan serialization ------------------------------------------------------


_CSV_HEADERS = {
    2: "p,sigma,feasible,entropy,deviation",
    4: "family,p,sigma1,sigma2,sigma3,feasible,entropy,deviation",
}


def scan_to_csv(result: ScanResult) -> str:
    """CSV text with the pinned header for the scan's dimension."""
    lines = [_CSV_HEADERS[result.d]]
    for rec in result.records:
        ent = "" if rec.entropy is None else format_float(rec.entropy)
        feas = "true" if rec.feasible else "false"
        dev = format_float(rec.deviation)
        if result.d == 2:
            lines.append(
                f"{format_float(rec.params['p'])},{format_float(rec.params['sigma'])},"
                f"{feas},{ent},{dev}"
            )
        else:
            lines.append(
                f"{result.family},{format_float(rec.params['p'])},"
                f"{format_float(rec.params['sigma1'])},"
                f"{format_float(rec.params['sigma2'])},"
                f"{format_float(rec.params['sigma3'])},"
                f"{feas},{ent},{dev}"
            )
    return "\n".join(lines) + "\n"


def scan_to_json(result: ScanResult) -> dict:
    return {
        "d": result.d,
        "family": result.family,
        "base": result.base,
        "axes": [
            {"name": a.name, "lo": a.lo, "hi": a.hi, "count": a.count}
            for a in result.grid.axes
        ],
        "fixed": {k: float(v) for k, v in sorted(result.grid.fixed.items())},
        "records": [
            {
                **{k: float(v) for k, v in rec.params.items()},
                "feasible": rec.feasible,
                "entropy": rec.entropy,
                "deviation": rec.deviation,
            }
            for rec in result.records
        ],
    }


# --- random sampling ---------------------------------------------------------


def random_state(d: int, trunc_dim: int, seed) -> PureState:
    """Unit-norm state with independent complex Gaussian coefficients.

    The distribution is invariant under rotations of either factor, so these
    draws probe no preferred basis.
    """
    rng = np.random.default_rng(seed)
    coeffs = (
        rng.standard_normal((d, trunc_dim)) + 1j * rng.standard_normal((d, trunc_dim))
    ) / math.sqrt(2.0)
    return make_state(d, trunc_dim, coeffs, normalize=True)


def _random_gram_entries(d: int, rng: np.random.Generator, mode: str) -> np.ndarray:
    lower = np.tril(
        (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)))
        / math.sqrt(2.0)
    )
    if mode == "boundary-biased":
        lower[int(rng.integers(d)), :] *= 0.0  # kill one pivot row: rank <= d-1
    g = lower @ lower.conj().T
    trace = float(np.trace(g).real)
    if trace < numerics.TOL_ZERO_STATE:
        # Astronomically unlikely; redraw deterministically from the same stream.
        return _random_gram_entries(d, rng, mode)
    g = g / trace
    return (g + g.conj().T) / 2.0


def random_gram(d: int, seed, mode: str = "interior") -> GramMatrix:
    """Unit-trace PSD matrix from a Gaussian lower-triangular factor.

    ``mode="interior"`` draws are almost surely full rank;
    ``mode="boundary-biased"`` zeroes one random factor row, which forces
    rank <= d-1 (a boundary point of the PSD cone).
    """
    if mode not in ("interior", "boundary-biased"):
        raise InvalidInput("mode", f"expected 'interior' or 'boundary-biased', got {mode!r}")
    if d < 1:
        raise InvalidInput("d", f"dimension must be positive, got {d}")
    rng = np.random.default_rng(seed)
    return gram_from_entries(_random_gram_entries(d, rng, mode))


# --- entropy maximization under a deviation floor ----------------------------

PENALTY_START = 10.0
PENALTY_CAP = 1e6
PENALTY_MARGIN = 1e-5     # aim slightly past the floor so the bias stays inside
STOP_IMPROVEMENT = 1e-12  # ascent stops once a step gains less than this
MAX_OPT_ITERS = 10_000    # per ascent stage
FD_STEP = 1e-5            # central-difference step on factor parameters


def _theta_dim(d: int) -> int:
    return d + d * (d - 1)  # real diagonal + complex strict lower triangle


def _theta_to_entries(theta: np.ndarray, d: int) -> np.ndarray:
    """Map a real parameter vector to a unit-trace PSD matrix via B B^H."""
    lower = np.zeros((d, d), dtype=np.complex128)
    lower[np.arange(d), np.arange(d)] = theta[:d]
    k = d
    for i in range(1, d):
        for j in range(i):
            lower[i, j] = theta[k] + 1j * theta[k + 1]
            k += 2
    g = lower @ lower.conj().T
    trace = float(np.trace(g).real)
    if trace < 1e-30:
        return np.eye(d, dtype=np.complex128) / d
    g = g / trace
    return (g + g.conj().T) / 2.0


def _batch_objective(
    thetas: np.ndarray, d: int, epsilon: float, mu: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Penalized entropy for a stack of parameter vectors.

    Returns (objective, entropy, deviation) arrays.  The penalty pushes the
    deviation to at least ``epsilon + PENALTY_MARGIN`` so that the converged
    point clears the floor itself despite the penalty method's inward bias.
    """
    stack = np.array([_theta_to_entries(t, d) for t in thetas])
    eigs = numerics.eigenvalues_batch(stack)
    clipped = np.maximum(eigs, 0.0)
    safe = np.where(clipped > numerics.TOL_ZERO_EIG, clipped, 1.0)
    ent = -np.sum(clipped * np.log(safe), axis=1)
    target = np.eye(d) / d
    iu = np.triu_indices(d)
    diff = stack - target
    dev = np.sqrt(np.sum(np.abs(diff[:, iu[0], iu[1]]) ** 2, axis=1))
    if epsilon > 0.0:
        shortfall = np.maximum(0.0, (epsilon + PENALTY_MARGIN) - dev)
        obj = ent - mu * shortfall**2
    else:
        obj = ent.copy()
    return obj, ent, dev


def _ascend(
    theta: np.ndarray, d: int, epsilon: float, mu: float, step: float
) -> tuple[np.ndarray, float, int]:
    """Gradient ascent with central differences and an adaptive step.

    Stops when one full iteration improves the objective by less than
    ``STOP_IMPROVEMENT`` or after ``MAX_OPT_ITERS`` iterations.  Returns the
    final parameters, the last step size (reused on warm restarts), and the
    iteration count.
    """
    n = theta.size
    value = _batch_objective(theta[None, :], d, epsilon, mu)[0][0]
    iters = 0
    while iters < MAX_OPT_ITERS:
        iters += 1
        probes = np.repeat(theta[None, :], 2 * n, axis=0)
        for k in range(n):
            probes[2 * k, k] += FD_STEP
            probes[2 * k + 1, k] -= FD_STEP
        vals = _batch_objective(probes, d, epsilon, mu)[0]
        grad = (vals[0::2] - vals[1::2]) / (2.0 * FD_STEP)
        gnorm = float(np.sqrt(np.sum(grad**2)))
        if gnorm == 0.0:
            break
        direction = grad / gnorm
        improved = False
        alpha = step
        # Try the current step; shrink until something improves.
        while alpha > 1e-14:
            cand = theta + alpha * direction
            cand_val = _batch_objective(cand[None, :], d, epsilon, mu)[0][0]
            if cand_val > value:
                improved = True
                break
            alpha /= 2.0
        if not improved:
            break
        # Greedily extend the step while it keeps paying.
        while True:
            cand2 = theta + 2.0 * alpha * direction
            cand2_val = _batch_objective(cand2[None, :], d, epsilon, mu)[0][0]
            if cand2_val > cand_val:
                alpha *= 2.0
                cand, cand_val = cand2, cand2_val
            else:
                break
        gain = cand_val - value
        theta, value, step = cand, cand_val, alpha
        if gain < STOP_IMPROVEMENT:
            break
    return theta, step, iters


@dataclass(frozen=True)
class MaximizeResult:
    """Best entropy found subject to ``deviation >= epsilon``."""

    entropy: float
    gram: GramMatrix
    deviation: float
    restarts: tuple[dict, ...]


def _rescale_to_floor(entries: np.ndarray, d: int, epsilon: float) -> np.ndarray:
    """Move along the segment toward the balanced matrix onto the floor.

    For a point with deviation above the floor, shrinking toward the balanced
    matrix keeps PSD (convex combination), hits the floor exactly, and cannot
    lower the entropy (the entropy is concave on the segment with its maximum
    at the balanced end).  For a shortfall, expand outward as far as PSD
    allows.
    """
    dev = deviation_from_entries(entries)
    if dev <= 0.0:
        return entries
    target = np.eye(d, dtype=np.complex128) / d
    scale = epsilon / dev
    if scale > 1.0:
        eigs = numerics.eigenvalues_batch(entries[None, :, :])[0]
        lo = float(eigs[-1])
        if lo < 1.0 / d:
            scale = min(scale, (1.0 / d) / (1.0 / d - lo))
    out = target + scale * (entries - target)
    return (out + out.conj().T) / 2.0


def maximize_entropy(
    d: int, epsilon: float, restarts: int = 4, seed=0
) -> MaximizeResult:
    """Maximize entropy over unit-trace PSD matrices with deviation >= epsilon.

    The matrix is parametrized through its Cholesky-style factor (so PSD and
    unit trace hold by construction), the floor is enforced with a quadratic
    penalty whose coefficient starts at ``PENALTY_START`` and doubles whenever
    the converged point still violates the floor (capped at ``PENALTY_CAP``),
    and each restart runs coordinate-wise numerical-gradient ascent.  The best
    restart's matrix is then pulled exactly onto the floor, which can only
    gain entropy.

    Raises
    ------
    InfeasibleConstraint
        If ``epsilon`` exceeds the largest possible deviation sqrt(1 - 1/d).
    """
    if d < 2:
        raise InvalidInput("d", f"need d >= 2, got {d}")
    if restarts < 1:
        raise InvalidInput("restarts", f"need at least one restart, got {restarts}")
    if epsilon < 0.0:
        raise InvalidInput("epsilon", f"deviation floor must be >= 0, got {epsilon}")
    cap = max_deviation(d)
    if epsilon > cap + numerics.TOL_FEASIBLE:
        raise InfeasibleConstraint(
            f"epsilon {epsilon:.6g} exceeds the largest possible deviation "
            f"{cap:.6g} for d={d}"
        )

    if isinstance(seed, np.random.SeedSequence):
        root = seed
    else:
        root = np.random.SeedSequence(seed)
    children = root.spawn(restarts)
    n = _theta_dim(d)
    best_entries = None
    best_ent = -math.inf
    trace_rows = []
    for r, child in enumerate(children):
        rng = np.random.default_rng(child)
        if r == 0:
            # Balanced start plus a nudge: reliably near the global shape.
            theta = np.zeros(n)
            theta[:d] = 1.0 / math.sqrt(d)
            theta += 0.01 * rng.standard_normal(n)
        else:
            theta = rng.standard_normal(n)
        mu = PENALTY_START
        step = 0.1
        total_iters = 0
        while True:
            theta, step, iters = _ascend(theta, d, epsilon, mu, step)
            total_iters += iters
            _, ent, dev = _batch_objective(theta[None, :], d, epsilon, mu)
            if epsilon <= 0.0 or dev[0] >= epsilon or mu >= PENALTY_CAP:
                break
            mu = min(mu * 2.0, PENALTY_CAP)
        entries = _theta_to_entries(theta, d)
        if epsilon > 0.0:
            entries = _rescale_to_floor(entries, d, epsilon)
        eigs = numerics.eigenvalues_batch(entries[None, :, :])[0]
        ent_final = entropy_from_eigenvalues(np.maximum(eigs, 0.0))
        dev_final = deviation_from_entries(entries)
        trace_rows.append(
            {
                "restart": r,
                "iterations": total_iters,
                "entropy": float(ent_final),
                "deviation": float(dev_final),
                "penalty": float(mu),
            }
        )
        feasible = dev_final >= epsilon - numerics.TOL_CONSTRAINT
        if feasible and ent_final > best_ent:
            best_ent = float(ent_final)
            best_entries = entries
    if best_entries is None:
        raise InfeasibleConstraint(
            f"no restart reached the deviation floor {epsilon:.6g} for d={d}"
        )
    g = gram_from_entries(best_entries)
    return MaximizeResult(
        entropy=best_ent,
        gram=g,
        deviation=deviation_from_entries(best_entries),
        restarts=tuple(trace_rows),
    )


# --- conjecture harness ------------------------------------------------------

FRONTIER_BINS = 20
BOUNDARY_SAMPLE_PERIOD = 10  # every 10th draw is boundary-biased


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one sampling + optimization probe of the entropy gap.

    ``violations`` counts points (samples and the optimizer's best) whose
    deviation reaches ``epsilon`` while the entropy comes within
    ``TOL_CONJECTURE`` of log d; the probed hypothesis predicts zero.
    Entropies are in nats.  Samples mix interior draws with one
    boundary-biased draw per ``BOUNDARY_SAMPLE_PERIOD``.
    """

    d: int
    samples: int
    epsilon: float
    seed: int | None
    max_entropy_bound: float
    max_possible_deviation: float
    constrained_set_empty: bool
    sample_max_entropy_at_epsilon: float | None
    optimizer_entropy: float | None
    optimizer_deviation: float | None
    optimizer_restarts: tuple[dict, ...]
    max_entropy_at_epsilon: float | None
    gap: float | None
    violations: int
    frontier: tuple[dict, ...]

    @property
    def hypothesis_holds(self) -> bool:
        return self.violations == 0


def verify_conjecture(
    d: int,
    samples: int,
    epsilon: float,
    seed=42,
    optimizer_restarts: int = 4,
) -> VerifyReport:
    """Probe whether deviation >= epsilon forces entropy below log d.

    Draws ``samples`` random unit-trace PSD matrices (child RNG streams split
    per index from the master seed), runs the constrained maximizer, and
    summarizes the entropy-vs-deviation frontier in ``FRONTIER_BINS`` equal
    bins over the observed deviation range.
    """
    if d < 2:
        raise InvalidInput("d", f"need d >= 2, got {d}")
    if samples < 1:
        raise InvalidInput("samples", f"need at least one sample, got {samples}")
    if epsilon < 0.0:
        raise InvalidInput("epsilon", f"epsilon must be >= 0, got {epsilon}")

    master = np.random.SeedSequence(seed)
    children = master.spawn(samples + 1)
    entries_stack = np.empty((samples, d, d), dtype=np.complex128)
    for i in range(samples):
        mode = (
            "boundary-biased"
            if (i + 1) % BOUNDARY_SAMPLE_PERIOD == 0
            else "interior"
        )
        entries_stack[i] = _random_gram_entries(
            d, np.random.default_rng(children[i]), mode
        )
    eigs = numerics.eigenvalues_batch(entries_stack)
    clipped = np.maximum(eigs, 0.0)
    safe = np.where(clipped > numerics.TOL_ZERO_EIG, clipped, 1.0)
    entropies = -np.sum(clipped * np.log(safe), axis=1)
    iu = np.triu_indices(d)
    diffs = entries_stack - np.eye(d) / d
    deviations = np.sqrt(np.sum(np.abs(diffs[:, iu[0], iu[1]]) ** 2, axis=1))

    bound = math.log(d)
    cap = max_deviation(d)
    empty = epsilon > cap + numerics.TOL_FEASIBLE

    at_eps = deviations >= epsilon
    sample_max = float(np.max(entropies[at_eps])) if np.any(at_eps) else None

    opt_ent = opt_dev = None
    opt_trace: tuple[dict, ...] = ()
    if not empty:
        opt = maximize_entropy(
            d, epsilon, restarts=optimizer_restarts, seed=children[samples]
        )
        opt_ent, opt_dev, opt_trace = opt.entropy, opt.deviation, opt.restarts

    candidates = [v for v in (sample_max, opt_ent) if v is not None]
    overall = max(candidates) if candidates else None
    gap = (bound - overall) if overall is not None else None

    violations = int(
        np.sum(at_eps & (entropies >= bound - numerics.TOL_CONJECTURE))
    )
    if (
        opt_ent is not None
        and opt_dev is not None
        and opt_dev >= epsilon
        and opt_ent >= bound - numerics.TOL_CONJECTURE
    ):
        violations += 1

    dev_max_observed = float(np.max(deviations))
    width = dev_max_observed / FRONTIER_BINS if dev_max_observed > 0 else 1.0
    frontier = []
    for k in range(FRONTIER_BINS):
        lo = k * width
        hi = (k + 1) * width
        if k == FRONTIER_BINS - 1:
            in_bin = (deviations >= lo) & (deviations <= dev_max_observed)
        else:
            in_bin = (deviations >= lo) & (deviations < hi)
        count = int(np.sum(in_bin))
        frontier.append(
            {
                "lo": float(lo),
                "hi": float(hi),
                "count": count,
                "max_entropy": float(np.max(entropies[in_bin])) if count else None,
            }
        )

    return VerifyReport(
        d=d,
        samples=samples,
        epsilon=float(epsilon),
        seed=seed if isinstance(seed, int) else None,
        max_entropy_bound=bound,
        max_possible_deviation=cap,
        constrained_set_empty=empty,
        sample_max_entropy_at_epsilon=sample_max,
        optimizer_entropy=opt_ent,
        optimizer_deviation=opt_dev,
        optimizer_restarts=opt_trace,
        max_entropy_at_epsilon=overall,
        gap=gap,
        violations=violations,
        frontier=tuple(frontier),
    )


def verify_report_to_json(report: VerifyReport) -> dict:
    return {
        "d": report.d,
        "samples": report.samples,
        "epsilon": report.epsilon,
        "seed": report.seed,
        "base": "e",
        "max_entropy_bound": report.max_entropy_bound,
        "max_possible_deviation": report.max_possible_deviation,
        "constrained_set_empty": report.constrained_set_empty,
        "sample_max_entropy_at_epsilon": report.sample_max_entropy_at_epsilon,
        "optimizer": {
            "entropy": report.optimizer_entropy,
            "deviation": report.optimizer_deviation,
            "restarts": list(report.optimizer_restarts),
        },
        "max_entropy_at_epsilon": report.max_entropy_at_epsilon,
        "gap": report.gap,
        "violations": report.violations,
        "hypothesis_holds": report.hypothesis_holds,
        "frontier": list(report.frontier),
    }
