"""Desk-scale LP/MILP machinery and the two optimization programs:

* the minor-polynomial LP (degree constraint via vanishing divided
  differences, minimize the multiplicity-weighted trace), and
* the sign-polynomial MILP (minimize the multiplicity-weighted count of
  non-negative mesh values), solved by branch-and-bound over the binaries.

Both are formulated in MESH-VALUE space: the variables are the polynomial's
values at the distinct eigenvalues, and "degree <= k" is the linear condition
that divided differences of orders k+1..d vanish.  Vandermonde systems in the
monomial basis are badly conditioned on spread-out spectra; the value space
is not.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    Infeasible,
    NormalizationViolation,
    NumericalInstability,
    SearchTimeout,
    Unbounded,
)
from .polys import CoeffPolynomial, MeshPolynomial, dd_coefficient_rows, mesh_to_coeffs
from .spectra import Spectrum

_TOL = 1e-9


@dataclass
class LinearProgram:
    """min objective . x  subject to  eq_constraints, variable bounds.

    bounds[j] = (lo, hi); None means unbounded on that side.
    """

    objective: np.ndarray
    eq_constraints: list = field(default_factory=list)  # (row, rhs) pairs
    bounds: list = field(default_factory=list)          # (lo, hi) per variable

    def num_vars(self) -> int:
        return len(self.objective)


def _simplex_standard(A: np.ndarray, b: np.ndarray, c: np.ndarray):
    """Two-phase primal simplex with Bland's rule on min c.x, Ax=b, x>=0."""
    m, n = A.shape
    A = A.copy()
    b = b.copy()
    neg = b < 0
    A[neg] *= -1
    b[neg] *= -1

    # scale rows for numerics (does not affect the vertex chosen by Bland)
    for i in range(m):
        s = max(np.abs(A[i]).max(), abs(b[i]))
        if s > 0:
            A[i] /= s
            b[i] /= s

    T = np.hstack([A, np.eye(m), b[:, None]])
    basis = list(range(n, n + m))
    cost = np.concatenate([np.zeros(n), np.ones(m)])

    def pivot(T, basis, cost, ncols):
        while True:
            cb = cost[basis]
            reduced = cost[:ncols] - cb @ T[:, :ncols]
            enter = -1
            for j in range(ncols):
                if j not in basis and reduced[j] < -_TOL:
                    enter = j
                    break  # Bland: smallest index
            if enter < 0:
                return
            col = T[:, enter]
            ratios = [(T[i, -1] / col[i], basis[i], i)
                      for i in range(len(basis)) if col[i] > _TOL]
            if not ratios:
                raise Unbounded("LP objective unbounded below")
            leave_row = min(ratios)[2]  # ties: smallest basic variable index
            T[leave_row] /= T[leave_row, enter]
            for i in range(T.shape[0]):
                if i != leave_row and abs(T[i, enter]) > 0:
                    T[i] -= T[i, enter] * T[leave_row]
            basis[leave_row] = enter

    pivot(T, basis, cost, n + m)
    if cost[basis] @ T[:, -1] > 1e-7:
        raise Infeasible("phase-1 optimum positive: empty feasible region")
    # drive any residual artificials out of the basis
    for i, bi in enumerate(basis):
        if bi >= n:
            for j in range(n):
                if j not in basis and abs(T[i, j]) > _TOL:
                    T[i] /= T[i, j]
                    for r in range(m):
                        if r != i:
                            T[r] -= T[r, j] * T[i]
                    basis[i] = j
                    break
    keep = [i for i, bi in enumerate(basis) if bi < n]
    if len(keep) < m:  # redundant rows left with artificial basics
        T = T[keep]
        basis = [basis[i] for i in keep]
        m = len(keep)
    T = np.hstack([T[:, :n], T[:, -1:]])
    pivot(T, basis, np.concatenate([c, [0.0]]), n)
    x = np.zeros(n)
    for i, bi in enumerate(basis):
        x[bi] = T[i, -1]
    return x, float(c @ x)


def solve_lp(lp: LinearProgram):
    """Solve a bounded-variable LP; returns (values, objective, vertex_flag).

    Deterministic: Bland's anti-cycling pivot rule throughout, so repeated
    runs return bit-identical vertices.
    """
    nv = lp.num_vars()
    bounds = lp.bounds if lp.bounds else [(0.0, None)] * nv
    # substitute each variable into one or two nonnegative ones
    shift = np.zeros(nv)
    sign = np.ones(nv)
    split = []  # indices of free variables (x = u - v)
    ubrows = []  # (var index in transformed space, width)
    cols = []  # transformed column index per original variable
    ncols = 0
    for j, (lo, hi) in enumerate(bounds):
        if lo is not None:
            shift[j] = lo
            cols.append(ncols)
            ncols += 1
            if hi is not None:
                ubrows.append((j, hi - lo))
        elif hi is not None:
            shift[j] = hi
            sign[j] = -1.0
            cols.append(ncols)
            ncols += 1
        else:
            split.append(j)
            cols.append(ncols)
            ncols += 2
    rows = len(lp.eq_constraints) + len(ubrows)
    nstd = ncols + len(ubrows)  # plus one slack per upper bound
    A = np.zeros((rows, nstd))
    b = np.zeros(rows)
    c = np.zeros(nstd)

    def scatter(vec, row=None, target_c=False):
        for j in range(nv):
            cj = cols[j]
            val = vec[j] * sign[j]
            if target_c:
                c[cj] += val
                if j in split:
                    c[cj + 1] -= val
            else:
                A[row, cj] += val
                if j in split:
                    A[row, cj + 1] -= val

    scatter(np.asarray(lp.objective, dtype=float), target_c=True)
    for r, (row, rhs) in enumerate(lp.eq_constraints):
        row = np.asarray(row, dtype=float)
        scatter(row, row=r)
        b[r] = rhs - float(row @ shift)
    for idx, (j, width) in enumerate(ubrows):
        r = len(lp.eq_constraints) + idx
        A[r, cols[j]] = 1.0
        A[r, ncols + idx] = 1.0
        b[r] = width
    u, _ = _simplex_standard(A, b, c)
    x = np.zeros(nv)
    for j in range(nv):
        val = u[cols[j]]
        if j in split:
            val -= u[cols[j] + 1]
        x[j] = shift[j] + sign[j] * val
    return x, float(np.asarray(lp.objective) @ x), True


def dump_lp(lp: LinearProgram) -> str:
    """Plain-text tableau dump for external cross-checking.

    Line 1: ``minimize`` followed by the objective coefficients.
    One ``eq`` line per equality constraint: coefficients then ``= rhs``.
    One ``bounds`` line per variable: ``lo hi`` with ``-inf``/``inf``.
    """
    out = ["minimize " + " ".join(f"{v:.12g}" for v in lp.objective)]
    for row, rhs in lp.eq_constraints:
        out.append("eq " + " ".join(f"{v:.12g}" for v in row) + f" = {rhs:.12g}")
    bounds = lp.bounds if lp.bounds else [(0.0, None)] * lp.num_vars()
    for lo, hi in bounds:
        lo_s = "-inf" if lo is None else f"{lo:.12g}"
        hi_s = "inf" if hi is None else f"{hi:.12g}"
        out.append(f"bounds {lo_s} {hi_s}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Minor polynomial LP


def minor_polynomial(s: Spectrum, k: int) -> MeshPolynomial:
    """Optimal minor polynomial of degree <= k for this spectrum.

    x_0 is fixed to 1; x_1..x_d >= 0; divided differences of orders k+1..d
    vanish; the multiplicity-weighted trace is minimized.
    """
    d = s.d
    if not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= d, got k={k}")
    rows = dd_coefficient_rows(s.distinct)
    eqs = []
    for m in range(k + 1, d + 1):
        row = rows[m]
        scale = np.abs(row).max()
        eqs.append((row[1:] / scale, -row[0] / scale))
    lp = LinearProgram(
        objective=s.mults[1:].astype(float),
        eq_constraints=eqs,
        bounds=[(0.0, None)] * d,
    )
    x, obj, _ = solve_lp(lp)
    # the optimum can be degenerate; pin down a canonical vertex by
    # lexicographically minimizing (x_1, ..., x_d) subject to optimality
    trace_row = s.mults[1:].astype(float)
    eqs = eqs + [(trace_row / np.abs(trace_row).max(), obj / np.abs(trace_row).max())]
    for j in range(d - 1):
        unit = np.zeros(d)
        unit[j] = 1.0
        xj, vj, _ = solve_lp(LinearProgram(unit, eqs, [(0.0, None)] * d))
        x = xj
        eqs = eqs + [(unit, max(vj, 0.0))]
    values = np.concatenate([[1.0], x])
    values[np.abs(values) < 1e-11] = 0.0
    if values[1:].min() > 1e-7:
        raise NormalizationViolation("LP vertex has min_{i>=1} f(theta_i) > 0")
    return MeshPolynomial(s.distinct, values)


def minor_trace(s: Spectrum, f: MeshPolynomial) -> float:
    return float(np.dot(s.mults, f.values))


# ---------------------------------------------------------------------------
# Sign polynomial MILP


@dataclass(frozen=True)
class MilpConfig:
    M: float | None = None   # default: 1e4 * max(1, |theta|_max)^k
    eps: float = 1e-4
    time_budget: float = 30.0  # wall-clock seconds for the branch-and-bound


@dataclass(frozen=True)
class MilpSolution:
    sign_mesh: MeshPolynomial
    sign_poly: CoeffPolynomial
    b: tuple
    objective: int


def _relaxation(s: Spectrum, k: int, M: float, eps: float, fixed: dict):
    """LP relaxation with some binaries fixed; returns (y, b, objective)."""
    d = s.d
    nb = d + 1
    # variables: y_0..y_d, b_0..b_d
    obj = np.concatenate([np.zeros(nb), s.mults.astype(float)])
    eqs = []
    rows = dd_coefficient_rows(s.distinct)
    for m in range(k + 1, d + 1):
        row = np.concatenate([rows[m], np.zeros(nb)])
        eqs.append((row / np.abs(row).max(), 0.0))
    trace = np.concatenate([s.mults.astype(float), np.zeros(nb)])
    eqs.append((trace / np.abs(trace).max(), 0.0))
    # indicator y_j - M b_j + slack = -eps handled as bounded slack rows:
    # express as equality with a fresh nonnegative variable per row
    nslack = nb
    full = lambda row: np.concatenate([row, np.zeros(nslack)])
    eqs = [(full(r), rhs) for r, rhs in eqs]
    for j in range(nb):
        row = np.zeros(2 * nb + nslack)
        row[j] = 1.0
        row[nb + j] = -M
        row[2 * nb + j] = 1.0
        eqs.append((row / M, -eps / M))
    obj = np.concatenate([obj, np.zeros(nslack)])
    bounds = [(-1.0, 1.0)] * nb
    for j in range(nb):
        lo, hi = 0.0, 1.0
        if j in fixed:
            lo = hi = float(fixed[j])
        bounds.append((lo, hi))
    bounds += [(0.0, None)] * nslack
    lp = LinearProgram(obj, eqs, bounds)
    x, val, _ = solve_lp(lp)
    return x[:nb], x[nb:2 * nb], val


def sign_polynomial(s: Spectrum, k: int, cfg: MilpConfig = MilpConfig()) -> MilpSolution:
    """Optimal sign polynomial via branch-and-bound over the d+1 binaries.

    Mesh values are normalized to the box |y|_inf <= 1 inside the program
    (the bound is invariant under positive scaling); the returned certificate
    is rescaled so that min_{i>=1} s(theta_i) = -1 when negative values exist.
    """
    d = s.d
    if not 1 <= k < d:
        raise ValueError(f"need 1 <= k < d, got k={k}")
    M = cfg.M if cfg.M is not None else 1e4 * max(1.0, float(np.abs(s.distinct).max())) ** k
    eps = cfg.eps
    order = sorted(range(d + 1), key=lambda j: (-s.mults[j], j))  # heavy first

    best_obj = int(s.mults.sum())  # s = 0 certificate: all b_j = 1
    best_fixed = {j: 1 for j in range(d + 1)}
    deadline = time.monotonic() + cfg.time_budget

    def bnb(fixed):
        nonlocal best_obj, best_fixed
        if time.monotonic() > deadline:
            raise SearchTimeout(
                "sign-polynomial branch-and-bound exceeded its time budget")
        try:
            _, _, val = _relaxation(s, k, M, eps, fixed)
        except Infeasible:
            return
        # the big-M relaxation is weak, but every binary fixed to 1
        # contributes its full multiplicity to the bound
        if math.ceil(val - 1e-6) >= best_obj:
            return
        unfixed = [j for j in order if j not in fixed]
        if not unfixed:
            # relaxation feasibility with all binaries pinned IS pattern
            # feasibility (zeros force y_j <= -eps)
            obj = int(sum(s.mults[j] for j in range(d + 1) if fixed[j]))
            if obj < best_obj:
                best_obj = obj
                best_fixed = dict(fixed)
            return
        # branch on the heaviest-multiplicity unfixed binary, b=0 first
        j = unfixed[0]
        for v in (0, 1):
            child = dict(fixed)
            child[j] = v
            bnb(child)

    bnb({})

    # re-solve with the optimal pattern and a max-margin objective so the
    # certificate is the clean extreme ray rather than an arbitrary point
    y = _max_margin_certificate(s, k, best_fixed)
    neg = y[1:].min()
    if neg < -1e-12:
        y = y / abs(neg)
    mesh = MeshPolynomial(s.distinct, y)
    coeff = mesh_to_coeffs(mesh)
    bvec = tuple(best_fixed[j] for j in range(d + 1))
    # indicator consistency: y_j >= 0 must imply b_j = 1
    for j, bj in enumerate(bvec):
        if y[j] >= -1e-9 * max(1.0, np.abs(y).max()) and bj != 1:
            raise NumericalInstability("indicator constraint violated by certificate")
    tr = float(np.dot(s.mults, y))
    if abs(tr) > 1e-7 * max(1.0, np.abs(y).max()):
        raise NumericalInstability("certificate trace is not zero")
    return MilpSolution(mesh, coeff, bvec, best_obj)


def _max_margin_certificate(s: Spectrum, k: int, pattern: dict) -> np.ndarray:
    """Given the optimal binary pattern, maximize the margin t with
    y_j <= -t wherever b_j = 0, inside the unit box."""
    d = s.d
    nb = d + 1
    zero = [j for j in range(nb) if pattern[j] == 0]
    if not zero:
        return np.zeros(nb)
    # variables: y_0..y_d, t, one slack per margin row
    nv = nb + 1 + len(zero)
    obj = np.zeros(nv)
    obj[nb] = -1.0  # maximize t
    eqs = []
    rows = dd_coefficient_rows(s.distinct)
    for m in range(k + 1, d + 1):
        row = np.zeros(nv)
        row[:nb] = rows[m]
        eqs.append((row / np.abs(row).max(), 0.0))
    row = np.zeros(nv)
    row[:nb] = s.mults
    eqs.append((row / np.abs(row).max(), 0.0))
    for idx, j in enumerate(zero):
        row = np.zeros(nv)
        row[j] = 1.0
        row[nb] = 1.0
        row[nb + 1 + idx] = 1.0
        eqs.append((row, 0.0))
    bounds = [(-1.0, 1.0)] * nb + [(0.0, None)] * (1 + len(zero))
    x, _, _ = solve_lp(LinearProgram(obj, eqs, bounds))
    return x[:nb]
