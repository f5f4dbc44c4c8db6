"""Polynomials on the spectral mesh.

The mesh-value representation (values at theta_0 > ... > theta_d) is primary:
both optimization programs and every bound are linear in mesh values, and the
conditioning is far better than the monomial basis.  Coefficient form is
derived on demand through Newton expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DegenerateInnerProduct,
    MissingAux,
    NoValidTheta,
    UnsupportedK,
)
from .spectra import PiProducts, Spectrum, pi_products


@dataclass(frozen=True)
class MeshPolynomial:
    """A polynomial given by its values on the strictly decreasing mesh."""

    mesh: np.ndarray    # theta_0 > ... > theta_d
    values: np.ndarray  # p(theta_i)

    def __post_init__(self):
        if len(self.mesh) != len(self.values):
            raise ValueError("mesh and values must have equal length")
        if np.any(np.diff(self.mesh) >= 0):
            raise ValueError("mesh must be strictly decreasing")
        self.mesh.setflags(write=False)
        self.values.setflags(write=False)

    def to_json_dict(self) -> dict:
        return {"mesh": list(map(float, self.mesh)),
                "values": list(map(float, self.values))}


@dataclass(frozen=True)
class CoeffPolynomial:
    """Coefficients a_0, ..., a_deg in ascending degree."""

    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs.setflags(write=False)

    @property
    def degree(self) -> int:
        nz = np.flatnonzero(np.abs(self.coeffs) > 0)
        return int(nz[-1]) if len(nz) else 0

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, self.coeffs)

    def to_json_dict(self) -> dict:
        return {"coeffs": list(map(float, self.coeffs))}


@dataclass(frozen=True)
class PredistanceFamily:
    """Orthogonal polynomials p_0..p_d for the spectral inner product."""

    polys: tuple            # CoeffPolynomial per degree
    norms_sq: np.ndarray    # ||p_i||^2 = p_i(theta_0)
    mesh_values: np.ndarray  # (d+1, d+1): row i holds p_i on the mesh

    def __post_init__(self):
        self.norms_sq.setflags(write=False)
        self.mesh_values.setflags(write=False)


def divided_differences(p: MeshPolynomial) -> np.ndarray:
    """Leading Newton divided differences f[theta_0..theta_m], m = 0..d."""
    x = p.mesh
    table = p.values.astype(float).copy()
    out = [table[0]]
    for order in range(1, len(x)):
        table = (table[1:] - table[:-1]) / (x[order:] - x[:-order])
        out.append(table[0])
    return np.array(out)


def dd_coefficient_rows(mesh: np.ndarray) -> np.ndarray:
    """Row m gives f[theta_0..theta_m] as a linear functional of the values.

    f[theta_0..theta_m] = sum_{j<=m} x_j / prod_{l<=m, l!=j} (theta_j - theta_l).
    """
    d1 = len(mesh)
    rows = np.zeros((d1, d1))
    rows[0, 0] = 1.0
    for m in range(1, d1):
        for j in range(m + 1):
            denom = 1.0
            for l in range(m + 1):
                if l != j:
                    denom *= mesh[j] - mesh[l]
            rows[m, j] = 1.0 / denom
    return rows


def mesh_to_coeffs(p: MeshPolynomial) -> CoeffPolynomial:
    """Unique interpolating polynomial of degree <= d, via Newton expansion."""
    dd = divided_differences(p)
    poly = np.polynomial.polynomial
    coeffs = np.zeros(1)
    basis = np.ones(1)  # prod_{l<order} (x - theta_l)
    for order, c in enumerate(dd):
        coeffs = poly.polyadd(coeffs, c * basis)
        basis = poly.polymul(basis, [-p.mesh[order], 1.0])
    out = np.zeros(len(p.mesh))
    out[: len(coeffs)] = coeffs
    # clip float fuzz in the leading terms
    out[np.abs(out) < 1e-12 * max(1.0, np.abs(out).max())] = 0.0
    return CoeffPolynomial(out)


def coeffs_to_mesh(c: CoeffPolynomial, mesh: np.ndarray) -> MeshPolynomial:
    return MeshPolynomial(np.asarray(mesh, dtype=float),
                          np.asarray(c(mesh), dtype=float))


def spectral_inner(s: Spectrum, u: np.ndarray, v: np.ndarray) -> float:
    """<p, q>_G = (1/n) sum m_i p(theta_i) q(theta_i) on mesh values."""
    return float(np.dot(s.mults, u * v)) / s.n


def predistance_polynomials(s: Spectrum) -> PredistanceFamily:
    """Gram-Schmidt on 1, x, x^2, ... under the spectral inner product,
    scaled so that p_i(theta_0) = ||p_i||^2."""
    d = s.d
    theta = s.distinct
    # rows: orthogonal basis values on the mesh, built from monomials
    basis = np.zeros((d + 1, d + 1))
    for i in range(d + 1):
        vec = theta ** i
        for _ in range(2):  # re-orthogonalize once for stability
            for j in range(i):
                proj = spectral_inner(s, vec, basis[j]) / spectral_inner(s, basis[j], basis[j])
                vec = vec - proj * basis[j]
        basis[i] = vec
    polys = []
    norms = np.zeros(d + 1)
    values = np.zeros((d + 1, d + 1))
    for i in range(d + 1):
        q = basis[i]
        nrm = spectral_inner(s, q, q)
        if nrm <= 0 or abs(q[0]) < 1e-13 * np.abs(q).max():
            raise DegenerateInnerProduct("degenerate spectral inner product")
        scale = q[0] / nrm  # p = scale*q gives p(theta_0) = ||p||^2
        p_vals = scale * q
        values[i] = p_vals
        norms[i] = spectral_inner(s, p_vals, p_vals)
        polys.append(mesh_to_coeffs(MeshPolynomial(theta, p_vals)))
    return PredistanceFamily(tuple(polys), norms, values)


def hoffman_polynomial(s: Spectrum) -> CoeffPolynomial:
    """H(x) = n * prod_{i>=1} (x - theta_i)/(theta_0 - theta_i)."""
    theta = s.distinct
    values = np.zeros(len(theta))
    values[0] = s.n
    return mesh_to_coeffs(MeshPolynomial(theta, values))


def hoffman_mesh(s: Spectrum) -> MeshPolynomial:
    values = np.zeros(s.d + 1)
    values[0] = s.n
    return MeshPolynomial(s.distinct, values)


# ---------------------------------------------------------------------------
# Closed-form candidate minor polynomials


def _theta_above(s: Spectrum, threshold: float, strict: bool) -> int:
    """Index of the smallest eigenvalue > threshold (or >= when not strict);
    must leave room for a successor on the mesh."""
    theta = s.distinct
    ok = [i for i in range(1, s.d) if (theta[i] > threshold if strict else theta[i] >= threshold)]
    if not ok:
        raise NoValidTheta(f"no mesh eigenvalue above {threshold}")
    return max(ok)  # smallest eigenvalue = largest index


def mp2_index(s: Spectrum) -> int:
    """MP2 selection: theta_i is the smallest eigenvalue greater than -1."""
    return _theta_above(s, -1.0, strict=True)


def mp4_index(s: Spectrum, delta: float) -> int:
    """MP4 selection rule for the first zero of the cubic minor polynomial."""
    theta = s.distinct
    t0, td = theta[0], theta[-1]
    threshold = -(t0 * t0 + t0 * td - delta) / (t0 * (1 + td))
    return _theta_above(s, threshold, strict=False)


def _normalized_product(s: Spectrum, zeros) -> MeshPolynomial:
    """f = (h - lambda(h)) / (h(theta_0) - lambda(h)) for h = prod (x - z)."""
    theta = s.distinct
    vals = np.ones(len(theta))
    for z in zeros:
        vals = vals * (theta - z)
    lam = vals[1:].min()
    vals = (vals - lam) / (vals[0] - lam)
    return MeshPolynomial(theta, vals)


def minor_closed_form(s: Spectrum, k: int, delta: float | None = None,
                      pi: PiProducts | None = None) -> MeshPolynomial:
    """The closed-form candidate minor polynomial for k in {0,1,2,3,d-1,d}.

    For k=3 the cubic-walk diagonal value must be supplied (the graph is
    assumed 3-partially walk-regular).  For k=d-1 the single nonzero mesh
    value sits at the odd index minimizing 1 + m_i pi_i / pi_0; ties break
    toward the smallest index.
    """
    d = s.d
    theta = s.distinct
    if k == d:
        vals = np.zeros(d + 1)
        vals[0] = 1.0
        return MeshPolynomial(theta, vals)
    if k == d - 1 and d >= 2:
        if pi is None:
            pi = pi_products(s)
        best_i, best_v = None, None
        for i in range(1, d + 1, 2):
            v = 1 + s.mults[i] * pi.pi[i] / pi.pi[0]
            if best_v is None or v < best_v - 1e-12:
                best_i, best_v = i, v
        vals = np.zeros(d + 1)
        vals[0] = 1.0
        vals[best_i] = pi.pi[best_i] / pi.pi[0]
        return MeshPolynomial(theta, vals)
    if k == 0:
        return MeshPolynomial(theta, np.ones(d + 1))
    if k == 1:
        return MeshPolynomial(theta, (theta - theta[-1]) / (theta[0] - theta[-1]))
    if k == 2:
        i = mp2_index(s)
        return _normalized_product(s, [theta[i], theta[i + 1]])
    if k == 3:
        if delta is None:
            raise MissingAux("k=3 closed form needs the diagonal of A^3")
        i = mp4_index(s, delta)
        return _normalized_product(s, [theta[i], theta[i + 1], theta[-1]])
    raise UnsupportedK(f"no closed form for k={k} with d={d}; use the LP")


def mp3_approximation(s: Spectrum) -> tuple:
    """MP3 diagnostic: f_1 * f_2 with the weaker theta_i > -1 rule.

    Returns (mesh polynomial, index used)."""
    i = mp2_index(s)
    theta = s.distinct
    f1 = (theta - theta[-1]) / (theta[0] - theta[-1])
    i2 = _normalized_product(s, [theta[i], theta[i + 1]]).values
    return MeshPolynomial(theta, f1 * i2), i


def as_fraction_string(x: float, max_den: int = 10_000, tol: float = 1e-9) -> str:
    """Render a value as p/q when it is within tol of a small rational."""
    fr = Fraction(x).limit_denominator(max_den)
    if abs(float(fr) - x) < tol:
        return str(fr)
    return repr(x)
