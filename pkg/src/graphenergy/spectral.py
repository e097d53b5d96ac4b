"""Numeric adjacency spectra and energy, plus exact characteristic polynomials.

Numeric eigenvalues come from a cyclic Jacobi eigensolver compiled with
numba; exact information (characteristic polynomial, integrality, exact
energy) uses Python integers only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import CapacityError, NumericFailure
from .graph import Graph

__all__ = [
    "CLUSTER_TOL",
    "CHARPOLY_MAX_ORDER",
    "Spectrum",
    "CharPoly",
    "jacobi_eigenvalues",
    "spectrum",
    "energy",
    "char_poly",
    "integer_spectrum",
    "is_integral",
    "cospectral",
    "energy_closed_form",
]

CLUSTER_TOL = 1e-7
CHARPOLY_MAX_ORDER = 150
MAX_SWEEPS = 100


def group_eigenvalues(values, tol: float = CLUSTER_TOL) -> list[tuple[float, int]]:
    """Cluster a descending sequence into ``(value, multiplicity)`` pairs.

    Consecutive values closer than ``tol`` join the same cluster; the
    reported value is the cluster mean.
    """
    groups: list[list[float]] = []
    for v in values:
        if groups and abs(groups[-1][-1] - v) < tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(float(np.mean(c)), len(c)) for c in groups]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of a graph in non-increasing order."""

    eigenvalues: tuple[float, ...]
    tol: float = CLUSTER_TOL

    @property
    def grouping(self) -> list[tuple[float, int]]:
        return group_eigenvalues(self.eigenvalues, self.tol)

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def as_array(self) -> np.ndarray:
        return np.array(self.eigenvalues)

    @property
    def energy(self) -> float:
        return float(np.abs(self.as_array()).sum())

    def to_dict(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "grouping": [{"value": v, "multiplicity": m} for v, m in self.grouping],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class CharPoly:
    """Exact characteristic polynomial ``det(xI - A)``.

    ``coeffs[k]`` is the coefficient of ``x**k``.
    """

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_dict(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> CharPoly:
        return cls(tuple(int(c) for c in data["coeffs"]))


# -- Jacobi eigensolver ----------------------------------------------------

@njit(cache=True)
def _jacobi_sweeps(a, threshold, max_sweeps):
    """Row-cyclic Jacobi on each matrix of the stack ``a`` (modified in place).

    Returns the final off-diagonal Frobenius norm of every matrix.
    """
    batch, n, _ = a.shape
    residual = np.empty(batch)
    for b in range(batch):
        m = a[b]
        for sweep in range(max_sweeps + 1):
            off = 0.0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        off += m[i, j] * m[i, j]
            off = np.sqrt(off)
            if off < threshold or sweep == max_sweeps:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = m[p, q]
                    if apq == 0.0:
                        continue
                    theta = (m[q, q] - m[p, p]) / (2.0 * apq)
                    if abs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                        if theta < 0.0:
                            t = -t
                    c = 1.0 / np.sqrt(1.0 + t * t)
                    s = t * c
                    for k in range(n):
                        akp = m[k, p]
                        akq = m[k, q]
                        m[k, p] = c * akp - s * akq
                        m[k, q] = s * akp + c * akq
                    for k in range(n):
                        apk = m[p, k]
                        aqk = m[q, k]
                        m[p, k] = c * apk - s * aqk
                        m[q, k] = s * apk + c * aqk
                    m[p, q] = 0.0
                    m[q, p] = 0.0
        residual[b] = off
    return residual


def jacobi_eigenvalues(matrix, tol_factor: float = 1e-12, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of real symmetric matrices by cyclic Jacobi rotations.

    Accepts a single ``(n, n)`` matrix or a stack ``(..., n, n)``. Each
    matrix is swept in row-cyclic order until its off-diagonal Frobenius norm
    drops below ``tol_factor * n``.

    Returns eigenvalues sorted in non-increasing order along the last axis.

    Raises
    ------
    NumericFailure
        If some matrix has not converged after ``max_sweeps`` sweeps.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {a.shape}")
    n = a.shape[-1]
    batch_shape = a.shape[:-2]
    a = np.ascontiguousarray(a.reshape((-1, n, n)))
    threshold = tol_factor * n
    residual = _jacobi_sweeps(a, threshold, max_sweeps)
    if len(residual) and residual.max() >= threshold:
        raise NumericFailure(f"Jacobi did not converge after {max_sweeps} sweeps", float(residual.max()))
    values = -np.sort(-np.diagonal(a, axis1=-2, axis2=-1), axis=-1)
    return values.reshape(batch_shape + (n,))


def spectrum(g: Graph, tol: float = CLUSTER_TOL) -> Spectrum:
    return Spectrum(tuple(float(v) for v in jacobi_eigenvalues(g.adjacency)), tol)


def energy(g: Graph) -> float:
    """Sum of the absolute adjacency eigenvalues."""
    return spectrum(g).energy


# -- exact characteristic polynomial ---------------------------------------

_INT64_SAFE = 2 ** 62


def char_poly(g: Graph) -> CharPoly:
    """Exact characteristic polynomial by the Faddeev-LeVerrier recurrence.

    ``M_1 = I``, ``c_{p-k} = -tr(A M_k) / k``, ``M_{k+1} = A M_k + c_{p-k} I``.
    The division by ``k`` is exact for integer matrices. Products ``A M`` are
    formed as neighbour-row sums, in ``int64`` while the entries provably fit
    and in Python integers afterwards.

    Raises
    ------
    CapacityError
        For graphs above :data:`CHARPOLY_MAX_ORDER` vertices.
    """
    p = g.order
    if p > CHARPOLY_MAX_ORDER:
        raise CapacityError(
            f"exact characteristic polynomial limited to {CHARPOLY_MAX_ORDER} vertices, got {p}"
        )
    neighbours = [g.neighbors(i) for i in range(p)]
    max_deg = max(1, g.max_degree)
    coeffs = [0] * (p + 1)
    coeffs[p] = 1
    m = np.eye(p, dtype=np.int64)
    exact = False
    for k in range(1, p + 1):
        if not exact:
            bound = int(np.abs(m).max())
            if bound * max_deg * (p + 1) >= _INT64_SAFE:
                m = m.astype(object)
                exact = True
        am = np.zeros_like(m)
        for i, nb in enumerate(neighbours):
            if len(nb):
                am[i] = m[nb].sum(axis=0)
        trace = int(sum(am[i, i] for i in range(p)))
        if trace % k:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        c = -trace // k
        coeffs[p - k] = c
        if k < p:
            m = am
            for i in range(p):
                m[i, i] += c
    return CharPoly(tuple(int(c) for c in coeffs))


def _synthetic_divide(coeffs: list[int], root: int) -> list[int] | None:
    """Quotient by ``x - root`` if the remainder is exactly zero."""
    n = len(coeffs) - 1
    quotient = [0] * n
    carry = 0
    for k in range(n, 0, -1):
        carry = coeffs[k] + carry * root
        quotient[k - 1] = carry
    if coeffs[0] + carry * root != 0:
        return None
    return quotient


def integer_spectrum(
    g: Graph, poly: CharPoly | None = None, eigenvalues: np.ndarray | None = None
) -> dict[int, int] | None:
    """Exact integer eigenvalues with multiplicities, or ``None``.

    Candidate roots are the rounded numeric eigenvalues; each is divided out
    of the exact characteristic polynomial while the remainder is zero. The
    graph is integral iff the whole degree is exhausted this way, so a
    near-integer irrational eigenvalue can never be mistaken for an integer.
    """
    poly = poly or char_poly(g)
    if eigenvalues is None:
        eigenvalues = jacobi_eigenvalues(g.adjacency)
    candidates = sorted({int(round(v)) for v in eigenvalues})
    remaining = list(poly.coeffs)
    roots: dict[int, int] = {}
    for r in candidates:
        while len(remaining) > 1:
            q = _synthetic_divide(remaining, r)
            if q is None:
                break
            remaining = q
            roots[r] = roots.get(r, 0) + 1
    if remaining != [1]:
        return None
    return dict(sorted(roots.items(), reverse=True))


def is_integral(g: Graph) -> bool:
    return integer_spectrum(g) is not None


def cospectral(g: Graph, h: Graph) -> bool:
    """Exact cospectrality: equal orders and identical characteristic polynomials."""
    return g.order == h.order and char_poly(g) == char_poly(h)


def energy_closed_form(g: Graph) -> int | None:
    """Exact energy of an integral graph; ``None`` when the graph is not integral."""
    roots = integer_spectrum(g)
    if roots is None:
        return None
    return sum(abs(r) * mult for r, mult in roots.items())
