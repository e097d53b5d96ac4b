"""Real roots of integer polynomials by Sturm-sequence bisection.

This is deliberately independent of the Jacobi solver: it works on the exact
characteristic polynomial with rational arithmetic and is used to cross-check
numeric spectra of small graphs.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["real_roots"]

Poly = list[Fraction]  # ascending coefficients, no trailing zeros


def _trim(a: Poly) -> Poly:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def _deriv(a: Poly) -> Poly:
    return _trim([k * a[k] for k in range(1, len(a))] or [Fraction(0)])


def _divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a = list(a)
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        coef = a[shift + len(b) - 1] / lead
        q[shift] = coef
        if coef:
            for i, bc in enumerate(b):
                a[shift + i] -= coef * bc
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


def _is_zero(a: Poly) -> bool:
    return len(a) == 1 and a[0] == 0


def _gcd(a: Poly, b: Poly) -> Poly:
    while not _is_zero(b):
        a, b = b, _divmod(a, b)[1]
    return [c / a[-1] for c in a]


def _eval(a: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sturm_chain(a: Poly) -> list[Poly]:
    chain = [a, _deriv(a)]
    while not _is_zero(chain[-1]) and len(chain[-1]) > 1:
        rem = _divmod(chain[-2], chain[-1])[1]
        if _is_zero(rem):
            break
        chain.append([-c for c in rem])
    return chain


def _sign_changes(chain: list[Poly], x: Fraction) -> int:
    signs = [v for v in (_eval(p, x) for p in chain) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def _simple_roots(a: Poly, tol: Fraction) -> list[float]:
    """Roots of a square-free polynomial, each to within ``tol``."""
    if len(a) <= 1:
        return []
    chain = _sturm_chain(a)
    bound = 1 + max(abs(c / a[-1]) for c in a[:-1])  # Cauchy bound
    lo, hi = -bound, bound

    def count(x: Fraction) -> int:
        return _sign_changes(chain, x)

    roots: list[float] = []
    stack = [(lo, hi, count(lo), count(hi))]
    while stack:
        left, right, cl, cr = stack.pop()
        n = cl - cr  # roots in (left, right]
        if n == 0:
            continue
        if n == 1 and right - left < tol:
            roots.append(float((left + right) / 2))
            continue
        mid = (left + right) / 2
        # keep midpoints off the roots so sign counts stay well defined
        if _eval(a, mid) == 0:
            roots.append(float(mid))
            eps = tol / 4
            while _eval(a, mid - eps) == 0 or _eval(a, mid + eps) == 0:
                eps /= 2
            stack.append((left, mid - eps, cl, count(mid - eps)))
            stack.append((mid + eps, right, count(mid + eps), cr))
            continue
        cm = count(mid)
        stack.append((left, mid, cl, cm))
        stack.append((mid, right, cm, cr))
    return roots


def real_roots(coeffs, tol: float = 1e-12) -> list[float]:
    """All real roots with multiplicity, in non-increasing order.

    ``coeffs`` are ascending integer (or rational) coefficients. Repeated
    roots are recovered from the chain ``g_0 = f``, ``g_{k+1} = gcd(g_k, g_k')``:
    a root of multiplicity ``m`` is simple in the square-free part of each of
    ``g_0 .. g_{m-1}``. Non-real roots are ignored.
    """
    a = _trim([Fraction(c) for c in coeffs])
    if _is_zero(a):
        raise ValueError("the zero polynomial has no finite root set")
    ftol = Fraction(tol)
    roots: list[float] = []
    g = a
    while len(g) > 1:
        dg = _deriv(g)
        common = _gcd(g, dg)
        squarefree = _divmod(g, common)[0]
        roots.extend(_simple_roots(squarefree, ftol))
        g = common
    return sorted(roots, reverse=True)
