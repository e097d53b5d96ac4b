"""Energy taxonomy of graphs and certificates for equienergetic pairs."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .errors import CapacityError, UndecidableError
from .graph import Graph
from .spectral import char_poly, integer_spectrum, jacobi_eigenvalues

__all__ = [
    "ENERGY_RTOL",
    "ISOMORPHISM_MAX_ORDER",
    "ISOMORPHISM_NODE_BUDGET",
    "EnergyReport",
    "PairCertificate",
    "classify_energy",
    "energies_equal",
    "is_isomorphic",
    "certify_pair",
]

ENERGY_RTOL = 1e-8
ISOMORPHISM_MAX_ORDER = 12
ISOMORPHISM_NODE_BUDGET = 10_000_000

CSV_HEADER = "label,order,energy,energy_exact,hypoenergetic,orderenergetic,nonhypoenergetic,hyperenergetic,integral,comparison"


def _close(a: float, b: float, rtol: float = ENERGY_RTOL) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1.0)


@dataclass(frozen=True)
class EnergyReport:
    """Energy classification of a single graph.

    ``comparison`` is ``"exact"`` when the flags were decided on the exact
    integer energy of an integral graph and ``"numeric"`` when they rest on
    the relative tolerance :data:`ENERGY_RTOL`. ``integral`` is ``None`` when
    the graph is too large for the exact characteristic polynomial.
    """

    label: str | None
    order: int
    energy: float
    energy_exact: int | None
    hypoenergetic: bool
    orderenergetic: bool
    nonhypoenergetic: bool
    hyperenergetic: bool
    integral: bool | None
    comparison: str
    rtol: float = ENERGY_RTOL

    @property
    def value(self) -> float | int:
        return self.energy_exact if self.energy_exact is not None else self.energy

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv_row(self) -> str:
        def cell(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "1" if v else "0"
            if isinstance(v, float):
                return f"{v:.10g}"
            return str(v)

        label = (self.label or "").replace('"', '""')
        fields = [f'"{label}"'] + [
            cell(getattr(self, name)) for name in CSV_HEADER.split(",")[1:]
        ]
        return ",".join(fields)


def classify_energy(g: Graph) -> EnergyReport:
    p = g.order
    eig = jacobi_eigenvalues(g.adjacency)
    energy = float(abs(eig).sum())
    try:
        roots = integer_spectrum(g, eigenvalues=eig)
    except CapacityError:
        integral, exact = None, None
    else:
        integral = roots is not None
        exact = sum(abs(r) * k for r, k in roots.items()) if roots is not None else None

    if exact is not None:
        order_e = exact == p
        hypo = exact < p
        hyper = exact > 2 * (p - 1)
        comparison = "exact"
    else:
        order_e = _close(energy, p)
        hypo = energy < p and not order_e
        hyper = energy > 2 * (p - 1) and not _close(energy, 2 * (p - 1))
        comparison = "numeric"
    return EnergyReport(
        label=g.label,
        order=p,
        energy=energy,
        energy_exact=exact,
        hypoenergetic=hypo,
        orderenergetic=order_e,
        nonhypoenergetic=not hypo,
        hyperenergetic=hyper,
        integral=integral,
        comparison=comparison,
    )


def energies_equal(a: EnergyReport, b: EnergyReport) -> tuple[bool, str]:
    """Energy equality, exact when both graphs are integral."""
    if a.energy_exact is not None and b.energy_exact is not None:
        return a.energy_exact == b.energy_exact, "exact"
    return _close(a.energy, b.energy), "numeric"


# -- isomorphism -----------------------------------------------------------

def _refine(adj_g, adj_h) -> tuple[list[int], list[int]] | None:
    """Joint colour refinement of two graphs, starting from degrees.

    Returns vertex colours for both graphs, or ``None`` as soon as the colour
    histograms differ (which proves non-isomorphism).
    """
    n = len(adj_g)
    cg = [sum(row) for row in adj_g]
    ch = [sum(row) for row in adj_h]
    while True:
        if sorted(cg) != sorted(ch):
            return None
        sig_g = [(cg[v], tuple(sorted(cg[w] for w in range(n) if adj_g[v][w]))) for v in range(n)]
        sig_h = [(ch[v], tuple(sorted(ch[w] for w in range(n) if adj_h[v][w]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig_g) | set(sig_h)))}
        ng = [palette[s] for s in sig_g]
        nh = [palette[s] for s in sig_h]
        if len(set(ng)) == len(set(cg)) and len(set(nh)) == len(set(ch)):
            if sorted(ng) != sorted(nh):
                return None
            return ng, nh
        cg, ch = ng, nh


def is_isomorphic(
    g: Graph,
    h: Graph,
    max_order: int = ISOMORPHISM_MAX_ORDER,
    node_budget: int = ISOMORPHISM_NODE_BUDGET,
) -> bool:
    """Exact isomorphism test by backtracking within refined colour classes.

    Raises
    ------
    UndecidableError
        If either graph exceeds ``max_order`` or the search visits more than
        ``node_budget`` nodes.
    """
    if max(g.order, h.order) > max_order:
        raise UndecidableError(f"isomorphism search capped at {max_order} vertices")
    if g.order != h.order or g.size != h.size:
        return False
    adj_g = g.adjacency.tolist()
    adj_h = h.adjacency.tolist()
    colours = _refine(adj_g, adj_h)
    if colours is None:
        return False
    cg, ch = colours
    n = g.order
    # map rarest colour classes first, most constrained vertices early
    freq = {c: cg.count(c) for c in cg}
    order = sorted(range(n), key=lambda v: (freq[cg[v]], -sum(adj_g[v]), v))
    candidates = [[w for w in range(n) if ch[w] == cg[v]] for v in order]
    mapping = [-1] * n
    used = [False] * n
    nodes = 0

    def extend(depth: int) -> bool:
        nonlocal nodes
        if depth == n:
            return True
        v = order[depth]
        for w in candidates[depth]:
            if used[w]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise UndecidableError(f"isomorphism search exceeded {node_budget} nodes")
            ok = True
            for k in range(depth):
                u = order[k]
                if adj_g[v][u] != adj_h[w][mapping[u]]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(depth + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    return extend(0)


# -- pair certificates -----------------------------------------------------

@dataclass(frozen=True)
class PairCertificate:
    """Evidence for (or against) two graphs being equienergetic.

    ``verdict`` is one of ``"equienergetic"``, ``"equiorderenergetic"``,
    ``"equihypoenergetic"``, ``"not-equienergetic"`` or
    ``"undecided-isomorphism"``.
    """

    same_order: bool
    energies: tuple[float | int, float | int]
    cospectral: bool
    isomorphic: bool | None
    verdict: str
    comparison: str
    orderenergetic: tuple[bool, bool]
    hypoenergetic: tuple[bool, bool]
    note: str = ""

    @property
    def equienergetic(self) -> bool:
        """True for every verdict that certifies an equienergetic pair."""
        return self.verdict in ("equienergetic", "equiorderenergetic", "equihypoenergetic")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _cospectral(g: Graph, h: Graph) -> tuple[bool, str]:
    if g.order != h.order:
        return False, "exact"
    try:
        return char_poly(g) == char_poly(h), "exact"
    except CapacityError:
        a = jacobi_eigenvalues(g.adjacency)
        b = jacobi_eigenvalues(h.adjacency)
        return bool(abs(a - b).max() <= ENERGY_RTOL * max(1.0, abs(a).max())), "numeric"


def certify_pair(
    g: Graph,
    h: Graph,
    max_order: int = ISOMORPHISM_MAX_ORDER,
    node_budget: int = ISOMORPHISM_NODE_BUDGET,
) -> PairCertificate:
    """Decide whether ``g`` and ``h`` form an equienergetic pair.

    Non-cospectral graphs are non-isomorphic without search. Cospectral
    pairs are searched exactly up to ``max_order`` vertices; beyond that the
    verdict is ``"undecided-isomorphism"``.
    """
    rg, rh = classify_energy(g), classify_energy(h)
    same_order = g.order == h.order
    equal, comparison = energies_equal(rg, rh)
    cosp, cosp_mode = _cospectral(g, h)
    note = "" if cosp_mode == "exact" else "cospectrality decided numerically"

    isomorphic: bool | None
    if not cosp:
        isomorphic = False
    else:
        try:
            isomorphic = is_isomorphic(g, h, max_order, node_budget)
        except UndecidableError as exc:
            isomorphic = None
            note = "; ".join(filter(None, [note, str(exc)]))

    if not (same_order and equal):
        verdict = "not-equienergetic"
    elif isomorphic is None:
        verdict = "undecided-isomorphism"
    elif isomorphic:
        verdict = "not-equienergetic"
    elif rg.orderenergetic and rh.orderenergetic:
        verdict = "equiorderenergetic"
    elif rg.hypoenergetic and rh.hypoenergetic:
        verdict = "equihypoenergetic"
    else:
        verdict = "equienergetic"
    return PairCertificate(
        same_order=same_order,
        energies=(rg.value, rh.value),
        cospectral=cosp,
        isomorphic=isomorphic,
        verdict=verdict,
        comparison=comparison,
        orderenergetic=(rg.orderenergetic, rh.orderenergetic),
        hypoenergetic=(rg.hypoenergetic, rh.hypoenergetic),
        note=note,
    )
