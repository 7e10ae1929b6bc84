"""Exact graph invariants and the power-graph clique/chromatic machinery.

The exact solvers work on neighbourhood bitsets (Python ints indexed by
vertex position) and refuse inputs above their size limits instead of
degrading to heuristics.  The one flagged exception is the domination number
above ``DOMINATION_LIMIT``, which falls back to a greedy upper bound.
"""

from __future__ import annotations

import math
import random
import threading
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import Cancelled, SizeBound
from .graphs import Graph
from .groups import FiniteGroup, exponent
from .numtheory import divisors, euler_phi, factorize

__all__ = [
    "CLIQUE_LIMIT",
    "CHROMATIC_LIMIT",
    "DOMINATION_LIMIT",
    "ChainFormulaResult",
    "CliqueResult",
    "Domination",
    "InvariantReport",
    "PerfectnessParams",
    "PerfectnessVerdict",
    "chromatic_number",
    "clique_number",
    "comparability_coloring",
    "diameter_and_components",
    "domination_number",
    "euler_phi",
    "find_odd_hole",
    "independence_number",
    "invariant_report",
    "is_proper_coloring",
    "maximal_cliques",
    "perfectness_check",
    "power_omega_chi_formula",
]

CLIQUE_LIMIT = 512
CHROMATIC_LIMIT = 128
DOMINATION_LIMIT = 64


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _color_bound(P: int, masks: Sequence[int]) -> int:
    """Number of classes in a greedy colouring of P: an upper bound on its clique size."""
    count = 0
    while P:
        count += 1
        avail = P
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            P &= ~low
            avail &= ~low & ~masks[v]
    return count


def _check_size(what: str, n: int, limit: int | None) -> None:
    if limit is not None and n > limit:
        raise SizeBound(what, n, limit)


# ---------------------------------------------------------------------------
# Cliques
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple[int, ...]

    def __int__(self) -> int:
        return self.size


def _max_clique_size(masks: Sequence[int], n: int) -> int:
    best = 0

    def expand(size: int, P: int, X: int) -> None:
        nonlocal best
        if not P:
            if not X and size > best:
                best = size
            return
        if size + _color_bound(P, masks) <= best:
            return
        pivot = max(_bits(P | X), key=lambda u: _popcount(P & masks[u]))
        for v in _bits(P & ~masks[pivot]):
            bit = 1 << v
            expand(size + 1, P & masks[v], X & masks[v])
            P &= ~bit
            X |= bit

    expand(0, (1 << n) - 1, 0)
    return best


def _lex_least_clique(masks: Sequence[int], n: int, size: int) -> list[int]:
    def search(R: list[int], P: int) -> list[int] | None:
        if len(R) == size:
            return R
        if len(R) + _popcount(P) < size or len(R) + _color_bound(P, masks) < size:
            return None
        for v in _bits(P):
            above = ~((1 << (v + 1)) - 1)
            found = search(R + [v], P & masks[v] & above)
            if found is not None:
                return found
        return None

    found = search([], (1 << n) - 1)
    assert found is not None
    return found


def clique_number(g: Graph, limit: int | None = CLIQUE_LIMIT) -> CliqueResult:
    """Exact clique number with the lexicographically least maximum clique."""
    n = g.vertex_count
    if n == 0:
        raise ValueError("clique_number needs a nonempty graph")
    _check_size("clique_number", n, limit)
    size = _max_clique_size(g.masks, n)
    witness = _lex_least_clique(g.masks, n, size)
    return CliqueResult(size, tuple(g.labels[i] for i in witness))


def maximal_cliques(g: Graph, limit: int | None = CLIQUE_LIMIT) -> list[tuple[int, ...]]:
    """All maximal cliques (pivoted Bron-Kerbosch), each as a sorted label tuple, sorted."""
    _check_size("maximal_cliques", g.vertex_count, limit)
    masks = g.masks
    out = []

    def expand(R: list[int], P: int, X: int) -> None:
        if not P and not X:
            out.append(tuple(sorted(g.labels[i] for i in R)))
            return
        if not P:
            return
        pivot = max(_bits(P | X), key=lambda u: _popcount(P & masks[u]))
        for v in _bits(P & ~masks[pivot]):
            bit = 1 << v
            expand(R + [v], P & masks[v], X & masks[v])
            P &= ~bit
            X |= bit

    if g.vertex_count:
        expand([], (1 << g.vertex_count) - 1, 0)
    return sorted(out)


def independence_number(g: Graph, limit: int | None = CLIQUE_LIMIT) -> CliqueResult:
    return clique_number(g.complement(), limit)


# ---------------------------------------------------------------------------
# Colouring
# ---------------------------------------------------------------------------


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    """``colors`` is indexed by vertex position."""
    c = np.asarray(colors)
    rows, cols = np.nonzero(np.triu(g.adj, 1))
    return bool((c[rows] != c[cols]).all())


def _dsatur_pick(uncolored: int, colors: list[int], masks, class_masks: list[int]) -> int:
    best_v, best_key = -1, None
    for v in _bits(uncolored):
        sat = sum(1 for cm in class_masks if cm & masks[v])
        key = (sat, _popcount(masks[v] & uncolored), -v)
        if best_key is None or key > best_key:
            best_v, best_key = v, key
    return best_v


def _greedy_dsatur(masks, n: int) -> list[int]:
    colors = [-1] * n
    class_masks: list[int] = []
    uncolored = (1 << n) - 1
    while uncolored:
        v = _dsatur_pick(uncolored, colors, masks, class_masks)
        c = next((c for c, cm in enumerate(class_masks) if not cm & masks[v]), len(class_masks))
        if c == len(class_masks):
            class_masks.append(0)
        class_masks[c] |= 1 << v
        colors[v] = c
        uncolored &= ~(1 << v)
    return colors


def _exact_coloring(masks, n: int, lower: int) -> list[int]:
    best = _greedy_dsatur(masks, n)
    ub = max(best) + 1
    if ub <= lower:
        return best
    colors = [-1] * n
    class_masks: list[int] = []

    def search(uncolored: int) -> bool:
        nonlocal best, ub
        if not uncolored:
            best = colors.copy()
            ub = len(class_masks)
            return ub <= lower
        if len(class_masks) >= ub:
            return False
        v = _dsatur_pick(uncolored, colors, masks, class_masks)
        used = len(class_masks)
        for c in range(used + 1):
            if c == used:
                if used + 1 >= ub:
                    break
                class_masks.append(0)
            elif class_masks[c] & masks[v]:
                continue
            class_masks[c] |= 1 << v
            colors[v] = c
            if search(uncolored & ~(1 << v)):
                return True
            class_masks[c] &= ~(1 << v)
            colors[v] = -1
            if c == used:
                class_masks.pop()
        return False

    search((1 << n) - 1)
    return best


def chromatic_number(g: Graph, limit: int | None = CHROMATIC_LIMIT, hint: Sequence[int] | None = None) -> int:
    """Exact chromatic number by DSATUR branch and bound.

    A proper colouring ``hint`` (indexed by vertex position) that uses exactly
    clique-number many colours certifies the answer without the size limit.
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("chromatic_number needs a nonempty graph")
    if hint is not None and is_proper_coloring(g, hint):
        lower = clique_number(g).size
        if len(set(hint)) == lower:
            return lower
    _check_size("chromatic_number", n, limit)
    lower = clique_number(g).size
    return max(_exact_coloring(g.masks, n, lower)) + 1


def exact_coloring(g: Graph, limit: int | None = CHROMATIC_LIMIT) -> list[int]:
    """An optimal colouring, colours 0..chi-1 indexed by vertex position."""
    _check_size("exact_coloring", g.vertex_count, limit)
    if g.vertex_count == 0:
        return []
    return _exact_coloring(g.masks, g.vertex_count, clique_number(g).size)


# ---------------------------------------------------------------------------
# Domination, distances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Domination:
    value: int
    exact: bool
    witness: tuple[int, ...]

    def __int__(self) -> int:
        return self.value


def _can_dominate(closed: Sequence[int], undominated: int, k: int, chosen: list[int]) -> bool:
    if not undominated:
        return True
    if k == 0:
        return False
    need = _popcount(undominated)
    cover = sorted(((_popcount(closed[v] & undominated), v) for v in _bits(closed[_lowest(undominated)])),
                   key=lambda t: (-t[0], t[1]))
    best_cover = max(_popcount(c & undominated) for c in closed)
    if best_cover * k < need:
        return False
    for _, v in cover:
        chosen.append(v)
        if _can_dominate(closed, undominated & ~closed[v], k - 1, chosen):
            return True
        chosen.pop()
    return False


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def domination_number(g: Graph, exact_limit: int = DOMINATION_LIMIT) -> Domination:
    n = g.vertex_count
    if n == 0:
        raise ValueError("domination_number needs a nonempty graph")
    full = (1 << n) - 1
    closed = [m | (1 << i) for i, m in enumerate(g.masks)]
    universal = next((i for i, c in enumerate(closed) if c == full), None)
    if universal is not None:
        return Domination(1, True, (g.labels[universal],))
    if n <= exact_limit:
        for k in range(2, n + 1):
            chosen: list[int] = []
            if _can_dominate(closed, full, k, chosen):
                return Domination(k, True, tuple(sorted(g.labels[v] for v in chosen)))
    chosen = []
    undominated = full
    while undominated:
        v = max(range(n), key=lambda u: (_popcount(closed[u] & undominated), -u))
        chosen.append(v)
        undominated &= ~closed[v]
    return Domination(len(chosen), False, tuple(sorted(g.labels[v] for v in chosen)))


def diameter_and_components(g: Graph) -> tuple[float, int]:
    """``(diameter, component_count)``; the diameter is ``math.inf`` when disconnected."""
    n = g.vertex_count
    if n == 0:
        raise ValueError("diameter_and_components needs a nonempty graph")
    masks = g.masks
    full = (1 << n) - 1
    seen, components = 0, 0
    for s in range(n):
        if not seen >> s & 1:
            components += 1
            seen |= _reach(masks, s)[0]
    if components > 1:
        return math.inf, components
    if n == 1:
        return 0, 1
    if any(m | (1 << i) == full for i, m in enumerate(masks)):
        return (1 if g.edge_count == n * (n - 1) // 2 else 2), 1
    return max(_reach(masks, s)[1] for s in range(n)), 1


def _reach(masks, s: int) -> tuple[int, int]:
    reached = frontier = 1 << s
    depth = 0
    while True:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        nxt &= ~reached
        if not nxt:
            return reached, depth
        reached |= nxt
        frontier = nxt
        depth += 1


# ---------------------------------------------------------------------------
# Power-graph specific
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainFormulaResult:
    exponent: int
    best_chain: tuple[int, ...]
    value: int


def power_omega_chi_formula(G: FiniteGroup) -> ChainFormulaResult:
    """Largest sum of phi(d) over a divisor chain of the exponent, counting only
    divisors d for which G has an element of order d.

    Weights are nonnegative, so a longest path through the covering relations
    d/p -> d of the divisor lattice attains the maximum over all chains; the
    returned chain is maximal (runs from 1 to the exponent), ties broken
    towards the smaller predecessor.
    """
    n = exponent(G)
    present = set(int(o) for o in G.orders)
    best: dict[int, int] = {}
    prev: dict[int, int | None] = {}
    for d in divisors(n):
        w = euler_phi(d) if d in present else 0
        if d == 1:
            best[d], prev[d] = w, None
            continue
        preds = sorted(d // p for p, _ in factorize(d))
        top = max(preds, key=lambda c: (best[c], -c))
        best[d], prev[d] = best[top] + w, top
    chain = []
    d: int | None = n
    while d is not None:
        chain.append(d)
        d = prev[d]
    return ChainFormulaResult(n, tuple(reversed(chain)), best[n])


def comparability_coloring(G: FiniteGroup) -> tuple[int, ...]:
    """Colour each element by the number of vertices on the longest directed path
    ending at it, in the digraph with arcs x -> y for x a proper power of y
    (strictly smaller cyclic subgroup) plus, inside each class of generators of
    the same cyclic subgroup, a path in element-id order.

    Returns colours ``1..m`` indexed by element id.
    """
    members = G.power_members
    orders = G.orders
    n = G.order
    topo = sorted(range(n), key=lambda x: (int(orders[x]), x))
    longest = [0] * n
    last_in_class: dict[tuple[int, ...], int] = {}
    for x in topo:
        below = np.flatnonzero(members[x] & (orders < orders[x]))
        length = 1 + max((longest[y] for y in below), default=0)
        key = tuple(np.flatnonzero(members[x]))
        if key in last_in_class:
            length = max(length, longest[last_in_class[key]] + 1)
        last_in_class[key] = x
        longest[x] = length
    return tuple(longest)


# ---------------------------------------------------------------------------
# Perfectness probe
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PerfectnessParams:
    samples: int = 200
    max_induced_size: int = 12
    max_hole_length: int = 9
    seed: int = 0
    cancel: threading.Event | None = field(default=None, compare=False)

    def as_dict(self) -> dict:
        return {"samples": self.samples, "max_induced_size": self.max_induced_size,
                "max_hole_length": self.max_hole_length, "seed": self.seed}


@dataclass(frozen=True)
class PerfectnessVerdict:
    perfect: bool
    params: PerfectnessParams
    reason: str = ""
    witness: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        return "perfect-sampled" if self.perfect else "counterexample"

    def as_dict(self) -> dict:
        out = {"verdict": self.label, "params": self.params.as_dict()}
        if not self.perfect:
            out["reason"] = self.reason
            out["witness"] = list(self.witness)
        return out


def _check_cancel(cancel) -> None:
    if cancel is not None and cancel.is_set():
        raise Cancelled("perfectness check cancelled")


def find_odd_hole(g: Graph, max_length: int = 9, min_length: int = 5, cancel=None) -> tuple[int, ...] | None:
    """First induced odd cycle of length in ``[min_length, max_length]``, or None.

    Cycles are grown as induced paths from their smallest vertex s; a
    candidate extension must avoid the closed neighbourhoods of every path
    vertex but the last, and must not touch s unless it closes the cycle.
    """
    masks = g.masks
    n = g.vertex_count
    closed = [m | (1 << i) for i, m in enumerate(masks)]

    def grow(s: int, path: list[int], forbid: int, allowed: int) -> list[int] | None:
        last = path[-1]
        cands = masks[last] & allowed & ~forbid
        k = len(path)
        close = cands & masks[s]
        if close and k + 1 >= min_length and (k + 1) % 2 == 1:
            return path + [_lowest(close)]
        if k + 2 > max_length:
            return None
        forbid_next = forbid | closed[last]
        for w in _bits(cands & ~masks[s]):
            found = grow(s, path + [w], forbid_next, allowed)
            if found is not None:
                return found
        return None

    for s in range(n):
        _check_cancel(cancel)
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        for a in _bits(masks[s] & allowed):
            found = grow(s, [s, a], (1 << s) | (1 << a), allowed)
            if found is not None:
                return tuple(g.labels[i] for i in found)
    return None


def perfectness_check(g: Graph, params: PerfectnessParams | None = None) -> PerfectnessVerdict:
    """Search for odd holes/antiholes and sample induced subgraphs for chi == omega."""
    params = params or PerfectnessParams()
    for reason, graph in (("odd-hole", g), ("odd-antihole", g.complement())):
        hole = find_odd_hole(graph, params.max_hole_length, cancel=params.cancel)
        if hole is not None:
            return PerfectnessVerdict(False, params, reason, hole)
    rng = random.Random(params.seed)
    n = g.vertex_count
    for _ in range(params.samples if n else 0):
        _check_cancel(params.cancel)
        k = rng.randint(1, min(params.max_induced_size, n))
        verts = sorted(rng.sample(g.labels, k))
        sub = g.induced(verts)
        if chromatic_number(sub) != clique_number(sub).size:
            return PerfectnessVerdict(False, params, "chi-ne-omega", tuple(verts))
    return PerfectnessVerdict(True, params)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    clique_number: int
    clique_witness: tuple[int, ...]
    chromatic_number: int
    independence_number: int
    domination_number: int
    domination_exact: bool
    diameter: float
    component_count: int
    perfect: PerfectnessVerdict | None = None

    def as_dict(self) -> dict:
        out = {
            "omega": self.clique_number,
            "omega_witness": list(self.clique_witness),
            "chi": self.chromatic_number,
            "alpha": self.independence_number,
            "gamma": self.domination_number,
            "gamma_exact": self.domination_exact,
            "diameter": "inf" if self.diameter == math.inf else int(self.diameter),
            "components": self.component_count,
        }
        if self.perfect is not None:
            out["perfectness"] = self.perfect.as_dict()
        return out


def invariant_report(g: Graph, G: FiniteGroup | None = None, params: PerfectnessParams | None = None,
                     probe_perfectness: bool = True) -> InvariantReport:
    """All invariants of ``g``.  Passing the group of a power graph lets the
    chromatic number be certified by the layering colouring above the
    branch-and-bound size limit."""
    omega = clique_number(g)
    hint = None
    if G is not None and g.kind == "power":
        colors = comparability_coloring(G)
        hint = [colors[v] for v in g.labels]
    chi = chromatic_number(g, hint=hint)
    alpha = independence_number(g)
    gamma = domination_number(g)
    diam, comps = diameter_and_components(g)
    verdict = perfectness_check(g, params) if probe_perfectness else None
    return InvariantReport(omega.size, omega.witness, chi, alpha.size, gamma.value, gamma.exact, diam, comps,
                           verdict)
