"""Structural predicates on groups and the theorem-checking harness.

Each check in ``verify_theorems`` recomputes both sides of a stated
equivalence from independent data (graphs on one side, element orders or
subgroup scans on the other) and reports a witness whenever they disagree.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .errors import SizeBound
from .graphs import Graph, build_graph, directed_power_graph, enhanced_from_directed, graphs_equal, prime_graph
from .groups import (
    ElementSet,
    FiniteGroup,
    centralizer,
    is_cyclic,
    is_cyclic_set,
    order_spectrum,
)
from .invariants import (
    CLIQUE_LIMIT,
    PerfectnessParams,
    chromatic_number,
    clique_number,
    comparability_coloring,
    diameter_and_components,
    domination_number,
    is_proper_coloring,
    maximal_cliques,
    perfectness_check,
    power_omega_chi_formula,
)
from .numtheory import euler_phi, factorize, is_prime, is_prime_power_or_one, prime_power

TRIPLE_EXHAUSTIVE_LIMIT = 24
TRIPLE_SAMPLES = 10_000


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def is_eppo(G: FiniteGroup) -> bool:
    """Every element has prime-power order."""
    return all(is_prime_power_or_one(int(o)) for o in np.unique(G.orders))


def prime_graph_is_null(G: FiniteGroup) -> bool:
    return prime_graph(G).edge_count == 0


class PrimeSquare(NamedTuple):
    found: bool
    p: int | None = None
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.found


def has_prime_square_subgroup(G: FiniteGroup) -> PrimeSquare:
    """Look for commuting x, y of the same prime order p with y outside <x>;
    such a pair generates C_p x C_p.  Returns the lexicographically least pair."""
    orders = G.orders
    prime_elems = [x for x in range(G.order) if is_prime(int(orders[x]))]
    for i, x in enumerate(prime_elems):
        for y in prime_elems[i + 1:]:
            if orders[x] == orders[y] and G.commutes[x, y] and not G.power_members[x, y]:
                return PrimeSquare(True, int(orders[x]), (x, y))
    return PrimeSquare(False)


def is_generalized_quaternion(G: FiniteGroup) -> bool:
    pp = prime_power(G.order)
    if pp is None or pp[0] != 2 or G.order < 8:
        return False
    return int((G.orders == 2).sum()) == 1 and not is_cyclic(G)


@dataclass(frozen=True)
class PowerCommutingClass:
    tag: str
    params: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.tag != "None"

    def __str__(self) -> str:
        if self.tag == "CyclicPGroup" and not self.params:
            return "CyclicPGroup(trivial)"
        return self.tag + (f"({','.join(map(str, self.params))})" if self.params else "")


NO_CLASS = PowerCommutingClass("None")


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _semidirect_class(G: FiniteGroup, p: int, q: int) -> PowerCommutingClass | None:
    exps = dict(factorize(G.order))
    a, b = exps[p], exps[q]
    pa, qb = p**a, q**b
    orders = G.orders
    P = [x for x in range(G.order) if _is_power_of(int(orders[x]), p)]
    if len(P) != pa:
        return None
    sub = G.mul[np.ix_(P, P)]
    if not np.isin(sub, P).all():
        return None
    if not (orders[P] == pa).any():
        return None
    if not (orders == qb).any() or (p - 1) % qb:
        return None
    if centralizer(G, P).elements != tuple(P):
        return None
    return PowerCommutingClass("SemidirectPQ", (p, a, q, b))


def power_eq_commuting_class(G: FiniteGroup) -> PowerCommutingClass:
    """Which of the three families with equal power and commuting graphs G belongs to."""
    if G.order == 1:
        return PowerCommutingClass("CyclicPGroup")
    pp = prime_power(G.order)
    if pp is not None and is_cyclic(G):
        return PowerCommutingClass("CyclicPGroup", (pp[0],))
    if is_generalized_quaternion(G):
        return PowerCommutingClass("GeneralizedQuaternion")
    primes = [p for p, _ in factorize(G.order)]
    if len(primes) == 2:
        for p, q in (primes, primes[::-1]):
            found = _semidirect_class(G, p, q)
            if found is not None:
                return found
    return NO_CLASS


def maximal_cyclic_subgroups(G: FiniteGroup) -> list[ElementSet]:
    rows = {tuple(np.flatnonzero(r).tolist()) for r in G.power_members}
    sets = {r: frozenset(r) for r in rows}
    maximal = [r for r in rows if not any(sets[r] < sets[s] for s in rows)]
    return [ElementSet(G.label, r) for r in sorted(maximal)]


# ---------------------------------------------------------------------------
# Harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    group: str
    status: str
    witness: dict | None = None
    details: dict = field(default_factory=dict)
    flagged: bool = False

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        out = {"theorem": self.theorem, "group": self.group, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.flagged:
            out["flagged"] = True
        out["details"] = self.details
        return out


class GroupAnalysis:
    """Lazily built graphs and invariants of one group, shared across checks."""

    def __init__(self, G: FiniteGroup, params: PerfectnessParams | None = None):
        self.G = G
        self.params = params or PerfectnessParams()

    @cached_property
    def power(self) -> Graph:
        return build_graph(self.G, "power")

    @cached_property
    def enhanced(self) -> Graph:
        return build_graph(self.G, "enhanced")

    @cached_property
    def commuting(self) -> Graph:
        return build_graph(self.G, "commuting")

    @cached_property
    def power_omega(self) -> int:
        return clique_number(self.power).size

    @cached_property
    def coloring(self) -> tuple[int, ...]:
        return comparability_coloring(self.G)

    @cached_property
    def formula(self):
        return power_omega_chi_formula(self.G)

    @cached_property
    def pc_class(self) -> PowerCommutingClass:
        return power_eq_commuting_class(self.G)

    @cached_property
    def eppo(self) -> bool:
        return is_eppo(self.G)

    @cached_property
    def prime_null(self) -> bool | None:
        return prime_graph_is_null(self.G) if self.G.order > 1 else None

    @cached_property
    def prime_square(self) -> PrimeSquare:
        return has_prime_square_subgroup(self.G)

    @cached_property
    def pow_eq_enh(self):
        return graphs_equal(self.power, self.enhanced)

    @cached_property
    def enh_eq_comm(self):
        return graphs_equal(self.enhanced, self.commuting)

    @cached_property
    def pow_eq_comm(self):
        return graphs_equal(self.power, self.commuting)


def _report(A: GroupAnalysis, theorem: str, ok: bool, witness=None, flagged: bool = False, **details) -> TheoremReport:
    return TheoremReport(theorem, A.G.label, "pass" if ok else "fail", None if ok else witness, details, flagged)


def _check_chain_formula(A: GroupAnalysis) -> TheoremReport:
    omega = A.power_omega
    chi = chromatic_number(A.power, hint=A.coloring)
    f = A.formula
    ok = omega == chi == f.value and f.value <= f.exponent
    return _report(A, "chain-formula", ok, {"omega": omega, "chi": chi, "formula": f.value},
                   omega=omega, chi=chi, formula=f.value, chain=list(f.best_chain), exponent=f.exponent)


def _check_layering(A: GroupAnalysis) -> TheoremReport:
    colors = A.coloring
    proper = is_proper_coloring(A.power, colors)
    used = len(set(colors))
    ok = proper and used == A.power_omega
    witness = None
    if not proper:
        u, v = next((u, v) for u, v in A.power.edges() if colors[u] == colors[v])
        witness = {"pair": [u, v], "color": colors[u]}
    else:
        witness = {"colors": used, "omega": A.power_omega}
    return _report(A, "layering-coloring", ok, witness, colors=used, omega=A.power_omega)


def _check_fact1(A: GroupAnalysis) -> TheoremReport:
    G = A.G
    for d in sorted(set(int(o) for o in G.orders)):
        layer = [x for x in range(G.order) if G.orders[x] == d]
        sub = A.power.induced(layer)
        reach = sub.adj | np.eye(len(layer), dtype=bool)
        for i in range(len(layer)):
            block = np.flatnonzero(reach[i])
            if len(block) != euler_phi(d) or not reach[np.ix_(block, block)].all():
                return _report(A, "fact1", False, {"order": d, "element": layer[i],
                                                   "component": [layer[j] for j in block]})
    return _report(A, "fact1", True)


def _check_perfect(A: GroupAnalysis) -> TheoremReport:
    verdict = perfectness_check(A.power, A.params)
    return _report(A, "perfect-probe", verdict.perfect, verdict.as_dict(), **verdict.as_dict())


def _is_triangle_free(g: Graph) -> bool:
    a = g.adj.astype(np.float32)
    return not ((a @ a) * a).any()


def _check_triangle_free(A: GroupAnalysis) -> TheoremReport:
    G, g = A.G, A.power
    tri_free = _is_triangle_free(g)
    elem_ab_2 = order_spectrum(G) == ({1: 1, 2: G.order - 1} if G.order > 1 else {1: 1})
    degrees = g.adj.sum(axis=1)
    star = bool(degrees[G.identity] == G.order - 1) and g.edge_count == G.order - 1
    ok = tri_free == elem_ab_2 and (not tri_free or star)
    return _report(A, "triangle-free-star", ok, {"triangle_free": tri_free, "elementary_abelian_2": elem_ab_2,
                                                 "star": star}, triangle_free=tri_free, star=star)


def _check_periodic(A: GroupAnalysis) -> TheoremReport:
    gamma = domination_number(A.power)
    diam, comps = diameter_and_components(A.power)
    ok = gamma.value == 1 and diam <= 2 and comps == 1
    return _report(A, "periodic-domination", ok, {"gamma": gamma.value, "diameter": str(diam), "components": comps},
                   gamma=gamma.value, diameter=diam, components=comps)


def _check_spanning(A: GroupAnalysis) -> TheoremReport:
    bad1 = np.argwhere(A.power.adj & ~A.enhanced.adj)
    bad2 = np.argwhere(A.enhanced.adj & ~A.commuting.adj)
    if bad1.size:
        return _report(A, "spanning-chain", False, {"power_not_enhanced": bad1[0].tolist()})
    if bad2.size:
        return _report(A, "spanning-chain", False, {"enhanced_not_commuting": bad2[0].tolist()})
    return _report(A, "spanning-chain", True)


def _check_enhanced_square(A: GroupAnalysis) -> TheoremReport:
    # loops assumed on the power graph, so distance <= 2 means adjacent or a common neighbour
    p = A.power.adj.astype(np.float32)
    within2 = A.power.adj | ((p @ p) > 0.5)
    bad = np.argwhere(A.enhanced.adj & ~within2)
    return _report(A, "enhanced-square", bad.size == 0, {"pair": bad[0].tolist()} if bad.size else None)


def _check_directed(A: GroupAnalysis) -> TheoremReport:
    rebuilt = enhanced_from_directed(directed_power_graph(A.G))
    eq = graphs_equal(rebuilt, A.enhanced)
    return _report(A, "enhanced-from-directed", eq.equal, {"pair": list(eq.witness or ())})


def _check_power_commuting(A: GroupAnalysis) -> TheoremReport:
    eq, cls = A.pow_eq_comm, A.pc_class
    flagged = eq.equal and not cls
    ok = eq.equal == bool(cls) or flagged
    return _report(A, "power-eq-commuting", ok, {"pair": list(eq.witness or ()), "class": str(cls)},
                   flagged=flagged, equal=eq.equal, **{"class": str(cls)})


def _check_power_enhanced(A: GroupAnalysis) -> TheoremReport:
    eq = A.pow_eq_enh
    if A.G.order == 1:
        return _report(A, "power-eq-enhanced", eq.equal and A.eppo, equal=eq.equal, eppo=A.eppo)
    ok = eq.equal == A.eppo == A.prime_null
    witness = {"pair": list(eq.witness or ()), "eppo": A.eppo, "prime_graph_null": A.prime_null}
    bad = [x for x in range(A.G.order) if not is_prime_power_or_one(int(A.G.orders[x]))]
    if bad:
        witness["non_prime_power_element"] = bad[0]
    return _report(A, "power-eq-enhanced", ok, witness, equal=eq.equal, eppo=A.eppo, prime_graph_null=A.prime_null)


def _check_enhanced_commuting(A: GroupAnalysis) -> TheoremReport:
    eq, sq = A.enh_eq_comm, A.prime_square
    ok = eq.equal == (not sq.found)
    return _report(A, "enhanced-eq-commuting", ok,
                   {"pair": list(eq.witness or ()), "prime_square": list(sq.witness or ()), "p": sq.p},
                   equal=eq.equal, prime_square=sq.found)


def _check_triples(A: GroupAnalysis) -> TheoremReport:
    G = A.G
    n = G.order
    checked = 0
    if n <= TRIPLE_EXHAUSTIVE_LIMIT:
        pair_ok = np.zeros((n, n), dtype=bool)
        for x, y in itertools.combinations(range(n), 2):
            pair_ok[x, y] = pair_ok[y, x] = is_cyclic_set(G, (x, y))
        triples = ((x, y, z) for x, y, z in itertools.combinations(range(n), 3)
                   if pair_ok[x, y] and pair_ok[x, z] and pair_ok[y, z])
        mode = "exhaustive"
    else:
        triples = _sample_triangles(A.enhanced, TRIPLE_SAMPLES)
        mode = "sampled"
    for t in triples:
        checked += 1
        if not is_cyclic_set(G, t):
            return _report(A, "triple-cyclic", False, {"triple": list(t)}, mode=mode)
    return _report(A, "triple-cyclic", True, mode=mode, triples=checked)


def _sample_triangles(g: Graph, count: int, seed: int = 0):
    rng = random.Random(seed)
    edges = g.edge_indices()
    if not edges:
        return
    for _ in range(count):
        i, j = edges[rng.randrange(len(edges))]
        common = np.flatnonzero(g.adj[i] & g.adj[j])
        if common.size:
            k = int(common[rng.randrange(common.size)])
            yield tuple(sorted((g.labels[i], g.labels[j], g.labels[k])))


def _check_maximal_cliques(A: GroupAnalysis) -> TheoremReport:
    cliques = set(maximal_cliques(A.enhanced))
    cyclic = {c.elements for c in maximal_cyclic_subgroups(A.G)}
    diff = sorted(cliques ^ cyclic)
    return _report(A, "maximal-cliques-enhanced", not diff,
                   {"set": list(diff[0]), "is_clique": diff[0] in cliques} if diff else None,
                   cliques=len(cliques))


def _check_omega_enhanced(A: GroupAnalysis) -> TheoremReport:
    omega_e = clique_number(A.enhanced).size
    max_order = int(A.G.orders.max())
    ok = omega_e == max_order and omega_e >= A.power_omega
    return _report(A, "omega-enhanced", ok, {"omega_enhanced": omega_e, "max_order": max_order,
                                             "omega_power": A.power_omega},
                   omega_enhanced=omega_e, max_order=max_order, omega_power=A.power_omega)


THEOREMS = {
    "chain-formula": _check_chain_formula,
    "layering-coloring": _check_layering,
    "fact1": _check_fact1,
    "perfect-probe": _check_perfect,
    "triangle-free-star": _check_triangle_free,
    "periodic-domination": _check_periodic,
    "spanning-chain": _check_spanning,
    "enhanced-square": _check_enhanced_square,
    "enhanced-from-directed": _check_directed,
    "power-eq-commuting": _check_power_commuting,
    "power-eq-enhanced": _check_power_enhanced,
    "enhanced-eq-commuting": _check_enhanced_commuting,
    "triple-cyclic": _check_triples,
    "maximal-cliques-enhanced": _check_maximal_cliques,
    "omega-enhanced": _check_omega_enhanced,
}


def resolve_theorems(selection: str | Iterable[str]) -> list[str]:
    if isinstance(selection, str):
        selection = [s.strip() for s in selection.split(",") if s.strip()]
    selection = list(selection)
    if "all" in selection:
        return list(THEOREMS)
    unknown = [s for s in selection if s not in THEOREMS]
    if unknown:
        raise ValueError(f"unknown theorem ids {unknown}; choose from {list(THEOREMS)} or 'all'")
    return [t for t in THEOREMS if t in selection]


def verify_theorems(G: FiniteGroup, selection: str | Iterable[str] = "all",
                    params: PerfectnessParams | None = None,
                    analysis: GroupAnalysis | None = None) -> list[TheoremReport]:
    if G.order > CLIQUE_LIMIT:
        raise SizeBound("verify_theorems", G.order, CLIQUE_LIMIT)
    A = analysis or GroupAnalysis(G, params)
    return [THEOREMS[t](A) for t in resolve_theorems(selection)]
