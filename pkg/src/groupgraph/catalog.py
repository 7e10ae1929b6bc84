"""Built-in group catalog and the per-(group, graph kind) invariant sweep."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement

from .classify import GroupAnalysis
from .errors import SizeBound
from .graphs import KINDS
from .groups import (
    Alternating,
    Cyclic,
    Dihedral,
    DirectProduct,
    ElementaryAbelian,
    GeneralizedQuaternion,
    GroupSpec,
    SemidirectCyclic,
    Symmetric,
    build_group,
)
from .invariants import (
    chromatic_number,
    clique_number,
    diameter_and_components,
    domination_number,
    independence_number,
)
from .numtheory import is_prime

CSV_COLUMNS = ("group", "order", "kind", "omega", "chi", "alpha", "gamma", "diameter", "eppo",
               "prime_graph_null", "pc_class", "pow_eq_enh", "enh_eq_comm", "pow_eq_comm")


def _atoms(max_order: int) -> list[GroupSpec]:
    atoms: list[GroupSpec] = [Cyclic(n) for n in range(1, max_order + 1)]
    atoms += [Dihedral(n) for n in range(6, max_order + 1, 2)]
    atoms += [GeneralizedQuaternion(n) for n in range(8, max_order + 1, 4)]
    atoms += [s for s in (Symmetric(3), Symmetric(4), Symmetric(5)) if s.order <= max_order]
    atoms += [s for s in (Alternating(4), Alternating(5)) if s.order <= max_order]
    for p in range(2, max_order + 1):
        if is_prime(p):
            k = 2
            while p**k <= max_order:
                atoms.append(ElementaryAbelian(p, k))
                k += 1
    return atoms


def _order(spec: GroupSpec) -> int:
    return spec.order


def _semidirects(max_order: int) -> list[SemidirectCyclic]:
    out = []
    for p in range(3, max_order + 1):
        if not is_prime(p):
            continue
        a = 1
        while p**a <= max_order:
            for q in range(2, p):
                if not is_prime(q):
                    continue
                b = 1
                while (p - 1) % q**b == 0 and p**a * q**b <= max_order:
                    out.append(SemidirectCyclic(p, a, q, b))
                    b += 1
            a += 1
    return out


def catalog_specs(max_order: int) -> list[GroupSpec]:
    """Every catalog group of order <= ``max_order``, sorted by (order, label).

    Cyclic, dihedral, quaternion (dicyclic for non-2-power orders), S3-S5,
    A4-A5, elementary abelian groups of rank >= 2, every faithful
    Cp^a:Cq^b, and direct products of two nontrivial atoms.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    atoms = _atoms(max_order)
    specs: dict[str, GroupSpec] = {s.label: s for s in atoms}
    for s in _semidirects(max_order):
        specs[s.label] = s
    factors = [s for s in atoms if _order(s) > 1]
    for a, b in combinations_with_replacement(factors, 2):
        if _order(a) * _order(b) <= max_order:
            prod = DirectProduct((a, b))
            specs[prod.label] = prod
    return sorted(specs.values(), key=lambda s: (_order(s), s.label))


def _fmt_bool(value) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def _safe(fn):
    try:
        return fn()
    except SizeBound:
        return "NA"


def group_rows(spec: GroupSpec) -> list[dict]:
    """Catalog CSV rows (one per graph kind) for one group."""
    G = build_group(spec)
    A = GroupAnalysis(G)
    shared = {
        "eppo": _fmt_bool(A.eppo),
        "prime_graph_null": _fmt_bool(A.prime_null),
        "pc_class": str(A.pc_class),
        "pow_eq_enh": _fmt_bool(A.pow_eq_enh.equal),
        "enh_eq_comm": _fmt_bool(A.enh_eq_comm.equal),
        "pow_eq_comm": _fmt_bool(A.pow_eq_comm.equal),
    }
    rows = []
    for kind in KINDS:
        g = getattr(A, kind)
        hint = None
        if kind == "power":
            hint = list(A.coloring)
        gamma = domination_number(g)
        diam, _ = diameter_and_components(g)
        rows.append({
            "group": G.label,
            "order": G.order,
            "kind": kind,
            "omega": _safe(lambda: clique_number(g).size),
            "chi": _safe(lambda: chromatic_number(g, hint=hint)),
            "alpha": _safe(lambda: independence_number(g).size),
            "gamma": gamma.value if gamma.exact else f"<={gamma.value}",
            "diameter": "inf" if diam == math.inf else int(diam),
            **shared,
        })
    return rows


def catalog_rows(max_order: int, jobs: int = 1) -> list[dict]:
    specs = catalog_specs(max_order)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(group_rows, specs, chunksize=4))
    else:
        chunks = [group_rows(s) for s in specs]
    rows = [r for chunk in chunks for r in chunk]
    kind_rank = {k: i for i, k in enumerate(KINDS)}
    rows.sort(key=lambda r: (r["order"], r["group"], kind_rank[r["kind"]]))
    return rows
