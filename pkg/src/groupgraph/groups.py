"""Finite groups as Cayley tables, frozen descriptions of the supported families,
and the element/subgroup queries the graph constructions are built on.

Element id 0 is the identity in every constructed group.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Iterator, Union

import numpy as np

from .errors import InvalidSpec, InvalidTable, NoFaithfulAction
from .numtheory import is_prime, multiplicative_order

# Full associativity check up to this order, sampled above it.
FULL_ASSOCIATIVITY_LIMIT = 256


# ---------------------------------------------------------------------------
# Group specifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec(f"cyclic group needs n >= 1, got {self.n}")

    @property
    def label(self) -> str:
        return f"C{self.n}"

    @property
    def order(self) -> int:
        return self.n


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group given by its full order (``Dihedral(8)`` has 8 elements)."""

    order: int

    def __post_init__(self):
        if self.order < 6 or self.order % 2:
            raise InvalidSpec(f"dihedral order must be even and >= 6, got {self.order}")

    @property
    def label(self) -> str:
        return f"D{self.order}"


@dataclass(frozen=True)
class GeneralizedQuaternion:
    """Group <a, b | a^(2m) = e, b^2 = a^m, b a b^-1 = a^-1> of order 4m.

    For m a power of two this is the generalized quaternion 2-group; other m
    give the dicyclic groups, which share the presentation.
    """

    order: int

    def __post_init__(self):
        if self.order < 8 or self.order % 4:
            raise InvalidSpec(f"quaternion order must be a multiple of 4 and >= 8, got {self.order}")

    @property
    def label(self) -> str:
        return f"Q{self.order}"


@dataclass(frozen=True)
class Symmetric:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec(f"symmetric group needs n >= 1, got {self.n}")

    @property
    def label(self) -> str:
        return f"S{self.n}"

    @property
    def order(self) -> int:
        return math.factorial(self.n)


@dataclass(frozen=True)
class Alternating:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidSpec(f"alternating group needs n >= 3, got {self.n}")

    @property
    def label(self) -> str:
        return f"A{self.n}"

    @property
    def order(self) -> int:
        return math.factorial(self.n) // 2


@dataclass(frozen=True)
class ElementaryAbelian:
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidSpec(f"elementary abelian group needs a prime, got {self.p}")
        if self.k < 1:
            raise InvalidSpec(f"elementary abelian rank must be >= 1, got {self.k}")

    @property
    def label(self) -> str:
        return f"E{self.p}^{self.k}"

    @property
    def order(self) -> int:
        return self.p**self.k


@dataclass(frozen=True)
class SemidirectCyclic:
    """C_{p^a} extended by C_{q^b} acting faithfully through a unit of order q^b."""

    p: int
    a: int
    q: int
    b: int

    def __post_init__(self):
        if not (is_prime(self.p) and is_prime(self.q)) or self.p == self.q:
            raise InvalidSpec(f"semidirect product needs distinct primes, got p={self.p}, q={self.q}")
        if self.a < 1 or self.b < 1:
            raise InvalidSpec(f"semidirect exponents must be >= 1, got a={self.a}, b={self.b}")
        if (self.p - 1) % self.q**self.b:
            raise NoFaithfulAction(
                f"{self.q}^{self.b} does not divide {self.p}-1: no faithful action on C{self.p**self.a}"
            )

    @property
    def normal_order(self) -> int:
        return self.p**self.a

    @property
    def top_order(self) -> int:
        return self.q**self.b

    @cached_property
    def unit(self) -> int:
        """Smallest u >= 2 of multiplicative order exactly q^b modulo p^a."""
        m, target = self.normal_order, self.top_order
        for u in range(2, m):
            if math.gcd(u, m) == 1 and multiplicative_order(u, m) == target:
                return u
        raise NoFaithfulAction(f"no unit of order {target} modulo {m}")  # pragma: no cover

    @property
    def label(self) -> str:
        return f"C{self.normal_order}:C{self.top_order}"

    @property
    def order(self) -> int:
        return self.normal_order * self.top_order


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple

    def __post_init__(self):
        flat = []
        for f in self.factors:
            flat.extend(f.factors if isinstance(f, DirectProduct) else [f])
        if len(flat) < 2:
            raise InvalidSpec("direct product needs at least two factors")
        object.__setattr__(self, "factors", tuple(flat))

    @property
    def label(self) -> str:
        return "x".join(f"({f.label})" if isinstance(f, SemidirectCyclic) else f.label for f in self.factors)

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)


GroupSpec = Union[
    Cyclic, Dihedral, GeneralizedQuaternion, Symmetric, Alternating, ElementaryAbelian, DirectProduct, SemidirectCyclic
]


# ---------------------------------------------------------------------------
# Cayley-table groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ElementSet:
    """Sorted set of element ids of a parent group."""

    parent: str
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def as_set(self) -> frozenset:
        return self._members


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Immutable Cayley-table group.

    ``mul[x, y]`` is the id of ``x*y``; ``orders[x]`` is the order of ``x``.
    """

    order: int
    mul: np.ndarray
    identity: int
    inv: np.ndarray
    orders: np.ndarray
    label: str = "G"
    spec: object = field(default=None, repr=False)

    @classmethod
    def from_table(cls, table, label: str = "G", spec=None, check: bool = True) -> FiniteGroup:
        mul = np.asarray(table, dtype=np.int32)
        n = mul.shape[0]
        if mul.ndim != 2 or mul.shape != (n, n) or n == 0:
            raise InvalidTable(f"multiplication table must be square and nonempty, got shape {mul.shape}")
        if mul.min() < 0 or mul.max() >= n:
            raise InvalidTable("table entries out of range")
        ids = np.arange(n)
        sorted_rows = np.sort(mul, axis=1)
        sorted_cols = np.sort(mul, axis=0)
        if not (sorted_rows == ids).all() or not (sorted_cols == ids[:, None]).all():
            raise InvalidTable("table is not a Latin square")
        left_ids = np.flatnonzero((mul == ids).all(axis=1))
        if len(left_ids) != 1 or not (mul[:, left_ids[0]] == ids).all():
            raise InvalidTable("no two-sided identity")
        e = int(left_ids[0])
        inv = np.argmax(mul == e, axis=1).astype(np.int32)
        if not (mul[inv, ids] == e).all():
            raise InvalidTable("left and right inverses differ")
        if check:
            _check_associative(mul)
        members, orders = _cyclic_closure(mul, e)
        group = cls(order=n, mul=mul, identity=e, inv=inv, orders=orders, label=label, spec=spec)
        group.__dict__["power_members"] = members
        return group

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    @cached_property
    def power_members(self) -> np.ndarray:
        """Boolean matrix with ``power_members[x, y]`` true iff y is a power of x."""
        return _cyclic_closure(self.mul, self.identity)[0]

    @cached_property
    def commutes(self) -> np.ndarray:
        return self.mul == self.mul.T

    def elements(self) -> range:
        return range(self.order)

    def power(self, x: int, k: int) -> int:
        o = int(self.orders[x])
        k %= o
        y = self.identity
        for _ in range(k):
            y = int(self.mul[y, x])
        return y

    def element_set(self, xs: Iterable[int]) -> ElementSet:
        return ElementSet(self.label, tuple(sorted(set(int(x) for x in xs))))


def _check_associative(mul: np.ndarray, seed: int = 0) -> None:
    n = mul.shape[0]
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        chunk = max(1, (1 << 20) // (n * n))
        for start in range(0, n, chunk):
            xs = np.arange(start, min(n, start + chunk))
            left = mul[mul[xs], :]  # (c, n, n): (x*y)*z
            right = mul[xs[:, None, None], mul[None, :, :]]  # x*(y*z)
            if not np.array_equal(left, right):
                raise InvalidTable("table is not associative")
    else:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, n, size=(3, 10 * n * n))
        if not np.array_equal(mul[mul[x, y], z], mul[x, mul[y, z]]):
            raise InvalidTable("table is not associative (sampled)")


def _cyclic_closure(mul: np.ndarray, e: int) -> tuple[np.ndarray, np.ndarray]:
    n = mul.shape[0]
    ids = np.arange(n)
    members = np.zeros((n, n), dtype=bool)
    orders = np.zeros(n, dtype=np.int64)
    cur = ids.copy()
    k = 1
    while (orders == 0).any():
        members[ids, cur] = True
        done = (cur == e) & (orders == 0)
        orders[done] = k
        cur = mul[cur, ids]
        k += 1
    return members, orders


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def build_group(spec: GroupSpec) -> FiniteGroup:
    """Tabulate the group described by ``spec``."""
    table = _table(spec)
    return FiniteGroup.from_table(table, label=spec.label, spec=spec)


def _table(spec) -> np.ndarray:
    if isinstance(spec, Cyclic):
        i = np.arange(spec.n)
        return (i[:, None] + i[None, :]) % spec.n
    if isinstance(spec, Dihedral):
        return _dihedral_table(spec.order // 2)
    if isinstance(spec, GeneralizedQuaternion):
        return _quaternion_table(spec.order // 4)
    if isinstance(spec, Symmetric):
        return _permutation_table(list(itertools.permutations(range(spec.n))))
    if isinstance(spec, Alternating):
        perms = [p for p in itertools.permutations(range(spec.n)) if _is_even(p)]
        return _permutation_table(perms)
    if isinstance(spec, ElementaryAbelian):
        return _elementary_abelian_table(spec.p, spec.k)
    if isinstance(spec, SemidirectCyclic):
        return _semidirect_table(spec.normal_order, spec.top_order, spec.unit)
    if isinstance(spec, DirectProduct):
        return reduce(_product_table, (_table(f) for f in spec.factors))
    raise InvalidSpec(f"unknown group spec {spec!r}")


def _dihedral_table(n: int) -> np.ndarray:
    # id i + n*j is r^i s^j; s r^k = r^-k s
    ids = np.arange(2 * n)
    i, j = ids % n, ids // n
    sign = np.where(j == 1, -1, 1)
    rot = (i[:, None] + sign[:, None] * i[None, :]) % n
    ref = (j[:, None] + j[None, :]) % 2
    return rot + n * ref


def _quaternion_table(m: int) -> np.ndarray:
    # id i + 2m*j is a^i b^j; b a^k = a^-k b, b^2 = a^m
    n2 = 2 * m
    ids = np.arange(2 * n2)
    i, j = ids % n2, ids // n2
    sign = np.where(j == 1, -1, 1)
    rot = i[:, None] + sign[:, None] * i[None, :]
    jj = j[:, None] + j[None, :]
    rot = (rot + np.where(jj == 2, m, 0)) % n2
    return rot + n2 * (jj % 2)


def _is_even(perm) -> bool:
    seen = [False] * len(perm)
    parity = 0
    for s in range(len(perm)):
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        if length:
            parity += length - 1
    return parity % 2 == 0


def _permutation_table(perms: list) -> np.ndarray:
    # (s*t)(x) = s(t(x)): apply t first
    index = {p: k for k, p in enumerate(perms)}
    table = np.empty((len(perms), len(perms)), dtype=np.int32)
    for a, s in enumerate(perms):
        for b, t in enumerate(perms):
            table[a, b] = index[tuple(s[x] for x in t)]
    return table


def _elementary_abelian_table(p: int, k: int) -> np.ndarray:
    n = p**k
    ids = np.arange(n)
    digits = [(ids // p**t) % p for t in range(k)]
    out = np.zeros((n, n), dtype=np.int64)
    for t, d in enumerate(digits):
        out += ((d[:, None] + d[None, :]) % p) * p**t
    return out


def _semidirect_table(m: int, r: int, u: int) -> np.ndarray:
    # id x + m*y is (x, y); (x1,y1)(x2,y2) = (x1 + u^y1 x2, y1 + y2)
    ids = np.arange(m * r)
    x, y = ids % m, ids // m
    upow = np.array([pow(u, int(k), m) for k in range(r)])
    nx = (x[:, None] + upow[y][:, None] * x[None, :]) % m
    ny = (y[:, None] + y[None, :]) % r
    return nx + m * ny


def _product_table(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # id g*|H| + h is (g, h)
    na, nb = a.shape[0], b.shape[0]
    t = a[:, None, :, None] * nb + b[None, :, None, :]
    return t.reshape(na * nb, na * nb)


# ---------------------------------------------------------------------------
# Element and subgroup queries
# ---------------------------------------------------------------------------


def element_order(G: FiniteGroup, x: int) -> int:
    return int(G.orders[x])


def cyclic_subgroup(G: FiniteGroup, x: int) -> ElementSet:
    return ElementSet(G.label, tuple(int(y) for y in np.flatnonzero(G.power_members[x])))


def generated_subgroup(G: FiniteGroup, xs: Iterable[int]) -> ElementSet:
    """Smallest subgroup containing ``xs``."""
    gens = sorted(set(int(x) for x in xs))
    if not gens:
        raise ValueError("generated_subgroup needs at least one element")
    inside = np.zeros(G.order, dtype=bool)
    inside[G.identity] = True
    inside[gens] = True
    frontier = np.flatnonzero(inside)
    gen_arr = np.array(gens)
    while frontier.size:
        products = G.mul[frontier[:, None], gen_arr[None, :]].ravel()
        new = np.unique(products[~inside[products]])
        inside[new] = True
        frontier = new
    return ElementSet(G.label, tuple(int(y) for y in np.flatnonzero(inside)))


def is_cyclic_set(G: FiniteGroup, xs: Iterable[int]) -> bool:
    """True iff the subgroup generated by ``xs`` is cyclic."""
    H = generated_subgroup(G, xs)
    return bool((G.orders[list(H.elements)] == len(H)).any())


def exponent(G: FiniteGroup) -> int:
    return math.lcm(*(int(o) for o in np.unique(G.orders)))


def centralizer(G: FiniteGroup, xs: Iterable[int]) -> ElementSet:
    xs = list(xs)
    ok = G.commutes[:, xs].all(axis=1) if xs else np.ones(G.order, dtype=bool)
    return ElementSet(G.label, tuple(int(y) for y in np.flatnonzero(ok)))


def center(G: FiniteGroup) -> ElementSet:
    return ElementSet(G.label, tuple(int(z) for z in np.flatnonzero(G.commutes.all(axis=1))))


def order_spectrum(G: FiniteGroup) -> dict[int, int]:
    return dict(sorted(Counter(int(o) for o in G.orders).items()))


def is_abelian(G: FiniteGroup) -> bool:
    return bool(G.commutes.all())


def is_cyclic(G: FiniteGroup) -> bool:
    return bool((G.orders == G.order).any())
