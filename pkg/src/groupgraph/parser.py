"""Parser for the group-spec language.

    spec      := factor ("x" factor)*
    factor    := "(" spec ")" | atom [":" atom]
    atom      := ("C" | "D" | "Q" | "S" | "A") number | "E" prime "^" k
    number    := digits ["^" digits]

``D`` and ``Q`` take the order of the whole group (D8 is dihedral of order 8).
A semidirect factor ``Cn:Cm`` needs n = p^a and m = q^b for distinct primes
with q^b dividing p - 1; ``C25:C4`` and ``C5^2:C2^2`` denote the same group.
Parentheses are only needed to put a semidirect factor inside a product.
"""

from __future__ import annotations

from .errors import InvalidSpec, SpecSemanticError, SpecSyntaxError
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
)
from .numtheory import prime_power

_ATOMS = {"C": Cyclic, "D": Dihedral, "Q": GeneralizedQuaternion, "S": Symmetric, "A": Alternating}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        return SpecSyntaxError(message, self.text, self.pos if pos is None else pos)

    def semantic(self, message: str, pos: int):
        return SpecSemanticError(message, self.text, pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def parse(self) -> GroupSpec:
        if not self.text:
            raise self.error("empty group spec")
        spec = self.spec()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.peek()!r}")
        return spec

    def spec(self) -> GroupSpec:
        start = self.pos
        factors = [self.factor()]
        while self.peek() == "x":
            self.pos += 1
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        try:
            return DirectProduct(tuple(factors))
        except InvalidSpec as exc:  # pragma: no cover - two factors always valid
            raise self.semantic(str(exc), start) from None

    def factor(self) -> GroupSpec:
        if self.peek() == "(":
            self.pos += 1
            inner = self.spec()
            self.expect(")")
            return inner
        start = self.pos
        letter, value = self.atom()
        if self.peek() != ":":
            return self.build_atom(letter, value, start)
        self.pos += 1
        right_start = self.pos
        right_letter, right_value = self.atom()
        if letter != "C" or right_letter != "C":
            raise self.semantic("semidirect products take the form Cn:Cm", start)
        return self.build_semidirect(value, right_value, start, right_start)

    def number(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.peek() or "end of input"
            raise self.error(f"expected a number, found {found!r}")
        return int(self.text[start:self.pos])

    def atom(self) -> tuple[str, int | tuple[int, int]]:
        letter = self.peek()
        if letter == "E":
            self.pos += 1
            p = self.number()
            self.expect("^")
            return letter, (p, self.number())
        if letter not in _ATOMS:
            found = letter or "end of input"
            raise self.error(f"expected one of C, D, Q, S, A, E, found {found!r}")
        self.pos += 1
        value = self.number()
        if self.peek() == "^":
            self.pos += 1
            value = value ** self.number()
        return letter, value

    def build_atom(self, letter: str, value, start: int) -> GroupSpec:
        try:
            if letter == "E":
                return ElementaryAbelian(*value)
            return _ATOMS[letter](value)
        except InvalidSpec as exc:
            raise self.semantic(str(exc), start) from None

    def build_semidirect(self, n: int, m: int, start: int, right_start: int) -> SemidirectCyclic:
        left, right = prime_power(n), prime_power(m)
        if left is None:
            raise self.semantic(f"C{n} is not a cyclic group of prime-power order", start)
        if right is None:
            raise self.semantic(f"C{m} is not a cyclic group of prime-power order", right_start)
        (p, a), (q, b) = left, right
        if p == q:
            raise self.semantic(f"semidirect factors must have distinct primes, got {p} twice", right_start)
        if (p - 1) % m:
            raise self.semantic(f"{m} does not divide {p - 1}: no faithful action of C{m} on C{n}", right_start)
        return SemidirectCyclic(p, a, q, b)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``text`` into a group spec, raising SpecSyntaxError/SpecSemanticError."""
    return _Parser(text.strip()).parse()
