"""Finite horizontal tribrackets presented as operation 3-tensors.

A tribracket on ``X = {1..n}`` is a ternary operation ``[a,b,c]`` such that

* (i) any three of the variables in ``[a,b,c] = d`` determine the fourth
  (the ternary quasigroup condition: left/center/right division exist), and
* (ii) ``[c,[a,b,c],[a,c,d]] = [b,[a,b,c],[a,b,d]] = [d,[a,b,d],[a,c,d]]``
  for all a,b,c,d.

The tensor convention is 1-based: entry ``tensor[a-1][b-1][c-1]`` is the
element in matrix ``a``, row ``b``, column ``c``.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from typing import Iterator, Sequence


class NotQuasigroupError(ValueError):
    """A division was requested for a tensor that is not a ternary quasigroup."""


class NotAGroupError(ValueError):
    """The Cayley table handed to the Dehn constructor is not a group."""


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of a tribracket axiom check.

    ``violations`` holds ``(axiom_id, (a, b, c, d))`` witnesses, where the
    axiom id is ``"i"`` for a failed division uniqueness (the witness then
    encodes the offending line) or ``"ii"`` for the three-way identity.
    """

    valid: bool
    violations: list[tuple[str, tuple[int, int, int, int]]] = field(default_factory=list)

    def __post_init__(self):
        assert self.valid == (len(self.violations) == 0)


@dataclass(frozen=True)
class Tribracket:
    """An n-element ternary operation tensor, not necessarily verified.

    Use :meth:`verify` (or construct through the checked factory functions)
    before trusting division calls.
    """

    tensor: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def size(self) -> int:
        return len(self.tensor)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Sequence[int]]]) -> "Tribracket":
        n = len(rows)
        tensor = tuple(tuple(tuple(row) for row in mat) for mat in rows)
        for mat in tensor:
            if len(mat) != n or any(len(row) != n for row in mat):
                raise ValueError("tensor must be n x n x n")
            for row in mat:
                for v in row:
                    if not isinstance(v, int) or not 1 <= v <= n:
                        raise ValueError(f"tensor entry {v!r} outside 1..{n}")
        return Tribracket(tensor)

    def eval(self, a: int, b: int, c: int) -> int:
        """The product ``[a,b,c]`` (matrix a, row b, column c)."""
        if not (1 <= a <= self.size and 1 <= b <= self.size and 1 <= c <= self.size):
            raise IndexError(f"arguments ({a},{b},{c}) outside 1..{self.size}")
        return self.tensor[a - 1][b - 1][c - 1]

    # -- divisions ---------------------------------------------------------

    def divide_left(self, b: int, c: int, d: int) -> int:
        """The unique a with [a,b,c] = d."""
        return self._solve(0, (b, c, d))

    def divide_center(self, a: int, c: int, d: int) -> int:
        """The unique b with [a,b,c] = d."""
        return self._solve(1, (a, c, d))

    def divide_right(self, a: int, b: int, d: int) -> int:
        """The unique c with [a,b,c] = d."""
        return self._solve(2, (a, b, d))

    def _solve(self, slot: int, args: tuple[int, int, int]) -> int:
        hits = []
        for x in range(1, self.size + 1):
            abc = list(args[:slot]) + [x] + list(args[slot:2])
            if self.eval(abc[0], abc[1], abc[2]) == args[2]:
                hits.append(x)
        if len(hits) != 1:
            raise NotQuasigroupError(
                f"division slot {slot} with {args} has {len(hits)} solutions"
            )
        return hits[0]

    # -- verification ------------------------------------------------------

    def verify(self, max_violations: int | None = None) -> AxiomReport:
        """Check conditions (i) and (ii) exhaustively.

        Condition (i) is checked as n^2 Latin lines along each of the three
        axes; condition (ii) as two equalities over all n^4 quadruples.
        Stops collecting after ``max_violations`` witnesses when given.
        """
        n = self.size
        t = self.tensor
        violations: list[tuple[str, tuple[int, int, int, int]]] = []

        def note(axiom: str, witness: tuple[int, int, int, int]) -> bool:
            violations.append((axiom, witness))
            return max_violations is not None and len(violations) >= max_violations

        full = set(range(1, n + 1))
        for i in range(n):
            for j in range(n):
                if set(t[i][j]) != full:
                    if note("i", (i + 1, j + 1, 0, 0)):
                        return AxiomReport(False, violations)
                if {t[i][k][j] for k in range(n)} != full:
                    if note("i", (i + 1, 0, j + 1, 0)):
                        return AxiomReport(False, violations)
                if {t[k][i][j] for k in range(n)} != full:
                    if note("i", (0, i + 1, j + 1, 0)):
                        return AxiomReport(False, violations)

        for a in range(1, n + 1):
            for b in range(1, n + 1):
                for c in range(1, n + 1):
                    abc = t[a - 1][b - 1][c - 1]
                    for d in range(1, n + 1):
                        abd = t[a - 1][b - 1][d - 1]
                        acd = t[a - 1][c - 1][d - 1]
                        left = t[c - 1][abc - 1][acd - 1]
                        mid = t[b - 1][abc - 1][abd - 1]
                        if left != mid or mid != t[d - 1][abd - 1][acd - 1]:
                            if note("ii", (a, b, c, d)):
                                return AxiomReport(False, violations)
        return AxiomReport(len(violations) == 0, violations)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.size, "tensor": [[list(r) for r in m] for m in self.tensor]}
        )

    @staticmethod
    def from_json(text: str) -> "Tribracket":
        data = json.loads(text)
        tb = Tribracket.from_rows(data["tensor"])
        if tb.size != data.get("n", tb.size):
            raise ValueError("declared size does not match tensor shape")
        return tb

    def pretty(self) -> str:
        """Render as a list of n matrices, the way operation 3-tensors are displayed."""
        mats = []
        for m in self.tensor:
            mats.append("\n".join(" ".join(str(v) for v in row) for row in m))
        return ("\n" + "-" * max(2 * self.size - 1, 2) + "\n").join(mats)


def verify_tribracket(t: Tribracket, max_violations: int | None = None) -> AxiomReport:
    return t.verify(max_violations=max_violations)


# -- standard constructions ------------------------------------------------


def make_dehn(group_table: Sequence[Sequence[int]]) -> Tribracket:
    """Tribracket [a,b,c] = b * a^{-1} * c from a group Cayley table.

    The table is 1-based (``table[i-1][j-1] = i*j``) and is fully checked:
    Latin property, two-sided identity, inverses, associativity.
    """
    n = len(group_table)
    table = [list(row) for row in group_table]
    full = set(range(1, n + 1))
    if any(len(row) != n for row in table):
        raise NotAGroupError("table is not square")
    for i in range(n):
        if set(table[i]) != full or {table[j][i] for j in range(n)} != full:
            raise NotAGroupError("table is not a Latin square")
    identity = None
    for e in range(1, n + 1):
        if all(table[e - 1][x - 1] == x and table[x - 1][e - 1] == x for x in range(1, n + 1)):
            identity = e
            break
    if identity is None:
        raise NotAGroupError("table has no two-sided identity")
    inverse = [0] * (n + 1)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if table[a - 1][b - 1] == identity and table[b - 1][a - 1] == identity:
                inverse[a] = b
                break
        if inverse[a] == 0:
            raise NotAGroupError(f"element {a} has no inverse")
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ab = table[a - 1][b - 1]
            for c in range(1, n + 1):
                if table[ab - 1][c - 1] != table[a - 1][table[b - 1][c - 1] - 1]:
                    raise NotAGroupError(f"not associative at ({a},{b},{c})")

    rows = [
        [
            [table[table[b - 1][inverse[a] - 1] - 1][c - 1] for c in range(1, n + 1)]
            for b in range(1, n + 1)
        ]
        for a in range(1, n + 1)
    ]
    return Tribracket.from_rows(rows)


def cyclic_group_table(n: int) -> list[list[int]]:
    """Cayley table of Z_n with elements labeled 1..n (label = residue + 1)."""
    return [[((i + j) % n) + 1 for j in range(n)] for i in range(n)]


def make_alexander(m: int, x: int, y: int) -> Tribracket:
    """Tribracket [a,b,c] = x*b + y*c - x*y*a over Z_m, labels = residue + 1.

    ``x`` and ``y`` must be units of Z_m.
    """
    from .rings import ModulusRing  # local import keeps module deps one-way

    ring = ModulusRing(m)
    for name, v in (("x", x), ("y", y)):
        if not ring.element(v).is_unit():
            from .rings import NonUnitError

            raise NonUnitError(f"{name} = {v} is not a unit of Z_{m}")
    rows = [
        [
            [((x * b + y * c - x * y * a) % m) + 1 for c in range(m)]
            for b in range(m)
        ]
        for a in range(m)
    ]
    return Tribracket.from_rows(rows)


# -- exhaustive enumeration --------------------------------------------------

ENUMERATION_BOUND = 3


def enumerate_tribrackets(n: int) -> list[Tribracket]:
    """All tribrackets on {1..n} in lexicographic order of the flattened tensor.

    The search fills the flattened tensor cell by cell, pruning any partial
    assignment that repeats a value inside one of the 3n^2 Latin lines; full
    tensors are then filtered through the axiom (ii) check.  No quotient by
    isomorphism is taken.
    """
    if n < 1:
        raise ValueError("size must be >= 1")
    if n > ENUMERATION_BOUND + 1:
        raise ValueError(f"enumeration bound exceeded (n={n} > {ENUMERATION_BOUND + 1})")
    if n == ENUMERATION_BOUND + 1:
        warnings.warn(f"enumerating size-{n} tensors may take a while", stacklevel=2)

    results: list[Tribracket] = []
    cells = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
    tensor = [[[0] * n for _ in range(n)] for _ in range(n)]

    def line_ok(a: int, b: int, c: int, v: int) -> bool:
        t = tensor
        for cc in range(n):
            if cc != c and t[a][b][cc] == v:
                return False
        for bb in range(n):
            if bb != b and t[a][bb][c] == v:
                return False
        for aa in range(n):
            if aa != a and t[aa][b][c] == v:
                return False
        return True

    def fill(idx: int) -> None:
        if idx == len(cells):
            candidate = Tribracket.from_rows(tensor)
            if candidate.verify(max_violations=1).valid:
                results.append(candidate)
            return
        a, b, c = cells[idx]
        for v in range(1, n + 1):
            if line_ok(a, b, c, v):
                tensor[a][b][c] = v
                fill(idx + 1)
                tensor[a][b][c] = 0

    fill(0)
    return results


def all_tensors(n: int) -> Iterator[Tribracket]:
    """Every n^(n^3) raw tensor, for use as a no-pruning enumeration oracle."""
    import itertools

    cells = n ** 3
    for combo in itertools.product(range(1, n + 1), repeat=cells):
        rows = [
            [
                [combo[a * n * n + b * n + c] for c in range(n)]
                for b in range(n)
            ]
            for a in range(n)
        ]
        yield Tribracket.from_rows(rows)
