"""Coefficient-tensor pairs (A, B) over Z_m that make the tribracket state sum
a link invariant.

A bracket over a tribracket X assigns unit coefficients A_{a,b,c}, B_{a,b,c}
to every triple, subject to:

* delta-constancy: -A B^{-1} - A^{-1} B takes one common value ``delta``,
* kink-constancy: -A_{a,b,b}^2 B_{a,b,b}^{-1} takes one common value ``w``
  (a unit), with -A_{a,b,b}^{-2} B_{a,b,b} = w^{-1} automatically,
* five skein equations per quadruple (a,b,c,d), see :func:`skein_equations`.

Equation iv is implemented in its four-term form, mirroring equation v; the
five-term variant (with one product repeated) is available behind
``four_term_iv=False`` for auditing, but is unsatisfiable over unit values
(the one-element case forces A^2 B = 0) and is never used by default.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .rings import ModulusRing, NonUnitError, RingElement
from .tribracket import Tribracket

Triple = tuple[int, int, int]
IntTensor = tuple[tuple[tuple[int, ...], ...], ...]


class NotConstantError(ValueError):
    """A derived scalar (delta or w) differs between two triples."""

    def __init__(self, what: str, first: tuple, second: tuple):
        self.witnesses = (first, second)
        super().__init__(f"{what} not constant: {first} vs {second}")


@dataclass(frozen=True)
class BracketAxiomReport:
    valid: bool
    units_ok: bool
    delta_ok: bool
    w_ok: bool
    skein_violations: list[tuple[str, tuple[int, int, int, int]]] = field(default_factory=list)

    def __post_init__(self):
        assert self.valid == (
            self.units_ok and self.delta_ok and self.w_ok and not self.skein_violations
        )


def _as_int_tensor(n: int, tensor) -> IntTensor:
    out = tuple(
        tuple(tuple(int(v) for v in row) for row in mat) for mat in tensor
    )
    if len(out) != n or any(len(m) != n or any(len(r) != n for r in m) for m in out):
        raise ValueError("coefficient tensor must be n x n x n")
    return out


@dataclass(frozen=True)
class TribracketBracket:
    """A verified or to-be-verified bracket: X, Z_m, and the two tensors.

    ``a_raw``/``b_raw`` hold canonical residues; :meth:`A` and :meth:`B`
    return ring elements for 1-based triples.  ``delta`` and ``w`` are the
    derived loop and kink values.
    """

    tribracket: Tribracket
    ring: ModulusRing
    a_raw: IntTensor
    b_raw: IntTensor
    delta: RingElement
    w: RingElement

    @staticmethod
    def create(
        tribracket: Tribracket,
        ring: ModulusRing,
        a_tensor,
        b_tensor,
        check: bool = True,
        four_term_iv: bool = True,
    ) -> "TribracketBracket":
        n = tribracket.size
        a_raw = _as_int_tensor(n, a_tensor)
        b_raw = _as_int_tensor(n, b_tensor)
        delta = derive_delta(a_raw, b_raw, ring)
        w = derive_w(a_raw, b_raw, ring)
        bracket = TribracketBracket(tribracket, ring, a_raw, b_raw, delta, w)
        if check:
            report = verify_bracket(tribracket, a_raw, b_raw, ring, four_term_iv=four_term_iv)
            if not report.valid:
                raise ValueError(f"bracket axioms fail: {report}")
        return bracket

    def A(self, a: int, b: int, c: int) -> RingElement:
        return self.ring.element(self.a_raw[a - 1][b - 1][c - 1])

    def B(self, a: int, b: int, c: int) -> RingElement:
        return self.ring.element(self.b_raw[a - 1][b - 1][c - 1])

    def verify(self, four_term_iv: bool = True) -> BracketAxiomReport:
        return verify_bracket(
            self.tribracket, self.a_raw, self.b_raw, self.ring, four_term_iv=four_term_iv
        )

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "tribracket": [[list(r) for r in m] for m in self.tribracket.tensor],
                "modulus": self.ring.modulus,
                "A": [[list(r) for r in m] for m in self.a_raw],
                "B": [[list(r) for r in m] for m in self.b_raw],
            }
        )

    @staticmethod
    def from_json(text: str, check: bool = True) -> "TribracketBracket":
        import json

        data = json.loads(text)
        tb = Tribracket.from_rows(data["tribracket"])
        return TribracketBracket.create(
            tb, ModulusRing(data["modulus"]), data["A"], data["B"], check=check
        )

    def flat_key(self) -> tuple[int, ...]:
        """Concatenated (A, B) tensors, the canonical ordering key."""
        n = self.tribracket.size
        rng = range(n)
        a = tuple(self.a_raw[i][j][k] for i in rng for j in rng for k in rng)
        b = tuple(self.b_raw[i][j][k] for i in rng for j in rng for k in rng)
        return a + b


# -- derived scalars ---------------------------------------------------------


def _triples(n: int) -> list[Triple]:
    return [(a, b, c) for a in range(1, n + 1) for b in range(1, n + 1) for c in range(1, n + 1)]


def derive_delta(a_raw, b_raw, ring: ModulusRing) -> RingElement:
    """Common value of -A B^{-1} - A^{-1} B over all triples."""
    n = len(a_raw)
    m = ring.modulus
    value = None
    first = None
    for t in _triples(n):
        av = ring.element(a_raw[t[0] - 1][t[1] - 1][t[2] - 1])
        bv = ring.element(b_raw[t[0] - 1][t[1] - 1][t[2] - 1])
        d = (-(av * bv.inv()) - av.inv() * bv).value
        if value is None:
            value, first = d, t
        elif d != value:
            raise NotConstantError("delta", (first, value), (t, d))
    return ring.element(value % m)


def derive_w(a_raw, b_raw, ring: ModulusRing) -> RingElement:
    """Common value of -A_{a,b,b}^2 B_{a,b,b}^{-1} over all (a, b); must be a unit.

    Also confirms -A_{a,b,b}^{-2} B_{a,b,b} equals w^{-1} on every degenerate
    triple (the negative-kink value).
    """
    n = len(a_raw)
    value = None
    first = None
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            av = ring.element(a_raw[a - 1][b - 1][b - 1])
            bv = ring.element(b_raw[a - 1][b - 1][b - 1])
            wv = (-(av * av) * bv.inv()).value
            if value is None:
                value, first = wv, (a, b)
            elif wv != value:
                raise NotConstantError("w", (first, value), ((a, b), wv))
    w = ring.element(value)
    if not w.is_unit():
        raise NonUnitError(f"kink value w = {w} is not a unit of {ring}")
    w_inv = w.inv()
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            av = ring.element(a_raw[a - 1][b - 1][b - 1])
            bv = ring.element(b_raw[a - 1][b - 1][b - 1])
            if (-(av.inv() ** 2) * bv) != w_inv:
                raise NotConstantError("w^{-1}", ((a, b), "negative kink"), (w_inv.value,))
    return w


# -- skein equations ---------------------------------------------------------


def skein_equations(x: Tribracket) -> list[tuple[str, tuple[int, int, int, int], tuple[Triple, ...]]]:
    """The five equations for every quadruple, as (id, quadruple, triple slots).

    Slot order is (s, t, u, v, xx, y) with
    s=(a,b,c), t=(c,[a,b,c],[a,c,d]), u=(a,c,d),
    v=(b,[a,b,c],[a,b,d]), xx=(a,b,d), y=(d,[a,b,d],[a,c,d]).
    """
    n = x.size
    eqs = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                abc = x.eval(a, b, c)
                for d in range(1, n + 1):
                    abd = x.eval(a, b, d)
                    acd = x.eval(a, c, d)
                    slots = (
                        (a, b, c),
                        (c, abc, acd),
                        (a, c, d),
                        (b, abc, abd),
                        (a, b, d),
                        (d, abd, acd),
                    )
                    for eq_id in ("ii.i", "ii.ii", "ii.iii", "ii.iv", "ii.v"):
                        eqs.append((eq_id, (a, b, c, d), slots))
    return eqs


def _equation_holds(
    eq_id: str,
    av: Sequence[int],
    bv: Sequence[int],
    delta: int,
    m: int,
    four_term_iv: bool,
) -> bool:
    """Evaluate one equation given the six slot values (A and B residues)."""
    a_s, a_t, a_u, a_v, a_x, a_y = av
    b_s, b_t, b_u, b_v, b_x, b_y = bv
    if eq_id == "ii.i":
        return (a_s * a_t * a_u) % m == (a_v * a_x * a_y) % m
    if eq_id == "ii.ii":
        return (a_s * b_t * b_u) % m == (b_v * a_x * b_y) % m
    if eq_id == "ii.iii":
        return (b_s * b_t * a_u) % m == (a_v * b_x * b_y) % m
    if eq_id == "ii.iv":
        rhs = a_v * a_x * b_y + b_v * a_x * a_y + delta * b_v * a_x * b_y + b_v * b_x * b_y
        if not four_term_iv:
            rhs += a_v * a_x * b_y
        return (a_s * b_t * a_u) % m == rhs % m
    if eq_id == "ii.v":
        lhs = a_s * a_t * b_u + b_s * a_t * a_u + delta * b_s * a_t * b_u + b_s * b_t * b_u
        return lhs % m == (a_v * b_x * a_y) % m
    raise ValueError(f"unknown equation id {eq_id}")


def verify_bracket(
    x: Tribracket,
    a_tensor,
    b_tensor,
    ring: ModulusRing,
    four_term_iv: bool = True,
    max_violations: int | None = None,
) -> BracketAxiomReport:
    """Full axiom check: unit entries, delta/w constancy, five skein equations."""
    n = x.size
    m = ring.modulus
    a_raw = _as_int_tensor(n, a_tensor)
    b_raw = _as_int_tensor(n, b_tensor)

    units_ok = all(
        ring.element(v).is_unit()
        for tensor in (a_raw, b_raw)
        for mat in tensor
        for row in mat
        for v in row
    )
    if not units_ok:
        return BracketAxiomReport(False, False, False, False, [("units", (0, 0, 0, 0))])

    try:
        delta = derive_delta(a_raw, b_raw, ring).value
        delta_ok = True
    except NotConstantError:
        return BracketAxiomReport(False, True, False, False, [("delta", (0, 0, 0, 0))])
    try:
        derive_w(a_raw, b_raw, ring)
        w_ok = True
    except (NotConstantError, NonUnitError):
        return BracketAxiomReport(False, True, True, False, [("w", (0, 0, 0, 0))])

    def val(tensor: IntTensor, t: Triple) -> int:
        return tensor[t[0] - 1][t[1] - 1][t[2] - 1]

    violations = []
    for eq_id, quad, slots in skein_equations(x):
        av = [val(a_raw, t) for t in slots]
        bv = [val(b_raw, t) for t in slots]
        if not _equation_holds(eq_id, av, bv, delta, m, four_term_iv):
            violations.append((eq_id, quad))
            if max_violations is not None and len(violations) >= max_violations:
                break
    return BracketAxiomReport(not violations, True, delta_ok, w_ok, violations)


# -- constructors ------------------------------------------------------------


def make_kauffman(m: int, a: int) -> TribracketBracket:
    """One-element bracket A = a, B = a^{-1}: the writhe-normalized state sum
    specializes to the classical unoriented bracket polynomial at A = a."""
    ring = ModulusRing(m)
    av = ring.element(a)
    if not av.is_unit():
        raise NonUnitError(f"{a} is not a unit of Z_{m}")
    x = Tribracket.from_rows([[[1]]])
    return TribracketBracket.create(x, ring, [[[av.value]]], [[[av.inv().value]]])


def make_cocycle(
    x: Tribracket, phi: Callable[[int, int, int], int], m: int
) -> tuple[TribracketBracket, BracketAxiomReport]:
    """Bracket with A = B = phi.  Returns (bracket, report); the report says
    whether phi satisfies the axioms (i.e. is a 2-cocycle for X)."""
    ring = ModulusRing(m)
    n = x.size
    tensor = [
        [[phi(a, b, c) % m for c in range(1, n + 1)] for b in range(1, n + 1)]
        for a in range(1, n + 1)
    ]
    for mat in tensor:
        for row in mat:
            for v in row:
                if not ring.element(v).is_unit():
                    raise NonUnitError(f"phi value {v} is not a unit of Z_{m}")
    report = verify_bracket(x, tensor, tensor, ring)
    try:
        delta = derive_delta(tensor, tensor, ring)
        w = derive_w(tensor, tensor, ring)
    except NotConstantError:
        # ill-defined phi: report already says invalid; expose the values
        # induced by the first triple so the pair can still be inspected
        first = ring.element(tensor[0][0][0])
        delta = -(first * first.inv()) - first.inv() * first
        w = -(first * first) * first.inv()
    bracket = TribracketBracket(
        x,
        ring,
        _as_int_tensor(n, tensor),
        _as_int_tensor(n, tensor),
        delta,
        w,
    )
    return bracket, report


# -- exhaustive search -------------------------------------------------------

SEARCH_BOUND = 2


def _pairs_by_delta(m: int) -> dict[int, list[tuple[int, int]]]:
    """Unit pairs (A, B) grouped by the delta value they induce."""
    ring = ModulusRing(m)
    units = [u.value for u in ring.units()]
    inv = {u: ring.element(u).inv().value for u in units}
    out: dict[int, list[tuple[int, int]]] = {}
    for a in units:
        for b in units:
            d = (-(a * inv[b]) - inv[a] * b) % m
            out.setdefault(d, []).append((a, b))
    return out


def _search_order(x: Tribracket) -> list[Triple]:
    """Assignment order: degenerate triples first, then greedily the triple
    that completes the most not-yet-firable equations (ties lexicographic)."""
    n = x.size
    degenerate = [(a, b, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    rest = [t for t in _triples(n) if t not in set(degenerate)]
    eq_slots = [set(slots) for _, _, slots in skein_equations(x)]
    order = list(degenerate)
    placed = set(order)
    while rest:
        best = None
        best_count = -1
        for t in sorted(rest):
            count = sum(1 for s in eq_slots if t in s and s <= placed | {t})
            if count > best_count:
                best, best_count = t, count
        order.append(best)
        placed.add(best)
        rest.remove(best)
    return order


def search_brackets(
    x: Tribracket,
    m: int,
    limit: int | None = None,
    prune: bool = True,
    four_term_iv: bool = True,
) -> list[TribracketBracket]:
    """All brackets for X over Z_m, in lexicographic order of the flattened
    (A, B) tensors.

    With ``prune`` the depth-first assignment rejects partial tensors as soon
    as delta-constancy, kink-constancy on degenerate triples, or any fully
    assigned skein equation fails.  With ``prune=False`` every unit pair is
    tried at every triple and each complete assignment is checked from
    scratch; this is the agreement oracle for the pruned search (feasible for
    one-element tribrackets and for two-element ones over very small rings).
    """
    n = x.size
    if n > SEARCH_BOUND + 1:
        raise ValueError(f"search bound exceeded (|X| = {n} > {SEARCH_BOUND + 1})")
    if n == SEARCH_BOUND + 1:
        warnings.warn(f"bracket search over a size-{n} tribracket may take long", stacklevel=2)

    ring = ModulusRing(m)
    order = _search_order(x)
    index = {t: i for i, t in enumerate(order)}
    pairs = _pairs_by_delta(m)

    eqs = []
    for eq_id, quad, slots in skein_equations(x):
        level = max(index[t] for t in slots)
        eqs.append((level, eq_id, tuple(index[t] for t in slots)))
    by_level: dict[int, list[tuple[str, tuple[int, ...]]]] = {}
    for level, eq_id, slot_idx in eqs:
        by_level.setdefault(level, []).append((eq_id, slot_idx))

    a_val = [0] * len(order)
    b_val = [0] * len(order)
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    all_pairs = sorted(p for group in pairs.values() for p in group)

    def candidates(level: int, delta: int | None, w: int | None) -> Iterable[tuple[int, int]]:
        if not prune:
            return all_pairs
        t = order[level]
        degenerate = t[1] == t[2]
        pool = all_pairs if delta is None else pairs.get(delta, [])
        if degenerate and w is not None:
            w_inv = ring.element(w).inv().value
            pool = [(a, b) for a, b in pool if b == (-a * a * w_inv) % m]
        return sorted(pool)

    def check_level(level: int, delta: int) -> bool:
        for eq_id, slot_idx in by_level.get(level, []):
            av = [a_val[i] for i in slot_idx]
            bv = [b_val[i] for i in slot_idx]
            if not _equation_holds(eq_id, av, bv, delta, m, four_term_iv):
                return False
        return True

    def dfs(level: int, delta: int | None, w: int | None) -> None:
        if level == len(order):
            found.append((tuple(a_val), tuple(b_val)))
            return
        t = order[level]
        degenerate = t[1] == t[2]
        for a, b in candidates(level, delta, w):
            a_val[level], b_val[level] = a, b
            if not prune:
                dfs(level + 1, None, None)
                continue
            new_delta = delta
            if new_delta is None:
                new_delta = (-(a * ring.element(b).inv().value) - ring.element(a).inv().value * b) % m
            new_w = w
            if degenerate:
                this_w = (-a * a * ring.element(b).inv().value) % m
                if w is None:
                    new_w = this_w
                elif this_w != w:
                    continue
            if not check_level(level, new_delta):
                continue
            dfs(level + 1, new_delta, new_w)

    dfs(0, None, None)

    results = []
    for a_flat, b_flat in found:
        a_tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
        b_tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
        for i, t in enumerate(order):
            a_tensor[t[0] - 1][t[1] - 1][t[2] - 1] = a_flat[i]
            b_tensor[t[0] - 1][t[1] - 1][t[2] - 1] = b_flat[i]
        if not prune:
            report = verify_bracket(x, a_tensor, b_tensor, ring, four_term_iv=four_term_iv)
            if not report.valid:
                continue
        try:
            bracket = TribracketBracket.create(
                x, ring, a_tensor, b_tensor, check=False
            )
        except (NotConstantError, NonUnitError):
            continue
        results.append(bracket)

    results.sort(key=lambda br: br.flat_key())
    if limit is not None:
        results = results[:limit]
    return results
