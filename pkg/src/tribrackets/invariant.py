"""Region colorings and the bracket state-sum enhancement.

A coloring assigns a tribracket element to every region of a diagram so
that ``[a,b,c] = d`` holds at each crossing under the diagram's role map.
The number of colorings is the counting invariant.  Given a bracket, each
coloring gets a state-sum value

    beta(C) = w^(n-p) * sum over states of (product of coefficients) * delta^k

where the coefficient at a positive crossing is A (oriented smoothing) or
B (disoriented), at a negative crossing A^{-1} (oriented) or B^{-1}
(disoriented), k counts the loops of the state, and p/n count positive and
negative crossings.  Collecting u^{beta(C)} over all colorings yields the
enhanced invariant polynomial.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
import json
import re

from .bracket import TribracketBracket
from .diagram import LinkDiagram, PDCode, build_diagram, reverse_component
from .rings import ModulusRing, RingElement
from .tribracket import Tribracket


@dataclass(frozen=True)
class Coloring:
    """A valid region coloring: face index -> tribracket element (1-based)."""

    diagram: LinkDiagram
    assignment: tuple[int, ...]

    def role_colors(self, ci: int) -> tuple[int, int, int, int]:
        roles = self.diagram.crossing_regions[ci]
        return (
            self.assignment[roles["a"]],
            self.assignment[roles["b"]],
            self.assignment[roles["c"]],
            self.assignment[roles["d"]],
        )


def enumerate_colorings(diagram: LinkDiagram, x: Tribracket) -> list[Coloring]:
    """All colorings, in lexicographic order of the face-assignment tuple.

    Backtracks over faces ordered by how many crossings they touch, forcing
    the fourth region of any crossing whose other three are colored (the
    quasigroup divisions make that unique), and checking complete crossings.
    """
    n = x.size
    faces = range(len(diagram.faces))
    constraints = [
        (r["a"], r["b"], r["c"], r["d"]) for r in diagram.crossing_regions
    ]

    touching: dict[int, list[int]] = {f: [] for f in faces}
    for ci, quad in enumerate(constraints):
        for f in quad:
            touching[f].append(ci)

    order = sorted(faces, key=lambda f: (-len(touching[f]), f))
    assignment: dict[int, int] = {}
    results: list[tuple[int, ...]] = []

    def forced_value(quad: tuple[int, int, int, int]) -> tuple[int, int] | None:
        """(face, value) for a crossing with exactly one uncolored role, or None."""
        vals = [assignment.get(f) for f in quad]
        missing = [i for i, v in enumerate(vals) if v is None]
        if len(missing) != 1:
            return None
        i = missing[0]
        a, b, c, d = vals
        if i == 3:
            forced = x.eval(a, b, c)
        elif i == 0:
            forced = x.divide_left(b, c, d)
        elif i == 1:
            forced = x.divide_center(a, c, d)
        else:
            forced = x.divide_right(a, b, d)
        return quad[i], forced

    def consistent(quad: tuple[int, int, int, int]) -> bool:
        vals = [assignment.get(f) for f in quad]
        if any(v is None for v in vals):
            return True
        return x.eval(vals[0], vals[1], vals[2]) == vals[3]

    def propagate(trail: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for quad in constraints:
                if not consistent(quad):
                    return False
                forced = forced_value(quad)
                if forced is not None:
                    face, value = forced
                    assignment[face] = value
                    trail.append(face)
                    changed = True
        return True

    def backtrack(idx: int) -> None:
        while idx < len(order) and order[idx] in assignment:
            idx += 1
        if idx == len(order):
            results.append(tuple(assignment[f] for f in faces))
            return
        face = order[idx]
        for value in range(1, n + 1):
            assignment[face] = value
            trail: list[int] = [face]
            if propagate(trail):
                backtrack(idx + 1)
            for f in trail:
                del assignment[f]

    backtrack(0)
    results.sort()
    return [Coloring(diagram, r) for r in results]


def counting_invariant(diagram: LinkDiagram, x: Tribracket) -> int:
    return len(enumerate_colorings(diagram, x))


# -- state sums ---------------------------------------------------------------


def _state_loop_counts(diagram: LinkDiagram) -> list[int]:
    """Loop count per smoothing state, indexed by the disoriented bitmask."""
    return [state.loop_count for state in diagram.enumerate_states()]


def _crossing_coefficients(
    coloring: Coloring, bracket: TribracketBracket
) -> list[tuple[int, int]]:
    """Per crossing, the residues contributed by (oriented, disoriented) choices."""
    m = bracket.ring.modulus
    out = []
    for ci in range(coloring.diagram.pd.crossing_count):
        a, b, c, _ = coloring.role_colors(ci)
        av = bracket.a_raw[a - 1][b - 1][c - 1]
        bv = bracket.b_raw[a - 1][b - 1][c - 1]
        if coloring.diagram.signs[ci] == 1:
            out.append((av, bv))
        else:
            out.append((pow(av, -1, m), pow(bv, -1, m)))
    return out


def beta(
    coloring: Coloring,
    bracket: TribracketBracket,
    loop_counts: list[int] | None = None,
) -> RingElement:
    """State-sum value of one colored diagram."""
    diagram = coloring.diagram
    if bracket.tribracket.size < max(coloring.assignment, default=1):
        raise ValueError("bracket's tribracket is smaller than the coloring's palette")
    m = bracket.ring.modulus
    if loop_counts is None:
        loop_counts = _state_loop_counts(diagram)
    coeffs = _crossing_coefficients(coloring, bracket)
    delta = bracket.delta.value
    c = diagram.pd.crossing_count

    total = 0
    for mask in range(1 << c):
        term = pow(delta, loop_counts[mask], m)
        for ci in range(c):
            term = term * coeffs[ci][(mask >> ci) & 1] % m
        total = (total + term) % m
    correction = bracket.w ** (diagram.negative_count - diagram.positive_count)
    return bracket.ring.element(total * correction.value)


def phi(
    diagram: LinkDiagram,
    bracket: TribracketBracket,
    states_outer: bool = False,
) -> "InvariantPolynomial":
    """The enhanced invariant: sum of u^{beta(C)} over all colorings.

    ``states_outer`` flips the two evaluation loops (identical results; the
    default fixes each coloring's coefficients once, which is cheaper).
    """
    colorings = enumerate_colorings(diagram, bracket.tribracket)
    loop_counts = _state_loop_counts(diagram)
    if not states_outer:
        terms: Counter[int] = Counter()
        for coloring in colorings:
            terms[beta(coloring, bracket, loop_counts).value] += 1
        return InvariantPolynomial(bracket.ring, dict(terms))

    m = bracket.ring.modulus
    c = diagram.pd.crossing_count
    coeffs = [_crossing_coefficients(col, bracket) for col in colorings]
    totals = [0] * len(colorings)
    delta = bracket.delta.value
    for mask in range(1 << c):
        weight = pow(delta, loop_counts[mask], m)
        for idx in range(len(colorings)):
            term = weight
            for ci in range(c):
                term = term * coeffs[idx][ci][(mask >> ci) & 1] % m
            totals[idx] = (totals[idx] + term) % m
    correction = bracket.w ** (diagram.negative_count - diagram.positive_count)
    terms = Counter(t * correction.value % m for t in totals)
    return InvariantPolynomial(bracket.ring, dict(terms))


def phi_multiset(diagram: LinkDiagram, bracket: TribracketBracket) -> list[RingElement]:
    """The same data as :func:`phi`, as a sorted multiset of ring elements."""
    poly = phi(diagram, bracket)
    out = []
    for residue in sorted(poly.terms):
        out.extend([bracket.ring.element(residue)] * poly.terms[residue])
    return out


def phi_orientations(
    pd: PDCode, bracket: TribracketBracket
) -> dict[int, "InvariantPolynomial"]:
    """Phi for every component-orientation mask (bit i reverses component i)."""
    base = build_diagram(pd)
    comp_count = len(base.components)
    out: dict[int, InvariantPolynomial] = {}
    for mask in range(1 << comp_count):
        cur = pd
        for i in range(comp_count):
            if (mask >> i) & 1:
                cur = reverse_component(cur, i)
        out[mask] = phi(build_diagram(cur), bracket)
    return out


# -- the polynomial container ---------------------------------------------------


@dataclass(frozen=True)
class InvariantPolynomial:
    """Multiset of ring elements rendered as sum of u^exponent terms.

    ``terms`` maps exponent residues to multiplicities; the canonical string
    sorts exponents descending, writes ``u`` for exponent 1 and a bare
    multiplicity for exponent 0.
    """

    ring: ModulusRing
    terms: dict[int, int]

    def __post_init__(self):
        cleaned = {
            int(e) % self.ring.modulus: int(mult)
            for e, mult in self.terms.items()
            if mult
        }
        if any(mult < 0 for mult in cleaned.values()):
            raise ValueError("multiplicities must be nonnegative")
        object.__setattr__(self, "terms", cleaned)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def canonical_string(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            mult = self.terms[exp]
            if exp == 0:
                parts.append(str(mult))
            else:
                head = "" if mult == 1 else str(mult)
                power = "u" if exp == 1 else f"u^{exp}"
                parts.append(head + power)
        return "+".join(parts)

    def to_json(self) -> str:
        return json.dumps(
            {
                "modulus": self.ring.modulus,
                "terms": {str(e): self.terms[e] for e in sorted(self.terms)},
            }
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, InvariantPolynomial):
            return NotImplemented
        return self.ring.modulus == other.ring.modulus and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.modulus, tuple(sorted(self.terms.items()))))

    def __str__(self):
        return self.canonical_string()

    @staticmethod
    def from_string(text: str, ring: ModulusRing) -> "InvariantPolynomial":
        """Parse table notation like ``4u^4+3u^3+u`` or ``16u^3`` or ``8``."""
        terms: Counter[int] = Counter()
        for raw in text.replace(" ", "").split("+"):
            match = re.fullmatch(r"(\d+)?(u(\^(\d+))?)?", raw)
            if not match or not raw:
                raise ValueError(f"bad polynomial term {raw!r} in {text!r}")
            coeff = int(match.group(1)) if match.group(1) else 1
            if match.group(2) is None:
                if match.group(1) is None:
                    raise ValueError(f"bad polynomial term {raw!r}")
                exponent = 0
            else:
                exponent = int(match.group(4)) if match.group(4) else 1
            terms[exponent % ring.modulus] += coeff
        return InvariantPolynomial(ring, dict(terms))
