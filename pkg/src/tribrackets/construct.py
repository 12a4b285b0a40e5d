"""Programmatic diagram builders: braid closures, twist regions, tangle sums.

These produce PD codes for the catalog and for move-invariance fixtures.
The intermediate form is a list of proto-crossings, each holding four arc
ids in counterclockwise order plus a flag saying which opposite pair of
positions is the over-strand; :func:`assemble` merges arcs, orients the
strands, and emits a :class:`~tribrackets.diagram.PDCode` rooted at each
incoming under-strand.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import DiagramError, LinkDiagram, PDCode


@dataclass
class ProtoCrossing:
    """Four arc ids counterclockwise; over_pair picks positions {1,3} (1)
    or {0,2} (0) as the over-strand."""

    ends: list[int]
    over_pair: int


@dataclass
class ProtoDiagram:
    crossings: list[ProtoCrossing] = field(default_factory=list)
    joins: list[tuple[int, int]] = field(default_factory=list)
    seeds: list[tuple[int, tuple[int, int]]] = field(default_factory=list)
    next_arc: int = 0

    def new_arc(self) -> int:
        self.next_arc += 1
        return self.next_arc - 1

    def add_crossing(self, ends: list[int], over_pair: int) -> None:
        self.crossings.append(ProtoCrossing(list(ends), over_pair))

    def join(self, a: int, b: int) -> None:
        self.joins.append((a, b))

    def orient(self, arc: int, into: tuple[int, int]) -> None:
        """Declare that ``arc`` flows into crossing end ``into``."""
        self.seeds.append((arc, into))


def assemble(proto: ProtoDiagram, extra_loops: int = 0) -> PDCode:
    """Merge joined arcs, orient components, and emit a PD code."""
    parent = list(range(proto.next_arc))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in proto.joins:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, cr in enumerate(proto.crossings):
        for pos, arc in enumerate(cr.ends):
            occ.setdefault(find(arc), []).append((ci, pos))
    for root, places in occ.items():
        if len(places) != 2:
            raise DiagramError(f"arc {root} has {len(places)} crossing ends")

    # arcs mentioned only in joins are crossingless loops
    joined_roots = {find(a) for a, b in proto.joins} | {find(b) for a, b in proto.joins}
    loops = extra_loops + sum(1 for r in joined_roots if r not in occ)

    if not proto.crossings:
        return PDCode((), loops)

    seed_map = {find(arc): into for arc, into in proto.seeds}

    def walk(start: int, first_idx: int) -> tuple[list[int], dict[int, tuple[int, int]]]:
        order: list[int] = []
        flows: dict[int, tuple[int, int]] = {}
        arc, occ_idx = start, first_idx
        while arc not in flows:
            order.append(arc)
            ci, pos = occ[arc][occ_idx]
            flows[arc] = (ci, pos)
            nxt_pos = (pos + 2) % 4
            nxt_arc = find(proto.crossings[ci].ends[nxt_pos])
            occ_idx = 1 if occ[nxt_arc][0] == (ci, nxt_pos) else 0
            arc = nxt_arc
        return order, flows

    label: dict[int, int] = {}
    flows_in: dict[int, tuple[int, int]] = {}
    next_label = 1
    for start in sorted(occ):
        if start in label:
            continue
        order, flows = walk(start, 1)
        seeded = [a for a in order if find(a) in seed_map]
        if seeded and flows[seeded[0]] != seed_map[find(seeded[0])]:
            order, flows = walk(start, 0)
        for a in order:
            if find(a) in seed_map and flows[a] != seed_map[find(a)]:
                raise DiagramError("conflicting orientation seeds on one component")
        for a in order:
            label[a] = next_label
            next_label += 1
            flows_in[a] = flows[a]

    tuples = []
    for ci, cr in enumerate(proto.crossings):
        under_positions = (0, 2) if cr.over_pair == 1 else (1, 3)
        under_in = [
            p for p in under_positions if flows_in[find(cr.ends[p])] == (ci, p)
        ]
        if len(under_in) != 1:
            raise DiagramError(f"crossing {ci}: could not root at the under-in strand")
        r = under_in[0]
        rotated = [find(cr.ends[(r + k) % 4]) for k in range(4)]
        tuples.append(tuple(label[a] for a in rotated))
    return PDCode(tuple(tuples), loops)


# -- braids -------------------------------------------------------------------


def braid_closure(word: list[int], strands: int, extra_loops: int = 0) -> PDCode:
    """Close the braid given by ``word`` (letters +-1..+-(strands-1)).

    Letter +i crosses strand i under strand i+1 (a positive crossing once the
    strands are oriented the same way); -i is the mirror letter.
    """
    if strands < 1:
        raise ValueError("strands must be >= 1")
    for letter in word:
        if letter == 0 or abs(letter) >= strands:
            raise ValueError(f"letter {letter} invalid for {strands} strands")
    proto = ProtoDiagram()
    top = [proto.new_arc() for _ in range(strands)]
    cur = list(top)
    for letter in word:
        i = abs(letter) - 1
        left, right = cur[i], cur[i + 1]
        new_left, new_right = proto.new_arc(), proto.new_arc()
        ci = len(proto.crossings)
        if letter > 0:
            # under-strand runs left-in to right-out: ccw (NW, SW, SE, NE)
            proto.add_crossing([left, new_left, new_right, right], over_pair=1)
            proto.orient(left, (ci, 0))
            proto.orient(right, (ci, 3))
        else:
            # under-strand runs right-in to left-out: ccw (NE, NW, SW, SE)
            proto.add_crossing([right, left, new_left, new_right], over_pair=1)
            proto.orient(right, (ci, 0))
            proto.orient(left, (ci, 1))
        cur[i], cur[i + 1] = new_left, new_right
    for j in range(strands):
        proto.join(cur[j], top[j])
    return assemble(proto, extra_loops)


# -- twist-region tangles ------------------------------------------------------


@dataclass
class Tangle:
    """A 2-string tangle under construction, with its four boundary arcs."""

    proto: ProtoDiagram
    nw: int
    ne: int
    sw: int
    se: int


def zero_tangle(proto: ProtoDiagram | None = None) -> Tangle:
    """Two horizontal strands: nw-ne and sw-se."""
    proto = proto or ProtoDiagram()
    top = proto.new_arc()
    bottom = proto.new_arc()
    return Tangle(proto, nw=top, ne=top, sw=bottom, se=bottom)


def infinity_tangle(proto: ProtoDiagram | None = None) -> Tangle:
    """Two vertical strands: nw-sw and ne-se."""
    proto = proto or ProtoDiagram()
    left = proto.new_arc()
    right = proto.new_arc()
    return Tangle(proto, nw=left, ne=right, sw=left, se=right)


def twist_right(t: Tangle, sign: int) -> Tangle:
    """Add one crossing between the NE and SE boundary strands."""
    p = t.proto
    new_ne, new_se = p.new_arc(), p.new_arc()
    # ccw around the new crossing: (W-top, W-bottom, E-bottom, E-top)
    ends = [t.ne, t.se, new_se, new_ne]
    p.add_crossing(ends, over_pair=1 if sign > 0 else 0)
    return Tangle(p, nw=t.nw, ne=new_ne, sw=t.sw, se=new_se)


def twist_bottom(t: Tangle, sign: int) -> Tangle:
    """Add one crossing between the SW and SE boundary strands."""
    p = t.proto
    new_sw, new_se = p.new_arc(), p.new_arc()
    # ccw around the new crossing: (N-left, S-left, S-right, N-right)
    ends = [t.sw, new_sw, new_se, t.se]
    p.add_crossing(ends, over_pair=1 if sign > 0 else 0)
    return Tangle(p, nw=t.nw, ne=t.ne, sw=new_sw, se=new_se)


def twist_vector_tangle(
    twists: list[int],
    start_axis: str = "right",
    sign: int = 1,
    alternate_sign: bool = True,
) -> Tangle:
    """Apply runs of twists with alternating axis, starting at ``start_axis``.

    ``twists[0]`` crossings on the first axis, then ``twists[1]`` on the
    other, and so on.  ``sign`` fixes the handedness of the first run and
    ``alternate_sign`` whether subsequent runs flip it; exactly one of the
    combinations yields the alternating 4-plat diagram (callers scan for
    it).  A bottom-first build starts from the infinity tangle so the first
    twists act on two distinct strands.
    """
    t = zero_tangle() if start_axis == "right" else infinity_tangle()
    axis = start_axis
    s = sign
    for run in twists:
        for _ in range(run):
            t = twist_right(t, s) if axis == "right" else twist_bottom(t, s)
        axis = "bottom" if axis == "right" else "right"
        if alternate_sign:
            s = -s
    return t


def numerator_closure(t: Tangle, extra_loops: int = 0) -> PDCode:
    """Join NW-NE and SW-SE."""
    t.proto.join(t.nw, t.ne)
    t.proto.join(t.sw, t.se)
    return assemble(t.proto, extra_loops)


def tangle_sum(
    parts: list[list[int]],
    signs: list[int] | None = None,
    alternate: list[bool] | None = None,
    axes: list[str] | None = None,
) -> PDCode:
    """Numerator closure of a left-to-right sum of twist-vector tangles.

    Each part is a twist vector built bottom-axis-first by default (so
    ``[n]`` is a vertical stack of n crossings, pretzel style); ``signs``,
    ``alternate`` and ``axes`` pick each part's first-run handedness, sign
    alternation, and starting axis.
    """
    proto = ProtoDiagram()
    built: list[Tangle] = []
    signs = signs or [1] * len(parts)
    alternate = alternate if alternate is not None else [True] * len(parts)
    axes = axes or ["bottom"] * len(parts)
    for vector, sgn, alt, start in zip(parts, signs, alternate, axes):
        t = infinity_tangle(proto) if start == "bottom" else zero_tangle(proto)
        axis = start
        s = sgn
        for run in vector:
            for _ in range(run):
                t = twist_right(t, s) if axis == "right" else twist_bottom(t, s)
            axis = "bottom" if axis == "right" else "right"
            if alt:
                s = -s
        built.append(t)
    for left, right in zip(built, built[1:]):
        proto.join(left.ne, right.nw)
        proto.join(left.se, right.sw)
    proto.join(built[0].nw, built[-1].ne)
    proto.join(built[0].sw, built[-1].se)
    return assemble(proto)


def rational_link(
    twists: list[int],
    start_axis: str | None = None,
    sign: int = 1,
    alternate_sign: bool = True,
) -> PDCode:
    """Numerator closure of a twist-vector tangle (a 2-bridge diagram).

    The last twist run must be horizontal (the numerator closure would
    untwist a trailing vertical run), so the default start axis is chosen
    from the parity of the vector length.
    """
    if start_axis is None:
        start_axis = "right" if len(twists) % 2 == 1 else "bottom"
    return numerator_closure(twist_vector_tangle(twists, start_axis, sign, alternate_sign))


# -- diagram quality checks -----------------------------------------------------


def is_alternating(pd: PDCode) -> bool:
    """Along every strand the passes alternate under/over."""
    diagram = LinkDiagram(pd)
    for comp in diagram.components:
        enters = diagram._walk_edges(comp[0])
        passes = [enters[e][1] in (0, 2) for e in comp]
        if len(passes) > 1 and any(a == b for a, b in zip(passes, passes[1:] + passes[:1])):
            return False
    return True


def is_reduced(pd: PDCode) -> bool:
    """No nugatory crossings (opposite corners never share a region)."""
    diagram = LinkDiagram(pd)
    for ci in range(pd.crossing_count):
        cf = diagram.corner_face
        if cf[(ci, 0)] == cf[(ci, 2)] or cf[(ci, 1)] == cf[(ci, 3)]:
            return False
    return True


def is_prime_diagram(pd: PDCode) -> bool:
    """Connected, and no two edges share the same pair of bordering regions
    (which would exhibit a 2-string cut sphere)."""
    diagram = LinkDiagram(pd)
    if pd.crossing_count == 0:
        return False
    seen_pairs: set[frozenset[int]] = set()
    for edge, places in diagram._occ.items():
        ci, pos = places[0]
        pair = frozenset(
            {diagram.corner_face[(ci, (pos - 1) % 4)], diagram.corner_face[(ci, pos)]}
        )
        if len(pair) == 1:
            return False
        if pair in seen_pairs:
            return False
        seen_pairs.add(pair)
    # connectivity: one crossing part means every face id appears somewhere
    return diagram.face_count == pd.crossing_count + 2 and diagram.pd.unknot_loops == 0
