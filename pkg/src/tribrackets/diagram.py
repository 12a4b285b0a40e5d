"""Oriented link diagrams from PD codes.

A PD code lists one 4-tuple of edge labels per crossing, read
counterclockwise starting at the incoming under-strand.  From that single
combinatorial datum this module recovers:

* strand components and edge orientations (from the under-strand in/out
  positions, with ascending labels as a fallback for all-over components),
* crossing signs (positive when the over-strand runs from tuple position 3
  to position 1),
* the planar regions, as orbits of the corner-successor map on the 4c
  crossing corners, checked against Euler's count F = c + 2 per connected
  part,
* the four region roles at each crossing used by the coloring rule
  [a,b,c] = d: ``a`` is the region to the left of both strands, ``b`` sits
  across the over-strand from ``a``, ``c`` across the under-strand, and
  ``d`` is opposite ``a`` (right of both strands).  This placement is the
  one validated against the published worked examples (the displayed Hopf
  state sum and its coefficient triples, the region-coloring counts, and
  move-invariance fixtures); in tuple-position terms it reads corners
  (a,b,c,d) = (0,1,3,2) at positive and (1,0,2,3) at negative crossings,
* Kauffman smoothing states and their loop counts.

Crossingless unknot components are declared with ``U(k)`` markers; they add
free regions and contribute k loops to every smoothing state.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

Occurrence = tuple[int, int]  # (crossing index, tuple position 0..3)

ORIENTED = "oriented"
DISORIENTED = "disoriented"

STATE_GUARD = 24  # refuse to enumerate more than 2**24 smoothing states


class DiagramError(ValueError):
    """Malformed or inconsistent PD input."""


class NonPlanarError(DiagramError):
    """The rotation system fails Euler's face count: not a planar diagram."""


@dataclass(frozen=True)
class PDCode:
    """Crossing tuples plus a count of crossingless unknot components."""

    crossings: tuple[tuple[int, int, int, int], ...]
    unknot_loops: int = 0

    def __post_init__(self):
        counts: dict[int, int] = {}
        for tup in self.crossings:
            if len(tup) != 4:
                raise DiagramError(f"crossing tuple {tup} does not have 4 entries")
            for lab in tup:
                if not isinstance(lab, int) or lab < 1:
                    raise DiagramError(f"edge label {lab!r} is not a positive integer")
                counts[lab] = counts.get(lab, 0) + 1
        bad = {lab: c for lab, c in counts.items() if c != 2}
        if bad:
            raise DiagramError(f"edge labels must appear exactly twice, got {bad}")
        if self.unknot_loops < 0:
            raise DiagramError("unknot loop count cannot be negative")
        if not self.crossings and self.unknot_loops == 0:
            raise DiagramError("empty diagram: declare crossingless loops with U(k)")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    def occurrences(self) -> dict[int, list[Occurrence]]:
        occ: dict[int, list[Occurrence]] = {}
        for ci, tup in enumerate(self.crossings):
            for pos, lab in enumerate(tup):
                occ.setdefault(lab, []).append((ci, pos))
        return occ

    def to_text(self) -> str:
        parts = ["X({},{},{},{})".format(*tup) for tup in self.crossings]
        if self.unknot_loops:
            parts.append(f"U({self.unknot_loops})")
        return " ".join(parts)


_TOKEN = re.compile(r"([XU])\s*[\(\[]\s*([0-9,\s]*?)\s*[\)\]]")


def parse_pd(text: str) -> PDCode:
    """Parse ``X(a,b,c,d)`` / ``X[a,b,c,d]`` crossings and ``U(k)`` markers."""
    crossings = []
    loops = 0
    consumed = 0
    for match in _TOKEN.finditer(text):
        consumed += 1
        kind, body = match.group(1), match.group(2)
        nums = [int(v) for v in re.split(r"[\s,]+", body.strip()) if v]
        if kind == "X":
            if len(nums) != 4:
                raise DiagramError(f"crossing needs 4 labels, got {nums}")
            crossings.append(tuple(nums))
        else:
            if len(nums) != 1 or nums[0] < 1:
                raise DiagramError(f"U marker needs one positive count, got {nums}")
            loops += nums[0]
    leftover = _TOKEN.sub("", text).strip()
    if leftover:
        raise DiagramError(f"unparsed PD input: {leftover!r}")
    if consumed == 0:
        raise DiagramError("no PD tokens found; declare an unknot as U(1)")
    return PDCode(tuple(crossings), loops)


@dataclass(frozen=True)
class SmoothingState:
    """One smoothing choice per crossing and the resulting loop count."""

    choices: tuple[str, ...]
    loop_count: int


class LinkDiagram:
    """A built diagram: orientations, signs, faces, roles, ready for coloring.

    Construct through :func:`build_diagram`.
    """

    def __init__(self, pd: PDCode):
        self.pd = pd
        self._occ = pd.occurrences()
        self.components = self._walk_components()
        self.edge_head, self.edge_tail = self._resolve_directions()
        # normalize component walks to the oriented (forward) direction
        self.components = [
            comp if self._component_votes(comp) else [comp[0]] + comp[:0:-1]
            for comp in self.components
        ]
        self.over_in = self._over_in_positions()
        self.signs = tuple(
            1 if self.over_in[ci] == 3 else -1 for ci in range(pd.crossing_count)
        )
        self.faces, self.corner_face = self._build_faces()
        self.crossing_regions = self._assign_roles()
        self.positive_count = sum(1 for s in self.signs if s == 1)
        self.negative_count = sum(1 for s in self.signs if s == -1)

    # -- basic counts --------------------------------------------------------

    @property
    def writhe(self) -> int:
        return self.positive_count - self.negative_count

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.pd.unknot_loops

    def component_edge_ranges(self) -> list[tuple[int, int]]:
        """Per strand component, its (min, max) edge labels."""
        return [(min(comp), max(comp)) for comp in self.components]

    # -- construction passes -------------------------------------------------

    def _walk_edges(self, start: int) -> dict[int, Occurrence]:
        """Walk the strand from ``start``; map each edge to the occurrence at
        which the walk enters a crossing (walk direction, not orientation)."""
        pd = self.pd
        enters: dict[int, Occurrence] = {}
        edge, occ_idx = start, 0
        while True:
            enter = self._occ[edge][occ_idx]
            if edge in enters:
                raise DiagramError("component walk failed to close")
            enters[edge] = enter
            ci, pos = enter
            nxt_pos = (pos + 2) % 4
            nxt_edge = pd.crossings[ci][nxt_pos]
            occ_idx = 1 if self._occ[nxt_edge][0] == (ci, nxt_pos) else 0
            edge = nxt_edge
            if (edge, occ_idx) == (start, 0):
                return enters

    def _walk_components(self) -> list[list[int]]:
        """Strand components as edge label sequences in walk order."""
        seen: set[int] = set()
        comps: list[list[int]] = []
        for start in sorted(self._occ):
            if start in seen:
                continue
            walk: list[int] = []
            enters = self._walk_edges(start)
            # reconstruct visit order by replaying the walk
            edge, occ_idx = start, 0
            for _ in enters:
                walk.append(edge)
                seen.add(edge)
                ci, pos = self._occ[edge][occ_idx]
                nxt_pos = (pos + 2) % 4
                nxt_edge = self.pd.crossings[ci][nxt_pos]
                occ_idx = 1 if self._occ[nxt_edge][0] == (ci, nxt_pos) else 0
                edge = nxt_edge
            comps.append(walk)
        return comps

    def _component_votes(self, comp: Sequence[int]) -> bool:
        """True when the walk direction of ``comp`` agrees with its orientation."""
        votes: set[bool] = set()
        enters = self._walk_edges(comp[0])
        for e in comp:
            enter = enters[e]
            other = self._other_occurrence(e, enter)
            if enter[1] == 0:
                votes.add(True)
            elif enter[1] == 2:
                votes.add(False)
            if other[1] == 0:
                votes.add(False)
            elif other[1] == 2:
                votes.add(True)
        if len(votes) > 1:
            raise DiagramError(
                f"inconsistent strand orientation on component containing edge {comp[0]}"
            )
        if votes:
            return votes.pop()
        # all-over component: orient so labels ascend along the walk
        return self._labels_ascend(comp)

    def _resolve_directions(self) -> tuple[dict[int, Occurrence], dict[int, Occurrence]]:
        """Assign each edge a head (flows in) and tail occurrence.

        The under-strand convention (tuple position 0 flows in, position 2
        flows out) votes on whether the walk direction matches the edge
        orientation; components that never pass under fall back to ascending
        edge labels.
        """
        head: dict[int, Occurrence] = {}
        tail: dict[int, Occurrence] = {}
        for comp in self.components:
            forward = self._component_votes(comp)
            enters = self._walk_edges(comp[0])
            for e in comp:
                enter = enters[e]
                other = self._other_occurrence(e, enter)
                if forward:
                    head[e], tail[e] = enter, other
                else:
                    head[e], tail[e] = other, enter
        return head, tail

    @staticmethod
    def _labels_ascend(comp: Sequence[int]) -> bool:
        if len(comp) <= 2:
            return True
        base = comp.index(min(comp))
        rotated = list(comp[base:]) + list(comp[:base])
        return rotated == sorted(comp)

    def _other_occurrence(self, edge: int, occ: Occurrence) -> Occurrence:
        first, second = self._occ[edge]
        return second if occ == first else first

    def _over_in_positions(self) -> tuple[int, ...]:
        out = []
        for ci, tup in enumerate(self.pd.crossings):
            in_positions = [
                pos for pos in (1, 3) if self.edge_head[tup[pos]] == (ci, pos)
            ]
            if len(in_positions) != 1:
                raise DiagramError(f"crossing {ci}: over-strand direction unresolved")
            out.append(in_positions[0])
        return tuple(out)

    def _build_faces(self) -> tuple[list[tuple[Occurrence, ...]], dict[Occurrence, int]]:
        pd = self.pd
        if pd.crossing_count == 0:
            faces: list[tuple[Occurrence, ...]] = [()]
            faces.extend(() for _ in range(pd.unknot_loops))
            return faces, {}

        def successor(corner: Occurrence) -> Occurrence:
            ci, pos = corner
            dart = (ci, (pos + 1) % 4)
            edge = pd.crossings[dart[0]][dart[1]]
            return self._other_occurrence(edge, dart)

        corners = [(ci, p) for ci in range(pd.crossing_count) for p in range(4)]
        corner_face: dict[Occurrence, int] = {}
        orbits: list[tuple[Occurrence, ...]] = []
        for corner in corners:
            if corner in corner_face:
                continue
            orbit = []
            cur = corner
            while cur not in corner_face:
                corner_face[cur] = len(orbits)
                orbit.append(cur)
                cur = successor(cur)
            if cur != corner:
                raise DiagramError("corner orbit did not close on its start")
            orbits.append(tuple(orbit))

        # connected parts of the crossing graph, for the Euler check
        parent = list(range(pd.crossing_count))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for occs in self._occ.values():
            a, b = find(occs[0][0]), find(occs[1][0])
            if a != b:
                parent[a] = b
        parts: dict[int, list[int]] = {}
        for ci in range(pd.crossing_count):
            parts.setdefault(find(ci), []).append(ci)

        part_faces: dict[int, set[int]] = {}
        for root, members in parts.items():
            fids = {corner_face[(ci, p)] for ci in members for p in range(4)}
            if len(fids) != len(members) + 2:
                raise NonPlanarError(
                    f"connected part with {len(members)} crossings has {len(fids)} faces"
                )
            part_faces[root] = fids

        # split diagrams: merge one face of each extra part into the first
        # part's widest face (any placement yields a diagram of the same link)
        roots = sorted(parts, key=lambda r: min(parts[r]))
        if len(roots) > 1:
            def widest(fids: set[int]) -> int:
                return max(fids, key=lambda f: (len(orbits[f]), -f))

            target = widest(part_faces[roots[0]])
            remap = {}
            for root in roots[1:]:
                remap[widest(part_faces[root])] = target
            if remap:
                merged: list[list[Occurrence]] = [list(o) for o in orbits]
                for src, dst in remap.items():
                    merged[dst].extend(merged[src])
                    merged[src] = []
                keep = [i for i, o in enumerate(merged) if o]
                renumber = {old: new for new, old in enumerate(keep)}
                for src, dst in remap.items():
                    renumber[src] = renumber[dst]
                orbits = [tuple(merged[i]) for i in keep]
                corner_face = {c: renumber[f] for c, f in corner_face.items()}

        faces = list(orbits)
        faces.extend(() for _ in range(pd.unknot_loops))
        return faces, corner_face

    def _assign_roles(self) -> tuple[dict[str, int], ...]:
        """Region roles per crossing; corner p is between darts p and p+1.

        a = left of both strands, b = across the over-strand from a,
        c = across the under-strand from a, d = opposite a.
        """
        roles = []
        for ci in range(self.pd.crossing_count):
            if self.signs[ci] == 1:
                corner_of = {"a": 0, "b": 1, "c": 3, "d": 2}
            else:
                corner_of = {"a": 1, "b": 0, "c": 2, "d": 3}
            roles.append(
                {role: self.corner_face[(ci, p)] for role, p in corner_of.items()}
            )
        return tuple(roles)

    # -- smoothings ------------------------------------------------------------

    def smooth(self, choices: Sequence[str]) -> SmoothingState:
        """Loop count of the state selected by per-crossing oriented/disoriented choices.

        The type-A smoothing joins tuple positions (0,1) and (2,3); it is the
        oriented (Seifert) smoothing exactly at positive crossings.
        """
        pd = self.pd
        if len(choices) != pd.crossing_count:
            raise ValueError("one smoothing choice per crossing required")
        for ch in choices:
            if ch not in (ORIENTED, DISORIENTED):
                raise ValueError(f"unknown smoothing choice {ch!r}")

        parent: dict[Occurrence, Occurrence] = {}

        def find(x: Occurrence) -> Occurrence:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: Occurrence, y: Occurrence) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for ci in range(pd.crossing_count):
            for p in range(4):
                parent[(ci, p)] = (ci, p)
        for occs in self._occ.values():
            union(occs[0], occs[1])
        for ci, choice in enumerate(choices):
            type_a = (choice == ORIENTED) == (self.signs[ci] == 1)
            if type_a:
                union((ci, 0), (ci, 1))
                union((ci, 2), (ci, 3))
            else:
                union((ci, 0), (ci, 3))
                union((ci, 1), (ci, 2))
        loops = len({find(x) for x in parent})
        return SmoothingState(tuple(choices), loops + pd.unknot_loops)

    def enumerate_states(self) -> Iterator[SmoothingState]:
        """All 2^c states as a binary counter, bit i set = crossing i disoriented."""
        c = self.pd.crossing_count
        if c > STATE_GUARD:
            raise ValueError(f"state enumeration guard exceeded ({c} crossings)")
        for mask in range(1 << c):
            choices = tuple(
                DISORIENTED if (mask >> i) & 1 else ORIENTED for i in range(c)
            )
            yield self.smooth(choices)

    # -- serialization ----------------------------------------------------------

    def debug_json(self) -> str:
        return json.dumps(
            {
                "pd": self.pd.to_text(),
                "signs": list(self.signs),
                "writhe": self.writhe,
                "components": [list(c) for c in self.components],
                "faces": [[list(c) for c in face] for face in self.faces],
                "roles": [dict(sorted(r.items())) for r in self.crossing_regions],
            },
            sort_keys=True,
        )


def build_diagram(pd: PDCode | str) -> LinkDiagram:
    if isinstance(pd, str):
        pd = parse_pd(pd)
    return LinkDiagram(pd)


# -- PD-level transformations -------------------------------------------------


def mirror_pd(pd: PDCode) -> PDCode:
    """Swap over/under everywhere: reverse each tuple's rotation keeping the
    under-in entry first."""
    return PDCode(
        tuple((t[0], t[3], t[2], t[1]) for t in pd.crossings), pd.unknot_loops
    )


def reverse_component(pd: PDCode, component_index: int) -> PDCode:
    """Reverse the orientation of one strand component.

    Edges of that component are relabeled so labels ascend along the new
    direction, and each crossing where it passes under is re-rooted (rotated
    by two positions) so the tuple again starts at the incoming under-strand.
    """
    diagram = LinkDiagram(pd)
    comps = diagram.components
    if not 0 <= component_index < len(comps):
        raise IndexError(f"component {component_index} out of range")
    comp = comps[component_index]
    labels = sorted(comp)
    reversed_walk = [comp[0]] + list(reversed(comp[1:]))
    relabel = {old: labels[i] for i, old in enumerate(reversed_walk)}

    comp_set = set(comp)
    new_crossings = []
    for ci, tup in enumerate(pd.crossings):
        under_reversed = tup[0] in comp_set
        rotated = (tup[2], tup[3], tup[0], tup[1]) if under_reversed else tup
        new_crossings.append(tuple(relabel.get(lab, lab) for lab in rotated))
    return PDCode(tuple(new_crossings), pd.unknot_loops)
