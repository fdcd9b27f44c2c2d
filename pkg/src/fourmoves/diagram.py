"""Unoriented link diagrams as planar-diagram (PD) codes.

A diagram is a 4-valent plane graph: each crossing carries four arc labels
in counterclockwise order, slots 0 and 2 holding the under-strand and slots
1 and 3 the over-strand.  Crossingless unknot components are tracked by a
``free_loops`` counter rather than by fake crossings.

Darts (crossing, slot) give the combinatorial map used for faces and for
canonical codes; planarity of inputs and of every move output is asserted
through the Euler formula rather than an embedding algorithm.

A diagram may optionally carry one *frame* vertex (used by the tangle
calculus for 2-tangle fragments): a marked 4-valent vertex whose slots are
the NW, NE, SE, SW boundary legs.  Frame vertices take part in the face
structure but not in strand-following or under/over semantics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class PDSyntaxError(ValueError):
    """Malformed PD text; carries the character position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DiagramError(ValueError):
    """Structurally invalid diagram (arc degrees, non-planar gluing, ...)."""


@dataclass(frozen=True)
class Crossing:
    """One crossing: four arc labels counterclockwise, slots 0/2 under."""

    id: int
    slots: tuple

    def __post_init__(self):
        if len(self.slots) != 4:
            raise DiagramError(f"crossing {self.id} needs 4 slots")


# A dart is a pair (crossing_id, slot).


class LinkDiagram:
    """Immutable unoriented link diagram.

    Operations never mutate; the moves engine builds new diagrams.
    """

    def __init__(self, crossings, arc_count, free_loops=0, frame=None,
                 validate=True):
        self.crossings = tuple(sorted(crossings, key=lambda c: c.id))
        self.arc_count = arc_count
        self.free_loops = free_loops
        self.frame = frame
        self._by_id = {c.id: c for c in self.crossings}
        if len(self._by_id) != len(self.crossings):
            raise DiagramError("duplicate crossing ids")
        self._arc_darts = None
        self._faces = None
        self._components = None
        self._canonical = None
        if validate:
            self.validate()

    # -- basic accessors ---------------------------------------------------

    def crossing(self, cid):
        return self._by_id[cid]

    @property
    def crossing_ids(self):
        return [c.id for c in self.crossings]

    def n_crossings(self):
        return len(self.crossings) - (1 if self.frame is not None else 0)

    def real_crossings(self):
        return [c for c in self.crossings if c.id != self.frame]

    def arc_darts(self):
        """Map arc label -> tuple of its (crossing, slot) endpoints."""
        if self._arc_darts is None:
            darts = {}
            for c in self.crossings:
                for s, a in enumerate(c.slots):
                    darts.setdefault(a, []).append((c.id, s))
            self._arc_darts = {a: tuple(ds) for a, ds in darts.items()}
        return self._arc_darts

    def alpha(self, dart):
        """The other endpoint dart of the arc at ``dart``."""
        cid, s = dart
        a = self._by_id[cid].slots[s]
        d1, d2 = self.arc_darts()[a]
        return d2 if dart == d1 else d1

    def validate(self):
        """Arc-degree and label-density checks.  Planarity is asserted
        lazily by faces() (the Euler check), so that non-planar PD codes can
        still be parsed and inspected."""
        seen = {}
        for c in self.crossings:
            for a in c.slots:
                seen[a] = seen.get(a, 0) + 1
        if self.arc_count != len(seen) or (seen and sorted(seen) != list(range(self.arc_count))):
            raise DiagramError(
                f"arc labels not dense 0..{self.arc_count - 1}: {sorted(seen)}")
        for a, k in seen.items():
            if k != 2:
                raise DiagramError(f"arc {a} used {k} times (need exactly 2)")
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")

    # -- components ----------------------------------------------------------

    def component_map(self):
        """Map arc -> component index (frame legs give open strands, still
        grouped by connectivity through real crossings).  Components are
        numbered by their smallest arc label."""
        if self._components is None:
            parent = list(range(self.arc_count))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            def union(x, y):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)

            for c in self.crossings:
                if c.id == self.frame:
                    continue
                union(c.slots[0], c.slots[2])
                union(c.slots[1], c.slots[3])
            roots = sorted({find(a) for a in range(self.arc_count)})
            index = {r: i for i, r in enumerate(roots)}
            self._components = {a: index[find(a)] for a in range(self.arc_count)}
        return self._components

    def n_components(self):
        """Number of link components, free loops included."""
        arc_comps = len(set(self.component_map().values()))
        return arc_comps + self.free_loops

    def component_arcs(self):
        comps = {}
        for a, i in self.component_map().items():
            comps.setdefault(i, []).append(a)
        return {i: sorted(arcs) for i, arcs in comps.items()}

    # -- faces ---------------------------------------------------------------

    def next_face_dart(self, dart):
        """Face traversal: cross the arc, then rotate ccw one slot."""
        cid, s = self.alpha(dart)
        return (cid, (s + 1) % 4)

    def faces(self):
        """Faces as tuples of departure darts, one orbit per face; raises
        DiagramError when the Euler check fails (non-planar/corrupt PD).

        Sorted deterministically by smallest dart; each face cycle starts at
        its smallest dart.
        """
        if self._faces is None:
            all_darts = [(c.id, s) for c in self.crossings for s in range(4)]
            seen = set()
            faces = []
            for d0 in sorted(all_darts):
                if d0 in seen:
                    continue
                cycle = []
                d = d0
                while True:
                    cycle.append(d)
                    seen.add(d)
                    d = self.next_face_dart(d)
                    if d == d0:
                        break
                    if len(cycle) > len(all_darts):
                        raise DiagramError("face traversal failed to close")
                m = cycle.index(min(cycle))
                faces.append(tuple(cycle[m:] + cycle[:m]))
            self._faces = sorted(faces)
            self.check_euler()
        return self._faces

    def face_of_dart(self):
        """Map dart -> face index (into faces())."""
        out = {}
        for i, f in enumerate(self.faces()):
            for d in f:
                out[d] = i
        return out

    def graph_pieces(self):
        """Connected pieces of the 4-valent graph (sets of crossing ids)."""
        ids = [c.id for c in self.crossings]
        adj = {i: set() for i in ids}
        for a, ds in self.arc_darts().items():
            (c1, _), (c2, _) = ds
            adj[c1].add(c2)
            adj[c2].add(c1)
        seen = set()
        pieces = []
        for start in ids:
            if start in seen:
                continue
            stack, piece = [start], set()
            while stack:
                x = stack.pop()
                if x in piece:
                    continue
                piece.add(x)
                stack.extend(adj[x] - piece)
            seen |= piece
            pieces.append(piece)
        return pieces

    def check_euler(self):
        """V - E + F = 2 * (number of connected pieces); failure means the
        PD code is not realizable in the plane (or the surgery was wrong).

        Free loops live on their own sphere summands and are consistently
        excluded from all three counts."""
        v = len(self.crossings)
        e = self.arc_count
        if v == 0:
            if e:
                raise DiagramError("arcs without crossings")
            return
        f = len(self._faces) if self._faces is not None else len(self.faces())
        pieces = len(self.graph_pieces())
        if v - e + f != 2 * pieces:
            raise DiagramError(
                f"Euler check failed: V={v} E={e} F={f} pieces={pieces}")

    # -- canonical code -------------------------------------------------------

    def canonical_code(self):
        """Byte string equal for diagrams differing only by crossing/arc
        relabeling (and by the slot-rotation-by-two freedom at each
        crossing).  Mirror images are not identified."""
        if self._canonical is not None:
            return self._canonical
        pieces = self.graph_pieces()
        piece_codes = []
        for piece in pieces:
            if self.frame is not None and self.frame in piece:
                piece_codes.append(self._piece_code(piece, pinned=True))
            else:
                piece_codes.append(self._piece_code(piece, pinned=False))
        tag = b"|".join(sorted(piece_codes))
        self._canonical = tag + b"|L%d" % self.free_loops
        return self._canonical

    def _piece_code(self, piece, pinned):
        starts = ([(self.frame, s) for s in range(4)][:1] if pinned else
                  [(cid, s) for cid in sorted(piece) for s in range(4)])
        best = None
        for start in starts:
            sig = self._traverse_signature(start, piece)
            if best is None or sig < best:
                best = sig
        return b"(" + b",".join(b"%d.%d" % p for row in best for p in row) + b")"

    def _traverse_signature(self, start, piece):
        c0, s0 = start
        rot = {c0: 0 if s0 < 2 else 2}
        order = {c0: 0}
        queue = [c0]
        qi = 0
        while qi < len(queue):
            cid = queue[qi]
            qi += 1
            r = rot[cid]
            for j in range(4):
                s = (j + r) % 4
                c2, s2 = self.alpha((cid, s))
                if c2 not in order:
                    order[c2] = len(order)
                    rot[c2] = 0 if s2 < 2 else 2
                    queue.append(c2)
        sig = []
        for cid in queue:
            r = rot[cid]
            row = []
            for j in range(4):
                s = (j + r) % 4
                c2, s2 = self.alpha((cid, s))
                row.append((order[c2], (s2 - rot[c2]) % 4))
            sig.append(tuple(row))
        return tuple(sig)

    # -- serialization ----------------------------------------------------------

    def to_pd_text(self):
        parts = []
        if self.free_loops:
            parts.append(f"loops={self.free_loops}")
        for c in self.crossings:
            if c.id == self.frame:
                continue
            parts.append("X(%d,%d,%d,%d)" % c.slots)
        return ";".join(parts)

    def __repr__(self):
        return (f"LinkDiagram({self.n_crossings()} crossings, "
                f"{self.arc_count} arcs, {self.free_loops} loops)")

    def __eq__(self, other):
        return (isinstance(other, LinkDiagram)
                and self.canonical_code() == other.canonical_code())

    def __hash__(self):
        return hash(self.canonical_code())

    # -- construction helpers ----------------------------------------------------

    @classmethod
    def from_slot_lists(cls, slot_lists, free_loops=0, frame=None,
                        keep_ids=False):
        """Build from {crossing_id: [a,b,c,d]} with arbitrary hashable arc
        labels; arcs are renumbered densely and deterministically."""
        labels = sorted({a for slots in slot_lists.values() for a in slots},
                        key=lambda x: (str(type(x)), str(x)))
        remap = {a: i for i, a in enumerate(labels)}
        crossings = [Crossing(cid, tuple(remap[a] for a in slots))
                     for cid, slots in sorted(slot_lists.items())]
        return cls(crossings, len(labels), free_loops, frame)

    def renumbered(self):
        """Deterministically renumber arcs (by traversal of sorted crossings)
        and compact crossing ids to 0..n-1.  Frame id follows the map."""
        remap_arc = {}
        for c in self.crossings:
            for a in c.slots:
                if a not in remap_arc:
                    remap_arc[a] = len(remap_arc)
        remap_c = {c.id: i for i, c in enumerate(self.crossings)}
        crossings = [Crossing(remap_c[c.id], tuple(remap_arc[a] for a in c.slots))
                     for c in self.crossings]
        frame = remap_c[self.frame] if self.frame is not None else None
        return LinkDiagram(crossings, self.arc_count, self.free_loops, frame)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"loops\s*=\s*(\d+)|X\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)|;|(\S)")


def strip_comments(text):
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_pd(text):
    """Parse PD text: ``X(a,b,c,d)`` per crossing, semicolon separated,
    optional ``loops=N`` header, ``#`` comments, whitespace insignificant.

    Empty input is the empty diagram; ``loops=N`` alone is the trivial
    N-component link.
    """
    src = strip_comments(text)
    loops = 0
    slot_lists = {}
    n = 0
    for m in _TOKEN.finditer(src):
        if m.group(6):
            raise PDSyntaxError(f"unexpected character {m.group(6)!r}", m.start())
        if m.group(1) is not None:
            loops = int(m.group(1))
        elif m.group(2) is not None:
            slots = tuple(int(m.group(i)) for i in range(2, 6))
            slot_lists[n] = slots
            n += 1
    labels = sorted({a for slots in slot_lists.values() for a in slots})
    counts = {}
    for slots in slot_lists.values():
        for a in slots:
            counts[a] = counts.get(a, 0) + 1
    for a, k in sorted(counts.items()):
        if k != 2:
            raise DiagramError(f"arc {a} used {k} times (need exactly 2)")
    remap = {a: i for i, a in enumerate(labels)}
    crossings = [Crossing(cid, tuple(remap[a] for a in slots))
                 for cid, slots in slot_lists.items()]
    return LinkDiagram(crossings, len(labels), loops)


def empty_diagram():
    return LinkDiagram([], 0, 0)


def unknot_diagram(loops=1):
    return LinkDiagram([], 0, loops)


# ---------------------------------------------------------------------------
# Orientation and linking data
# ---------------------------------------------------------------------------

class Orientation:
    """A direction flag per link component, realized as a head-dart per arc.

    ``head[a]`` is the (crossing, slot) endpoint the arc flows into.
    Crossingless free loops need no data.
    """

    def __init__(self, diagram, flags=None):
        self.diagram = diagram
        comps = diagram.component_arcs()
        self.flags = {i: 1 for i in comps}
        if flags:
            for i, v in flags.items():
                if i in self.flags:
                    self.flags[i] = 1 if v >= 0 else -1
        self.head = {}
        for i, arcs in sorted(comps.items()):
            base = arcs[0]
            darts = diagram.arc_darts()[base]
            head = max(darts) if self.flags[i] > 0 else min(darts)
            self._propagate_from(base, head)

    def _propagate_from(self, base, head):
        d = self.diagram
        frame = d.frame
        self.head[base] = head
        # forward along the strand
        h = head
        while True:
            cid, s = h
            if cid == frame:
                break
            tail = (cid, (s + 2) % 4)
            b = d.crossing(cid).slots[(s + 2) % 4]
            if b in self.head:
                break
            darts = d.arc_darts()[b]
            bh = darts[1] if darts[0] == tail else darts[0]
            self.head[b] = bh
            h = bh
        # backward (reached only for open strands stopped by a frame)
        darts = d.arc_darts()[base]
        t = darts[0] if darts[1] == head else darts[1]
        while True:
            cid, s = t
            if cid == frame:
                break
            prev_head = (cid, (s + 2) % 4)
            b = d.crossing(cid).slots[(s + 2) % 4]
            if b in self.head:
                break
            self.head[b] = prev_head
            darts_b = d.arc_darts()[b]
            t = darts_b[1] if darts_b[0] == prev_head else darts_b[0]

    def reversed(self, component):
        flags = dict(self.flags)
        flags[component] = -flags.get(component, 1)
        return Orientation(self.diagram, flags)

    def enters_at(self, dart):
        """True if the strand flows into the crossing at this dart."""
        cid, s = dart
        a = self.diagram.crossing(cid).slots[s]
        return self.head[a] == dart


def crossing_sign(diagram, orientation, crossing):
    """+1 or -1 for an oriented crossing (self-crossing signs do not depend
    on the orientation)."""
    c = crossing if isinstance(crossing, Crossing) else diagram.crossing(crossing)
    under_entry = None
    for s in (0, 2):
        if orientation.enters_at((c.id, s)):
            under_entry = s
            break
    over_entry = None
    for s in (1, 3):
        if orientation.enters_at((c.id, s)):
            over_entry = s
            break
    if under_entry is None or over_entry is None:
        raise DiagramError(f"inconsistent orientation at crossing {c.id}")
    return 1 if (over_entry - under_entry) % 4 == 1 else -1


def writhe(diagram, orientation):
    return sum(crossing_sign(diagram, orientation, c)
               for c in diagram.real_crossings())


@dataclass
class LinkingData:
    """Enhanced linking matrix: off-diagonal lk(L_i, L_j), diagonal
    -lk(L_i, L - L_i).  Rows sum to zero."""

    matrix: tuple  # tuple of tuples, ints

    @property
    def size(self):
        return len(self.matrix)

    def mod2(self):
        return tuple(tuple(x % 2 for x in row) for row in self.matrix)

    def lk(self, i, j):
        return self.matrix[i][j]

    def row_sums(self):
        return [sum(row) for row in self.matrix]

    def __str__(self):
        return "[" + "; ".join(",".join(str(x) for x in row)
                               for row in self.matrix) + "]"


def linking_matrix(diagram, orientation=None):
    """Pairwise linking numbers (half the signed mixed-crossing count) with
    the enhanced diagonal.  Free loops are split components: zero rows."""
    if orientation is None:
        orientation = Orientation(diagram)
    n = diagram.n_components()
    comp = diagram.component_map()
    lk2 = [[0] * n for _ in range(n)]  # doubled linking numbers
    for c in diagram.real_crossings():
        i = comp[c.slots[0]]
        j = comp[c.slots[1]]
        if i == j:
            continue
        s = crossing_sign(diagram, orientation, c)
        lk2[i][j] += s
        lk2[j][i] += s
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                if lk2[i][j] % 2:
                    raise DiagramError("odd signed mixed-crossing sum")
                out[i][j] = lk2[i][j] // 2
    for i in range(n):
        out[i][i] = -sum(out[i][j] for j in range(n) if j != i)
    return LinkingData(tuple(tuple(row) for row in out))


def is_alternating(diagram):
    """True if along every strand the crossings alternate over/under."""
    d = diagram
    for a, darts in d.arc_darts().items():
        levels = []
        for cid, s in darts:
            if cid == d.frame:
                continue
            levels.append(s % 2)  # 0 = under, 1 = over
        if len(levels) == 2 and levels[0] == levels[1]:
            return False
    return True
