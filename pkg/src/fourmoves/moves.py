"""Local rewriting of link diagrams: Reidemeister moves R1/R2/R3 and the
unoriented n-move family (n = 4 primary), with site enumeration, surgery,
inverse computation and certificate replay.

Sites are addressed by darts (crossing, slot), which are stable across a
move for all surviving crossings; arcs are renumbered deterministically
after every application.  Every ``apply`` returns the new diagram together
with the move that undoes it, sited in the new diagram's coordinates.

Planarity of every surgery is asserted with the Euler check; where a local
gluing has a geometric choice (which face a kink lands in, the relative
orientation of an R2 poke), candidates are constructed and the planar one
matching the requested site is selected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .diagram import (Crossing, DiagramError, LinkDiagram, parse_pd)


class MoveError(ValueError):
    """Invalid site or inapplicable move."""


# ---------------------------------------------------------------------------
# Move and site model
# ---------------------------------------------------------------------------

R1_ADD = "R1_add"
R1_REMOVE = "R1_remove"
R2_ADD = "R2_add"
R2_REMOVE = "R2_remove"
R3 = "R3"
NMOVE_ADD = "NMoveAdd"
NMOVE_REMOVE = "NMoveRemove"

KINDS = (R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3, NMOVE_ADD, NMOVE_REMOVE)


@dataclass(frozen=True)
class MoveSite:
    """Darts select arc-sides (additions, R3 slide arc); crossing-id lists
    select removal patterns.  ``loop`` marks a kink thrown onto a free loop.
    """

    darts: tuple = ()
    crossings: tuple = ()
    loop: bool = False

    def to_json(self, diagram=None):
        out = {}
        if self.darts:
            out["arcs"] = [[c, s] for (c, s) in self.darts]
            if diagram is not None:
                fmap = diagram.face_of_dart()
                out["face"] = fmap[self.darts[0]]
        if self.crossings:
            out["crossings"] = list(self.crossings)
        if self.loop:
            out["loop"] = True
        return out

    @classmethod
    def from_json(cls, data):
        return cls(darts=tuple((c, s) for c, s in data.get("arcs", [])),
                   crossings=tuple(data.get("crossings", [])),
                   loop=bool(data.get("loop", False)))


@dataclass(frozen=True)
class Move:
    kind: str
    site: MoveSite
    n: int = 0           # n-move order
    sign: int = 0        # +1/-1 twist handedness (NMoveAdd, forced R1_add)

    def to_json(self, diagram=None):
        out = {"kind": self.kind, "site": self.site.to_json(diagram)}
        if self.n:
            out["n"] = self.n
        if self.sign:
            out["sign"] = self.sign
        return out

    @classmethod
    def from_json(cls, data):
        return cls(kind=data["kind"], site=MoveSite.from_json(data["site"]),
                   n=data.get("n", 0), sign=data.get("sign", 0))


@dataclass
class Applied:
    """Result of one application: the new diagram plus the inverse move
    (valid in the new diagram) and bookkeeping for orientation transport."""

    diagram: LinkDiagram
    inverse: Move
    new_crossings: tuple = ()


# ---------------------------------------------------------------------------
# Mutable surgery scratchpad
# ---------------------------------------------------------------------------

class _Surgeon:
    """Mutable view of a diagram for local rewiring.

    Arcs are arbitrary hashable labels while under surgery; ``finish``
    renumbers densely and validates (including the Euler check).
    """

    def __init__(self, diagram):
        self.slots = {c.id: list(c.slots) for c in diagram.crossings}
        self.free_loops = diagram.free_loops
        self.frame = diagram.frame
        self.next_id = max(self.slots, default=-1) + 1
        self.next_arc = ("n", 0)
        self.counter = 0

    def fresh_arc(self):
        self.counter += 1
        return ("new", self.counter)

    def add_crossing(self, slots):
        cid = self.next_id
        self.next_id += 1
        self.slots[cid] = list(slots)
        return cid

    def remove_crossing(self, cid):
        del self.slots[cid]

    def darts_of(self, arc):
        out = []
        for cid, slots in self.slots.items():
            for s, a in enumerate(slots):
                if a == arc:
                    out.append((cid, s))
        return out

    def set_arc(self, dart, arc):
        cid, s = dart
        self.slots[cid][s] = arc

    def arc_at(self, dart):
        cid, s = dart
        return self.slots[cid][s]

    def splice(self, arc1, arc2):
        """Merge two arcs that were joined end to end by removed crossings.
        Returns the surviving label, or None if a free loop closed up."""
        if arc1 == arc2:
            d = self.darts_of(arc1)
            if not d:
                self.free_loops += 1
                return None
            return arc1
        for dart in self.darts_of(arc2):
            self.set_arc(dart, arc1)
        return arc1

    def finish(self, inverse, new_crossings=()):
        labels = []
        seen = set()
        for cid in sorted(self.slots):
            for a in self.slots[cid]:
                if a not in seen:
                    seen.add(a)
                    labels.append(a)
        remap = {a: i for i, a in enumerate(labels)}
        crossings = [Crossing(cid, tuple(remap[a] for a in slots))
                     for cid, slots in sorted(self.slots.items())]
        diag = LinkDiagram(crossings, len(labels), self.free_loops, self.frame)
        diag.faces()  # Euler assertion
        return Applied(diag, inverse, tuple(new_crossings))


# ---------------------------------------------------------------------------
# Pattern recognition helpers
# ---------------------------------------------------------------------------

def kink_pattern(diagram, cid):
    """If crossing ``cid`` is a removable kink, return (loop_arc, through),
    else None.  A kink's loop arc occupies two adjacent slots of the same
    crossing."""
    c = diagram.crossing(cid)
    for s in range(4):
        a = c.slots[s]
        if c.slots[(s + 1) % 4] == a:
            return a, (c.slots[(s + 2) % 4], c.slots[(s + 3) % 4])
    return None


def kink_sign(diagram, cid):
    """Sign of a kink crossing: +1 when the loop arc runs from the outgoing
    under slot to the incoming over slot in ccw order (matches the writhe
    contribution, orientation-free)."""
    c = diagram.crossing(cid)
    for s in range(4):
        if c.slots[s] == c.slots[(s + 1) % 4]:
            # loop occupies slots s, s+1 in ccw order
            return 1 if s % 2 == 0 else -1
    raise MoveError(f"crossing {cid} is not a kink")


def bigon_between(diagram, c1, c2):
    """Arcs shared by two crossings that bound a bigon face, or None."""
    for f in diagram.faces():
        if len(f) != 2:
            continue
        cids = {f[0][0], f[1][0]}
        if cids == {c1, c2}:
            return tuple(diagram.crossing(c)Slots if False else
                         diagram.crossing(cid).slots[s] for (cid, s) in f)
    return None


def _shared_arcs(diagram, c1, c2):
    s1 = set(diagram.crossing(c1).slots)
    s2 = set(diagram.crossing(c2).slots)
    return sorted(s1 & s2)


def pair_kind(diagram, c1, c2):
    """Classify a crossing pair sharing a bigon: 'r2' when one strand is
    over at both crossings (opposite signs), 'twist' when the strands
    alternate (equal signs), else None."""
    shared = _shared_arcs(diagram, c1, c2)
    if len(shared) < 2:
        return None
    # need two shared arcs bounding a common bigon face
    bigon = None
    for f in diagram.faces():
        if len(f) == 2 and {f[0][0], f[1][0]} == {c1, c2}:
            bigon = f
            break
    if bigon is None:
        return None
    a = diagram.crossing(c1)
    b = diagram.crossing(c2)
    arcs = [diagram.crossing(cid).slots[s] for cid, s in bigon]
    # parity of each shared arc's slot at each crossing: odd = over
    kinds = []
    for arc in arcs:
        pa = [s % 2 for s in range(4) if a.slots[s] == arc]
        pb = [s % 2 for s in range(4) if b.slots[s] == arc]
        kinds.append((set(pa), set(pb)))
    # 'r2': one arc over at both crossings and the other under at both
    overover = any(ka == {1} and kb == {1} for ka, kb in kinds)
    underunder = any(ka == {0} and kb == {0} for ka, kb in kinds)
    if overover and underunder:
        return "r2"
    mixed = all(ka != kb or len(ka) > 1 for ka, kb in kinds)
    if mixed:
        return "twist"
    return None
