"""
Embedded multigraphs as rotation systems.

Conventions (used everywhere in the repo):
- Edges are numbered 1..E. The signed half-edge +e sits at the tail of e, -e at its head;
  the twin of a half-edge h is -h.
- Each vertex lists its half-edges in CLOCKWISE order, clockwise as drawn with the y-axis up.
- A half-edge h is also a dart leaving its vertex. The face on the left of dart h is
  walked by h -> cw(twin(h)); these left-face orbits are the faces of the map.
- `outer` is any dart whose left face is the outer face.
"""

from dataclasses import dataclass
from functools import cached_property


class MapError(ValueError):
    """Raised when a rotation system is structurally malformed."""


@dataclass(frozen=True)
class PlaneMap:
    rotations: tuple
    outer: int

    def __post_init__(self):
        object.__setattr__(self, "rotations", tuple(tuple(int(h) for h in rot) for rot in self.rotations))
        object.__setattr__(self, "outer", int(self.outer))

    @property
    def vertex_count(self):
        return len(self.rotations)

    @cached_property
    def edge_count(self):
        return sum(len(rot) for rot in self.rotations) // 2

    @cached_property
    def _where(self):
        where = {}
        for v, rot in enumerate(self.rotations):
            for idx, h in enumerate(rot):
                if h in where:
                    raise MapError("half-edge {} appears twice".format(h))
                where[h] = (v, idx)
        return where

    def half_edges(self):
        """All half-edges in the fixed order +1, -1, +2, -2, ..."""
        out = []
        for e in range(1, self.edge_count + 1):
            out.extend((e, -e))
        return out

    def vertex_of(self, h):
        return self._where[h][0]

    def tail(self, e):
        return self._where[e][0]

    def head(self, e):
        return self._where[-e][0]

    def degree(self, v):
        return len(self.rotations[v])

    def cw(self, h):
        v, idx = self._where[h]
        rot = self.rotations[v]
        return rot[(idx + 1) % len(rot)]

    def ccw(self, h):
        v, idx = self._where[h]
        rot = self.rotations[v]
        return rot[(idx - 1) % len(rot)]

    def face_next(self, h):
        """Next dart along the face on the left of h."""
        return self.cw(-h)

    @cached_property
    def faces(self):
        """Left-face orbits, as tuples of darts, discovered in half_edges() order."""
        seen = set()
        orbits = []
        for start in self.half_edges():
            if start in seen:
                continue
            orbit = []
            h = start
            while h not in seen:
                seen.add(h)
                orbit.append(h)
                h = self.face_next(h)
            orbits.append(tuple(orbit))
        return tuple(orbits)

    @cached_property
    def face_of(self):
        index = {}
        for f, orbit in enumerate(self.faces):
            for h in orbit:
                index[h] = f
        return index

    @property
    def outer_face(self):
        return self.face_of[self.outer]

    def rotation_from(self, v, start):
        """Rotation of v read clockwise, beginning at half-edge `start`."""
        rot = self.rotations[v]
        idx = self._where[start][1]
        return rot[idx:] + rot[:idx]

    def euler_characteristic(self):
        return self.vertex_count - self.edge_count + len(self.faces)

    def edge_list(self):
        """(edge, tail, head) triples for every edge."""
        return [(e, self.tail(e), self.head(e)) for e in range(1, self.edge_count + 1)]


@dataclass(frozen=True)
class BipolarMap:
    """A plane map with two distinguished vertices on its outer face (edge signs carry no meaning)."""

    plane: PlaneMap
    source: int
    sink: int


@dataclass(frozen=True)
class BipolarOrientation(BipolarMap):
    """A bipolar map whose edge signs are the edge directions (+e at the tail)."""

    def underlying(self):
        return BipolarMap(self.plane, self.source, self.sink)


@dataclass(frozen=True)
class RootedMap:
    """Plane map with a root half-edge +r at the root's tail; the outer face lies on the root's right."""

    plane: PlaneMap
    root: int

    @property
    def source(self):
        return self.plane.tail(self.root)

    @property
    def sink(self):
        return self.plane.head(self.root)


def one_edge():
    """The one-edge orientation s -> t, the root of the orientation tree."""
    return BipolarOrientation(PlaneMap(((1,), (-1,)), 1), 0, 1)


def renumber(rotations, outer, source=None, sink=None):
    """
    Compact vertex ids (dropping empty rotation lists) and edge ids (keeping their
    relative order and signs). Returns (rotations, outer, source, sink).
    """
    kept = [v for v, rot in enumerate(rotations) if rot]
    vmap = {v: i for i, v in enumerate(kept)}
    edges = sorted({abs(h) for rot in rotations for h in rot})
    emap = {e: i for i, e in enumerate(edges, start=1)}

    def relabel(h):
        return emap[abs(h)] if h > 0 else -emap[abs(h)]

    new_rot = tuple(tuple(relabel(h) for h in rotations[v]) for v in kept)
    return (
        new_rot,
        relabel(outer),
        vmap.get(source) if source is not None else None,
        vmap.get(sink) if sink is not None else None,
    )


def flip_edges(plane, edges):
    """Same embedding with the direction of every edge in `edges` reversed."""
    flipped = set(edges)

    def relabel(h):
        return -h if abs(h) in flipped else h

    rotations = tuple(tuple(relabel(h) for h in rot) for rot in plane.rotations)
    return PlaneMap(rotations, relabel(plane.outer))
