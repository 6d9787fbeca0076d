"""
Forward map: Baxter permutation -> plane bipolar orientation.

Black points are erased, fusing each one's in- and out-segment into a single
white-to-white edge; edge i is the one carrying b_i. Rotations come from the
exact clockwise order of segments around each white point.
"""

from dataclasses import dataclass

from bijection.geometry import doubled_signed_area, sort_clockwise
from bijection.hasse import DiagramInvariantError, build_phi
from maps.orientation import with_outer_at_source
from maps.plane_map import BipolarOrientation, PlaneMap


@dataclass(frozen=True)
class EdgeCorrespondence:
    """Pairs ((x, y), edge): the point (x, y) of the permutation diagram and its edge."""

    pairs: tuple

    def edge_of(self, x):
        for (px, _), e in self.pairs:
            if px == x:
                return e
        raise KeyError(x)

    def point_of(self, edge):
        for point, e in self.pairs:
            if e == edge:
                return point
        raise KeyError(edge)


def edge_labels(corr):
    """Every edge labelled by the ordinate of its point."""
    return {e: y for (_, y), e in corr.pairs}


def correspondence_notes(corr):
    return ["point {} {} edge {}".format(x, y, e) for (x, y), e in corr.pairs]


def _outer_orbit(plane, diagram_points, black_at):
    orbits = plane.faces
    if len(orbits) == 1:
        return orbits[0]
    negative = []
    for orbit in orbits:
        polygon = []
        for h in orbit:
            polygon.append(diagram_points[plane.vertex_of(h)])
            polygon.append(black_at[abs(h)])
        if doubled_signed_area(polygon) < 0:
            negative.append(orbit)
    if len(negative) != 1:
        raise DiagramInvariantError("expected one clockwise face, found {}".format(len(negative)))
    return negative[0]


def phi(p):
    """Returns (orientation, correspondence) for a Baxter permutation p with n >= 1."""
    d = build_phi(p)
    whites = d.whites()
    vertex = {k: idx for idx, k in enumerate(whites)}

    neighbours = {k: [] for k in whites}
    black_at = {}
    for u, v in d.edges:
        if u in vertex:
            neighbours[u].append((d.labels[v], d.points[v]))
            black_at[d.labels[v]] = d.points[v]
        else:
            neighbours[v].append((-d.labels[u], d.points[u]))

    rotations = []
    for k in whites:
        darts = neighbours[k]
        order = sort_clockwise(d.points[k], [pt for _, pt in darts])
        rotations.append(tuple(darts[i][0] for i in order))

    white_points = [d.points[k] for k in whites]
    plane = PlaneMap(tuple(rotations), 1)
    outer = _outer_orbit(plane, white_points, black_at)[0]
    o = BipolarOrientation(PlaneMap(plane.rotations, outer), 0, len(whites) - 1)
    corr = EdgeCorrespondence(tuple(((i, p(i)), i) for i in range(1, p.n + 1)))
    return with_outer_at_source(o), corr
