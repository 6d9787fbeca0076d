"""
The embedded Hasse diagram of a Baxter permutation on the doubled grid.

Black point b_i sits at (2i, 2p(i)). For every ascent a in 0..n (with p(0)=0 and
p(n+1)=n+1) a white point w_a sits at (2a+1, 2l_a+1), where l_a is the largest
value p(i), i <= a, below p(a+1). Edges are the covering pairs of the product
order on all points together, drawn as straight north-east segments.
"""

from dataclasses import dataclass

from bijection.geometry import segments_cross
from perms.patterns import HASSE_CROSSING_PATTERN, avoids_barred, baxter_witness
from perms.permutation import Permutation, PermutationError


class NotBaxterError(PermutationError):
    """Raised when a construction needs a Baxter permutation; carries the witnessing triple."""

    def __init__(self, p, triple):
        self.triple = triple
        super().__init__(
            "{} is not Baxter: i={}, j={}, k={} witness the forbidden pattern".format(p, *triple)
        )


class DiagramInvariantError(AssertionError):
    """A constructed diagram broke one of its invariants."""


BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class EmbeddedDiagram:
    """
    Points are listed in increasing abscissa. `labels` holds i for black b_i and
    a for white w_a; `edges` are (lower, upper) index pairs into `points`.
    """

    n: int
    points: tuple
    colors: tuple
    labels: tuple
    edges: tuple

    def whites(self):
        return [k for k, c in enumerate(self.colors) if c == WHITE]

    def blacks(self):
        return [k for k, c in enumerate(self.colors) if c == BLACK]


def ascent_whites(p):
    """(a, l_a) for every ascent a of 0 p(1) .. p(n) n+1."""
    ext = (0,) + tuple(p.values) + (p.n + 1,)
    out = []
    for a in range(0, p.n + 1):
        if ext[a] < ext[a + 1]:
            level = max(v for v in ext[: a + 1] if v < ext[a + 1])
            out.append((a, level))
    return out


def covers(points):
    """
    Covering pairs of the product order, for points with pairwise distinct coordinates
    listed by increasing abscissa. Scans each point's successors keeping the lowest
    ordinate seen above it.
    """
    pairs = []
    for u, (_, yu) in enumerate(points):
        frontier = None
        for v in range(u + 1, len(points)):
            yv = points[v][1]
            if yv <= yu:
                continue
            if frontier is None or yv < frontier:
                pairs.append((u, v))
                frontier = yv
    return pairs


def covers_naive(points):
    """Definition-literal covering relation; cubic, kept as an oracle."""
    def below(a, b):
        return a[0] < b[0] and a[1] < b[1]

    pairs = []
    for u, pu in enumerate(points):
        for v, pv in enumerate(points):
            if below(pu, pv) and not any(below(pu, pw) and below(pw, pv) for pw in points):
                pairs.append((u, v))
    return sorted(pairs)


def diagram_violations(d):
    violations = []
    xs = [x for x, _ in d.points]
    ys = [y for _, y in d.points]
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        violations.append("coordinates are not pairwise distinct")
    indeg = [0] * len(d.points)
    outdeg = [0] * len(d.points)
    for u, v in d.edges:
        if d.colors[u] == d.colors[v]:
            violations.append("edge {}->{} joins two {} points".format(d.labels[u], d.labels[v], d.colors[u]))
        pu, pv = d.points[u], d.points[v]
        if not (pu[0] < pv[0] and pu[1] < pv[1]):
            violations.append("edge {}->{} does not point north-east".format(d.labels[u], d.labels[v]))
        outdeg[u] += 1
        indeg[v] += 1
    for k in d.blacks():
        if indeg[k] != 1 or outdeg[k] != 1:
            violations.append("black b{} has in/out degree {}/{}".format(d.labels[k], indeg[k], outdeg[k]))
    if has_crossing(d):
        violations.append("two segments cross")
    return violations


def has_crossing(d):
    segs = [(d.points[u], d.points[v]) for u, v in d.edges]
    for a in range(len(segs)):
        for b in range(a + 1, len(segs)):
            if segments_cross(segs[a][0], segs[a][1], segs[b][0], segs[b][1]):
                return True
    return False


def point_set_permutation(d):
    """The combined point set read as a permutation (ordinate ranks in abscissa order)."""
    order = sorted(range(len(d.points)), key=lambda k: d.points[k][1])
    ranks = [0] * len(d.points)
    for r, k in enumerate(order, start=1):
        ranks[k] = r
    return Permutation(tuple(ranks))


def crossing_free_by_pattern(d):
    return avoids_barred(HASSE_CROSSING_PATTERN, point_set_permutation(d))


def point_diagram(p):
    """Straight-line Hasse diagram of the points of p alone, no white points; may cross."""
    points = tuple((i, v) for i, v in enumerate(p.values, start=1))
    return EmbeddedDiagram(
        n=p.n,
        points=points,
        colors=(BLACK,) * p.n,
        labels=tuple(range(1, p.n + 1)),
        edges=tuple(covers(points)),
    )


def build_phi(p):
    """The embedded diagram of a Baxter permutation, invariants checked."""
    if p.n < 1:
        raise PermutationError("the diagram needs n >= 1")
    triple = baxter_witness(p)
    if triple is not None:
        raise NotBaxterError(p, triple)

    entries = [((2 * i, 2 * v), BLACK, i) for i, v in enumerate(p.values, start=1)]
    entries += [((2 * a + 1, 2 * level + 1), WHITE, a) for a, level in ascent_whites(p)]
    entries.sort()
    points = tuple(e[0] for e in entries)
    d = EmbeddedDiagram(
        n=p.n,
        points=points,
        colors=tuple(e[1] for e in entries),
        labels=tuple(e[2] for e in entries),
        edges=tuple(covers(points)),
    )
    violations = diagram_violations(d)
    if violations:
        raise DiagramInvariantError("diagram of {}: {}".format(p, "; ".join(violations)))
    return d
