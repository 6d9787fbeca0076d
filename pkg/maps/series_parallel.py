"""
Series-parallel decomposition of bipolar orientations and its inverse.

A decomposition tree has single edges as leaves; a series node chains its parts
source-to-sink from bottom to top, a parallel node glues its parts at both poles,
listed from left to right.
"""

from dataclasses import dataclass

import networkx as nx

from maps.canonical import canonical_code
from maps.orientation import outer_start
from maps.plane_map import BipolarOrientation, PlaneMap, renumber


@dataclass(frozen=True)
class SPLeaf:
    edge: int


@dataclass(frozen=True)
class SPSeries:
    parts: tuple


@dataclass(frozen=True)
class SPParallel:
    parts: tuple


@dataclass(frozen=True)
class SPFailure:
    reason: str


def _left_to_right_positions(o):
    """Position of every outgoing dart among its vertex's outgoing darts, left to right."""
    plane = o.plane
    pos = {}
    for v, rot in enumerate(plane.rotations):
        if v == o.source:
            start = outer_start(o)
        else:
            start = next((h for i, h in enumerate(rot) if h > 0 and rot[i - 1] < 0), None)
            if start is None:
                continue
        outs = [h for h in plane.rotation_from(v, start) if h > 0]
        for i, h in enumerate(outs):
            pos[h] = i
    return pos


def _subgraph(plane, edges):
    g = nx.MultiGraph()
    for e in edges:
        g.add_edge(plane.tail(e), plane.head(e), key=e)
    return g


def _flatten(kind, parts):
    out = []
    for part in parts:
        if isinstance(part, kind):
            out.extend(part.parts)
        else:
            out.append(part)
    return kind(tuple(out))


def _decompose(o, edges, s, t, positions):
    plane = o.plane
    if len(edges) == 1:
        (e,) = edges
        if {plane.tail(e), plane.head(e)} == {s, t}:
            return SPLeaf(e)
        return SPFailure("edge {} does not join the poles {} and {}".format(e, s, t))

    g = _subgraph(plane, edges)
    if s not in g or t not in g:
        return SPFailure("piece does not contain both poles {} and {}".format(s, t))

    splits = []
    for v in nx.articulation_points(nx.Graph(g)):
        if v in (s, t):
            continue
        rest = g.copy()
        rest.remove_node(v)
        if nx.has_path(rest, s, t):
            continue
        comps = list(nx.connected_components(rest))
        if len(comps) != 2:
            return SPFailure("vertex {} cuts off a block holding neither pole".format(v))
        s_side = next(c for c in comps if s in c)
        splits.append((len(s_side), v, s_side))

    if splits:
        _, v, s_side = min(splits)
        lower = [e for e in edges if plane.tail(e) in s_side or plane.head(e) in s_side]
        upper = [e for e in edges if e not in set(lower)]
        parts = []
        for sub, (a, b) in ((lower, (s, v)), (upper, (v, t))):
            node = _decompose(o, sub, a, b, positions)
            if isinstance(node, SPFailure):
                return node
            parts.append(node)
        return _flatten(SPSeries, parts)

    inner = g.copy()
    inner.remove_nodes_from((s, t))
    groups = []
    for comp in nx.connected_components(inner):
        groups.append([e for e in edges if plane.tail(e) in comp or plane.head(e) in comp])
    for e in edges:
        if {plane.tail(e), plane.head(e)} == {s, t}:
            groups.append([e])
    if len(groups) < 2:
        return SPFailure("piece between {} and {} is neither a series nor a parallel composition".format(s, t))

    def leftmost(group):
        return min(positions[e] for e in group if plane.tail(e) == s)

    parts = []
    for group in sorted(groups, key=leftmost):
        node = _decompose(o, group, s, t, positions)
        if isinstance(node, SPFailure):
            return node
        parts.append(node)
    return _flatten(SPParallel, parts)


def sp_decompose(o):
    """Decomposition tree of the orientation, or SPFailure when it is not series-parallel."""
    edges = list(range(1, o.plane.edge_count + 1))
    return _decompose(o, edges, o.source, o.sink, _left_to_right_positions(o))


class _Composer:
    def __init__(self):
        self.rotations = {}
        self.next_vertex = 0

    def vertex(self):
        v = self.next_vertex
        self.next_vertex += 1
        return v

    def build(self, node):
        """Returns (source, sink, source darts left to right, sink darts right to left)."""
        if isinstance(node, SPLeaf):
            return self.vertex(), self.vertex(), [node.edge], [-node.edge]
        pieces = [self.build(part) for part in node.parts]
        if isinstance(node, SPSeries):
            s, _, src, _ = pieces[0]
            for (_, lower_t, _, lower_snk), (upper_s, _, upper_src, _) in zip(pieces, pieces[1:]):
                self.rotations[lower_t] = upper_src + lower_snk
                self.rotations[upper_s] = []
            _, t, _, snk = pieces[-1]
            return s, t, src, snk
        s, t = pieces[0][0], pieces[0][1]
        src, snk = [], []
        for ps, pt, psrc, psnk in pieces:
            src += psrc
            snk = psnk + snk
            if ps != s:
                self.rotations[ps] = []
                self.rotations[pt] = []
        return s, t, src, snk


def sp_compose(tree):
    """The bipolar orientation a decomposition tree describes."""
    composer = _Composer()
    s, t, src, snk = composer.build(tree)
    composer.rotations[s] = src
    composer.rotations[t] = snk
    raw = [composer.rotations.get(v, []) for v in range(composer.next_vertex)]
    rotations, outer, s, t = renumber(raw, src[0], s, t)
    return BipolarOrientation(PlaneMap(rotations, outer), s, t)


def recomposes(o, tree):
    return canonical_code(sp_compose(tree)) == canonical_code(o)


def format_tree(node):
    if isinstance(node, SPLeaf):
        return "e{}".format(node.edge)
    if isinstance(node, SPFailure):
        return "not series-parallel: " + node.reason
    name = "S" if isinstance(node, SPSeries) else "P"
    return "{}({})".format(name, ", ".join(format_tree(p) for p in node.parts))
