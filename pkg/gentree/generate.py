"""
Depth-first generation of the permutation tree and the orientation tree, labels, and a
seeded random walk down the permutation tree.
"""

from dataclasses import dataclass

import numpy as np

from gentree.insertion import LEFT, RIGHT, perm_insert
from gentree.orient_tree import orient_insert, orientation_label
from maps.orientation import borders, pole_degrees
from maps.plane_map import BipolarOrientation, one_edge
from perms.permutation import Permutation, lr_maxima_positions, rl_maxima_positions, statistics

PERMUTATIONS = "b"
ORIENTATIONS = "o"


@dataclass(frozen=True)
class GenNode:
    obj: object
    label: tuple
    steps: tuple


def label_pair(obj):
    """(i, j): lr-maxima and rl-maxima of a permutation, left outer degree and sink degree of an orientation."""
    if isinstance(obj, BipolarOrientation):
        return orientation_label(obj)
    return (len(lr_maxima_positions(obj.values)), len(rl_maxima_positions(obj.values)))


def extended_label(obj):
    """(i, j, m, k, l) with m ascents / non-polar vertices, k lr-minima / source degree, l rl-minima / right outer degree."""
    if isinstance(obj, BipolarOrientation):
        b = borders(obj)
        s_deg, t_deg = pole_degrees(obj)
        return (b["left_outer_degree"], t_deg, obj.plane.vertex_count - 2, s_deg, b["right_outer_degree"])
    st = statistics(obj)
    return (st["lr_max"], st["rl_max"], st["ascents"], st["lr_min"], st["rl_min"])


def child_steps(label):
    """Children order L_1..L_i, R_j..R_1."""
    i, j = label
    return [(LEFT, k) for k in range(1, i + 1)] + [(RIGHT, k) for k in range(j, 0, -1)]


def child_label(label, side, k):
    """Succession rule on (i, j)."""
    i, j = label
    return (k, j + 1) if side == LEFT else (i + 1, k)


def child_extended_label(label, side, k):
    i, j, m, lo, ro = label
    if side == LEFT:
        return (k, j + 1, m, lo + (1 if k == 1 else 0), ro)
    return (i + 1, k, m + 1, lo, ro + (1 if k == 1 else 0))


def root(which):
    return Permutation((1,)) if which == PERMUTATIONS else one_edge()


def insert(obj, side, k):
    if isinstance(obj, BipolarOrientation):
        return orient_insert(obj, side, k)
    return perm_insert(obj, side, k)


def children(node):
    for side, k in child_steps(node.label):
        obj = insert(node.obj, side, k)
        yield GenNode(obj, label_pair(obj), node.steps + ((side, k),))


def generate(n, which, keep=None):
    """
    Every node at level n of the chosen tree, depth first, children in rule order.
    `keep` prunes whole subtrees (use it for hereditary classes only).
    """
    if n < 1:
        return
    start = root(which)
    stack = [iter([GenNode(start, label_pair(start), ())])]
    while stack:
        node = next(stack[-1], None)
        if node is None:
            stack.pop()
            continue
        if keep is not None and not keep(node.obj):
            continue
        if len(node.steps) + 1 == n:
            yield node
        else:
            stack.append(children(node))


def random_baxter(n, rng=None):
    """Random walk of n-1 uniform child choices down the permutation tree."""
    rng = rng if rng is not None else np.random.default_rng()
    node = GenNode(root(PERMUTATIONS), (1, 1), ())
    for _ in range(n - 1):
        steps = child_steps(node.label)
        side, k = steps[int(rng.integers(len(steps)))]
        obj = perm_insert(node.obj, side, k)
        node = GenNode(obj, child_label(node.label, side, k), node.steps + ((side, k),))
    return node.obj
