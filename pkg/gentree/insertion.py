"""
Insertions of a new maximum into Baxter permutations, and their inverse.

L_k puts n+1 just before the k-th left-to-right maximum (counted from the left);
R_k puts it just after the k-th right-to-left maximum (counted from the right).
"""

import re

from config.formats import INSERTION_SEQ_PATTERN_V1
from perms.permutation import Permutation, lr_maxima_positions, rl_maxima_positions

LEFT = "L"
RIGHT = "R"

_STEP = re.compile(INSERTION_SEQ_PATTERN_V1)


class TreeError(ValueError):
    """Raised for an insertion index out of range or a parent request below the root."""


def parse_insertion_seq(text):
    steps = []
    for pos, token in enumerate(text.split(), start=1):
        match = _STEP.match(token)
        if not match:
            raise TreeError("step {}: {!r} is not of the form L<k> or R<k>".format(pos, token))
        steps.append((match.group(1), int(match.group(2))))
    return tuple(steps)


def format_insertion_seq(steps):
    return " ".join("{}{}".format(side, k) for side, k in steps)


def check_step(side, k, i, j):
    if side not in (LEFT, RIGHT):
        raise TreeError("side must be L or R, got {!r}".format(side))
    bound = i if side == LEFT else j
    if not 1 <= k <= bound:
        raise TreeError("{}{} out of range: k must lie in 1..{}".format(side, k, bound))


def perm_insert(p, side, k):
    values = list(p.values)
    lr = lr_maxima_positions(values)
    rl = rl_maxima_positions(values)
    check_step(side, k, len(lr), len(rl))
    at = lr[k - 1] if side == LEFT else rl[k - 1] + 1
    values.insert(at, p.n + 1)
    return Permutation(tuple(values))


def perm_parent(p):
    if p.n < 2:
        raise TreeError("the root permutation 1 has no parent")
    return Permutation(tuple(v for v in p.values if v != p.n))


def perm_step(p):
    """The unique (side, k) with perm_insert(perm_parent(p), side, k) == p."""
    sigma = perm_parent(p)
    at = p.values.index(p.n)
    if at < sigma.n:
        lr = lr_maxima_positions(sigma.values)
        if at in lr:
            return (LEFT, lr.index(at) + 1)
    rl = rl_maxima_positions(sigma.values)
    if at - 1 not in rl:
        raise TreeError("{} is not reached from {} by any insertion".format(p, sigma))
    return (RIGHT, rl.index(at - 1) + 1)


def insertion_sequence(p):
    """Steps leading from the permutation 1 to p."""
    if p.n < 1:
        raise TreeError("the empty permutation is not in the tree")
    steps = []
    while p.n > 1:
        steps.append(perm_step(p))
        p = perm_parent(p)
    return tuple(reversed(steps))


def replay_permutation(steps):
    p = Permutation((1,))
    for side, k in steps:
        p = perm_insert(p, side, k)
    return p


def swap_sides(steps):
    return tuple((RIGHT if side == LEFT else LEFT, k) for side, k in steps)
