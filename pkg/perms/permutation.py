"""
Permutations in one-line notation, their symmetries, and the standard statistics.
Positions and values are 1-based on every public surface.
"""

from dataclasses import dataclass


class PermutationError(ValueError):
    """Raised for malformed permutations or statistics requested on an empty one."""


@dataclass(frozen=True)
class Permutation:
    """
    One-line notation of a bijection on {1..n}. values[i-1] is pi(i).
    """

    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        seen = {}
        for pos, v in enumerate(values, start=1):
            if v < 1 or v > n:
                raise PermutationError("value {} at position {} is out of range 1..{}".format(v, pos, n))
            if v in seen:
                raise PermutationError(
                    "value {} at position {} duplicates position {}".format(v, pos, seen[v])
                )
            seen[v] = pos

    @property
    def n(self):
        return len(self.values)

    def __call__(self, i):
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return " ".join(str(v) for v in self.values)

    def points(self):
        """The diagram: points (i, pi(i)) in increasing abscissa."""
        return [(i, v) for i, v in enumerate(self.values, start=1)]


def parse_permutation(text):
    """
    Parse one-line notation: decimal values separated by spaces, e.g. "5 3 4 9 7 8 10 6 1 2".
    Rejects non-integers, duplicates and out-of-range values, naming the position.
    """
    tokens = text.split()
    values = []
    for pos, token in enumerate(tokens, start=1):
        try:
            values.append(int(token))
        except ValueError:
            raise PermutationError("position {}: {!r} is not an integer".format(pos, token))
    return Permutation(tuple(values))


def identity(n):
    return Permutation(tuple(range(1, n + 1)))


def inverse(p):
    """Reflection of the diagram in the main diagonal."""
    out = [0] * p.n
    for i, v in enumerate(p.values, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


def reverse(p):
    """rev(p)(i) = p(n+1-i)."""
    return Permutation(tuple(reversed(p.values)))


def rotate_cw(p):
    """
    Clockwise quarter-turn of the diagram: point (x, y) goes to (y, n+1-x).
    Equal to inverse(reverse(p)).
    """
    n = p.n
    out = [0] * n
    for x, y in enumerate(p.values, start=1):
        out[y - 1] = n + 1 - x
    return Permutation(tuple(out))


def compose(p, q):
    """(p o q)(i) = p(q(i))."""
    if p.n != q.n:
        raise PermutationError("cannot compose sizes {} and {}".format(p.n, q.n))
    return Permutation(tuple(p(q(i)) for i in range(1, q.n + 1)))


def is_fixed_point_free_involution(p):
    for i, v in enumerate(p.values, start=1):
        if v == i or p(v) != i:
            return False
    return True


def lr_maxima_positions(values):
    """0-based positions of left-to-right maxima, left to right."""
    positions = []
    best = 0
    for pos, v in enumerate(values):
        if v > best:
            positions.append(pos)
            best = v
    return positions


def rl_maxima_positions(values):
    """0-based positions of right-to-left maxima, counted from the right."""
    positions = []
    best = 0
    for pos in range(len(values) - 1, -1, -1):
        if values[pos] > best:
            positions.append(pos)
            best = values[pos]
    return positions


def _count_lr_minima(values):
    count = 0
    best = None
    for v in values:
        if best is None or v < best:
            count += 1
            best = v
    return count


def statistics(p):
    """
    Returns a dict of the standard statistics of p: lr_max, rl_max, lr_min,
    rl_min, ascents, descents (ascents + descents = n - 1).
    """
    if p.n == 0:
        raise PermutationError("statistics are undefined for the empty permutation")
    values = p.values
    ascents = sum(1 for a in range(p.n - 1) if values[a] < values[a + 1])
    return {
        "lr_max": len(lr_maxima_positions(values)),
        "rl_max": len(rl_maxima_positions(values)),
        "lr_min": _count_lr_minima(values),
        "rl_min": _count_lr_minima(tuple(reversed(values))),
        "ascents": ascents,
        "descents": p.n - 1 - ascents,
    }
