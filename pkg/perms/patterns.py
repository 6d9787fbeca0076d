"""
Classical and barred pattern containment, and the Baxter predicate.
Containment is plain backtracking over subsequences; the patterns used here have length <= 5.
"""

from dataclasses import dataclass

from perms.permutation import Permutation, PermutationError


@dataclass(frozen=True)
class Pattern:
    """
    A pattern in one-line notation, optionally with one barred entry
    (barred_index is the 1-based position carrying the bar).
    """

    values: tuple
    barred_index: int = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        Permutation(self.values)  # validates
        if self.barred_index is not None:
            if not 1 <= self.barred_index <= len(self.values):
                raise PermutationError(
                    "barred index {} outside 1..{}".format(self.barred_index, len(self.values))
                )

    @property
    def reduced(self):
        """The pattern with the barred entry deleted and the rest renumbered."""
        if self.barred_index is None:
            return self
        rest = self.values[: self.barred_index - 1] + self.values[self.barred_index:]
        return Pattern(standardize(rest))

    def __str__(self):
        parts = []
        for pos, v in enumerate(self.values, start=1):
            parts.append("[{}]".format(v) if pos == self.barred_index else str(v))
        return "".join(parts)


def parse_pattern(text):
    """Parse "2413" or "25[3]14" (brackets mark the barred entry)."""
    values = []
    barred = None
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "[":
            end = text.index("]", i)
            values.append(int(text[i + 1:end]))
            barred = len(values)
            i = end + 1
            continue
        if ch.isdigit():
            values.append(int(ch))
        elif not ch.isspace():
            raise PermutationError("unexpected character {!r} in pattern {!r}".format(ch, text))
        i += 1
    return Pattern(tuple(values), barred)


PATTERN_2413 = Pattern((2, 4, 1, 3))
PATTERN_3142 = Pattern((3, 1, 4, 2))
BAXTER_BARRED_PATTERNS = (
    Pattern((2, 5, 3, 1, 4), 3),
    Pattern((4, 1, 3, 5, 2), 3),
)
# Hasse diagram of a point set has a crossing iff this barred pattern is contained
HASSE_CROSSING_PATTERN = Pattern((2, 1, 3, 5, 4), 3)


def standardize(seq):
    """Replace each entry by its rank, giving the order-isomorphic permutation of 1..k."""
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    ranks = [0] * len(seq)
    for rank, i in enumerate(order, start=1):
        ranks[i] = rank
    return tuple(ranks)


def occurrences(pattern, values):
    """
    Yield every increasing index tuple (0-based) whose subsequence of `values`
    is order-isomorphic to the pattern.
    """
    target = tuple(pattern.values) if isinstance(pattern, Pattern) else tuple(pattern)
    k = len(target)
    n = len(values)
    chosen = []

    def consistent(pos):
        # the new entry must compare to every chosen entry the way the pattern does
        t = len(chosen)
        v = values[pos]
        for s, prev in enumerate(chosen):
            if (values[prev] < v) != (target[s] < target[t]):
                return False
        return True

    def extend(start):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        remaining = k - len(chosen)
        for pos in range(start, n - remaining + 1):
            if consistent(pos):
                chosen.append(pos)
                yield from extend(pos + 1)
                chosen.pop()

    yield from extend(0)


def occurs(pattern, p):
    """True iff some subsequence of p is order-isomorphic to the (unbarred) pattern."""
    if pattern.barred_index is not None:
        raise PermutationError("occurs() takes a pattern without bar, got {}".format(pattern))
    return next(occurrences(pattern, tuple(p.values)), None) is not None


def _extends(pattern, values, occ):
    """Can the reduced occurrence `occ` be completed by an entry at the barred slot?"""
    b = pattern.barred_index
    lo = occ[b - 2] + 1 if b >= 2 else 0
    hi = occ[b - 1] if b - 1 < len(occ) else len(values)
    for pos in range(lo, hi):
        full = occ[: b - 1] + (pos,) + occ[b - 1:]
        if standardize([values[i] for i in full]) == pattern.values:
            return True
    return False


def avoids_barred(pattern, p):
    """
    True iff every occurrence of the bar-deleted pattern in p extends to an
    occurrence of the full pattern.
    """
    if pattern.barred_index is None:
        raise PermutationError("avoids_barred() needs a barred pattern, got {}".format(pattern))
    values = tuple(p.values)
    for occ in occurrences(pattern.reduced, values):
        if not _extends(pattern, values, occ):
            return False
    return True


def baxter_witness(p):
    """
    First triple (i, j, k), 1-based, i < j < k, with
    p(j+1) < p(i) < p(k) < p(j) or p(j) < p(k) < p(i) < p(j+1); None if p is Baxter.
    """
    v = p.values
    n = p.n
    for j in range(1, n):
        a, b = v[j - 1], v[j]
        lo, hi = min(a, b), max(a, b)
        if hi - lo < 3:
            continue
        for i in range(1, j):
            if not lo < v[i - 1] < hi:
                continue
            for k in range(j + 2, n + 1):
                if not lo < v[k - 1] < hi:
                    continue
                if a > b and v[j] < v[i - 1] < v[k - 1] < v[j - 1]:
                    return (i, j, k)
                if a < b and v[j - 1] < v[k - 1] < v[i - 1] < v[j]:
                    return (i, j, k)
    return None


def is_baxter(p):
    return baxter_witness(p) is None


def is_baxter_by_patterns(p):
    """Barred-pattern characterization; used as a cross-check of is_baxter."""
    return all(avoids_barred(pattern, p) for pattern in BAXTER_BARRED_PATTERNS)
