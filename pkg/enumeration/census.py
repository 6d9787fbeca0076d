"""
Exhaustive counts that the closed forms are checked against.
"""

from collections import Counter
from itertools import permutations

from config import settings
from config.formats import COUNTS_TSV_HEADER_V1
from enumeration.formulas import formula_cells
from gentree.generate import PERMUTATIONS, extended_label, generate
from perms.patterns import PATTERN_2413, PATTERN_3142, is_baxter, occurs
from perms.permutation import Permutation

# avoiding both gives the separable (series-parallel) family
SEPARABLE_PATTERNS = (PATTERN_2413, PATTERN_3142)


def census(n, which=PERMUTATIONS, max_n=None):
    """Joint distribution {(m, i, j, k, l): count} over level n of the chosen tree."""
    limit = settings.CENSUS_MAX_N if max_n is None else max_n
    settings.check_guard("census size", n, limit)
    table = Counter()
    for node in generate(n, which):
        i, j, m, k, l = extended_label(node.obj)
        table[(m, i, j, k, l)] += 1
    return table


def marginal(table):
    out = Counter()
    for (m, i, j, _, _), c in table.items():
        out[(m, i, j)] += c
    return out


def count_diff(n, max_n=None):
    """[(m, i, j, formula, brute)] for every cell where closed-form and exhaustive counts differ."""
    brute = marginal(census(n, PERMUTATIONS, max_n))
    formula = formula_cells(n)
    rows = []
    for key in sorted(set(brute) | set(formula)):
        if brute.get(key, 0) != formula.get(key, 0):
            rows.append(key + (formula.get(key, 0), brute.get(key, 0)))
    return rows


def census_rows(n, table):
    return [(n,) + key + (c,) for key, c in sorted(table.items())]


def formula_rows(n):
    return [(n, m, i, j, "*", "*", c) for (m, i, j), c in sorted(formula_cells(n).items())]


def format_tsv(rows):
    lines = [COUNTS_TSV_HEADER_V1]
    lines.extend("\t".join(str(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


def count_avoiders(n, patterns, max_n=None):
    """Permutations of size n avoiding every pattern in `patterns`, by exhaustive scan of S_n."""
    limit = settings.CENSUS_MAX_N if max_n is None else max_n
    settings.check_guard("permutation size", n, limit)
    count = 0
    for values in permutations(range(1, n + 1)):
        p = Permutation(values)
        if not any(occurs(pattern, p) for pattern in patterns):
            count += 1
    return count


def count_avoiders_in_tree(n, patterns):
    """Same count through the permutation tree; avoidance is inherited by parents, so subtrees are pruned."""
    def keep(p):
        return not any(occurs(pattern, p) for pattern in patterns)

    return sum(1 for _ in generate(n, PERMUTATIONS, keep=keep))


def _matchings(points):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for idx, partner in enumerate(rest):
        for tail in _matchings(rest[:idx] + rest[idx + 1:]):
            yield [(first, partner)] + tail


def count_ffp_baxter_involutions(n, max_n=None):
    """Fixed-point-free Baxter involutions of length 2n, over all perfect matchings."""
    limit = settings.CENSUS_MAX_N if max_n is None else max_n
    settings.check_guard("involution length", 2 * n, 2 * limit)
    count = 0
    for matching in _matchings(list(range(1, 2 * n + 1))):
        values = [0] * (2 * n)
        for a, b in matching:
            values[a - 1] = b
            values[b - 1] = a
        if is_baxter(Permutation(tuple(values))):
            count += 1
    return count
