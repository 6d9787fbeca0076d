"""
Exact integer predicates on the doubled grid. No floating point.
"""

from functools import cmp_to_key


def cross(o, a, b):
    """z-component of (a - o) x (b - o); > 0 means o, a, b turn counterclockwise."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _half(d):
    # 0 for directions from north (inclusive) clockwise to south (exclusive), else 1
    return 0 if d[0] > 0 or (d[0] == 0 and d[1] > 0) else 1


def _compare_clockwise(a, b):
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    if c < 0:
        return -1
    if c > 0:
        return 1
    return 0


def sort_clockwise(origin, targets):
    """Indices of `targets` ordered clockwise around `origin`, starting from north."""
    dirs = [(t[0] - origin[0], t[1] - origin[1]) for t in targets]
    key = cmp_to_key(_compare_clockwise)
    return sorted(range(len(targets)), key=lambda i: key(dirs[i]))


def _on_segment(p, q, r):
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_cross(p1, p2, q1, q2):
    """True iff the closed segments meet anywhere other than a shared endpoint."""
    shared = {p1, p2} & {q1, q2}
    if shared:
        s = next(iter(shared))
        other_p = p2 if p1 == s else p1
        other_q = q2 if q1 == s else q1
        if cross(s, other_p, other_q) != 0:
            return False
        # collinear from a common endpoint: they overlap iff they leave it the same way
        dot = (other_p[0] - s[0]) * (other_q[0] - s[0]) + (other_p[1] - s[1]) * (other_q[1] - s[1])
        return dot > 0
    d1 = cross(q1, q2, p1)
    d2 = cross(q1, q2, p2)
    d3 = cross(p1, p2, q1)
    d4 = cross(p1, p2, q2)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    if d1 == 0 and _on_segment(q1, q2, p1):
        return True
    if d2 == 0 and _on_segment(q1, q2, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, q1):
        return True
    if d4 == 0 and _on_segment(p1, p2, q2):
        return True
    return False


def doubled_signed_area(polygon):
    """Twice the signed area (shoelace); negative for clockwise polygons."""
    total = 0
    for i, (x, y) in enumerate(polygon):
        nx_, ny_ = polygon[(i + 1) % len(polygon)]
        total += x * ny_ - nx_ * y
    return total
