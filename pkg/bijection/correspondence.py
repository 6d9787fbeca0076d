"""
Edge-level symmetry checks of the point <-> edge correspondence.
"""

from bijection.phi import edge_labels, phi
from maps.canonical import edge_matching
from maps.orientation import OrientationError, dual, mirror
from perms.permutation import inverse, reverse, rotate_cw


def correspondence_failures(p, corr, o=None):
    """
    Points whose edge does not follow the symmetries: (i, p(i)) of p must match
    mir(e) in Phi(p^-1), e* in Phi(rot(p)), and mir(e*) must carry the same
    ordinate label in Phi(rev(p)). Returns a list of messages.
    """
    if o is None:
        o, _ = phi(p)
    failures = []
    try:
        to_inverse = edge_matching(mirror(o), phi(inverse(p))[0])
        to_rotated = edge_matching(dual(o), phi(rotate_cw(p))[0])
        rev_o, rev_corr = phi(reverse(p))
        to_reversed = edge_matching(mirror(dual(o)), rev_o)
    except OrientationError as exc:
        return ["symmetric images are not isomorphic: {}".format(exc)]

    rev_labels = edge_labels(rev_corr)
    for (x, y), e in corr.pairs:
        if to_inverse[e] != y:
            failures.append("point ({}, {}): mirror edge is {} in the inverse image, expected {}".format(
                x, y, to_inverse[e], y))
        if to_rotated[e] != y:
            failures.append("point ({}, {}): dual edge is {} in the rotated image, expected {}".format(
                x, y, to_rotated[e], y))
        if rev_labels[to_reversed[e]] != y:
            failures.append("point ({}, {}): mirrored dual edge is labelled {} in the reversed image".format(
                x, y, rev_labels[to_reversed[e]]))
    return failures


def correspondence_check(p, corr, o=None):
    return not correspondence_failures(p, corr, o)
