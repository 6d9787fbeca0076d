"""
Exhaustive and sampled property checks. Every suite returns
{"suite", "checked", "failure", "passed"} where failure is the first counterexample
(or None). Suites are traced with LangSmith when tracing is enabled.
"""

from itertools import permutations

import numpy as np
from langsmith import traceable

from bijection.correspondence import correspondence_failures
from bijection.hasse import build_phi, covers, covers_naive, crossing_free_by_pattern, has_crossing
from bijection.phi import correspondence_notes, phi
from bijection.psi import psi
from config import settings
from enumeration.census import (
    SEPARABLE_PATTERNS,
    census,
    count_avoiders,
    count_avoiders_in_tree,
    count_diff,
    count_ffp_baxter_involutions,
)
from enumeration.formulas import baxter_number, ffp_involution_count, schroder
from gentree.generate import (
    ORIENTATIONS,
    PERMUTATIONS,
    child_extended_label,
    child_label,
    children,
    extended_label,
    generate,
    label_pair,
    random_baxter,
)
from gentree.insertion import insertion_sequence, perm_parent, replay_permutation, swap_sides
from gentree.map_tree import map_parent
from gentree.orient_tree import baxter_to_orientation, orient_parent, orientation_sequence
from maps.canonical import canonical_code, rooted_code
from maps.map_format import format_map, parse_map
from maps.orientation import (
    borders,
    dual,
    faces,
    find_lops,
    find_rops,
    mirror,
    pole_degrees,
    reverse_all,
    validate,
    vertex_faces,
)
from maps.separability import enumerate_bipolar_orientations, is_separable
from maps.series_parallel import SPFailure, recomposes, sp_decompose
from maps.surgery import add_root_edge, remove_root_edge
from perms.patterns import PATTERN_2413, PATTERN_3142, is_baxter, is_baxter_by_patterns, occurs
from perms.permutation import Permutation, compose, identity, inverse, reverse, rotate_cw, statistics


class _Tally:
    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.failure = None

    def check(self, ok, message):
        """Counts one check; records the first failing message. Returns False once anything failed."""
        self.checked += 1
        if not ok and self.failure is None:
            self.failure = message
        return self.failure is None

    @property
    def failed(self):
        return self.failure is not None

    def result(self):
        return {"suite": self.name, "checked": self.checked, "failure": self.failure, "passed": self.failure is None}


def baxter_upto(n):
    for level in range(1, n + 1):
        for node in generate(level, PERMUTATIONS):
            yield node.obj


def _orientations_upto(n):
    for level in range(1, n + 1):
        for node in generate(level, ORIENTATIONS):
            yield node.obj


def _rng(seed):
    return np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)


@traceable(name="suite_perms", run_type="chain")
def perms_suite(n, seed=None, samples=None):
    tally = _Tally("perms")
    for size in range(0, min(n, settings.MAX_N) + 1):
        for values in permutations(range(1, size + 1)):
            p = Permutation(values)
            b = is_baxter(p)
            if not tally.check(b == is_baxter_by_patterns(p), "{}: barred-pattern characterization disagrees".format(p)):
                return tally.result()
            same = (is_baxter(reverse(p)), is_baxter(inverse(p)), is_baxter(rotate_cw(p)))
            tally.check(all(x == b for x in same), "{}: Baxter property not closed under symmetries".format(p))
            r = p
            for _ in range(4):
                r = rotate_cw(r)
            tally.check(r == p, "{}: four quarter-turns are not the identity".format(p))
            tally.check(inverse(inverse(p)) == p and reverse(reverse(p)) == p, "{}: inverse/reverse not involutive".format(p))
            tally.check(compose(p, inverse(p)) == identity(size), "{}: p o p^-1 is not the identity".format(p))
            tally.check(rotate_cw(p) == inverse(reverse(p)), "{}: rotation differs from inverse of reverse".format(p))
            if size >= 1:
                st, st_rev, st_inv = statistics(p), statistics(reverse(p)), statistics(inverse(p))
                tally.check(
                    st_rev["lr_max"] == st["rl_max"] and st["ascents"] + st["descents"] == size - 1,
                    "{}: statistics do not transform under reversal".format(p),
                )
                # inversion transposes the diagram: lr_max <-> rl_min, rl_max and lr_min fixed
                tally.check(
                    st_inv["lr_max"] == st["rl_min"]
                    and st_inv["rl_min"] == st["lr_max"]
                    and st_inv["rl_max"] == st["rl_max"]
                    and st_inv["lr_min"] == st["lr_min"],
                    "{}: statistics do not transform under inversion".format(p),
                )
            if not occurs(PATTERN_2413, p) and not occurs(PATTERN_3142, p):
                tally.check(b, "{}: avoids 2413 and 3142 but is not Baxter".format(p))
            if tally.failed:
                return tally.result()
    return tally.result()


@traceable(name="suite_roundtrip", run_type="chain")
def roundtrip_suite(n, seed=None, samples=None):
    tally = _Tally("roundtrip")
    for p in baxter_upto(n):
        o, corr = phi(p)
        violations = validate(o)
        tally.check(not violations, "{}: image does not validate: {}".format(p, violations))
        back, back_corr = psi(o)
        tally.check(back == p, "{}: psi(phi(p)) = {}".format(p, back))
        tally.check(set(back_corr.pairs) == set(corr.pairs), "{}: point/edge pairings of phi and psi differ".format(p))
        tally.check(all(corr.edge_of(x) == x and corr.point_of(x) == (x, p(x)) for x in range(1, p.n + 1)),
                    "{}: edge i does not carry the point at position i".format(p))
        if p.n <= 7:
            text = format_map(o, notes=correspondence_notes(corr))
            tally.check(str(psi(parse_map(text))[0]) == str(p), "{}: to-perm of the to-map text differs".format(p))
        if p.n <= 6:
            d = build_phi(p)
            tally.check(sorted(covers(d.points)) == covers_naive(d.points), "{}: cover scan differs from the definition".format(p))
            tally.check(crossing_free_by_pattern(d) == (not has_crossing(d)), "{}: crossing test and pattern oracle disagree".format(p))
        if tally.failed:
            return tally.result()

    rng = _rng(seed)
    count = settings.ROUNDTRIP_SAMPLES if samples is None else samples
    for _ in range(count):
        size = int(rng.integers(2, settings.SAMPLE_MAX_N + 1))
        p = random_baxter(size, rng)
        o, _ = phi(p)
        if not tally.check(psi(o)[0] == p, "{}: sampled round trip failed".format(p)):
            break
    return tally.result()


@traceable(name="suite_stats", run_type="chain")
def stats_suite(n, seed=None, samples=None):
    tally = _Tally("stats")
    for p in baxter_upto(n):
        o, _ = phi(p)
        st = statistics(p)
        b = borders(o)
        s_deg, t_deg = pole_degrees(o)
        plane = o.plane
        infos = faces(o)
        observed = {
            "edges": plane.edge_count,
            "non_polar": plane.vertex_count - 2,
            "left_outer_degree": b["left_outer_degree"],
            "right_outer_degree": b["right_outer_degree"],
            "sink_degree": t_deg,
            "source_degree": s_deg,
            "inner_faces": len(infos),
        }
        expected = {
            "edges": p.n,
            "non_polar": st["ascents"],
            "left_outer_degree": st["lr_max"],
            "right_outer_degree": st["rl_min"],
            "sink_degree": st["rl_max"],
            "source_degree": st["lr_min"],
            "inner_faces": st["descents"],
        }
        tally.check(observed == expected, "{}: observed {} expected {}".format(p, observed, expected))
        tally.check(len(infos) == plane.edge_count - plane.vertex_count + 1, "{}: face count breaks Euler".format(p))
        vf = vertex_faces(o)
        for info in infos:
            tally.check(all(vf[v]["left"] == info.face for v in info.right_vertices),
                        "{}: a right vertex of face {} does not see it on its left".format(p, info.face))
            tally.check(all(vf[v]["right"] == info.face for v in info.left_vertices),
                        "{}: a left vertex of face {} does not see it on its right".format(p, info.face))
        if tally.failed:
            break
    return tally.result()


@traceable(name="suite_symmetry", run_type="chain")
def symmetry_suite(n, seed=None, samples=None):
    tally = _Tally("symmetry")

    def check_perm(p):
        o, corr = phi(p)
        code_mir = canonical_code(mirror(o))
        tally.check(canonical_code(phi(inverse(p))[0]) == code_mir, "{}: phi(inverse) != mirror(phi)".format(p))
        tally.check(canonical_code(phi(reverse(p))[0]) == canonical_code(mirror(dual(o))),
                    "{}: phi(reverse) != mirror(dual(phi))".format(p))
        tally.check(canonical_code(phi(rotate_cw(p))[0]) == canonical_code(dual(o)),
                    "{}: phi(rotate) != dual(phi)".format(p))
        return o, corr

    for level in range(1, min(n, settings.MAX_N) + 1):
        seen = set()
        for node in generate(level, PERMUTATIONS):
            p = node.obj
            o, corr = check_perm(p)
            code = canonical_code(o)
            tally.check(code not in seen, "{}: image shares its code with another permutation".format(p))
            seen.add(code)
            if level <= 5:
                problems = correspondence_failures(p, corr, o)
                tally.check(not problems, "{}: {}".format(p, problems[:1]))
            if tally.failed:
                return tally.result()

    for o in _orientations_upto(min(n, 6)):
        code = canonical_code(o)
        tally.check(canonical_code(mirror(mirror(o))) == code, "mirror is not an involution")
        tally.check(canonical_code(reverse_all(reverse_all(o))) == code, "reverse_all is not an involution")
        tally.check(canonical_code(dual(dual(o))) == canonical_code(reverse_all(o)), "dual twice differs from reverse_all")
        tally.check(canonical_code(dual(dual(dual(dual(o))))) == code, "dual does not have order 4")
        tally.check(canonical_code(mirror(dual(mirror(dual(o))))) == code, "mirror o dual is not an involution")
        if tally.failed:
            return tally.result()

    rng = _rng(seed)
    count = settings.SYMMETRY_SAMPLES if samples is None else samples
    for _ in range(count):
        check_perm(random_baxter(10, rng))
        if tally.failed:
            break
    return tally.result()


@traceable(name="suite_lambda", run_type="chain")
def lambda_suite(n, seed=None, samples=None):
    tally = _Tally("lambda")
    for p in baxter_upto(n):
        seq = insertion_sequence(p)
        lam = baxter_to_orientation(p)
        tally.check(canonical_code(lam) == canonical_code(phi(p)[0]), "{}: replayed orientation differs from phi".format(p))
        tally.check(replay_permutation(seq) == p, "{}: insertion sequence does not replay".format(p))
        tally.check(orientation_sequence(lam) == seq, "{}: orientation tree path differs".format(p))
        tally.check(insertion_sequence(reverse(p)) == swap_sides(seq), "{}: reversal does not swap L and R".format(p))
        tally.check(canonical_code(baxter_to_orientation(reverse(p))) == canonical_code(mirror(dual(lam))),
                    "{}: replay of the reverse differs from mirror(dual)".format(p))
        if tally.failed:
            break
    return tally.result()


@traceable(name="suite_trees", run_type="chain")
def trees_suite(n, seed=None, samples=None):
    tally = _Tally("trees")
    for which in (PERMUTATIONS, ORIENTATIONS):
        for level in range(1, n):
            for node in generate(level, which):
                ext = extended_label(node.obj)
                for child in children(node):
                    side, k = child.steps[-1]
                    tally.check(child.label == child_label(node.label, side, k) == label_pair(child.obj),
                                "tree {}: {}{} breaks the succession rule".format(which, side, k))
                    tally.check(extended_label(child.obj) == child_extended_label(ext, side, k),
                                "tree {}: {}{} breaks the extended rule".format(which, side, k))
                    if which == PERMUTATIONS:
                        tally.check(perm_parent(child.obj) == node.obj, "{}: parent mismatch".format(child.obj))
                    else:
                        tally.check(canonical_code(orient_parent(child.obj)) == canonical_code(node.obj),
                                    "orientation {}: parent mismatch".format(child.steps))
                        tally.check(not validate(child.obj), "orientation {}: child does not validate".format(child.steps))
                if tally.failed:
                    return tally.result()

    for level in range(1, n + 1):
        nb = sum(1 for _ in generate(level, PERMUTATIONS))
        no = sum(1 for _ in generate(level, ORIENTATIONS))
        tally.check(nb == no == baxter_number(level), "level {}: tree sizes {} / {} vs {}".format(level, nb, no, baxter_number(level)))

        pruned = sum(1 for _ in generate(level, PERMUTATIONS, keep=lambda p: not occurs(PATTERN_2413, p)))
        filtered = sum(1 for node in generate(level, PERMUTATIONS) if not occurs(PATTERN_2413, node.obj))
        tally.check(pruned == filtered, "level {}: 2413-avoidance is not inherited".format(level))
        pruned_o = sum(1 for _ in generate(level, ORIENTATIONS, keep=lambda o: not find_lops(o)))
        filtered_o = sum(1 for node in generate(level, ORIENTATIONS) if not find_lops(node.obj))
        avoid_3142 = sum(1 for node in generate(level, PERMUTATIONS) if not occurs(PATTERN_3142, node.obj))
        tally.check(pruned_o == filtered_o == avoid_3142, "level {}: no-LOP subtree mismatch".format(level))
    return tally.result()


@traceable(name="suite_rop", run_type="chain")
def rop_suite(n, seed=None, samples=None):
    tally = _Tally("rop")
    for p in baxter_upto(n):
        o, _ = phi(p)
        rops, lops = find_rops(o), find_lops(o)
        tally.check(occurs(PATTERN_2413, p) == bool(rops), "{}: 2413 vs ROP disagree".format(p))
        tally.check(occurs(PATTERN_3142, p) == bool(lops), "{}: 3142 vs LOP disagree".format(p))
        tally.check(len(find_lops(mirror(o))) == len(rops), "{}: mirror does not swap ROPs and LOPs".format(p))
        if p.n <= 5:
            family = enumerate_bipolar_orientations(o.plane, o.source, o.sink)
            codes = [canonical_code(x) for x in family]
            tally.check(canonical_code(o) in codes, "{}: brute force misses the image itself".format(p))
            tally.check(sum(1 for x in family if not find_rops(x)) == 1, "{}: no unique ROP-free orientation".format(p))
            tally.check(sum(1 for x in family if not find_lops(x)) == 1, "{}: no unique LOP-free orientation".format(p))
        if tally.failed:
            break
    return tally.result()


@traceable(name="suite_sp", run_type="chain")
def sp_suite(n, seed=None, samples=None):
    tally = _Tally("sp")
    for p in baxter_upto(min(n, 6)):
        o, _ = phi(p)
        tree = sp_decompose(o)
        separable = not any(occurs(pattern, p) for pattern in SEPARABLE_PATTERNS)
        count = len(enumerate_bipolar_orientations(o.plane, o.source, o.sink))
        if separable:
            tally.check(not isinstance(tree, SPFailure), "{}: not decomposed: {}".format(p, getattr(tree, "reason", "")))
            tally.check(not isinstance(tree, SPFailure) and recomposes(o, tree), "{}: recomposition differs".format(p))
        tally.check(isinstance(tree, SPFailure) != (count == 1),
                    "{}: decomposition and orientation count ({}) disagree".format(p, count))
        if tally.failed:
            return tally.result()
    for level in range(1, n + 1):
        tally.check(count_avoiders_in_tree(level, SEPARABLE_PATTERNS) == schroder(level),
                    "level {}: separable count differs from the Schroder number".format(level))
        if level <= 7:
            tally.check(count_avoiders(level, SEPARABLE_PATTERNS) == schroder(level),
                        "level {}: scan of all permutations differs from the Schroder number".format(level))
    return tally.result()


def _rooted_expected(p):
    st = statistics(p)
    return {
        "edges": p.n + 1,
        "vertices": st["ascents"] + 2,
        "right_of_root": st["lr_max"] + 1,
        "left_of_root": st["rl_min"] + 1,
        "sink_degree": st["rl_max"] + 1,
        "source_degree": st["lr_min"] + 1,
    }


def _rooted_observed(m):
    plane = m.plane
    right = plane.face_of[-m.root]
    left = plane.face_of[m.root]
    return {
        "edges": plane.edge_count,
        "vertices": plane.vertex_count,
        "right_of_root": len(plane.faces[right]),
        "left_of_root": len(plane.faces[left]),
        "sink_degree": plane.degree(m.sink),
        "source_degree": plane.degree(m.source),
    }


@traceable(name="suite_tm", run_type="chain")
def tm_suite(n, seed=None, samples=None):
    tally = _Tally("tm")
    for level in range(1, min(n, 6) + 1):
        seen = set()
        for node in generate(level, PERMUTATIONS, keep=lambda p: not occurs(PATTERN_2413, p)):
            p = node.obj
            o, _ = phi(p)
            m = add_root_edge(o)
            tally.check(not is_separable(m.plane), "{}: rooted image is separable".format(p))
            code = rooted_code(m)
            tally.check(code not in seen, "{}: rooted image repeats".format(p))
            seen.add(code)
            observed, expected = _rooted_observed(m), _rooted_expected(p)
            tally.check(observed == expected, "{}: rooted parameters {} expected {}".format(p, observed, expected))
            tally.check(canonical_code(remove_root_edge(m)) == canonical_code(o), "{}: root edge round trip failed".format(p))
            if tally.failed:
                return tally.result()

    for level in range(2, min(n, 6) + 1):
        for node in generate(level, PERMUTATIONS, keep=lambda p: not occurs(PATTERN_3142, p)):
            p = node.obj
            got = rooted_code(map_parent(add_root_edge(phi(p)[0])))
            want = rooted_code(add_root_edge(phi(perm_parent(p))[0]))
            if not tally.check(got == want, "{}: map parent differs from the image of the parent".format(p)):
                return tally.result()
    return tally.result()


@traceable(name="suite_counts", run_type="chain")
def counts_suite(n, seed=None, samples=None):
    tally = _Tally("counts")
    for level in range(1, n + 1):
        diff = count_diff(level)
        tally.check(not diff, "level {}: formula/brute mismatch at {}".format(level, diff[:1]))
        tb = census(level, PERMUTATIONS)
        to = census(level, ORIENTATIONS)
        tally.check(tb == to, "level {}: permutation and orientation census differ".format(level))
        tally.check(sum(tb.values()) == baxter_number(level), "level {}: census total differs".format(level))
    for k in range(1, min(n, 5) + 1):
        tally.check(count_ffp_baxter_involutions(k) == ffp_involution_count(k),
                    "length {}: involution count differs".format(2 * k))
    return tally.result()


SUITES = {
    "perms": perms_suite,
    "roundtrip": roundtrip_suite,
    "stats": stats_suite,
    "symmetry": symmetry_suite,
    "lambda": lambda_suite,
    "trees": trees_suite,
    "rop": rop_suite,
    "sp": sp_suite,
    "tm": tm_suite,
    "counts": counts_suite,
}


@traceable(name="verify", run_type="chain")
def run_suites(names, n, seed=None, samples=None):
    """Runs the named suites ('all' for every one) and returns their result dicts in order."""
    if "all" in names:
        names = list(SUITES)
    return [SUITES[name](n, seed=seed, samples=samples) for name in names]
