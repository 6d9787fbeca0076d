"""
Run the hand-checked cases in test_cases.json, then the property suites at settings.EVAL_N
(counts and trees also at settings.EVAL_COUNTS_N).
Every case and every suite must pass; exit code 1 otherwise.
"""

import json
import os
import sys
import tempfile

# Add project root so the packages can be imported
_project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, _project_root)

import main
from bijection.correspondence import correspondence_check
from bijection.hasse import NotBaxterError, build_phi, crossing_free_by_pattern, has_crossing, point_diagram
from bijection.phi import phi
from bijection.psi import psi
from checks.suites import run_suites
from config import settings
from config.settings import check_guard
from enumeration.census import census, census_rows, count_diff
from enumeration.formulas import baxter_count, baxter_number, ffp_involution_count, schroder
from gentree.generate import generate
from gentree.insertion import (
    format_insertion_seq,
    insertion_sequence,
    parse_insertion_seq,
    perm_insert,
    perm_parent,
    replay_permutation,
)
from gentree.map_tree import map_parent
from gentree.orient_tree import baxter_to_orientation, orient_insert, orient_parent
from maps.canonical import canonical_code, rooted_code
from maps.map_format import format_map, parse_map
from maps.orientation import borders, dual, faces, find_lops, find_rops, mirror, pole_degrees, reverse_all, validate
from maps.plane_map import BipolarOrientation, PlaneMap, one_edge
from maps.separability import enumerate_bipolar_orientations, is_separable, k4
from maps.series_parallel import SPFailure, SPLeaf, SPSeries, recomposes, sp_decompose
from maps.surgery import add_root_edge, remove_root_edge
from perms.patterns import avoids_barred, baxter_witness, is_baxter, occurs, parse_pattern
from perms.permutation import inverse, is_fixed_point_free_involution, parse_permutation, reverse, rotate_cw, statistics
from render.dot import as_graphviz
from render.visualizer import plot_diagram

_MAP_TRANSFORMS = {
    "mirror": mirror,
    "dual": dual,
    "revall": reverse_all,
    "parent": orient_parent,
}


def _orientation(text):
    """
    Small language for map fixtures: "one_edge", "reversed_one_edge", "phi:<perm>",
    "lambda:<perm>", the broken maps "loop" and "alternating", or a transform prefix
    ("mirror:", "dual:", "revall:", "parent:", "L<k>:", "R<k>:") applied to another fixture.
    """
    if text == "one_edge":
        return one_edge()
    if text == "reversed_one_edge":
        return BipolarOrientation(PlaneMap(((-1,), (1,)), -1), 0, 1)
    if text == "loop":
        return BipolarOrientation(PlaneMap(((1, -1, 2), (-2,)), 2), 0, 1)
    if text == "alternating":
        # middle vertex reads in, out, in, out clockwise
        return BipolarOrientation(PlaneMap(((1, 3), (-1, 2, -3, 4), (-2, -4)), 1), 0, 2)
    head, _, rest = text.partition(":")
    if head == "phi":
        return phi(parse_permutation(rest))[0]
    if head == "lambda":
        return baxter_to_orientation(parse_permutation(rest))
    if head in _MAP_TRANSFORMS:
        return _MAP_TRANSFORMS[head](_orientation(rest))
    (side, k), = parse_insertion_seq(head)
    return orient_insert(_orientation(rest), side, k)


def _sp_shape(text):
    o = _orientation(text)
    tree = sp_decompose(o)
    if isinstance(tree, SPFailure):
        return {"kind": "failure", "reason": tree.reason}

    def leaves(node):
        return 1 if isinstance(node, SPLeaf) else sum(leaves(p) for p in node.parts)

    kind = "e" if isinstance(tree, SPLeaf) else ("S" if isinstance(tree, SPSeries) else "P")
    return {"kind": kind, "leaves": leaves(tree), "recomposes": recomposes(o, tree)}


def _root_edge(text):
    o = _orientation(text)
    m = add_root_edge(o)
    return {
        "edges": m.plane.edge_count,
        "vertices": m.plane.vertex_count,
        "separable": is_separable(m.plane),
        "restores": canonical_code(remove_root_edge(m)) == canonical_code(o),
    }


def _count_orientations(text):
    if text == "k4":
        plane, s, t = k4()
    else:
        o = _orientation(text)
        plane, s, t = o.plane, o.source, o.sink
    return len(enumerate_bipolar_orientations(plane, s, t))


def _build_phi(text):
    d = build_phi(parse_permutation(text))
    return {"black": len(d.blacks()), "white": len(d.whites()), "edges": len(d.edges)}


def _correspondence(text):
    p = parse_permutation(text)
    o, corr = phi(p)
    return correspondence_check(p, corr, o)


def _render_stable(text):
    p = parse_permutation(text)
    svg = plot_diagram(build_phi(p), title=text)
    dot = as_graphviz(phi(p)[0])
    return svg == plot_diagram(build_phi(p), title=text) and dot == as_graphviz(phi(p)[0]) and "rotpos" in dot


def _crossing_oracle(text):
    d = point_diagram(parse_permutation(text))
    return {"crossing": has_crossing(d), "pattern_free": crossing_free_by_pattern(d)}


def _not_baxter_triple(text):
    try:
        build_phi(parse_permutation(text))
    except NotBaxterError as exc:
        return list(exc.triple)
    return None


def _perm_insert(x):
    (side, k), = parse_insertion_seq(x["step"])
    return str(perm_insert(parse_permutation(x["perm"]), side, k))


def _load_arg(x):
    """Loads x["arg"] through the CLI argument reader inside a scratch directory holding x["files"]."""
    cwd = os.getcwd()
    with tempfile.TemporaryDirectory() as scratch:
        for name, fixture in x["files"].items():
            with open(os.path.join(scratch, name), "w", encoding="utf-8") as f:
                f.write(format_map(_orientation(fixture)))
        os.chdir(scratch)
        try:
            p, o = main._load_perm_or_map(x["arg"])
        finally:
            os.chdir(cwd)
    return "perm {}".format(p) if p is not None else "map edges={}".format(o.plane.edge_count)


OPS = {
    "is_baxter": lambda x: is_baxter(parse_permutation(x)),
    "baxter_witness": lambda x: list(baxter_witness(parse_permutation(x)) or []),
    "occurs": lambda x: occurs(parse_pattern(x["pattern"]), parse_permutation(x["perm"])),
    "avoids_barred": lambda x: avoids_barred(parse_pattern(x["pattern"]), parse_permutation(x["perm"])),
    "statistics": lambda x: statistics(parse_permutation(x)),
    "inverse": lambda x: str(inverse(parse_permutation(x))),
    "reverse": lambda x: str(reverse(parse_permutation(x))),
    "rotate_cw": lambda x: str(rotate_cw(parse_permutation(x))),
    "ffp_involution": lambda x: is_fixed_point_free_involution(parse_permutation(x)),
    "valid": lambda x: not validate(_orientation(x)),
    "outer_degrees": lambda x: [borders(_orientation(x))[k] for k in ("left_outer_degree", "right_outer_degree")],
    "pole_degrees": lambda x: list(pole_degrees(_orientation(x))),
    "map_size": lambda x: {
        "edges": _orientation(x).plane.edge_count,
        "vertices": _orientation(x).plane.vertex_count,
        "faces": len(faces(_orientation(x))),
    },
    "same_map": lambda x: canonical_code(_orientation(x[0])) == canonical_code(_orientation(x[1])),
    "rop_lop": lambda x: [len(find_rops(_orientation(x))), len(find_lops(_orientation(x)))],
    "is_separable": lambda x: is_separable(_orientation(x).plane),
    "count_orientations": _count_orientations,
    "sp_shape": _sp_shape,
    "root_edge": _root_edge,
    "build_phi": _build_phi,
    "not_baxter_triple": _not_baxter_triple,
    "crossing_oracle": _crossing_oracle,
    "violations": lambda x: validate(_orientation(x["map"]))[: x.get("first", None)],
    "correspondence": _correspondence,
    "render_stable": _render_stable,
    "psi": lambda x: str(psi(_orientation(x))[0]),
    "perm_parent": lambda x: str(perm_parent(parse_permutation(x))),
    "perm_insert": _perm_insert,
    "replay_steps": lambda x: str(replay_permutation(parse_insertion_seq(x))),
    "parse_map": lambda x: parse_map(x).plane.edge_count,
    "guard": lambda x: check_guard(*x),
    "load_arg": _load_arg,
    "insertion_sequence": lambda x: format_insertion_seq(insertion_sequence(parse_permutation(x))),
    "replay": lambda x: str(replay_permutation(insertion_sequence(parse_permutation(x)))),
    "map_parent": lambda x: rooted_code(map_parent(add_root_edge(_orientation(x[0]))))
    == rooted_code(add_root_edge(_orientation(x[1]))),
    "generate_count": lambda x: sum(1 for _ in generate(x["n"], x["tree"])),
    "baxter_count": lambda x: baxter_count(*x),
    "baxter_number": baxter_number,
    "schroder": schroder,
    "ffp_count": ffp_involution_count,
    "census": lambda x: [list(row) for row in census_rows(x, census(x))],
    "count_diff": lambda x: [list(row) for row in count_diff(x)],
    "cli": main.run,
}


def run_case(tc):
    try:
        return OPS[tc["op"]](tc["input"])
    except (ValueError, ArithmeticError, AssertionError) as exc:
        return "{}: {}".format(type(exc).__name__, exc)


def run_evals():
    """Load test cases, run each op, then the property suites; return (passed, total)."""
    evals_dir = os.path.dirname(os.path.abspath(__file__))
    path = os.path.join(evals_dir, "test_cases.json")
    with open(path, "r", encoding="utf-8") as f:
        test_cases = json.load(f)

    passed = 0
    for tc in test_cases:
        case_id = tc["id"]
        description = tc["description"]
        expected = tc["expected"]
        got = run_case(tc)
        if got == expected:
            passed += 1
            print("PASS | id={} | {} | expected={} | got={}".format(case_id, description, expected, got))
        else:
            print("FAIL | id={} | {} | expected={} | got={}".format(case_id, description, expected, got))

    total = len(test_cases)
    print()
    print("Suites at n={}, counts and trees again at n={} (seed {})".format(
        settings.EVAL_N, settings.EVAL_COUNTS_N, settings.DEFAULT_SEED))
    results = run_suites(["all"], settings.EVAL_N, seed=settings.DEFAULT_SEED)
    results += run_suites(["counts", "trees"], settings.EVAL_COUNTS_N, seed=settings.DEFAULT_SEED)
    for result in results:
        total += 1
        if result["passed"]:
            passed += 1
            print("PASS | suite={} | checked={}".format(result["suite"], result["checked"]))
        else:
            print("FAIL | suite={} | checked={} | {}".format(result["suite"], result["checked"], result["failure"]))

    score_pct = 100.0 * passed / total if total else 0.0
    print()
    print("Score: {}/{} ({:.1f}%)".format(passed, total, score_pct))
    print("PASSED" if passed == total else "FAILED")
    return passed, total


if __name__ == "__main__":
    passed, total = run_evals()
    sys.exit(0 if passed == total else 1)
