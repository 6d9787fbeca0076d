"""
Command-line entry point: Baxter permutations <-> plane bipolar orientations.
Converts, transforms, enumerates, counts, renders and verifies.

Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
"""

import argparse
import sys
from pathlib import Path

from bijection.hasse import build_phi
from bijection.phi import correspondence_notes, phi
from bijection.psi import psi
from checks.suites import SUITES, run_suites
from config import settings
from config.formats import FORMAT_REGISTRY
from enumeration.census import census, census_rows, count_diff, format_tsv, formula_rows
from gentree.generate import ORIENTATIONS, PERMUTATIONS, generate, label_pair
from gentree.insertion import format_insertion_seq, insertion_sequence, parse_insertion_seq, replay_permutation
from gentree.orient_tree import replay_orientation
from maps.map_format import format_map, parse_map
from maps.orientation import borders, dual, faces, find_lops, find_rops, mirror, pole_degrees, require_valid, reverse_all
from perms.patterns import PATTERN_2413, PATTERN_3142, baxter_witness, occurs
from perms.permutation import PermutationError, inverse, parse_permutation, reverse, rotate_cw, statistics
from render.dot import as_graphviz
from render.visualizer import plot_diagram


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _emit(text, out=None):
    if out:
        target = Path(out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_map(path):
    return require_valid(parse_map(_read_text(path)))


def _load_perm_or_map(arg):
    """
    Text that parses as a permutation is one, even if a file of that name exists;
    anything else ('-' included) is read as a MAP v1 file.
    """
    if arg != "-":
        try:
            return parse_permutation(arg), None
        except PermutationError:
            if not Path(arg).is_file():
                raise
    return None, _load_map(arg)


def cmd_check(args):
    p = parse_permutation(args.perm)
    triple = baxter_witness(p)
    if triple is None:
        print("PASS | baxter | {}".format(p))
        return 0
    print("FAIL | not baxter | {} | i={} j={} k={}".format(p, *triple))
    return 1


def cmd_to_map(args):
    p = parse_permutation(args.perm)
    o, corr = phi(p)
    _emit(format_map(o, notes=correspondence_notes(corr)), args.output)
    return 0


def cmd_to_perm(args):
    p, _ = psi(_load_map(args.map))
    _emit("{}\n".format(p), args.output)
    return 0


def _map_stats(o):
    b = borders(o)
    s_deg, t_deg = pole_degrees(o)
    return [
        ("edges", o.plane.edge_count),
        ("vertices", o.plane.vertex_count),
        ("non_polar_vertices", o.plane.vertex_count - 2),
        ("inner_faces", len(faces(o))),
        ("left_outer_degree", b["left_outer_degree"]),
        ("right_outer_degree", b["right_outer_degree"]),
        ("source_degree", s_deg),
        ("sink_degree", t_deg),
        ("rops", len(find_rops(o))),
        ("lops", len(find_lops(o))),
    ]


def cmd_stats(args):
    p, o = _load_perm_or_map(args.obj)
    if p is not None:
        rows = sorted(statistics(p).items())
        rows.append(("baxter", baxter_witness(p) is None))
        rows.append(("contains_2413", occurs(PATTERN_2413, p)))
        rows.append(("contains_3142", occurs(PATTERN_3142, p)))
        if rows[-3][1]:
            rows.append(("label", label_pair(p)))
    else:
        rows = _map_stats(o)
    _emit("".join("{}: {}\n".format(k, v) for k, v in rows))
    return 0


PERM_OPS = {"inv": inverse, "rev": reverse, "rot": rotate_cw}
MAP_OPS = {"mir": mirror, "dual": dual, "revall": reverse_all}


def cmd_sym(args):
    p = parse_permutation(args.perm)
    _emit("{}\n".format(PERM_OPS[args.op](p)), args.output)
    return 0


def cmd_sym_map(args):
    o = _load_map(args.map)
    _emit(format_map(MAP_OPS[args.op](o)), args.output)
    return 0


def cmd_seq(args):
    p = parse_permutation(args.perm)
    _emit(format_insertion_seq(insertion_sequence(p)) + "\n")
    return 0


def cmd_replay(args):
    steps = parse_insertion_seq(args.seq)
    if args.tree == ORIENTATIONS:
        _emit(format_map(replay_orientation(steps)), args.output)
    else:
        _emit("{}\n".format(replay_permutation(steps)), args.output)
    return 0


def _tree_filter(which, name):
    if name is None:
        return None
    if which == PERMUTATIONS:
        patterns = {"2413": (PATTERN_2413,), "3142": (PATTERN_3142,), "both": (PATTERN_2413, PATTERN_3142)}[name]
        return lambda p: not any(occurs(pattern, p) for pattern in patterns)
    finders = {"2413": (find_rops,), "3142": (find_lops,), "both": (find_rops, find_lops)}[name]
    return lambda o: not any(find(o) for find in finders)


def cmd_enumerate(args):
    settings.check_guard("n", args.n, settings.MAX_N)
    keep = _tree_filter(args.tree, args.filter)
    count = 0
    for node in generate(args.n, args.tree, keep=keep):
        count += 1
        if args.tree == PERMUTATIONS:
            print(node.obj)
        else:
            print(format_map(node.obj))
    print("Total: {}".format(count), file=sys.stderr)
    return 0


def cmd_counts(args):
    if args.diff:
        rows = count_diff(args.n)
        for m, i, j, formula, brute in rows:
            print("DIFF | n={} m={} i={} j={} | formula={} | brute={}".format(args.n, m, i, j, formula, brute))
        return 1 if rows else 0
    if args.brute:
        rows = census_rows(args.n, census(args.n, PERMUTATIONS))
    else:
        rows = formula_rows(args.n)
    _emit(format_tsv(rows), args.output)
    return 0


def cmd_verify(args):
    settings.check_guard("n", args.n, settings.MAX_N)
    print("seed: {}".format(settings.DEFAULT_SEED))
    failed = 0
    for result in run_suites([args.suite], args.n, seed=settings.DEFAULT_SEED):
        if result["passed"]:
            print("PASS | suite={} | checked={}".format(result["suite"], result["checked"]))
        else:
            failed += 1
            print("FAIL | suite={} | checked={} | {}".format(result["suite"], result["checked"], result["failure"]))
    return 1 if failed else 0


def cmd_render(args):
    p, o = _load_perm_or_map(args.obj)
    if args.format == "dot":
        _emit(as_graphviz(o if o is not None else phi(p)[0]), args.output)
        return 0
    if p is None:
        p, _ = psi(o)
    _emit(plot_diagram(build_phi(p), title=str(p)), args.output)
    return 0


def cmd_formats(args):
    for key, value in sorted(FORMAT_REGISTRY.items()):
        print("{}\t{!r}".format(key, value))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="baxter", description="Baxter permutations and plane bipolar orientations")
    parser.add_argument("--max-n", type=int, help="guard for exhaustive runs (default {})".format(settings.MAX_N))
    parser.add_argument("--max-brute-edges", type=int,
                        help="guard for brute-force orientation search (default {})".format(settings.MAX_BRUTE_EDGES))
    parser.add_argument("--seed", type=int, help="seed for sampled checks (default {})".format(settings.DEFAULT_SEED))
    parser.add_argument("--samples", type=int,
                        help="cases per sampled check (default {} round trips, {} symmetry cases)".format(
                            settings.ROUNDTRIP_SAMPLES, settings.SYMMETRY_SAMPLES))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="Baxter predicate with a witnessing triple")
    p.add_argument("perm")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("to-map", help="permutation -> MAP v1 with the point/edge table")
    p.add_argument("perm")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_to_map)

    p = sub.add_parser("to-perm", help="MAP v1 file -> permutation")
    p.add_argument("map")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_to_perm)

    p = sub.add_parser("stats", help="statistics of a permutation or a map file")
    p.add_argument("obj")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sym", help="symmetry of a permutation")
    p.add_argument("perm")
    p.add_argument("--op", choices=sorted(PERM_OPS), required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sym)

    p = sub.add_parser("sym-map", help="mirror / dual / reversal of a map file")
    p.add_argument("map")
    p.add_argument("--op", choices=sorted(MAP_OPS), required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sym_map)

    p = sub.add_parser("seq", help="insertion sequence of a Baxter permutation")
    p.add_argument("perm")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("replay", help="replay an insertion sequence such as 'L1 R2'")
    p.add_argument("seq")
    p.add_argument("--tree", choices=[PERMUTATIONS, ORIENTATIONS], default=PERMUTATIONS)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("enumerate", help="level n of a generating tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tree", choices=[PERMUTATIONS, ORIENTATIONS], default=PERMUTATIONS)
    p.add_argument("--filter", choices=["2413", "3142", "both"])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("counts", help="refined Baxter counts as TSV")
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--formula", action="store_true")
    mode.add_argument("--brute", action="store_true")
    mode.add_argument("--diff", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("formats", help="versioned text formats understood by this tool")
    p.set_defaults(func=cmd_formats)

    p = sub.add_parser("render", help="DOT or SVG drawing of a permutation or map file")
    p.add_argument("obj")
    p.add_argument("--format", choices=["dot", "svg"], required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def _apply_overrides(args):
    if args.max_n is not None:
        settings.MAX_N = args.max_n
    if args.max_brute_edges is not None:
        settings.MAX_BRUTE_EDGES = args.max_brute_edges
    if args.seed is not None:
        settings.DEFAULT_SEED = args.seed
    if args.samples is not None:
        settings.ROUNDTRIP_SAMPLES = args.samples
        settings.SYMMETRY_SAMPLES = args.samples


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    _apply_overrides(args)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print("ERROR | {}: {}".format(type(exc).__name__, exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
