"""
MAP v1 text format for bipolar orientations.

    MAP v1
    vertices <V>
    edges <E>
    rot <vertex-id>: <signed edge ids, clockwise>
    source <vertex-id>
    sink <vertex-id>
    outer <signed edge id>@<vertex-id>

Vertex ids are 0-based, edge ids 1-based; +e is the tail half-edge of e.
Blank lines and lines starting with "#" are ignored.
"""

from config.formats import MAP_FORMAT_V1, MAP_V1_KEYWORDS
from maps.plane_map import BipolarOrientation, MapError, PlaneMap


class MapFormatError(ValueError):
    """Raised for unparseable map text; the message names the line number."""


def format_map(o, notes=()):
    """`notes` become trailing "# " comment lines."""
    plane = o.plane
    lines = [
        MAP_FORMAT_V1,
        "vertices {}".format(plane.vertex_count),
        "edges {}".format(plane.edge_count),
    ]
    for v, rot in enumerate(plane.rotations):
        lines.append("rot {}: {}".format(v, " ".join(str(h) for h in rot)).rstrip())
    lines.append("source {}".format(o.source))
    lines.append("sink {}".format(o.sink))
    lines.append("outer {}@{}".format(plane.outer, plane.vertex_of(plane.outer)))
    lines.extend("# " + note for note in notes)
    return "\n".join(lines) + "\n"


def _int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise MapFormatError("line {}: {} must be an integer, got {!r}".format(lineno, what, token))


def parse_map(text):
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1)]
    lines = [(i, line) for i, line in lines if line and not line.startswith("#")]
    if not lines or lines[0][1] != MAP_FORMAT_V1:
        where = lines[0][0] if lines else 1
        raise MapFormatError("line {}: expected header {!r}".format(where, MAP_FORMAT_V1))

    fields = {}
    rotations = {}
    outer_line = None
    for lineno, line in lines[1:]:
        keyword, _, rest = line.partition(" ")
        if keyword not in MAP_V1_KEYWORDS:
            raise MapFormatError("line {}: unknown keyword {!r}".format(lineno, keyword))
        if keyword == "rot":
            head, sep, body = rest.partition(":")
            if not sep:
                raise MapFormatError("line {}: expected 'rot <vertex-id>: <half-edges>'".format(lineno))
            v = _int(head.strip(), lineno, "vertex id")
            if v in rotations:
                raise MapFormatError("line {}: vertex {} has a second rot line".format(lineno, v))
            rotations[v] = tuple(_int(tok, lineno, "half-edge") for tok in body.split())
        elif keyword in ("vertices", "edges", "source", "sink"):
            if keyword in fields:
                raise MapFormatError("line {}: duplicate '{}' line".format(lineno, keyword))
            fields[keyword] = (_int(rest.strip(), lineno, keyword), lineno)
        else:
            dart, sep, vertex = rest.strip().partition("@")
            if not sep:
                raise MapFormatError("line {}: expected 'outer <half-edge>@<vertex-id>'".format(lineno))
            outer_line = (_int(dart, lineno, "half-edge"), _int(vertex, lineno, "vertex id"), lineno)

    last = lines[-1][0]
    for keyword in ("vertices", "edges", "source", "sink"):
        if keyword not in fields:
            raise MapFormatError("line {}: missing '{}' line".format(last, keyword))
    if outer_line is None:
        raise MapFormatError("line {}: missing 'outer' line".format(last))

    vertex_count, vline = fields["vertices"]
    if sorted(rotations) != list(range(vertex_count)):
        raise MapFormatError(
            "line {}: rot lines cover vertices {}, expected 0..{}".format(vline, sorted(rotations), vertex_count - 1)
        )
    edge_count, eline = fields["edges"]
    darts = sum(len(rot) for rot in rotations.values())
    if darts != 2 * edge_count:
        raise MapFormatError("line {}: {} half-edges listed for {} edges".format(eline, darts, edge_count))

    h, v, oline = outer_line
    plane = PlaneMap(tuple(rotations[u] for u in range(vertex_count)), h)
    try:
        owner = plane.vertex_of(h)
    except (KeyError, MapError) as exc:
        raise MapFormatError("line {}: outer half-edge {} is not usable: {}".format(oline, h, exc))
    if owner != v:
        raise MapFormatError("line {}: half-edge {} sits at vertex {}, not {}".format(oline, h, owner, v))
    return BipolarOrientation(plane, fields["source"][0], fields["sink"][0])
