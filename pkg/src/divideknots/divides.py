"""Divides as signed Gauss codes and their planar combinatorial maps.

A divide is a generic immersed arc in the unit disc with both
endpoints on the boundary circle.  Combinatorially it is recorded as a
signed Gauss code: the sequence of double-point names met along the
arc, each name appearing exactly twice and carrying a crossing sign.

The arc together with the boundary circle forms a 4-valent-and-
3-valent graph.  We encode its disc picture as a rotation system
(counterclockwise dart order at every vertex) built from the signs and
certify realizability through the Euler face count: with ``d`` double
points the sphere picture must close up with exactly ``d + 3`` faces.

Conventions fixed here and relied upon by every downstream module:

* at a double point with first passage ``in1 -> out1`` and second
  passage ``in2 -> out2``, the counterclockwise dart order is
  ``(in1, in2, out1, out2)`` for sign ``+`` and
  ``(in1, out2, out1, in2)`` for sign ``-``;
* at each endpoint the order is (arc dart, boundary arc, boundary arc);
* faces are walked with the region on the left, so the face orbit of a
  dart is the region lying to its left;
* region ids ``r0, r1, ...`` follow face-traversal discovery order
  starting from the dart leaving the start endpoint, with the outer
  face (outside the disc) dropped;
* the default checkerboard colouring makes the region to the left of
  the first arc segment white.
"""

from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DivideError, GaussCodeError, InternalInvariantError, PlanarityError

# Vertex keys.  Endpoint keys use a tag that cannot collide with a
# double-point name taken from user input.
_START = ("endpoint", 0)
_END = ("endpoint", 1)


@dataclass(frozen=True)
class Divide:
    """An immersed-arc divide given by its signed Gauss code.

    ``visits`` lists the double-point passages along the arc as
    (name, sign) with sign +-1; each name appears exactly twice, and
    both occurrences carry the same sign.  ``black_hint`` optionally
    names the region that the checkerboard colouring paints black.
    ``snail_index`` records that the divide came out of :func:`snail`.
    """

    visits: Tuple[Tuple[str, int], ...]
    black_hint: Optional[str] = None
    snail_index: Optional[int] = None

    @property
    def gauss_code(self) -> str:
        return " ".join(f"{name}{'+' if sign > 0 else '-'}" for name, sign in self.visits)

    @property
    def double_points(self) -> Tuple[str, ...]:
        """Double-point names in order of first visit along the arc."""
        seen: List[str] = []
        for name, _ in self.visits:
            if name not in seen:
                seen.append(name)
        return tuple(seen)

    @property
    def crossing_count(self) -> int:
        return len(self.visits) // 2


def parse_divide(text: str, black_hint: Optional[str] = None) -> Divide:
    """Parse a signed Gauss code such as ``"v2+ v1+ v1+ v2+"``.

    Tokens are whitespace separated; each is a double-point name
    followed by ``+`` or ``-``.  The empty string is the plain chord
    (no double points).  Raises :class:`GaussCodeError` when a name
    does not occur exactly twice, when the two occurrences disagree in
    sign, or on malformed tokens.
    """
    visits: List[Tuple[str, int]] = []
    for token in text.split():
        if len(token) < 2 or token[-1] not in "+-":
            raise GaussCodeError(
                f"token {token!r} must be a vertex name followed by '+' or '-'")
        name = token[:-1]
        sign = 1 if token[-1] == "+" else -1
        visits.append((name, sign))
    counts: Dict[str, int] = {}
    signs: Dict[str, int] = {}
    for name, sign in visits:
        counts[name] = counts.get(name, 0) + 1
        if name in signs and signs[name] != sign:
            raise GaussCodeError(f"vertex {name!r} carries both signs")
        signs[name] = sign
    for name, k in counts.items():
        if k != 2:
            raise GaussCodeError(f"vertex {name!r} occurs {k} times (expected 2)")
    return Divide(visits=tuple(visits), black_hint=black_hint)


class CombinatorialMap:
    """Rotation system of a divide drawn in the disc.

    Darts are integers: edge ``e`` owns darts ``2e`` (at its source)
    and ``2e + 1`` (at its target), and ``twin`` is the xor with 1.
    Edges are the arc segments in order along the arc followed by the
    two boundary-circle arcs.  Built and validated by
    :func:`build_map`; do not construct directly.
    """

    def __init__(self, divide: Divide, edge_kinds: Tuple[str, ...],
                 dart_vertex: Tuple[object, ...], rotations: Dict[object, List[int]]):
        self.divide = divide
        self.edge_kinds = edge_kinds
        self.dart_vertex = dart_vertex
        self.dart_count = len(dart_vertex)
        sigma = [0] * self.dart_count
        sigma_inv = [0] * self.dart_count
        for cycle in rotations.values():
            for i, d in enumerate(cycle):
                nxt = cycle[(i + 1) % len(cycle)]
                sigma[d] = nxt
                sigma_inv[nxt] = d
        self.sigma = tuple(sigma)
        self._sigma_inv = tuple(sigma_inv)
        self.face_orbits = self._trace_faces()

    # -- basic structure ----------------------------------------------

    @staticmethod
    def twin(dart: int) -> int:
        return dart ^ 1

    @property
    def edge_count(self) -> int:
        return self.dart_count // 2

    @property
    def vertex_count(self) -> int:
        return self.divide.crossing_count + 2

    @property
    def sphere_face_count(self) -> int:
        return len(self.face_orbits)

    def is_boundary_edge(self, edge: int) -> bool:
        return self.edge_kinds[edge] == "boundary"

    def is_boundary_dart(self, dart: int) -> bool:
        return self.is_boundary_edge(dart // 2)

    def double_point_of_dart(self, dart: int) -> Optional[str]:
        """Name of the double point a dart is based at, if any."""
        v = self.dart_vertex[dart]
        return v[1] if isinstance(v, tuple) and v[0] == "dp" else None

    @property
    def outer_face_index(self) -> int:
        """Index into face_orbits of the face outside the disc."""
        first_boundary_dart = 2 * self.edge_kinds.index("boundary")
        for i, orbit in enumerate(self.face_orbits):
            if first_boundary_dart in orbit:
                return i
        raise InternalInvariantError("outer face not found")

    # -- faces ----------------------------------------------------------

    def face_successor(self, dart: int) -> int:
        """Next dart along the boundary of the face left of ``dart``."""
        return self._sigma_inv[self.twin(dart)]

    def _trace_faces(self) -> Tuple[Tuple[int, ...], ...]:
        seen = [False] * self.dart_count
        orbits: List[Tuple[int, ...]] = []
        for start in range(self.dart_count):
            if seen[start]:
                continue
            orbit = []
            d = start
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = self.face_successor(d)
            orbits.append(tuple(orbit))
        return tuple(orbits)


def build_map(divide: Divide) -> CombinatorialMap:
    """Construct and certify the disc picture of a divide.

    Raises :class:`PlanarityError` when the signed code cannot be
    realized by an immersed arc in the disc, detected by the sphere
    face count differing from ``d + 3``.
    """
    visits = divide.visits
    n_seg = len(visits) + 1
    points: List[object] = [_START] + [("dp", name) for name, _ in visits] + [_END]

    # Edge table: arc segments 0 .. n_seg-1 between consecutive points,
    # then the two boundary arcs, both oriented start -> end.
    edge_kinds = tuple(["arc"] * n_seg + ["boundary", "boundary"])
    ea, eb = n_seg, n_seg + 1
    dart_vertex: List[object] = []
    for e in range(n_seg):
        dart_vertex.append(points[e])
        dart_vertex.append(points[e + 1])
    for _ in (ea, eb):
        dart_vertex.append(_START)
        dart_vertex.append(_END)

    rotations: Dict[object, List[int]] = {
        _START: [0, 2 * ea, 2 * eb],
        _END: [2 * (n_seg - 1) + 1, 2 * eb + 1, 2 * ea + 1],
    }
    positions: Dict[str, List[int]] = {}
    for idx, (name, _) in enumerate(visits, start=1):
        positions.setdefault(name, []).append(idx)
    for name, sign in visits:
        key = ("dp", name)
        if key in rotations:
            continue
        p, q = positions[name]
        in1, out1 = 2 * (p - 1) + 1, 2 * p
        in2, out2 = 2 * (q - 1) + 1, 2 * q
        if sign > 0:
            rotations[key] = [in1, in2, out1, out2]
        else:
            rotations[key] = [in1, out2, out1, in2]

    cmap = CombinatorialMap(divide, edge_kinds, tuple(dart_vertex), rotations)
    expected = divide.crossing_count + 3
    if cmap.sphere_face_count != expected:
        raise PlanarityError(
            f"face count {cmap.sphere_face_count} != {expected}: signed code "
            f"{divide.gauss_code!r} is not realizable in the disc")
    return cmap


@dataclass(frozen=True)
class Region:
    """A complementary region of the divide inside the disc.

    ``walk`` is the face orbit (darts in boundary order); a region is
    inner when its closure avoids the boundary circle, i.e. when the
    walk contains no boundary dart.  ``colour`` is filled in by
    :func:`checkerboard`.
    """

    id: str
    walk: Tuple[int, ...]
    is_inner: bool
    colour: Optional[str] = None

    def vertex_multiplicity(self, cmap: CombinatorialMap, name: str) -> int:
        """How often the double point ``name`` occurs along the walk."""
        return sum(1 for d in self.walk if cmap.double_point_of_dart(d) == name)


def faces(cmap: CombinatorialMap) -> Tuple[Region, ...]:
    """The disc regions of a divide, ids in discovery order.

    The outer face (the sphere face outside the disc) is dropped; for
    a divide with ``d`` double points this leaves ``d + 2`` regions.
    """
    outer = cmap.outer_face_index
    regions: List[Region] = []
    for i, orbit in enumerate(cmap.face_orbits):
        if i == outer:
            continue
        inner = not any(cmap.is_boundary_dart(d) for d in orbit)
        regions.append(Region(id=f"r{len(regions)}", walk=orbit, is_inner=inner))
    if len(regions) != cmap.divide.crossing_count + 2:
        raise InternalInvariantError("region count disagrees with crossing count")
    return tuple(regions)


def checkerboard(cmap: CombinatorialMap, regions: Sequence[Region],
                 black_hint: Optional[str] = None, swap: bool = False) -> Tuple[Region, ...]:
    """Two-colour the regions so arc-edge neighbours differ.

    Without a hint the region left of the first arc segment is white;
    ``black_hint`` instead forces the named region black.  ``swap``
    inverts the finished colouring.  Colour conflicts cannot occur for
    a certified planar divide and raise InternalInvariantError.
    """
    by_id = {r.id: i for i, r in enumerate(regions)}
    region_of_dart: Dict[int, int] = {}
    for i, r in enumerate(regions):
        for d in r.walk:
            region_of_dart[d] = i

    adjacency: List[List[int]] = [[] for _ in regions]
    for e in range(cmap.edge_count):
        if cmap.is_boundary_edge(e):
            continue
        a, b = region_of_dart[2 * e], region_of_dart[2 * e + 1]
        adjacency[a].append(b)
        adjacency[b].append(a)

    if black_hint is not None:
        if black_hint not in by_id:
            raise DivideError(f"unknown region id {black_hint!r} in colour hint")
        start, start_colour = by_id[black_hint], "black"
    else:
        start, start_colour = region_of_dart[0], "white"

    colours: List[Optional[str]] = [None] * len(regions)
    colours[start] = start_colour
    queue = [start]
    while queue:
        cur = queue.pop(0)
        flip = "black" if colours[cur] == "white" else "white"
        for nb in adjacency[cur]:
            if colours[nb] is None:
                colours[nb] = flip
                queue.append(nb)
            elif colours[nb] != flip:
                raise InternalInvariantError("checkerboard conflict on a planar divide")
    if any(c is None for c in colours):
        raise InternalInvariantError("region adjacency graph is disconnected")
    if swap:
        colours = ["black" if c == "white" else "white" for c in colours]
    return tuple(replace(r, colour=c) for r, c in zip(regions, colours))


def snail(n: int) -> Divide:
    """The n-th snail divide: a spiral with ``n`` double points.

    Its signed Gauss code is ``vn ... v2 v1 v1 v2 ... vn`` with every
    sign positive, and the innermost region (the disc bounded by the
    little loop at ``v1``) is hinted black.
    """
    if n < 1:
        raise ValueError("snail divides are indexed from 1")
    names = [f"v{i}" for i in range(n, 0, -1)] + [f"v{i}" for i in range(1, n + 1)]
    divide = Divide(visits=tuple((name, 1) for name in names))
    cmap = build_map(divide)
    regions = faces(cmap)
    # The loop at v1 is arc segment n; the face left of its head dart
    # is the innermost region.
    loop_head = 2 * n + 1
    innermost = next(r for r in regions if loop_head in r.walk)
    if not innermost.is_inner or len(innermost.walk) != 1:
        raise InternalInvariantError("snail innermost region has unexpected shape")
    return replace(divide, black_hint=innermost.id, snail_index=n)


# ---------------------------------------------------------------------------
# divide files


def loads_divide(text: str) -> Divide:
    """Parse the divide file format.

    Lines starting with ``#`` and blank lines are skipped.  A single
    ``gauss:`` line (possibly with an empty code) is required and an
    optional ``black:`` line names the black region.
    """
    gauss: Optional[str] = None
    black: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise GaussCodeError(f"line {lineno}: expected 'key: value', got {line!r}")
        key = key.strip()
        value = value.strip()
        if key == "gauss":
            if gauss is not None:
                raise GaussCodeError(f"line {lineno}: duplicate 'gauss' directive")
            gauss = value
        elif key == "black":
            if black is not None:
                raise GaussCodeError(f"line {lineno}: duplicate 'black' directive")
            black = value
        else:
            raise GaussCodeError(f"line {lineno}: unknown directive {key!r}")
    if gauss is None:
        raise GaussCodeError("divide file lacks a 'gauss:' line")
    return parse_divide(gauss, black_hint=black)


def read_divide_file(path: str) -> Divide:
    """Load a divide from a file on disk; I/O errors propagate as OSError."""
    with open(path, "r", encoding="utf-8") as handle:
        return loads_divide(handle.read())
