"""Base maps and the minimal realization of every classification row.

Rows 1..20 follow the classification table of generalized football
patterns: five painted medials (n=1), five truncated Platonic solids
(n=2), the prism and double/zigzag can families, the face variations
(n=3) and the edge subdivisions (n=6).  Each constructor returns a
colored pattern that validates against its type with the minimal vertex
counts, on the sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .rgcore import (
    BLACK,
    WHITE,
    PatternType,
    RibbonGraph,
    dual,
    make_graph,
    map_from_faces,
    medial,
    pattern_from_faces,
    swap_colors,
    truncate,
    with_face_colors,
)

PLATONIC_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")

_TETRA_FACES = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]

_CUBE_FACES = [
    (0, 3, 2, 1),
    (4, 5, 6, 7),
    (0, 1, 5, 4),
    (1, 2, 6, 5),
    (2, 3, 7, 6),
    (3, 0, 4, 7),
]

# vertex layers: top ring 0-4, upper middle 5-9, lower middle 10-14, bottom ring 15-19
_DODECA_FACES = (
    [tuple(range(5))]
    + [((i + 1) % 5, i, 5 + i, 10 + i, 5 + (i + 1) % 5) for i in range(5)]
    + [(5 + (i + 1) % 5, 10 + i, 15 + i, 15 + (i + 1) % 5, 10 + (i + 1) % 5) for i in range(5)]
    + [(19, 18, 17, 16, 15)]
)


def platonic(name: str) -> RibbonGraph:
    """One of the five Platonic solids as a plain oriented map."""
    if name == "tetrahedron":
        return map_from_faces(_TETRA_FACES)
    if name == "cube":
        return map_from_faces(_CUBE_FACES)
    if name == "dodecahedron":
        return map_from_faces(_DODECA_FACES)
    if name == "octahedron":
        return dual(platonic("cube"))
    if name == "icosahedron":
        return dual(platonic("dodecahedron"))
    raise ValueError(f"unknown solid {name!r}")


def american_football(k: int) -> RibbonGraph:
    """Two poles joined by k meridian edges, bounding k bigons."""
    if k < 3:
        raise ValueError("american_football needs k >= 3")
    sigma = [0] * (2 * k)
    alpha = [0] * (2 * k)
    for i in range(k):
        sigma[i] = (i + 1) % k  # north pole, counterclockwise
        sigma[k + i] = k + (i - 1) % k  # south pole, seen from outside
        alpha[i] = k + i
        alpha[k + i] = i
    return make_graph(sigma, alpha)


@dataclass(frozen=True)
class CatalogId:
    """A table row, with the parameter k for the four infinite families."""

    row: int
    k: Optional[int] = None

    FAMILY_ROWS = (11, 15, 16, 17)

    def __post_init__(self):
        if not 1 <= self.row <= 20:
            raise ValueError(f"row must be 1..20, got {self.row}")
        if self.row in self.FAMILY_ROWS:
            if self.k is None or self.k < 3:
                raise ValueError(f"row {self.row} needs a parameter k >= 3")
        elif self.k is not None:
            raise ValueError(f"row {self.row} takes no parameter")


# row -> (k, m, n); None marks the family parameter
ROW_TYPES = {
    1: (3, 3, 1),
    2: (3, 4, 1),
    3: (4, 3, 1),
    4: (3, 5, 1),
    5: (5, 3, 1),
    6: (3, 3, 2),
    7: (3, 4, 2),
    8: (4, 3, 2),
    9: (3, 5, 2),
    10: (5, 3, 2),
    11: (None, 2, 2),
    12: (3, 2, 3),
    13: (4, 2, 3),
    14: (5, 2, 3),
    15: (None, 1, 3),
    16: (None, 1, 4),
    17: (None, 1, 5),
    18: (3, 1, 6),
    19: (4, 1, 6),
    20: (5, 1, 6),
}

# row -> (b, w); "k" and "2k" for the families
ROW_COUNTS = {
    1: (4, 4),
    2: (8, 6),
    3: (6, 8),
    4: (20, 12),
    5: (12, 20),
    6: (4, 4),
    7: (8, 6),
    8: (6, 8),
    9: (20, 12),
    10: (12, 20),
    11: (2, "k"),
    12: (4, 6),
    13: (6, 12),
    14: (12, 30),
    15: (1, "k"),
    16: (2, "2k"),
    17: (2, "2k"),
    18: (4, 12),
    19: (6, 24),
    20: (12, 60),
}

ROW_NAMES = {
    1: "painted octahedron",
    2: "cuboctahedron",
    3: "cuboctahedron (colors swapped)",
    4: "icosidodecahedron",
    5: "icosidodecahedron (colors swapped)",
    6: "truncated tetrahedron",
    7: "truncated cube",
    8: "truncated octahedron",
    9: "truncated dodecahedron",
    10: "truncated icosahedron (football)",
    11: "truncated American football (k-prism)",
    12: "variation on the tetrahedron",
    13: "variation on the cube",
    14: "variation on the dodecahedron",
    15: "partially truncated American football",
    16: "double tin can",
    17: "zigzag tin can",
    18: "subdivision of the tetrahedron",
    19: "subdivision of the cube",
    20: "subdivision of the dodecahedron",
}


def pattern_type(id: CatalogId) -> PatternType:
    k, m, n = ROW_TYPES[id.row]
    if k is None:
        k = id.k
    return PatternType(k, m * n, n)


def table_counts(id: CatalogId) -> tuple[int, int]:
    b, w = ROW_COUNTS[id.row]
    if isinstance(w, str):
        w = id.k if w == "k" else 2 * id.k
    return b, w


def _face_variation(solid: RibbonGraph) -> RibbonGraph:
    """Inner polygon per face, radial corner edges, original edges erased;
    the two quadrilaterals along each old edge merge into a white hexagon."""
    faces = solid.faces
    vert = [[solid.vertex_of[d] for d in cyc] for cyc in faces]
    side = {}  # directed dart -> (face, position)
    for f, cyc in enumerate(faces):
        for i, d in enumerate(cyc):
            side[d] = (f, i)
    colored = []
    for f, cyc in enumerate(faces):
        colored.append((tuple(("v", f, i) for i in range(len(cyc))), BLACK))
    for f, cyc in enumerate(faces):
        k = len(cyc)
        for i, d in enumerate(cyc):
            if d > solid.alpha[d]:
                continue  # one hexagon per edge
            f2, j = side[solid.alpha[d]]
            k2 = len(faces[f2])
            hexagon = (
                ("v", f, i),
                ("c", vert[f][i]),
                ("v", f2, (j + 1) % k2),
                ("v", f2, j),
                ("c", vert[f][(i + 1) % k]),
                ("v", f, (i + 1) % k),
            )
            colored.append((hexagon, WHITE))
    return pattern_from_faces(colored)


def _edge_subdivision(solid: RibbonGraph) -> RibbonGraph:
    """Edges cut in three, an inner polygon with spokes per face, giving a
    black k-gon surrounded by hexagons inside every original face."""
    faces = solid.faces
    alpha = solid.alpha
    colored = []
    for f, cyc in enumerate(faces):
        colored.append((tuple(("v", f, i) for i in range(len(cyc))), BLACK))
    for f, cyc in enumerate(faces):
        k = len(cyc)
        for i, d in enumerate(cyc):
            prev = cyc[(i - 1) % k]
            hexagon = (
                ("p", alpha[prev]),
                ("c", solid.vertex_of[d]),
                ("p", d),
                ("p", alpha[d]),
                ("v", f, i),
                ("v", f, (i - 1) % k),
            )
            colored.append((hexagon, WHITE))
    return pattern_from_faces(colored)


def _double_tin_can(k: int) -> RibbonGraph:
    t = [("t", i) for i in range(k)]
    m = [("m", i) for i in range(k)]
    b = [("b", i) for i in range(k)]
    colored = [(tuple(t), BLACK), (tuple(reversed(b)), BLACK)]
    for i in range(k):
        j = (i + 1) % k
        colored.append(((t[j], t[i], m[i], m[j]), WHITE))
        colored.append(((m[j], m[i], b[i], b[j]), WHITE))
    return pattern_from_faces(colored)


def _zigzag_can(k: int) -> RibbonGraph:
    t = [("t", i) for i in range(k)]
    u = [("u", i) for i in range(k)]
    x = [("x", i) for i in range(k)]
    z = [("z", i) for i in range(k)]
    colored = [(tuple(reversed(t)), BLACK), (tuple(u), BLACK)]
    for i in range(k):
        j = (i + 1) % k
        colored.append(((t[i], t[j], x[j], z[i], x[i]), WHITE))
        colored.append(((z[i], x[j], z[j], u[j], u[i]), WHITE))
    return pattern_from_faces(colored)


def minimal_realization(id: CatalogId) -> RibbonGraph:
    """The minimal pattern of a table row, colored and spherical."""
    row, k = id.row, id.k
    if row == 1:
        return medial(platonic("tetrahedron"))
    if row in (2, 3):
        pat = medial(platonic("cube"))
        return pat if row == 2 else swap_colors(pat)
    if row in (4, 5):
        pat = medial(platonic("dodecahedron"))
        return pat if row == 4 else swap_colors(pat)
    if row in (6, 7, 8, 9, 10):
        solid = platonic(
            {6: "tetrahedron", 7: "cube", 8: "octahedron", 9: "dodecahedron", 10: "icosahedron"}[row]
        )
        return truncate(solid, range(len(solid.vertices)))
    if row == 11:
        G = american_football(k)
        return truncate(G, (0, 1))
    if row in (12, 13, 14):
        solid = platonic({12: "tetrahedron", 13: "cube", 14: "dodecahedron"}[row])
        return _face_variation(solid)
    if row == 15:
        G = american_football(k)
        return truncate(G, (0,))
    if row == 16:
        return _double_tin_can(k)
    if row == 17:
        return _zigzag_can(k)
    if row in (18, 19, 20):
        solid = platonic({18: "tetrahedron", 19: "cube", 20: "dodecahedron"}[row])
        return _edge_subdivision(solid)
    raise ValueError(f"unknown row {row}")


def gamma0() -> RibbonGraph:
    """Dual ribbon graph of the standard football: 12 black 5-valent and
    20 white 6-valent vertices, 60 triangular faces, d = 2."""
    return dual(minimal_realization(CatalogId(10)))


def _face_index_by_vertices(G: RibbonGraph, wanted: set) -> int:
    for i, cyc in enumerate(G.faces):
        if {G.vertex_of[d] for d in cyc} == wanted:
            return i
    raise ValueError("no face on that vertex set")


def painted_tetrahedron() -> RibbonGraph:
    """Tetrahedron with one black face: the minimal (3,3,3) pattern."""
    G = platonic("tetrahedron")
    colors = {i: WHITE for i in range(len(G.faces))}
    colors[0] = BLACK
    return with_face_colors(G, colors)


def painted_octahedron() -> RibbonGraph:
    """Octahedron with two opposite black faces: a non-minimal (3,3,3)
    pattern that covers nothing smaller."""
    G = platonic("octahedron")
    # face i of dual(cube) is the sigma-orbit i of the cube, i.e. cube
    # vertex i; cube vertices 0 and 6 are antipodal
    colors = {i: (BLACK if i in (0, 6) else WHITE) for i in range(len(G.faces))}
    return with_face_colors(G, colors)


def painted_cube() -> RibbonGraph:
    """Cube with two opposite black faces: the k=4 prism pattern."""
    G = platonic("cube")
    bottom = _face_index_by_vertices(G, {0, 1, 2, 3})
    top = _face_index_by_vertices(G, {4, 5, 6, 7})
    colors = {i: (BLACK if i in (bottom, top) else WHITE) for i in range(len(G.faces))}
    return with_face_colors(G, colors)


def painted_dodecahedron() -> RibbonGraph:
    """Dodecahedron with black top and bottom faces: the k=5 zigzag can."""
    G = platonic("dodecahedron")
    top = _face_index_by_vertices(G, set(range(5)))
    bottom = _face_index_by_vertices(G, set(range(15, 20)))
    colors = {i: (BLACK if i in (top, bottom) else WHITE) for i in range(len(G.faces))}
    return with_face_colors(G, colors)
