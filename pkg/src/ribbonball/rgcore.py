r"""Colored ribbon graphs with optional edge twists.

A graph lives on darts (half edges) 0..n-1.  ``sigma`` is the rotation:
the counterclockwise successor of a dart around its tail vertex.  ``alpha``
is the fixed point free involution pairing the two darts of each edge.
A boolean twist per edge marks gluings that reverse the local orientation,
which is enough to embed graphs in non-orientable surfaces.

Vertices are the sigma-orbits, edges the alpha-orbits.  Faces are traced
along edge sides: a state is a pair (dart, side) and the successor of
(d, s) is (sigma^{+/-1}(alpha(d)), s xor twist(d)), using sigma when the
new side is + and sigma^{-1} otherwise.  The trace visits every state once
and yields exactly two orbits per face (the two boundary orientations),
so the face count is half the orbit count.  With all twists false the
(+)-side orbits are precisely the orbits of sigma∘alpha, and that cheaper
path is used; it also fixes the face enumeration order (by minimal dart)
which the dual construction and the RGF file format rely on.

Two kinds of colored graphs occur.  A *dual* graph carries black/white
colors on vertices.  A *pattern* carries colors on faces, stored in
``face_color`` indexed by face order.  ``dual`` exchanges the two: it
keeps the dart set, replaces sigma by sigma∘alpha, and is an involution
dart for dart.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .permutation import perm_check, perm_cycles, perm_invert

BLACK = "black"
WHITE = "white"
ROLES = ("pattern", "dual", "plain")

_COLOR_CODE = {None: 0, BLACK: 1, WHITE: 2}


def other_color(color: str) -> str:
    if color == BLACK:
        return WHITE
    if color == WHITE:
        return BLACK
    raise ValueError(f"not a color: {color!r}")


@dataclass(frozen=True)
class RibbonGraph:
    """Immutable ribbon graph; construct via :func:`make_graph` or builders."""

    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    twist: tuple[bool, ...]
    vertex_color: tuple[Optional[str], ...]
    face_color: Optional[tuple[Optional[str], ...]]
    role: str

    def __post_init__(self):
        n = len(self.sigma)
        if n < 2 or n % 2:
            raise ValueError(f"dart count must be even and >= 2, got {n}")
        if not perm_check(self.sigma):
            raise ValueError("sigma is not a permutation of the darts")
        if not perm_check(self.alpha):
            raise ValueError("alpha is not a permutation of the darts")
        for d in range(n):
            a = self.alpha[d]
            if a == d:
                raise ValueError(f"alpha fixes dart {d}")
            if self.alpha[a] != d:
                raise ValueError("alpha is not an involution")
        if len(self.twist) != n:
            raise ValueError("twist must have one flag per dart")
        for d in range(n):
            if self.twist[d] != self.twist[self.alpha[d]]:
                raise ValueError(f"twist differs on the two darts of edge {min(d, self.alpha[d])}")
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r}")
        if len(self.vertex_color) != len(self.vertices):
            raise ValueError("vertex_color length must equal the vertex count")
        for c in self.vertex_color:
            if c not in (None, BLACK, WHITE):
                raise ValueError(f"bad vertex color {c!r}")
        if self.role == "dual":
            if any(c is None for c in self.vertex_color):
                raise ValueError("dual graphs need a total vertex coloring")
        else:
            if any(c is not None for c in self.vertex_color):
                raise ValueError(f"{self.role} graphs carry no vertex colors")
        if self.role == "pattern":
            if self.face_color is None or len(self.face_color) != len(self.faces):
                raise ValueError("pattern graphs need one color per face")
            if any(c not in (BLACK, WHITE) for c in self.face_color):
                raise ValueError("pattern face colors must be total")
        elif self.face_color is not None:
            raise ValueError(f"{self.role} graphs carry no face colors")

    # -- derived structure ------------------------------------------------

    @property
    def num_darts(self) -> int:
        return len(self.sigma)

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        """Sigma-orbits, ordered by minimal dart."""
        return perm_cycles(self.sigma)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for i, cyc in enumerate(self.vertices):
            for d in cyc:
                out[d] = i
        return tuple(out)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (d, self.alpha[d]) for d in range(self.num_darts) if d < self.alpha[d]
        )

    def edge_of(self, d: int) -> int:
        """Canonical edge name: the smaller dart of the pair."""
        return min(d, self.alpha[d])

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Face boundaries as dart sequences, in trace order.

        All twists false: orbits of sigma∘alpha ordered by minimal dart.
        Otherwise: first-encounter order of the side-tracing states
        (0,+), (0,-), (1,+), ...; each face is recorded from the first of
        its two mirror orbits and a dart may appear twice in one face.
        """
        return self._trace[0]

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        """Face index of the (+)-side state of each dart."""
        return self._trace[1]

    @cached_property
    def _trace(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        n = self.num_darts
        sigma, alpha, twist = self.sigma, self.alpha, self.twist
        if not any(twist):
            phi = tuple(sigma[alpha[d]] for d in range(n))
            cycles = perm_cycles(phi)
            face_of = [0] * n
            for i, cyc in enumerate(cycles):
                for d in cyc:
                    face_of[d] = i
            return cycles, tuple(face_of)

        sigma_inv = perm_invert(sigma)

        def step(state: int) -> int:
            d, s = state >> 1, state & 1
            s2 = s ^ twist[d]
            d2 = alpha[d]
            nd = sigma[d2] if s2 == 0 else sigma_inv[d2]
            return (nd << 1) | s2

        claimed = [False] * (2 * n)
        cycles = []
        face_of_state = [-1] * (2 * n)
        for start in range(2 * n):
            if claimed[start]:
                continue
            idx = len(cycles)
            orb = []
            x = start
            while not claimed[x]:
                claimed[x] = True
                face_of_state[x] = idx
                orb.append(x >> 1)
                x = step(x)
            d, s = start >> 1, start & 1
            mirror = (alpha[d] << 1) | (1 ^ (s ^ twist[d]))
            if claimed[mirror]:
                raise RuntimeError("face trace produced a self-mirrored orbit")
            y = mirror
            while not claimed[y]:
                claimed[y] = True
                face_of_state[y] = idx
                y = step(y)
            cycles.append(tuple(orb))
        face_of = tuple(face_of_state[d << 1] for d in range(n))
        return tuple(cycles), face_of

    @cached_property
    def is_connected(self) -> bool:
        n = self.num_darts
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            d = stack.pop()
            for nxt in (self.sigma[d], self.alpha[d]):
                if not seen[nxt]:
                    seen[nxt] = True
                    count += 1
                    stack.append(nxt)
        return count == n

    @cached_property
    def is_orientable(self) -> bool:
        """Some local orientation of the vertices kills every twist."""
        nv = len(self.vertices)
        bit: list[Optional[int]] = [None] * nv
        for root in range(nv):
            if bit[root] is not None:
                continue
            bit[root] = 0
            stack = [root]
            while stack:
                v = stack.pop()
                for d in self.vertices[v]:
                    w = self.vertex_of[self.alpha[d]]
                    want = bit[v] ^ int(self.twist[d])
                    if bit[w] is None:
                        bit[w] = want
                        stack.append(w)
                    elif bit[w] != want:
                        return False
        return True

    def __repr__(self):
        return (
            f"RibbonGraph(role={self.role}, darts={self.num_darts}, "
            f"V={len(self.vertices)}, E={self.num_darts // 2})"
        )


def make_graph(
    sigma: Sequence[int],
    alpha: Sequence[int],
    twisted_edges: Iterable[int] = (),
    vertex_colors: Optional[Sequence[Optional[str]]] = None,
    face_colors: Optional[Sequence[Optional[str]]] = None,
    role: str = "plain",
) -> RibbonGraph:
    """Assemble a graph; twists are named by either dart of the edge."""
    n = len(sigma)
    alpha = tuple(alpha)
    twist = [False] * n
    for d in twisted_edges:
        twist[d] = True
        twist[alpha[d]] = True
    nv = len(perm_cycles(tuple(sigma)))
    vc = tuple(vertex_colors) if vertex_colors is not None else (None,) * nv
    fc = tuple(face_colors) if face_colors is not None else None
    return RibbonGraph(tuple(sigma), alpha, tuple(twist), vc, fc, role)


# -- surface summary -------------------------------------------------------


@dataclass(frozen=True)
class FaceRecord:
    darts: tuple[int, ...]
    length: int
    color: Optional[str]


@dataclass(frozen=True)
class SurfaceSummary:
    """Cell counts and topology of the surface carrying the graph.

    ``genus`` is the orientable genus (euler = 2 - 2g) or the crosscap
    number (euler = 2 - c) depending on ``orientable``; it is ``None`` for
    disconnected graphs.  ``d_param`` is the integer d with b = 6d and
    w = 10d on colored dual graphs where those equations hold.
    """

    V: int
    E: int
    F: int
    euler: int
    orientable: bool
    connected: bool
    genus: Optional[int]
    faces: tuple[FaceRecord, ...]
    d_param: Optional[int]

    def length_profile(self) -> dict[int, int]:
        return dict(sorted(Counter(f.length for f in self.faces).items()))


def trace_faces(G: RibbonGraph) -> SurfaceSummary:
    """Trace the faces of ``G`` and summarize the underlying surface."""
    V = len(G.vertices)
    E = G.num_darts // 2
    cycles = G.faces
    F = len(cycles)
    euler = V - E + F
    orientable = G.is_orientable
    connected = G.is_connected
    genus: Optional[int]
    if not connected:
        genus = None
    elif orientable:
        genus = (2 - euler) // 2
    else:
        genus = 2 - euler
    records = tuple(
        FaceRecord(cyc, len(cyc), G.face_color[i] if G.face_color is not None else None)
        for i, cyc in enumerate(cycles)
    )
    d_param = None
    if G.role == "dual":
        b = sum(1 for c in G.vertex_color if c == BLACK)
        w = sum(1 for c in G.vertex_color if c == WHITE)
        if b and b % 6 == 0 and w == 10 * (b // 6):
            d_param = b // 6
    return SurfaceSummary(V, E, F, euler, orientable, connected, genus, records, d_param)


# -- pattern types and validation ------------------------------------------


@dataclass(frozen=True)
class PatternType:
    """Incidence type (k, l, n): black k-gons, white l-gons, every n-th
    edge of a white face on a black one.  m = l/n is the number of black
    neighbours of each white face."""

    k: int
    l: int
    n: int

    def __post_init__(self):
        if self.k < 3 or self.l < 3:
            raise ValueError("k and l must be at least 3")
        if self.n < 1 or self.l % self.n:
            raise ValueError("n must be a positive divisor of l")

    @property
    def m(self) -> int:
        return self.l // self.n


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[str, ...]


def validate(G: RibbonGraph, t: PatternType) -> ValidationReport:
    """Check a colored dual graph against a pattern type.

    Pattern inputs are dualized first.  Violations are collected, not
    raised; an uncolored vertex is the only hard error.
    """
    if G.role == "pattern":
        return validate(dual(G), t)
    if G.role != "dual":
        raise ValueError("validate needs a colored dual graph or a pattern")
    if any(c is None for c in G.vertex_color):
        raise ValueError("uncolored vertex")
    bad: list[str] = []
    for v, cyc in enumerate(G.vertices):
        heads = [G.vertex_color[G.vertex_of[G.alpha[d]]] for d in cyc]
        if G.vertex_color[v] == BLACK:
            if len(cyc) != t.k:
                bad.append(f"black vertex {v} has valence {len(cyc)}, expected k={t.k}")
            if any(h != WHITE for h in heads):
                bad.append(f"black vertex {v} has a non-white neighbour")
        else:
            if len(cyc) != t.l:
                bad.append(f"white vertex {v} has valence {len(cyc)}, expected l={t.l}")
                continue
            ok = any(
                all((heads[i] == BLACK) == ((i - o) % t.n == 0) for i in range(t.l))
                for o in range(t.n)
            )
            if not ok:
                bad.append(
                    f"white vertex {v}: no cyclic offset puts black neighbours "
                    f"at every {t.n}th position"
                )
    for i, cyc in enumerate(G.faces):
        if len(cyc) < 3:
            bad.append(f"face {i} has length {len(cyc)} < 3")
    return ValidationReport(not bad, tuple(bad))


@dataclass(frozen=True)
class CountsReport:
    b: int
    w: int
    e: int
    e1: int
    e2: int
    d: Optional[int]


def counts(G: RibbonGraph) -> CountsReport:
    """Vertex and edge counts of a colored dual graph.

    e1 counts white-white edges, e2 black-white edges; d is reported when
    b = 6d and w = 10d hold.
    """
    if G.role != "dual":
        raise ValueError("counts needs a colored dual graph")
    b = sum(1 for c in G.vertex_color if c == BLACK)
    w = sum(1 for c in G.vertex_color if c == WHITE)
    e1 = e2 = 0
    for d_, a in G.edges:
        cd = G.vertex_color[G.vertex_of[d_]]
        ca = G.vertex_color[G.vertex_of[a]]
        if cd == WHITE and ca == WHITE:
            e1 += 1
        elif cd != ca:
            e2 += 1
    dpar = b // 6 if b and b % 6 == 0 and w == 10 * (b // 6) else None
    return CountsReport(b, w, G.num_darts // 2, e1, e2, dpar)


# -- duality, reflection, recoloring ----------------------------------------


def dual(G: RibbonGraph) -> RibbonGraph:
    """Dual on the same dart set: sigma* = sigma∘alpha, alpha* = alpha.

    Vertex colors of the result are the face colors of ``G`` and vice
    versa; the role toggles pattern <-> dual.  An exact involution.
    """
    if any(G.twist):
        raise ValueError("duality implemented for orientable maps only")
    n = G.num_darts
    sigma2 = tuple(G.sigma[G.alpha[d]] for d in range(n))
    role2 = {"pattern": "dual", "dual": "pattern", "plain": "plain"}[G.role]
    vc2 = G.face_color if G.face_color is not None else (None,) * len(G.faces)
    fc2 = G.vertex_color if any(c is not None for c in G.vertex_color) else None
    if role2 != "pattern":
        fc2 = None
    if role2 == "plain":
        vc2 = (None,) * len(G.faces)
    return RibbonGraph(sigma2, G.alpha, G.twist, vc2, fc2, role2)


def reflect(G: RibbonGraph) -> RibbonGraph:
    """Mirror image: sigma replaced by its inverse, twists kept.

    Face colors follow the faces: the reflected face through alpha(d)
    inherits the color of the face through d.
    """
    sigma2 = perm_invert(G.sigma)
    fc2 = None
    if G.face_color is not None:
        if any(G.twist):
            raise ValueError("reflect with face colors needs all twists false")
        # faces of the mirror are the alpha-images of the original faces
        mirror_faces = perm_cycles(tuple(sigma2[G.alpha[d]] for d in range(G.num_darts)))
        fc_list = []
        for cyc in mirror_faces:
            orig = G.face_of[G.alpha[cyc[0]]]
            fc_list.append(G.face_color[orig])
        fc2 = tuple(fc_list)
    return RibbonGraph(sigma2, G.alpha, G.twist, G.vertex_color, fc2, G.role)


def swap_colors(G: RibbonGraph) -> RibbonGraph:
    """Exchange black and white on whichever coloring the graph carries."""
    flip = lambda c: None if c is None else other_color(c)
    vc = tuple(flip(c) for c in G.vertex_color)
    fc = tuple(flip(c) for c in G.face_color) if G.face_color is not None else None
    return RibbonGraph(G.sigma, G.alpha, G.twist, vc, fc, G.role)


def strip_colors(G: RibbonGraph) -> RibbonGraph:
    """Forget all colors, returning a plain map."""
    vc = (None,) * len(G.vertices)
    return RibbonGraph(G.sigma, G.alpha, G.twist, vc, None, "plain")


def with_face_colors(G: RibbonGraph, colors: Mapping[int, str]) -> RibbonGraph:
    """Turn a plain map into a pattern by coloring faces (trace order)."""
    if G.role != "plain":
        raise ValueError("face colors are assigned to plain maps")
    fc = tuple(colors.get(i) for i in range(len(G.faces)))
    if any(c is None for c in fc):
        missing = [i for i, c in enumerate(fc) if c is None]
        raise ValueError(f"faces without a color: {missing}")
    return RibbonGraph(G.sigma, G.alpha, G.twist, G.vertex_color, fc, "pattern")


def relabel(G: RibbonGraph, p: Sequence[int]) -> RibbonGraph:
    """Rename darts by the permutation ``p`` (old dart d becomes p[d])."""
    n = G.num_darts
    if len(p) != n or not perm_check(p):
        raise ValueError("relabeling must be a permutation of the darts")
    sigma2 = [0] * n
    alpha2 = [0] * n
    twist2 = [False] * n
    for d in range(n):
        sigma2[p[d]] = p[G.sigma[d]]
        alpha2[p[d]] = p[G.alpha[d]]
        twist2[p[d]] = G.twist[d]
    pinv = perm_invert(tuple(p))
    H = RibbonGraph(
        tuple(sigma2),
        tuple(alpha2),
        tuple(twist2),
        (None,) * len(G.vertices),
        None,
        "plain",
    )
    vc2 = tuple(G.vertex_color[G.vertex_of[pinv[cyc[0]]]] for cyc in H.vertices)
    fc2 = None
    if G.face_color is not None:
        fc2 = tuple(G.face_color[G.face_of[pinv[cyc[0]]]] for cyc in H.faces)
    return RibbonGraph(H.sigma, H.alpha, H.twist, vc2, fc2, G.role)


# -- builders ---------------------------------------------------------------


def map_from_faces(face_cycles: Sequence[Sequence[Hashable]]) -> RibbonGraph:
    """Build the oriented map whose faces are the given vertex cycles.

    Each cycle lists the vertices of one face boundary, consistently
    oriented, so every directed edge (u, v) must occur exactly once over
    all cycles.  Loops and parallel edges cannot be expressed this way.
    Darts are numbered in cycle listing order; faces of the result are
    exactly the input cycles.
    """
    dart_of: dict[tuple[Hashable, Hashable], int] = {}
    darts: list[tuple[Hashable, Hashable]] = []
    for cyc in face_cycles:
        if len(cyc) < 2:
            raise ValueError("face cycles need at least two vertices")
        for i, u in enumerate(cyc):
            v = cyc[(i + 1) % len(cyc)]
            if u == v:
                raise ValueError(f"loop at {u!r} not supported by the face builder")
            if (u, v) in dart_of:
                raise ValueError(f"directed edge {u!r}->{v!r} appears twice")
            dart_of[(u, v)] = len(darts)
            darts.append((u, v))
    n = len(darts)
    alpha = [0] * n
    for (u, v), d in dart_of.items():
        rev = dart_of.get((v, u))
        if rev is None:
            raise ValueError(f"directed edge {v!r}->{u!r} missing: inconsistent orientation")
        alpha[d] = rev
    phi = [0] * n
    pos = 0
    for cyc in face_cycles:
        k = len(cyc)
        for i in range(k):
            phi[pos + i] = pos + (i + 1) % k
        pos += k
    sigma = tuple(phi[alpha[d]] for d in range(n))
    return make_graph(sigma, alpha)


def pattern_from_faces(
    colored_faces: Sequence[tuple[Sequence[Hashable], str]]
) -> RibbonGraph:
    """Build a pattern from consistently oriented (face cycle, color) pairs."""
    G = map_from_faces([cyc for cyc, _ in colored_faces])
    color_of_dart: dict[int, str] = {}
    pos = 0
    for cyc, color in colored_faces:
        for i in range(len(cyc)):
            color_of_dart[pos + i] = color
        pos += len(cyc)
    colors = {i: color_of_dart[cyc[0]] for i, cyc in enumerate(G.faces)}
    return with_face_colors(G, colors)


# -- medial and truncation ---------------------------------------------------


def medial(G: RibbonGraph) -> RibbonGraph:
    """Medial map: a 4-valent vertex per edge, an edge per corner of ``G``.

    Faces split into two classes, one per face of ``G`` and one per
    vertex; the class made of the smaller polygons is painted black (ties
    go to the vertex class), giving a pattern whose every edge separates
    the two colors.
    """
    if G.role != "plain":
        raise ValueError("medial operates on plain maps")
    if any(G.twist):
        raise ValueError("medial needs an orientable map with no twists")
    n = G.num_darts
    sigma2 = [0] * (2 * n)
    alpha2 = [0] * (2 * n)
    for d in range(n):
        # darts of the medial: 2d sits on the corner edge after d,
        # 2d+1 on the corner edge before d, both at the vertex of edge(d)
        sigma2[2 * d] = 2 * d + 1
        sigma2[2 * d + 1] = 2 * G.alpha[d]
        alpha2[2 * d] = 2 * G.sigma[d] + 1
        alpha2[2 * G.sigma[d] + 1] = 2 * d
    M = make_graph(sigma2, alpha2)
    max_valence = max(len(c) for c in G.vertices)
    min_face = min(len(c) for c in G.faces)
    vertex_class = BLACK if max_valence <= min_face else WHITE
    colors = {}
    for i, cyc in enumerate(M.faces):
        from_vertex = cyc[0] & 1
        colors[i] = vertex_class if from_vertex else other_color(vertex_class)
    return with_face_colors(M, colors)


def truncate(G: RibbonGraph, S: Iterable[int]) -> RibbonGraph:
    """Cut the vertices in ``S``, each becoming a black face of its valence.

    Every dart d with tail in S is replaced by a 3-valent vertex carrying
    the corner edge towards sigma^{-1}(d), the original edge, and the
    corner edge towards sigma(d).  Untouched faces turn white.
    """
    if G.role != "plain":
        raise ValueError("truncate operates on plain maps")
    if any(G.twist):
        raise ValueError("truncate needs an orientable map with no twists")
    S = set(S)
    for v in S:
        if not 0 <= v < len(G.vertices):
            raise ValueError(f"no vertex {v}")
        if len(G.vertices[v]) < 3:
            raise ValueError(f"vertex {v} has valence {len(G.vertices[v])} < 3")
    n = G.num_darts
    cut = [G.vertex_of[d] in S for d in range(n)]
    # corner darts: n + 2i heads towards sigma(d_i), n + 2i + 1 back from it
    cut_darts = [d for d in range(n) if cut[d]]
    idx = {d: i for i, d in enumerate(cut_darts)}
    total = n + 2 * len(cut_darts)
    sigma2 = [0] * total
    alpha2 = [0] * total
    for d in range(n):
        if cut[d]:
            nd = n + 2 * idx[d]
            pd = nd + 1
            sigma2[d] = nd
            sigma2[nd] = pd
            sigma2[pd] = d
            alpha2[nd] = n + 2 * idx[G.sigma[d]] + 1
            alpha2[n + 2 * idx[G.sigma[d]] + 1] = nd
        else:
            sigma2[d] = G.sigma[d]
        alpha2[d] = G.alpha[d]
    T = make_graph(sigma2, alpha2)
    colors = {}
    for i, cyc in enumerate(T.faces):
        is_polygon = all(d >= n and (d - n) % 2 == 1 for d in cyc)
        colors[i] = BLACK if is_polygon else WHITE
    return with_face_colors(T, colors)


# -- isomorphism and canonical forms -----------------------------------------


def _dart_invariants(G: RibbonGraph) -> tuple[tuple[int, int, int], ...]:
    fc = G.face_color
    out = []
    for d in range(G.num_darts):
        v = _COLOR_CODE[G.vertex_color[G.vertex_of[d]]]
        f = _COLOR_CODE[fc[G.face_of[d]]] if fc is not None else 0
        out.append((int(G.twist[d]), v, f))
    return tuple(out)


def _bfs_order(G: RibbonGraph, root: int) -> tuple[list[int], list[int]]:
    """Deterministic traversal order from a root dart, with positions."""
    n = G.num_darts
    pos = [-1] * n
    order = [root]
    pos[root] = 0
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for nxt in (G.alpha[d], G.sigma[d]):
            if pos[nxt] < 0:
                pos[nxt] = len(order)
                order.append(nxt)
    return order, pos


def _code_from_root(G, root, inv):
    order, pos = _bfs_order(G, root)
    code = []
    for d in order:
        code.append((pos[G.sigma[d]], pos[G.alpha[d]]) + inv[d])
    return tuple(code), order


def _canonical(G: RibbonGraph) -> tuple[tuple, list[int]]:
    if not G.is_connected:
        raise ValueError("canonical form needs a connected graph")
    inv = _dart_invariants(G)
    best_code = None
    best_order = None
    for root in range(G.num_darts):
        code, order = _code_from_root(G, root, inv)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return best_code, best_order


def canonical_form(G: RibbonGraph) -> bytes:
    """Byte certificate: equal certificates iff isomorphic (colors, twists
    and chirality included; mirror images are not identified)."""
    code, _ = _canonical(G)
    return repr((G.role, code)).encode()


def is_isomorphic(G: RibbonGraph, H: RibbonGraph) -> Optional[tuple[int, ...]]:
    """A color, sigma, alpha and twist preserving dart bijection, or None."""
    if not G.is_connected or not H.is_connected:
        raise ValueError("isomorphism test needs connected graphs")
    if G.num_darts != H.num_darts or G.role != H.role:
        return None
    if sorted(map(len, G.vertices)) != sorted(map(len, H.vertices)):
        return None
    cg, og = _canonical(G)
    ch, oh = _canonical(H)
    if cg != ch:
        return None
    f = [0] * G.num_darts
    for j in range(G.num_darts):
        f[og[j]] = oh[j]
    for d in range(G.num_darts):
        assert f[G.sigma[d]] == H.sigma[f[d]] and f[G.alpha[d]] == H.alpha[f[d]]
    return tuple(f)
