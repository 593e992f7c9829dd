"""Covering maps between ribbon graphs and permutation voltage lifts.

A covering map is a dart-level morphism commuting with alpha and, up to a
local orientation sign per source vertex, with sigma.  On graphs without
twists the sign is constantly + and the conditions reduce to plain
equivariance.  Branching lives entirely on faces: a source face of length
L over a target face of length L0 wraps with branch order L/L0, and the
orders always satisfy Riemann-Hurwitz,

    euler(source) = degree * euler(target) - sum(order - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Mapping, Optional, Sequence

from .permutation import perm_cycles, perm_invert, random_perm
from .rgcore import RibbonGraph, trace_faces


@dataclass(frozen=True)
class CoveringMap:
    source: RibbonGraph
    target: RibbonGraph
    dart_map: tuple[int, ...]
    degree: int
    # per source face: (target face index, branch order)
    branch_report: tuple[tuple[int, int], ...]


def _vertex_signs(c: CoveringMap) -> Optional[tuple[int, ...]]:
    """Per source vertex: 0 if the map matches sigma, 1 for sigma^{-1}."""
    src, tgt, f = c.source, c.target, c.dart_map
    tgt_sigma_inv = perm_invert(tgt.sigma)
    signs = []
    for cyc in src.vertices:
        if all(f[src.sigma[d]] == tgt.sigma[f[d]] for d in cyc):
            signs.append(0)
        elif all(f[src.sigma[d]] == tgt_sigma_inv[f[d]] for d in cyc):
            signs.append(1)
        else:
            return None
    return tuple(signs)


def covering_from_dart_map(
    source: RibbonGraph, target: RibbonGraph, dart_map: Sequence[int]
) -> CoveringMap:
    """Package a dart map as a covering, computing degree and branch orders.

    Raises ``ValueError`` if the map is not alpha-equivariant, wraps a
    vertex (valence mismatch) or has uneven fibers.
    """
    f = tuple(dart_map)
    ns, nt = source.num_darts, target.num_darts
    if len(f) != ns or any(not 0 <= x < nt for x in f):
        raise ValueError("dart map must send every source dart to a target dart")
    if ns % nt:
        raise ValueError("source dart count is not a multiple of the target's")
    degree = ns // nt
    fiber = [0] * nt
    for x in f:
        fiber[x] += 1
    if any(count != degree for count in fiber):
        raise ValueError("dart fibers are not all of the covering degree")
    for d in range(ns):
        if f[source.alpha[d]] != target.alpha[f[d]]:
            raise ValueError(f"alpha equivariance fails at dart {d}")
    if _vertex_signs(CoveringMap(source, target, f, degree, ())) is None:
        raise ValueError("sigma equivariance fails at some vertex")
    for v, cyc in enumerate(source.vertices):
        if len(cyc) != len(target.vertices[target.vertex_of[f[cyc[0]]]]):
            raise ValueError(f"vertex {v} wraps over its image (valence mismatch)")
    report = []
    tgt_len = [len(cyc) for cyc in target.faces]
    for cyc in source.faces:
        tface = target.face_of[f[cyc[0]]]
        if len(cyc) % tgt_len[tface]:
            raise ValueError("face length not a multiple of its image's length")
        report.append((tface, len(cyc) // tgt_len[tface]))
    return CoveringMap(source, target, f, degree, tuple(report))


def find_covering(G: RibbonGraph, H: RibbonGraph) -> Optional[CoveringMap]:
    """Search for a covering of ``H`` by ``G``; None if there is none.

    Both graphs must be connected, orientable (no twists) and carry total
    vertex colorings.  An equivariant map of connected graphs is fixed by
    the image of one dart, so all |darts(H)| seeds are tried in order and
    the first consistent one is returned.
    """
    for graph, name in ((G, "source"), (H, "target")):
        if not graph.is_connected:
            raise ValueError(f"{name} graph is disconnected")
        if any(graph.twist):
            raise ValueError(f"{name} graph carries twists; covers need orientable input")
        if any(c is None for c in graph.vertex_color):
            raise ValueError(f"{name} graph is not totally colored")
    ns, nt = G.num_darts, H.num_darts
    if ns % nt:
        return None
    for seed in range(nt):
        f = [-1] * ns
        f[0] = seed
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            if G.vertex_color[G.vertex_of[d]] != H.vertex_color[H.vertex_of[f[d]]]:
                ok = False
                break
            for nxt, img in ((G.sigma[d], H.sigma[f[d]]), (G.alpha[d], H.alpha[f[d]])):
                if f[nxt] < 0:
                    f[nxt] = img
                    stack.append(nxt)
                elif f[nxt] != img:
                    ok = False
                    break
        if not ok:
            continue
        try:
            return covering_from_dart_map(G, H, tuple(f))
        except ValueError:
            continue
    return None


@dataclass(frozen=True)
class CoverReport:
    passed: bool
    checks: tuple[tuple[str, bool, str], ...]


def verify_covering(c: CoveringMap) -> CoverReport:
    """Itemized check of every covering map invariant."""
    src, tgt, f = c.source, c.target, c.dart_map
    checks: list[tuple[str, bool, str]] = []

    def add(name: str, ok: bool, detail: str = ""):
        checks.append((name, ok, detail))

    ns, nt = src.num_darts, tgt.num_darts
    total = len(f) == ns and all(0 <= x < nt for x in f)
    add("total dart map", total, f"{len(f)} darts mapped")
    if not total:
        return CoverReport(False, tuple(checks))

    fiber = [0] * nt
    for x in f:
        fiber[x] += 1
    add(
        "fibers of size degree",
        all(cnt == c.degree for cnt in fiber),
        f"degree {c.degree}",
    )
    add(
        "alpha equivariance",
        all(f[src.alpha[d]] == tgt.alpha[f[d]] for d in range(ns)),
    )
    signs = _vertex_signs(c)
    add("sigma equivariance up to local orientation", signs is not None)
    if signs is not None:
        ok = True
        for d in range(ns):
            s1 = signs[src.vertex_of[d]]
            s2 = signs[src.vertex_of[src.alpha[d]]]
            if (s1 ^ s2) != (src.twist[d] ^ tgt.twist[f[d]]):
                ok = False
                break
        add("twist compatibility", ok)
    add(
        "colors preserved",
        all(
            src.vertex_color[src.vertex_of[d]] == tgt.vertex_color[tgt.vertex_of[f[d]]]
            for d in range(ns)
        ),
    )
    add(
        "valences preserved",
        all(
            len(cyc) == len(tgt.vertices[tgt.vertex_of[f[cyc[0]]]])
            for cyc in src.vertices
        ),
    )
    tgt_len = [len(cyc) for cyc in tgt.faces]
    branch_ok = len(c.branch_report) == len(src.faces)
    rh_sum = 0
    if branch_ok:
        for i, cyc in enumerate(src.faces):
            tface, order = c.branch_report[i]
            if tgt.face_of[f[cyc[0]]] != tface or len(cyc) != order * tgt_len[tface]:
                branch_ok = False
                break
            rh_sum += order - 1
    add("branch report matches face lengths", branch_ok)
    if branch_ok:
        chi_src = trace_faces(src).euler
        chi_tgt = trace_faces(tgt).euler
        add(
            "Riemann-Hurwitz",
            chi_src == c.degree * chi_tgt - rh_sum,
            f"{chi_src} = {c.degree}*{chi_tgt} - {rh_sum}",
        )
    return CoverReport(all(ok for _, ok, _ in checks), tuple(checks))


def compose_coverings(outer: CoveringMap, inner: CoveringMap) -> CoveringMap:
    """Composite covering: inner maps G -> H, outer maps H -> K."""
    if inner.target is not outer.source and inner.target != outer.source:
        raise ValueError("coverings do not compose: middle graphs differ")
    f = tuple(outer.dart_map[inner.dart_map[d]] for d in range(inner.source.num_darts))
    return covering_from_dart_map(inner.source, outer.target, f)


# -- permutation voltage lifts ------------------------------------------------


def edge_voltages(G: RibbonGraph, per_edge: Mapping[int, Sequence[int]], D: int):
    """Expand a per-edge assignment (keyed by either dart) to all darts."""
    volt: dict[int, tuple[int, ...]] = {}
    identity = tuple(range(D))
    for d, a in G.edges:
        p = tuple(per_edge.get(d, per_edge.get(a, identity)))
        volt[d] = p
        volt[a] = perm_invert(p)
    return volt


def random_voltages(G: RibbonGraph, D: int, seed: int):
    """Seeded uniform voltages, one permutation of 1..D per edge."""
    rng = Random(seed)
    per_edge = {d: random_perm(rng, D) for d, _ in G.edges}
    return edge_voltages(G, per_edge, D)


def voltage_lift(
    G: RibbonGraph, D: int, volt: Mapping[int, Sequence[int]]
) -> list[tuple[RibbonGraph, CoveringMap]]:
    """Degree D permutation voltage lift, split into connected components.

    Darts of the lift are (d, i); sigma keeps the sheet, alpha jumps by the
    voltage of the dart.  Each component comes with its covering onto G.
    """
    if any(G.twist):
        raise ValueError("voltage lifts need an orientable base with no twists")
    n = G.num_darts
    for d in range(n):
        if d not in volt:
            raise ValueError(f"no voltage on dart {d}")
        p = tuple(volt[d])
        if sorted(p) != list(range(D)):
            raise ValueError(f"voltage on dart {d} is not a permutation of 0..{D - 1}")
        if tuple(volt[G.alpha[d]]) != perm_invert(p):
            raise ValueError(f"voltages on edge {min(d, G.alpha[d])} are not inverse")
    sigma2 = [0] * (n * D)
    alpha2 = [0] * (n * D)
    for d in range(n):
        vd = volt[d]
        for i in range(D):
            x = d * D + i
            sigma2[x] = G.sigma[d] * D + i
            alpha2[x] = G.alpha[d] * D + vd[i]
    # split into components
    comp = [-1] * (n * D)
    roots = []
    for start in range(n * D):
        if comp[start] >= 0:
            continue
        cid = len(roots)
        roots.append(start)
        stack = [start]
        comp[start] = cid
        while stack:
            x = stack.pop()
            for y in (sigma2[x], alpha2[x]):
                if comp[y] < 0:
                    comp[y] = cid
                    stack.append(y)
    out = []
    for cid in range(len(roots)):
        darts = [x for x in range(n * D) if comp[x] == cid]
        local = {x: i for i, x in enumerate(darts)}
        m = len(darts)
        s2 = tuple(local[sigma2[x]] for x in darts)
        a2 = tuple(local[alpha2[x]] for x in darts)
        vc = tuple(
            G.vertex_color[G.vertex_of[darts[cyc[0]] // D]] for cyc in perm_cycles(s2)
        )
        role = G.role if G.role == "dual" else "plain"
        lifted = RibbonGraph(s2, a2, (False,) * m, vc, None, role)
        dart_map = tuple(x // D for x in darts)
        out.append((lifted, covering_from_dart_map(lifted, G, dart_map)))
    return out
