"""Permutations on darts, stored as tuples mapping position i to image p[i]."""

from __future__ import annotations

from typing import Iterable, Sequence


def perm_check(p: Sequence[int]) -> bool:
    """True if ``p`` is a permutation of 0..len(p)-1."""
    n = len(p)
    seen = [False] * n
    for x in p:
        if not isinstance(x, int) or not 0 <= x < n or seen[x]:
            return False
        seen[x] = True
    return True


def perm_invert(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Functional composition p after q: i -> p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def perm_cycles(p: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Cycles of ``p`` sorted by minimal element, each written from its minimum."""
    n = len(p)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return tuple(out)


def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> tuple[int, ...]:
    p = list(range(n))
    for cyc in cycles:
        m = len(cyc)
        for i in range(m):
            p[cyc[i]] = cyc[(i + 1) % m]
    if not perm_check(p):
        raise ValueError("cycles overlap or leave the ground set")
    return tuple(p)


def perm_order(p: Sequence[int]) -> int:
    from math import lcm

    return lcm(*(len(c) for c in perm_cycles(p))) if p else 1


def orbit(gens: Sequence[Sequence[int]], start: int) -> set[int]:
    """Orbit of a point under a list of permutations."""
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def perms_transitive(gens: Sequence[Sequence[int]], n: int) -> bool:
    return n == 0 or len(orbit(gens, 0)) == n


def mulclose(gens: Iterable[tuple[int, ...]], maxsize: int | None = None) -> set[tuple[int, ...]]:
    """Close a generating set of permutations under composition.

    Returns the full group element set; raises ``ValueError`` once the
    closure exceeds ``maxsize``.
    """
    gens = [tuple(g) for g in gens]
    els: set[tuple[int, ...]] = set(gens)
    bdy = list(els)
    while bdy:
        new = []
        for a in gens:
            for b in bdy:
                c = perm_compose(a, b)
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if maxsize is not None and len(els) > maxsize:
                        raise ValueError(f"group closure exceeds cap {maxsize}")
        bdy = new
    return els


def random_perm(rng, n: int) -> tuple[int, ...]:
    """Uniform random permutation using an RNG with a ``shuffle`` method."""
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)
