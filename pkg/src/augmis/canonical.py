"""Canonical byte codes for small, optionally vertex-coloured graphs.

The certificate is the minimum adjacency encoding over the leaves of an
individualisation-refinement tree: start from the equitable refinement
of the (colour, degree) partition, split the first non-singleton cell by
individualising each of its vertices in turn (skipping pairwise twins,
which are swapped by an automorphism), refine again, and recurse.  Each
leaf is a discrete partition, i.e. a vertex ordering; its code packs the
colour sequence and the upper-triangular adjacency bits of the reordered
graph.  Two graphs get the same code exactly when a colour-preserving
isomorphism exists, and every code decodes back to a representative, so
codes double as dictionary keys for isomorphism-free enumeration.

Cell indices only ever split monotonically (refinement keys sort by old
class first), so the colour blocks keep their relative order and the
colour sequence of every leaf is simply ``sorted(colours)``.
"""

from __future__ import annotations

from typing import Optional, Sequence

__all__ = ["canon_code", "decode_code", "MAX_CANON_VERTICES"]

MAX_CANON_VERTICES = 32


def _rank(keys: list) -> list[int]:
    lookup = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [lookup[k] for k in keys]


def _refine(n: int, nbrs: list[tuple[int, ...]], classes: list[int]) -> list[int]:
    while True:
        keys = [
            (classes[v], tuple(sorted(classes[u] for u in nbrs[v])))
            for v in range(n)
        ]
        new = _rank(keys)
        if new == classes:
            return classes
        classes = new


def canon_code(
    n: int, adj: Sequence[int], colors: Optional[Sequence[int]] = None
) -> bytes:
    """Canonical certificate of a graph given as adjacency bitmasks."""
    if n > MAX_CANON_VERTICES:
        raise ValueError(f"canonical codes support at most {MAX_CANON_VERTICES} vertices")
    if n == 0:
        return b"\x00"
    cols = tuple(colors) if colors is not None else (0,) * n
    nbrs = []
    for v in range(n):
        m = adj[v]
        row = []
        while m:
            low = m & -m
            row.append(low.bit_length() - 1)
            m ^= low
        nbrs.append(tuple(row))
    classes = _rank([(cols[v], len(nbrs[v])) for v in range(n)])
    classes = _refine(n, nbrs, classes)

    best: Optional[tuple[int, ...]] = None

    def leaf(classes: list[int]) -> None:
        nonlocal best
        order = sorted(range(n), key=classes.__getitem__)
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for i, v in enumerate(order):
            r = 0
            for u in nbrs[v]:
                j = pos[u]
                if j < i:
                    r |= 1 << j
            rows.append(r)
        cand = tuple(rows)
        if best is None or cand < best:
            best = cand

    def descend(classes: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(classes[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            leaf(classes)
            return
        tried: list[int] = []
        for v in cells[target]:
            twin = False
            for u in tried:
                if adj[v] & ~(1 << u) == adj[u] & ~(1 << v):
                    twin = True
                    break
            if twin:
                continue
            tried.append(v)
            forced = _rank(
                [(classes[u], 0 if u == v else 1) for u in range(n)]
            )
            descend(_refine(n, nbrs, forced))

    descend(classes)
    assert best is not None
    return _pack(n, sorted(cols), best)


def _pack(n: int, ordered_cols: list[int], rows: tuple[int, ...]) -> bytes:
    out = bytearray([n])
    col_bytes = bytearray((n + 7) // 8)
    for i, c in enumerate(ordered_cols):
        if c:
            col_bytes[i // 8] |= 1 << (i % 8)
    out += col_bytes
    nbits = n * (n - 1) // 2
    tri = bytearray((nbits + 7) // 8)
    for i in range(n):
        base = i * (i - 1) // 2
        r = rows[i]
        while r:
            low = r & -r
            j = low.bit_length() - 1
            r ^= low
            k = base + j
            tri[k // 8] |= 1 << (k % 8)
    out += tri
    return bytes(out)


def decode_code(code: bytes) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Inverse of canon_code: (n, adjacency masks, colours)."""
    n = code[0]
    ncol = (n + 7) // 8
    cols = tuple(
        (code[1 + i // 8] >> (i % 8)) & 1 for i in range(n)
    )
    tri = code[1 + ncol:]
    masks = [0] * n
    for i in range(n):
        base = i * (i - 1) // 2
        for j in range(i):
            k = base + j
            if (tri[k // 8] >> (k % 8)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return n, tuple(masks), cols
