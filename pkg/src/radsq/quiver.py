"""Quivers stored as arrow-multiplicity matrices, plus the structural predicates
of the Ext-quiver dictionary for radical square zero algebras ``kQ/J^2``.

``adj[i][j]`` is the number of arrows ``i -> j``, which for ``kQ/J^2`` equals
``dim Ext^1(S(i), S(j))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ParseError, UsageError

Arrow = tuple[int, int, int]  # (source, target, index among parallel arrows)


@dataclass(frozen=True)
class Quiver:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a quiver needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n or any(len(row) != self.n for row in self.adj):
            raise ValueError("adjacency matrix must be n x n")
        for i, row in enumerate(self.adj):
            for j, a in enumerate(row):
                if a < 0:
                    raise ValueError(f"negative arrow count at ({i}, {j})")

    @classmethod
    def from_matrix(cls, adj: Iterable[Iterable[int]]) -> "Quiver":
        rows = tuple(tuple(int(a) for a in row) for row in adj)
        return cls(len(rows), rows)

    # cached_property needs a __dict__; frozen dataclasses keep one.
    @cached_property
    def arrows(self) -> tuple[Arrow, ...]:
        """All arrows in the canonical order: source-major, then target, then index."""
        return tuple(
            (i, j, k)
            for i in range(self.n)
            for j in range(self.n)
            for k in range(self.adj[i][j])
        )

    @cached_property
    def arrow_position(self) -> dict[Arrow, int]:
        return {a: pos for pos, a in enumerate(self.arrows)}

    def row(self, i: int) -> tuple[int, ...]:
        return self.adj[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.adj[i][j] for i in range(self.n))

    def out_degree(self, i: int) -> int:
        return sum(self.adj[i])

    def in_degree(self, j: int) -> int:
        return sum(self.adj[i][j] for i in range(self.n))

    @property
    def arrow_count(self) -> int:
        return sum(map(sum, self.adj))

    def to_text(self) -> str:
        lines = [str(self.n)] + [" ".join(map(str, row)) for row in self.adj]
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.adj) + "]"


@dataclass(frozen=True)
class DeltaShape:
    """Detected ``Delta(n, t)`` shape.

    ``labels[k]`` is the original vertex playing the role of canonical vertex
    ``k``; canonical ``n-1`` carries the bundle of ``m`` arrows back to ``0``.
    """

    n: int
    m: int
    t: int
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.m < 1 or self.t != self.m * self.m:
            raise ValueError(f"invalid Delta shape m={self.m}, t={self.t}")

    @property
    def vertex0(self) -> int:
        return self.labels[0]

    @property
    def last(self) -> int:
        return self.labels[-1]


def parse_quiver(text: str) -> Quiver:
    """Parse the quiver file format: ``n`` on the first content line, then ``n``
    rows of ``n`` non-negative integers. Lines starting with ``#`` are skipped."""
    lines = [
        (lineno, raw)
        for lineno, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing header (vertex count)", line=1)
    header_line, header = lines[0]
    try:
        n = int(header.strip())
    except ValueError:
        raise ParseError(f"malformed header {header.strip()!r}", header_line, 1) from None
    if n < 1:
        raise ParseError(f"vertex count must be >= 1, got {n}", header_line, 1)
    body = lines[1:]
    if len(body) != n:
        last = body[-1][0] if body else header_line
        raise ParseError(f"expected {n} rows, found {len(body)}", last)

    rows = []
    for r, (lineno, raw) in enumerate(body):
        tokens = raw.split()
        if len(tokens) != n:
            raise ParseError(f"row {r} has {len(tokens)} entries, expected {n}", lineno)
        row = []
        for c, tok in enumerate(tokens):
            try:
                value = int(tok)
            except ValueError:
                raise ParseError(f"non-numeric entry {tok!r} at row {r}", lineno, c + 1) from None
            if value < 0:
                raise ParseError(f"negative entry {value} at row {r}", lineno, c + 1)
            row.append(value)
        rows.append(tuple(row))
    return Quiver(n, tuple(rows))


def is_connected(q: Quiver) -> bool:
    """Weak connectivity of the underlying undirected multigraph."""
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(q.n):
            if w not in seen and (q.adj[v][w] or q.adj[w][v]):
                seen.add(w)
                stack.append(w)
    return len(seen) == q.n


def sinks(q: Quiver) -> frozenset[int]:
    """Vertices with no outgoing arrow; exactly the projective simples."""
    return frozenset(i for i in range(q.n) if q.out_degree(i) == 0)


def sources(q: Quiver) -> frozenset[int]:
    """Vertices with no incoming arrow; exactly the injective simples."""
    return frozenset(j for j in range(q.n) if q.in_degree(j) == 0)


def opposite(q: Quiver) -> Quiver:
    return Quiver(q.n, tuple(q.col(j) for j in range(q.n)))


def permute(q: Quiver, perm: Sequence[int]) -> Quiver:
    """Relabel vertices: old vertex ``v`` becomes ``perm[v]``."""
    new = [[0] * q.n for _ in range(q.n)]
    for i in range(q.n):
        for j in range(q.n):
            new[perm[i]][perm[j]] = q.adj[i][j]
    return Quiver.from_matrix(new)


def delta_quiver(n: int, m: int) -> Quiver:
    """Oriented ``n``-cycle ``0 -> 1 -> ... -> n-1`` whose closing step ``n-1 -> 0``
    is a bundle of ``m`` parallel arrows (``n + m - 1`` arrows in total)."""
    if n < 1 or m < 1:
        raise UsageError(f"delta_quiver needs n >= 1 and m >= 1, got ({n}, {m})")
    adj = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        adj[i][i + 1] = 1
    adj[n - 1][0] += m
    return Quiver.from_matrix(adj)


def _unique_successor(q: Quiver, i: int) -> int | None:
    targets = [j for j in range(q.n) if q.adj[i][j]]
    return targets[0] if len(targets) == 1 else None


def detect_delta_shape(q: Quiver) -> DeltaShape | None:
    """Return the ``Delta(n, m^2)`` shape of ``q`` or ``None``.

    Every vertex must have a single successor, reached by one arrow except at
    most one vertex whose bundle has ``m > 1`` arrows; following successors must
    run through all vertices once.
    """
    succ = [_unique_successor(q, i) for i in range(q.n)]
    if any(s is None for s in succ):
        return None
    heavy = [i for i in range(q.n) if q.adj[i][succ[i]] > 1]
    if len(heavy) > 1:
        return None
    if heavy:
        last = heavy[0]
        start = succ[last]
    else:
        start = 0
    labels = [start]
    v = start
    for _ in range(q.n - 1):
        v = succ[v]
        if v in labels:
            return None
        labels.append(v)
    if succ[labels[-1]] != start:
        return None
    m = q.adj[labels[-1]][start]
    return DeltaShape(q.n, m, m * m, tuple(labels))


def is_self_injective(q: Quiver) -> bool:
    """``Gamma = Delta(n, 1)``: a single oriented cycle with simple arrows.

    The semisimple one-vertex quiver ``[[0]]`` is reported by ``is_simple_ring``
    and is not flagged here.
    """
    shape = detect_delta_shape(q)
    return shape is not None and shape.t == 1


def is_simple_ring(q: Quiver) -> bool:
    return q.n == 1 and q.adj[0][0] == 0


def proj_is_injective(q: Quiver, T: int) -> bool:
    """``P(T)`` is injective iff ``T`` has exactly one outgoing arrow ``T -> S``
    and that arrow is also the only one ending in ``S``."""
    if q.out_degree(T) != 1:
        return False
    S = next(j for j in range(q.n) if q.adj[T][j])
    return q.in_degree(S) == 1


def arrow_value(q: Quiver, i: int, j: int) -> tuple[int, int]:
    """``(a, b)`` for an arrow ``i -> j``: ``a`` is the length of soc P(i) and
    ``b`` the length of I(j)/soc. The arrow value is ``a * b``."""
    if q.adj[i][j] == 0:
        raise UsageError(f"no arrow {i} -> {j}")
    return q.out_degree(i), q.in_degree(j)
