"""Integer syzygy calculus for simples over ``kQ/J^2`` and the theorem-level
predicates built on it.

Every syzygy over a radical square zero algebra is semisimple, so modules
here are multiplicity vectors ``v`` (``v[j]`` copies of ``S(j)``) and
``Omega S(j) = rad P(j)`` is read off row ``j`` of the adjacency matrix.
Nothing in this module depends on the base field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import TheoremViolation, UsageError
from .quiver import (
    Quiver,
    detect_delta_shape,
    is_connected,
    is_self_injective,
    is_simple_ring,
    proj_is_injective,
    sinks,
)

SimpleVector = tuple[int, ...]


@dataclass(frozen=True)
class ExtProfile:
    """``dims[i] = dim Ext^i(S(vertex), Lambda)`` for ``i = 0..depth``."""

    vertex: int
    dims: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.dims) - 1

    def vanishes(self, lo: int, hi: int) -> bool:
        """True when ``dims[lo..hi]`` are all zero (an empty range is vacuous)."""
        return all(d == 0 for d in self.dims[lo : hi + 1])


@dataclass
class ChainReport:
    start: int
    d: int
    chain: list[int] = field(default_factory=list)
    simple: list[bool] = field(default_factory=list)
    non_projective: list[bool] = field(default_factory=list)
    injective_cover: list[bool] = field(default_factory=list)
    distinct: bool = False
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class SelfInjectiveRecord:
    self_injective_not_simple: bool
    exists_simple_vanishing_to_n: bool
    witness: int | None

    @property
    def consistent(self) -> bool:
        return self.self_injective_not_simple == self.exists_simple_vanishing_to_n


def unit(n: int, j: int, mult: int = 1) -> SimpleVector:
    return tuple(mult if l == j else 0 for l in range(n))


def syzygy_vector(q: Quiver, v: Sequence[int]) -> SimpleVector:
    if len(v) != q.n:
        raise UsageError(f"vector of length {len(v)} for a quiver with {q.n} vertices")
    return tuple(sum(v[j] * q.adj[j][l] for j in range(q.n)) for l in range(q.n))


def ext1_simple_vs_proj_dim(q: Quiver, j: int, i: int) -> int:
    """``dim Ext^1(S(j), P(i))``.

    From ``0 -> rad P(j) -> P(j) -> S(j) -> 0``: ``Hom(rad P(j), P(i))`` has
    dimension ``<row j, soc P(i)>`` and only the identity of ``P(i)`` (when
    ``i == j`` is not a sink) restricts to a nonzero map on ``rad P(j)``.
    """
    if q.out_degree(i) == 0:
        return q.adj[j][i]
    return sum(a * b for a, b in zip(q.adj[j], q.adj[i])) - (1 if i == j else 0)


def ext1_simple_vs_lambda_dim(q: Quiver, j: int) -> int:
    return sum(ext1_simple_vs_proj_dim(q, j, i) for i in range(q.n))


def hom_simple_lambda_dim(q: Quiver, j: int) -> int:
    """``dim Hom(S(j), Lambda)``, the multiplicity of ``S(j)`` in ``soc Lambda``."""
    from_radicals = sum(q.adj[i][j] for i in range(q.n) if q.out_degree(i) > 0)
    return from_radicals + (1 if q.out_degree(j) == 0 else 0)


def ext_profile(q: Quiver, j: int, depth: int) -> ExtProfile:
    if depth < 0:
        raise UsageError(f"depth must be >= 0, got {depth}")
    ext1 = [ext1_simple_vs_lambda_dim(q, l) for l in range(q.n)]
    dims = [hom_simple_lambda_dim(q, j)]
    w = unit(q.n, j)
    for i in range(1, depth + 1):
        if i > 1:
            w = syzygy_vector(q, w)
        dims.append(sum(wl * e for wl, e in zip(w, ext1)))
    return ExtProfile(j, tuple(dims))


def nakayama_bound(q: Quiver, j: int) -> int:
    """Degree witnessing ``Ext^i(S(j), Lambda) != 0`` for some ``0 <= i <= n``.

    This is 0 when ``S(j)`` is projective or the algebra is self-injective
    (then ``Hom(S(j), Lambda) != 0``). Otherwise it is the least ``i >= 1``
    with ``Ext^i(S(j), Lambda) != 0``; degree 0 is skipped there because a
    nonzero ``Hom`` says nothing about higher vanishing.

    Raises :class:`TheoremViolation` if no degree up to ``n`` qualifies.
    """
    if not is_connected(q):
        raise UsageError("nakayama_bound requires a connected quiver")
    prof = ext_profile(q, j, q.n)
    lo = 0 if (q.out_degree(j) == 0 or is_self_injective(q)) else 1
    for i in range(lo, q.n + 1):
        if prof.dims[i]:
            return i
    raise TheoremViolation(
        f"Ext^i(S, Lambda) vanishes for all {lo} <= i <= n",
        {"quiver": [list(r) for r in q.adj], "vertex": j, "dims": list(prof.dims)},
    )


def vanishing_chain(q: Quiver, j: int, d: int) -> ChainReport:
    """Follow ``S(j), Omega S(j), ..., Omega^d S(j)`` for a non-projective simple
    whose Ext against ``Lambda`` vanishes in degrees ``1..d``, and record whether
    the chain consists of pairwise distinct non-projective simples with
    injective projective covers (all but the last)."""
    if not is_connected(q):
        raise UsageError("vanishing_chain requires a connected quiver")
    if is_self_injective(q):
        raise UsageError("vanishing_chain requires a non-self-injective quiver")
    if q.out_degree(j) == 0:
        raise UsageError(f"S({j}) is projective")
    if d < 0:
        raise UsageError(f"d must be >= 0, got {d}")
    prof = ext_profile(q, j, d)
    if not prof.vanishes(1, d):
        raise UsageError(f"Ext^i(S({j}), Lambda) does not vanish for 1 <= i <= {d}: {prof.dims}")

    sink_set = sinks(q)
    rep = ChainReport(start=j, d=d, chain=[j], simple=[True], non_projective=[j not in sink_set])
    v = j
    for step in range(d):
        row = q.adj[v]
        nxt = [l for l in range(q.n) if row[l]]
        simple = len(nxt) == 1 and row[nxt[0]] == 1
        rep.simple.append(simple)
        if not simple:
            rep.violations.append(f"Omega^{step + 1} S({j}) is not simple: {list(syzygy_vector(q, unit(q.n, v)))}")
            break
        rep.injective_cover.append(proj_is_injective(q, v))
        if not rep.injective_cover[-1]:
            rep.violations.append(f"P({v}) is not injective")
        v = nxt[0]
        rep.chain.append(v)
        rep.non_projective.append(v not in sink_set)
        if v in sink_set:
            rep.violations.append(f"S({v}) in the chain is projective")
    rep.distinct = len(set(rep.chain)) == len(rep.chain)
    if not rep.distinct:
        rep.violations.append(f"chain repeats a simple: {rep.chain}")
    return rep


def classify_self_injective(q: Quiver) -> SelfInjectiveRecord:
    if not is_connected(q):
        raise UsageError("classify_self_injective requires a connected quiver")
    first = is_self_injective(q) and not is_simple_ring(q)
    witness = None
    for j in range(q.n):
        if q.out_degree(j) and ext_profile(q, j, q.n).vanishes(1, q.n):
            witness = j
            break
    return SelfInjectiveRecord(first, witness is not None, witness)


def unique_vanishing_vertex(q: Quiver) -> int:
    """For ``Gamma = Delta(n, t)``, ``t > 1``: confirm that canonical vertex 0 is
    the only simple with ``Ext^{1..n-1}(S, Lambda) = 0`` and that its
    ``Ext^n`` is nonzero. Returns that vertex (original labelling)."""
    if not is_connected(q):
        raise UsageError("unique_vanishing_vertex requires a connected quiver")
    shape = detect_delta_shape(q)
    if shape is None or shape.t == 1:
        raise UsageError("unique_vanishing_vertex requires a Delta(n, t) quiver with t > 1")
    n = q.n
    profiles = [ext_profile(q, j, n) for j in range(n)]
    vanishing = {j for j in range(n) if profiles[j].vanishes(1, n - 1)}
    v0 = shape.vertex0
    payload = {
        "quiver": [list(r) for r in q.adj],
        "vertex0": v0,
        "vanishing": sorted(vanishing),
        "dims": {j: list(profiles[j].dims) for j in range(n)},
    }
    if vanishing != {v0}:
        raise TheoremViolation("S(0) is not the unique simple vanishing in degrees 1..n-1", payload)
    if profiles[v0].dims[n] == 0:
        raise TheoremViolation("Ext^n(S(0), Lambda) vanishes", payload)
    return v0
