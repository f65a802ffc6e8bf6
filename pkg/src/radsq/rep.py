"""Explicit modules over ``kQ/J^2`` with ``k = F_p``.

A module is a quiver representation: a vector space ``F_p^{dims[v]}`` at each
vertex and one matrix per arrow, composable products vanishing. Matrices use
the column convention (an arrow ``i -> j`` has shape ``dims[j] x dims[i]``)
and arrows are ordered as in :attr:`Quiver.arrows`.

Projectives have labelled bases. ``P(i)`` at vertex ``w`` is spanned by the
trivial path ``e_i`` (only when ``w == i``, at local index 0) followed by one
vector ``b_a`` per arrow ``a: i -> w`` in arrow-index order. Direct sums of
projectives are summand-major. Maps between such sums are stored as
:class:`PathMatrix` objects; Hom into a module ``N`` is then read off by
Yoneda, ``Hom(P(v), N) = N_v``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import modp
from .quiver import Quiver, opposite

PathKey = int | None  # None is the trivial path, k the k-th parallel arrow


@functools.lru_cache(maxsize=4096)
def op(q: Quiver) -> Quiver:
    return opposite(q)


def _local(q: Quiver, i: int, w: int, k: int | None) -> int:
    """Position of ``e_i`` (``k is None``) or of ``b_(i->w, k)`` inside ``P(i)_w``."""
    if k is None:
        return 0
    return k + 1 if w == i else k


def _proj_dim(q: Quiver, i: int, w: int) -> int:
    return (1 if i == w else 0) + q.adj[i][w]


@dataclass(frozen=True, eq=False)
class Representation:
    quiver: Quiver
    p: int
    dims: tuple[int, ...]
    mats: tuple[np.ndarray, ...]

    def __post_init__(self):
        q = self.quiver
        if len(self.dims) != q.n:
            raise ValueError("one dimension per vertex required")
        if len(self.mats) != len(q.arrows):
            raise ValueError("one matrix per arrow required")
        for (i, j, _), a in zip(q.arrows, self.mats):
            if a.shape != (self.dims[j], self.dims[i]):
                raise ValueError(f"arrow {i}->{j} has shape {a.shape}, expected {(self.dims[j], self.dims[i])}")

    @classmethod
    def zero(cls, q: Quiver, p: int) -> "Representation":
        return cls(q, p, (0,) * q.n, tuple(modp.zeros(0, 0) for _ in q.arrows))

    def matrix(self, i: int, j: int, k: int = 0) -> np.ndarray:
        return self.mats[self.quiver.arrow_position[(i, j, k)]]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def is_semisimple(self) -> bool:
        return all(not a.any() for a in self.mats)

    def incoming(self, v: int) -> np.ndarray:
        """All arrow matrices ending at ``v``, side by side."""
        blocks = [a for (i, j, _), a in zip(self.quiver.arrows, self.mats) if j == v]
        if not blocks:
            return modp.zeros(self.dims[v], 0)
        return np.hstack(blocks)

    def outgoing(self, v: int) -> np.ndarray:
        """All arrow matrices starting at ``v``, stacked."""
        blocks = [a for (i, j, _), a in zip(self.quiver.arrows, self.mats) if i == v]
        if not blocks:
            return modp.zeros(0, self.dims[v])
        return np.vstack(blocks)

    def satisfies_relations(self) -> bool:
        """Every path of length two acts as zero."""
        return all(
            not modp.matmul(self.outgoing(v), self.incoming(v), self.p).any()
            for v in range(self.quiver.n)
        )

    def same_as(self, other: "Representation") -> bool:
        return (
            self.quiver == other.quiver
            and self.p == other.p
            and self.dims == other.dims
            and all(np.array_equal(a, b) for a, b in zip(self.mats, other.mats))
        )

    def __repr__(self) -> str:
        return f"Representation(quiver={self.quiver}, p={self.p}, dims={self.dims})"


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: Representation
    target: Representation
    mats: tuple[np.ndarray, ...]

    def commutes(self) -> bool:
        p = self.source.p
        for (i, j, _), a, b in zip(self.source.quiver.arrows, self.source.mats, self.target.mats):
            lhs = modp.matmul(b, self.mats[i], p)
            rhs = modp.matmul(self.mats[j], a, p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def is_zero(self) -> bool:
        return all(not f.any() for f in self.mats)

    def is_injective(self) -> bool:
        return all(modp.rank(f, self.source.p) == f.shape[1] for f in self.mats)

    def is_surjective(self) -> bool:
        return all(modp.rank(f, self.source.p) == f.shape[0] for f in self.mats)


def compose(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """``g o f``."""
    p = f.source.p
    return ModuleMap(f.source, g.target, tuple(modp.matmul(b, a, p) for a, b in zip(f.mats, g.mats)))


# ---------------------------------------------------------------- builders


def _proj_offsets(q: Quiver, labels: Sequence[int]) -> tuple[list[list[int]], list[int]]:
    return _proj_offsets_cached(q, tuple(labels))


@functools.lru_cache(maxsize=8192)
def _proj_offsets_cached(q: Quiver, labels: tuple[int, ...]) -> tuple[list[list[int]], list[int]]:
    offsets = []
    dims = [0] * q.n
    for u in labels:
        offsets.append(list(dims))
        for w in range(q.n):
            dims[w] += _proj_dim(q, u, w)
    return offsets, dims


def projective_sum(q: Quiver, p: int, labels: Sequence[int]) -> Representation:
    """``P(labels[0]) + P(labels[1]) + ...`` with its labelled basis.

    Results are cached and shared; never mutate their matrices.
    """
    return _projective_sum(q, p, tuple(labels))


@functools.lru_cache(maxsize=8192)
def _projective_sum(q: Quiver, p: int, labels: tuple[int, ...]) -> Representation:
    offsets, dims = _proj_offsets(q, labels)
    mats = []
    for a, b, k in q.arrows:
        m = modp.zeros(dims[b], dims[a])
        for r, u in enumerate(labels):
            if u == a:
                m[offsets[r][b] + _local(q, a, b, k), offsets[r][a]] = 1
        mats.append(m)
    return Representation(q, p, tuple(dims), tuple(mats))


def build_projective(q: Quiver, p: int, i: int) -> Representation:
    return projective_sum(q, p, [i])


def build_simple(q: Quiver, p: int, i: int, mult: int = 1) -> Representation:
    return semisimple(q, p, [mult if v == i else 0 for v in range(q.n)])


def semisimple(q: Quiver, p: int, vector: Sequence[int]) -> Representation:
    dims = tuple(int(x) for x in vector)
    return Representation(q, p, dims, tuple(modp.zeros(dims[j], dims[i]) for i, j, _ in q.arrows))


def injective_sum(q: Quiver, p: int, labels: Sequence[int]) -> Representation:
    return dualize(projective_sum(op(q), p, labels))


def build_injective(q: Quiver, p: int, i: int) -> Representation:
    return injective_sum(q, p, [i])


def regular(q: Quiver, p: int) -> Representation:
    """``Lambda`` as a left module over itself."""
    return projective_sum(q, p, range(q.n))


def direct_sum(modules: Sequence[Representation]) -> Representation:
    q, p = modules[0].quiver, modules[0].p
    dims = tuple(sum(M.dims[v] for M in modules) for v in range(q.n))
    mats = []
    for pos, (i, j, _) in enumerate(q.arrows):
        m = modp.zeros(dims[j], dims[i])
        ri = ci = 0
        for M in modules:
            m[ri : ri + M.dims[j], ci : ci + M.dims[i]] = M.mats[pos]
            ri += M.dims[j]
            ci += M.dims[i]
        mats.append(m)
    return Representation(q, p, dims, tuple(mats))


# ------------------------------------------------------------- path matrices


@dataclass(frozen=True, eq=False)
class PathMatrix:
    """A map ``P(cols[0]) + ... -> P(rows[0]) + ...`` between sums of projectives.

    Entry ``(r, c)`` is the image of the generator ``e_{cols[c]}`` in the
    summand ``P(rows[r])``: a combination of the trivial path (when the labels
    agree) and arrows ``rows[r] -> cols[c]``. Keys are ``None`` for the trivial
    path and the parallel-arrow index otherwise; zero coefficients are omitted.
    """

    quiver: Quiver
    p: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: dict[tuple[int, int], dict[PathKey, int]] = field(default_factory=dict)

    def __post_init__(self):
        q = self.quiver
        for (r, c), combo in self.entries.items():
            v, u = self.rows[r], self.cols[c]
            for key, coef in combo.items():
                if coef % self.p == 0:
                    raise ValueError("zero coefficients must be omitted")
                if key is None and v != u:
                    raise ValueError(f"trivial path between different vertices {v}, {u}")
                if key is not None and not 0 <= key < q.adj[v][u]:
                    raise ValueError(f"no arrow {v}->{u} with index {key}")

    def entry(self, r: int, c: int) -> dict[PathKey, int]:
        return self.entries.get((r, c), {})

    def in_radical(self) -> bool:
        return all(None not in combo for combo in self.entries.values())

    def same_as(self, other: "PathMatrix") -> bool:
        return (
            self.quiver == other.quiver
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def describe(self) -> list[list[str]]:
        """Entries as strings: ``e0`` for a trivial path, ``a[2->0]#1`` for arrows."""
        out = []
        for r, v in enumerate(self.rows):
            line = []
            for c, u in enumerate(self.cols):
                terms = []
                for key, coef in sorted(self.entry(r, c).items(), key=lambda kv: -1 if kv[0] is None else kv[0]):
                    name = f"e{v}" if key is None else f"a[{v}->{u}]#{key}"
                    terms.append(name if coef == 1 else f"{coef}*{name}")
                line.append(" + ".join(terms) or "0")
            out.append(line)
        return out


def pathmatrix_to_map(pm: PathMatrix) -> ModuleMap:
    q, p = pm.quiver, pm.p
    source = projective_sum(q, p, pm.cols)
    target = projective_sum(q, p, pm.rows)
    soff, _ = _proj_offsets(q, pm.cols)
    toff, _ = _proj_offsets(q, pm.rows)
    mats = [modp.zeros(target.dims[w], source.dims[w]) for w in range(q.n)]
    for (r, c), combo in pm.entries.items():
        v, u = pm.rows[r], pm.cols[c]
        for key, coef in combo.items():
            # image of the generator e_u, living at vertex u
            mats[u][toff[r][u] + _local(q, v, u, key), soff[c][u]] += coef
            if key is None:
                # b_beta = beta * e_u maps to beta * (coef e_u) in the same summand
                for w in range(q.n):
                    for kk in range(q.adj[u][w]):
                        loc = _local(q, u, w, kk)
                        mats[w][toff[r][w] + loc, soff[c][w] + loc] += coef
    return ModuleMap(source, target, tuple(m % p for m in mats))


def _pathmatrix_from_images(
    q: Quiver, p: int, rows: Sequence[int], cols: Sequence[int], images: Sequence[np.ndarray]
) -> PathMatrix:
    """``images[c]`` is the image of ``e_{cols[c]}`` in ``P(rows)`` at vertex ``cols[c]``."""
    toff, _ = _proj_offsets(q, rows)
    entries: dict[tuple[int, int], dict[PathKey, int]] = {}
    for c, u in enumerate(cols):
        vec = images[c]
        for r, v in enumerate(rows):
            combo: dict[PathKey, int] = {}
            if v == u:
                coef = int(vec[toff[r][u]]) % p
                if coef:
                    combo[None] = coef
            for k in range(q.adj[v][u]):
                coef = int(vec[toff[r][u] + _local(q, v, u, k)]) % p
                if coef:
                    combo[k] = coef
            if combo:
                entries[(r, c)] = combo
    return PathMatrix(q, p, tuple(rows), tuple(cols), entries)


def map_to_pathmatrix(f: ModuleMap, rows: Sequence[int], cols: Sequence[int]) -> PathMatrix:
    """Read a map ``P(cols) -> P(rows)`` back as a path matrix."""
    q = f.source.quiver
    soff, _ = _proj_offsets(q, cols)
    images = [f.mats[u][:, soff[c][u]] for c, u in enumerate(cols)]
    return _pathmatrix_from_images(q, f.source.p, rows, cols, images)


def transpose(pm: PathMatrix) -> PathMatrix:
    """``Hom(-, Lambda)`` applied to a map of projectives, as a path matrix
    over the opposite quiver. Arrow ``v -> u`` (index k) becomes the opposite
    arrow ``u -> v`` with the same index, so keys carry over unchanged."""
    entries = {(c, r): dict(combo) for (r, c), combo in pm.entries.items()}
    return PathMatrix(op(pm.quiver), pm.p, pm.cols, pm.rows, entries)


def hom_complex_matrix(pm: PathMatrix, N: Representation) -> np.ndarray:
    """Matrix of ``Hom(P(rows), N) -> Hom(P(cols), N)``, ``h -> h o pm``, in the
    Yoneda coordinates ``Hom(P(v), N) = N_v``."""
    q, p = pm.quiver, pm.p
    roff = np.cumsum([0] + [N.dims[v] for v in pm.rows])
    coff = np.cumsum([0] + [N.dims[u] for u in pm.cols])
    out = modp.zeros(int(coff[-1]), int(roff[-1]))
    wide = p >= 1 << 21
    for (r, c), combo in pm.entries.items():
        v, u = pm.rows[r], pm.cols[c]
        block = out[coff[c] : coff[c + 1], roff[r] : roff[r + 1]]
        for key, coef in combo.items():
            if key is None:
                block[np.diag_indices(N.dims[v])] += coef
            else:
                block += coef * N.matrix(v, u, key)
            if wide:
                block %= p
    return out % p


def regular_block_coordinates(q: Quiver, labels: Sequence[int], i: int) -> list[int]:
    """Coordinates of ``Hom(P(labels), P(i))`` inside ``Hom(P(labels), Lambda)``
    (Yoneda coordinates, ``Lambda = P(0) + ... + P(n-1)``)."""
    lam_off, lam_dims = _proj_offsets(q, range(q.n))
    out = []
    base = 0
    for v in labels:
        start = base + lam_off[i][v]
        out.extend(range(start, start + _proj_dim(q, i, v)))
        base += lam_dims[v]
    return out


# ----------------------------------------------------- kernels and cokernels


def kernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    M, p = f.source, f.source.p
    q = M.quiver
    bases, frees = zip(*(modp.nullspace(fv, p) for fv in f.mats))
    dims = tuple(b.shape[1] for b in bases)
    mats = []
    for (i, j, _), a in zip(q.arrows, M.mats):
        image = modp.matmul(a, bases[i], p)
        mats.append(image[list(frees[j]), :].copy())
    K = Representation(q, p, dims, tuple(mats))
    return K, ModuleMap(K, M, tuple(bases))


def cokernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    N, p = f.target, f.target.p
    q = N.quiver
    projs, frees = [], []
    for fv in f.mats:
        basis, free = modp.nullspace(fv.T, p)
        projs.append(basis.T.copy())
        frees.append(free)
    dims = tuple(c.shape[0] for c in projs)
    mats = []
    for (i, j, _), a in zip(q.arrows, N.mats):
        mats.append(modp.matmul(projs[j], a, p)[:, frees[i]].copy())
    C = Representation(q, p, dims, tuple(mats))
    return C, ModuleMap(N, C, tuple(projs))


def image_dim(f: ModuleMap) -> int:
    return sum(modp.rank(fv, f.source.p) for fv in f.mats)


# ------------------------------------------------------- radical, top, socle


def radical_top_socle(M: Representation) -> tuple[Representation, tuple[int, ...], tuple[int, ...]]:
    """``rad M`` (as a semisimple representation), and the multiplicity vectors
    of ``top M = M / rad M`` and ``soc M``."""
    p, q = M.p, M.quiver
    rad_dims, top, soc = [], [], []
    for v in range(q.n):
        r = modp.rank(M.incoming(v), p)
        rad_dims.append(r)
        top.append(M.dims[v] - r)
        soc.append(M.dims[v] - modp.rank(M.outgoing(v), p))
    return semisimple(q, p, rad_dims), tuple(top), tuple(soc)


def top_vector(M: Representation) -> tuple[int, ...]:
    return radical_top_socle(M)[1]


def socle_vector(M: Representation) -> tuple[int, ...]:
    return radical_top_socle(M)[2]


def _top_generators(M: Representation) -> list[tuple[int, int]]:
    """``(vertex, coordinate)`` pairs whose unit vectors lift a basis of the top."""
    gens = []
    for v in range(M.quiver.n):
        for idx in modp.complement_units(M.incoming(v), M.p):
            gens.append((v, idx))
    return gens


def _cover_from_generators(M: Representation, gens: list[tuple[int, int]]) -> ModuleMap:
    q, p = M.quiver, M.p
    labels = [v for v, _ in gens]
    source = projective_sum(q, p, labels)
    offsets, _ = _proj_offsets(q, labels)
    mats = [modp.zeros(M.dims[w], source.dims[w]) for w in range(q.n)]
    for r, (u, idx) in enumerate(gens):
        mats[u][idx, offsets[r][u]] = 1
        for w in range(q.n):
            for k in range(q.adj[u][w]):
                mats[w][:, offsets[r][w] + _local(q, u, w, k)] = M.matrix(u, w, k)[:, idx]
    return ModuleMap(source, M, tuple(mats))


def projective_cover(M: Representation) -> ModuleMap:
    """Minimal projective cover ``P(top M) -> M``."""
    return _cover_from_generators(M, _top_generators(M))


def syzygy_rep(M: Representation) -> tuple[Representation, ModuleMap]:
    """``Omega M`` with its inclusion into the projective cover of ``M``."""
    K, incl = kernel(projective_cover(M))
    return K, incl


# ----------------------------------------------------------------- resolutions


@dataclass
class ResolutionPrefix:
    """``P_s -> ... -> P_1 -> P_0 -> M -> 0``.

    ``terms[k]`` are the vertex labels of ``P_k``; ``differentials[k-1]`` is the
    path matrix of ``d_k: P_k -> P_{k-1}``; ``syzygies[k]`` is
    ``Omega^k M`` (``syzygies[0] = M``) and ``inclusions[k-1]`` embeds
    ``Omega^k M`` into ``P_{k-1}``.
    """

    module: Representation
    terms: list[tuple[int, ...]] = field(default_factory=list)
    differentials: list[PathMatrix] = field(default_factory=list)
    syzygies: list[Representation] = field(default_factory=list)
    inclusions: list[ModuleMap] = field(default_factory=list)
    covers: list[ModuleMap] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.differentials)

    def term_dim(self, k: int) -> int:
        q = self.module.quiver
        return sum(1 + q.out_degree(u) for u in self.terms[k])


class ResolutionTooLarge(RuntimeError):
    pass


def resolve(M: Representation, steps: int, max_term_dim: int | None = None,
            prefix: ResolutionPrefix | None = None) -> ResolutionPrefix:
    """Minimal projective resolution of ``M`` up to ``P_steps``.

    An existing ``prefix`` of the same module is extended in place.
    """
    q, p = M.quiver, M.p
    res = prefix if prefix is not None else ResolutionPrefix(M)
    if not res.syzygies:
        res.syzygies.append(M)
    while len(res.terms) <= steps:
        k = len(res.terms)
        if len(res.syzygies) <= k:
            Knext, incl = kernel(res.covers[k - 1])
            res.syzygies.append(Knext)
            res.inclusions.append(incl)
        K = res.syzygies[k]
        gens = _top_generators(K)
        labels = tuple(v for v, _ in gens)
        if max_term_dim is not None and sum(1 + q.out_degree(u) for u in labels) > max_term_dim:
            raise ResolutionTooLarge(f"P_{k} exceeds {max_term_dim} dimensions")
        cover = _cover_from_generators(K, gens)
        res.terms.append(labels)
        res.covers.append(cover)
        if k > 0:
            incl = res.inclusions[k - 1]
            rows = res.terms[k - 1]
            images = [incl.mats[u][:, idx] for u, idx in gens]
            res.differentials.append(_pathmatrix_from_images(q, p, rows, labels, images))
    return res


def _hom_complex_ranks(res: ResolutionPrefix, N: Representation, top_degree: int) -> list[int]:
    """``ranks[k]`` is the rank of ``Hom(P_{k-1}, N) -> Hom(P_k, N)``; ``ranks[0] = 0``."""
    ranks = [0]
    for k in range(1, top_degree + 1):
        if k - 1 < len(res.differentials):
            ranks.append(modp.rank(hom_complex_matrix(res.differentials[k - 1], N), N.p))
        else:
            ranks.append(0)
    return ranks


def ext_dims(M: Representation, N: Representation, depth: int,
             resolution: ResolutionPrefix | None = None,
             max_term_dim: int | None = None) -> list[int]:
    """``[dim Ext^i(M, N) for i in 0..depth]`` from a minimal resolution of ``M``."""
    res = resolve(M, depth + 1, max_term_dim=max_term_dim, prefix=resolution)
    ranks = _hom_complex_ranks(res, N, depth + 1)
    out = []
    for i in range(depth + 1):
        c_i = sum(N.dims[v] for v in res.terms[i])
        out.append(c_i - ranks[i + 1] - ranks[i])
    return out


def ext_dim(M: Representation, N: Representation, i: int,
            resolution: ResolutionPrefix | None = None) -> int:
    if i < 0:
        raise ValueError(f"degree must be >= 0, got {i}")
    return ext_dims(M, N, i, resolution)[i]


# ------------------------------------------------------------------ Hom spaces


def hom_space(M: Representation, N: Representation) -> list[ModuleMap]:
    """Basis of ``Hom(M, N)``: solutions ``F_v`` of ``N_a F_i = F_j M_a``."""
    q, p = M.quiver, M.p
    sizes = [N.dims[v] * M.dims[v] for v in range(q.n)]
    offs = np.cumsum([0] + sizes)
    blocks = []
    for (i, j, _), a, b in zip(q.arrows, M.mats, N.mats):
        rows = N.dims[j] * M.dims[i]
        if rows == 0:
            continue
        eq = modp.zeros(rows, int(offs[-1]))
        eq[:, offs[i] : offs[i + 1]] += np.kron(b, modp.identity(M.dims[i]))
        eq[:, offs[j] : offs[j + 1]] -= np.kron(modp.identity(N.dims[j]), a.T)
        blocks.append(eq % p)
    system = np.vstack(blocks) if blocks else modp.zeros(0, int(offs[-1]))
    basis, _ = modp.nullspace(system, p)
    maps = []
    for col in basis.T:
        mats = tuple(
            col[offs[v] : offs[v + 1]].reshape(N.dims[v], M.dims[v]).copy() for v in range(q.n)
        )
        maps.append(ModuleMap(M, N, mats))
    return maps


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_space(M, N))


def combine(maps: Sequence[ModuleMap], coeffs: Sequence[int]) -> ModuleMap:
    first = maps[0]
    p = first.source.p
    mats = tuple(
        sum((c * f.mats[v] for c, f in zip(coeffs, maps)), modp.zeros(*first.mats[v].shape)) % p
        for v in range(len(first.mats))
    )
    return ModuleMap(first.source, first.target, mats)


def is_isomorphic(M: Representation, N: Representation, trials: int = 200, seed: int = 0) -> bool:
    """Search ``Hom(M, N)`` for a map invertible at every vertex: exhaustively
    when the Hom space has dimension at most 4, else by ``trials`` random
    combinations (so a ``False`` there is probabilistic)."""
    if M.dims != N.dims:
        return False
    if M.is_zero():
        return True
    _, tm, sm = radical_top_socle(M)
    _, tn, sn = radical_top_socle(N)
    if tm != tn or sm != sn:
        return False
    basis = hom_space(M, N)
    if not basis:
        return False
    p = M.p

    def invertible(coeffs):
        f = combine(basis, coeffs)
        return all(modp.is_invertible(fv, p) for fv in f.mats if fv.size)

    if len(basis) <= 4:
        candidates: Iterable = itertools.product(range(p), repeat=len(basis))
    else:
        rng = np.random.default_rng(seed)
        candidates = (tuple(int(x) for x in rng.integers(0, p, len(basis))) for _ in range(trials))
    return any(invertible(c) for c in candidates if any(c))


# -------------------------------------------------------------------- duality


def dualize(M: Representation) -> Representation:
    """``D M = Hom_k(M, k)`` as a representation of the opposite quiver."""
    q = M.quiver
    qo = op(q)
    mats = tuple(M.mats[q.arrow_position[(j, i, k)]].T.copy() for i, j, k in qo.arrows)
    return Representation(qo, M.p, M.dims, mats)


def dualize_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(dualize(f.target), dualize(f.source), tuple(fv.T.copy() for fv in f.mats))


def injective_envelope(N: Representation) -> ModuleMap:
    """Minimal injective envelope ``N -> I(soc N)``, dual to the projective
    cover of ``D N``."""
    cover = projective_cover(dualize(N))
    env = dualize_map(cover)
    return ModuleMap(N, env.target, env.mats)


# --------------------------------------------------- transpose and AR translate


def minimal_presentation_pathmatrix(M: Representation) -> PathMatrix:
    """``d_1`` of the minimal presentation ``P_1 -> P_0 -> M -> 0``."""
    res = resolve(M, 1)
    return res.differentials[0]


def cokernel_dim(pm: PathMatrix) -> int:
    """Dimension of ``Cok`` of the map a path matrix describes, by rank count."""
    f = pathmatrix_to_map(pm)
    return f.target.total_dim - image_dim(f)


def transpose_module(M: Representation) -> Representation:
    """``Tr M``: cokernel of the dual of the minimal presentation, a module over
    the opposite quiver."""
    pt = transpose(minimal_presentation_pathmatrix(M))
    return cokernel(pathmatrix_to_map(pt))[0]


def tau_inverse(M: Representation) -> Representation:
    """``Tr D M``."""
    return transpose_module(dualize(M))


def tau(M: Representation) -> Representation:
    """``D Tr M``, the Auslander-Reiten translate."""
    return dualize(transpose_module(M))


# ------------------------------------------------------------- random modules


def random_pathmatrix(q: Quiver, p: int, rows: Sequence[int], cols: Sequence[int],
                      rng: np.random.Generator) -> PathMatrix:
    entries = {}
    for r, v in enumerate(rows):
        for c, u in enumerate(cols):
            combo = {}
            keys: list[PathKey] = ([None] if v == u else []) + list(range(q.adj[v][u]))
            for key in keys:
                coef = int(rng.integers(0, p))
                if coef:
                    combo[key] = coef
            if combo:
                entries[(r, c)] = combo
    return PathMatrix(q, p, tuple(rows), tuple(cols), entries)


def random_module(q: Quiver, p: int, rng: np.random.Generator,
                  max_generators: int = 2, max_relations: int = 2,
                  radical_relations: bool = False) -> Representation:
    """Cokernel of a random map between small sums of projectives. Every
    finitely generated module arises this way. With ``radical_relations`` the
    relations avoid trivial paths, so no generator is killed outright."""
    while True:
        rows = [int(x) for x in rng.integers(0, q.n, int(rng.integers(1, max_generators + 1)))]
        cols = [int(x) for x in rng.integers(0, q.n, int(rng.integers(0, max_relations + 1)))]
        pm = random_pathmatrix(q, p, rows, cols, rng)
        if radical_relations:
            entries = {}
            for rc, combo in pm.entries.items():
                combo = {k: c for k, c in combo.items() if k is not None}
                if combo:
                    entries[rc] = combo
            pm = PathMatrix(q, p, pm.rows, pm.cols, entries)
        M = cokernel(pathmatrix_to_map(pm))[0]
        if not M.is_zero():
            return M


def is_projective(M: Representation) -> bool:
    return syzygy_rep(M)[0].is_zero()


# ------------------------------------------------------------------ text dump


def dump_representation(M: Representation) -> str:
    q = M.quiver
    lines = [f"field {M.p}", f"quiver {q.n}"]
    lines += [" ".join(map(str, row)) for row in q.adj]
    lines.append("dims " + " ".join(map(str, M.dims)))
    for (i, j, k), a in zip(q.arrows, M.mats):
        lines.append(f"arrow {i} {j} {k}")
        if a.shape[1]:
            lines += [" ".join(str(int(x)) for x in row) for row in a]
    return "\n".join(lines) + "\n"


def load_representation(text: str) -> Representation:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    it = iter(lines)
    p = int(next(it).split()[1])
    n = int(next(it).split()[1])
    q = Quiver.from_matrix([[int(x) for x in next(it).split()] for _ in range(n)])
    dims = tuple(int(x) for x in next(it).split()[1:])
    mats = []
    for i, j, k in q.arrows:
        header = next(it).split()
        if tuple(int(x) for x in header[1:]) != (i, j, k):
            raise ValueError(f"expected arrow {i} {j} {k}, got {' '.join(header)}")
        if dims[i]:
            rows = [[int(x) for x in next(it).split()] for _ in range(dims[j])]
            mats.append(np.array(rows, dtype=np.int64).reshape(dims[j], dims[i]))
        else:
            mats.append(modp.zeros(dims[j], 0))
    return Representation(q, p, dims, tuple(mats))
