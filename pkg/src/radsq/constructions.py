"""Module-level constructions and checks on top of the representation engine:
the module ``Tr D S(0)`` over a ``Delta(n, t)`` quiver, the injective envelope
sequence of ``P(n-1)``, descent from a module to a simple, a finite-depth CM
test and the Auslander-Reiten formula."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import modp
from .errors import TheoremViolation, UsageError
from .quiver import DeltaShape, Quiver, detect_delta_shape
from .rep import (
    Representation,
    build_projective,
    build_simple,
    compose,
    cokernel,
    cokernel_dim,
    dualize,
    ext_dims,
    hom_space,
    injective_envelope,
    is_isomorphic,
    is_projective,
    minimal_presentation_pathmatrix,
    op,
    radical_top_socle,
    regular,
    syzygy_rep,
    tau,
    tau_inverse,
    transpose,
    transpose_module,
)


def _require_delta(q: Quiver, allow_t1: bool = False) -> DeltaShape:
    shape = detect_delta_shape(q)
    if shape is None or (shape.t == 1 and not allow_t1):
        raise UsageError(f"quiver {q} is not of the form Delta(n, t) with t > 1")
    return shape


@dataclass
class TauInverseRecord:
    module: Representation
    shape: DeltaShape
    ext: list[int]  # dim Ext^i(M, Lambda), i = 0..n+1
    c: int  # Omega M = S(0)^c
    d: int  # top M = S(n-1)^d
    length: int
    cokernel_length: int  # rank count on the dualized presentation, computed separately
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def reference_length(self) -> int:
        t = self.shape.t
        return t * t + t - 1

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def tau_inverse_delta(q: Quiver, p: int = 5) -> TauInverseRecord:
    """Build ``M = tau^{-1} S(0)`` and check its homological fingerprint."""
    shape = _require_delta(q)
    n, v0, last = q.n, shape.vertex0, shape.last
    S0 = build_simple(q, p, v0)
    M = tau_inverse(S0)
    ext = ext_dims(M, regular(q, p), n + 1)

    omega, _ = syzygy_rep(M)
    c = omega.dims[v0]
    omega_ok = omega.is_semisimple() and c >= 1 and sum(omega.dims) == c
    top = radical_top_socle(M)[1]
    d = top[last]
    top_ok = d >= 1 and sum(top) == d

    cok = cokernel_dim(transpose(minimal_presentation_pathmatrix(dualize(S0))))
    checks = {
        "ext_vanishes_1_to_n": all(x == 0 for x in ext[1 : n + 1]),
        "ext_n_plus_1_nonzero": ext[n + 1] != 0,
        "syzygy_is_power_of_S0": omega_ok,
        "top_is_power_of_S_last": top_ok,
        "tau_is_S0": is_isomorphic(tau(M), S0),
        "length_matches_cokernel": M.total_dim == cok,
    }
    return TauInverseRecord(M, shape, ext, c, d, M.total_dim, cok, checks)


@dataclass
class StarVerdict:
    shape: DeltaShape
    envelope_socle: tuple[int, ...]
    injective: bool
    cokernel_dims: tuple[int, ...]
    cokernel_semisimple: bool
    expected: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.injective and self.cokernel_semisimple and self.cokernel_dims == self.expected


def star_sequence_check(q: Quiver, p: int = 5) -> StarVerdict:
    """``0 -> P(n-1) -> I(P(n-1)) -> S(n-1)^{t-1} -> 0`` for ``Delta(n, t)``."""
    shape = _require_delta(q, allow_t1=True)
    last = shape.last
    P = build_projective(q, p, last)
    env = injective_envelope(P)
    C, _ = cokernel(env)
    soc = radical_top_socle(P)[2]
    expected = tuple((shape.t - 1) if v == last else 0 for v in range(q.n))
    return StarVerdict(shape, soc, env.is_injective(), C.dims, C.is_semisimple(), expected)


def descend_to_simple(M: Representation, d: int) -> int:
    """A vertex ``j`` with ``S(j)`` a non-projective summand of ``Omega M`` and
    ``Ext^i(S(j), Lambda) = 0`` for ``1 <= i <= d``.

    Requires ``M`` non-projective with ``Ext^i(M, Lambda) = 0`` for
    ``1 <= i <= d + 1``; raises :class:`TheoremViolation` if no such simple
    exists.
    """
    q, p = M.quiver, M.p
    if d < 0:
        raise UsageError(f"d must be >= 0, got {d}")
    lam = regular(q, p)
    if is_projective(M):
        raise UsageError("M is projective")
    ext = ext_dims(M, lam, d + 1)
    if any(ext[1:]):
        raise UsageError(f"Ext^i(M, Lambda) does not vanish for 1 <= i <= {d + 1}: {ext}")
    omega, _ = syzygy_rep(M)
    for j in range(q.n):
        if omega.dims[j] and q.out_degree(j):
            if not any(ext_dims(build_simple(q, p, j), lam, d)[1:]):
                return j
    raise TheoremViolation(
        "no non-projective simple summand of Omega M has vanishing Ext",
        {"quiver": [list(r) for r in q.adj], "dims": list(M.dims), "d": d, "omega": list(omega.dims)},
    )


@dataclass
class CMVerdict:
    depth: int
    ext_module: list[int]
    ext_transpose: list[int]

    @property
    def passed(self) -> bool:
        return not any(self.ext_module) and not any(self.ext_transpose)


def cm_check(M: Representation, depth: int, stop_early: bool = True) -> CMVerdict:
    """``Ext^i(M, Lambda) = 0`` and ``Ext^i(Tr M, Lambda^op) = 0`` for ``1 <= i <= depth``.

    With ``stop_early`` the transpose side is skipped once ``M`` has failed.
    """
    if depth < 1:
        raise UsageError(f"depth must be >= 1, got {depth}")
    q, p = M.quiver, M.p
    ext_m = ext_dims(M, regular(q, p), depth)[1:]
    if stop_early and any(ext_m):
        return CMVerdict(depth, ext_m, [])
    tr = transpose_module(M)
    ext_t = ext_dims(tr, regular(op(q), p), depth)[1:]
    return CMVerdict(depth, ext_m, ext_t)


@dataclass
class ARVerdict:
    ext1: int
    hom: int
    factoring: int

    @property
    def stable_hom(self) -> int:
        return self.hom - self.factoring

    @property
    def ok(self) -> bool:
        return self.ext1 == self.stable_hom


def stable_hom_ar_check(M: Representation, N: Representation) -> ARVerdict:
    """``dim Ext^1(M, N) = dim Hom(N, tau M)`` modulo maps factoring through
    the injective envelope of ``N``."""
    if is_projective(M):
        raise UsageError("M is projective")
    p = M.p
    tm = tau(M)
    hom = len(hom_space(N, tm))
    env = injective_envelope(N)
    through = [compose(h, env) for h in hom_space(env.target, tm)]
    if through:
        stacked = np.array([np.concatenate([f.ravel() for f in g.mats]) for g in through], dtype=np.int64)
        factoring = modp.rank(stacked, p)
    else:
        factoring = 0
    ext1 = ext_dims(M, N, 1)[1]
    return ARVerdict(ext1, hom, factoring)

