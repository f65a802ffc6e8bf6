"""Corpus enumeration, per-quiver theorem checks and the oracle comparison
between the integer Ext engine and explicit module computations."""

from __future__ import annotations

import itertools
import json
import os
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterator, TextIO

import numpy as np

from . import ext, modp
from .constructions import star_sequence_check, tau_inverse_delta
from .errors import TheoremViolation, UsageError
from .quiver import (
    Quiver,
    detect_delta_shape,
    is_connected,
    is_self_injective,
    is_simple_ring,
    proj_is_injective,
    sinks,
    sources,
)
from .rep import (
    ResolutionTooLarge,
    build_simple,
    ext_dims,
    hom_complex_matrix,
    regular,
    regular_block_coordinates,
    resolve,
)

EXHAUSTIVE_LIMIT = 10**6
DEFAULT_ORACLE_BUDGET = 64
# Largest projective term (total dimension) the oracle resolves when
# comparing full Ext profiles; syzygies of simples can grow exponentially.
DEFAULT_RESOLUTION_CAP = 60


def oracle_budget() -> int:
    raw = os.environ.get("RADSQ_ORACLE_BUDGET")
    return int(raw) if raw else DEFAULT_ORACLE_BUDGET


@dataclass(frozen=True)
class CorpusSpec:
    n_min: int = 1
    n_max: int = 3
    max_mult: int = 2
    mode: str = "exhaustive"
    count: int = 0
    seed: int | None = None
    primes: tuple[int, ...] = (2, 5)
    oracle_budget: int = DEFAULT_ORACLE_BUDGET
    resolution_cap: int = DEFAULT_RESOLUTION_CAP
    timing: bool = False

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise UsageError(f"bad vertex range {self.n_min}..{self.n_max}")
        if self.max_mult < 0:
            raise UsageError("max multiplicity must be >= 0")
        if self.mode == "exhaustive":
            if self.exhaustive_size() > EXHAUSTIVE_LIMIT:
                raise UsageError(
                    f"exhaustive corpus has {self.exhaustive_size()} matrices (limit {EXHAUSTIVE_LIMIT})"
                )
        elif self.mode == "random":
            if self.seed is None:
                raise UsageError("random mode requires a seed")
            if self.count < 1:
                raise UsageError("random mode requires a positive count")
        else:
            raise UsageError(f"unknown mode {self.mode!r}")

    def exhaustive_size(self) -> int:
        return sum((self.max_mult + 1) ** (n * n) for n in range(self.n_min, self.n_max + 1))


def enumerate_connected(spec: CorpusSpec) -> Iterator[Quiver]:
    """Connected quivers in lexicographic matrix order (exhaustive) or as a
    seeded stream (random)."""
    if spec.mode == "exhaustive":
        for n in range(spec.n_min, spec.n_max + 1):
            for flat in itertools.product(range(spec.max_mult + 1), repeat=n * n):
                q = Quiver.from_matrix(flat[r * n : (r + 1) * n] for r in range(n))
                if is_connected(q):
                    yield q
        return
    rng = np.random.default_rng(spec.seed)
    emitted = 0
    while emitted < spec.count:
        n = int(rng.integers(spec.n_min, spec.n_max + 1))
        q = Quiver.from_matrix(rng.integers(0, spec.max_mult + 1, (n, n)).tolist())
        if is_connected(q):
            emitted += 1
            yield q


# ------------------------------------------------------------------- oracle


def oracle_profile(q: Quiver, p: int, j: int, depth: int, cap: int) -> list[int]:
    """``dim Ext^i(S(j), Lambda)`` for ``i = 0..depth`` from an explicit
    resolution, truncated where the next projective term would exceed ``cap``."""
    S = build_simple(q, p, j)
    lam = regular(q, p)
    res = None
    reached = -1
    for i in range(depth + 1):
        try:
            res = resolve(S, i + 1, max_term_dim=cap, prefix=res)
        except ResolutionTooLarge:
            break
        reached = i
    if reached < 0:
        return []
    return ext_dims(S, lam, reached, resolution=res)


def oracle_diff(
    q: Quiver,
    primes: tuple[int, ...] = (2, 5),
    *,
    closed_form: Callable[[Quiver, int, int], int] = ext.ext1_simple_vs_proj_dim,
    profile: bool = True,
    resolution_cap: int = DEFAULT_RESOLUTION_CAP,
) -> list[dict[str, Any]]:
    """Discrepancies between the integer engine and explicit computation.

    Compares ``dim Ext^1(S(j), P(i))`` for all pairs, ``dim Hom(S(j), Lambda)``
    and, with ``profile``, the Ext profile up to degree ``n + 1`` (as far as
    the resolution stays within ``resolution_cap``). Empty means agreement.
    """
    diffs: list[dict[str, Any]] = []
    for p in primes:
        lam = regular(q, p)
        for j in range(q.n):
            res = resolve(build_simple(q, p, j), 2)
            # Hom(P_k, Lambda) splits into the blocks Hom(P_k, P(i)).
            d1 = hom_complex_matrix(res.differentials[0], lam)
            d2 = hom_complex_matrix(res.differentials[1], lam)
            for i in range(q.n):
                c0, c1, c2 = (regular_block_coordinates(q, res.terms[k], i) for k in range(3))
                got = (len(c1) - modp.rank(d2[np.ix_(c2, c1)], p)
                       - modp.rank(d1[np.ix_(c1, c0)], p))
                want = closed_form(q, j, i)
                if got != want:
                    diffs.append({"prime": p, "kind": "ext1", "j": j, "i": i,
                                  "combinatorial": want, "oracle": got})
            hom = d1.shape[1] - modp.rank(d1, p)
            if hom != ext.hom_simple_lambda_dim(q, j):
                diffs.append({"prime": p, "kind": "hom", "j": j,
                              "combinatorial": ext.hom_simple_lambda_dim(q, j), "oracle": hom})
            if profile:
                got_prof = oracle_profile(q, p, j, q.n + 1, resolution_cap)
                want_prof = ext.ext_profile(q, j, len(got_prof) - 1).dims if got_prof else ()
                for deg, (a, b) in enumerate(zip(want_prof, got_prof)):
                    if a != b:
                        diffs.append({"prime": p, "kind": "profile", "j": j, "degree": deg,
                                      "combinatorial": a, "oracle": b})
    return diffs


# ------------------------------------------------ structural checks


def ext1_vanishing_violations(q: Quiver) -> list[str]:
    """A non-projective simple with ``Ext^1(S, Lambda) = 0`` has a simple,
    non-projective syzygy and an injective projective cover."""
    out = []
    sink_set = sinks(q)
    for j in range(q.n):
        if j in sink_set or ext.ext1_simple_vs_lambda_dim(q, j):
            continue
        row = q.adj[j]
        targets = [l for l in range(q.n) if row[l]]
        if not (len(targets) == 1 and row[targets[0]] == 1 and targets[0] not in sink_set):
            out.append(f"Omega S({j}) is not a non-projective simple")
        if not proj_is_injective(q, j):
            out.append(f"P({j}) is not injective")
    return out


def cycle_closure_violations(q: Quiver) -> list[str]:
    """If a chain of simple syzygies with injective covers closes up, the
    algebra is self-injective and the cycle runs through every simple."""
    out = []
    for start in range(q.n):
        chain = [start]
        v = start
        while True:
            row = q.adj[v]
            targets = [l for l in range(q.n) if row[l]]
            if not (len(targets) == 1 and row[targets[0]] == 1):
                break
            v = targets[0]
            if v in chain:
                a = chain.index(v)
                cycle = chain[a:]
                if all(proj_is_injective(q, u) for u in cycle):
                    if not is_self_injective(q) or len(cycle) != q.n:
                        out.append(f"closed chain {cycle} from S({start}) without self-injectivity")
                break
            chain.append(v)
    return out


# ------------------------------------------------------------------ reports


@dataclass
class AnalysisReport:
    quiver: list[list[int]]
    n: int
    connected: bool
    delta: dict[str, Any] | None
    self_injective: bool
    simple_ring: bool
    sinks: list[int]
    sources: list[int]
    profiles: list[list[int]]
    nakayama: list[int]
    chains: list[dict[str, Any]]
    classification: dict[str, Any]
    unique_vanishing: int | None
    tau_inverse: dict[str, Any] | None
    star_sequence: dict[str, Any] | None
    oracle: dict[str, Any] = field(default_factory=dict)
    timing: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "AnalysisReport":
        return cls(**data)

    @classmethod
    def from_json(cls, line: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(line))


def _violation(statement: str, q: Quiver, **extra: Any) -> TheoremViolation:
    return TheoremViolation(statement, {"quiver": [list(r) for r in q.adj], **extra})


def run_all_checks(q: Quiver, spec: CorpusSpec | None = None, depth: int | None = None) -> AnalysisReport:
    """Every combinatorial theorem check on ``q``, plus the oracle comparison
    and the module constructions when ``q`` is within the oracle budget.
    Profiles are reported up to ``depth`` (default ``n + 1``); the checks
    always use ``n + 1``.

    Raises :class:`TheoremViolation` with the counterexample on any failure.
    """
    spec = spec or CorpusSpec()
    if not is_connected(q):
        raise UsageError(f"quiver {q} is not connected")
    started = time.perf_counter()
    n = q.n
    shape = detect_delta_shape(q)
    self_inj = is_self_injective(q)
    profiles = [ext.ext_profile(q, j, n + 1) for j in range(n)]
    nakayama = [ext.nakayama_bound(q, j) for j in range(n)]

    if self_inj and any(any(pr.dims[1:]) for pr in profiles):
        raise _violation("self-injective but some Ext^i(S, Lambda) != 0, i >= 1", q,
                         profiles=[list(pr.dims) for pr in profiles])

    chains = []
    if not self_inj:
        for j in range(n):
            if q.out_degree(j) == 0:
                continue
            top = 0
            while top < n and profiles[j].dims[top + 1] == 0:
                top += 1
            report = None
            for d in range(top + 1):
                report = ext.vanishing_chain(q, j, d)
                if not report.ok:
                    raise _violation("vanishing chain", q, vertex=j, d=d, violations=report.violations)
            chains.append({"vertex": j, "max_d": top, "chain": report.chain, "ok": True})

    for label, found in (("Ext^1 vanishing", ext1_vanishing_violations(q)), ("closed syzygy cycle", cycle_closure_violations(q))):
        if found:
            raise _violation(label, q, violations=found)

    t2 = ext.classify_self_injective(q)
    if not t2.consistent:
        raise _violation("self-injective iff some non-projective simple vanishes in 1..n", q, record=asdict(t2))

    t3b = None
    if shape is not None and shape.t > 1:
        t3b = ext.unique_vanishing_vertex(q)
        if nakayama[t3b] != n:
            raise _violation("Nakayama bound not attained at S(0)", q, bounds=nakayama)

    oracle: dict[str, Any] = {"ran": False, "primes": list(spec.primes), "diffs": []}
    t3c = star = None
    if n + q.arrow_count <= spec.oracle_budget:
        oracle["ran"] = True
        oracle["diffs"] = oracle_diff(q, spec.primes, resolution_cap=spec.resolution_cap)
        if shape is not None:
            sv = star_sequence_check(q, spec.primes[-1])
            if not sv.ok:
                raise _violation("envelope sequence of P(n-1)", q, verdict=str(sv))
            star = {"cokernel": list(sv.cokernel_dims), "ok": sv.ok}
        if shape is not None and shape.t > 1:
            rec = tau_inverse_delta(q, spec.primes[-1])
            if not rec.ok:
                raise _violation("Tr D S(0) checks", q, checks=rec.checks)
            t3c = {
                "dims": list(rec.module.dims),
                "length": rec.length,
                "cokernel_length": rec.cokernel_length,
                "reference_length": rec.reference_length,
                "c": rec.c,
                "d": rec.d,
                "ext": rec.ext,
                "checks": rec.checks,
            }

    delta = None
    if shape is not None:
        delta = {"n": shape.n, "m": shape.m, "t": shape.t, "labels": list(shape.labels)}
    return AnalysisReport(
        quiver=[list(r) for r in q.adj],
        n=n,
        connected=True,
        delta=delta,
        self_injective=self_inj,
        simple_ring=is_simple_ring(q),
        sinks=sorted(sinks(q)),
        sources=sorted(sources(q)),
        profiles=[
            list(ext.ext_profile(q, j, depth).dims if depth is not None else profiles[j].dims)
            for j in range(n)
        ],
        nakayama=nakayama,
        chains=chains,
        classification={
            "self_injective_not_simple": t2.self_injective_not_simple,
            "exists_simple_vanishing_to_n": t2.exists_simple_vanishing_to_n,
            "witness": t2.witness,
        },
        unique_vanishing=t3b,
        tau_inverse=t3c,
        star_sequence=star,
        oracle=oracle,
        timing=round(time.perf_counter() - started, 6) if spec.timing else None,
    )


def run_corpus(spec: CorpusSpec, out: TextIO | None = None) -> Iterator[AnalysisReport]:
    """Check every quiver of the corpus in enumeration order, writing one JSON
    line per report to ``out``. Oracle disagreements abort like theorem
    violations."""
    for q in enumerate_connected(spec):
        report = run_all_checks(q, spec)
        if report.oracle["diffs"]:
            raise _violation("oracle disagreement", q, diffs=report.oracle["diffs"])
        if out is not None:
            out.write(report.to_json() + "\n")
        yield report
