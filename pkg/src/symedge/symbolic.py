"""Symbolic powers of edge ideals via minimal vertex covers.

The t-th symbolic power of an edge ideal is the intersection of P^t over
the monomial primes P spanned by the minimal vertex covers. Equivalently a
monomial lies in it exactly when its exponent weight on every minimal
cover is at least t; both routes are implemented here and cross-checked in
the test suite.

Ordinary-power membership goes through optimal factorizations: the largest
number b(m) of edges (with multiplicity) whose product divides m, so that
m lies in I^t exactly when b(m) >= t.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .graphs import (
    CliqueSumSpec,
    CoverSet,
    Edge,
    FamilyBuild,
    SimpleGraph,
    clique_sum,
    default_labels,
    minimal_vertex_covers,
    parse_family,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    _np_antichain,
    composition_array,
    degree,
    ideal_power,
    ideal_product,
    minimalize,
    unit_ideal,
)


def edge_monomial(nvars: int, u: int, v: int) -> Monomial:
    e = [0] * nvars
    e[u] += 1
    e[v] += 1
    return tuple(e)


class EdgeIdealContext:
    """A graph together with its minimal covers and edge ideal.

    Covers and the edge ideal are computed once at construction and never
    mutated; the private caches only memoize pure results (symbolic powers,
    ordinary powers, b-values). Graphs without edges are rejected so that
    symbolic powers never hit the empty-intersection convention.
    """

    def __init__(
        self,
        graph: SimpleGraph,
        *,
        family: tuple | None = None,
        labels: tuple[str, ...] | None = None,
        cliquesum: CliqueSumSpec | None = None,
    ):
        if not graph.edges:
            raise ValueError("edge ideal context needs a graph with at least one edge")
        self.graph = graph
        self.covers: CoverSet = minimal_vertex_covers(graph)
        self.edge_ideal: MonomialIdeal = minimalize(
            graph.n_vertices,
            [edge_monomial(graph.n_vertices, u, v) for u, v in graph.sorted_edges()],
        )
        self.family = family
        self.labels = labels if labels is not None else default_labels(graph.n_vertices)
        self.cliquesum = cliquesum
        self._edge_list: list[Edge] = graph.sorted_edges()
        self._sym_cache: dict[int, MonomialIdeal] = {}
        self._pow_cache: dict[int, MonomialIdeal] = {}
        self._b_memo: dict[Monomial, tuple[int, int]] = {}

    @property
    def nvars(self) -> int:
        return self.graph.n_vertices

    @classmethod
    def from_build(cls, build: FamilyBuild) -> "EdgeIdealContext":
        return cls(
            build.graph,
            family=(build.kind, *build.params),
            labels=build.labels,
            cliquesum=build.cliquesum,
        )

    @classmethod
    def from_family(cls, spec: str) -> "EdgeIdealContext":
        return cls.from_build(parse_family(spec))


def vertex_weight(cover, m: Monomial) -> int:
    """Sum of the exponents of ``m`` over the given vertex subset."""
    return sum(m[i] for i in cover)


def symbolic_member(ctx: EdgeIdealContext, m: Monomial, t: int) -> bool:
    """Membership in the t-th symbolic power by the cover-weight criterion."""
    return all(vertex_weight(cover, m) >= t for cover in ctx.covers)


def _fold_cover_constraints(nvars: int, covers, t: int) -> np.ndarray:
    """Minimal monomials whose weight on every cover is at least ``t``.

    Folds the prime-power intersection one cover at a time. A generator r
    of the partial intersection meets the next cover V either outright, or
    through the minimal lcms with the degree-t monomials on V; those are
    exactly r plus the compositions of the weight deficit t - w_V(r) over
    V. (Exponents never exceed t: the deficit is at most t minus the
    largest V-coordinate of r.)

    Minimality filtering is pointwise, no pairwise divisibility needed:
    dropping one unit of coordinate i leaves the partial intersection
    exactly when some processed cover through i has weight t, so a member
    is a minimal generator iff every supported coordinate is tight in some
    processed cover. Candidate sets always contain all minimal generators,
    so this filter returns precisely the minimal generating set.
    """
    order = sorted(covers, key=lambda c: (len(c), c))
    incidence = np.zeros((len(order), nvars), dtype=np.int64)
    for j, cov in enumerate(order):
        incidence[j, list(cov)] = 1
    first = np.asarray(order[0], dtype=np.intp)
    comps = composition_array(t, len(first))
    arr = np.zeros((len(comps), nvars), dtype=np.int64)
    arr[:, first] = comps
    for step in range(1, len(order)):
        cols = np.asarray(order[step], dtype=np.intp)
        weights = arr[:, cols].sum(axis=1)
        blocks = [arr[weights >= t]]
        deficits = np.unique(t - weights[weights < t])
        for d in deficits:
            rows = arr[weights == t - d]
            comps = composition_array(int(d), len(cols))
            expanded = np.repeat(rows, len(comps), axis=0)
            add = np.zeros((len(comps), nvars), dtype=np.int64)
            add[:, cols] = comps
            expanded += np.tile(add, (len(rows), 1))
            blocks.append(expanded)
        cand = np.unique(np.concatenate(blocks), axis=0)
        processed = incidence[: step + 1]
        tight = (cand @ processed.T) == t
        tight_through = tight @ processed
        keep = ((cand == 0) | (tight_through > 0)).all(axis=1)
        arr = cand[keep]
    return arr


def symbolic_power(ctx: EdgeIdealContext, t: int) -> MonomialIdeal:
    """Minimal generators of the t-th symbolic power.

    t = 0 returns the unit ideal so that product decompositions over mixed
    degrees stay uniform.
    """
    if t < 0:
        raise ValueError("symbolic power exponent must be >= 0")
    if t == 0:
        return unit_ideal(ctx.nvars)
    cached = ctx._sym_cache.get(t)
    if cached is None:
        arr = _fold_cover_constraints(ctx.nvars, ctx.covers, t)
        # the fold output is already the minimal generating set
        gens = sorted((tuple(int(e) for e in row) for row in arr), key=lambda g: (sum(g), g))
        cached = MonomialIdeal(ctx.nvars, tuple(gens))
        ctx._sym_cache[t] = cached
    return cached


def ordinary_power(ctx: EdgeIdealContext, t: int) -> MonomialIdeal:
    """Cached ordinary power I^t of the edge ideal."""
    if t < 0:
        raise ValueError("ideal power exponent must be >= 0")
    cached = ctx._pow_cache.get(t)
    if cached is None:
        cached = ideal_power(ctx.edge_ideal, t)
        ctx._pow_cache[t] = cached
    return cached


@dataclass(frozen=True)
class LDSplit:
    """Generators of a symbolic power split at the degree-2t threshold."""

    t: int
    L_gens: tuple[Monomial, ...]  # degree >= 2t
    D_gens: tuple[Monomial, ...]  # degree <= 2t - 1


def split_LD(ctx: EdgeIdealContext, t: int) -> LDSplit:
    gens = symbolic_power(ctx, t).gens
    lows = tuple(g for g in gens if degree(g) < 2 * t)
    highs = tuple(g for g in gens if degree(g) >= 2 * t)
    return LDSplit(t, highs, lows)


@dataclass(frozen=True)
class OptimalFactorization:
    """A maximum-edge factorization m = (product of edges) * ancillary."""

    b: int
    edge_multiset: tuple[tuple[Edge, int], ...]
    ancillary: Monomial


def _b_of(ctx: EdgeIdealContext, m: Monomial) -> int:
    """Largest number of edges, with multiplicity, whose product divides m.

    Exhaustive search memoized on the remaining exponent vector; the memo
    also records the first maximizing edge in the canonical edge order so
    witnesses are deterministic.
    """
    memo = ctx._b_memo
    edges = ctx._edge_list

    def best(ex: Monomial) -> tuple[int, int]:
        hit = memo.get(ex)
        if hit is not None:
            return hit
        best_b, best_e = 0, -1
        for idx, (u, v) in enumerate(edges):
            if ex[u] >= 1 and ex[v] >= 1:
                child = list(ex)
                child[u] -= 1
                child[v] -= 1
                nb = best(tuple(child))[0] + 1
                if nb > best_b:
                    best_b, best_e = nb, idx
        memo[ex] = (best_b, best_e)
        return memo[ex]

    return best(tuple(int(e) for e in m))[0]


def b_value(ctx: EdgeIdealContext, m: Monomial) -> OptimalFactorization:
    """b(m) along with one optimal factorization witnessing it."""
    m = tuple(int(e) for e in m)
    _b_of(ctx, m)
    counts: dict[Edge, int] = {}
    ex = m
    while True:
        b, idx = ctx._b_memo[ex]
        if b == 0:
            break
        u, v = ctx._edge_list[idx]
        counts[(u, v)] = counts.get((u, v), 0) + 1
        child = list(ex)
        child[u] -= 1
        child[v] -= 1
        ex = tuple(child)
    ancillary = ex
    multiset = tuple(sorted(counts.items()))
    return OptimalFactorization(ctx._b_memo[m][0], multiset, ancillary)


def power_member(ctx: EdgeIdealContext, m: Monomial, t: int) -> bool:
    """Membership in the ordinary power I^t, decided by b(m) >= t."""
    if t < 0:
        raise ValueError("power exponent must be >= 0")
    if t == 0:
        return True
    return _b_of(ctx, m) >= t


def dmin_clique_sum(cs: CliqueSumSpec, t: int) -> MonomialIdeal:
    """The minimal low-degree generators D_min(t) for a clique-sum of cycles.

    Generated by the products I^i * c1^s * c2^b over non-negative solutions
    of i + (n+1)s + (m+1)b = t with i < t. Only defined on the proven range
    n+1 <= t <= m+1; anything else is an explicit error, no extrapolation.
    """
    n, m = cs.n, cs.m
    if not (n + 1 <= t <= m + 1):
        raise ValueError(f"D_min(t) is established only for {n + 1} <= t <= {m + 1}, got t={t}")
    graph, _ = clique_sum(n, m)
    nv = cs.n_vertices
    edge_ideal = minimalize(nv, [edge_monomial(nv, u, v) for u, v in graph.sorted_edges()])
    gens: list[Monomial] = []
    for b in range(t // (m + 1) + 1):
        for s in range((t - (m + 1) * b) // (n + 1) + 1):
            i = t - (n + 1) * s - (m + 1) * b
            if i < 0 or i >= t:
                continue
            cyc = tuple(s * a + b * c for a, c in zip(cs.c1, cs.c2))
            term = ideal_product(ideal_power(edge_ideal, i), MonomialIdeal(nv, (cyc,)))
            gens.extend(term.gens)
    return minimalize(nv, gens)


def sdefect(ctx: EdgeIdealContext, t: int) -> int:
    """Minimal generators the ordinary power is missing.

    For monomial ideals, membership in I^(t) = I^t + (extras) means
    membership in a summand, so the count of minimal generators of I^(t)
    outside I^t equals the minimal generator count of I^(t)/I^t.
    """
    if t < 1:
        raise ValueError("symbolic defect needs t >= 1")
    gens = symbolic_power(ctx, t).gens
    return sum(1 for g in gens if _b_of(ctx, g) < t)


def containment(ctx: EdgeIdealContext, s: int, t: int) -> bool:
    """Whether I^(s) is contained in I^t."""
    if s < 1 or t < 1:
        raise ValueError("containment is defined for s, t >= 1")
    return all(_b_of(ctx, g) >= t for g in symbolic_power(ctx, s).gens)


_TERM_RE = re.compile(r"^([A-Za-z]\w*)(?:\^(\d+))?$")


def parse_monomial(text: str, labels: tuple[str, ...]) -> Monomial:
    """Parse a monomial literal like "x1^2*x2*y3" against a labeling.

    "1" denotes the unit monomial. Repeated variables accumulate.
    """
    index = {name: i for i, name in enumerate(labels)}
    exps = [0] * len(labels)
    body = text.strip()
    if body == "1":
        return tuple(exps)
    for term in body.split("*"):
        match = _TERM_RE.match(term.strip())
        if match is None:
            raise ValueError(f"bad monomial term {term!r}")
        name, power = match.group(1), match.group(2)
        if name not in index:
            raise ValueError(f"unknown variable {name!r}")
        exps[index[name]] += int(power) if power is not None else 1
    return tuple(exps)


def monomial_string(m: Monomial, labels: tuple[str, ...]) -> str:
    parts = []
    for name, e in zip(labels, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
