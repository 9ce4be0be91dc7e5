"""Asymptotic invariants of symbolic powers: alpha tables, Waldschmidt
constants, resurgence scans, symbolic defect, and the structural
decomposition checks for the supported graph families.

Closed forms exist for two families, identified by the context's family
tag: ("cliquesum", n, m) for the one-point union of the odd cycles
C_{2n+1} and C_{2m+1}, and ("complete", n). Every ratio is an exact
Fraction; no floating point enters any comparison. Compute budgets are
counted in table cells, never wall time, so truncated reports are still
byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .monomials import (
    MonomialIdeal,
    alpha,
    contains,
    ideal_power,
    ideal_product,
    minimalize,
    prime_power_gens,
    unit_ideal,
)
from .symbolic import (
    EdgeIdealContext,
    containment,
    dmin_clique_sum,
    ordinary_power,
    sdefect,
    symbolic_power,
)


def family_id(family: tuple | None) -> str:
    if family is None:
        return "custom"
    kind, *params = family
    return f"{kind}:{','.join(str(p) for p in params)}" if params else kind


def alpha_closed_form(family: tuple | None, t: int) -> int | None:
    """Closed-form least generating degree of the t-th symbolic power.

    Clique-sum of C_{2n+1} and C_{2m+1} (n <= m): 2t - floor(t/(n+1)).
    Complete graph on n vertices: t + ceil(t/(n-1)). Other families: None.
    """
    if family is None:
        return None
    if family[0] == "cliquesum":
        n = family[1]
        return 2 * t - t // (n + 1)
    if family[0] == "complete":
        n = family[1]
        return t + -(-t // (n - 1))
    return None


@dataclass(frozen=True)
class AlphaRow:
    s: int
    computed: int
    closed_form: int | None
    match: bool | None


@dataclass(frozen=True)
class AlphaTable:
    family: str
    rows: tuple[AlphaRow, ...]
    truncated: bool


def alpha_table(ctx: EdgeIdealContext, s_max: int, budget_cells: int | None = None) -> AlphaTable:
    """Exact alpha values for s = 1..s_max next to the family closed form.

    When a cell budget is given and exhausted, the table is returned
    truncated and flagged, never silently shortened.
    """
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    rows = []
    truncated = False
    for s in range(1, s_max + 1):
        if budget_cells is not None and len(rows) >= budget_cells:
            truncated = True
            break
        computed = alpha(symbolic_power(ctx, s))
        closed = alpha_closed_form(ctx.family, s)
        rows.append(AlphaRow(s, computed, closed, None if closed is None else computed == closed))
    return AlphaTable(family_id(ctx.family), tuple(rows), truncated)


def waldschmidt(family: tuple) -> Fraction:
    """Closed-form Waldschmidt constant for the supported families."""
    if family and family[0] == "cliquesum":
        n = family[1]
        return Fraction(2 * n + 1, n + 1)
    if family and family[0] == "complete":
        n = family[1]
        return Fraction(n, n - 1)
    raise ValueError(f"no closed-form Waldschmidt constant for family {family_id(family)}")


def waldschmidt_estimate(ctx: EdgeIdealContext, s_max: int) -> list[Fraction]:
    """The exact ratios alpha(I^(s))/s for s = 1..s_max."""
    return [Fraction(alpha(symbolic_power(ctx, s)), s) for s in range(1, s_max + 1)]


@dataclass(frozen=True)
class ResurgenceReport:
    family: str
    s_max: int
    t_max: int
    non_containment: tuple[tuple[int, int], ...]
    lower_bound: Fraction | None
    closed_form: Fraction | None
    formula_sup: Fraction | None
    truncated: bool


def resurgence_formula_sup(n: int, s_limit: int = 100_000) -> Fraction:
    """Arithmetic resurgence sup for a complete graph from the alpha formula.

    Uses only the closed forms: non-containment at (s, t) holds exactly when
    s + ceil(s/(n-1)) < 2t, so for each s the best ratio is s over the
    smallest such t. No ideal is computed; results carry the
    "formula_derived" provenance tag in reports.
    """
    best_s, best_t = 1, 1
    for s in range(1, s_limit + 1):
        a = s + -(-s // (n - 1))
        t_min = a // 2 + 1
        if s * best_t > best_s * t_min:
            best_s, best_t = s, t_min
    return Fraction(best_s, best_t)


def resurgence_search(
    ctx: EdgeIdealContext,
    s_max: int,
    t_max: int,
    budget_cells: int | None = None,
    formula_s_limit: int = 100_000,
) -> ResurgenceReport:
    """Exhaustive containment scan of the (s, t) grid.

    Every reported pair is a verified witness of I^(s) not contained in
    I^t; the lower bound is the exact maximum of s/t among them. For
    complete graphs the closed-form resurgence and the formula-derived
    arithmetic sup are attached as well.
    """
    pairs: list[tuple[int, int]] = []
    truncated = False
    cells = 0
    for s in range(1, s_max + 1):
        for t in range(1, t_max + 1):
            if budget_cells is not None and cells >= budget_cells:
                truncated = True
                break
            cells += 1
            if not containment(ctx, s, t):
                pairs.append((s, t))
        if truncated:
            break
    lower = max((Fraction(s, t) for s, t in pairs), default=None)
    closed = None
    formula = None
    if ctx.family and ctx.family[0] == "complete":
        n = ctx.family[1]
        closed = Fraction(2 * (n - 1), n)
        formula = resurgence_formula_sup(n, formula_s_limit)
    return ResurgenceReport(
        family_id(ctx.family), s_max, t_max, tuple(pairs), lower, closed, formula, truncated
    )


def sdefect_closed_form(family: tuple, t: int) -> int:
    """Published closed-form symbolic defect, within its stated range only.

    Clique-sum with n < m: floor(t/(n+1)) for 1 <= t <= m, plus one at
    t = m+1. Same-length clique-sum (n = m): the weighted binomial sum over
    the cycle-degree splits, any t >= 1. Complete graph: C(n, t+1) for
    2 <= t <= n-1. Outside these ranges the formulas are not established
    and a range error is raised rather than extrapolating.
    """
    if not family:
        raise ValueError("no closed-form symbolic defect for a custom graph")
    if family[0] == "cliquesum":
        n, m = family[1], family[2]
        if n == m:
            if t < 1:
                raise ValueError("symbolic defect needs t >= 1")
            k = t // (n + 1)
            return sum(comb(t - j * (n + 1) + 4 * n + 1, 4 * n + 1) * (j + 1) for j in range(1, k + 1))
        if 1 <= t <= m:
            return t // (n + 1)
        if t == m + 1:
            return t // (n + 1) + 1
        raise ValueError(f"closed-form sdefect for cliquesum({n},{m}) covers 1 <= t <= {m + 1}")
    if family[0] == "complete":
        n = family[1]
        if 2 <= t <= n - 1:
            return comb(n, t + 1)
        raise ValueError(f"closed-form sdefect for complete:{n} covers 2 <= t <= {n - 1}")
    raise ValueError(f"no closed-form symbolic defect for family {family_id(family)}")


@dataclass(frozen=True)
class SdefectRow:
    t: int
    computed: int
    closed_form: int | None
    match: bool | None


def sdefect_comparison(ctx: EdgeIdealContext, t: int) -> SdefectRow:
    """Direct symbolic defect next to the closed form, when one applies.

    Disagreements are reported in the row, never suppressed: the computed
    column is the ground truth (a Nakayama count over the actual minimal
    generators), the closed-form column is the published formula.
    """
    computed = sdefect(ctx, t)
    closed: int | None
    try:
        closed = sdefect_closed_form(ctx.family, t) if ctx.family else None
    except ValueError:
        closed = None
    return SdefectRow(t, computed, closed, None if closed is None else computed == closed)


def _weighted_compositions(total: int, max_part: int):
    """Tuples (r_1..r_max_part) of non-negative ints with sum i*r_i = total."""

    def rec(remaining: int, part: int):
        if part == 0:
            if remaining == 0:
                yield ()
            return
        for r in range(remaining // part + 1):
            for rest in rec(remaining - part * r, part - 1):
                yield rest + (r,)

    return rec(total, max_part)


@dataclass(frozen=True)
class ReesCheck:
    family: str
    s: int
    equal: bool
    only_symbolic: tuple  # generators of I^(s) missing from the decomposition
    only_decomposition: tuple


def rees_decomposition_check(ctx: EdgeIdealContext, s: int) -> ReesCheck:
    """Rebuild I^(s) from the family's symbolic Rees generators and compare.

    Complete graph: sum of products I^{r_1} (I^(2))^{r_2} ... over the
    weighted compositions of s. Same-length clique-sum: sum of
    I^{s-t(n+1)} c1^p c2^q over p+q = t <= floor(s/(n+1)). Different
    lengths: sum of I^{s-t1(n+1)-t2(m+1)} (c1)^{t1} (D_min(m+1))^{t2}.
    Equality is exact generator-set equality; the diff lists any
    one-sided generators.
    """
    if not ctx.family or ctx.family[0] not in ("cliquesum", "complete"):
        raise ValueError("Rees decomposition is only described for clique-sum and complete families")
    nv = ctx.nvars
    gens = []
    if ctx.family[0] == "complete":
        n = ctx.family[1]
        for rs in _weighted_compositions(s, n - 1):
            term = unit_ideal(nv)
            for i, r in enumerate(rs, start=1):
                if r:
                    term = ideal_product(term, ideal_power(symbolic_power(ctx, i), r))
            gens.extend(term.gens)
    else:
        cs = ctx.cliquesum
        n, m = ctx.family[1], ctx.family[2]
        if n == m:
            for t in range(s // (n + 1) + 1):
                for p in range(t + 1):
                    q = t - p
                    mono = tuple(p * a + q * b for a, b in zip(cs.c1, cs.c2))
                    term = ideal_product(ordinary_power(ctx, s - t * (n + 1)), MonomialIdeal(nv, (mono,)))
                    gens.extend(term.gens)
        else:
            dmin = dmin_clique_sum(cs, m + 1)
            for t1 in range(s // (n + 1) + 1):
                for t2 in range(s // (m + 1) + 1):
                    rem = s - t1 * (n + 1) - t2 * (m + 1)
                    if rem < 0:
                        continue
                    c1_pow = MonomialIdeal(nv, (tuple(t1 * a for a in cs.c1),))
                    term = ideal_product(ordinary_power(ctx, rem), c1_pow)
                    term = ideal_product(term, ideal_power(dmin, t2))
                    gens.extend(term.gens)
    rhs = minimalize(nv, gens)
    lhs = symbolic_power(ctx, s)
    lhs_set, rhs_set = set(lhs.gens), set(rhs.gens)
    return ReesCheck(
        family_id(ctx.family),
        s,
        lhs.gens == rhs.gens,
        tuple(sorted(lhs_set - rhs_set)),
        tuple(sorted(rhs_set - lhs_set)),
    )


def artinian_check(ctx: EdgeIdealContext, t: int) -> bool:
    """Whether (x_1..x_n)^{t-1} * I^(t) lands inside I^t.

    Established for complete graphs only; other families raise.
    """
    if not ctx.family or ctx.family[0] != "complete":
        raise ValueError("the Artinian product containment is proved for complete graphs only")
    if t < 1:
        raise ValueError("t must be >= 1")
    nv = ctx.nvars
    mpow = prime_power_gens(range(nv), t - 1, nv) if t >= 2 else unit_ideal(nv)
    product = ideal_product(mpow, symbolic_power(ctx, t))
    return contains(ordinary_power(ctx, t), product)
