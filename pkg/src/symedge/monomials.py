"""Exact arithmetic on monomials and monomial ideals.

A monomial is a tuple of non-negative ints of fixed length, one slot per
variable of the ambient polynomial ring. A :class:`MonomialIdeal` stores
only its minimal generators, kept as a divisibility antichain in graded
lexicographic order, so two ideals are equal exactly when their ``gens``
tuples are equal. The zero ideal has no generators; the unit ideal is
generated by the all-zeros monomial.

No coefficient field is ever touched: sums, products, powers,
intersections, membership and least generating degree are all pure
exponent-vector combinatorics. Exponents are machine integers; everything
in scope keeps degrees far below the int64 guard enforced at construction.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

Monomial = tuple[int, ...]

# Exponent ceiling so int64 numpy paths cannot overflow in sums/lcms.
_MAX_EXPONENT = 1 << 31

# Target element count for blocked numpy broadcasts (memory cap ~32 MB bool).
_BLOCK_ELEMS = 1 << 22


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b`` componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sort_key(m: Monomial) -> tuple[int, Monomial]:
    # Canonical generator order: graded, then lex on exponent vectors.
    return (sum(m), m)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, represented by its minimal generating set.

    ``gens`` is always a divisibility antichain sorted graded-lex; build
    instances through :func:`minimalize` (or the ideal operations below)
    rather than by hand.
    """

    nvars: int
    gens: tuple[Monomial, ...]

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and sum(self.gens[0]) == 0

    def num_gens(self) -> int:
        """Minimal number of generators (the antichain size)."""
        return len(self.gens)

    def to_json(self) -> str:
        return json.dumps({"vars": self.nvars, "gens": [list(g) for g in self.gens]})


def zero_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, ())


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, ((0,) * nvars,))


def ideal_from_json(text: str) -> MonomialIdeal:
    data = json.loads(text)
    return minimalize(int(data["vars"]), [tuple(g) for g in data["gens"]])


def _np_antichain(arr: np.ndarray) -> np.ndarray:
    """Divisibility-minimal rows of a non-negative integer matrix.

    Rows are deduplicated, then processed in increasing total degree;
    within one degree distinct monomials never divide each other, so each
    degree layer only needs testing against previously kept rows. The
    domination test is a blocked numpy broadcast to bound peak memory.
    """
    arr = np.unique(arr, axis=0)
    if arr.shape[0] <= 1:
        return arr
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr = arr[order]
    deg = deg[order]
    boundaries = np.flatnonzero(np.diff(deg)) + 1
    kept: np.ndarray | None = None
    for layer in np.split(arr, boundaries):
        if kept is not None:
            dominated = np.zeros(len(layer), dtype=bool)
            rows_per = max(1, _BLOCK_ELEMS // (kept.shape[0] * kept.shape[1] + 1))
            for i in range(0, len(layer), rows_per):
                blk = layer[i : i + rows_per]
                dominated[i : i + rows_per] = (
                    (blk[:, None, :] >= kept[None, :, :]).all(axis=2).any(axis=1)
                )
            layer = layer[~dominated]
            if len(layer):
                kept = np.concatenate([kept, layer])
        else:
            kept = layer
    assert kept is not None
    return kept


def _from_rows(nvars: int, rows) -> MonomialIdeal:
    gens = sorted((tuple(int(e) for e in row) for row in rows), key=_sort_key)
    return MonomialIdeal(nvars, tuple(gens))


def minimalize(nvars: int, monomials) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``monomials``.

    Raises ValueError on mixed exponent-vector lengths or negative
    exponents. An empty input gives the zero ideal.
    """
    raw: list[Monomial] = []
    for m in monomials:
        t = tuple(int(e) for e in m)
        if len(t) != nvars:
            raise ValueError(f"monomial of length {len(t)} in ambient ring with {nvars} variables")
        if any(e < 0 for e in t):
            raise ValueError(f"negative exponent in {t}")
        if any(e >= _MAX_EXPONENT for e in t):
            raise ValueError(f"exponent too large in {t}")
        raw.append(t)
    if not raw:
        return zero_ideal(nvars)
    if nvars == 0:
        return MonomialIdeal(0, ((),))
    arr = _np_antichain(np.asarray(raw, dtype=np.int64))
    return _from_rows(nvars, arr)


def _check_ambient(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.nvars != b.nvars:
        raise ValueError(f"ambient mismatch: {a.nvars} vs {b.nvars} variables")


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(a, b)
    return minimalize(a.nvars, a.gens + b.gens)


def _blocked_combine(a: np.ndarray, b: np.ndarray, combine) -> np.ndarray:
    """All pairwise combine(a_i, b_j) rows, deduplicated blockwise."""
    nvars = a.shape[1]
    blocks = []
    rows_per = max(1, _BLOCK_ELEMS // (b.shape[0] * nvars + 1))
    for i in range(0, a.shape[0], rows_per):
        blk = combine(a[i : i + rows_per, None, :], b[None, :, :]).reshape(-1, nvars)
        blocks.append(np.unique(blk, axis=0))
    return blocks[0] if len(blocks) == 1 else np.unique(np.concatenate(blocks), axis=0)


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(a, b)
    if a.is_zero() or b.is_zero():
        return zero_ideal(a.nvars)
    ga = np.asarray(a.gens, dtype=np.int64)
    gb = np.asarray(b.gens, dtype=np.int64)
    return _from_rows(a.nvars, _np_antichain(_blocked_combine(ga, gb, np.add)))


def ideal_power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th power by square-and-multiply with interleaved minimalization."""
    if k < 0:
        raise ValueError("negative ideal power")
    result = unit_ideal(a.nvars)
    base = a
    while k:
        if k & 1:
            result = ideal_product(result, base)
        k >>= 1
        if k:
            base = ideal_product(base, base)
    return result


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection via minimalized pairwise lcms of the generators."""
    _check_ambient(a, b)
    if a.is_zero() or b.is_zero():
        return zero_ideal(a.nvars)
    ga = np.asarray(a.gens, dtype=np.int64)
    gb = np.asarray(b.gens, dtype=np.int64)
    return _from_rows(a.nvars, _np_antichain(_blocked_combine(ga, gb, np.maximum)))


def intersect_many(ideals) -> MonomialIdeal:
    """Left fold of :func:`intersect`, minimalizing after every step.

    Interleaved minimalization keeps the intermediate generator sets small,
    which is the dominant cost of iterated intersections.
    """
    ideals = list(ideals)
    if not ideals:
        raise ValueError("intersection of an empty family is undefined here")
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = intersect(acc, nxt)
    return acc


def member(m: Monomial, a: MonomialIdeal) -> bool:
    """Monomial membership: some generator divides ``m``."""
    if len(m) != a.nvars:
        raise ValueError("monomial length does not match ambient ring")
    return any(divides(g, m) for g in a.gens)


def contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Ideal containment b <= a, checked generator by generator."""
    _check_ambient(a, b)
    return all(member(g, a) for g in b.gens)


def alpha(a: MonomialIdeal) -> int:
    """Least degree of a minimal generator."""
    if a.is_zero():
        raise ValueError("alpha of the zero ideal is undefined")
    return sum(a.gens[0])  # gens sorted graded-lex, so the first is minimal


def compositions(total: int, parts: int):
    """Yield all tuples of ``parts`` non-negative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def composition_array(total: int, parts: int) -> np.ndarray:
    return np.asarray(list(compositions(total, parts)), dtype=np.int64).reshape(-1, parts)


def prime_power_gens(variables, m: int, ambient: int) -> MonomialIdeal:
    """Generators of P^m for the prime P spanned by ``variables``.

    These are exactly the monomials of degree ``m`` supported on the given
    variables; they already form an antichain.
    """
    vs = sorted(set(int(v) for v in variables))
    if m < 1:
        raise ValueError("prime power exponent must be >= 1")
    if not vs:
        raise ValueError("prime ideal needs at least one variable")
    if vs[0] < 0 or vs[-1] >= ambient:
        raise ValueError("variable index out of range")
    gens = []
    for comp in compositions(m, len(vs)):
        e = [0] * ambient
        for v, c in zip(vs, comp):
            e[v] = c
        gens.append(tuple(e))
    return MonomialIdeal(ambient, tuple(sorted(gens, key=_sort_key)))


def monomials_of_degree(nvars: int, d: int):
    """Iterate every exponent vector of total degree exactly ``d``."""
    return compositions(d, nvars)


def graded_count(a: MonomialIdeal, d: int) -> int:
    """Number of degree-``d`` monomials lying in the ideal."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    if a.is_zero():
        return 0
    gens = np.asarray(a.gens, dtype=np.int64)
    gens = gens[gens.sum(axis=1) <= d]
    if not len(gens):
        return 0
    count = 0
    block: list[Monomial] = []

    def flush() -> int:
        if not block:
            return 0
        arr = np.asarray(block, dtype=np.int64)
        return int((arr[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1).sum())

    rows_per = max(1, _BLOCK_ELEMS // (gens.shape[0] * a.nvars + 1))
    for m in monomials_of_degree(a.nvars, d):
        block.append(m)
        if len(block) >= rows_per:
            count += flush()
            block = []
    count += flush()
    return count
