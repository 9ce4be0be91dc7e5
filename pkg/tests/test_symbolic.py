import itertools
import random

import pytest

from symedge.graphs import clique_sum, cycle, make_graph
from symedge.monomials import (
    MonomialIdeal,
    alpha,
    contains,
    degree,
    ideal_product,
    ideal_power,
    ideal_sum,
    intersect_many,
    member,
    minimalize,
    monomials_of_degree,
    prime_power_gens,
)
from symedge.symbolic import (
    EdgeIdealContext,
    b_value,
    containment,
    dmin_clique_sum,
    monomial_string,
    ordinary_power,
    parse_monomial,
    power_member,
    sdefect,
    split_LD,
    symbolic_member,
    symbolic_power,
    vertex_weight,
)


class TestContext:
    def test_rejects_edgeless_graph(self):
        with pytest.raises(ValueError):
            EdgeIdealContext(make_graph(3, []))

    def test_edge_ideal_generators(self, ctx_k3):
        assert ctx_k3.edge_ideal.gens == ((0, 1, 1), (1, 0, 1), (1, 1, 0))


class TestVertexWeight:
    def test_empty_cover(self):
        assert vertex_weight((), (2, 1, 0)) == 0

    def test_weight_arithmetic(self):
        # w_{x1,x3}(x1^2 x2 x3) = 3
        assert vertex_weight((0, 2), (2, 1, 1)) == 3

    def test_first_cycle_weight_constant_on_covers(self, ctx_cs23):
        c1 = ctx_cs23.cliquesum.c1
        assert {vertex_weight(v, c1) for v in ctx_cs23.covers} == {3}


class TestSymbolicMember:
    def test_edges_at_level_one(self, ctx_cs22):
        for g in ctx_cs22.edge_ideal.gens:
            assert symbolic_member(ctx_cs22, g, 1)

    def test_cycle_monomial_level_three(self, ctx_cs23):
        assert symbolic_member(ctx_cs23, ctx_cs23.cliquesum.c1, 3)

    def test_single_edge_fails_level_two(self, ctx_k3):
        assert not symbolic_member(ctx_k3, (1, 1, 0), 2)


class TestSymbolicPower:
    def test_level_one_is_edge_ideal(self, ctx_cs23):
        assert symbolic_power(ctx_cs23, 1).gens == ctx_cs23.edge_ideal.gens

    def test_k3_level_two(self, ctx_k3):
        assert symbolic_power(ctx_k3, 2).gens == (
            (1, 1, 1),
            (0, 2, 2),
            (2, 0, 2),
            (2, 2, 0),
        )

    def test_bipartite_equals_ordinary(self):
        ctx = EdgeIdealContext(cycle(4))
        assert symbolic_power(ctx, 3).gens == ordinary_power(ctx, 3).gens

    def test_level_zero_unit(self, ctx_k3):
        assert symbolic_power(ctx_k3, 0).is_unit()

    def test_negative_rejected(self, ctx_k3):
        with pytest.raises(ValueError):
            symbolic_power(ctx_k3, -1)

    @pytest.mark.parametrize("family,tmax", [("complete:3", 4), ("complete:4", 3),
                                             ("cycle:5", 3), ("cliquesum:2,2", 3)])
    def test_agrees_with_generic_prime_power_intersection(self, family, tmax):
        ctx = EdgeIdealContext.from_family(family)
        for t in range(1, tmax + 1):
            generic = intersect_many(
                [prime_power_gens(cover, t, ctx.nvars) for cover in ctx.covers]
            )
            assert symbolic_power(ctx, t).gens == generic.gens

    @pytest.mark.parametrize("family", ["complete:4", "cycle:5", "cliquesum:2,2"])
    def test_membership_oracle_equivalence(self, family):
        # weight criterion vs divisibility against the computed generators
        ctx = EdgeIdealContext.from_family(family)
        for t in range(1, 4):
            ideal = symbolic_power(ctx, t)
            for d in range(2 * t + 2):
                for m in monomials_of_degree(ctx.nvars, d):
                    assert symbolic_member(ctx, m, t) == member(m, ideal)

    def test_ordinary_inside_symbolic_and_monotone(self, ctx_cs22):
        for t in range(1, 5):
            assert contains(symbolic_power(ctx_cs22, t), ordinary_power(ctx_cs22, t))
        for t in range(1, 4):
            assert contains(symbolic_power(ctx_cs22, t), symbolic_power(ctx_cs22, t + 1))

    def test_alpha_subadditive(self, ctx_cs23):
        a = {t: alpha(symbolic_power(ctx_cs23, t)) for t in range(1, 7)}
        for s in range(1, 6):
            for t in range(1, 7 - s):
                assert a[s + t] <= a[s] + a[t]


class TestSplitLD:
    def test_k3_level_two(self, ctx_k3):
        split = split_LD(ctx_k3, 2)
        assert split.D_gens == ((1, 1, 1),)
        assert split.L_gens == ((0, 2, 2), (2, 0, 2), (2, 2, 0))

    def test_cycle_monomial_in_low_part(self, ctx_cs23):
        assert ctx_cs23.cliquesum.c1 in split_LD(ctx_cs23, 3).D_gens

    def test_bipartite_low_part_empty(self):
        ctx = EdgeIdealContext(cycle(4))
        for t in range(1, 5):
            assert split_LD(ctx, t).D_gens == ()

    def test_parts_partition_generators(self, ctx_cs22):
        split = split_LD(ctx_cs22, 3)
        merged = sorted(split.L_gens + split.D_gens, key=lambda g: (sum(g), g))
        assert tuple(merged) == symbolic_power(ctx_cs22, 3).gens
        assert all(degree(g) >= 6 for g in split.L_gens)
        assert all(degree(g) < 6 for g in split.D_gens)


class TestBValue:
    def test_unit_monomial(self, ctx_k3):
        fact = b_value(ctx_k3, (0, 0, 0))
        assert fact.b == 0 and fact.edge_multiset == () and fact.ancillary == (0, 0, 0)

    def test_repeated_edge(self, ctx_cs22):
        m = tuple(3 if i in (0, 1) else 0 for i in range(9))
        fact = b_value(ctx_cs22, m)
        assert fact.b == 3 and fact.edge_multiset == (((0, 1), 3),)

    def test_witness_monomial(self, ctx_cs22):
        m = parse_monomial("x1*x4*y2*y3*y4*y5", ctx_cs22.labels)
        assert b_value(ctx_cs22, m).b == 2

    def test_factorization_reassembles(self, ctx_cs22):
        rng = random.Random(1)
        for _ in range(60):
            m = [0] * 9
            for _ in range(rng.randint(0, 9)):
                m[rng.randrange(9)] += 1
            fact = b_value(ctx_cs22, tuple(m))
            rebuilt = list(fact.ancillary)
            for (u, v), mult in fact.edge_multiset:
                rebuilt[u] += mult
                rebuilt[v] += mult
            assert tuple(rebuilt) == tuple(m)

    def test_multiplying_by_edge_increments(self, ctx_c5):
        rng = random.Random(2)
        edges = ctx_c5.graph.sorted_edges()
        for _ in range(40):
            m = [0] * 5
            for _ in range(rng.randint(0, 6)):
                m[rng.randrange(5)] += 1
            b0 = b_value(ctx_c5, tuple(m)).b
            u, v = edges[rng.randrange(len(edges))]
            m[u] += 1
            m[v] += 1
            assert b_value(ctx_c5, tuple(m)).b >= b0 + 1


def path_monomials_in_first_cycle(cs_nvars, i, j, max_total):
    """Monomials x_i * e_i^{b_i} ... e_{j-1}^{b_{j-1}} along the first cycle,
    1-based vertex labels, 1 <= sum(b) <= max_total."""
    width = j - i
    for bs in itertools.product(range(max_total + 1), repeat=width):
        total = sum(bs)
        if not (1 <= total <= max_total):
            continue
        exps = [0] * cs_nvars
        exps[i - 1] += 1
        for k, mult in zip(range(i, j), bs):
            exps[k - 1] += mult
            exps[k] += mult
        yield bs, tuple(exps)


def test_optimal_extension_criterion(ctx_cs22):
    """Appending the far endpoint raises b(m) by one exactly when the arc has
    an even vertex count and every alternating edge is present. Needs the arc
    endpoints non-adjacent: the full arc of C5 is excluded because the wrap
    edge lets the new endpoint pair with the ancillary."""
    edges = set(ctx_cs22.graph.edges)
    for i in range(1, 6):
        for j in range(i + 1, 6):
            if (min(i, j) - 1, max(i, j) - 1) in edges:
                continue
            for bs, m in path_monomials_in_first_cycle(9, i, j, 4):
                base = b_value(ctx_cs22, m).b
                assert base == sum(bs)  # one ancillary: the written form is optimal
                extended = list(m)
                extended[j - 1] += 1
                bumped = b_value(ctx_cs22, tuple(extended)).b == base + 1
                even_arc = (j - i + 1) % 2 == 0
                alternating = all(bs[2 * h + 1] >= 1 for h in range((j - i - 1) // 2))
                assert bumped == (even_arc and alternating), (i, j, bs)


class TestPowerMember:
    def test_edge_level_one(self, ctx_k3):
        assert power_member(ctx_k3, (1, 1, 0), 1)

    def test_triangle_product_level_two(self, ctx_k3):
        assert not power_member(ctx_k3, (1, 1, 1), 2)

    def test_witness_monomial_level_three(self, ctx_cs22):
        m = parse_monomial("x1*x4*y2*y3*y4*y5", ctx_cs22.labels)
        assert not power_member(ctx_cs22, m, 3)

    def test_level_zero(self, ctx_k3):
        assert power_member(ctx_k3, (0, 0, 0), 0)

    @pytest.mark.parametrize("family", ["cycle:5", "complete:4", "cliquesum:2,2"])
    def test_matches_ideal_power_membership(self, family):
        ctx = EdgeIdealContext.from_family(family)
        rng = random.Random(7)
        samples = []
        for _ in range(200):
            m = [0] * ctx.nvars
            for _ in range(rng.randint(0, 10)):
                m[rng.randrange(ctx.nvars)] += 1
            samples.append(tuple(m))
        for t in range(1, 5):
            power = ordinary_power(ctx, t)
            for m in samples:
                assert power_member(ctx, m, t) == member(m, power)


class TestDmin:
    def test_smallest_level_is_first_cycle(self, ctx_cs23):
        got = dmin_clique_sum(ctx_cs23.cliquesum, 3)
        assert got.gens == (ctx_cs23.cliquesum.c1,)

    def test_level_four_gens(self, ctx_cs23):
        cs = ctx_cs23.cliquesum
        got = dmin_clique_sum(cs, 4)
        expected = ideal_sum(
            ideal_product(ctx_cs23.edge_ideal, MonomialIdeal(11, (cs.c1,))),
            MonomialIdeal(11, (cs.c2,)),
        )
        assert got.gens == expected.gens
        assert got.num_gens() == 13

    def test_same_length_gives_both_cycles(self, ctx_cs22):
        cs = ctx_cs22.cliquesum
        got = dmin_clique_sum(cs, 3)
        assert got.gens == tuple(sorted([cs.c1, cs.c2]))

    def test_range_errors(self, ctx_cs23):
        with pytest.raises(ValueError):
            dmin_clique_sum(ctx_cs23.cliquesum, 2)
        with pytest.raises(ValueError):
            dmin_clique_sum(ctx_cs23.cliquesum, 5)

    def test_generators_are_low_degree_symbolic_members(self, ctx_cs23):
        for t in (3, 4):
            for g in dmin_clique_sum(ctx_cs23.cliquesum, t).gens:
                assert symbolic_member(ctx_cs23, g, t)
                assert degree(g) <= 2 * t - 1


def dt_product_ideal(ctx, t):
    """Low-degree product description: the ideal spanned by I^i c1^s c2^b over
    i + (n+1)s + (m+1)b >= t and 2i + (2n+1)s + (2m+1)b <= 2t - 1."""
    cs = ctx.cliquesum
    n, m = cs.n, cs.m
    gens = []
    for b in range(t):
        for s in range(t):
            for i in range(t + 1):
                if i + (n + 1) * s + (m + 1) * b >= t and (
                    2 * i + (2 * n + 1) * s + (2 * m + 1) * b <= 2 * t - 1
                ):
                    mono = tuple(s * a + b * c for a, c in zip(cs.c1, cs.c2))
                    term = ideal_product(
                        ideal_power(ctx.edge_ideal, i), MonomialIdeal(ctx.nvars, (mono,))
                    )
                    gens.extend(term.gens)
    return minimalize(ctx.nvars, gens)


@pytest.mark.parametrize("family", ["cliquesum:2,3", "cliquesum:2,2"])
def test_low_degree_part_matches_product_description(family):
    ctx = EdgeIdealContext.from_family(family)
    for t in range(2, 6):
        low = minimalize(ctx.nvars, split_LD(ctx, t).D_gens)
        assert low.gens == dt_product_ideal(ctx, t).gens, (family, t)


class TestSdefect:
    def test_level_one_always_zero(self, ctx_cs23, ctx_k4):
        assert sdefect(ctx_cs23, 1) == 0
        assert sdefect(ctx_k4, 1) == 0

    def test_k4_level_two(self, ctx_k4):
        assert sdefect(ctx_k4, 2) == 4

    def test_cliquesum_level_two(self, ctx_cs23):
        assert sdefect(ctx_cs23, 2) == 0

    def test_rejects_level_zero(self, ctx_k3):
        with pytest.raises(ValueError):
            sdefect(ctx_k3, 0)


class TestContainment:
    def test_reflexive_level_one(self, ctx_k3):
        assert containment(ctx_k3, 1, 1)

    def test_k3_level_two_fails(self, ctx_k3):
        assert not containment(ctx_k3, 2, 2)

    def test_bipartite_diagonal(self):
        ctx = EdgeIdealContext(cycle(4))
        for t in range(1, 5):
            assert containment(ctx, t, t)

    def test_rejects_bad_levels(self, ctx_k3):
        with pytest.raises(ValueError):
            containment(ctx_k3, 0, 1)


class TestMonomialLiterals:
    def test_parse_with_powers(self, ctx_cs23):
        m = parse_monomial("x1^2*x2*y3", ctx_cs23.labels)
        assert m[0] == 2 and m[1] == 1 and m[6] == 1 and sum(m) == 4

    def test_unit(self, ctx_k3):
        assert parse_monomial("1", ctx_k3.labels) == (0, 0, 0)

    def test_round_trip(self, ctx_cs23):
        text = "x1^2*x5*y2^3"
        m = parse_monomial(text, ctx_cs23.labels)
        assert monomial_string(m, ctx_cs23.labels) == text

    def test_rejects_unknown_variable(self, ctx_k3):
        with pytest.raises(ValueError):
            parse_monomial("z9", ctx_k3.labels)
        with pytest.raises(ValueError):
            parse_monomial("x1^", ctx_k3.labels)
