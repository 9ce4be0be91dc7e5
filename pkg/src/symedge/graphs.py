"""Finite simple graphs and the cover combinatorics behind edge ideals.

Vertices are 0-based ints. The families used downstream are odd cycles,
complete graphs, and the clique-sum of two odd cycles glued at a single
vertex. Cover enumeration is exhaustive (desk-scale graphs only) and all
outputs are deterministically ordered so reports diff cleanly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Edge = tuple[int, int]

# Exhaustive cover enumeration walks all 2^n vertex subsets.
_COVER_ENUM_BOUND = 20

# Decomposability / Rees enumeration builds a tau table over all subsets.
DEFAULT_DECOMP_BOUND = 12


class BoundExceededError(ValueError):
    """Raised when a graph is too large for an exhaustive search."""


@dataclass(frozen=True)
class SimpleGraph:
    n_vertices: int
    edges: frozenset[Edge]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.n_vertices
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks


@dataclass(frozen=True)
class CoverSet:
    """All minimal vertex covers, each sorted, the list sorted lexicographically."""

    covers: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.covers)

    def __len__(self) -> int:
        return len(self.covers)


@dataclass(frozen=True)
class CliqueSumSpec:
    """Bookkeeping for the clique-sum of cycles C_{2n+1} and C_{2m+1}.

    Vertex numbering: index 0 is the shared vertex x1, indices 1..2n are
    x2..x_{2n+1}, indices 2n+1..2n+2m-1 are y2..y_{2m+1}. ``c1`` and ``c2``
    are the exponent vectors of the two cycle products x1...x_{2n+1} and
    x1 y2...y_{2m+1}.
    """

    n: int
    m: int
    n_vertices: int
    c1: tuple[int, ...]
    c2: tuple[int, ...]
    labels: tuple[str, ...]


def make_graph(n_vertices: int, edges) -> SimpleGraph:
    if n_vertices < 1:
        raise ValueError("graph needs at least one vertex")
    norm: set[Edge] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise ValueError(f"edge ({u},{v}) out of range for {n_vertices} vertices")
        norm.add((min(u, v), max(u, v)))
    return SimpleGraph(n_vertices, frozenset(norm))


def default_labels(n_vertices: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n_vertices))


def cycle(k: int) -> SimpleGraph:
    if k < 3:
        raise ValueError("cycle length must be >= 3")
    return make_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete(n: int) -> SimpleGraph:
    if n < 2:
        raise ValueError("complete graph needs >= 2 vertices")
    return make_graph(n, itertools.combinations(range(n), 2))


def clique_sum(n: int, m: int) -> tuple[SimpleGraph, CliqueSumSpec]:
    """Two odd cycles C_{2n+1} and C_{2m+1} glued at the single vertex x1."""
    if not (1 <= n <= m):
        raise ValueError("clique_sum requires 1 <= n <= m")
    total = 2 * n + 2 * m + 1
    edges: list[Edge] = []
    # first cycle on indices 0..2n
    for i in range(2 * n):
        edges.append((i, i + 1))
    edges.append((2 * n, 0))
    # second cycle on 0, 2n+1, ..., 2n+2m-1
    ys = [0] + list(range(2 * n + 1, 2 * n + 2 * m + 1))
    for i in range(2 * m):
        edges.append((ys[i], ys[i + 1]))
    edges.append((ys[-1], 0))
    g = make_graph(total, edges)
    c1 = tuple(1 if i <= 2 * n else 0 for i in range(total))
    c2 = tuple(1 if i == 0 or i > 2 * n else 0 for i in range(total))
    labels = tuple(
        [f"x{i + 1}" for i in range(2 * n + 1)] + [f"y{j}" for j in range(2, 2 * m + 2)]
    )
    return g, CliqueSumSpec(n, m, total, c1, c2, labels)


def read_edge_list(text: str) -> SimpleGraph:
    """Parse the one-edge-per-line format: "u v", '#' starts a comment.

    The vertex count is one plus the largest index mentioned.
    """
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer endpoint in {line!r}") from exc
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
    if not edges:
        raise ValueError("edge list is empty")
    n = 1 + max(max(u, v) for u, v in edges)
    return make_graph(n, edges)


@dataclass(frozen=True)
class FamilyBuild:
    """A constructed family graph plus its labeling metadata."""

    kind: str
    params: tuple[int, ...]
    graph: SimpleGraph
    labels: tuple[str, ...]
    cliquesum: CliqueSumSpec | None
    spec_string: str


def build_family(kind: str, *params: int) -> FamilyBuild:
    if kind == "cycle":
        (k,) = params
        g = cycle(k)
        return FamilyBuild("cycle", (k,), g, default_labels(k), None, f"cycle:{k}")
    if kind == "complete":
        (n,) = params
        g = complete(n)
        return FamilyBuild("complete", (n,), g, default_labels(n), None, f"complete:{n}")
    if kind == "cliquesum":
        n, m = params
        g, cs = clique_sum(n, m)
        return FamilyBuild("cliquesum", (n, m), g, cs.labels, cs, f"cliquesum:{n},{m}")
    raise ValueError(f"unknown family kind {kind!r}")


def parse_family(spec: str) -> FamilyBuild:
    """Build a graph from a family string.

    Accepted forms: "cycle:K", "complete:N", "cliquesum:N,M", and
    "edgelist:PATH" pointing at an edge-list file.
    """
    spec = spec.strip()
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"malformed family spec {spec!r}")
    kind = kind.strip().lower()
    if kind == "edgelist":
        with open(rest.strip(), "r", encoding="utf-8") as fh:
            g = read_edge_list(fh.read())
        return FamilyBuild(
            "edgelist", (), g, default_labels(g.n_vertices), None, spec
        )
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed family parameters in {spec!r}") from exc
    expected = {"cycle": 1, "complete": 1, "cliquesum": 2}.get(kind)
    if expected is None:
        raise ValueError(f"unknown family {kind!r}")
    if len(params) != expected:
        raise ValueError(f"family {kind!r} takes {expected} parameter(s)")
    return build_family(kind, *params)


def minimal_vertex_covers(g: SimpleGraph) -> CoverSet:
    """Enumerate the inclusion-minimal vertex covers.

    Minimal covers are the complements of maximal independent sets, found
    here by exhaustive bitmask search. Deterministic: covers are sorted
    subsets, listed lexicographically.
    """
    n = g.n_vertices
    if n > _COVER_ENUM_BOUND:
        raise BoundExceededError(f"cover enumeration limited to {_COVER_ENUM_BOUND} vertices")
    adj = g.adjacency_masks()
    full = (1 << n) - 1
    covers = []
    for s in range(1 << n):
        independent = True
        for v in range(n):
            if s >> v & 1 and adj[v] & s:
                independent = False
                break
        if not independent:
            continue
        maximal = True
        rest = full & ~s
        for v in range(n):
            if rest >> v & 1 and not (adj[v] & s):
                maximal = False
                break
        if maximal:
            comp = full & ~s
            covers.append(tuple(v for v in range(n) if comp >> v & 1))
    return CoverSet(tuple(sorted(covers)))


def cover_number(g: SimpleGraph) -> int:
    """tau(G): the smallest size of a (minimal) vertex cover."""
    covers = minimal_vertex_covers(g)
    return min(len(c) for c in covers)


def parallelize(g: SimpleGraph, v) -> SimpleGraph:
    """The graph G^v: delete vertex i when v_i = 0, else keep v_i copies.

    Copies of one vertex inherit the original neighborhood and are mutually
    non-adjacent; copies of adjacent originals are pairwise adjacent. New
    vertices are numbered by (original index, copy index) order.
    """
    weights = [int(x) for x in v]
    if len(weights) != g.n_vertices:
        raise ValueError("parallelization vector length must match the vertex count")
    if any(w < 0 for w in weights):
        raise ValueError("parallelization multiplicities must be non-negative")
    offsets = []
    total = 0
    for w in weights:
        offsets.append(total)
        total += w
    if total == 0:
        raise ValueError("parallelization deletes every vertex")
    edges = []
    for u, w in g.edges:
        for a in range(weights[u]):
            for b in range(weights[w]):
                edges.append((offsets[u] + a, offsets[w] + b))
    return make_graph(total, edges)


def induced_subgraph(g: SimpleGraph, vertices) -> SimpleGraph:
    """Induced subgraph, relabeled to 0..k-1 in sorted vertex order."""
    vs = sorted(set(int(x) for x in vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[w]) for u, w in g.edges if u in index and w in index]
    return make_graph(len(vs), edges) if vs else SimpleGraph(0, frozenset())


def _tau_table(g: SimpleGraph) -> list[int]:
    """Cover number of every induced subgraph, indexed by vertex bitmask.

    Uses the branching tau(S) = 1 + min(tau(S - u), tau(S - v)) on any edge
    (u, v) inside S, filled bottom-up over all masks.
    """
    n = g.n_vertices
    edge_list = g.sorted_edges()
    tau = [0] * (1 << n)
    for mask in range(1, 1 << n):
        picked = None
        for u, v in edge_list:
            if mask >> u & 1 and mask >> v & 1:
                picked = (u, v)
                break
        if picked is None:
            continue
        u, v = picked
        tau[mask] = 1 + min(tau[mask & ~(1 << u)], tau[mask & ~(1 << v)])
    return tau


def is_decomposable(
    g: SimpleGraph, bound: int = DEFAULT_DECOMP_BOUND
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Whether the vertex set splits with additive cover number.

    Searching two-part splits suffices: restricting a minimum cover to the
    parts shows tau is superadditive over any induced partition, so if some
    r-part partition is additive, merging all but one part is additive too.
    Returns a witness 2-partition when decomposable.
    """
    n = g.n_vertices
    if n > bound:
        raise BoundExceededError(f"decomposability search limited to {bound} vertices")
    if n < 2:
        return (False, None)
    tau = _tau_table(g)
    full = (1 << n) - 1
    target = tau[full]
    # Enumerate unordered 2-partitions once by pinning vertex 0 to side A.
    for rest in range(1 << (n - 1)):
        a = (rest << 1) | 1
        b = full & ~a
        if b == 0:
            continue
        if tau[a] + tau[b] == target:
            part_a = tuple(v for v in range(n) if a >> v & 1)
            part_b = tuple(v for v in range(n) if b >> v & 1)
            return (True, (part_a, part_b))
    return (False, None)


def _mask_is_decomposable(tau: list[int], mask: int) -> bool:
    low = mask & -mask
    sub = (mask - 1) & mask
    while sub:
        if sub & low:
            other = mask & ~sub
            if other and tau[sub] + tau[other] == tau[mask]:
                return True
        sub = (sub - 1) & mask
    return False


def rees_generators_01(
    g: SimpleGraph, bound: int = DEFAULT_DECOMP_BOUND
) -> list[tuple[tuple[int, ...], int]]:
    """Squarefree symbolic Rees generators (v, tau(G^v)) with v in {0,1}^n.

    For an implosive graph these degrees generate the symbolic Rees
    algebra: v ranges over the vertex subsets whose induced subgraph has an
    edge and is indecomposable. The caller is responsible for only using
    this on implosive graphs (cycles, their clique-sums, perfect graphs).
    """
    n = g.n_vertices
    if n > bound:
        raise BoundExceededError(f"Rees generator enumeration limited to {bound} vertices")
    tau = _tau_table(g)
    edge_masks = [(1 << u) | (1 << v) for u, v in g.sorted_edges()]
    out = []
    for mask in range(1, 1 << n):
        if not any(em & mask == em for em in edge_masks):
            continue
        if _mask_is_decomposable(tau, mask):
            continue
        vec = tuple(1 if mask >> v & 1 else 0 for v in range(n))
        out.append((vec, tau[mask]))
    out.sort(key=lambda item: (sum(item[0]), item[0]))
    return out
