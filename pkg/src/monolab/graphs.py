"""Finite simple graphs and their ideal-theoretic views.

Vertices are 0..n-1 internally (the wire formats are 1-based).  Everything
here is exhaustive-but-certified: chordality by simplicial elimination with
an induced-cycle witness on failure, matching by memoized branching, ranks
by exact rational elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .certificates import Certificate
from .linalg import exact_rank
from .monomials import MonomialIdeal, default_vars, minimalize, zero_ideal
from .simplicial import SimplicialComplex, complex_on

_MIS_VERTEX_CAP = 24


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[frozenset[int]]

    def degree_of(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbours(self, v: int) -> set[int]:
        out = set()
        for e in self.edges:
            if v in e:
                out.update(e - {v})
        return out

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def isolated_vertices(self) -> list[int]:
        touched = set()
        for e in self.edges:
            touched |= e
        return [v for v in range(self.n) if v not in touched]


def graph(n: int, edges) -> Graph:
    """Build a simple graph from 0-based vertex pairs."""
    out = set()
    for e in edges:
        a, b = e
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge {e} outside 0..{n - 1}")
        out.add(frozenset((a, b)))
    return Graph(n, frozenset(out))


def complement(g: Graph) -> Graph:
    edges = [
        (a, b)
        for a, b in combinations(range(g.n), 2)
        if frozenset((a, b)) not in g.edges
    ]
    return graph(g.n, edges)


def connected_components(g: Graph) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbours(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def is_bipartite(g: Graph) -> bool:
    colour: dict[int, int] = {}
    for start in range(g.n):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbours(v):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def maximal_independent_sets(g: Graph) -> list[frozenset[int]]:
    """All maximal independent sets, by bitmask sweep (desk scale)."""
    if g.n > _MIS_VERTEX_CAP:
        raise ValueError(f"independent-set sweep capped at {_MIS_VERTEX_CAP} vertices")
    edge_masks = [sum(1 << v for v in e) for e in g.edges]
    independent = []
    for s in range(1 << g.n):
        if all(m & s != m for m in edge_masks):
            independent.append(s)
    ind_set = set(independent)
    out = []
    for s in independent:
        if not any((s | 1 << v) in ind_set for v in range(g.n) if not s >> v & 1):
            out.append(frozenset(v for v in range(g.n) if s >> v & 1))
    return sorted(out, key=lambda f: sorted(f))


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent sets; facets the maximal ones."""
    return complex_on(range(g.n), maximal_independent_sets(g))


def edge_ideal(g: Graph, var_names=None) -> MonomialIdeal:
    names = tuple(var_names) if var_names is not None else default_vars(g.n)
    if not g.edges:
        return zero_ideal(names)
    gens = []
    for a, b in g.edge_list():
        vec = [0] * g.n
        vec[a] = vec[b] = 1
        gens.append(tuple(vec))
    return minimalize(gens, names)


def cover_ideal(g: Graph, var_names=None) -> MonomialIdeal:
    """Generated by the minimal vertex covers (complements of maximal
    independent sets).  The edgeless graph gives the unit ideal."""
    names = tuple(var_names) if var_names is not None else default_vars(g.n)
    gens = []
    for ind in maximal_independent_sets(g):
        gens.append(tuple(0 if v in ind else 1 for v in range(g.n)))
    return minimalize(gens, names)


def is_chordal(g: Graph) -> Certificate:
    """Chordality by repeated removal of simplicial vertices.

    True verdicts carry a perfect elimination ordering; false verdicts carry
    an induced cycle of length >= 4 (as a vertex sequence).
    """
    adj = {v: g.neighbours(v) for v in range(g.n)}
    remaining = set(range(g.n))
    order = []
    while remaining:
        pick = None
        for v in sorted(remaining):
            nb = adj[v] & remaining
            if all(b in adj[a] for a, b in combinations(sorted(nb), 2)):
                pick = v
                break
        if pick is None:
            break
        order.append(pick)
        remaining.remove(pick)
    if not remaining:
        return Certificate(True, witness=tuple(order))
    return Certificate(False, failure=_induced_cycle(g, remaining))


def _induced_cycle(g: Graph, within: set[int]) -> tuple[int, ...]:
    """Some chordless cycle of length >= 4 induced on ``within``.

    The caller guarantees the induced subgraph has no simplicial vertex, so
    such a cycle exists; found by brute force over vertex subsets.
    """
    verts = sorted(within)
    for size in range(4, len(verts) + 1):
        for sub in combinations(verts, size):
            degs = {v: 0 for v in sub}
            sub_set = set(sub)
            for e in g.edges:
                if e <= sub_set:
                    for v in e:
                        degs[v] += 1
            if any(d != 2 for d in degs.values()):
                continue
            cycle = _trace_cycle(g, sub_set)
            if cycle is not None:
                return cycle
    raise AssertionError("no chordless cycle found in a non-chordal remainder")


def _trace_cycle(g: Graph, sub: set[int]) -> tuple[int, ...] | None:
    """Walk a 2-regular induced subgraph; None if it is disconnected."""
    start = min(sub)
    cycle = [start]
    prev = None
    cur = start
    while True:
        nxt = sorted(w for w in g.neighbours(cur) if w in sub and w != prev)
        if not nxt:
            return None
        prev, cur = cur, nxt[0]
        if cur == start:
            break
        cycle.append(cur)
    return tuple(cycle) if len(cycle) == len(sub) else None


def is_cochordal(g: Graph) -> Certificate:
    """Chordality of the complement graph."""
    return is_chordal(complement(g))


def matching_number(g: Graph) -> int:
    """Maximum matching size by exhaustive branching over the edge list."""
    edges = g.edge_list()

    @lru_cache(maxsize=None)
    def best(idx: int, used: int) -> int:
        if idx == len(edges):
            return 0
        a, b = edges[idx]
        skip = best(idx + 1, used)
        if used >> a & 1 or used >> b & 1:
            return skip
        take = 1 + best(idx + 1, used | 1 << a | 1 << b)
        return max(skip, take)

    return best(0, 0)


def incidence_matrix(g: Graph) -> list[list[int]]:
    """0/1 vertex-by-edge incidence matrix, columns in edge-list order."""
    cols = g.edge_list()
    return [[1 if v in e else 0 for e in cols] for v in range(g.n)]


@dataclass(frozen=True)
class GraphProfile:
    bipartite: bool
    isolated_count: int
    matching_number: int
    chordal: bool
    cochordal: bool
    predicted_rank: int | None
    incidence_rank: int

    def to_json(self):
        return {
            "bipartite": self.bipartite,
            "isolated_count": self.isolated_count,
            "matching_number": self.matching_number,
            "chordal": self.chordal,
            "cochordal": self.cochordal,
            "predicted_rank": self.predicted_rank,
            "incidence_rank": self.incidence_rank,
        }


def graph_profile(g: Graph) -> GraphProfile:
    """Combinatorial profile plus the exact incidence-matrix rank.

    ``predicted_rank`` is n-s-1 for bipartite and n-s otherwise, but only
    when exactly one component carries edges (s = isolated vertex count);
    it is None for other shapes.
    """
    s = len(g.isolated_vertices())
    bip = is_bipartite(g)
    comps = connected_components(g)
    with_edges = [c for c in comps if len(c) > 1]
    predicted = None
    if len(with_edges) == 1:
        predicted = g.n - s - 1 if bip else g.n - s
    rank = exact_rank(incidence_matrix(g))
    return GraphProfile(
        bipartite=bip,
        isolated_count=s,
        matching_number=matching_number(g),
        chordal=bool(is_chordal(g)),
        cochordal=bool(is_cochordal(g)),
        predicted_rank=predicted,
        incidence_rank=rank,
    )
