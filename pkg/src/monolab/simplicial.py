"""Simplicial complexes and their squarefree-ideal translations.

A complex stores its vertex labels and its facets (maximal faces).  Two
degenerate complexes are kept apart: the void complex (no faces at all,
``void=True``) and the complex {∅} whose only facet is the empty set.

Vertex decomposability and vertex splittability are decided by exhaustive
recursion with memoization, and both return replayable witness trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .certificates import Certificate
from .monomials import (
    MonomialIdeal,
    default_vars,
    divides,
    minimalize,
    support,
    unit_ideal,
    zero_ideal,
)


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[int, ...]
    facets: frozenset[frozenset[int]]
    void: bool = False

    @property
    def n(self) -> int:
        return len(self.vertices)

    def is_simplex(self) -> bool:
        """Exactly one facet; covers {∅} and complexes with unused vertices."""
        return not self.void and len(self.facets) == 1

    def dim(self) -> int:
        if self.void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def facet_list(self) -> list[tuple[int, ...]]:
        """Facets as sorted tuples, in a canonical order."""
        return sorted(tuple(sorted(f)) for f in self.facets)

    def faces(self) -> set[frozenset[int]]:
        """All faces (downward closure of the facets)."""
        out: set[frozenset[int]] = set()
        for f in self.facets:
            fs = sorted(f)
            for r in range(len(fs) + 1):
                out.update(frozenset(c) for c in combinations(fs, r))
        return out

    def __str__(self) -> str:
        if self.void:
            return "void"
        return "<" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facet_list()) + ">"


def complex_on(vertices, faces) -> SimplicialComplex:
    """The complex generated by ``faces`` on the given vertex set.

    An empty face list yields the void complex; pass ``[()]`` for {∅}.
    """
    vertices = tuple(sorted(vertices))
    vert_set = set(vertices)
    sets = {frozenset(f) for f in faces}
    for f in sets:
        if not f <= vert_set:
            raise ValueError(f"face {sorted(f)} not contained in the vertex set")
    maximal = [f for f in sets if not any(f < g for g in sets)]
    if not maximal:
        return SimplicialComplex(vertices, frozenset(), void=True)
    return SimplicialComplex(vertices, frozenset(maximal))


def void_complex(vertices) -> SimplicialComplex:
    return SimplicialComplex(tuple(sorted(vertices)), frozenset(), void=True)


def irrelevant_complex(vertices) -> SimplicialComplex:
    """The complex {∅}: one empty facet."""
    return SimplicialComplex(tuple(sorted(vertices)), frozenset([frozenset()]))


def full_simplex(vertices) -> SimplicialComplex:
    vertices = tuple(sorted(vertices))
    return SimplicialComplex(vertices, frozenset([frozenset(vertices)]))


def is_pure(c: SimplicialComplex) -> bool:
    """All facets of equal size; undefined (an error) for the void complex."""
    if c.void:
        raise ValueError("purity is undefined for the void complex")
    return len({len(f) for f in c.facets}) <= 1


def _vars_for(c: SimplicialComplex, var_names=None) -> tuple[str, ...]:
    if var_names is not None:
        names = tuple(var_names)
        if len(names) != c.n:
            raise ValueError("variable list does not match the vertex count")
        return names
    return tuple(f"x{v + 1}" for v in c.vertices)


def stanley_reisner_ideal(c: SimplicialComplex, var_names=None) -> MonomialIdeal:
    """The squarefree ideal generated by the minimal non-faces of ``c``."""
    if c.void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    names = _vars_for(c, var_names)
    pos = {v: i for i, v in enumerate(c.vertices)}
    face_masks = set()
    for f in c.facets:
        mask = 0
        for v in f:
            mask |= 1 << pos[v]
        sub = mask
        while True:
            face_masks.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & mask
    n = c.n
    gens = []
    for s in range(1 << n):
        if s in face_masks:
            continue
        if all((s & ~(1 << i)) in face_masks for i in range(n) if s >> i & 1):
            gens.append(tuple(s >> i & 1 for i in range(n)))
    return minimalize(gens, names)


def complex_of_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the supports of squarefree monomials not in I.

    Inverse of :func:`stanley_reisner_ideal`; vertices are 0..n-1.
    """
    if not I.is_squarefree():
        raise ValueError("Stanley-Reisner complexes need a squarefree ideal")
    if I.is_unit():
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    n = I.n
    gen_masks = []
    for g in I.gens:
        mask = 0
        for i, a in enumerate(g):
            if a:
                mask |= 1 << i
        gen_masks.append(mask)
    faces = []
    for s in range(1 << n):
        if not any(m & s == m for m in gen_masks):
            faces.append(frozenset(i for i in range(n) if s >> i & 1))
    return complex_on(range(n), faces)


def facet_complement_ideal(c: SimplicialComplex, var_names=None) -> MonomialIdeal:
    """The squarefree ideal generated by the complements of the facets.

    This is the Alexander dual of the Stanley-Reisner ideal of ``c``; the
    void complex gives the zero ideal and a full simplex gives the unit
    ideal.
    """
    names = _vars_for(c, var_names)
    pos = {v: i for i, v in enumerate(c.vertices)}
    gens = []
    for f in c.facets:
        vec = [1] * c.n
        for v in f:
            vec[pos[v]] = 0
        gens.append(tuple(vec))
    return minimalize(gens, names)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Alexander dual of a squarefree ideal; an involution.

    Generators of the dual are the complement monomials of the facets of the
    associated complex.  The zero and unit ideals are swapped.
    """
    if not I.is_squarefree():
        raise ValueError("Alexander duality needs a squarefree ideal")
    if I.is_zero():
        return unit_ideal(I.vars)
    if I.is_unit():
        return zero_ideal(I.vars)
    return facet_complement_ideal(complex_of_ideal(I), I.vars)


def link_deletion(c: SimplicialComplex, v: int) -> tuple[SimplicialComplex, SimplicialComplex]:
    """(link, deletion) at the vertex v, both on the vertex set minus v.

    The link of a vertex not lying on any facet is void.
    """
    if c.void:
        raise ValueError("link and deletion are undefined for the void complex")
    if v not in c.vertices:
        raise ValueError(f"{v} is not a vertex")
    rest = tuple(w for w in c.vertices if w != v)
    link_facets = [f - {v} for f in c.facets if v in f]
    if link_facets:
        link = SimplicialComplex(rest, frozenset(link_facets))
    else:
        link = void_complex(rest)
    del_faces = [f - {v} for f in c.facets]
    deletion = complex_on(rest, del_faces)
    return link, deletion


@dataclass(frozen=True)
class SheddingTree:
    """Witness for vertex decomposability.

    Leaves are "void" (the void complex, also standing in for {∅} read as
    the empty complex) and "simplex"; internal nodes name the shedding
    vertex and carry subtrees for the deletion and the link.
    """

    kind: str  # "void" | "simplex" | "shed"
    vertex: int | None = None
    deletion: SheddingTree | None = None
    link: SheddingTree | None = None

    def to_json(self):
        if self.kind != "shed":
            return {"kind": self.kind}
        return {
            "kind": "shed",
            "vertex": self.vertex + 1,
            "deletion": self.deletion.to_json(),
            "link": self.link.to_json(),
        }


@lru_cache(maxsize=None)
def is_vertex_decomposable(c: SimplicialComplex) -> Certificate:
    """Decide vertex decomposability; memoized on the exact facet set.

    A complex is accepted if it is void, is {∅}, is a simplex, or has a
    shedding vertex v (every facet of the deletion at v stays a facet) whose
    deletion and link both recurse to true.  Vertices are tried in ascending
    order and the first success is reported, so witness trees are
    deterministic.  A false verdict carries one failure reason per vertex.
    """
    if c.void:
        return Certificate(True, witness=SheddingTree("void"))
    if c.is_simplex():
        return Certificate(True, witness=SheddingTree("simplex"))
    failures = []
    for v in c.vertices:
        link, deletion = link_deletion(c, v)
        if not deletion.facets <= c.facets:
            failures.append((v, "a deletion facet is not a facet"))
            continue
        del_cert = is_vertex_decomposable(deletion)
        if not del_cert:
            failures.append((v, "deletion branch not decomposable"))
            continue
        link_cert = is_vertex_decomposable(link)
        if not link_cert:
            failures.append((v, "link branch not decomposable"))
            continue
        tree = SheddingTree("shed", vertex=v, deletion=del_cert.witness, link=link_cert.witness)
        return Certificate(True, witness=tree)
    return Certificate(False, failure=tuple(failures))


def verify_shedding_tree(c: SimplicialComplex, tree: SheddingTree) -> bool:
    """Replay a shedding tree against a complex, step by step."""
    if tree.kind == "void":
        return c.void
    if tree.kind == "simplex":
        return c.is_simplex()
    if c.void or tree.vertex not in c.vertices:
        return False
    link, deletion = link_deletion(c, tree.vertex)
    if not deletion.facets <= c.facets:
        return False
    return verify_shedding_tree(deletion, tree.deletion) and verify_shedding_tree(
        link, tree.link
    )


@dataclass(frozen=True)
class SplittingTree:
    """Witness for vertex splittability.

    An internal node records the splitting variable; ``quotient`` is the
    subtree for the ideal of generators divided by that variable, ``rest``
    the subtree for the generators avoiding it.
    """

    kind: str  # "zero" | "unit" | "split"
    variable: str | None = None
    quotient: SplittingTree | None = None
    rest: SplittingTree | None = None

    def to_json(self):
        if self.kind != "split":
            return {"kind": self.kind}
        return {
            "kind": "split",
            "variable": self.variable,
            "quotient": self.quotient.to_json(),
            "rest": self.rest.to_json(),
        }


def _split_at(I: MonomialIdeal, i: int) -> tuple[MonomialIdeal, MonomialIdeal] | None:
    """The forced split candidates (I1, I2) at variable i, if any.

    I1 collects generators divisible by x_i, divided by it; I2 the others.
    Both live in the ring without x_i.  Returns None when some generator has
    x_i-exponent above 1 (then no decomposition with disjoint generator sets
    exists) or when the containment I2 ⊆ I1 fails.
    """
    if any(g[i] > 1 for g in I.gens):
        return None
    rest_vars = I.vars[:i] + I.vars[i + 1 :]
    g1 = [g[:i] + g[i + 1 :] for g in I.gens if g[i] == 1]
    g2 = [g[:i] + g[i + 1 :] for g in I.gens if g[i] == 0]
    if not all(any(divides(u, v) for u in g1) for v in g2):
        return None
    return (
        MonomialIdeal(rest_vars, tuple(sorted(g1))),
        MonomialIdeal(rest_vars, tuple(sorted(g2))),
    )


@lru_cache(maxsize=None)
def is_vertex_splittable(I: MonomialIdeal) -> Certificate:
    """Decide vertex splittability; memoized.

    Base cases: the zero and unit ideals.  Otherwise each variable is tried
    in order; the candidate parts are forced (see :func:`_split_at`), so the
    existential in the definition closes.  False verdicts record the reason
    each variable failed.
    """
    if I.is_zero():
        return Certificate(True, witness=SplittingTree("zero"))
    if I.is_unit():
        return Certificate(True, witness=SplittingTree("unit"))
    failures = []
    for i, name in enumerate(I.vars):
        parts = _split_at(I, i)
        if parts is None:
            failures.append((name, "no split with disjoint generators"))
            continue
        I1, I2 = parts
        c1 = is_vertex_splittable(I1)
        if not c1:
            failures.append((name, "quotient part not splittable"))
            continue
        c2 = is_vertex_splittable(I2)
        if not c2:
            failures.append((name, "remaining part not splittable"))
            continue
        tree = SplittingTree("split", variable=name, quotient=c1.witness, rest=c2.witness)
        return Certificate(True, witness=tree)
    return Certificate(False, failure=tuple(failures))


def verify_splitting_tree(I: MonomialIdeal, tree: SplittingTree) -> bool:
    """Replay a splitting tree: checks the sum decomposition, the containment
    I2 ⊆ I1 and the disjointness of the generator contributions at each node."""
    if tree.kind == "zero":
        return I.is_zero()
    if tree.kind == "unit":
        return I.is_unit()
    if tree.variable not in I.vars:
        return False
    i = I.vars.index(tree.variable)
    parts = _split_at(I, i)
    if parts is None:
        return False
    I1, I2 = parts
    lifted = [g[:i] + (1,) + g[i:] for g in I1.gens] + [g[:i] + (0,) + g[i:] for g in I2.gens]
    if len(set(lifted)) != len(lifted):
        return False
    if minimalize(lifted, I.vars) != I:
        return False
    return verify_splitting_tree(I1, tree.quotient) and verify_splitting_tree(I2, tree.rest)
