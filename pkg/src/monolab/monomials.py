"""Monomial ideals in exact integer arithmetic.

A monomial is an exponent vector (a tuple of nonnegative ints, one entry per
ambient variable).  A monomial ideal is stored by its unique minimal
generating set: the divisibility antichain of its generators, kept in
lexicographic order so that equal ideals compare and hash equal.

The zero ideal has no generators; the unit ideal is generated by the empty
monomial (the all-zeros vector).  Exponents are arbitrary-precision Python
ints; the numpy fast paths below only engage after checking that every entry
fits comfortably in int64, so no overflow can occur.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Entries below this bound are safe for the int64 bulk paths: sums of two
# entries stay far under 2**63.
_NP_BOUND = 2**31


def default_vars(n: int) -> tuple[str, ...]:
    """Variable names x1..xn used when a caller does not supply any."""
    return tuple(f"x{i + 1}" for i in range(n))


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    """Componentwise u <= v, i.e. the monomial x^u divides x^v."""
    return all(a <= b for a, b in zip(u, v))


def degree(u: Sequence[int]) -> int:
    return sum(u)


def support(u: Sequence[int]) -> frozenset[int]:
    """Indices of the variables dividing x^u."""
    return frozenset(i for i, a in enumerate(u) if a > 0)


def is_squarefree_vector(u: Sequence[int]) -> bool:
    return all(a <= 1 for a in u)


def _fits_int64(vecs: Iterable[Sequence[int]]) -> bool:
    return all(0 <= a < _NP_BOUND for v in vecs for a in v)


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Divisibility-minimal rows of an int64 array (rows assumed distinct).

    Works degree layer by degree layer: vectors of equal total degree never
    divide one another, so only the already-kept lower layers can dominate.
    """
    if len(arr) <= 1:
        return arr
    deg = arr.sum(axis=1)
    kept: np.ndarray | None = None
    for d in np.unique(deg):
        layer = arr[deg == d]
        if kept is None:
            kept = layer
            continue
        alive = ~(layer[:, None, :] >= kept[None, :, :]).all(axis=2).any(axis=1)
        if alive.any():
            kept = np.vstack([kept, layer[alive]])
    assert kept is not None
    return kept


def _minimal_py(vecs: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    kept: list[tuple[int, ...]] = []
    for v in sorted(vecs, key=lambda t: (sum(t), t)):
        if not any(divides(u, v) for u in kept):
            kept.append(v)
    return kept


def minimal_vectors(vecs: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Deduplicated divisibility antichain of ``vecs``, lex-sorted."""
    uniq = list({tuple(int(a) for a in v) for v in vecs})
    if len(uniq) > 1:
        if _fits_int64(uniq):
            arr = _minimal_rows(np.array(uniq, dtype=np.int64))
            uniq = [tuple(int(a) for a in row) for row in arr]
        else:
            uniq = _minimal_py(uniq)
    return sorted(uniq)


class DimensionMismatch(ValueError):
    """Exponent vectors of differing lengths, or ideals on different rings."""


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Construct through :func:`minimalize` (or the parsers); the constructor
    itself does not re-minimalize.
    """

    vars: tuple[str, ...]
    gens: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(is_squarefree_vector(g) for g in self.gens)

    def is_equigenerated(self) -> bool:
        degs = {degree(g) for g in self.gens}
        return len(degs) <= 1

    def max_exponents(self) -> tuple[int, ...]:
        """Componentwise maximum over the generators (all zeros if none)."""
        out = [0] * self.n
        for g in self.gens:
            for j, a in enumerate(g):
                if a > out[j]:
                    out[j] = a
        return tuple(out)

    def monomial_strings(self) -> list[str]:
        return [monomial_to_string(g, self.vars) for g in self.gens]

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(self.monomial_strings()) + ")"

    def validate(self) -> None:
        """Raise if the stored generators violate the antichain invariant."""
        for g in self.gens:
            if len(g) != self.n:
                raise DimensionMismatch(
                    f"generator of length {len(g)} in a ring with {self.n} variables"
                )
            if any(a < 0 for a in g):
                raise ValueError(f"negative exponent in {g}")
        if list(self.gens) != minimal_vectors(self.gens):
            raise ValueError("generators are not a sorted divisibility antichain")


def minimalize(gens: Iterable[Sequence[int]], variables: Sequence[str]) -> MonomialIdeal:
    """The ideal generated by ``gens``: keeps only divisibility-minimal ones."""
    variables = tuple(variables)
    gens = [tuple(int(a) for a in g) for g in gens]
    for g in gens:
        if len(g) != len(variables):
            raise DimensionMismatch(
                f"generator of length {len(g)} in a ring with {len(variables)} variables"
            )
        if any(a < 0 for a in g):
            raise ValueError(f"negative exponent in {g}")
    return MonomialIdeal(variables, tuple(minimal_vectors(gens)))


def zero_ideal(variables: Sequence[str]) -> MonomialIdeal:
    return MonomialIdeal(tuple(variables), ())


def unit_ideal(variables: Sequence[str]) -> MonomialIdeal:
    return MonomialIdeal(tuple(variables), ((0,) * len(variables),))


def ideal(variables: Sequence[str], monomials: Iterable[Sequence[int] | str]) -> MonomialIdeal:
    """Convenience constructor accepting exponent vectors or strings like "x1^2*x3"."""
    variables = tuple(variables)
    vecs = [
        parse_monomial_string(m, variables) if isinstance(m, str) else m
        for m in monomials
    ]
    return minimalize(vecs, variables)


def _require_same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.vars != J.vars:
        raise DimensionMismatch("ideals live in different rings")


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    """Membership of the monomial x^m: some minimal generator divides it."""
    m = tuple(m)
    if len(m) != I.n:
        raise DimensionMismatch("monomial length does not match the ring")
    return any(divides(g, m) for g in I.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The product ideal: all pairwise sums of generators, minimalized."""
    _require_same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return zero_ideal(I.vars)
    if _fits_int64(I.gens) and _fits_int64(J.gens):
        a = np.array(I.gens, dtype=np.int64)
        b = np.array(J.gens, dtype=np.int64)
        sums = (a[:, None, :] + b[None, :, :]).reshape(-1, I.n)
        sums = np.unique(sums, axis=0)
        rows = _minimal_rows(sums)
        gens = sorted(tuple(int(x) for x in row) for row in rows)
        return MonomialIdeal(I.vars, tuple(gens))
    sums = [tuple(x + y for x, y in zip(g, h)) for g in I.gens for h in J.gens]
    return minimalize(sums, I.vars)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k by iterated products with intermediate minimalization.

    ``k = 0`` returns the unit ideal (the empty product), not an error.
    """
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return unit_ideal(I.vars)
    out = I
    for _ in range(k - 1):
        out = product(out, I)
    return out


def colon_monomial(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """(I : x^m), via u -> u - min(u, m) on each generator."""
    m = tuple(int(a) for a in m)
    if len(m) != I.n:
        raise DimensionMismatch("monomial length does not match the ring")
    shifted = [tuple(a - min(a, b) for a, b in zip(g, m)) for g in I.gens]
    return minimalize(shifted, I.vars)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J: pairwise componentwise max (lcm) of generators, minimalized."""
    _require_same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return zero_ideal(I.vars)
    if _fits_int64(I.gens) and _fits_int64(J.gens):
        a = np.array(I.gens, dtype=np.int64)
        b = np.array(J.gens, dtype=np.int64)
        lcms = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, I.n)
        lcms = np.unique(lcms, axis=0)
        rows = _minimal_rows(lcms)
        gens = sorted(tuple(int(x) for x in row) for row in rows)
        return MonomialIdeal(I.vars, tuple(gens))
    lcms = [tuple(max(x, y) for x, y in zip(g, h)) for g in I.gens for h in J.gens]
    return minimalize(lcms, I.vars)


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) = the intersection of (I : g) over the generators g of J."""
    _require_same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by zero ideal undefined")
    out = colon_monomial(I, J.gens[0])
    for g in J.gens[1:]:
        out = intersect(out, colon_monomial(I, g))
    return out


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I ⊆ J, tested generator by generator."""
    _require_same_ring(I, J)
    return all(contains(J, g) for g in I.gens)


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Squarefree polarization.

    x_i^a becomes the product of the indexed variables x_i,1 .. x_i,a; the
    polarized ring carries one variable "v_j" per original variable v and
    each 1 <= j <= (maximal exponent of v over the generators).  The zero and
    unit ideals pass through unchanged: they have nothing to polarize.
    """
    if I.is_zero() or I.is_unit():
        return I
    caps = I.max_exponents()
    names: list[str] = []
    offset: list[int] = []
    for i, c in enumerate(caps):
        offset.append(len(names))
        names.extend(f"{I.vars[i]}_{j}" for j in range(1, c + 1))
    gens = []
    for g in I.gens:
        vec = [0] * len(names)
        for i, a in enumerate(g):
            for j in range(a):
                vec[offset[i] + j] = 1
        gens.append(tuple(vec))
    return minimalize(gens, names)


_FACTOR_RE = re.compile(r"^([^\^\s]+?)(?:\^(\d+))?$")


def parse_monomial_string(text: str, variables: Sequence[str]) -> tuple[int, ...]:
    """Parse the compact form "x1^2*x3" into an exponent vector.

    "1" denotes the empty monomial.
    """
    index = {name: i for i, name in enumerate(variables)}
    vec = [0] * len(variables)
    text = text.strip()
    if text in ("1", ""):
        return tuple(vec)
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        name, exp = m.group(1), m.group(2)
        if name not in index:
            raise ValueError(f"unknown variable {name!r}")
        vec[index[name]] += int(exp) if exp else 1
    return tuple(vec)


def monomial_to_string(u: Sequence[int], variables: Sequence[str]) -> str:
    """Inverse of :func:`parse_monomial_string`; the empty monomial prints as "1"."""
    parts = []
    for name, a in zip(variables, u):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"
