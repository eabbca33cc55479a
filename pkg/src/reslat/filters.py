"""Filters of a finite residuated lattice as bit-vector subsets.

A filter is a nonempty subset closed under prod and absorbing under
join, hence an up-set.  Filter families carry a provenance tag and keep
the canonical order from subsets.sort_family, so every listing of the
same family renders identically.

Generated filters come with a closed form: the extension of F by x is
every element above some f * x^k, and on a finite carrier every filter
is principal, generated by the product of its members.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import ResiduatedLattice
from .errors import InternalCheckError, PreconditionError
from .subsets import contains, elements, full_set, singleton, sort_family

TAG_ALL = "ALL"
TAG_PRIME = "PRIME"
TAG_MAX = "MAX"
TAG_MIN = "MIN"
TAG_MIN_OVER = "MIN_OVER"
TAG_ALPHA = "ALPHA"
TAG_PRIME_ALPHA = "PRIME_ALPHA"
TAG_COANNULET = "COANNULET"
TAG_COANNIHILATOR = "COANNIHILATOR"
TAG_OMEGA = "OMEGA"


@dataclass(frozen=True)
class FilterFamily:
    """A canonical-ordered tuple of filter masks with a provenance tag."""

    members: tuple[int, ...]
    tag: str

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def index(self, mask: int) -> int:
        return self.members.index(mask)


def is_filter(alg: ResiduatedLattice, mask: int) -> bool:
    if mask == 0:
        return False
    for x in elements(mask):
        if alg.up[x] & ~mask:
            return False
        for y in elements(mask):
            if not contains(mask, alg.prod[x][y]):
                return False
    return True


@lru_cache(maxsize=None)
def generated_filter(alg: ResiduatedLattice, mask: int) -> int:
    """Least filter containing the subset; the empty subset gives {top}."""
    cur = mask | singleton(alg.top)
    while True:
        nxt = cur
        for x in elements(cur):
            nxt |= alg.up[x]
        for x in elements(nxt):
            for y in elements(nxt):
                nxt |= singleton(alg.prod[x][y])
        if nxt == cur:
            return cur
        cur = nxt


@lru_cache(maxsize=None)
def principal_filter(alg: ResiduatedLattice, x: int) -> int:
    return generated_filter(alg, singleton(x))


def extend_filter(alg: ResiduatedLattice, f_mask: int, x: int) -> int:
    """Extension of a filter by one element, via its closed form.

    The result is {a : f * x^k <= a for some member f and some k >= 0},
    cross-checked against the generated filter of the union.
    """
    if not is_filter(alg, f_mask):
        raise PreconditionError(f"extend_filter of a non-filter {alg.subset_str(f_mask)}")
    out = 0
    pws = alg.powers(x)
    for f in elements(f_mask):
        for p in pws:
            out |= alg.up[alg.prod[f][p]]
    direct = generated_filter(alg, f_mask | singleton(x))
    if out != direct:
        raise InternalCheckError(
            f"extension closed form {alg.subset_str(out)} disagrees with "
            f"generated filter {alg.subset_str(direct)}")
    return out


@lru_cache(maxsize=None)
def all_filters(alg: ResiduatedLattice) -> FilterFamily:
    """Every filter, computed twice and compared.

    Strategy one collects principal filters of single elements; strategy
    two grows the family from {top} by single-element extensions until
    closed.  On a finite carrier both must agree.
    """
    principal = {principal_filter(alg, x) for x in range(alg.n)}

    grown: set[int] = {generated_filter(alg, 0)}
    frontier = list(grown)
    while frontier:
        f = frontier.pop()
        for x in range(alg.n):
            if not contains(f, x):
                g = generated_filter(alg, f | singleton(x))
                if g not in grown:
                    grown.add(g)
                    frontier.append(g)

    if principal != grown:
        raise InternalCheckError("filter enumeration strategies disagree")
    return FilterFamily(sort_family(grown), TAG_ALL)


def proper_filters(alg: ResiduatedLattice) -> tuple[int, ...]:
    return tuple(f for f in all_filters(alg) if f != alg.universe)


def filter_meet(alg: ResiduatedLattice, f: int, g: int) -> int:
    return f & g


def filter_join(alg: ResiduatedLattice, f: int, g: int) -> int:
    return generated_filter(alg, f | g)


def principal_generator(alg: ResiduatedLattice, f_mask: int) -> int:
    """An element generating the filter: the product of its members.

    Every filter of a finite algebra is recovered from this generator;
    the recovery is checked on every call.
    """
    if not is_filter(alg, f_mask):
        raise PreconditionError(f"not a filter: {alg.subset_str(f_mask)}")
    g = alg.product_of(f_mask)
    if generated_filter(alg, singleton(g)) != f_mask:
        raise InternalCheckError(
            f"product of members fails to regenerate {alg.subset_str(f_mask)}")
    return g


def family_join(family: tuple[int, ...], masks: tuple[int, ...]) -> int:
    """Least family member containing the union of the given members."""
    union = 0
    for m in masks:
        union |= m
    above = [f for f in family if f & union == union]
    if not above:
        raise PreconditionError("family has no upper bound for the join")
    least = min(above, key=lambda f: f.bit_count())
    for f in above:
        if least & f != least:
            raise PreconditionError("family join is not unique")
    return least


def family_meet(family: tuple[int, ...], masks: tuple[int, ...]) -> int:
    """Greatest family member inside the intersection of the given members."""
    inter = ~0
    for m in masks:
        inter &= m
    below = [f for f in family if f & inter == f]
    if not below:
        raise PreconditionError("family has no lower bound for the meet")
    greatest = max(below, key=lambda f: f.bit_count())
    for f in below:
        if f & greatest != f:
            raise PreconditionError("family meet is not unique")
    return greatest


def frame_check(family: tuple[int, ...]) -> bool:
    """Whether meet distributes over joins of arbitrary subfamilies.

    The family is treated as a complete lattice under inclusion, join of
    a subfamily being its least upper member and binary meet its
    greatest lower member.  Checks F meet join(G) == join of pointwise
    meets over every subfamily G, so a five-element diamond of subsets
    fails while every filter family passes.
    """
    fam = tuple(sorted(set(family)))
    k = len(fam)
    for sub_bits in range(1 << k):
        sub = tuple(fam[i] for i in range(k) if sub_bits >> i & 1)
        if not sub:
            continue
        j = family_join(fam, sub)
        for f in fam:
            lhs = family_meet(fam, (f, j))
            rhs = family_join(fam, tuple(family_meet(fam, (f, g)) for g in sub))
            if lhs != rhs:
                return False
    return True
