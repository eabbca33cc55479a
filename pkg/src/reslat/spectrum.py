"""Prime filters, separation, minimal primes, and the point topologies.

A proper filter is prime when membership of a join forces membership of
an operand.  The spectrum, its maximal and minimal members, and the two
topologies on the minimal points (closed basis of hulls, and the dual
with hulls open) are all materialized since the carrier is finite.

Point subsets live over the canonical minimal-prime ordering, so the
same subset of points always prints the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import ResiduatedLattice
from .errors import InternalCheckError, PreconditionError
from .filters import (
    TAG_MAX,
    TAG_MIN,
    TAG_MIN_OVER,
    TAG_PRIME,
    FilterFamily,
    all_filters,
    generated_filter,
    is_filter,
    principal_generator,
)
from .subsets import contains, elements, full_set, singleton, sort_family


@dataclass(frozen=True)
class PrimeWitness:
    """Result of a primality check; falsy with the failing pair attached."""

    mask: int
    failure: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.failure is None


def is_prime(alg: ResiduatedLattice, mask: int) -> PrimeWitness:
    """Primality of a proper filter, with a witness pair on failure."""
    if not is_filter(alg, mask):
        raise PreconditionError(f"not a filter: {alg.subset_str(mask)}")
    if mask == alg.universe:
        raise PreconditionError("primality is only defined for proper filters")
    for x in range(alg.n):
        for y in range(alg.n):
            if contains(mask, alg.join[x][y]) and not contains(mask, x) and not contains(mask, y):
                return PrimeWitness(mask, (x, y))
    return PrimeWitness(mask, None)


@lru_cache(maxsize=None)
def prime_filters(alg: ResiduatedLattice) -> FilterFamily:
    members = [f for f in all_filters(alg)
               if f != alg.universe and is_prime(alg, f)]
    return FilterFamily(sort_family(members), TAG_PRIME)


@lru_cache(maxsize=None)
def maximal_filters(alg: ResiduatedLattice) -> FilterFamily:
    props = [f for f in all_filters(alg) if f != alg.universe]
    members = [f for f in props if not any(f != g and f & g == f for g in props)]
    # maximal filters must come out prime; disagreement means a bug
    for f in members:
        if not is_prime(alg, f):
            raise InternalCheckError(f"maximal filter {alg.subset_str(f)} is not prime")
    return FilterFamily(sort_family(members), TAG_MAX)


@lru_cache(maxsize=None)
def minimal_primes(alg: ResiduatedLattice) -> FilterFamily:
    ps = prime_filters(alg).members
    members = [p for p in ps if not any(q != p and q & p == q for q in ps)]
    return FilterFamily(sort_family(members), TAG_MIN)


def minimal_primes_over(alg: ResiduatedLattice, x_mask: int) -> FilterFamily:
    """Minimal members of the primes containing the given subset."""
    ps = [p for p in prime_filters(alg) if p & x_mask == x_mask]
    members = [p for p in ps if not any(q != p and q & p == q for q in ps)]
    return FilterFamily(sort_family(members), TAG_MIN_OVER)


def _check_join_closed(alg: ResiduatedLattice, c_mask: int) -> None:
    if c_mask == 0:
        raise PreconditionError("the avoided set must be nonempty")
    for x in elements(c_mask):
        for y in elements(c_mask):
            j = alg.join[x][y]
            if not contains(c_mask, j):
                raise PreconditionError(
                    f"avoided set not closed under join: {alg.names[x]} v {alg.names[y]} "
                    f"= {alg.names[j]} escapes it")


def separate(alg: ResiduatedLattice, f_mask: int, c_mask: int) -> int:
    """A prime filter containing F, disjoint from a join-closed C, and
    maximal with that property.

    Greedy: repeatedly absorb the first element, in carrier order, whose
    generated extension still avoids C.  The loop order makes the choice
    among maximal solutions deterministic.  The result is checked prime.
    """
    if not is_filter(alg, f_mask):
        raise PreconditionError(f"not a filter: {alg.subset_str(f_mask)}")
    _check_join_closed(alg, c_mask)
    if f_mask & c_mask:
        x = next(elements(f_mask & c_mask))
        raise PreconditionError(f"filter meets the avoided set at {alg.names[x]}")

    cur = f_mask
    changed = True
    while changed:
        changed = False
        for x in range(alg.n):
            if contains(cur, x):
                continue
            ext = generated_filter(alg, cur | singleton(x))
            if ext & c_mask == 0:
                cur = ext
                changed = True
                break
    if not is_prime(alg, cur):
        raise InternalCheckError("separation produced a non-prime filter")
    return cur


def is_minimal_prime(alg: ResiduatedLattice, p_mask: int) -> bool:
    """Minimality via the complement route, cross-checked by enumeration.

    A prime is minimal exactly when its complement is a maximal
    join-closed set avoiding top.  The direct route asks whether the
    complement can absorb any member (other than top) and stay
    join-closed without reaching top.
    """
    if not is_prime(alg, p_mask):
        raise PreconditionError(f"not a prime filter: {alg.subset_str(p_mask)}")
    comp = alg.universe & ~p_mask
    by_complement = True
    for x in elements(p_mask & ~singleton(alg.top)):
        grown = _join_closure(alg, comp | singleton(x))
        if not contains(grown, alg.top):
            by_complement = False
            break
    by_enumeration = p_mask in minimal_primes(alg).members
    if by_complement != by_enumeration:
        raise InternalCheckError("minimality routes disagree on " + alg.subset_str(p_mask))
    return by_enumeration


def _join_closure(alg: ResiduatedLattice, mask: int) -> int:
    cur = mask
    while True:
        nxt = cur
        for x in elements(cur):
            for y in elements(cur):
                nxt |= singleton(alg.join[x][y])
        if nxt == cur:
            return cur
        cur = nxt


@lru_cache(maxsize=None)
def join_closed_sets(alg: ResiduatedLattice) -> tuple[int, ...]:
    """Every nonempty join-closed subset, for exhaustive quantification."""
    return tuple(m for m in range(1, alg.universe + 1) if _join_closure(alg, m) == m)


def prime_core(alg: ResiduatedLattice, p_mask: int) -> int:
    """Elements with a join-complement outside the prime filter.

    Computed as the union of coannulets of the complement, which is a
    lattice ideal for a prime filter.  Checked against the intersection
    of the minimal primes inside P on every call.
    """
    if not is_prime(alg, p_mask):
        raise PreconditionError(f"not a prime filter: {alg.subset_str(p_mask)}")
    comp = alg.universe & ~p_mask
    out = 0
    for x in elements(comp):
        for a in range(alg.n):
            if alg.join[a][x] == alg.top:
                out |= singleton(a)
    inter = alg.universe
    for m in minimal_primes(alg):
        if m & p_mask == m:
            inter &= m
    if out != inter:
        raise InternalCheckError(
            f"core of {alg.subset_str(p_mask)} disagrees with the minimal-prime intersection")
    return out


# -- hulls and the point topologies ----------------------------------------

def hull(alg: ResiduatedLattice, x_mask: int) -> int:
    """Points (minimal primes, canonical order) containing the subset."""
    pts = minimal_primes(alg).members
    out = 0
    for i, m in enumerate(pts):
        if m & x_mask == x_mask:
            out |= 1 << i
    return out


def cohull(alg: ResiduatedLattice, x_mask: int) -> int:
    return full_set(len(minimal_primes(alg))) & ~hull(alg, x_mask)


def kernel_filter(alg: ResiduatedLattice, points: int) -> int:
    """Intersection of the selected points; the whole carrier for none."""
    pts = minimal_primes(alg).members
    out = alg.universe
    for i in elements(points):
        out &= pts[i]
    return out


@dataclass(frozen=True)
class Topology:
    """Opens over the minimal-prime points, with the generating basis."""

    points: FilterFamily
    opens: tuple[int, ...]
    basis: tuple[int, ...]

    @property
    def space(self) -> int:
        return full_set(len(self.points))

    def closed_sets(self) -> tuple[int, ...]:
        return sort_family(self.space & ~u for u in self.opens)

    def is_open(self, s: int) -> bool:
        return s in self.opens

    def is_clopen(self, s: int) -> bool:
        return s in self.opens and (self.space & ~s) in self.opens


def _check_topology(opens: set[int], space: int) -> None:
    if 0 not in opens or space not in opens:
        raise InternalCheckError("topology misses the empty set or the space")
    for u in opens:
        for v in opens:
            if (u | v) not in opens or (u & v) not in opens:
                raise InternalCheckError("opens not closed under union/intersection")


def _from_open_basis(points: FilterFamily, basis: tuple[int, ...]) -> Topology:
    space = full_set(len(points))
    opens = {0, space}
    opens.update(basis)
    changed = True
    while changed:
        changed = False
        for u in tuple(opens):
            for v in tuple(opens):
                for w in (u | v, u & v):
                    if w not in opens:
                        opens.add(w)
                        changed = True
    _check_topology(opens, space)
    return Topology(points, sort_family(opens), sort_family(basis))


@lru_cache(maxsize=None)
def hull_topology(alg: ResiduatedLattice) -> Topology:
    """Topology with the hulls of single elements as a closed basis."""
    pts = minimal_primes(alg)
    space = full_set(len(pts))
    closed_basis = {hull(alg, singleton(x)) for x in range(alg.n)}
    # closed sets: all intersections of finite unions of basis members
    closed = {space, 0}
    closed.update(closed_basis)
    changed = True
    while changed:
        changed = False
        for u in tuple(closed):
            for v in tuple(closed):
                for w in (u | v, u & v):
                    if w not in closed:
                        closed.add(w)
                        changed = True
    opens = {space & ~c for c in closed}
    _check_topology(opens, space)
    open_basis = sort_family(space & ~h for h in closed_basis)
    return Topology(pts, sort_family(opens), open_basis)


@lru_cache(maxsize=None)
def dual_hull_topology(alg: ResiduatedLattice) -> Topology:
    """Topology with the same hulls taken as an open basis."""
    pts = minimal_primes(alg)
    basis = sort_family(hull(alg, singleton(x)) for x in range(alg.n))
    return _from_open_basis(pts, basis)


def topologies_equal(alg: ResiduatedLattice) -> bool:
    return hull_topology(alg).opens == dual_hull_topology(alg).opens


def is_zero_dimensional(t: Topology) -> bool:
    """Every open is a union of clopen sets."""
    clopens = [u for u in t.opens if t.is_clopen(u)]
    for u in t.opens:
        cover = 0
        for c in clopens:
            if c & ~u == 0:
                cover |= c
        if cover != u:
            return False
    return True


def is_totally_disconnected(t: Topology) -> bool:
    """Distinct points are separated by a clopen set."""
    pts = list(elements(t.space))
    for i in pts:
        for j in pts:
            if i >= j:
                continue
            if not any(t.is_clopen(u) and contains(u, i) and not contains(u, j)
                       for u in t.opens):
                return False
    return True


def is_compact(t: Topology) -> bool:
    """Every basis cover of the space admits a finite subcover.

    The basis is finite, so the check enumerates basis subfamilies that
    cover the space and greedily extracts a subcover from each.
    """
    basis = t.basis
    k = len(basis)
    for sub_bits in range(1 << k):
        union = 0
        chosen = [basis[i] for i in range(k) if sub_bits >> i & 1]
        for b in chosen:
            union |= b
        if union != t.space:
            continue
        cover = 0
        for b in sorted(chosen, key=lambda m: -m.bit_count()):
            if b & ~cover:
                cover |= b
            if cover == t.space:
                break
        if cover != t.space:
            return False
    return True
