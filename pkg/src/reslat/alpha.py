"""Filters closed under double coannihilators.

A filter F is double-coannihilator closed when membership of x forces
membership of everything in the double coannihilator of x.  These
filters are the fixed points of a closure operator on the filter
lattice that preserves intersections, so they form a frame of their
own, with a Heyting implication, and that frame is isomorphic to the
frame of lattice filters of the coannulet lattice via a mutually
inverse monotone pair of maps.

Everything here computes by more than one route where a theorem says
the routes agree; disagreement raises InternalCheckError.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import ResiduatedLattice
from .coann import coannihilator, coannulet, coannulet_lattice, double_coannihilator
from .errors import InternalCheckError, PreconditionError
from .filters import (
    TAG_ALPHA,
    TAG_PRIME_ALPHA,
    FilterFamily,
    all_filters,
    frame_check,
    generated_filter,
    is_filter,
)
from .spectrum import _check_join_closed, is_prime, prime_filters
from .subsets import contains, elements, singleton, sort_family
from .views import LatticeView, build_view, view_filter_generated, view_filters


def is_alpha_filter(alg: ResiduatedLattice, mask: int) -> bool:
    """Whether the filter swallows double coannihilators of its members.

    Three equivalent formulations are evaluated and must agree: the
    defining containment, reconstruction as the union of member double
    coannihilators, and closure under dominating coannulets.
    """
    if not is_filter(alg, mask):
        raise PreconditionError(f"not a filter: {alg.subset_str(mask)}")

    defining = all(double_coannihilator(alg, singleton(x)) & ~mask == 0
                   for x in elements(mask))

    union = 0
    for x in elements(mask):
        union |= double_coannihilator(alg, singleton(x))
    reconstruction = union == mask

    dominating = all(contains(mask, y)
                     for x in elements(mask)
                     for y in range(alg.n)
                     if coannulet(alg, x) & ~coannulet(alg, y) == 0)

    if not (defining == reconstruction == dominating):
        raise InternalCheckError(
            f"alpha-filter routes disagree on {alg.subset_str(mask)}")
    return defining


@lru_cache(maxsize=None)
def alpha_family(alg: ResiduatedLattice) -> FilterFamily:
    return FilterFamily(tuple(f for f in all_filters(alg)
                              if is_alpha_filter(alg, f)), TAG_ALPHA)


@lru_cache(maxsize=None)
def alpha_closure(alg: ResiduatedLattice, mask: int) -> int:
    """Least double-coannihilator-closed filter containing the subset.

    Built as the union of member double coannihilators over the
    generated filter, cross-checked against the intersection of all
    such filters above the subset, and verified to be a closure.
    """
    out = 0
    for x in elements(generated_filter(alg, mask)):
        out |= double_coannihilator(alg, singleton(x))

    meet = alg.universe
    for f in alpha_family(alg):
        if mask & ~f == 0:
            meet &= f
    if out != meet:
        raise InternalCheckError("alpha closure routes disagree")
    if mask & ~out:
        raise InternalCheckError("alpha closure is not extensive")
    if not is_alpha_filter(alg, out):
        raise InternalCheckError("alpha closure escaped its fixed points")
    return out


def alpha_extend(alg: ResiduatedLattice, f_mask: int, x: int) -> int:
    """Least alpha filter containing F and x.

    Closed form: union of the double coannihilators of f * x^k over
    members f and exponents k, cross-checked against the closure of
    the enlarged set.
    """
    if not is_filter(alg, f_mask):
        raise PreconditionError(f"not a filter: {alg.subset_str(f_mask)}")
    out = 0
    for f in elements(f_mask):
        acc = f
        seen = set()
        while acc not in seen:
            seen.add(acc)
            out |= double_coannihilator(alg, singleton(acc))
            acc = alg.prod[acc][x]
    if out != alpha_closure(alg, f_mask | singleton(x)):
        raise InternalCheckError("alpha extension routes disagree")
    return out


def alpha_join(alg: ResiduatedLattice, f: int, g: int) -> int:
    return alpha_closure(alg, f | g)


@lru_cache(maxsize=None)
def alpha_lattice(alg: ResiduatedLattice) -> LatticeView:
    """The alpha filters as a lattice: meet is intersection, join is
    the closure of the union.  Must come out a frame."""
    fam = alpha_family(alg)

    def mt(u, v):
        out = u & v
        if out not in fam.members:
            raise InternalCheckError("alpha filters not closed under intersection")
        return out

    view = build_view("alpha-filters", fam.members,
                      lambda u, v: alpha_join(alg, u, v), mt)
    if not frame_check(fam.members):
        raise InternalCheckError("alpha filters fail the frame law")
    return view


def heyting_implication(alg: ResiduatedLattice, f_mask: int, g_mask: int) -> int:
    """Largest alpha filter whose intersection with F lies inside G.

    Existence is a frame fact; the maximum is computed by joining all
    candidates and re-checking that the join still qualifies.
    """
    fam = alpha_family(alg)
    if f_mask not in fam.members or g_mask not in fam.members:
        raise PreconditionError("heyting implication needs alpha filters")
    out = alpha_closure(alg, singleton(alg.top))
    for h in fam:
        if f_mask & h & ~g_mask == 0:
            out = alpha_join(alg, out, h)
    if f_mask & out & ~g_mask:
        raise InternalCheckError("join of qualifying filters stopped qualifying")
    for h in fam:
        qualifies = f_mask & h & ~g_mask == 0
        below = h & ~out == 0
        if qualifies != below:
            raise InternalCheckError("heyting adjunction failed")
    return out


# -- transfer to and from the coannulet lattice ----------------------------

def perp_image(alg: ResiduatedLattice, f_mask: int) -> int:
    """Map an alpha filter to the coannulets of its members, as a
    lattice filter of the coannulet lattice (a mask over view keys)."""
    if not is_alpha_filter(alg, f_mask):
        raise PreconditionError(f"not an alpha filter: {alg.subset_str(f_mask)}")
    view = coannulet_lattice(alg)
    out = 0
    for x in elements(f_mask):
        out |= singleton(view.index(coannulet(alg, x)))
    if out not in view_filters(view):
        raise InternalCheckError("coannulet image of an alpha filter "
                                 "is not a lattice filter")
    return out


def perp_preimage(alg: ResiduatedLattice, g_mask: int) -> int:
    """Map a lattice filter of the coannulet lattice back to the
    elements whose coannulet it contains; always an alpha filter."""
    view = coannulet_lattice(alg)
    if g_mask not in view_filters(view):
        raise PreconditionError("not a lattice filter of the coannulet lattice")
    out = 0
    for x in range(alg.n):
        if contains(g_mask, view.index(coannulet(alg, x))):
            out |= singleton(x)
    if not is_alpha_filter(alg, out):
        raise InternalCheckError("preimage of a lattice filter is not alpha")
    return out


def transfer_roundtrip_check(alg: ResiduatedLattice) -> bool:
    """The two transfer maps are mutually inverse and adjoint, and the
    closure of any filter factors through them."""
    view = coannulet_lattice(alg)
    for f in alpha_family(alg):
        if perp_preimage(alg, perp_image(alg, f)) != f:
            return False
    for g in view_filters(view):
        if perp_image(alg, perp_preimage(alg, g)) != g:
            return False
    for f in alpha_family(alg):
        for g in view_filters(view):
            if (perp_image(alg, f) & ~g == 0) != (f & ~perp_preimage(alg, g) == 0):
                return False
    for f in all_filters(alg):
        raw = 0
        for x in elements(f):
            raw |= singleton(view.index(coannulet(alg, x)))
        via_view = perp_preimage(alg, view_filter_generated(view, raw))
        if via_view != alpha_closure(alg, f):
            return False
    return True


# -- prime alpha filters ---------------------------------------------------

def is_prime_alpha(alg: ResiduatedLattice, mask: int) -> bool:
    """Prime among alpha filters, with all four characterizations
    required to agree: prime as an ordinary filter, prime element of
    the alpha lattice, meet irreducible there, and coannulet image
    prime in the coannulet lattice."""
    if mask not in alpha_family(alg).members:
        raise PreconditionError(f"not an alpha filter: {alg.subset_str(mask)}")
    if mask == alg.universe:
        return False
    fam = alpha_family(alg)

    as_filter = bool(is_prime(alg, mask))

    as_element = True
    for f in fam:
        for g in fam:
            if f & g & ~mask == 0 and f & ~mask and g & ~mask:
                as_element = False
    irreducible = True
    for f in fam:
        for g in fam:
            if f & g == mask and f != mask and g != mask:
                irreducible = False

    view = coannulet_lattice(alg)
    img = perp_image(alg, mask)
    full = (1 << view.n) - 1
    img_prime = img != full
    for i in range(view.n):
        for j in range(view.n):
            if contains(img, view.join[i][j]) and \
                    not contains(img, i) and not contains(img, j):
                img_prime = False

    if not (as_filter == as_element == irreducible == img_prime):
        raise InternalCheckError(
            f"prime-alpha routes disagree on {alg.subset_str(mask)}")
    return as_filter


@lru_cache(maxsize=None)
def prime_alpha_filters(alg: ResiduatedLattice) -> FilterFamily:
    members = tuple(f for f in alpha_family(alg)
                    if f != alg.universe and is_prime_alpha(alg, f))
    both = sort_family(set(prime_filters(alg).members)
                       & set(alpha_family(alg).members))
    if members != both:
        raise InternalCheckError("prime alpha filters differ from the "
                                 "prime and alpha intersection")
    return FilterFamily(members, TAG_PRIME_ALPHA)


def alpha_separate(alg: ResiduatedLattice, f_mask: int, c_mask: int) -> int:
    """Grow an alpha filter containing F but avoiding the join closed
    set C, greedily absorbing carrier elements; the maximal result is
    checked prime."""
    if not is_filter(alg, f_mask):
        raise PreconditionError(f"not a filter: {alg.subset_str(f_mask)}")
    _check_join_closed(alg, c_mask)
    start = alpha_closure(alg, f_mask)
    if start & c_mask:
        raise PreconditionError(
            f"closure of {alg.subset_str(f_mask)} already meets the avoided set")
    cur = start
    for x in range(alg.n):
        if not contains(cur, x):
            bigger = alpha_extend(alg, cur, x)
            if bigger & c_mask == 0:
                cur = bigger
    if not is_prime_alpha(alg, cur):
        raise InternalCheckError("maximal avoiding alpha filter is not prime")
    return cur
