"""Structure maps between the derived lattices, and global classification.

Six maps tie the element lattice, the filter lattice, the coannulet
lattice, and the point-set lattices over the minimal primes together.
Each map is materialized with its kind (order preserving or order
reversing homomorphism), its kernel congruence, and the isomorphism its
quotient induces.  The classification predicates at the bottom are each
decided by several independent routes that a run refuses to let
disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import ResiduatedLattice
from .alpha import is_alpha_filter
from .coann import coannulet, coannulet_lattice, double_coannihilator
from .errors import InternalCheckError
from .filters import (
    all_filters,
    filter_join,
    principal_filter,
    principal_generator,
)
from .spectrum import (
    cohull,
    hull,
    is_minimal_prime,
    minimal_primes,
    prime_filters,
    topologies_equal,
)
from .subsets import contains, elements, full_set, singleton, sort_family
from .views import (
    Congruence,
    LatticeView,
    build_view,
    is_boolean,
    is_congruence,
    kernel_partition,
    quotient_view,
)

HOM = "lattice homomorphism"
DUAL_HOM = "dual lattice homomorphism"


@dataclass(frozen=True)
class MapReport:
    """One structure map: where it goes, what it preserves, how it sorts."""

    name: str
    domain: str
    codomain: str
    kind: str
    injective: bool
    surjective: bool
    pairs: tuple[tuple[object, object], ...]

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


@lru_cache(maxsize=None)
def element_lattice(alg: ResiduatedLattice) -> LatticeView:
    """The order reduct of the algebra itself, nodes keyed by index."""
    return build_view("elements", tuple(range(alg.n)),
                      lambda x, y: alg.join[x][y], lambda x, y: alg.meet[x][y])


@lru_cache(maxsize=None)
def filter_lattice(alg: ResiduatedLattice) -> LatticeView:
    """All filters under inclusion: meet is intersection, join is the
    generated filter of the union."""
    return build_view("filters", all_filters(alg).members,
                      lambda f, g: filter_join(alg, f, g), lambda f, g: f & g)


@lru_cache(maxsize=None)
def hull_lattice(alg: ResiduatedLattice) -> LatticeView:
    """Hulls of single elements as point sets over the minimal primes."""
    keys = sort_family(hull(alg, singleton(x)) for x in range(alg.n))
    return build_view("hulls", keys, lambda u, v: u | v, lambda u, v: u & v)


@lru_cache(maxsize=None)
def cohull_lattice(alg: ResiduatedLattice) -> LatticeView:
    """Complements of the hulls, again under union and intersection."""
    space = full_set(len(minimal_primes(alg)))
    keys = sort_family(space & ~h for h in hull_lattice(alg).keys)
    return build_view("cohulls", keys, lambda u, v: u | v, lambda u, v: u & v)


def _map_report(name, domain, codomain, kind, images) -> MapReport:
    """Package a node-indexed image list and verify the claimed kind."""
    n = domain.n
    if len(images) != n:
        raise InternalCheckError(f"{name}: image list does not cover the domain")
    pos = [codomain.index(img) for img in images]
    for i in range(n):
        for j in range(n):
            jn, mt = pos[domain.join[i][j]], pos[domain.meet[i][j]]
            if kind == HOM:
                ok = jn == codomain.join[pos[i]][pos[j]] and \
                    mt == codomain.meet[pos[i]][pos[j]]
            else:
                ok = jn == codomain.meet[pos[i]][pos[j]] and \
                    mt == codomain.join[pos[i]][pos[j]]
            if not ok:
                raise InternalCheckError(
                    f"{name}: fails to be a {kind} at "
                    f"({domain.keys[i]!r}, {domain.keys[j]!r})")
    return MapReport(
        name=name,
        domain=domain.name,
        codomain=codomain.name,
        kind=kind,
        injective=len(set(pos)) == n,
        surjective=set(pos) == set(range(codomain.n)),
        pairs=tuple((domain.keys[i], codomain.keys[pos[i]]) for i in range(n)),
    )


def _generator_coannulet(alg: ResiduatedLattice, f_mask: int) -> int:
    """Coannulet of a generator of the filter, checked independent of
    which generator is picked."""
    gens = [x for x in elements(f_mask) if principal_filter(alg, x) == f_mask]
    if not gens:
        raise InternalCheckError(
            f"filter {alg.subset_str(f_mask)} has no single generator")
    perps = {coannulet(alg, g) for g in gens}
    if len(perps) != 1:
        raise InternalCheckError(
            f"generator coannulet of {alg.subset_str(f_mask)} depends on the generator")
    return perps.pop()


@lru_cache(maxsize=None)
def structure_maps(alg: ResiduatedLattice) -> dict[str, MapReport]:
    """The six maps, their kinds verified, with composition identities."""
    el = element_lattice(alg)
    fl = filter_lattice(alg)
    gam = coannulet_lattice(alg)
    hl = hull_lattice(alg)
    dl = cohull_lattice(alg)

    to_principal = [principal_filter(alg, x) for x in range(alg.n)]
    to_perp = [coannulet(alg, x) for x in range(alg.n)]
    to_cohull = [cohull(alg, f) for f in fl.keys]
    to_gen_perp = [_generator_coannulet(alg, f) for f in fl.keys]
    space = full_set(len(minimal_primes(alg)))
    complement = [space & ~d for d in dl.keys]

    hull_of_perp = {}
    for x in range(alg.n):
        h = hull(alg, singleton(x))
        prev = hull_of_perp.setdefault(to_perp[x], h)
        if prev != h:
            raise InternalCheckError(
                "elements with one coannulet produced two hulls")
    to_hull = [hull_of_perp[p] for p in gam.keys]

    maps = {
        "element to principal filter":
            _map_report("element to principal filter", el, fl, DUAL_HOM, to_principal),
        "element to coannulet":
            _map_report("element to coannulet", el, gam, HOM, to_perp),
        "filter to cohull":
            _map_report("filter to cohull", fl, dl, HOM, to_cohull),
        "filter to generator coannulet":
            _map_report("filter to generator coannulet", fl, gam, DUAL_HOM, to_gen_perp),
        "cohull to hull":
            _map_report("cohull to hull", dl, hl, DUAL_HOM, complement),
        "coannulet to hull":
            _map_report("coannulet to hull", gam, hl, HOM, to_hull),
    }

    for x in range(alg.n):
        if to_gen_perp[fl.index(to_principal[x])] != to_perp[x]:
            raise InternalCheckError(
                "coannulet map fails to factor through the principal filter map")
    for i, f in enumerate(fl.keys):
        via_cohull = space & ~to_cohull[i]
        via_perp = hull_of_perp[to_gen_perp[i]]
        if via_cohull != via_perp:
            raise InternalCheckError(
                "the two routes from filters to hulls disagree")

    if not maps["cohull to hull"].bijective or not maps["coannulet to hull"].bijective:
        raise InternalCheckError("point-set translations must be bijections")
    return maps


# -- kernel congruences and their quotients --------------------------------

def _induced_iso_check(view: LatticeView, images, target: LatticeView,
                       dual: bool) -> Congruence:
    """First isomorphism theorem, verified: the kernel partition is a
    congruence and the quotient carries over onto the target."""
    cong = kernel_partition(view, images)
    if not is_congruence(view, cong):
        raise InternalCheckError(f"{view.name}: kernel is not a congruence")
    quot = quotient_view(view, cong)
    img = [images[c[0]] for c in cong.classes]
    if set(img) != set(target.keys) or len(img) != target.n:
        raise InternalCheckError(f"{view.name}: quotient misses the target")
    pos = [target.index(v) for v in img]
    for a in range(quot.n):
        for b in range(quot.n):
            jn, mt = pos[quot.join[a][b]], pos[quot.meet[a][b]]
            want_jn = target.meet[pos[a]][pos[b]] if dual else target.join[pos[a]][pos[b]]
            want_mt = target.join[pos[a]][pos[b]] if dual else target.meet[pos[a]][pos[b]]
            if jn != want_jn or mt != want_mt:
                raise InternalCheckError(
                    f"{view.name}: quotient operations do not transport")
    return cong


@lru_cache(maxsize=None)
def element_kernel_by_principal_filter(alg: ResiduatedLattice) -> Congruence:
    """Elements generating the same filter; quotient is the filter
    lattice upside down."""
    return _induced_iso_check(
        element_lattice(alg),
        [principal_filter(alg, x) for x in range(alg.n)],
        filter_lattice(alg), dual=True)


@lru_cache(maxsize=None)
def element_kernel_by_coannulet(alg: ResiduatedLattice) -> Congruence:
    """Elements sharing a coannulet; quotient is the coannulet lattice."""
    return _induced_iso_check(
        element_lattice(alg),
        [coannulet(alg, x) for x in range(alg.n)],
        coannulet_lattice(alg), dual=False)


@lru_cache(maxsize=None)
def filter_kernel_spectral(alg: ResiduatedLattice) -> Congruence:
    """Filters with equal cohull; coincides with the generator
    coannulet kernel, and the quotient is the coannulet lattice
    upside down."""
    fl = filter_lattice(alg)
    by_cohull = kernel_partition(fl, [cohull(alg, f) for f in fl.keys])
    by_perp = kernel_partition(fl, [_generator_coannulet(alg, f) for f in fl.keys])
    if by_cohull.classes != by_perp.classes:
        raise InternalCheckError("spectral kernels disagree")
    return _induced_iso_check(
        fl, [_generator_coannulet(alg, f) for f in fl.keys],
        coannulet_lattice(alg), dual=True)


def congruence_classes_named(alg: ResiduatedLattice, cong: Congruence,
                             view: LatticeView) -> tuple[tuple[str, ...], ...]:
    """Readable class lists for reports."""
    def label(key):
        if view.name == "elements":
            return alg.names[key]
        return alg.subset_str(key)
    return tuple(tuple(label(view.keys[i]) for i in cls) for cls in cong.classes)


# -- classification --------------------------------------------------------

@dataclass(frozen=True)
class ClassificationResult:
    """Verdicts with every route's answer retained."""

    quasicomplemented: bool
    disjunctive: bool
    weakly_disjunctive: bool
    lattice_boolean: bool
    filter_lattice_boolean: bool
    routes: dict[str, tuple[tuple[str, bool], ...]]


def _agree(name, routes) -> bool:
    verdicts = {v for _, v in routes}
    if len(verdicts) != 1:
        detail = ", ".join(f"{label}={v}" for label, v in routes)
        raise InternalCheckError(f"{name} routes disagree: {detail}")
    return verdicts.pop()


def _has_quasicomplement(alg: ResiduatedLattice, x: int) -> bool:
    dbl = double_coannihilator(alg, singleton(x))
    return any(coannulet(alg, y) == dbl for y in range(alg.n))


def _join_complement_with_dense_meet(alg: ResiduatedLattice, x: int) -> bool:
    return any(alg.join[x][y] == alg.top and
               contains(alg.dense_elements, alg.meet[x][y])
               for y in range(alg.n))


def _primes_without_dense_are_minimal(alg: ResiduatedLattice) -> bool:
    for p in prime_filters(alg):
        if p & alg.dense_elements == 0 and not is_minimal_prime(alg, p):
            return False
    return True


def _nilpotent_absorber(alg: ResiduatedLattice, x: int) -> bool:
    return any(alg.join[x][y] == alg.top and
               contains(alg.nilpotents, alg.prod[x][y])
               for y in range(alg.n))


@lru_cache(maxsize=None)
def classification(alg: ResiduatedLattice) -> ClassificationResult:
    maps = structure_maps(alg)
    routes: dict[str, tuple[tuple[str, bool], ...]] = {}

    routes["quasicomplemented"] = (
        ("every element has a coannulet matching its double coannihilator",
         all(_has_quasicomplement(alg, x) for x in range(alg.n))),
        ("every element has a join complement with dense meet",
         all(_join_complement_with_dense_meet(alg, x) for x in range(alg.n))),
        ("coannulet lattice is Boolean", is_boolean(coannulet_lattice(alg))),
        ("element quotient by shared coannulet is Boolean",
         is_boolean(quotient_view(element_lattice(alg),
                                  element_kernel_by_coannulet(alg)))),
        ("filter quotient by shared cohull is Boolean",
         is_boolean(quotient_view(filter_lattice(alg),
                                  filter_kernel_spectral(alg)))),
        ("primes without dense elements are minimal",
         _primes_without_dense_are_minimal(alg)),
        ("hull and dual hull topologies coincide", topologies_equal(alg)),
    )
    qc = _agree("quasicomplemented", routes["quasicomplemented"])

    kernel = element_kernel_by_coannulet(alg)
    routes["disjunctive"] = (
        ("element to coannulet map is injective",
         maps["element to coannulet"].injective),
        ("shared coannulet classes are singletons",
         all(len(c) == 1 for c in kernel.classes)),
    )
    disj = _agree("disjunctive", routes["disjunctive"])

    spectral = filter_kernel_spectral(alg)
    routes["weakly disjunctive"] = (
        ("filter to cohull map is injective", maps["filter to cohull"].injective),
        ("filter to generator coannulet map is injective",
         maps["filter to generator coannulet"].injective),
        ("equal cohull classes are singletons",
         all(len(c) == 1 for c in spectral.classes)),
        ("every filter swallows double coannihilators",
         all(is_alpha_filter(alg, f) for f in all_filters(alg))),
        ("every prime filter swallows double coannihilators",
         all(is_alpha_filter(alg, p) for p in prime_filters(alg))),
    )
    wdisj = _agree("weakly disjunctive", routes["weakly disjunctive"])

    routes["lattice Boolean"] = (
        ("element lattice is complemented and distributive",
         is_boolean(element_lattice(alg))),
        ("negation complements every element",
         all(alg.meet[x][alg.neg(x)] == alg.bottom and
             alg.join[x][alg.neg(x)] == alg.top for x in range(alg.n))),
    )
    lb = _agree("lattice Boolean", routes["lattice Boolean"])

    routes["filter lattice Boolean"] = (
        ("filter lattice is complemented and distributive",
         is_boolean(filter_lattice(alg))),
        ("every element has a join complement with nilpotent product",
         all(_nilpotent_absorber(alg, x) for x in range(alg.n))),
        ("quasicomplemented and weakly disjunctive", qc and wdisj),
    )
    flb = _agree("filter lattice Boolean", routes["filter lattice Boolean"])

    if lb != (qc and disj):
        raise InternalCheckError(
            "Boolean element lattice must match quasicomplemented plus disjunctive")

    return ClassificationResult(
        quasicomplemented=qc,
        disjunctive=disj,
        weakly_disjunctive=wdisj,
        lattice_boolean=lb,
        filter_lattice_boolean=flb,
        routes=routes,
    )


def is_quasicomplemented(alg: ResiduatedLattice) -> bool:
    return classification(alg).quasicomplemented


def is_disjunctive(alg: ResiduatedLattice) -> bool:
    return classification(alg).disjunctive


def is_weakly_disjunctive(alg: ResiduatedLattice) -> bool:
    return classification(alg).weakly_disjunctive
