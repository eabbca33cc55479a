"""Small bounded lattices built over opaque node keys.

Derived structures (families of filters, of coannihilators, of point
sets) are lattices in their own right, usually with joins that are not
plain unions.  A LatticeView materializes such a structure as index
tables over a canonical key tuple so the generic law checkers,
congruence and quotient machinery apply uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .errors import InternalCheckError, PreconditionError

Key = Hashable


@dataclass(frozen=True)
class LatticeView:
    """A finite bounded lattice: canonical keys plus join/meet tables."""

    name: str
    keys: tuple[Key, ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return len(self.keys)

    def index(self, key: Key) -> int:
        return self.keys.index(key)

    def leq(self, i: int, j: int) -> bool:
        return self.meet[i][j] == i


def build_view(name: str,
               keys: Sequence[Key],
               join_fn: Callable[[Key, Key], Key],
               meet_fn: Callable[[Key, Key], Key]) -> LatticeView:
    """Materialize tables from binary ops and verify the lattice laws.

    The ops must be closed on the key set; a result outside it is an
    internal-consistency failure of the caller's construction.
    """
    keys = tuple(keys)
    if len(set(keys)) != len(keys):
        raise PreconditionError(f"{name}: duplicate keys")
    pos = {k: i for i, k in enumerate(keys)}
    n = len(keys)

    def table(fn, label):
        t = []
        for a in keys:
            row = []
            for b in keys:
                v = fn(a, b)
                if v not in pos:
                    raise InternalCheckError(f"{name}: {label} of {a!r}, {b!r} gives {v!r}, "
                                             "not a member of the family")
                row.append(pos[v])
            t.append(tuple(row))
        return tuple(t)

    join = table(join_fn, "join")
    meet = table(meet_fn, "meet")

    bottoms = [i for i in range(n) if all(meet[i][j] == i for j in range(n))]
    tops = [i for i in range(n) if all(join[i][j] == i for j in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise InternalCheckError(f"{name}: family is not bounded")
    view = LatticeView(name, keys, join, meet, bottoms[0], tops[0])
    problems = check_lattice_laws(view)
    if problems:
        raise InternalCheckError(f"{name}: " + "; ".join(problems))
    return view


def check_lattice_laws(view: LatticeView) -> list[str]:
    """Commutativity, associativity, idempotence, absorption, bounds."""
    n = view.n
    join, meet = view.join, view.meet
    out = []
    for x in range(n):
        if join[x][x] != x or meet[x][x] != x:
            out.append(f"idempotence fails at {view.keys[x]!r}")
        if meet[view.bottom][x] != view.bottom or join[view.top][x] != view.top:
            out.append(f"bounds fail at {view.keys[x]!r}")
    for x in range(n):
        for y in range(n):
            if join[x][y] != join[y][x] or meet[x][y] != meet[y][x]:
                out.append(f"commutativity fails at ({x},{y})")
            if join[x][meet[x][y]] != x or meet[x][join[x][y]] != x:
                out.append(f"absorption fails at ({x},{y})")
            for z in range(n):
                if join[join[x][y]][z] != join[x][join[y][z]]:
                    out.append(f"join associativity fails at ({x},{y},{z})")
                if meet[meet[x][y]][z] != meet[x][meet[y][z]]:
                    out.append(f"meet associativity fails at ({x},{y},{z})")
    return out[:8]


def is_distributive(view: LatticeView) -> bool:
    n = view.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = view.meet[x][view.join[y][z]]
                rhs = view.join[view.meet[x][y]][view.meet[x][z]]
                if lhs != rhs:
                    return False
    return True


def complements_in(view: LatticeView, i: int) -> tuple[int, ...]:
    return tuple(j for j in range(view.n)
                 if view.meet[i][j] == view.bottom and view.join[i][j] == view.top)


def is_boolean(view: LatticeView) -> bool:
    """Distributive and every node complemented."""
    if not is_distributive(view):
        return False
    return all(complements_in(view, i) for i in range(view.n))


def is_view_filter(view: LatticeView, mask: int) -> bool:
    """Nonempty, upward closed, and meet closed set of nodes."""
    if mask == 0:
        return False
    for i in range(view.n):
        if mask >> i & 1:
            for j in range(view.n):
                if view.leq(i, j) and not mask >> j & 1:
                    return False
                if mask >> j & 1 and not mask >> view.meet[i][j] & 1:
                    return False
    return True


@lru_cache(maxsize=None)
def view_filters(view: LatticeView) -> tuple[int, ...]:
    """Every lattice filter of the view, as masks over node indices."""
    out = [m for m in range(1, 1 << view.n) if is_view_filter(view, m)]
    out.sort(key=lambda m: (m.bit_count(), m))
    return tuple(out)


def view_filter_generated(view: LatticeView, mask: int) -> int:
    """Least lattice filter containing the given nodes."""
    cur = mask | 1 << view.top
    while True:
        nxt = cur
        for i in range(view.n):
            if cur >> i & 1:
                for j in range(view.n):
                    if view.leq(i, j):
                        nxt |= 1 << j
                    if cur >> j & 1:
                        nxt |= 1 << view.meet[i][j]
        if nxt == cur:
            return cur
        cur = nxt


def is_sublattice(sub: LatticeView, sup: LatticeView) -> bool:
    """Same keys subset, same bounds, agreeing operations."""
    try:
        emb = [sup.index(k) for k in sub.keys]
    except ValueError:
        return False
    if emb[sub.bottom] != sup.bottom or emb[sub.top] != sup.top:
        return False
    for i in range(sub.n):
        for j in range(sub.n):
            if emb[sub.join[i][j]] != sup.join[emb[i]][emb[j]]:
                return False
            if emb[sub.meet[i][j]] != sup.meet[emb[i]][emb[j]]:
                return False
    return True


@dataclass(frozen=True)
class Congruence:
    """A partition of a view's nodes compatible with both operations."""

    view_name: str
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, i: int) -> tuple[int, ...]:
        for c in self.classes:
            if i in c:
                return c
        raise PreconditionError(f"node {i} outside the partition")


def kernel_partition(view: LatticeView, images: Sequence[Hashable]) -> Congruence:
    """Partition of nodes by equal image under a map."""
    if len(images) != view.n:
        raise PreconditionError("one image per node required")
    groups: dict[Hashable, list[int]] = {}
    for i, img in enumerate(images):
        groups.setdefault(img, []).append(i)
    classes = tuple(sorted((tuple(sorted(g)) for g in groups.values())))
    return Congruence(view.name, classes)


def is_congruence(view: LatticeView, cong: Congruence) -> bool:
    """Whether joins and meets of related pairs stay related."""
    cls = {}
    for idx, c in enumerate(cong.classes):
        for i in c:
            cls[i] = idx
    if sorted(cls) != list(range(view.n)):
        return False
    for c in cong.classes:
        rep = c[0]
        for i in c:
            for j in range(view.n):
                if cls[view.join[i][j]] != cls[view.join[rep][j]]:
                    return False
                if cls[view.meet[i][j]] != cls[view.meet[rep][j]]:
                    return False
    return True


def quotient_view(view: LatticeView, cong: Congruence) -> LatticeView:
    """The quotient lattice; fails if the partition is not a congruence."""
    if not is_congruence(view, cong):
        raise InternalCheckError(f"{view.name}: partition is not a congruence")
    cls = {}
    for idx, c in enumerate(cong.classes):
        for i in c:
            cls[i] = idx
    keys = tuple(tuple(view.keys[i] for i in c) for c in cong.classes)
    pos = {k: idx for idx, k in enumerate(keys)}

    def jn(a, b):
        i, j = cong.classes[pos[a]][0], cong.classes[pos[b]][0]
        return keys[cls[view.join[i][j]]]

    def mt(a, b):
        i, j = cong.classes[pos[a]][0], cong.classes[pos[b]][0]
        return keys[cls[view.meet[i][j]]]

    return build_view(view.name + "/~", keys, jn, mt)
