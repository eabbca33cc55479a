"""Naive reference computations used to freeze expected test values.

Direct transcriptions of the definitions as subset scans over frozensets
of element indices.  Deliberately independent of the package under test:
nothing here imports reslat.  Exponential in places; only run on the
small bundled algebras.
"""

from __future__ import annotations

from itertools import permutations


def make(names, join, meet, prod, impl, bottom, top):
    """Bundle index tables as a dict the other helpers consume."""
    pos = {v: i for i, v in enumerate(names)}
    conv = lambda m: tuple(tuple(pos[v] for v in row) for row in m)
    return {
        "n": len(names),
        "names": tuple(names),
        "join": conv(join),
        "meet": conv(meet),
        "prod": conv(prod),
        "impl": conv(impl),
        "bottom": pos[bottom],
        "top": pos[top],
    }


def leq(t, x, y):
    return t["meet"][x][y] == x


def all_subsets(t):
    n = t["n"]
    for m in range(1 << n):
        yield frozenset(i for i in range(n) if m >> i & 1)


def names_of(t, s):
    return "{" + ", ".join(t["names"][x] for x in sorted(s)) + "}"


# -- filters ---------------------------------------------------------------

def is_filter(t, s):
    if not s:
        return False
    for x in s:
        for y in s:
            if t["prod"][x][y] not in s:
                return False
        for y in range(t["n"]):
            if t["join"][x][y] not in s:
                return False
    return True


def filters(t):
    return sorted((s for s in all_subsets(t) if is_filter(t, s)),
                  key=lambda s: (len(s), sorted(s)))


def generated(t, xs):
    """Least filter containing xs: intersection of all filters above it."""
    acc = frozenset(range(t["n"]))
    for f in filters(t):
        if set(xs) <= f:
            acc &= f
    return acc


def proper_filters(t):
    full = frozenset(range(t["n"]))
    return [f for f in filters(t) if f != full]


def is_prime(t, f):
    if not is_filter(t, f) or len(f) == t["n"]:
        return False
    for x in range(t["n"]):
        for y in range(t["n"]):
            if t["join"][x][y] in f and x not in f and y not in f:
                return False
    return True


def primes(t):
    return [f for f in filters(t) if is_prime(t, f)]


def maximal_filters(t):
    props = proper_filters(t)
    return [f for f in props if not any(f < g for g in props)]


def minimal_primes(t):
    ps = primes(t)
    return [p for p in ps if not any(q < p for q in ps)]


def minimal_primes_over(t, xs):
    ps = [p for p in primes(t) if set(xs) <= p]
    return [p for p in ps if not any(q < p for q in ps)]


# -- coannihilators --------------------------------------------------------

def perp(t, xs):
    top = t["top"]
    return frozenset(a for a in range(t["n"])
                     if all(t["join"][a][x] == top for x in xs))


def dense_elements(t):
    return frozenset(x for x in range(t["n"]) if perp(t, {x}) == {t["top"]})


def nilpotents(t):
    out = set()
    for x in range(t["n"]):
        acc = t["top"]
        for _ in range(t["n"] + 1):
            acc = t["prod"][acc][x]
            if acc == t["bottom"]:
                out.add(x)
                break
    return frozenset(out)


def boolean_center(t):
    out = set()
    for e in range(t["n"]):
        for f in range(t["n"]):
            if t["meet"][e][f] == t["bottom"] and t["join"][e][f] == t["top"]:
                out.add(e)
                break
    return frozenset(out)


def coannulet_family(t):
    return sorted({perp(t, {x}) for x in range(t["n"])},
                  key=lambda s: (len(s), sorted(s)))


def coannihilator_family(t):
    return sorted({perp(t, s) for s in all_subsets(t)},
                  key=lambda s: (len(s), sorted(s)))


# -- lattice ideals and their filters --------------------------------------

def is_ideal(t, s):
    if not s:
        return False
    for x in s:
        for y in range(t["n"]):
            if leq(t, y, x) and y not in s:
                return False
        for y in s:
            if t["join"][x][y] not in s:
                return False
    return True


def ideals(t):
    return sorted((s for s in all_subsets(t) if is_ideal(t, s)),
                  key=lambda s: (len(s), sorted(s)))


def omega(t, ideal):
    top = t["top"]
    return frozenset(a for a in range(t["n"])
                     if any(t["join"][a][x] == top for x in ideal))


def omega_family(t):
    return sorted({omega(t, i) for i in ideals(t)},
                  key=lambda s: (len(s), sorted(s)))


# -- alpha filters ---------------------------------------------------------

def is_alpha(t, f):
    if not is_filter(t, f):
        return False
    return all(perp(t, perp(t, {x})) <= f for x in f)


def alpha_filters(t):
    return [f for f in filters(t) if is_alpha(t, f)]


def alpha_closure(t, xs):
    acc = frozenset(range(t["n"]))
    for f in alpha_filters(t):
        if set(xs) <= f:
            acc &= f
    return acc


# -- model search oracles --------------------------------------------------

def _lattice_ok(rel, n):
    """rel is a frozenset of (x, y) pairs meaning x <= y over 0..n-1."""
    pairs = set(rel)
    for x in range(n):
        if (x, x) not in pairs:
            return False
    for (a, b) in rel:
        for (c, d) in rel:
            if b == c and (a, d) not in pairs:
                return False
        if a != b and (b, a) in pairs:
            return False
    # bounds
    if any((0, x) not in pairs for x in range(n)):
        return False
    if any((x, n - 1) not in pairs for x in range(n)):
        return False
    # unique lub and glb for every pair
    for x in range(n):
        for y in range(n):
            ub = [z for z in range(n) if (x, z) in pairs and (y, z) in pairs]
            least = [z for z in ub if all((z, w) in pairs for w in ub)]
            if len(least) != 1:
                return False
            lb = [z for z in range(n) if (z, x) in pairs and (z, y) in pairs]
            greatest = [z for z in lb if all((w, z) in pairs for w in lb)]
            if len(greatest) != 1:
                return False
    return True


def bounded_lattices(n):
    """All bounded lattices on 0..n-1 up to isomorphism, full relation scan.

    Element 0 is bottom and n-1 is top; the middle n-2 elements carry an
    arbitrary relation, scanned over all 2^((n-2)(n-3)) directed choices
    with no generation-order assumptions.  Feasible for n <= 5.
    """
    mids = list(range(1, n - 1))
    free = [(x, y) for x in mids for y in mids if x != y]
    base = {(x, x) for x in range(n)}
    base |= {(0, x) for x in range(n)}
    base |= {(x, n - 1) for x in range(n)}
    found = {}
    for m in range(1 << len(free)):
        rel = frozenset(base | {free[i] for i in range(len(free)) if m >> i & 1})
        if not _lattice_ok(rel, n):
            continue
        key = canonical_order_key(rel, n)
        if key not in found:
            found[key] = rel
    return [found[k] for k in sorted(found)]


def canonical_order_key(rel, n):
    """Lex-least adjacency encoding over permutations fixing bottom and top."""
    mids = list(range(1, n - 1))
    best = None
    for pm in permutations(mids):
        m = {0: 0, n - 1: n - 1}
        m.update({mids[i]: pm[i] for i in range(len(mids))})
        enc = tuple(sorted((m[a], m[b]) for (a, b) in rel))
        if best is None or enc < best:
            best = enc
    return best


def rel_to_tables(rel, n):
    """join/meet index tables from an order relation."""
    pairs = set(rel)
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            ub = [z for z in range(n) if (x, z) in pairs and (y, z) in pairs]
            join[x][y] = next(z for z in ub if all((z, w) in pairs for w in ub))
            lb = [z for z in range(n) if (z, x) in pairs and (z, y) in pairs]
            meet[x][y] = next(z for z in lb if all((w, z) in pairs for w in lb))
    return tuple(map(tuple, join)), tuple(map(tuple, meet))


def residuated_products(join, meet, n, bounded=True):
    """All commutative monoid tables on the given lattice admitting residuals.

    Fills every unordered pair of non-top elements; with bounded=False the
    candidate values range over the whole carrier (full scan, n <= 4), with
    bounded=True over the meet's down-set (any valid table has
    prod(x, y) <= meet(x, y), so the prune drops only invalid candidates).
    Returns full prod tables.
    """
    top = n - 1
    le = lambda x, y: meet[x][y] == x
    cells = [(x, y) for x in range(n) for y in range(x, n) if x != top and y != top]
    choices = []
    for (x, y) in cells:
        if bounded:
            choices.append([v for v in range(n) if le(v, meet[x][y])])
        else:
            choices.append(list(range(n)))
    out = []

    def assemble(vals):
        prod = [[None] * n for _ in range(n)]
        for i in range(n):
            prod[i][top] = i
            prod[top][i] = i
        for (c, v) in zip(cells, vals):
            prod[c[0]][c[1]] = v
            prod[c[1]][c[0]] = v
        return prod

    def residual(prod, y, z):
        cand = [x for x in range(n) if le(prod[x][y], z)]
        best = [x for x in cand if all(le(w, x) for w in cand)]
        return best[0] if len(best) == 1 else None

    def ok(prod):
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if prod[prod[x][y]][z] != prod[x][prod[y][z]]:
                        return False
        impl = [[None] * n for _ in range(n)]
        for y in range(n):
            for z in range(n):
                r = residual(prod, y, z)
                if r is None:
                    return False
                impl[y][z] = r
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if le(prod[x][y], z) != le(x, impl[y][z]):
                        return False
        return True

    def rec(i, vals):
        if i == len(cells):
            prod = assemble(vals)
            if ok(prod):
                out.append(tuple(map(tuple, prod)))
            return
        for v in choices[i]:
            rec(i + 1, vals + [v])

    rec(0, [])
    return out


def automorphisms(join, meet, n):
    perms = []
    for p in permutations(range(n)):
        if all(p[join[x][y]] == join[p[x]][p[y]] and p[meet[x][y]] == meet[p[x]][p[y]]
               for x in range(n) for y in range(n)):
            perms.append(p)
    return perms


def relabel_table(prod, p, n):
    """Table of the relabeled algebra: prod'[p(x)][p(y)] = p(prod[x][y])."""
    inv = [0] * n
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(tuple(p[prod[inv[i]][inv[j]]] for j in range(n)) for i in range(n))


def count_up_to_iso(join, meet, prods, n):
    auts = automorphisms(join, meet, n)
    seen = set()
    for prod in prods:
        seen.add(min(relabel_table(prod, p, n) for p in auts))
    return len(seen)
