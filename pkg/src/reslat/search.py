"""Exhaustive model search over small carriers.

Enumerates bounded lattices up to isomorphism, then every residuated
product each one admits, again up to isomorphism.  Two fill strategies
are kept deliberately distinct so their results can be compared: the
pruned walk cuts candidates with order facts every valid table obeys
(a product never exceeds the meet, and is monotone in both arguments),
while the direct walk tries every value and filters at the end.  Both
must land on identical algebras; the stats record how much work each
spent.  A predicate language over the classification verdicts turns the
walk into a counterexample miner.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .algebra import InvalidAlgebraError, ResiduatedLattice, validate
from .classify import classification
from .errors import InternalCheckError, PreconditionError

MAX_CARRIER = 7
STRATEGIES = ("pruned", "direct")

_MIDDLE_NAMES = "abcde"


@dataclass(frozen=True)
class LatticeSkeleton:
    """A bounded lattice on 0..n-1 in canonical form, bottom 0, top n-1."""

    n: int
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]

    def leq(self, x: int, y: int) -> bool:
        return self.meet[x][y] == x


@dataclass(frozen=True)
class SearchStats:
    """Work counters for one enumeration run.

    examined counts complete tables handed to the validity check, pruned
    counts candidate values rejected mid-fill, found counts valid tables
    before the isomorphism pass, and found == emitted + iso_rejected.
    """

    examined: int
    pruned: int
    found: int
    emitted: int
    iso_rejected: int

    def __add__(self, other: "SearchStats") -> "SearchStats":
        return SearchStats(
            self.examined + other.examined,
            self.pruned + other.pruned,
            self.found + other.found,
            self.emitted + other.emitted,
            self.iso_rejected + other.iso_rejected,
        )


ZERO_STATS = SearchStats(0, 0, 0, 0, 0)


def _check_carrier(n: int) -> None:
    if not 1 <= n <= MAX_CARRIER:
        raise PreconditionError(
            f"carrier size must be between 1 and {MAX_CARRIER}, got {n}")


def names_for(n: int) -> tuple[str, ...]:
    """Canonical element names: bottom 0, top 1, letters between."""
    _check_carrier(n)
    if n == 1:
        return ("1",)
    return ("0",) + tuple(_MIDDLE_NAMES[: n - 2]) + ("1",)


# -- bounded lattices up to isomorphism ------------------------------------

def _tables_from_cover(n: int, up: list[int], down: list[int]):
    """join/meet tables from up-set masks, or None when not a lattice."""
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            ub = up[x] & up[y]
            z = next((z for z in range(n) if ub >> z & 1 and ub & ~up[z] == 0),
                     None)
            if z is None:
                return None
            join[x][y] = z
            lb = down[x] & down[y]
            w = next((w for w in range(n) if lb >> w & 1 and lb & ~down[w] == 0),
                     None)
            if w is None:
                return None
            meet[x][y] = w
    return tuple(map(tuple, join)), tuple(map(tuple, meet))


def _relabel_tables(tables, perm, n: int):
    """Tables of the relabeled structure under old-to-new map perm."""
    out = []
    for t in tables:
        new = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                new[perm[x]][perm[y]] = perm[t[x][y]]
        out.append(tuple(map(tuple, new)))
    return tuple(out)


def _middle_perms(n: int):
    """Carrier permutations fixing bottom and top (all a lattice
    isomorphism can do)."""
    for pm in permutations(range(1, n - 1)):
        perm = [0] * n
        perm[n - 1] = n - 1
        for i, v in enumerate(pm):
            perm[1 + i] = v
        yield tuple(perm)


@lru_cache(maxsize=None)
def enumerate_lattices(n: int) -> tuple[LatticeSkeleton, ...]:
    """Every bounded lattice on n elements up to isomorphism, in a
    deterministic canonical order."""
    _check_carrier(n)
    if n == 1:
        return (LatticeSkeleton(1, ((0,),), ((0,),)),)
    mids = range(1, n - 1)
    pairs = [(x, y) for x in mids for y in mids if x < y]
    found: dict[tuple, tuple] = {}
    for choice in product(range(3), repeat=len(pairs)):
        up = [0] * n
        down = [0] * n
        up[0] = (1 << n) - 1
        down[n - 1] = (1 << n) - 1
        for x in mids:
            up[x] = 1 << x | 1 << (n - 1)
            down[x] = 1 << x | 1
        up[n - 1] = 1 << (n - 1)
        down[0] = 1
        for (x, y), c in zip(pairs, choice):
            if c == 1:
                up[x] |= 1 << y
                down[y] |= 1 << x
            elif c == 2:
                up[y] |= 1 << x
                down[x] |= 1 << y
        transitive = all(
            up[y] & ~up[x] == 0
            for x in mids for y in mids if x != y and up[x] >> y & 1)
        if not transitive:
            continue
        tables = _tables_from_cover(n, up, down)
        if tables is None:
            continue
        best = min(_relabel_tables(tables, p, n) for p in _middle_perms(n))
        found.setdefault(best, best)
    return tuple(LatticeSkeleton(n, jn, mt)
                 for jn, mt in (found[k] for k in sorted(found)))


@lru_cache(maxsize=None)
def skeleton_automorphisms(skel: LatticeSkeleton) -> tuple[tuple[int, ...], ...]:
    n = skel.n
    if n == 1:
        return ((0,),)
    out = []
    for p in _middle_perms(n):
        if _relabel_tables((skel.join, skel.meet), p, n) == (skel.join, skel.meet):
            out.append(p)
    return tuple(out)


# -- residuated products on a skeleton -------------------------------------

def _cells(n: int) -> tuple[tuple[int, int], ...]:
    """Unordered argument pairs left free once the unit row is fixed."""
    return tuple((x, y) for x in range(n - 1) for y in range(x, n - 1))


def _down_masks(skel: LatticeSkeleton) -> tuple[int, ...]:
    n = skel.n
    return tuple(
        sum(1 << v for v in range(n) if skel.leq(v, x)) for x in range(n))


def _assemble(n: int, cells, vals) -> list[list[int]]:
    prod_t = [[0] * n for _ in range(n)]
    top = n - 1
    for i in range(n):
        prod_t[i][top] = i
        prod_t[top][i] = i
    for (x, y), v in zip(cells, vals):
        prod_t[x][y] = v
        prod_t[y][x] = v
    return prod_t


def _residual_table(skel: LatticeSkeleton, prod_t):
    """The implication table, or None when some residual is missing."""
    n = skel.n
    down = _down_masks(skel)
    impl_t = [[0] * n for _ in range(n)]
    for y in range(n):
        for z in range(n):
            cand = 0
            for x in range(n):
                if skel.leq(prod_t[x][y], z):
                    cand |= 1 << x
            best = next((x for x in range(n)
                         if cand >> x & 1 and cand & ~down[x] == 0), None)
            if best is None:
                return None
            impl_t[y][z] = best
    return tuple(map(tuple, impl_t))


def _table_ok(skel: LatticeSkeleton, prod_t) -> bool:
    n = skel.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if prod_t[prod_t[x][y]][z] != prod_t[x][prod_t[y][z]]:
                    return False
    impl_t = _residual_table(skel, prod_t)
    if impl_t is None:
        return False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if skel.leq(prod_t[x][y], z) != skel.leq(x, impl_t[y][z]):
                    return False
    return True


def _candidates(skel: LatticeSkeleton, cells, strategy: str):
    """Per-cell candidate values, widest first so both strategies walk
    values in the same order they share."""
    n = skel.n
    down = _down_masks(skel)
    out = []
    for (x, y) in cells:
        if strategy == "pruned":
            bound = down[skel.meet[x][y]]
            out.append(tuple(v for v in range(n) if bound >> v & 1))
        else:
            out.append(tuple(range(n)))
    return out


def _monotone_clash(skel: LatticeSkeleton, cells, vals, idx: int, v: int) -> bool:
    """Does assigning v at cells[idx] contradict monotonicity against
    earlier cells?  Commutativity makes either pairing count."""
    x, y = cells[idx]
    for j in range(idx):
        a, b = cells[j]
        w = vals[j]
        if (skel.leq(a, x) and skel.leq(b, y)) or \
                (skel.leq(a, y) and skel.leq(b, x)):
            if not skel.leq(w, v):
                return True
        if (skel.leq(x, a) and skel.leq(y, b)) or \
                (skel.leq(x, b) and skel.leq(y, a)):
            if not skel.leq(v, w):
                return True
    return False


def _walk(skel, cells, cand, vals, start, stop_depth, strategy, out_tables):
    """Depth-first fill from cell ``start`` down to ``stop_depth``; at
    that depth the assignment is recorded (full tables get validated
    first).  Returns (examined, pruned)."""
    n = skel.n
    examined = 0
    pruned = 0
    full = stop_depth == len(cells)

    def rec(i):
        nonlocal examined, pruned
        if i == stop_depth:
            if full:
                examined += 1
                prod_t = _assemble(n, cells, vals)
                if _table_ok(skel, prod_t):
                    out_tables.append(tuple(map(tuple, prod_t)))
            else:
                out_tables.append(tuple(vals))
            return
        for v in cand[i]:
            if strategy == "pruned" and _monotone_clash(skel, cells, vals, i, v):
                pruned += 1
                continue
            vals.append(v)
            rec(i + 1)
            vals.pop()

    rec(start)
    return examined, pruned


def _complete_prefix(args):
    """Worker task: finish every table extending the given prefixes."""
    n, join, meet, strategy, prefixes = args
    skel = LatticeSkeleton(n, join, meet)
    cells = _cells(n)
    cand = _candidates(skel, cells, strategy)
    tables = []
    examined = 0
    pruned = 0
    for prefix in prefixes:
        ex, pr = _walk(skel, cells, cand, list(prefix), len(prefix),
                       len(cells), strategy, tables)
        examined += ex
        pruned += pr
    return examined, pruned, tables


def _canonical_product(skel: LatticeSkeleton, prod_t):
    """Least relabeling of the table under the skeleton automorphisms."""
    n = skel.n
    best = None
    for p in skeleton_automorphisms(skel):
        new = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                new[p[x]][p[y]] = p[prod_t[x][y]]
        t = tuple(map(tuple, new))
        if best is None or t < best:
            best = t
    return best


def _build_algebra(skel: LatticeSkeleton, prod_t) -> ResiduatedLattice:
    impl_t = _residual_table(skel, prod_t)
    if impl_t is None:
        raise InternalCheckError("emitted table lost its residuals")
    try:
        return validate(names_for(skel.n), skel.join, skel.meet,
                        prod_t, impl_t, 0, skel.n - 1)
    except InvalidAlgebraError as exc:
        raise InternalCheckError(
            f"enumeration emitted an invalid table: {exc}") from exc


def enumerate_residuated(skel: LatticeSkeleton, jobs: int = 1,
                         strategy: str = "pruned",
                         ) -> tuple[tuple[ResiduatedLattice, ...], SearchStats]:
    """All residuated products on the skeleton up to isomorphism.

    The result and every stats field are independent of ``jobs``; the
    found/emitted/iso_rejected counts are also independent of the
    strategy.
    """
    if strategy not in STRATEGIES:
        raise PreconditionError(f"unknown strategy: {strategy!r}")
    if jobs < 1:
        raise PreconditionError("jobs must be at least 1")
    n = skel.n
    cells = _cells(n)
    cand = _candidates(skel, cells, strategy)
    tables: list = []
    if jobs == 1 or len(cells) < 2:
        examined, pruned = _walk(skel, cells, cand, [], 0, len(cells),
                                 strategy, tables)
    else:
        split = min(2, len(cells))
        prefixes: list = []
        _, pruned_prefix = _walk(skel, cells, cand, [], 0, split,
                                 strategy, prefixes)
        chunks = [prefixes[i::jobs] for i in range(jobs)]
        examined = 0
        pruned = pruned_prefix
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                _complete_prefix,
                [(n, skel.join, skel.meet, strategy, chunk)
                 for chunk in chunks if chunk])
            for ex, pr, part in parts:
                examined += ex
                pruned += pr
                tables.extend(part)
    tables.sort()
    found = len(tables)
    groups: dict = {}
    for t in tables:
        groups.setdefault(_canonical_product(skel, t), None)
    emitted = sorted(groups)
    stats = SearchStats(examined, pruned, found, len(emitted),
                        found - len(emitted))
    if stats.found != stats.emitted + stats.iso_rejected:
        raise InternalCheckError("search stats fail to balance")
    algebras = tuple(_build_algebra(skel, t) for t in emitted)
    return algebras, stats


# -- predicate language over the classification ----------------------------

ATOMS = {
    "quasicomplemented": lambda r: r.quasicomplemented,
    "disjunctive": lambda r: r.disjunctive,
    "weakly_disjunctive": lambda r: r.weakly_disjunctive,
    "lattice_boolean": lambda r: r.lattice_boolean,
    "filter_lattice_boolean": lambda r: r.filter_lattice_boolean,
    "true": lambda r: True,
    "false": lambda r: False,
}

_TOKEN = re.compile(r"\s*([()]|[a-z_]+)")


def _tokenize(src: str) -> list[str]:
    out = []
    src = src.strip()
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise PreconditionError(
                f"bad character in predicate at position {pos}: {src[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_predicate(src: str):
    """Compile ``not/and/or`` formulas over the classification atoms.

    Returns a callable taking a ClassificationResult.  Grammar, loosest
    first: expr = term {"or" term}; term = factor {"and" factor};
    factor = "not" factor | "(" expr ")" | atom.
    """
    tokens = _tokenize(src)
    if not tokens:
        raise PreconditionError("empty predicate")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        left = term()
        while peek() == "or":
            take()
            right = term()
            left = (lambda a, b: lambda r: a(r) or b(r))(left, right)
        return left

    def term():
        left = factor()
        while peek() == "and":
            take()
            right = factor()
            left = (lambda a, b: lambda r: a(r) and b(r))(left, right)
        return left

    def factor():
        tok = take()
        if tok == "not":
            inner = factor()
            return lambda r: not inner(r)
        if tok == "(":
            inner = expr()
            if take() != ")":
                raise PreconditionError("unbalanced parenthesis in predicate")
            return inner
        if tok in ATOMS:
            return ATOMS[tok]
        if tok is None:
            raise PreconditionError("predicate ends mid-expression")
        raise PreconditionError(
            f"unknown predicate atom {tok!r}; expected one of "
            + ", ".join(sorted(ATOMS)))

    compiled = expr()
    if pos != len(tokens):
        raise PreconditionError(
            f"trailing tokens in predicate: {' '.join(tokens[pos:])!r}")
    return compiled


@dataclass(frozen=True)
class MineResult:
    """Matching algebras plus the work done finding them."""

    matches: tuple[ResiduatedLattice, ...]
    lattices: int
    stats: SearchStats


def mine(predicate: str, n_max: int, jobs: int = 1,
         strategy: str = "pruned", n_min: int = 1) -> MineResult:
    """Search every algebra on n_min..n_max elements for the predicate."""
    _check_carrier(n_max)
    if not 1 <= n_min <= n_max:
        raise PreconditionError("carrier range is empty")
    pred = parse_predicate(predicate)
    matches = []
    lattices = 0
    total = ZERO_STATS
    for n in range(n_min, n_max + 1):
        for skel in enumerate_lattices(n):
            lattices += 1
            algebras, stats = enumerate_residuated(skel, jobs, strategy)
            total = total + stats
            for alg in algebras:
                if pred(classification(alg)):
                    matches.append(alg)
    return MineResult(tuple(matches), lattices, total)


# -- presentation-independent identity -------------------------------------

def canonical_form(alg: ResiduatedLattice) -> tuple:
    """A label-free fingerprint: two algebras get the same form exactly
    when some relabeling carries one onto the other."""
    n = alg.n
    best = None
    for p in permutations(range(n)):
        leq_bits = []
        prod_flat = []
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v] = i
        for x in range(n):
            for y in range(n):
                leq_bits.append(1 if alg.leq(inv[x], inv[y]) else 0)
                prod_flat.append(p[alg.prod[inv[x]][inv[y]]])
        enc = (n, tuple(leq_bits), tuple(prod_flat))
        if best is None or enc < best:
            best = enc
    return best
