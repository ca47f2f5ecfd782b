"""Finite right acts over a finite monoid and the constructions built from them.

A left act over ``M`` is stored as a right act over ``opposite(M)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    EmptySeeds,
    IndexOutOfRange,
    MixedMonoids,
    NotAMorphism,
    NotARightIdeal,
    NotASubact,
    NotCompatible,
    NotInjective,
    NotUnital,
    SizeCapExceeded,
)
from .monoid import FiniteMonoid
from .unionfind import UnionFind

PRODUCT_CAP = 10**6
SUBACT_CAP = 20
CONGRUENCE_CAP = 6
HOM_CAP = 10**7
ENUM_ACT_CAP = 3**12


@dataclass(frozen=True)
class FiniteAct:
    monoid: FiniteMonoid
    action: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(str(x) for x in range(len(self.action))))

    @property
    def size(self) -> int:
        return len(self.action)

    def act(self, x: int, s: int) -> int:
        return self.action[x][s]

    def __len__(self):
        return len(self.action)

    def __repr__(self):
        return f"FiniteAct(size={self.size}, action={[list(r) for r in self.action]})"


@dataclass(frozen=True)
class ActMorphism:
    source: FiniteAct
    target: FiniteAct
    map: tuple[int, ...]

    def __call__(self, x):
        return self.map[x]

    def is_injective(self):
        return len(set(self.map)) == len(self.map)

    def compose(self, first: "ActMorphism") -> "ActMorphism":
        """self after first."""
        return ActMorphism(first.source, self.target, tuple(self.map[y] for y in first.map))


@dataclass(frozen=True)
class RightCongruence:
    act: FiniteAct
    block_of: tuple[int, ...]

    @property
    def count(self):
        return max(self.block_of) + 1

    @property
    def blocks(self) -> list[list[int]]:
        out = [[] for _ in range(self.count)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return out

    def related(self, x, y):
        return self.block_of[x] == self.block_of[y]


def _same_monoid(a: FiniteMonoid, b: FiniteMonoid):
    if a.table != b.table:
        raise MixedMonoids("acts are over different monoids")


def compatibility_failure(m: FiniteMonoid, action) -> tuple[int, int, int] | None:
    n = m.order
    for x, row in enumerate(action):
        for s in range(n):
            xs = action[row[s]]
            st_row = m.table[s]
            for t in range(n):
                if xs[t] != row[st_row[t]]:
                    return (x, s, t)
    return None


def validate_act(m: FiniteMonoid, raw_action, names=None) -> FiniteAct:
    size = len(raw_action)
    if size < 1:
        raise IndexOutOfRange("acts are nonempty")
    action = []
    for row in raw_action:
        if len(row) != m.order:
            raise IndexOutOfRange(f"action row of length {len(row)} over an order-{m.order} monoid")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < size:
                raise IndexOutOfRange(f"action entry {v!r} outside 0..{size - 1}")
        action.append(tuple(row))
    for x, row in enumerate(action):
        if row[0] != x:
            raise NotUnital(x)
    bad = compatibility_failure(m, action)
    if bad is not None:
        raise NotCompatible(*bad)
    if names is not None:
        names = tuple(str(v) for v in names)
        if len(names) != size:
            raise IndexOutOfRange("one name per element required")
    return FiniteAct(m, tuple(action), names or ())


def validate_morphism(f: ActMorphism):
    a, b = f.source, f.target
    if len(f.map) != a.size or any(not 0 <= y < b.size for y in f.map):
        raise NotAMorphism("map has the wrong shape")
    for x in range(a.size):
        for s in range(a.monoid.order):
            if f.map[a.action[x][s]] != b.action[f.map[x]][s]:
                raise NotAMorphism(f"f({x}*{s}) != f({x})*{s}")
    return f


def regular_act(m: FiniteMonoid) -> FiniteAct:
    return FiniteAct(m, m.table, m.names)


def zero_act(m: FiniteMonoid) -> FiniteAct:
    return FiniteAct(m, ((0,) * m.order,), ("θ",))


def zeros_of_act(a: FiniteAct) -> tuple[int, ...]:
    return tuple(x for x, row in enumerate(a.action) if all(v == x for v in row))


def identity_morphism(a: FiniteAct) -> ActMorphism:
    return ActMorphism(a, a, tuple(range(a.size)))


def _check_cap(size, cap, what):
    if size > cap:
        raise SizeCapExceeded(f"{what} would have {size} elements (cap {cap})")


def product_act(factors: Sequence[FiniteAct], cap: int = PRODUCT_CAP) -> FiniteAct:
    """Cartesian product, row-major (first coordinate most significant)."""
    factors = list(factors)
    if not factors:
        raise EmptySeeds("product needs at least one factor")
    m = factors[0].monoid
    for f in factors[1:]:
        _same_monoid(m, f.monoid)
    size = 1
    for f in factors:
        size *= f.size
    _check_cap(size, cap, "product")
    tuples = list(itertools.product(*(range(f.size) for f in factors)))
    weights = []
    w = 1
    for f in reversed(factors):
        weights.append(w)
        w *= f.size
    weights.reverse()
    action = []
    for tup in tuples:
        action.append(tuple(
            sum(f.action[c][s] * wt for f, c, wt in zip(factors, tup, weights))
            for s in range(m.order)
        ))
    names = tuple("(" + ",".join(f.names[c] for f, c in zip(factors, tup)) + ")" for tup in tuples)
    return FiniteAct(m, tuple(action), names)


def product_projections(factors: Sequence[FiniteAct], product: FiniteAct | None = None) -> list[ActMorphism]:
    factors = list(factors)
    product = product or product_act(factors)
    coords = list(itertools.product(*(range(f.size) for f in factors)))
    return [ActMorphism(product, f, tuple(c[i] for c in coords)) for i, f in enumerate(factors)]


def coproduct_act(parts: Sequence[FiniteAct]) -> FiniteAct:
    parts = list(parts)
    if not parts:
        raise EmptySeeds("coproduct needs at least one part")
    m = parts[0].monoid
    for p in parts[1:]:
        _same_monoid(m, p.monoid)
    action, names = [], []
    offset = 0
    for i, p in enumerate(parts):
        for x, row in enumerate(p.action):
            action.append(tuple(v + offset for v in row))
            names.append(f"{p.names[x]}@{i + 1}")
        offset += p.size
    return FiniteAct(m, tuple(action), tuple(names))


def coproduct_injections(parts: Sequence[FiniteAct], coproduct: FiniteAct | None = None) -> list[ActMorphism]:
    parts = list(parts)
    coproduct = coproduct or coproduct_act(parts)
    out, offset = [], 0
    for p in parts:
        out.append(ActMorphism(p, coproduct, tuple(range(offset, offset + p.size))))
        offset += p.size
    return out


def closure(a: FiniteAct, seeds) -> frozenset[int]:
    """Smallest action-closed subset containing the seeds."""
    seeds = list(seeds)
    if not seeds:
        raise EmptySeeds("subact needs at least one generator")
    return frozenset(v for x in seeds for v in a.action[x])


def restrict(a: FiniteAct, subset) -> tuple[FiniteAct, ActMorphism]:
    """The act carried by an action-closed subset, with its inclusion."""
    elems = sorted(subset)
    index = {x: i for i, x in enumerate(elems)}
    try:
        action = tuple(tuple(index[v] for v in a.action[x]) for x in elems)
    except KeyError:
        raise NotASubact("subset is not closed under the action") from None
    sub = FiniteAct(a.monoid, action, tuple(a.names[x] for x in elems))
    return sub, ActMorphism(sub, a, tuple(elems))


def subact_generated(a: FiniteAct, seeds) -> tuple[FiniteAct, ActMorphism]:
    return restrict(a, closure(a, seeds))


def is_closed(a: FiniteAct, subset) -> bool:
    return all(v in subset for x in subset for v in a.action[x])


def enumerate_subacts(a: FiniteAct, cap: int = SUBACT_CAP) -> Iterator[frozenset[int]]:
    """All nonempty action-closed subsets, sorted by their sorted element tuples."""
    _check_cap(a.size, cap, "subact enumeration over an act")
    principal = [closure(a, [x]) for x in range(a.size)]
    found = set()
    frontier = set(principal)
    while frontier:
        found |= frontier
        frontier = {s | p for s in frontier for p in principal} - found
    yield from sorted(found, key=lambda s: sorted(s))


def congruence_closure(a: FiniteAct, pairs) -> RightCongruence:
    """Least right congruence containing the given pairs (worklist over union-find)."""
    uf = UnionFind(a.size)
    work = []
    for u, v in pairs:
        if not (0 <= u < a.size and 0 <= v < a.size):
            raise IndexOutOfRange(f"pair ({u}, {v}) out of range")
        work.append((u, v))
    n = a.monoid.order
    while work:
        u, v = work.pop()
        if uf.union(u, v):
            ru, rv = a.action[u], a.action[v]
            for s in range(1, n):
                work.append((ru[s], rv[s]))
    return RightCongruence(a, uf.labels())


def is_congruence(a: FiniteAct, block_of) -> bool:
    for x in range(a.size):
        for y in range(x + 1, a.size):
            if block_of[x] == block_of[y]:
                rx, ry = a.action[x], a.action[y]
                if any(block_of[rx[s]] != block_of[ry[s]] for s in range(a.monoid.order)):
                    return False
    return True


def _set_partitions(m):
    # restricted growth strings
    rgs = [0] * m

    def rec(i, top):
        if i == m:
            yield tuple(rgs)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    if m == 0:
        return
    yield from rec(1, 0)


def enumerate_right_congruences(a: FiniteAct, cap: int = CONGRUENCE_CAP) -> Iterator[RightCongruence]:
    _check_cap(a.size, cap, "congruence enumeration over an act")
    for blocks in _set_partitions(a.size):
        if is_congruence(a, blocks):
            yield RightCongruence(a, blocks)


def quotient_act(a: FiniteAct, rho: RightCongruence) -> tuple[FiniteAct, ActMorphism]:
    reps = {}
    for x, b in enumerate(rho.block_of):
        reps.setdefault(b, x)
    k = len(reps)
    action = tuple(tuple(rho.block_of[v] for v in a.action[reps[b]]) for b in range(k))
    names = tuple(f"[{a.names[reps[b]]}]" for b in range(k))
    q = FiniteAct(a.monoid, action, names)
    return q, ActMorphism(a, q, rho.block_of)


def rees_congruence(m: FiniteMonoid, ideal) -> RightCongruence:
    ideal = sorted(set(ideal))
    if not ideal:
        raise EmptySeeds("Rees quotient needs a nonempty right ideal")
    members = set(ideal)
    for x in ideal:
        for s in range(m.order):
            if m.table[x][s] not in members:
                raise NotARightIdeal(x, s)
    reg = regular_act(m)
    return congruence_closure(reg, [(ideal[0], y) for y in ideal[1:]])


def rees_quotient(m: FiniteMonoid, ideal) -> FiniteAct:
    return quotient_act(regular_act(m), rees_congruence(m, ideal))[0]


def cofree_act(m: FiniteMonoid, letters: int, cap: int = PRODUCT_CAP) -> FiniteAct:
    """Functions S -> {0..k-1} in lexicographic order, with (f s)(t) = f(st)."""
    if letters < 1:
        raise IndexOutOfRange("cofree act needs at least one letter")
    n = m.order
    _check_cap(letters**n, cap, "cofree act")
    funcs = list(itertools.product(range(letters), repeat=n))
    index = {f: i for i, f in enumerate(funcs)}
    action = tuple(
        tuple(index[tuple(f[m.table[s][t]] for t in range(n))] for s in range(n))
        for f in funcs
    )
    return FiniteAct(m, action, tuple("".join(map(str, f)) for f in funcs))


def _greedy_generators(a: FiniteAct):
    gens, covered = [], set()
    for x in range(a.size):
        if x not in covered:
            gens.append(x)
            covered |= closure(a, [x])
    return gens


def _propagate(a: FiniteAct, b: FiniteAct, f: list, start):
    """Force f on the closure of start; return False on a clash."""
    stack = list(start)
    n = a.monoid.order
    while stack:
        x = stack.pop()
        fx = f[x]
        ra, rb = a.action[x], b.action[fx]
        for s in range(1, n):
            y, want = ra[s], rb[s]
            if f[y] is None:
                f[y] = want
                stack.append(y)
            elif f[y] != want:
                return False
    return True


def _search_morphisms(a: FiniteAct, b: FiniteAct, partial: list):
    if not _propagate(a, b, partial, [x for x, v in enumerate(partial) if v is not None]):
        return
    try:
        x = partial.index(None)
    except ValueError:
        yield tuple(partial)
        return
    for y in range(b.size):
        trial = list(partial)
        trial[x] = y
        if _propagate(a, b, trial, [x]):
            yield from _search_morphisms(a, b, trial)


def homomorphisms(a: FiniteAct, b: FiniteAct, cap: int = HOM_CAP) -> Iterator[ActMorphism]:
    """All act morphisms a -> b, in lexicographic order of their maps."""
    _same_monoid(a.monoid, b.monoid)
    _check_cap(b.size ** len(_greedy_generators(a)), cap, "morphism search space")
    for m in _search_morphisms(a, b, [None] * a.size):
        yield ActMorphism(a, b, m)


def extensions(inclusion: ActMorphism, f: ActMorphism) -> Iterator[ActMorphism]:
    """Morphisms g: inclusion.target -> f.target with g after inclusion equal to f."""
    big, q = inclusion.target, f.target
    partial = [None] * big.size
    for x, y in enumerate(inclusion.map):
        partial[y] = f.map[x]
    for m in _search_morphisms(big, q, partial):
        yield ActMorphism(big, q, m)


def pushout(f1: ActMorphism, f2: ActMorphism) -> tuple[FiniteAct, ActMorphism, ActMorphism]:
    if f1.source.action != f2.source.action:
        raise MixedMonoids("pushout maps must share their source")
    _same_monoid(f1.target.monoid, f2.target.monoid)
    y1, y2 = f1.target, f2.target
    coprod = coproduct_act([y1, y2])
    i1, i2 = coproduct_injections([y1, y2], coprod)
    nu = congruence_closure(coprod, [(i1(f1(x)), i2(f2(x))) for x in range(f1.source.size)])
    q, proj = quotient_act(coprod, nu)
    return q, proj.compose(i1), proj.compose(i2)


def amalgamated_coproduct(f1: ActMorphism, f2: ActMorphism) -> tuple[FiniteAct, ActMorphism, ActMorphism]:
    if not (f1.is_injective() and f2.is_injective()):
        raise NotInjective("amalgamation needs injective maps")
    return pushout(f1, f2)


def act_canonical_form(a: FiniteAct) -> tuple[tuple[int, ...], ...]:
    """Least relabelled action table over all permutations of the carrier."""
    best = None
    for perm in itertools.permutations(range(a.size)):
        cand = [None] * a.size
        for x, row in enumerate(a.action):
            cand[perm[x]] = tuple(perm[v] for v in row)
        cand = tuple(cand)
        if best is None or cand < best:
            best = cand
    return best


def _search_actions(m: FiniteMonoid, size: int):
    n = m.order
    t = [[-1] * n for _ in range(size)]
    for x in range(size):
        t[x][0] = x
    cells = [(x, s) for x in range(size) for s in range(1, n)]
    tab = m.table

    def consistent():
        for x in range(size):
            row = t[x]
            for s in range(n):
                xs = row[s]
                if xs < 0:
                    continue
                rs = t[xs]
                st = tab[s]
                for u in range(n):
                    a, b = rs[u], row[st[u]]
                    if a >= 0 and b >= 0 and a != b:
                        return False
        return True

    def rec(c):
        if c == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        x, s = cells[c]
        for v in range(size):
            t[x][s] = v
            if consistent():
                yield from rec(c + 1)
        t[x][s] = -1

    yield from rec(0)


@lru_cache(maxsize=None)
def _acts(m: FiniteMonoid, size: int, up_to_iso: bool):
    tables = list(_search_actions(m, size))
    if up_to_iso:
        seen = {}
        for tb in tables:
            seen.setdefault(act_canonical_form(FiniteAct(m, tb)), None)
        tables = list(seen)
    return tuple(FiniteAct(m, tb) for tb in tables)


def enumerate_acts(m: FiniteMonoid, size: int, up_to_iso: bool = False, cap: int = ENUM_ACT_CAP) -> Iterator[FiniteAct]:
    """Every valid action table on ``size`` points, in lexicographic order."""
    if size < 1:
        raise IndexOutOfRange("acts are nonempty")
    _check_cap(size ** (size * (m.order - 1)), cap, "act search space")
    yield from _acts(m, size, up_to_iso)
