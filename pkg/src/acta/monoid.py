"""Finite monoids given by Cayley tables.

Elements are indices ``0..n-1`` and index 0 is always the identity.  The
product ``e_i * e_j`` is ``table[i][j]``.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    EmptySeeds,
    IndexOutOfRange,
    NoIdentityAtZero,
    NotAssociative,
    OrderTooLarge,
    ParamOutOfRange,
    UnknownFamily,
)

MAX_ENUMERATION_ORDER = 4
MAX_FLAGGED_ORDER = 5


@dataclass(frozen=True)
class FiniteMonoid:
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", default_names(len(self.table)))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return f"FiniteMonoid(order={self.order}, table={[list(r) for r in self.table]})"


def default_names(n):
    return ("1",) + tuple(f"x{i}" for i in range(1, n))


def _letters(k):
    out = []
    for i in range(k):
        if i < 26:
            out.append(string.ascii_lowercase[i])
        else:
            out.append(f"z{i}")
    return tuple(out)


def associativity_failure(table) -> tuple[int, int, int] | None:
    """First triple (i, j, k) in lexicographic order with (ij)k != i(jk)."""
    n = len(table)
    for i in range(n):
        row = table[i]
        for j in range(n):
            ij = row[j]
            tj = table[j]
            for k in range(n):
                if table[ij][k] != row[tj[k]]:
                    return (i, j, k)
    return None


def validate_monoid(raw_table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteMonoid:
    n = len(raw_table)
    if n < 1:
        raise IndexOutOfRange("a monoid needs at least one element")
    table = []
    for row in raw_table:
        if len(row) != n:
            raise IndexOutOfRange(f"row of length {len(row)} in an order-{n} table")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise IndexOutOfRange(f"entry {v!r} outside 0..{n - 1}")
        table.append(tuple(row))
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise NoIdentityAtZero(i)
    bad = associativity_failure(table)
    if bad is not None:
        raise NotAssociative(*bad)
    if names is not None:
        names = tuple(str(x) for x in names)
        if len(names) != n or len(set(names)) != n:
            raise IndexOutOfRange("element names must be n distinct labels")
    return FiniteMonoid(tuple(table), names or ())


def _from_function(elements, mul, names):
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(index[mul(x, y)] for y in elements) for x in elements)
    return FiniteMonoid(table, tuple(names))


def trivial_monoid():
    return FiniteMonoid(((0,),), ("1",))


def cyclic_group(k):
    if k < 1:
        raise ParamOutOfRange("cyclic_group needs k >= 1")
    names = ["1", "g"] + [f"g{i}" for i in range(2, k)]
    return _from_function(range(k), lambda x, y: (x + y) % k, names[:k])


def left_zero_adjoined(k):
    """k left zeros (x*y = x) with an identity adjoined."""
    if k < 1:
        raise ParamOutOfRange("left_zero_adjoined needs k >= 1")
    return _from_function(range(k + 1), lambda x, y: y if x == 0 else x, ("1",) + _letters(k))


def right_zero_adjoined(k):
    """k right zeros (x*y = y) with an identity adjoined."""
    if k < 1:
        raise ParamOutOfRange("right_zero_adjoined needs k >= 1")
    return _from_function(range(k + 1), lambda x, y: x if y == 0 else y, ("1",) + _letters(k))


def full_transformation(n):
    """All maps of {1..n} composed as (ab)(x) = a(b(x)).

    The identity sits at index 0; the remaining maps follow in lexicographic
    order of their value tables.  Names are the 1-based value tables, e.g.
    ``"21"`` is the swap on two points.
    """
    if not 1 <= n <= 4:
        raise ParamOutOfRange("full_transformation supports 1 <= n <= 4")
    ident = tuple(range(n))
    maps = [ident] + [m for m in itertools.product(range(n), repeat=n) if m != ident]
    names = ["".join(str(v + 1) for v in m) for m in maps]
    return _from_function(maps, lambda a, b: tuple(a[b[x]] for x in range(n)), names)


FAMILIES = {
    "trivial": (0, lambda: trivial_monoid()),
    "cyclic_group": (1, cyclic_group),
    "left_zero_adjoined": (1, left_zero_adjoined),
    "right_zero_adjoined": (1, right_zero_adjoined),
    "full_transformation": (1, full_transformation),
}


def standard_monoid(family: str, *params: int) -> FiniteMonoid:
    try:
        arity, make = FAMILIES[family]
    except KeyError:
        raise UnknownFamily(family) from None
    if len(params) != arity:
        raise ParamOutOfRange(f"{family} takes {arity} parameter(s)")
    return make(*params)


def opposite(m: FiniteMonoid) -> FiniteMonoid:
    n = m.order
    return FiniteMonoid(tuple(tuple(m.table[j][i] for j in range(n)) for i in range(n)), m.names)


def is_commutative(m):
    n = m.order
    return all(m.table[i][j] == m.table[j][i] for i in range(n) for j in range(i))


def left_zeros(m: FiniteMonoid) -> tuple[int, ...]:
    return tuple(z for z in range(m.order) if all(v == z for v in m.table[z]))


def right_zeros(m: FiniteMonoid) -> tuple[int, ...]:
    return tuple(z for z in range(m.order) if all(row[z] == z for row in m.table))


def right_ideal_generated(m: FiniteMonoid, seeds) -> frozenset[int]:
    seeds = list(seeds)
    if not seeds:
        raise EmptySeeds("right ideal needs at least one generator")
    return frozenset(v for a in seeds for v in m.table[a])


def left_reversibility_witness(m: FiniteMonoid) -> tuple[int, int] | None:
    """A pair (a, b) with aS and bS disjoint, or None if S is left reversible."""
    ideals = [frozenset(row) for row in m.table]
    for a in range(m.order):
        for b in range(a + 1, m.order):
            if ideals[a].isdisjoint(ideals[b]):
                return (a, b)
    return None


def is_left_reversible(m: FiniteMonoid) -> bool:
    return left_reversibility_witness(m) is None


def is_right_reversible(m: FiniteMonoid) -> bool:
    return is_left_reversible(opposite(m))


def right_collapsibility_witness(m: FiniteMonoid) -> tuple[int, int] | None:
    """A pair (s, t) with su != tu for every u, or None."""
    n = m.order
    for s in range(n):
        for t in range(s + 1, n):
            if all(m.table[s][u] != m.table[t][u] for u in range(n)):
                return (s, t)
    return None


def is_right_collapsible(m: FiniteMonoid) -> bool:
    return right_collapsibility_witness(m) is None


def relabel(table, perm) -> tuple[tuple[int, ...], ...]:
    """Table of the same monoid with element x renamed perm[x]."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = perm[table[i][j]]
    return tuple(tuple(r) for r in out)


def canonical_form(m: FiniteMonoid | Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabelled table over permutations fixing 0."""
    table = m.table if isinstance(m, FiniteMonoid) else tuple(tuple(r) for r in m)
    n = len(table)
    best = None
    for rest in itertools.permutations(range(1, n)):
        cand = relabel(table, (0,) + rest)
        if best is None or cand < best:
            best = cand
    return best


def _search_tables(n) -> Iterator[tuple[tuple[int, ...], ...]]:
    # Cells are filled row-major; after each assignment every triple whose four
    # products are already known is checked.
    t = [[-1] * n for _ in range(n)]
    for i in range(n):
        t[0][i] = i
        t[i][0] = i
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    rng = range(n)

    def consistent(i, j):
        v = t[i][j]
        # (i, j, k): (ij)k == i(jk)
        for k in rng:
            a = t[v][k]
            jk = t[j][k]
            if a >= 0 and jk >= 0:
                b = t[i][jk]
                if b >= 0 and a != b:
                    return False
        # (h, i, j): (hi)j == h(ij)
        for h in rng:
            hi = t[h][i]
            if hi >= 0:
                a = t[hi][j]
                b = t[h][v]
                if a >= 0 and b >= 0 and a != b:
                    return False
        # the new cell as an outer product: (x y) z with xy = i, z = j, or x (y z) with x = i, yz = j
        for x in rng:
            for y in rng:
                if t[x][y] == i:
                    yj = t[y][j]
                    if yj >= 0:
                        b = t[x][yj]
                        if b >= 0 and b != v:
                            return False
                if t[x][y] == j:
                    ix = t[i][x]
                    if ix >= 0:
                        a = t[ix][y]
                        if a >= 0 and a != v:
                            return False
        return True

    def rec(c):
        if c == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        i, j = cells[c]
        for v in rng:
            t[i][j] = v
            if consistent(i, j):
                yield from rec(c + 1)
        t[i][j] = -1

    yield from rec(0)


@lru_cache(maxsize=None)
def _labelled(n):
    return tuple(_search_tables(n))


@lru_cache(maxsize=None)
def _classes(n):
    seen = {}
    for table in _labelled(n):
        canon = canonical_form(table)
        seen.setdefault(canon, None)
    return tuple(seen)


def enumerate_monoids(order: int, up_to_iso: bool = True, allow_order_5: bool = False) -> Iterator[FiniteMonoid]:
    """Every monoid table of the given order with identity at index 0.

    With ``up_to_iso`` one canonical table per isomorphism class is yielded,
    in order of first appearance among the labelled tables.
    """
    limit = MAX_FLAGGED_ORDER if allow_order_5 else MAX_ENUMERATION_ORDER
    if order < 1 or order > limit:
        raise OrderTooLarge(f"order {order} outside 1..{limit}")
    tables = _classes(order) if up_to_iso else _labelled(order)
    for table in tables:
        yield FiniteMonoid(table)
