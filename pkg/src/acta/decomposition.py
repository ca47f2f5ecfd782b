"""Indecomposable components and the schemes that connect elements."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .act import PRODUCT_CAP, FiniteAct, product_act, regular_act
from .errors import IndexOutOfRange
from .monoid import FiniteMonoid
from .unionfind import UnionFind


@dataclass(frozen=True)
class Decomposition:
    act: FiniteAct
    component_of: tuple[int, ...]

    @property
    def count(self) -> int:
        return max(self.component_of) + 1

    @property
    def blocks(self) -> list[list[int]]:
        out = [[] for _ in range(self.count)]
        for x, c in enumerate(self.component_of):
            out[c].append(x)
        return out


class SchemeError(AssertionError):
    pass


@dataclass(frozen=True)
class Scheme:
    """a = a1 s1, a1 t1 = a2 s2, ..., an tn = b, stored as triples (a_i, s_i, t_i)."""

    source: int
    target: int
    steps: tuple[tuple[int, int, int], ...]

    def __len__(self):
        return len(self.steps)

    def validate(self, act: FiniteAct) -> "Scheme":
        if not self.steps:
            if self.source != self.target:
                raise SchemeError("empty scheme between distinct elements")
            return self
        cur = self.source
        for i, (z, s, t) in enumerate(self.steps):
            if act.act(z, s) != cur:
                raise SchemeError(f"step {i + 1}: {z}*{s} != {cur}")
            cur = act.act(z, t)
        if cur != self.target:
            raise SchemeError(f"scheme ends at {cur}, not {self.target}")
        return self


def components(a: FiniteAct) -> Decomposition:
    uf = UnionFind(a.size)
    for x, row in enumerate(a.action):
        for y in row:
            uf.union(x, y)
    return Decomposition(a, uf.labels())


def is_indecomposable(a: FiniteAct) -> bool:
    return components(a).count == 1


def _preimages(a: FiniteAct):
    pre = [[] for _ in range(a.size)]
    for z, row in enumerate(a.action):
        for s, x in enumerate(row):
            pre[x].append((z, s))
    return pre


def shortest_scheme(a: FiniteAct, source: int, target: int) -> Scheme | None:
    """A minimal-length scheme from source to target, or None when unconnected.

    Breadth-first search over x => z*t for every z, s with z*s = x.
    """
    for x in (source, target):
        if not 0 <= x < a.size:
            raise IndexOutOfRange(f"element {x} out of range")
    if source == target:
        return Scheme(source, target, ())
    pre = _preimages(a)
    back = {source: None}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for z, s in pre[x]:
            for t, y in enumerate(a.action[z]):
                if y in back:
                    continue
                back[y] = (x, (z, s, t))
                if y == target:
                    steps = []
                    while back[y] is not None:
                        y, step = back[y]
                        steps.append(step)
                    return Scheme(source, target, tuple(reversed(steps)))
                queue.append(y)
    return None


def two_step_connect(a: FiniteAct, x: int, y: int) -> tuple[int, int] | None:
    """Some (s, s2) with x*s = y*s2."""
    if x == y:
        return (0, 0)
    ry = {}
    for s2, v in enumerate(a.action[y]):
        ry.setdefault(v, s2)
    for s, v in enumerate(a.action[x]):
        if v in ry:
            return (s, ry[v])
    return None


def power_act(m: FiniteMonoid, k: int, cap: int = PRODUCT_CAP) -> FiniteAct:
    return product_act([regular_act(m)] * k, cap=cap)


def power_act_indecomposable(m: FiniteMonoid, k: int, cap: int = PRODUCT_CAP) -> bool:
    return is_indecomposable(power_act(m, k, cap=cap))

