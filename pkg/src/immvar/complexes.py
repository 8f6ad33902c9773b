"""Order complexes, f-vectors, reduced Euler characteristics and a shelling search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .bposet import Poset
from .errors import BoundExceededError

FACET_CAP = 24
STEP_BUDGET = 20_000
FACE_BOUND = 2_000_000


def _vkey(v):
    return (type(v).__name__, v)


class SimplicialComplex:
    """Stored by its facets; the void complex has no facets, {emptyset} has the empty facet."""

    def __init__(self, faces: Iterable[Iterable[Hashable]]):
        cand = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
        facets: list[frozenset] = []
        for f in cand:
            if not any(f <= g for g in facets):
                facets.append(f)
        self.vertices = sorted({v for f in facets for v in f}, key=_vkey)
        pos = {v: i for i, v in enumerate(self.vertices)}
        self.facets = sorted(facets, key=lambda f: (-len(f), sorted(pos[v] for v in f)))

    def __len__(self) -> int:
        return len(self.facets)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and set(self.facets) == set(other.facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"

    def is_void(self) -> bool:
        return not self.facets

    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self, bound: int = FACE_BOUND) -> set[frozenset]:
        """All faces, the empty face included unless the complex is void."""
        out: set[frozenset] = set()
        for f in self.facets:
            items = sorted(f, key=_vkey)
            for r in range(len(items) + 1):
                for sub in itertools.combinations(items, r):
                    out.add(frozenset(sub))
            if len(out) > bound:
                raise BoundExceededError(f"more than {bound} faces")
        return out


def f_vector(C: SimplicialComplex) -> tuple[int, ...]:
    """(f_0, f_1, ...): number of faces with 1, 2, ... vertices."""
    counts: dict[int, int] = {}
    for face in C.faces():
        if face:
            counts[len(face) - 1] = counts.get(len(face) - 1, 0) + 1
    return tuple(counts.get(i, 0) for i in range(C.dimension() + 1))


def euler_characteristic(C: SimplicialComplex) -> int:
    """Reduced: -1 + f_0 - f_1 + ...; 0 for the void complex."""
    if C.is_void():
        return 0
    return -1 + sum((-1) ** i * f for i, f in enumerate(f_vector(C)))


def maximal_chains(P: Poset, elements: Sequence | None = None) -> list[tuple]:
    """Maximal chains of the subposet on ``elements`` (default: all of P), bottom first."""
    Q = P if elements is None else P.subposet(elements)
    if not len(Q):
        return [()]
    out = []

    def extend(chain):
        ups = Q.upper_covers(chain[-1])
        if not ups:
            out.append(tuple(chain))
            return
        for u in ups:
            extend(chain + [u])

    for m in Q.minimal():
        extend([m])
    return out


def order_complex(P: Poset, elements: Sequence | None = None) -> SimplicialComplex:
    return SimplicialComplex(maximal_chains(P, elements))


def open_interval_complex(P: Poset, x, y) -> SimplicialComplex:
    return order_complex(P, P.open_interval(x, y))


def closed_interval_complex(P: Poset, x, y) -> SimplicialComplex:
    return order_complex(P, P.interval(x, y))


@dataclass(frozen=True)
class ShellingResult:
    status: str  # "yes", "no" or "unknown"
    order: tuple | None = None
    steps: int = 0
    reason: str = ""

    def to_dict(self) -> dict:
        out = {"status": self.status, "steps": self.steps}
        if self.order is not None:
            out["order"] = [sorted(list(v) if isinstance(v, tuple) else v for v in f) for f in self.order]
        if self.reason:
            out["reason"] = self.reason
        return out


class _Budget(Exception):
    pass


class _Budget(Exception):
    pass


def _addable(F: int, size: int, prior: Sequence[int]) -> bool:
    """F meets the earlier facets in a pure complex of codimension one inside F."""
    if not prior:
        return True
    inter = {G & F for G in prior}
    ridges = [I for I in inter if I.bit_count() == size - 1]
    if not ridges:
        return False
    return all(any(I & ~R == 0 for R in ridges) for I in inter)


def shellable(C: SimplicialComplex, facet_cap: int = FACET_CAP, step_budget: int = STEP_BUDGET) -> ShellingResult:
    """Search for a (nonpure) shelling.

    Facets are only ever added in weakly decreasing size, which loses nothing: any
    shellable complex has such a shelling.  Whether a facet can be added depends only
    on the set already placed, so failed sets are remembered.  Up to ``facet_cap``
    facets an exhausted search proves non-shellability; above it the same search runs
    under ``step_budget`` and can only answer yes or unknown.

    For each unplaced facet F the search tracks ``ridge[F]``, the vertices v for which
    F - v is already covered, and ``open[F]``, the sets F - G (G placed) that miss every
    such v.  F can be placed next exactly when ``open[F]`` is empty.
    """
    pos = {v: i for i, v in enumerate(C.vertices)}
    masks = [sum(1 << pos[v] for v in f) for f in C.facets]
    sizes = [len(f) for f in C.facets]
    N = len(masks)
    if N <= 1:
        return ShellingResult("yes", tuple(C.facets), 0)
    ridge = [0] * N
    open_ = [frozenset()] * N
    failed: set[int] = set()
    order: list[int] = []
    history: list[list[tuple[int, int, frozenset]]] = []
    used = 0
    steps = 0

    def place(h: int) -> None:
        nonlocal used
        saved = []
        H = masks[h]
        for f in range(N):
            if used >> f & 1 or f == h:
                continue
            F = masks[f]
            miss = F & ~H
            r, o = ridge[f], open_[f]
            saved.append((f, r, o))
            if miss.bit_count() == 1 and not miss & r:
                r |= miss
                o = frozenset(u for u in o if not u & miss)
            if not miss & r:
                o = o | {miss}
            ridge[f], open_[f] = r, o
        history.append(saved)
        order.append(h)
        used |= 1 << h

    def unplace() -> None:
        nonlocal used
        h = order.pop()
        used &= ~(1 << h)
        for f, r, o in history.pop():
            ridge[f], open_[f] = r, o

    def candidates() -> list[int]:
        remaining = [i for i in range(N) if not used >> i & 1]
        top = max(sizes[i] for i in remaining)
        cands = [i for i in remaining if sizes[i] == top and not open_[i]]
        cands.sort(key=lambda i: -ridge[i].bit_count())
        return cands

    stack = [candidates()]
    try:
        while stack:
            if len(order) == N:
                break
            if used in failed or not stack[-1]:
                failed.add(used)
                stack.pop()
                if order:
                    unplace()
                continue
            steps += 1
            if steps > step_budget:
                raise _Budget
            place(stack[-1].pop(0))
            stack.append(candidates() if len(order) < N else [])
    except _Budget:
        return ShellingResult("unknown", None, steps, f"step budget {step_budget} exhausted")
    if len(order) == N:
        return ShellingResult("yes", tuple(C.facets[i] for i in order), steps)
    if N > facet_cap:
        return ShellingResult("unknown", None, steps, f"{N} facets exceed the exhaustive cap {facet_cap}")
    return ShellingResult("no", None, steps)


def is_shelling_order(order: Sequence[frozenset]) -> bool:
    """Direct check of the nonpure shelling condition along ``order``."""
    verts = sorted({v for f in order for v in f}, key=_vkey)
    pos = {v: i for i, v in enumerate(verts)}
    masks = [sum(1 << pos[v] for v in f) for f in order]
    sizes = [len(f) for f in order]
    return all(_addable(masks[i], sizes[i], masks[:i]) for i in range(len(masks)))
