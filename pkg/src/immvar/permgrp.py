"""Permutations of [k], subgroups of S_k and their action on [n]^k.

Permutations are written in one-line notation and are 1-based: ``Perm((2, 3, 1))``
sends 1 -> 2, 2 -> 3, 3 -> 1.  A permutation ``w`` acts on a multi-index by moving
the entry in position ``i`` to position ``w(i)``::

    act(w, x) = (x[w^-1(1)], ..., x[w^-1(k)])

so that ``act(v * w, x) == act(v, act(w, x))`` where ``v * w`` is composition
(``w`` first).
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import BoundExceededError, InvalidPermutationError

MultiIndex = tuple  # tuple[int, ...], entries in [n]

TABLE_BOUND = 10080


class Perm(tuple):
    """A permutation of [k] in one-line notation (entry i is w(i))."""

    __slots__ = ()

    def __new__(cls, image: Iterable[int]):
        image = tuple(int(v) for v in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise InvalidPermutationError(f"{image} is not a permutation of [{len(image)}]")
        return super().__new__(cls, image)

    @classmethod
    def parse(cls, text: str | Sequence[int]) -> Perm:
        """Accept ``"3412"``, ``"3,4,1,2"``, ``"3 4 1 2"`` or a sequence of ints."""
        if isinstance(text, str):
            s = text.strip()
            parts = s.replace(",", " ").split()
            if len(parts) == 1 and len(s) > 1:
                parts = list(s)
            try:
                return cls(int(p) for p in parts)
            except ValueError as exc:
                raise InvalidPermutationError(f"cannot parse permutation {text!r}") from exc
        return cls(text)

    @classmethod
    def identity(cls, k: int) -> Perm:
        return cls(range(1, k + 1))

    @property
    def k(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: Perm) -> Perm:
        """Composition ``self o other`` (apply ``other`` first)."""
        if len(self) != len(other):
            raise ValueError("cannot compose permutations of different degree")
        return Perm(self[j - 1] for j in other)

    def inverse(self) -> Perm:
        inv = [0] * len(self)
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Perm(inv)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self[i - 1]
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycle_string(self) -> str:
        """Display-only cycle notation, fixed points omitted."""
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Perm({str(self)!r})"


def act(w: Perm, x: Sequence[int]) -> MultiIndex:
    if len(w) != len(x):
        raise ValueError(f"permutation of degree {len(w)} cannot act on index of length {len(x)}")
    out = [0] * len(x)
    for i, v in enumerate(x):
        out[w[i] - 1] = v
    return tuple(out)


def cycle_counts(w: Perm) -> tuple[int, ...]:
    """``c[i-1]`` is the number of cycles of length ``i``."""
    counts = [0] * len(w)
    for c in w.cycles():
        counts[len(c) - 1] += 1
    return tuple(counts)


def rho(x: Sequence[int]) -> int:
    """Rank of ``x`` in the product order on [n]^k."""
    return sum(v - 1 for v in x)


def encode(xs: np.ndarray, n: int) -> np.ndarray:
    """Integer codes of multi-indices (rows of ``xs``); numeric order is lex order."""
    k = xs.shape[-1]
    weights = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (xs.astype(np.int64) - 1) @ weights


def all_indices(n: int, k: int) -> np.ndarray:
    """Every element of [n]^k as rows, in lex order."""
    return np.array(list(itertools.product(range(1, n + 1), repeat=k)), dtype=np.int64).reshape(-1, k)


class PermGroup:
    """A subgroup of S_k, stored as a lex-sorted list of its elements."""

    def __init__(self, k: int, elements: Iterable[Perm], generators: Iterable[Perm] = ()):
        self.k = k
        self.elements: tuple[Perm, ...] = tuple(sorted(set(elements)))
        self.generators: tuple[Perm, ...] = tuple(generators)
        self.index = {g: i for i, g in enumerate(self.elements)}
        ident = Perm.identity(k)
        if ident not in self.index:
            raise ValueError("group must contain the identity")
        self.identity_index = self.index[ident]
        self._canon: dict[MultiIndex, MultiIndex] = {}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.index

    def __eq__(self, other) -> bool:
        return isinstance(other, PermGroup) and self.k == other.k and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.k, self.elements))

    def __repr__(self) -> str:
        return f"PermGroup(k={self.k}, order={len(self)})"

    @property
    def identity(self) -> Perm:
        return self.elements[self.identity_index]

    @cached_property
    def inverse_index(self) -> tuple[int, ...]:
        return tuple(self.index[g.inverse()] for g in self.elements)

    @cached_property
    def array(self) -> np.ndarray:
        """0-based one-line images, one row per element."""
        return np.array(self.elements, dtype=np.int64).reshape(len(self), self.k) - 1

    @cached_property
    def gather(self) -> np.ndarray:
        """Row ``i`` gathers positions so that ``x[..., gather[i]] == act(g_i, x)``."""
        return np.argsort(self.array, axis=1)

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``; built on first use."""
        size = len(self)
        if size > TABLE_BOUND:
            raise BoundExceededError(f"composition table for |G|={size} exceeds {TABLE_BOUND}")
        arr = self.array
        codes = encode(arr + 1, self.k)
        out = np.empty((size, size), dtype=np.int32)
        for i in range(size):
            out[i] = np.searchsorted(codes, encode(arr[i][arr] + 1, self.k))
        return out

    def compose(self, i: int, j: int) -> int:
        if len(self) <= TABLE_BOUND:
            return int(self.table[i, j])
        return self.index[self.elements[i] * self.elements[j]]

    def act_all(self, x: Sequence[int]) -> list[MultiIndex]:
        """``[act(g, x) for g in elements]``."""
        return [tuple(x[j] for j in row) for row in self._gather_lists]

    @cached_property
    def _gather_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(j) for j in row) for row in self.gather)


def closure(k: int, generators: Iterable[Perm | Sequence[int]]) -> PermGroup:
    """Smallest subgroup of S_k containing ``generators``."""
    gens = [g if isinstance(g, Perm) else Perm(g) for g in generators]
    for g in gens:
        if len(g) != k:
            raise InvalidPermutationError(f"generator {g} is not a permutation of [{k}]")
    ident = Perm.identity(k)
    seen = {ident}
    queue = deque([ident])
    while queue:
        h = queue.popleft()
        for g in gens:
            p = g * h
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return PermGroup(k, seen, gens)


def orbit(G: PermGroup, x: Sequence[int]) -> frozenset:
    return frozenset(G.act_all(tuple(x)))


def stabilizer(G: PermGroup, x: Sequence[int]) -> list[Perm]:
    x = tuple(x)
    return [g for g, y in zip(G.elements, G.act_all(x)) if y == x]


def canonical_rep(G: PermGroup, x: Sequence[int]) -> MultiIndex:
    """Lexicographically least element of the orbit of ``x``."""
    x = tuple(x)
    try:
        return G._canon[x]
    except KeyError:
        pass
    if len(x) != G.k:
        raise ValueError(f"index of length {len(x)} for a subgroup of S_{G.k}")
    rep = min(G.act_all(x))
    G._canon[x] = rep
    return rep


def trivial_group(k: int) -> PermGroup:
    return closure(k, [])


def symmetric_group(k: int) -> PermGroup:
    gens = [Perm(simple_transposition(k, i)) for i in range(1, k)]
    return closure(k, gens)


def alternating_group(k: int) -> PermGroup:
    if k < 3:
        return trivial_group(k)
    return closure(k, [Perm(_three_cycle(k, i)) for i in range(1, k - 1)])


def _three_cycle(k: int, i: int) -> list[int]:
    # the 3-cycle (i i+1 i+2)
    img = list(range(1, k + 1))
    img[i - 1], img[i], img[i + 1] = i + 1, i + 2, i
    return img


def cyclic_group(k: int) -> PermGroup:
    """Generated by the k-cycle ``k 1 2 ... (k-1)``."""
    return closure(k, [cyclic_generator(k)])


def cyclic_generator(k: int) -> Perm:
    return Perm([k] + list(range(1, k)))


def simple_transposition(k: int, i: int) -> tuple[int, ...]:
    img = list(range(1, k + 1))
    img[i - 1], img[i] = img[i], img[i - 1]
    return tuple(img)


def young_subgroup(k: int, composition: Sequence[int]) -> PermGroup:
    """Parabolic subgroup S_{a1} x S_{a2} x ... acting on consecutive blocks."""
    if any(a < 1 for a in composition) or sum(composition) != k:
        raise ValueError(f"{tuple(composition)} is not a composition of {k}")
    gens = []
    start = 1
    for a in composition:
        for i in range(start, start + a - 1):
            gens.append(Perm(simple_transposition(k, i)))
        start += a
    return closure(k, gens)
