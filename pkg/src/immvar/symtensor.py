"""Sparse exact tensors in V^{(x)k}, the symmetrizer P_chi and the canonical basis."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .character import Character, idempotent_vector, kernel_mask
from .errors import BoundExceededError, NotInImageError, NotOneDimensionalError
from .exactalg import simplify, sparse_rank
from .permgrp import all_indices, encode

ENUMERATION_BOUND = 2_000_000


def check_bound(n: int, k: int, bound: int | None = None) -> None:
    bound = ENUMERATION_BOUND if bound is None else bound
    if n**k > bound:
        raise BoundExceededError(f"n^k = {n}^{k} exceeds the enumeration bound {bound}")


class SymTensor:
    """A vector sum_x c_x e_x with exact coefficients; zero coefficients are never stored."""

    __slots__ = ("n", "k", "coeffs")

    def __init__(self, n: int, k: int, coeffs: Mapping[tuple, object] | None = None):
        self.n = n
        self.k = k
        clean = {}
        for x, c in (coeffs or {}).items():
            x = tuple(int(v) for v in x)
            if len(x) != k or not all(1 <= v <= n for v in x):
                raise ValueError(f"{x} is not an element of [{n}]^{k}")
            c = simplify(c)
            if c != 0:
                clean[x] = c
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def basis(cls, n: int, x: Sequence[int]) -> SymTensor:
        return cls(n, len(x), {tuple(x): 1})

    def __getitem__(self, x) -> object:
        return self.coeffs.get(tuple(x), Fraction(0))

    def items(self):
        return self.coeffs.items()

    def support(self) -> list[tuple]:
        return list(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: SymTensor) -> None:
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("tensors live in different spaces")

    def __add__(self, other: SymTensor) -> SymTensor:
        self._check(other)
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out.get(x, 0) + c
        return SymTensor(self.n, self.k, out)

    def __sub__(self, other: SymTensor) -> SymTensor:
        return self + other.scale(-1)

    def __neg__(self) -> SymTensor:
        return self.scale(-1)

    def scale(self, c) -> SymTensor:
        return SymTensor(self.n, self.k, {x: v * c for x, v in self.coeffs.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymTensor):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        from .exactalg import format_scalar

        body = ", ".join(f"{x}: {format_scalar(c)}" for x, c in self.coeffs.items())
        return f"SymTensor(n={self.n}, k={self.k}, {{{body}}})"


def decomposable(vectors: Sequence[Sequence]) -> SymTensor:
    """v_1 (x) ... (x) v_k for k vectors of length n."""
    if not vectors:
        raise ValueError("need at least one factor")
    n = len(vectors[0])
    factors = []
    for j, v in enumerate(vectors):
        if len(v) != n:
            raise ValueError("factors have different lengths")
        nz = [(i + 1, simplify(c)) for i, c in enumerate(v) if c != 0]
        if not nz:
            raise ValueError(f"factor {j + 1} is the zero vector")
        factors.append(nz)
    out = {}
    for combo in itertools.product(*factors):
        c = Fraction(1)
        for _, a in combo:
            c = c * a
        out[tuple(i for i, _ in combo)] = c
    return SymTensor(n, len(vectors), out)


def apply_idempotent(chi: Character, v: SymTensor) -> SymTensor:
    """P_chi^(n)(v) = chi(e)/|G| sum_g chi(g^-1) g(v)."""
    G = chi.group
    if G.k != v.k:
        raise ValueError(f"character of a subgroup of S_{G.k} applied to a tensor of order {v.k}")
    coeffs = [(i, c) for i, c in enumerate(idempotent_vector(chi)) if c != 0]
    out: dict = {}
    for x, a in v.coeffs.items():
        images = G.act_all(x)
        for i, c in coeffs:
            y = images[i]
            out[y] = out.get(y, 0) + c * a
    return SymTensor(v.n, v.k, out)


def _canonical_data(chi: Character, n: int, bound: int | None = None):
    """Codes of every x in [n]^k with its canonical code and stabilizer-in-kernel flag."""
    G = chi.group
    k = G.k
    check_bound(n, k, bound)
    xs = all_indices(n, k)
    codes = encode(xs, n)
    canon = codes.copy()
    in_kernel = np.ones(len(codes), dtype=bool)
    mask = kernel_mask(chi)
    for gi, gather in enumerate(G.gather):
        gc = encode(xs[:, gather], n)
        np.minimum(canon, gc, out=canon)
        if not mask[gi]:
            in_kernel &= gc != codes
    return xs, codes, canon, in_kernel


def canonical_index_set(chi: Character, n: int, bound: int | None = None) -> list[tuple]:
    """Lex-sorted canonical representatives whose stabilizer lies in ker(chi)."""
    if not chi.one_dimensional:
        raise NotOneDimensionalError("the canonical basis is defined for one-dimensional characters")
    xs, codes, canon, in_kernel = _canonical_data(chi, n, bound)
    keep = (codes == canon) & in_kernel
    return [tuple(int(v) for v in row) for row in xs[keep]]


def dim_formula(chi: Character, n: int) -> int:
    """chi(e)/|G| * sum_g chi(g) n^{c(g)}, checked to be a non-negative integer."""
    G = chi.group
    total = 0
    for g, val in zip(G.elements, chi.values):
        total = val * n ** len(g.cycles()) + total
    total = simplify(total * Fraction(chi.degree, len(G)))
    if not isinstance(total, Fraction) or total.denominator != 1 or total < 0:
        raise ValueError(f"dimension sum evaluates to {total}; is the character simple?")
    return int(total)


def in_image(chi: Character, v: SymTensor) -> bool:
    return apply_idempotent(chi, v) == v


def coords_in_basis(chi: Character, v: SymTensor) -> dict[tuple, object]:
    """Coordinates of ``v`` in the basis {P(e_x) : x in B_chi(k,n)}.

    ``v`` must already be fixed by P_chi; a_x is read off from the coefficient of
    e_x at the canonical representative, rescaled by |G|/|G_x|.
    """
    if not chi.one_dimensional:
        raise NotOneDimensionalError("basis coordinates need a one-dimensional character")
    if not in_image(chi, v):
        raise NotInImageError("tensor is not fixed by the idempotent")
    G = chi.group
    kmask = kernel_mask(chi)
    out = {}
    for x, c in v.coeffs.items():
        images = G.act_all(x)
        if min(images) != x:
            continue
        stab = [i for i, y in enumerate(images) if y == x]
        if not all(kmask[i] for i in stab):
            continue
        out[x] = simplify(c * Fraction(len(G), len(stab)) / chi.degree)
    return out


def support(chi: Character, v: SymTensor) -> set[tuple]:
    return set(coords_in_basis(chi, v))


def rank_of_image(chi: Character, n: int, bound: int | None = None) -> int:
    """Rank of {P(e_x) : x in [n]^k} by exact sparse elimination (independent of the dimension formula)."""
    k = chi.group.k
    check_bound(n, k, bound)

    def rows() -> Iterable[dict]:
        for x in itertools.product(range(1, n + 1), repeat=k):
            yield apply_idempotent(chi, SymTensor.basis(n, x)).coeffs

    return sparse_rank(rows())
