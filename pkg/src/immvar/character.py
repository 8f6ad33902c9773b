"""Characters of permutation groups with exact cyclotomic values."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    NotAClassFunctionError,
    NotAHomomorphismError,
    NotOneDimensionalError,
)
from .exactalg import CycloNum, root_of_unity
from .permgrp import Perm, PermGroup, closure


@dataclass(frozen=True, eq=False)
class Character:
    """Values are stored per element, aligned with ``group.elements``."""

    group: PermGroup
    m: int
    values: tuple[CycloNum, ...]
    degree: int
    one_dimensional: bool
    label: str = ""

    def __call__(self, g: Perm) -> CycloNum:
        return self.values[self.group.index[g]]

    def value_at(self, i: int) -> CycloNum:
        return self.values[i]

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.group == other.group
            and all(a == b for a, b in zip(self.values, other.values))
        )

    def __hash__(self) -> int:
        return hash((self.group, self.values))

    def __repr__(self) -> str:
        name = self.label or ("1-dim" if self.one_dimensional else f"degree {self.degree}")
        return f"Character({name}, |G|={len(self.group)}, m={self.m})"


def _is_multiplicative(G: PermGroup, values: Sequence[CycloNum]) -> bool:
    size = len(G)
    table = G.table if size <= 5040 else None
    for i in range(size):
        for j in range(size):
            ij = int(table[i, j]) if table is not None else G.compose(i, j)
            if values[ij] != values[i] * values[j]:
                return False
    return True


def char_from_generator_exponents(
    G: PermGroup, m: int, gen_exps: Mapping[Perm, int], *, label: str = ""
) -> Character:
    """One-dimensional character with chi(g) = zeta_m^e(g), fixed on generators.

    The exponents are propagated along a breadth-first walk of the Cayley graph;
    an element reached twice with different exponents means the assignment does
    not extend to a homomorphism.
    """
    gens = [(g if isinstance(g, Perm) else Perm.parse(g), int(e) % m) for g, e in gen_exps.items()]
    for g, _ in gens:
        if g not in G:
            raise NotAHomomorphismError(f"generator {g} is not an element of the group")
    span = closure(G.k, [g for g, _ in gens])
    if span.elements != G.elements:
        raise NotAHomomorphismError("the given generators do not generate the group")
    exps = {G.identity: 0}
    queue = deque([G.identity])
    while queue:
        h = queue.popleft()
        for g, e in gens:
            p = g * h
            val = (exps[h] + e) % m
            if p not in exps:
                exps[p] = val
                queue.append(p)
            elif exps[p] != val:
                raise NotAHomomorphismError(
                    f"element {p} receives exponents {exps[p]} and {val} mod {m}"
                )
    values = tuple(root_of_unity(m, exps[g]) for g in G.elements)
    if not _is_multiplicative(G, values):
        raise NotAHomomorphismError("assignment is not multiplicative")
    return Character(G, m, values, 1, True, label)


def trivial_character(G: PermGroup) -> Character:
    one = CycloNum.rational(1, 1)
    return Character(G, 1, tuple(one for _ in G.elements), 1, True, "trivial")


def sign_character(G: PermGroup) -> Character:
    values = tuple(CycloNum.rational(g.sign(), 2) for g in G.elements)
    return Character(G, 2, values, 1, True, "sign")


def table_character(G: PermGroup, values, m: int = 1, *, label: str = "") -> Character:
    """Character from explicit values (sequence aligned with elements, or mapping Perm -> value)."""
    if isinstance(values, Mapping):
        lookup = {(g if isinstance(g, Perm) else Perm.parse(g)): v for g, v in values.items()}
        try:
            raw = [lookup[g] for g in G.elements]
        except KeyError as exc:
            raise ValueError(f"no value given for element {exc.args[0]}") from None
    else:
        raw = list(values)
        if len(raw) != len(G):
            raise ValueError(f"expected {len(G)} values, got {len(raw)}")
    vals = []
    for v in raw:
        if isinstance(v, CycloNum):
            v = v if v.m == m else v.lift(m)
        else:
            v = CycloNum.rational(Fraction(v), m)
        vals.append(v)
    vals = tuple(vals)
    e_val = vals[G.identity_index]
    if not (e_val.is_rational() and e_val.to_fraction().denominator == 1 and e_val.to_fraction() >= 1):
        raise ValueError(f"value at the identity must be a positive integer, got {e_val}")
    size = len(G)
    table = G.table
    inv = G.inverse_index
    for h in range(size):
        for g in range(size):
            conj = int(table[int(table[h, g]), inv[h]])
            if vals[conj] != vals[g]:
                raise NotAClassFunctionError(
                    f"values differ on conjugate elements {G.elements[g]} and {G.elements[conj]}"
                )
    degree = int(e_val.to_fraction())
    one_dim = degree == 1 and _is_multiplicative(G, vals)
    return Character(G, m, vals, degree, one_dim, label)


def kernel(chi: Character) -> list[Perm]:
    if not chi.one_dimensional:
        raise NotOneDimensionalError("kernel is only defined here for one-dimensional characters")
    return [g for g, v in zip(chi.group.elements, chi.values) if v == 1]


def kernel_mask(chi: Character) -> tuple[bool, ...]:
    if not chi.one_dimensional:
        raise NotOneDimensionalError("kernel is only defined here for one-dimensional characters")
    return tuple(v == 1 for v in chi.values)


def inner_product(chi1: Character, chi2: Character) -> CycloNum:
    """Unnormalised pairing sum_g chi1(g) chi2(g^-1) (no 1/|G| factor).

    Only its vanishing is used downstream, so the normalisation does not matter.
    """
    if chi1.group != chi2.group:
        raise ValueError("characters of different groups")
    G = chi1.group
    M = math.lcm(chi1.m, chi2.m)
    total = CycloNum.rational(0, M)
    for i, ii in enumerate(G.inverse_index):
        a, b = chi1.values[i].lift(M), chi2.values[ii].lift(M)
        total = total + a * b
    return total


def idempotent_coefficients(chi: Character) -> dict[Perm, CycloNum]:
    """Coefficient of each g in P_chi = chi(e)/|G| * sum_g chi(g^-1) g."""
    G = chi.group
    scale = Fraction(chi.degree, len(G))
    return {g: chi.values[G.inverse_index[i]] * scale for i, g in enumerate(G.elements)}


def idempotent_vector(chi: Character) -> tuple[CycloNum, ...]:
    """Same coefficients as :func:`idempotent_coefficients`, aligned with the elements."""
    G = chi.group
    scale = Fraction(chi.degree, len(G))
    return tuple(chi.values[G.inverse_index[i]] * scale for i in range(len(G)))


def restrict(chi: Character, H: Iterable[Perm] | PermGroup) -> Character:
    """Restriction to a subgroup ``H`` of ``chi.group``."""
    G = chi.group
    elems = list(H.elements if isinstance(H, PermGroup) else H)
    for h in elems:
        if h not in G:
            raise ValueError(f"{h} is not an element of the group")
    hset = set(elems)
    if Perm.identity(G.k) not in hset:
        raise ValueError("subset does not contain the identity")
    for a in hset:
        if a.inverse() not in hset:
            raise ValueError("subset is not closed under inverses")
        for b in hset:
            if a * b not in hset:
                raise ValueError("subset is not closed under composition")
    sub = PermGroup(G.k, hset, getattr(H, "generators", ()))
    vals = tuple(chi(h) for h in sub.elements)
    one_dim = chi.one_dimensional or (chi.degree == 1 and _is_multiplicative(sub, vals))
    return Character(sub, chi.m, vals, chi.degree, one_dim, chi.label)


def stabilizer_sum(chi: Character, x: Sequence[int]) -> CycloNum:
    """sum_{g in G_x} chi(g)."""
    G = chi.group
    x = tuple(x)
    total = CycloNum.rational(0, chi.m)
    for i, y in enumerate(G.act_all(x)):
        if y == x:
            total = total + chi.values[i]
    return total


def lift_values(chi: Character, M: int) -> Character:
    return Character(chi.group, M, tuple(v.lift(M) for v in chi.values), chi.degree, chi.one_dimensional, chi.label)


__all__ = [
    "Character",
    "char_from_generator_exponents",
    "trivial_character",
    "sign_character",
    "table_character",
    "kernel",
    "kernel_mask",
    "inner_product",
    "idempotent_coefficients",
    "idempotent_vector",
    "restrict",
    "stabilizer_sum",
]
