"""chi_{x,y}-immanants of matrices and the parametric equations of immanant varieties.

Entries may be exact rationals or :class:`~immvar.exactalg.MVPoly`.  The generic
n x k matrix uses the variables ``a_i_j`` (row i, column j), listed row by row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .character import Character
from .exactalg import MVPoly, simplify
from .symtensor import SymTensor, apply_idempotent, check_bound

import itertools


@dataclass(frozen=True)
class Matrix:
    """Dense matrix, 1-based access through :meth:`entry`."""

    entries: tuple[tuple, ...]

    def __post_init__(self):
        if not self.entries or any(len(r) != len(self.entries[0]) for r in self.entries):
            raise ValueError("matrix rows must be non-empty and of equal length")

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> Matrix:
        return cls(tuple(tuple(simplify(c) if not isinstance(c, MVPoly) else c for c in r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def entry(self, i: int, j: int):
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i - 1][j - 1]

    def column(self, j: int) -> tuple:
        return tuple(r[j - 1] for r in self.entries)

    def map(self, fn) -> Matrix:
        return Matrix(tuple(tuple(fn(c) for c in r) for r in self.entries))


def generic_variables(n: int, k: int) -> tuple[str, ...]:
    return tuple(f"a_{i}_{j}" for i in range(1, n + 1) for j in range(1, k + 1))


def generic_matrix(n: int, k: int) -> Matrix:
    names = generic_variables(n, k)
    return Matrix(
        tuple(tuple(MVPoly.var(names, f"a_{i}_{j}") for j in range(1, k + 1)) for i in range(1, n + 1))
    )


def _one(M: Matrix):
    sample = M.entries[0][0]
    if isinstance(sample, MVPoly):
        return MVPoly.const(sample.variables, 1)
    return Fraction(1)


def _zero(M: Matrix):
    sample = M.entries[0][0]
    if isinstance(sample, MVPoly):
        return MVPoly.zero(sample.variables)
    return Fraction(0)


def tensor_entry(M: Matrix, u: Sequence[int], v: Sequence[int]):
    """(M^{(x)k})_{u,v} = prod_i M[u_i, v_i]."""
    if len(u) != len(v):
        raise ValueError("row and column multi-indices have different lengths")
    out = _one(M)
    for a, b in zip(u, v):
        out = out * M.entry(a, b)
    return out


def immanant(chi: Character, x: Sequence[int], y: Sequence[int], M: Matrix):
    """sum_{g in G} chi(g) * (M^{(x)k})_{g(x), y}."""
    G = chi.group
    x, y = tuple(x), tuple(y)
    if len(x) != G.k or len(y) != G.k:
        raise ValueError(f"multi-indices must have length {G.k}")
    if any(not 1 <= v <= M.rows for v in x) or any(not 1 <= v <= M.cols for v in y):
        raise ValueError(f"indices out of range for a {M.rows}x{M.cols} matrix")
    total = _zero(M)
    for val, gx in zip(chi.values, G.act_all(x)):
        if val == 0:
            continue
        term = tensor_entry(M, gx, y)
        total = total + term * simplify(val)
    return simplify(total) if not isinstance(total, MVPoly) else total


def check_immanant_identity(chi: Character, M: Matrix, x: Sequence[int], y: Sequence[int]) -> bool:
    """(M^{(x)k} P_chi)_{x,y} == chi(e)/|G| * chi_{x,y}(M), both sides computed separately.

    The left side applies the idempotent to e_y and then expands M^{(x)k} on the result.
    """
    k = chi.group.k
    Py = apply_idempotent(chi, SymTensor.basis(M.cols, y))
    lhs = _zero(M)
    for z, c in Py.items():
        lhs = lhs + tensor_entry(M, x, z) * c
    rhs = immanant(chi, x, y, M) * Fraction(chi.degree, len(chi.group))
    assert k == len(x)
    return simplify(lhs - rhs) == 0


def parametric_equations(chi: Character, n: int, bound: int | None = None) -> dict[tuple, MVPoly]:
    """z -> chi_{z,(1..k)}(A) for every z in [n]^k, A the generic n x k matrix."""
    k = chi.group.k
    check_bound(n, k, bound)
    A = generic_matrix(n, k)
    cols = tuple(range(1, k + 1))
    return {
        z: immanant(chi, z, cols, A) for z in itertools.product(range(1, n + 1), repeat=k)
    }
