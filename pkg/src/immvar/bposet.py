"""Finite posets and the poset B_chi(k,n) of canonical orbit representatives.

The order on B_chi(k,n) is x <= y iff x <= g(y) componentwise for some g in G.
Relations are held as a dense boolean matrix; element order is always lexicographic.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

import numpy as np

from .character import Character, trivial_character
from .errors import BoundExceededError, NotOneDimensionalError
from .exactalg import mobius_mu
from .permgrp import PermGroup, all_indices, canonical_rep, cycle_counts, rho
from .symtensor import canonical_index_set, check_bound

WORK_BOUND = 500_000_000
AXIOM_CHECK_SIZE = 400
IDEAL_CAP = 100_000


def _strict_covers(L: np.ndarray) -> np.ndarray:
    lt = L.copy()
    np.fill_diagonal(lt, False)
    f = lt.astype(np.float32)
    return lt & ~((f @ f) > 0.5)


class Poset:
    """A finite poset on hashable elements; ``L[i, j]`` means elements[i] <= elements[j]."""

    def __init__(self, elements: Sequence[Hashable], L: np.ndarray, *, check: bool | None = None):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate poset elements")
        self.L = np.asarray(L, dtype=bool)
        N = len(self.elements)
        if self.L.shape != (N, N):
            raise ValueError("relation matrix has the wrong shape")
        if check is None:
            check = N <= AXIOM_CHECK_SIZE
        if check:
            self._check_axioms()
        self.C = _strict_covers(self.L)

    def _check_axioms(self) -> None:
        L = self.L
        if not L.diagonal().all():
            raise ValueError("relation is not reflexive")
        if ((L & L.T) & ~np.eye(len(L), dtype=bool)).any():
            raise ValueError("relation is not antisymmetric")
        f = L.astype(np.float32)
        if (((f @ f) > 0.5) & ~L).any():
            raise ValueError("relation is not transitive")

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable], leq) -> Poset:
        els = list(elements)
        L = np.array([[bool(leq(a, b)) for b in els] for a in els], dtype=bool).reshape(len(els), len(els))
        return cls(els, L)

    @classmethod
    def from_covers(cls, elements: Sequence[Hashable], covers: Iterable[tuple]) -> Poset:
        """Poset generated by ``(lower, upper)`` pairs (reflexive-transitive closure)."""
        els = list(elements)
        idx = {x: i for i, x in enumerate(els)}
        N = len(els)
        L = np.eye(N, dtype=bool)
        for a, b in covers:
            L[idx[a], idx[b]] = True
        while True:
            f = L.astype(np.float32)
            nxt = L | ((f @ f) > 0.5)
            if (nxt == L).all():
                break
            L = nxt
        return cls(els, L)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def _i(self, x) -> int:
        try:
            return self.index[tuple(x) if isinstance(x, list) else x]
        except KeyError:
            raise KeyError(f"{x} is not an element of the poset") from None

    def leq(self, x, y) -> bool:
        return bool(self.L[self._i(x), self._i(y)])

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def covers(self) -> list[tuple]:
        """Cover pairs (lower, upper) in lexicographic order of (lower, upper)."""
        lo, hi = np.nonzero(self.C)
        return [(self.elements[a], self.elements[b]) for a, b in zip(lo, hi)]

    def upper_covers(self, x) -> list:
        return [self.elements[j] for j in np.nonzero(self.C[self._i(x)])[0]]

    def lower_covers(self, x) -> list:
        return [self.elements[j] for j in np.nonzero(self.C[:, self._i(x)])[0]]

    def principal_ideal(self, x) -> list:
        return [self.elements[j] for j in np.nonzero(self.L[:, self._i(x)])[0]]

    def principal_filter(self, x) -> list:
        return [self.elements[j] for j in np.nonzero(self.L[self._i(x)])[0]]

    def interval(self, x, y) -> list:
        if not self.leq(x, y):
            raise ValueError(f"{x} is not below {y}")
        mask = self.L[self._i(x)] & self.L[:, self._i(y)]
        return [self.elements[j] for j in np.nonzero(mask)[0]]

    def open_interval(self, x, y) -> list:
        return [z for z in self.interval(x, y) if z != x and z != y]

    def _mask(self, subset) -> np.ndarray:
        m = np.zeros(len(self), dtype=bool)
        for z in subset:
            m[self._i(z)] = True
        return m

    def maximal(self, subset=None) -> list:
        """Maximal elements of ``subset`` (default: the whole poset) in the induced order."""
        m = np.ones(len(self), dtype=bool) if subset is None else self._mask(subset)
        strict = self.L & ~np.eye(len(self), dtype=bool)
        above = (strict[:, m]).any(axis=1)
        return [self.elements[j] for j in np.nonzero(m & ~above)[0]]

    def minimal(self, subset=None) -> list:
        m = np.ones(len(self), dtype=bool) if subset is None else self._mask(subset)
        strict = self.L & ~np.eye(len(self), dtype=bool)
        below = (strict[m, :]).any(axis=0)
        return [self.elements[j] for j in np.nonzero(m & ~below)[0]]

    def subposet(self, subset) -> Poset:
        m = self._mask(subset)
        idx = np.nonzero(m)[0]
        return Poset([self.elements[j] for j in idx], self.L[np.ix_(idx, idx)], check=False)

    def dual(self) -> Poset:
        return Poset(self.elements, self.L.T.copy(), check=False)

    # -- lattice structure --

    def _bound_table(self, upper: bool) -> tuple[np.ndarray, tuple | None]:
        """Join (or meet) index table; -1 where no unique least upper bound exists.

        The returned witness is the first failing pair, scanning the larger element
        downward from the top of the lex order and the smaller one upward.
        """
        L = self.L if upper else self.L.T
        N = len(self)
        table = -np.ones((N, N), dtype=np.int64)
        witness = None
        strict = L & ~np.eye(N, dtype=bool)
        for a in range(N - 1, -1, -1):
            for b in range(a + 1):
                bounds = L[a] & L[b]
                # minimal elements of the bound set, in the order L
                mins = bounds & ~(strict[bounds].any(axis=0))
                cand = np.nonzero(mins)[0]
                if len(cand) == 1:
                    table[a, b] = table[b, a] = cand[0]
                elif witness is None:
                    witness = (self.elements[b], self.elements[a], [self.elements[c] for c in cand])
        return table, witness

    def join_table(self) -> tuple[np.ndarray, tuple | None]:
        return self._bound_table(True)

    def meet_table(self) -> tuple[np.ndarray, tuple | None]:
        return self._bound_table(False)

    def is_lattice(self) -> tuple[bool, dict | None]:
        """Return (verdict, witness); joins are examined before meets."""
        for kind, (_, w) in (("join", self.join_table()), ("meet", self.meet_table())):
            if w is not None:
                a, b, bounds = w
                key = "minimal_upper_bounds" if kind == "join" else "maximal_lower_bounds"
                return False, {"pair": [a, b], "operation": kind, key: bounds}
        return True, None

    def is_distributive(self) -> bool:
        J, wj = self.join_table()
        M, wm = self.meet_table()
        if wj is not None or wm is not None:
            return False
        for a in range(len(self)):
            lhs = M[a][J]
            rhs = J[M[a][:, None], M[a][None, :]]
            if not (lhs == rhs).all():
                return False
        return True

    def mobius(self, x, y) -> int:
        """mu(x, y) by the recursion mu(x, y) = -sum_{x <= z < y} mu(x, z)."""
        if not self.leq(x, y):
            raise ValueError(f"{x} and {y} are not comparable as x <= y")
        members = [self._i(z) for z in self.interval(x, y)]
        # any linear extension works; the size of the down-set is one
        members.sort(key=lambda j: int(self.L[:, j].sum()))
        mu: dict[int, int] = {}
        ix = self._i(x)
        for z in members:
            if z == ix:
                mu[z] = 1
            else:
                mu[z] = -sum(v for w, v in mu.items() if self.L[w, z] and w != z)
        return mu[self._i(y)]

    def order_ideals(self, cap: int = IDEAL_CAP) -> list[frozenset]:
        """All down-closed subsets, sorted by size then by sorted contents."""
        N = len(self)
        down = [int(sum(1 << j for j in np.nonzero(self.L[:, i])[0])) for i in range(N)]
        found = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for ideal in frontier:
                for i in range(N):
                    bit = 1 << i
                    if ideal & bit:
                        continue
                    if (down[i] & ~bit) & ~ideal:
                        continue
                    new = ideal | bit
                    if new not in found:
                        found.add(new)
                        if len(found) > cap:
                            raise BoundExceededError(f"more than {cap} order ideals")
                        nxt.append(new)
            frontier = nxt
        out = [frozenset(self.elements[i] for i in range(N) if s >> i & 1) for s in found]
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    def ideal_lattice(self, cap: int = IDEAL_CAP) -> Poset:
        """J(P): order ideals ordered by inclusion, each given as a sorted tuple."""
        ideals = [tuple(sorted(s)) for s in self.order_ideals(cap)]
        sets = [frozenset(s) for s in ideals]
        L = np.array([[a <= b for b in sets] for a in sets], dtype=bool)
        return Poset(ideals, L, check=False)

    # -- export --

    def _label(self, x) -> str:
        return "(" + ",".join(map(str, x)) + ")" if isinstance(x, tuple) else str(x)

    def to_dict(self) -> dict:
        return {
            "elements": [list(x) if isinstance(x, tuple) else x for x in self.elements],
            "covers": [[list(a), list(b)] if isinstance(a, tuple) else [a, b] for a, b in self.covers()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> Poset:
        def key(v):
            return tuple(v) if isinstance(v, list) else v

        els = [key(x) for x in data["elements"]]
        return cls.from_covers(els, [(key(a), key(b)) for a, b in data["covers"]])

    def structure(self) -> tuple:
        """Hashable summary used to compare posets (elements and cover pairs)."""
        return (tuple(self.elements), tuple(self.covers()))


class BPoset(Poset):
    """B_chi(k, n) with its character; ``rank`` is rho when the poset is rho-graded, else None."""

    def __init__(self, chi: Character, n: int, elements, L, *, check=None):
        super().__init__(elements, L, check=check)
        self.chi = chi
        self.n = n
        self.k = chi.group.k
        graded, ranks = _rho_graded(self)
        self.graded = graded
        self.rank = ranks

    @property
    def group(self) -> PermGroup:
        return self.chi.group

    def to_dict(self) -> dict:
        data = super().to_dict()
        ok, _ = self.is_lattice()
        data.update(
            {
                "k": self.k,
                "n": self.n,
                "group_order": len(self.group),
                "character": self.chi.label or "custom",
                "graded": self.graded,
                "lattice": ok,
                "ranks": None if self.rank is None else [self.rank[x] for x in self.elements],
            }
        )
        return data

    def to_dot(self) -> str:
        lines = ["digraph B {", "  rankdir=BT;", "  node [shape=plaintext];"]
        for x in self.elements:
            lines.append(f'  "{self._label(x)}";')
        if self.rank is not None:
            levels: dict[int, list] = {}
            for x in self.elements:
                levels.setdefault(self.rank[x], []).append(x)
            for r in sorted(levels):
                names = " ".join(f'"{self._label(x)}";' for x in levels[r])
                lines.append(f"  {{ rank=same; {names} }}")
        for a, b in self.covers():
            lines.append(f'  "{self._label(a)}" -> "{self._label(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _rho_graded(P: Poset) -> tuple[bool, dict | None]:
    """rho-gradedness: covers raise rho by one, minima share a rank, maxima share a rank."""
    if not len(P):
        return True, {}
    r = {x: rho(x) for x in P.elements}
    for a, b in P.covers():
        if r[b] != r[a] + 1:
            return False, None
    if len({r[x] for x in P.minimal()}) != 1 or len({r[x] for x in P.maximal()}) != 1:
        return False, None
    return True, r


def leq_matrix(G: PermGroup, xs: np.ndarray) -> np.ndarray:
    """``L[i, j]`` iff xs[i] <= g(xs[j]) componentwise for some g in G."""
    N, k = xs.shape
    L = np.zeros((N, N), dtype=bool)
    for gather in G.gather:
        ys = xs[:, gather]
        cmp = np.ones((N, N), dtype=bool)
        for j in range(k):
            cmp &= xs[:, j][:, None] <= ys[:, j][None, :]
        L |= cmp
    return L


def build(chi: Character, n: int, work_bound: int | None = None, *, enum_bound: int | None = None) -> BPoset:
    if not chi.one_dimensional:
        raise NotOneDimensionalError("B_chi(k,n) is built for one-dimensional characters")
    bound = WORK_BOUND if work_bound is None else work_bound
    els = canonical_index_set(chi, n, enum_bound)
    work = len(els) ** 2 * len(chi.group)
    if work > bound:
        raise BoundExceededError(f"|B|^2 |G| = {work} exceeds the work bound {bound}")
    xs = np.array(els, dtype=np.int64).reshape(len(els), chi.group.k)
    return BPoset(chi, n, els, leq_matrix(chi.group, xs))


def is_graded(P: BPoset) -> tuple[bool, dict | None]:
    return P.graded, P.rank


def _require_graded(P: BPoset) -> dict:
    if P.rank is None:
        raise ValueError("poset is not graded; rank-dependent data is undefined")
    return P.rank


def rank_generating(P: BPoset) -> tuple[int, ...]:
    """Coefficients of sum_x q^rank(x), lowest degree first."""
    ranks = _require_graded(P)
    if not ranks:
        return ()
    out = [0] * (max(ranks.values()) + 1)
    for r in ranks.values():
        out[r] += 1
    return tuple(out)


def is_rank_symmetric(P: BPoset) -> bool:
    coeffs = list(rank_generating(P))
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    return coeffs == coeffs[::-1]


def _pmul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def q_integer(n: int, step: int = 1) -> list[int]:
    """[n]_{q^step} = 1 + q^step + ... + q^{step(n-1)}."""
    out = [0] * (step * (n - 1) + 1)
    for i in range(n):
        out[step * i] = 1
    return out


def polya_rank_generating(G: PermGroup, k: int, n: int) -> tuple[int, ...]:
    """(1/|G|) sum_g prod_i ([n]_{q^i})^{c_i(g)}, lowest degree first."""
    if G.k != k:
        raise ValueError(f"group acts on {G.k} letters, not {k}")
    total = [0] * (k * (n - 1) + 1)
    for g in G.elements:
        term = [1]
        for i, c in enumerate(cycle_counts(g), start=1):
            for _ in range(c):
                term = _pmul(term, q_integer(n, i))
        for d, v in enumerate(term):
            total[d] += v
    out = []
    for v in total:
        q = Fraction(v, len(G))
        if q.denominator != 1:
            raise ArithmeticError("cycle-index sum is not integral")
        out.append(int(q))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def format_qpoly(coeffs: Sequence[int]) -> str:
    parts = []
    for d, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def witt_count(k: int, n: int) -> int:
    """(1/k) sum_{d | k} mu(d) n^{k/d}: the number of Lyndon words of length k over [n]."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    total = sum(mobius_mu(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0)
    return total // k


def projection_check(G: PermGroup, k: int, n: int, bound: int = 10**7) -> bool:
    """x <= y in [n]^k implies canonical(x) <= canonical(y) in B_{1_G}, with rho preserved."""
    if G.k != k:
        raise ValueError(f"group acts on {G.k} letters, not {k}")
    check_bound(n, k)
    if (n**k) ** 2 > bound:
        raise BoundExceededError(f"(n^k)^2 = {(n**k) ** 2} exceeds {bound}")
    P = build(trivial_character(G), n)
    xs = all_indices(n, k)
    pos = {x: i for i, x in enumerate(P.elements)}
    canon = [canonical_rep(G, tuple(int(v) for v in row)) for row in xs]
    ci = np.array([pos[c] for c in canon])
    if any(rho(c) != rho(tuple(row)) for c, row in zip(canon, xs.tolist())):
        return False
    comp = np.ones((len(xs), len(xs)), dtype=bool)
    for j in range(k):
        comp &= xs[:, j][:, None] <= xs[:, j][None, :]
    image = P.L[ci[:, None], ci[None, :]]
    return bool((image | ~comp).all())


def faithful_cyclic_character(k: int):
    """Character of C_k = <k 1 2 ... k-1> sending the generator to zeta_k."""
    from .character import char_from_generator_exponents
    from .permgrp import cyclic_generator, cyclic_group

    G = cyclic_group(k)
    return char_from_generator_exponents(G, k, {cyclic_generator(k): 1}, label=f"faithful C_{k}")


__all__ = [
    "Poset",
    "BPoset",
    "build",
    "is_graded",
    "rank_generating",
    "is_rank_symmetric",
    "polya_rank_generating",
    "format_qpoly",
    "witt_count",
    "projection_check",
    "faithful_cyclic_character",
    "leq_matrix",
    "q_integer",
]
