"""Invariant suites behind ``immvar verify``.

Each suite takes a seed and returns a :class:`SuiteResult`; failures carry a short
description of the first counterexample.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bposet import (
    build,
    faithful_cyclic_character,
    is_rank_symmetric,
    polya_rank_generating,
    projection_check,
    rank_generating,
    witt_count,
)
from .character import sign_character, table_character, trivial_character
from .chimatroid import interval_representing_tensor, is_chi_matroid, projected_support, support_is_matroid
from .complexes import closed_interval_complex, euler_characteristic, open_interval_complex, shellable
from .errors import ZeroProjectionError
from .immanant import Matrix, check_immanant_identity
from .permgrp import (
    act,
    alternating_group,
    canonical_rep,
    cyclic_group,
    orbit,
    stabilizer,
    symmetric_group,
    trivial_group,
    young_subgroup,
)
from .strata import chow_generators, hp_upper_bound, ideal_projection_check, stratum_equations, truncate
from .symtensor import (
    SymTensor,
    apply_idempotent,
    canonical_index_set,
    coords_in_basis,
    decomposable,
    dim_formula,
    rank_of_image,
)


@dataclass
class SuiteResult:
    name: str
    ok: bool = True
    checked: int = 0
    failure: str = ""
    notes: dict = field(default_factory=dict)

    def check(self, cond: bool, what: str) -> None:
        self.checked += 1
        if not cond and self.ok:
            self.ok = False
            self.failure = what

    def to_dict(self) -> dict:
        out = {"suite": self.name, "ok": self.ok, "checked": self.checked}
        if self.failure:
            out["failure"] = self.failure
        if self.notes:
            out["notes"] = self.notes
        return out


def _nonzero(rng: random.Random) -> int:
    return rng.choice([-3, -2, -1, 1, 2, 3])


def _s3_standard():
    G = symmetric_group(3)
    return table_character(G, [2 if g.is_identity() else (-1 if g.sign() == 1 else 0) for g in G], label="(2,1)")


def small_groups():
    """(name, group) pairs used across suites."""
    return [
        ("trivial_3", trivial_group(3)),
        ("S2", symmetric_group(2)),
        ("S3", symmetric_group(3)),
        ("A3", alternating_group(3)),
        ("C4", cyclic_group(4)),
        ("Y211", young_subgroup(4, (2, 1, 1))),
        ("Y22", young_subgroup(4, (2, 2))),
    ]


def suite_action(seed: int) -> SuiteResult:
    res = SuiteResult("action")
    for name, G in small_groups():
        for x in itertools.product(range(1, 3), repeat=G.k):
            orb = orbit(G, x)
            res.check(len(orb) * len(stabilizer(G, x)) == len(G), f"{name}: orbit-stabilizer at {x}")
            res.check(all(canonical_rep(G, y) == min(orb) for y in orb), f"{name}: canonical rep at {x}")
            for g in G:
                for h in G:
                    if act(g * h, x) != act(g, act(h, x)):
                        res.check(False, f"{name}: action law fails for {g}, {h}, {x}")
    return res


def suite_dimension(seed: int) -> SuiteResult:
    res = SuiteResult("dimension")
    chis = [("S3 (2,1)", _s3_standard())]
    for name, G in small_groups():
        chis.append((f"{name} trivial", trivial_character(G)))
        chis.append((f"{name} sign", sign_character(G)))
    chis.append(("C4 faithful", faithful_cyclic_character(4)))
    for label, chi in chis:
        for n in (1, 2, 3):
            d, r = dim_formula(chi, n), rank_of_image(chi, n)
            res.check(d == r, f"{label}, n={n}: formula {d} vs rank {r}")
            if chi.one_dimensional:
                res.check(len(canonical_index_set(chi, n)) == d, f"{label}, n={n}: basis size")
    return res


def suite_idempotent(seed: int) -> SuiteResult:
    res = SuiteResult("idempotent")
    rng = random.Random(seed)
    for label, chi in [("S3 (2,1)", _s3_standard()), ("A3 trivial", trivial_character(alternating_group(3))),
                       ("C4 faithful", faithful_cyclic_character(4)), ("S3 sign", sign_character(symmetric_group(3)))]:
        k, n = chi.group.k, 2
        for _ in range(10):
            v = SymTensor(n, k, {x: rng.randint(-3, 3) for x in itertools.product(range(1, n + 1), repeat=k)})
            pv = apply_idempotent(chi, v)
            res.check(apply_idempotent(chi, pv) == pv, f"{label}: P is not idempotent")
    return res


def suite_immanant(seed: int, samples: int = 20) -> SuiteResult:
    res = SuiteResult("immanant")
    rng = random.Random(seed)
    for label, chi in [("S3 (2,1)", _s3_standard()), ("S2 sign", sign_character(symmetric_group(2))),
                       ("C3 faithful", faithful_cyclic_character(3)), ("Y211 trivial", trivial_character(young_subgroup(4, (2, 1, 1))))]:
        k = chi.group.k
        for _ in range(samples):
            rows, cols = rng.randint(1, 3), rng.randint(1, 3)
            M = Matrix.of([[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(cols)] for _ in range(rows)])
            x = tuple(rng.randint(1, rows) for _ in range(k))
            y = tuple(rng.randint(1, cols) for _ in range(k))
            res.check(check_immanant_identity(chi, M, x, y), f"{label}: identity fails at {x}, {y}")
    return res


def suite_posets(seed: int) -> SuiteResult:
    res = SuiteResult("posets")
    for name, G in small_groups():
        for n in (2, 3):
            P = build(trivial_character(G), n)
            res.check(P.graded, f"{name}, n={n}: trivial-character poset not graded")
            res.check(rank_generating(P) == polya_rank_generating(G, G.k, n), f"{name}, n={n}: Polya mismatch")
            res.check(is_rank_symmetric(P), f"{name}, n={n}: not rank-symmetric")
            res.check(len(rank_generating(P)) - 1 == G.k * (n - 1), f"{name}, n={n}: wrong degree")
            res.check(P.maximal() == [(n,) * G.k] and P.minimal() == [(1,) * G.k], f"{name}, n={n}: extremes")
            if n ** G.k <= 81:
                res.check(projection_check(G, G.k, n), f"{name}, n={n}: projection not order preserving")
    for k in range(1, 7):
        for n in (1, 2, 3):
            if n**k > 800:
                continue
            size = len(canonical_index_set(faithful_cyclic_character(k), n))
            res.check(size == witt_count(k, n), f"witt({k},{n})")
    return res


def suite_matroid(seed: int) -> SuiteResult:
    res = SuiteResult("matroid")
    for k in (2, 3):
        for n in (2, 3):
            P = build(trivial_character(symmetric_group(k)), n)
            for x in P.elements:
                for y in P.elements:
                    if P.leq(x, y):
                        res.check(is_chi_matroid(P, P.interval(x, y)).is_matroid, f"S{k}, n={n}: interval [{x},{y}]")
                        supp = projected_support(P.chi, interval_representing_tensor(x, y, n))
                        res.check(supp == P.interval(x, y), f"S{k}, n={n}: box support of [{x},{y}]")
    return res


def suite_maximality(seed: int, samples: int = 25) -> SuiteResult:
    res = SuiteResult("maximality")
    rng = random.Random(seed)
    for name, G in small_groups():
        for n in (2, 3):
            chi = trivial_character(G)
            P = build(chi, n)
            for _ in range(samples):
                factors = [[_nonzero(rng) if rng.random() < 0.6 else 0 for _ in range(n)] for _ in range(G.k)]
                for f in factors:
                    if not any(f):
                        f[rng.randrange(n)] = _nonzero(rng)
                try:
                    verdict = support_is_matroid(chi, factors, P)
                except ZeroProjectionError:
                    res.check(False, f"{name}: trivial idempotent killed a decomposable tensor")
                    continue
                res.check(verdict.is_matroid, f"{name}, n={n}: support of {factors} is not a chi-matroid")
                top = tuple(max(i + 1 for i, c in enumerate(f) if c) for f in factors)
                res.check(verdict.maxima == (canonical_rep(G, top),), f"{name}, n={n}: maximum is not the argmax box corner")
    return res


def suite_strata(seed: int, samples: int = 10) -> SuiteResult:
    res = SuiteResult("strata")
    rng = random.Random(seed)
    for name, G, n in [("S2", symmetric_group(2), 3), ("A3", alternating_group(3), 2), ("Y211", young_subgroup(4, (2, 1, 1)), 2)]:
        k = G.k
        chi = trivial_character(G)
        P = build(chi, n)
        res.check(ideal_projection_check(G, k, n, P), f"{name}: ideal projection identity")
        res.check(max(d for _, d in chow_generators(G, k, n, P)) == k * (n - 1), f"{name}: top dimension")
        res.check(sum(hp_upper_bound(G, k, n)) == len(P), f"{name}: HP bound at q=1")
        for x in P.elements:
            eqs = stratum_equations(G, k, n, x, P)
            for _ in range(samples):
                A0 = Matrix.of([[_nonzero(rng) for _ in range(k)] for _ in range(n)])
                Ax = truncate(A0, x)
                v = apply_idempotent(chi, decomposable([Ax.column(j) for j in range(1, k + 1)]))
                coords = coords_in_basis(chi, v)
                point = {f"a_{i}_{j}": A0.entry(i, j) for i in range(1, n + 1) for j in range(1, k + 1)}
                values = {y: p.evaluate(point) for y, p in eqs.items()}
                res.check(
                    all(values[y] == coords.get(y, 0) for y in P.elements),
                    f"{name}: stratum equations of {x} disagree with the truncated point",
                )
                res.check(set(coords) <= set(P.principal_ideal(x)), f"{name}: support escapes the ideal of {x}")
    return res


def suite_topology(seed: int) -> SuiteResult:
    res = SuiteResult("topology")
    posets = [("S2 n=3", build(trivial_character(symmetric_group(2)), 3)),
              ("A3 n=3", build(trivial_character(alternating_group(3)), 3))]
    for label, P in posets:
        for x in P.elements:
            for y in P.elements:
                if P.lt(x, y):
                    mu = P.mobius(x, y)
                    chi = euler_characteristic(open_interval_complex(P, x, y))
                    res.check(mu == chi, f"{label}: mu{(x, y)}={mu} but reduced Euler characteristic {chi}")
    S3 = build(trivial_character(symmetric_group(3)), 3)
    for x in S3.elements:
        for y in S3.elements:
            if S3.leq(x, y):
                res.check(shellable(closed_interval_complex(S3, x, y)).status == "yes", f"S3: interval [{x},{y}] not shelled")
    return res


def suite_gale(seed: int) -> SuiteResult:
    """Sign character of S_k: chi-matroids on increasing tuples are exactly the matroids."""
    res = SuiteResult("gale")
    for k, n in [(2, 3), (2, 4)]:
        chi = sign_character(symmetric_group(k))
        P = build(chi, n)
        ground = P.elements
        for r in range(1, len(ground) + 1):
            for X in itertools.combinations(ground, r):
                res.check(is_chi_matroid(P, X).is_matroid == _basis_exchange(X), f"sign S{k}, n={n}: {X}")
    return res


def _basis_exchange(X) -> bool:
    bases = [frozenset(b) for b in X]
    bset = set(bases)
    for A in bases:
        for B in bases:
            for a in A - B:
                if not any((A - {a}) | {b} in bset for b in B - A):
                    return False
    return True


SUITES = {
    "action": suite_action,
    "dimension": suite_dimension,
    "idempotent": suite_idempotent,
    "immanant": suite_immanant,
    "posets": suite_posets,
    "matroid": suite_matroid,
    "maximality": suite_maximality,
    "strata": suite_strata,
    "topology": suite_topology,
    "gale": suite_gale,
}


def run_suite(name: str, seed: int) -> SuiteResult:
    return SUITES[name](seed)


__all__ = ["SUITES", "SuiteResult", "run_suite"]
