"""Exact scalars: rationals, cyclotomic numbers in Q(zeta_m), sparse multivariate polynomials.

Rationals are :class:`fractions.Fraction`.  A :class:`CycloNum` stores its
coefficients in the power basis ``1, z, ..., z^(phi(m)-1)`` of Q(zeta_m),
always reduced modulo the cyclotomic polynomial, so zero-testing is plain
equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .errors import ConductorMismatchError

Rat = Fraction
Scalar = Union[int, Fraction, "CycloNum"]


# -- integer polynomial helpers (coefficient lists, lowest degree first) --

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Division over Q; ``b`` must be nonzero."""
    rem = [Fraction(c) for c in a]
    _trim(rem)
    b = _trim(list(b))
    lead = Fraction(b[-1])
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        c = rem[-1] / lead
        quot[shift] = c
        for i, bc in enumerate(b):
            rem[shift + i] -= c * bc
        _trim(rem)
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first: Phi_6 -> (1, -1, 1)."""
    if m < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def mobius_mu(n: int) -> int:
    """Number-theoretic Moebius function."""
    if n < 1:
        raise ValueError("mu is defined on positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced coefficient vectors of z^j for 0 <= j < 2*phi(m)."""
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    for _ in range(max(2 * d, m)):
        rows.append(tuple(cur))
        # multiply by z and reduce with z^d = -(phi_0 + ... + phi_{d-1} z^{d-1})
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(d):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _reduce(m: int, coeffs: Sequence) -> tuple[Fraction, ...]:
    d = euler_phi(m)
    out = [Fraction(0)] * d
    table = None
    for j, c in enumerate(coeffs):
        if not c:
            continue
        if j < d:
            out[j] += c
            continue
        if j >= 2 * d and j >= m:
            j %= m
            if j < d:
                out[j] += c
                continue
        if table is None:
            table = _power_table(m)
        for i, t in enumerate(table[j]):
            if t:
                out[i] += c * t
    return tuple(Fraction(c) for c in out)


class CycloNum:
    """An element of Q(zeta_m) with exact rational coordinates."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable = (0,)):
        self.m = m
        self.coeffs = _reduce(m, list(coeffs))

    @classmethod
    def _raw(cls, m: int, coeffs: tuple[Fraction, ...]) -> CycloNum:
        obj = object.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, q, m: int = 1) -> CycloNum:
        return cls(m, [Fraction(q)])

    @classmethod
    def root_of_unity(cls, m: int, e: int) -> CycloNum:
        e %= m
        return cls(m, [0] * e + [1])

    # -- predicates and conversions --

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, M: int) -> CycloNum:
        """Same number written in Q(zeta_M); ``M`` must be a multiple of ``m``."""
        if M % self.m:
            raise ConductorMismatchError(f"cannot lift conductor {self.m} to {M}")
        step = M // self.m
        coeffs = [0] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[i * step] = c
        return CycloNum(M, coeffs)

    def normalized_trace(self) -> Fraction:
        """Tr(a)/[Q(zeta_m):Q]; independent of the conductor used to write ``a``."""
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                q = self.m // math.gcd(self.m, i)
                total += c * Fraction(mobius_mu(q), euler_phi(q))
        return total

    def conjugate(self) -> CycloNum:
        """Complex conjugate (z -> z^-1)."""
        coeffs = [0] * self.m
        for i, c in enumerate(self.coeffs):
            coeffs[(-i) % self.m] += c
        return CycloNum(self.m, coeffs)

    # -- arithmetic --

    def _coerce(self, other) -> CycloNum | None:
        if isinstance(other, CycloNum):
            if other.m != self.m:
                raise ConductorMismatchError(
                    f"conductors {self.m} and {other.m} differ; lift to lcm first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum._raw(self.m, (Fraction(other),) + (Fraction(0),) * (len(self.coeffs) - 1))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum._raw(self.m, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum._raw(self.m, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum._raw(self.m, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            c = o.coeffs[0]
            return CycloNum._raw(self.m, tuple(a * c for a in self.coeffs))
        if self.is_rational():
            c = self.coeffs[0]
            return CycloNum._raw(self.m, tuple(a * c for a in o.coeffs))
        return CycloNum(self.m, _poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        """Inverse via the extended Euclidean algorithm against Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloNum._raw(self.m, (1 / self.coeffs[0],) + self.coeffs[1:])
        # track s with s*a == r (mod Phi_m)
        r0, r1 = [Fraction(c) for c in cyclotomic_polynomial(self.m)], _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s = _sub(s0, _poly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        c = r1[0]
        return CycloNum(self.m, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = CycloNum.rational(1, self.m)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycloNum):
            if other.m == self.m:
                return self.coeffs == other.coeffs
            L = math.lcm(self.m, other.m)
            return self.lift(L).coeffs == other.lift(L).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.normalized_trace())

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycloNum({self.m}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_cyclo(self)


def _sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def root_of_unity(m: int, e: int) -> CycloNum:
    return CycloNum.root_of_unity(m, e)


def common_conductor(*values: CycloNum) -> list[CycloNum]:
    """Lift all values to the lcm of their conductors."""
    L = math.lcm(*(v.m for v in values))
    return [v.lift(L) for v in values]


def simplify(c):
    """Rational-valued CycloNums collapse to Fraction; ints become Fraction."""
    if isinstance(c, CycloNum):
        return c.coeffs[0] if c.is_rational() else c
    if isinstance(c, int):
        return Fraction(c)
    return c


def is_zero(c) -> bool:
    return c == 0


def format_rational(q) -> str:
    return str(Fraction(q))


def format_cyclo(c: CycloNum) -> str:
    """Polynomial in ``z_m``, highest power first: ``z_6 - 1``."""
    terms = [(i, a) for i, a in enumerate(c.coeffs) if a]
    if not terms:
        return "0"
    var = f"z_{c.m}"
    parts = []
    for i, a in reversed(terms):
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        parts.append(_signed_term(a, mono))
    return _join_terms(parts)


def format_scalar(c) -> str:
    c = simplify(c)
    if isinstance(c, CycloNum):
        return format_cyclo(c)
    return format_rational(c)


def _signed_term(a: Fraction, mono: str) -> tuple[bool, str]:
    neg = a < 0
    mag = -a if neg else a
    if not mono:
        return neg, str(mag)
    if mag == 1:
        return neg, mono
    return neg, f"{mag}*{mono}"


def _join_terms(parts: list[tuple[bool, str]]) -> str:
    out = ""
    for idx, (neg, body) in enumerate(parts):
        if idx == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def parse_scalar(value, m: int = 1):
    """Read a JSON scalar: ``"p/q"``, an int, or ``{"m": .., "coeffs": [..]}``."""
    if isinstance(value, dict):
        mm = int(value.get("m", m))
        c = CycloNum(mm, [Fraction(str(v)) for v in value["coeffs"]])
        return c.lift(m) if m % mm == 0 and mm != m else c
    if isinstance(value, (list, tuple)):
        return CycloNum(m, [Fraction(str(v)) for v in value])
    if isinstance(value, float):
        raise ValueError("floating-point scalars are not accepted; use 'p/q' strings")
    return Fraction(str(value))


def scalar_to_json(c):
    c = simplify(c)
    if isinstance(c, CycloNum):
        return {"m": c.m, "coeffs": [str(v) for v in c.coeffs]}
    return str(c)


# -- sparse multivariate polynomials --

class MVPoly:
    """Sparse polynomial over exact scalars in a fixed, ordered list of variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        self.terms: dict[tuple[int, ...], object] = {}
        nv = len(self.variables)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nv:
                raise ValueError(f"exponent vector {exps} does not match {nv} variables")
            c = simplify(c)
            if c != 0:
                self.terms[exps] = c

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> MVPoly:
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exps: 1})

    @classmethod
    def const(cls, variables: Sequence[str], c) -> MVPoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def zero(cls, variables: Sequence[str]) -> MVPoly:
        return cls(variables)

    def _lift(self, other) -> MVPoly | None:
        if isinstance(other, MVPoly):
            if other.variables != self.variables:
                raise ValueError("polynomials over different variable lists")
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            return MVPoly.const(self.variables, other)
        return None

    def _combine(self, other, sign: int) -> MVPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + (c if sign > 0 else -c)
            v = simplify(v)
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return _from_clean(self.variables, out)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._combine(o, 1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._combine(o, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return _from_clean(self.variables, {e: -c for e, c in self.terms.items()})

    def scale(self, c) -> MVPoly:
        c = simplify(c)
        if c == 0:
            return MVPoly.zero(self.variables)
        out = {}
        for e, v in self.terms.items():
            w = simplify(v * c)
            if w != 0:
                out[e] = w
        return _from_clean(self.variables, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        clean = {}
        for e, c in out.items():
            c = simplify(c)
            if c != 0:
                clean[e] = c
        return _from_clean(self.variables, clean)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> MVPoly:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        out = MVPoly.const(self.variables, 1)
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point):
        """Value at ``point`` (mapping name -> scalar, or sequence aligned with variables)."""
        if isinstance(point, Mapping):
            vals = [point[v] for v in self.variables]
        else:
            vals = list(point)
            if len(vals) != len(self.variables):
                raise ValueError("point has the wrong number of coordinates")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, p in zip(vals, e):
                if p:
                    t = t * v**p
            total = total + t
        return simplify(total)

    def subs(self, values: Mapping[str, object]) -> MVPoly:
        """Substitute scalars for some variables; the variable list is kept."""
        idx = {v: i for i, v in enumerate(self.variables)}
        fixed = {idx[name]: val for name, val in values.items()}
        out: dict = {}
        for e, c in self.terms.items():
            t = c
            ne = list(e)
            for i, val in fixed.items():
                if e[i]:
                    t = t * val ** e[i]
                    ne[i] = 0
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + t
        return MVPoly(self.variables, out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, MVPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction, CycloNum)):
            other = simplify(other)
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * len(self.variables): other}
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MVPoly({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if p == 1 else f"{v}^{p}" for v, p in zip(self.variables, e) if p
            )
            if isinstance(c, CycloNum):
                parts.append((False, f"({format_cyclo(c)})" + (f"*{mono}" if mono else "")))
            else:
                parts.append(_signed_term(c, mono))
        return _join_terms(parts)


def _from_clean(variables: tuple, terms: dict) -> MVPoly:
    obj = object.__new__(MVPoly)
    obj.variables = variables
    obj.terms = terms
    return obj


# -- exact linear algebra --

def sparse_rank(rows: Iterable[Mapping]) -> int:
    """Rank of a matrix given as sparse rows ``{column: scalar}``, by exact elimination."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        r = {c: v for c, v in row.items() if v != 0}
        while r:
            col = min(r)
            if col not in pivots:
                lead = r[col]
                pivots[col] = {c: simplify(v / lead) for c, v in r.items()}
                rank += 1
                break
            factor = r[col]
            for c, v in pivots[col].items():
                nv = simplify(r.get(c, 0) - factor * v)
                if nv == 0:
                    r.pop(c, None)
                else:
                    r[c] = nv
    return rank
