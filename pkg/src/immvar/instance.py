"""Instance files: a JSON description of (G, chi, n) plus optional seed and bounds.

Example::

    {
      "k": 3, "n": 2,
      "generators": ["213", "231"],
      "character": {"type": "table", "m": 1, "values": {"123": 2, "132": 0, "213": 0,
                                                      "231": -1, "312": -1, "321": 0}},
      "seed": 7
    }

``generators`` may be replaced by ``"young": [2, 1, 1]``.  Character types are
``trivial``, ``sign``, ``generator-exponents`` (``m`` and ``exponents``, a map from
generator to exponent of zeta_m) and ``table`` (``m`` and ``values``, a list aligned
with the lex-sorted group elements or a map from element to value).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .character import (
    Character,
    char_from_generator_exponents,
    sign_character,
    table_character,
    trivial_character,
)
from .errors import ImmvarError
from .exactalg import parse_scalar
from .permgrp import Perm, PermGroup, closure, young_subgroup

BOUND_KEYS = ("enumeration", "work", "relabel", "facet_cap", "step_budget")


class SpecError(ValueError):
    """Malformed instance; the message names the offending field."""


@dataclass
class Instance:
    k: int
    n: int
    group: PermGroup
    chi: Character
    seed: int = 0
    bounds: dict = field(default_factory=dict)

    def bound(self, key: str, default):
        return self.bounds.get(key, default)


def _field(data: dict, key: str, where: str = ""):
    if key not in data:
        raise SpecError(f"{where}{key}: required field missing")
    return data[key]


def _posint(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise SpecError(f"{name}: expected a positive integer, got {value!r}")
    return value


def _perm(text, name: str, k: int) -> Perm:
    try:
        p = Perm.parse(text if isinstance(text, str) else list(text))
    except (ImmvarError, ValueError, TypeError) as exc:
        raise SpecError(f"{name}: {exc}") from None
    if len(p) != k:
        raise SpecError(f"{name}: {p} is not a permutation of [{k}]")
    return p


def parse_instance(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise SpecError("instance: expected a JSON object")
    k = _posint(_field(data, "k"), "k")
    n = _posint(_field(data, "n"), "n")
    if "young" in data:
        try:
            G = young_subgroup(k, [int(a) for a in data["young"]])
        except (ValueError, TypeError) as exc:
            raise SpecError(f"young: {exc}") from None
    else:
        gens = data.get("generators", [])
        if not isinstance(gens, list):
            raise SpecError("generators: expected a list of one-line permutations")
        G = closure(k, [_perm(g, f"generators[{i}]", k) for i, g in enumerate(gens)])
    spec = data.get("character", {"type": "trivial"})
    chi = parse_character(G, spec)
    seed = data.get("seed", 0)
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise SpecError(f"seed: expected an integer, got {seed!r}")
    bounds = data.get("bounds", {})
    if not isinstance(bounds, dict):
        raise SpecError("bounds: expected an object")
    for key, val in bounds.items():
        if key not in BOUND_KEYS:
            raise SpecError(f"bounds.{key}: unknown bound (known: {', '.join(BOUND_KEYS)})")
        _posint(val, f"bounds.{key}")
    return Instance(k, n, G, chi, seed, dict(bounds))


def parse_character(G: PermGroup, spec) -> Character:
    if isinstance(spec, str):
        spec = {"type": spec}
    if not isinstance(spec, dict):
        raise SpecError("character: expected an object with a 'type' field")
    kind = _field(spec, "type", "character.")
    try:
        if kind == "trivial":
            return trivial_character(G)
        if kind == "sign":
            return sign_character(G)
        if kind == "generator-exponents":
            m = _posint(_field(spec, "m", "character."), "character.m")
            exps = _field(spec, "exponents", "character.")
            if not isinstance(exps, dict):
                raise SpecError("character.exponents: expected a map from generator to exponent")
            gen_exps = {_perm(g, f"character.exponents[{g!r}]", G.k): int(e) for g, e in exps.items()}
            return char_from_generator_exponents(G, m, gen_exps, label=spec.get("label", ""))
        if kind == "table":
            m = _posint(spec.get("m", 1), "character.m")
            raw = _field(spec, "values", "character.")
            if isinstance(raw, dict):
                values = {_perm(g, f"character.values[{g!r}]", G.k): parse_scalar(v, m) for g, v in raw.items()}
            elif isinstance(raw, list):
                values = [parse_scalar(v, m) for v in raw]
            else:
                raise SpecError("character.values: expected a list or an object")
            return table_character(G, values, m, label=spec.get("label", ""))
    except SpecError:
        raise
    except (ImmvarError, ValueError, KeyError, TypeError) as exc:
        raise SpecError(f"character: {exc}") from None
    raise SpecError(f"character.type: unknown type {kind!r} (trivial, sign, generator-exponents, table)")


def load_instance(path: str | Path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_instance(data)
