# src/hecke_spectra/algebra/serialization.py
"""Parsing of the canonical text form produced by ``str(FactoredFunction)``."""
import json
import re
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..errors import TextFormatError
from .factored import FactoredFunction
from .units import Unit, as_fraction

_RATIONAL = r"-?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(rf"^({_RATIONAL})$")
_ZETA_RE = re.compile(rf"^zeta\^\(({_RATIONAL})\)$")
_V_RE = re.compile(rf"^v\^\(({_RATIONAL})\)$")
_THETA_RE = re.compile(r"^theta\[(-?\d+(?:,-?\d+)*)\]$")
_FACTOR_RE = re.compile(r"^\(1 - ([^()]*(?:\([^()]*\)[^()]*)*)\)\^(-?\d+)$")


def _split_top_level(text: str) -> Sequence[str]:
    parts, depth, current = [], 0, []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith(" * ", i):
            parts.append("".join(current).strip())
            current = []
            i += 3
            continue
        current.append(ch)
        i += 1
    parts.append("".join(current).strip())
    return parts


def _parse_monomial(tokens: Sequence[str]) -> Tuple[Fraction, Fraction, Optional[Tuple[int, ...]]]:
    phase, vexp, x = Fraction(0), Fraction(0), None
    for token in tokens:
        if m := _ZETA_RE.match(token):
            phase += as_fraction(m.group(1))
        elif m := _V_RE.match(token):
            vexp += as_fraction(m.group(1))
        elif m := _THETA_RE.match(token):
            if x is not None:
                raise TextFormatError(f"More than one character in {' '.join(tokens)!r}.")
            x = tuple(int(c) for c in m.group(1).split(","))
        else:
            raise TextFormatError(f"Unrecognized token {token!r}.")
    return phase, vexp, x


def parse_factored(text: str, rank: Optional[int] = None) -> FactoredFunction:
    """
    Parses ``c * v^(k) * theta[x] * (1 - zeta^(p/q) v^(a/b) theta[x])^m``. The rank is taken
    from the theta tokens when ``rank`` is not given; a text without characters is rank 0.
    """
    text = text.strip()
    if text == "0":
        return FactoredFunction.zero(rank or 0)
    if not text:
        raise TextFormatError("Empty factored-function text.")

    mag, sign = Fraction(1), Fraction(1)
    unit_tokens, raw = [], []
    for part in _split_top_level(text):
        if m := _SCALAR_RE.match(part):
            value = as_fraction(m.group(1))
            if value == 0:
                raise TextFormatError("A zero scalar may only appear as the whole text '0'.")
            mag *= abs(value)
            sign *= 1 if value > 0 else -1
        elif m := _FACTOR_RE.match(part):
            phase, vexp, x = _parse_monomial(m.group(1).split())
            raw.append((phase, vexp, x, int(m.group(2))))
        else:
            unit_tokens.append(part)
    phase, vexp, unit_x = _parse_monomial(unit_tokens)

    ranks = {len(x) for _, _, x, _ in raw if x is not None}
    if unit_x is not None:
        ranks.add(len(unit_x))
    if rank is not None:
        ranks.add(rank)
    if len(ranks) > 1:
        raise TextFormatError(f"Inconsistent character lengths {sorted(ranks)} in {text!r}.")
    n = ranks.pop() if ranks else 0

    if sign < 0:
        phase += Fraction(1, 2)
    unit = Unit(mag, phase, vexp, unit_x if unit_x is not None else (0,) * n)
    factors = [(p, k, x if x is not None else (0,) * n, mult) for p, k, x, mult in raw]
    try:
        return FactoredFunction.from_factors(factors, n, unit)
    except ValueError as e:
        raise TextFormatError(f"Invalid factored-function text {text!r}: {e}")


def dumps_factored(f: FactoredFunction) -> str:
    return json.dumps(f.to_dict(), sort_keys=True)


def loads_factored(payload: str) -> FactoredFunction:
    try:
        return FactoredFunction.from_dict(json.loads(payload))
    except (KeyError, TypeError, json.JSONDecodeError) as e:
        raise TextFormatError(f"Malformed factored-function JSON: {e}")
