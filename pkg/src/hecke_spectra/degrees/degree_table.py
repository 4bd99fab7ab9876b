# src/hecke_spectra/degrees/degree_table.py
"""
Loader for the versioned table of cuspidal unipotent degrees.

Polynomials in q are written as products of tokens:
    {"scalar": "1/6", "q_power": 1, "phi": {"1": 2, "6": 1},
     "q_minus_one": {"2": 1}, "q_minus_one_ratio": [[6, 2]]}
``phi`` multiplies cyclotomic polynomials, ``q_minus_one`` multiplies (q^d - 1)^e and each
``[d, e]`` in ``q_minus_one_ratio`` multiplies (q^d - 1)/(q^e - 1), which must divide exactly.
"""
import json
import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, List

from ..algebra.unipoly import UniPoly
from ..algebra.units import as_fraction
from ..errors import InvalidParameter, JobFileError
from .group_orders import q_minus_one
from .volumes import CuspidalDatum

_logger = logging.getLogger(__name__)

# --- Configuration ---
BASE_DIR = os.path.dirname(os.path.abspath(__file__))
DEFAULT_DEGREE_TABLE = os.path.join(BASE_DIR, "..", "..", "..", "data", "degree_table.json")

TOKEN_KEYS = {"scalar", "q_power", "phi", "q_minus_one", "q_minus_one_ratio"}


def _ratio(d: int, e: int) -> UniPoly:
    if e < 1 or d % e != 0:
        raise InvalidParameter(f"(q^{d} - 1)/(q^{e} - 1) is not a polynomial.")
    return UniPoly.from_dict({e * i: 1 for i in range(d // e)}, "q")


def parse_order_tokens(tokens: Dict[str, Any]) -> UniPoly:
    unknown = set(tokens) - TOKEN_KEYS
    if unknown:
        raise InvalidParameter(f"Unknown polynomial tokens {sorted(unknown)}.")
    result = UniPoly.constant(as_fraction(str(tokens.get("scalar", "1"))), "q")
    result = result * UniPoly.monomial(int(tokens.get("q_power", 0)), 1, "q")
    for n, e in tokens.get("phi", {}).items():
        result = result * UniPoly.cyclotomic(int(n), "q") ** int(e)
    for d, e in tokens.get("q_minus_one", {}).items():
        result = result * q_minus_one(int(d)) ** int(e)
    for d, e in tokens.get("q_minus_one_ratio", []):
        result = result * _ratio(int(d), int(e))
    return result


@dataclass(frozen=True)
class DegreeTable:
    version: str
    entries: Dict[str, CuspidalDatum]

    def get(self, label: str) -> CuspidalDatum:
        if label not in self.entries:
            raise InvalidParameter(f"No degree-table entry {label!r}.", available=sorted(self.entries))
        return self.entries[label]

    def labels(self) -> List[str]:
        return sorted(self.entries)


def _parse_entry(data: Dict[str, Any]) -> CuspidalDatum:
    label = data.get("label")
    if not label:
        raise InvalidParameter("Degree-table entries must have a 'label'.")
    try:
        return CuspidalDatum(
            quotient_order=parse_order_tokens(data.get("quotient_order", {})),
            quotient_dim=int(data.get("quotient_dim", 0)),
            deg_sigma=parse_order_tokens(data.get("degree", {})),
            omega_p=int(data.get("omega", 1)),
            label=label,
        )
    except (TypeError, ValueError) as e:
        raise InvalidParameter(f"Error parsing degree-table entry {label!r}: {e}")


def load_degree_table(file_path: str = DEFAULT_DEGREE_TABLE) -> DegreeTable:
    if not os.path.exists(file_path):
        raise JobFileError(f"Degree table not found: {file_path}", path=file_path)
    with open(file_path, "r", encoding="utf-8") as f:
        try:
            raw = json.load(f)
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            raise JobFileError(f"Error decoding JSON from {file_path}: {e}", path=file_path)
    if not isinstance(raw, dict) or not isinstance(raw.get("entries"), list):
        raise JobFileError(f"Degree table {file_path} must be an object with an 'entries' list.", path=file_path)

    entries = {}
    for item in raw["entries"]:
        datum = _parse_entry(item)
        if datum.label in entries:
            raise InvalidParameter(f"Duplicate degree-table label {datum.label!r}.")
        entries[datum.label] = datum
    _logger.debug("Loaded %d degree-table entries from %s", len(entries), file_path)
    return DegreeTable(str(raw.get("version", "1")), entries)
