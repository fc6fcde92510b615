"""
Input parsing and output encoding.

Matroids arrive as JSON (bases, circuits or a Steiner system), ideals as JSON
exponent vectors or as generator strings such as ``"af, cd, bde, bce"`` or
``"x1*x6, x3*x4"``. Every input may be a file path or the text itself.
"""

import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

from symbolique.core.ideal import MonomialIdeal, minimalize
from symbolique.core.matroid import (
    Matroid,
    matroid_from_bases,
    matroid_from_circuits,
    steiner_matroid,
)
from symbolique.core.monomial import Monomial
from symbolique.core.subsets import elements, from_elements
from symbolique.exceptions import InputFormatError
from symbolique.utils import Unbounded

logger = logging.getLogger("symbolique")

_INDEXED_VARIABLE = re.compile(r"x(\d+)(?:\^(\d+))?")
_LETTER_VARIABLE = re.compile(r"([a-z])(?:\^(\d+))?")
_HAS_INDEXED = re.compile(r"x\d")


def read_source(source: str) -> str:
    """Contents of `source` if it names an existing file, else `source` itself."""
    try:
        path = Path(source)
        if path.is_file():
            return path.read_text()
    except OSError:
        pass
    return source


def load_json(source: str) -> Any:
    text = read_source(source)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"Invalid JSON input: {e}") from e


def _subset_list(raw: Any, what: str) -> List[int]:
    if not isinstance(raw, list):
        raise InputFormatError(f"'{what}' must be a list of index lists")
    family = []
    for entry in raw:
        if not isinstance(entry, list) or not all(isinstance(i, int) for i in entry):
            raise InputFormatError(f"Malformed entry in '{what}': {entry!r}")
        if any(i < 0 for i in entry):
            raise InputFormatError(f"Negative index in '{what}': {entry!r}")
        family.append(from_elements(entry))
    return family


def _require_int(data: Dict[str, Any], key: str) -> int:
    value = data.get(key)
    if not isinstance(value, int):
        raise InputFormatError(f"Missing or non-integer '{key}'")
    return value


def matroid_from_json(data: Any) -> Matroid:
    """
    Build a matroid from one of the JSON shapes.

    Accepted shapes::

        {"n": 7, "bases": [[0,1,2], ...]}
        {"n": 6, "circuits": [[0,5], ...]}
        {"n": 7, "d": 2, "t": 3, "blocks": [[0,1,2], ...]}
    """
    if not isinstance(data, dict):
        raise InputFormatError("Matroid input must be a JSON object")
    n = _require_int(data, "n")
    if "bases" in data:
        return matroid_from_bases(n, _subset_list(data["bases"], "bases"))
    if "circuits" in data:
        return matroid_from_circuits(n, _subset_list(data["circuits"], "circuits"))
    if "blocks" in data:
        return steiner_matroid(
            n,
            _require_int(data, "d"),
            _require_int(data, "t"),
            _subset_list(data["blocks"], "blocks"),
        )
    raise InputFormatError("Matroid input needs 'bases', 'circuits' or 'blocks'")


def matroid_to_json(matroid: Matroid) -> Dict[str, Any]:
    return {"n": matroid.n, "bases": [elements(b) for b in matroid.bases]}


def ideal_from_json(data: Any) -> MonomialIdeal:
    """Build an ideal from ``{"n": 6, "generators": [[1,0,0,0,0,1], ...]}``."""
    if not isinstance(data, dict):
        raise InputFormatError("Ideal input must be a JSON object")
    n = _require_int(data, "n")
    raw = data.get("generators")
    if not isinstance(raw, list):
        raise InputFormatError("Ideal input needs a 'generators' list")
    gens = []
    for vector in raw:
        if not isinstance(vector, list) or len(vector) != n:
            raise InputFormatError(f"Exponent vector {vector!r} does not have length {n}")
        if not all(isinstance(e, int) and e >= 0 for e in vector):
            raise InputFormatError(f"Exponent vector {vector!r} is not non-negative integers")
        gens.append(Monomial(tuple(vector)))
    return minimalize(gens, n)


def _parse_term(term: str, indexed: bool) -> Dict[int, int]:
    pattern = _INDEXED_VARIABLE if indexed else _LETTER_VARIABLE
    body = term.replace("*", "").replace(" ", "")
    if body == "1":
        return {}
    exponents: Dict[int, int] = {}
    position = 0
    while position < len(body):
        match = pattern.match(body, position)
        if not match:
            raise InputFormatError(f"Cannot parse monomial '{term}' at '{body[position:]}'")
        if indexed:
            index = int(match.group(1)) - 1
            if index < 0:
                raise InputFormatError(f"Variables are numbered from x1 in '{term}'")
        else:
            index = ord(match.group(1)) - ord("a")
        exponents[index] = exponents.get(index, 0) + int(match.group(2) or 1)
        position = match.end()
    return exponents


def parse_generators(text: str, n: Optional[int] = None) -> MonomialIdeal:
    """
    Parse a comma-separated list of monomials.

    Letters a..z name variables 0..25; ``x1..xn`` name variables 0..n-1.
    Exponents are written ``a^2`` or ``x3^2``; ``*`` separators are optional.

    Args:
        text: The generator list, e.g. ``"af, cd, bde, bce"``.
        n: Number of variables. Defaults to the largest variable seen.

    Returns:
        The minimalized ideal.
    """
    indexed = bool(_HAS_INDEXED.search(text))
    terms = [t.strip() for t in text.split(",") if t.strip()]
    parsed = [_parse_term(t, indexed) for t in terms]
    largest = max((max(p) for p in parsed if p), default=-1)
    if n is None:
        n = largest + 1
    if largest >= n:
        raise InputFormatError(f"Variable {largest + 1} exceeds n={n}")
    if n < 1:
        raise InputFormatError("Cannot infer the number of variables")
    gens = []
    for p in parsed:
        exps = [0] * n
        for index, e in p.items():
            exps[index] = e
        gens.append(Monomial(tuple(exps)))
    return minimalize(gens, n)


def load_ideal(source: str, n: Optional[int] = None) -> MonomialIdeal:
    """Ideal from a file or inline text, either JSON or a generator string."""
    text = read_source(source).strip()
    if text.startswith("{"):
        return ideal_from_json(load_json(text))
    ideal = parse_generators(text, n)
    logger.debug("Parsed %d generators in %d variables", len(ideal), ideal.n)
    return ideal


def ideal_to_json(ideal: MonomialIdeal) -> Dict[str, Any]:
    return {"n": ideal.n, "generators": [list(g.exponents) for g in ideal.gens]}


def fraction_to_json(value: Fraction) -> Dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def to_jsonable(value: Any) -> Any:
    """Recursively convert report values into JSON-compatible data."""
    if isinstance(value, Fraction):
        return fraction_to_json(value)
    if isinstance(value, Unbounded):
        return value.value
    if isinstance(value, Monomial):
        return list(value.exponents)
    if isinstance(value, MonomialIdeal):
        return ideal_to_json(value)
    if isinstance(value, Matroid):
        return matroid_to_json(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value
