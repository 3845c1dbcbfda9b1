"""Exact check that quantization commutes with reduction for rank-one group actions.

Instances are instance documents given as dicts, JSON strings, or the name of a built-in
catalog entry. Exact values come back as fractions.Fraction.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping

from ._rrloc import ComputationError, Error, InputError
from . import _rrloc

__all__ = [
    "ComputationError",
    "Error",
    "InputError",
    "catalog",
    "catalog_names",
    "character",
    "invariant_dimension",
    "reduced",
    "residues",
    "verify",
]


def catalog_names() -> list[str]:
    return [name for name, _, _ in _rrloc.catalog_entries()]


def catalog(name: str, k: int | None = None) -> dict[str, Any]:
    return json.loads(_rrloc.catalog_json(name, k))


def _document(instance: str | Mapping[str, Any], k: int | None) -> tuple[str, int | None]:
    """Catalog names take k as the entry parameter; documents take it as a tensor power."""
    if isinstance(instance, Mapping):
        return json.dumps(instance), k
    if isinstance(instance, str) and instance.lstrip().startswith("{"):
        return instance, k
    if isinstance(instance, str):
        return _rrloc.catalog_json(instance, k), None
    raise TypeError("instance must be a dict, a JSON string or a catalog name")


def verify(instance: str | Mapping[str, Any], k: int | None = None, degree_bound: int | None = None) -> dict[str, Any]:
    """Full report as a dict; exact values stay strings such as "1/2"."""
    source = instance if isinstance(instance, str) and not instance.lstrip().startswith("{") else ""
    return json.loads(_rrloc.verify_json(*_document(instance, k), degree_bound, source))


def character(instance: str | Mapping[str, Any], k: int | None = None, degree_bound: int | None = None) -> dict[int, int]:
    return dict(_rrloc.character(*_document(instance, k), degree_bound))


def invariant_dimension(instance: str | Mapping[str, Any], k: int | None = None) -> Fraction:
    return Fraction(_rrloc.rr_invariant(*_document(instance, k)))


def reduced(instance: str | Mapping[str, Any], k: int | None = None) -> dict[str, Any]:
    main, corrections, total = _rrloc.rr_reduced(*_document(instance, k))
    return {
        "main_term": Fraction(main),
        "corrections": {order: Fraction(value) for order, value in corrections},
        "total": Fraction(total),
    }


def residues(instance: str | Mapping[str, Any], k: int | None = None) -> list[dict[str, Any]]:
    return json.loads(_rrloc.residues_json(*_document(instance, k)))
