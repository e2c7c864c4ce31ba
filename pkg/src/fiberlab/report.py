"""Check records and exact serialization shared by the analysis layers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exactmath import Matrix, Poly, Scalar
from .presentation.central import CElem, CentralCharacter

__all__ = ["Check", "PASS", "FAIL", "SKIPPED", "exact", "PLUMBING"]

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
PLUMBING = "plumbing"


@dataclass
class Check:
    name: str
    status: str
    data: dict = field(default_factory=dict)
    paper_anchor: str = PLUMBING

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "data": exact(self.data),
            "paper_anchor": self.paper_anchor,
        }


def exact(x):
    """Convert values to JSON-ready data; exact numbers become strings."""
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, CentralCharacter) else k.label(): exact(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [exact(v) for v in x]
        return sorted(items, key=str) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, (Scalar, CElem, Poly, Fraction)):
        return str(x)
    if isinstance(x, CentralCharacter):
        return x.label()
    if isinstance(x, Matrix):
        return [[str(v) for v in r] for r in x.data]
    if isinstance(x, np.ndarray):
        return exact(x.tolist())
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)
