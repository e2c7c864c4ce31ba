"""Fiber algebras, discriminants and Grothendieck data of Hopf algebras over central Hopf subalgebras."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import FiberlabError  # noqa: E402
from .presentation import HopfPresentation, parse_presentation  # noqa: E402

__all__ = ["__version__", "FiberlabError", "HopfPresentation", "parse_presentation"]
