"""The subgroup of characters with one-dimensional fiber modules, its cosets,
and winding orbits computed from restricted characters."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..errors import CertificationFailed, PartitionMismatch
from ..exactmath import Scalar, root_of_unity
from ..findim import one_dim_rep_count
from ..presentation import HopfPresentation
from ..presentation.central import TORSION, CentralCharacter, convolve, inverse_char
from ..presentation.reps import word_matrix
from .fusion import fiber_irreps

__all__ = ["OrbitData", "subgroup_I", "coset_orbit_check", "restricted_characters", "recognize_value"]

RECOGNIZE_TOL = 1e-6


@dataclass(frozen=True)
class OrbitData:
    subgroup_I: tuple[CentralCharacter, ...]
    cosets: tuple[frozenset, ...] = ()
    orbit_map: dict = field(default_factory=dict)  # character -> orbit index
    orbits: tuple[frozenset, ...] = ()
    closed: bool = True
    free_directions: tuple[str, ...] = ()


def subgroup_I(pres: HopfPresentation, samples=None) -> OrbitData:
    """Sampled characters whose fiber has a one-dimensional module."""
    space = pres.character_space(samples)
    ident = pres.identity_character()
    members = [chi for chi in space.sampled() if chi == ident or one_dim_rep_count(pres.build_fiber(chi)) > 0]
    torsion = set(space.torsion_characters())
    part = [c for c in members if c in torsion]
    closed = all(convolve(a, b, pres) in part for a in part for b in part) and all(
        inverse_char(a, pres) in part for a in part
    )
    return OrbitData(tuple(members), closed=closed)


def recognize_value(pres: HopfPresentation, index: int, z: complex) -> Scalar:
    """Exact value of central symbol ``index`` near the complex number ``z``."""
    sym = pres.central.symbols[index]
    if sym.kind == TORSION:
        for e in range(sym.order):
            v = root_of_unity(sym.order, e)
            if abs(complex(v) - z) < RECOGNIZE_TOL:
                return v
        raise CertificationFailed(f"{sym.name} acts by {z}, not a root of unity of order {sym.order}")
    q = Fraction(z.real).limit_denominator(10**6)
    if abs(z - float(q)) > RECOGNIZE_TOL:
        raise CertificationFailed(f"{sym.name} acts by unrecognized value {z}")
    return Scalar.from_rational(q)


def restricted_characters(pres: HopfPresentation, members, seed: int = 0) -> list[CentralCharacter]:
    """Restrictions to C of the characters of H found as 1-dim fiber modules."""
    out = []
    for chi in members:
        _, reps = fiber_irreps(pres, chi, seed)
        for rep in reps:
            if rep.dim != 1:
                continue
            vals = []
            for i, s in enumerate(pres.central.symbols):
                z = complex(np.asarray(word_matrix(pres, rep.numeric(), s.word))[0, 0])
                vals.append(recognize_value(pres, i, z))
            psi = CentralCharacter(pres.central.names, tuple(vals))
            if psi not in out:
                out.append(psi)
    return out


def _partition(classes) -> set[frozenset]:
    return {frozenset(c) for c in classes}


def coset_orbit_check(pres: HopfPresentation, seed: int = 0) -> OrbitData:
    """Left cosets of the subgroup equal right-winding orbits on torsion characters."""
    space = pres.character_space()
    chars = space.torsion_characters()
    data = subgroup_I(pres)
    I = [c for c in data.subgroup_I if c in chars]
    restricted = restricted_characters(pres, I, seed)
    left = _partition({convolve(m, g, pres) for g in I} for m in chars)
    right = _partition({convolve(g, m, pres) for g in I} for m in chars)
    orbits_r = _partition({convolve(m, psi, pres) for psi in restricted} for m in chars)
    orbits_l = _partition({convolve(psi, m, pres) for psi in restricted} for m in chars)
    if left != orbits_r:
        raise PartitionMismatch(
            f"left cosets {sorted(map(_fmt, left))} differ from right-winding orbits {sorted(map(_fmt, orbits_r))}"
        )
    if right != orbits_l:
        raise PartitionMismatch("right cosets differ from left-winding orbits")
    ordered = sorted(left, key=lambda s: min(chars.index(c) for c in s))
    omap = {c: i for i, s in enumerate(ordered) for c in s}
    free = tuple(pres.central.symbols[i].name for i in pres.central.free_indices)
    return OrbitData(tuple(data.subgroup_I), tuple(ordered), omap, tuple(ordered), data.closed, free)


def _fmt(s) -> str:
    return "{" + "; ".join(sorted(c.label() for c in s)) + "}"
