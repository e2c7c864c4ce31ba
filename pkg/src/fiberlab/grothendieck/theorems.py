"""Consolidated checks of the structural results at sampled characters."""

from __future__ import annotations

from ..cayley import lowest_level, modified_discriminant_ideal, regular_trace_over_C, sd_zero_locus
from ..errors import FiberlabError, UnsupportedCentralShape
from ..findim import chevalley_property, irr_count, is_semisimple_module, sd
from ..presentation import HopfPresentation, total_algebra
from ..presentation.reps import basis_action, dual_rep, tensor_rep
from ..report import FAIL, PASS, SKIPPED, Check
from .fusion import action_matrices, chevalley_locus_membership, fiber_irreps, regular_identity_check, tensor_multiplicities
from .orbits import coset_orbit_check, subgroup_I

__all__ = ["theorem_checkers", "ANCHORS", "level_equivalence", "sd_profile"]

ANCHORS = {
    "sd_inequalities": "square dimension bounded below by the identity fiber and by |Irr|",
    "subgroup_I": "characters admitting a one-dimensional fiber module form a subgroup",
    "I_in_locus": "every nonempty discriminant locus contains the subgroup orbit",
    "lowest_level": "lowest discriminant level equals FPdim + 1",
    "level_equivalence": "membership in the lowest locus iff W (x) W* decomposes regularly",
    "chevalley_locus": "Chevalley locus is everything iff the identity fiber is Chevalley",
    "regular_identity": "regular element satisfies T^2 = Sd T with trace Sd",
    "coset_orbit": "cosets of the subgroup coincide with winding orbits",
    "md_triviality": "Chevalley property forces trivial modified discriminant ideals",
    "fiber_semisimplicity": "semisimple identity fiber forces semisimple fibers",
    "chevalley_total": "Chevalley property of the total algebra",
}


def _check(name: str, status: str, **data) -> Check:
    return Check(name, status, data, ANCHORS[name])


def sd_profile(pres: HopfPresentation, samples=None) -> dict:
    return {chi: sd(pres.build_fiber(chi)) for chi in pres.character_space(samples).sampled()}


def level_equivalence(pres: HopfPresentation, chi, level: int, seed: int = 0) -> dict:
    """Conditions (locus membership, regular decomposition, semisimplicity) at ``chi``."""
    ident = pres.identity_character()
    A0 = pres.identity_fiber()
    in_locus = sd(pres.build_fiber(chi)) < level
    _, W = fiber_irreps(pres, chi, seed)
    fd = action_matrices(pres, chi, seed)
    regular = True
    semisimple = True
    mults = []
    for j, w in enumerate(W):
        ww = tensor_rep(pres, w, dual_rep(pres, w))
        assert ww.character == ident
        ss = is_semisimple_module(A0, basis_action(pres, ww))
        m = tensor_multiplicities(pres, A0, ww, seed)
        expected = tuple(int(fd.action_matrices[label][j, j]) for label, _ in fd.irr_labels)
        semisimple &= ss
        regular &= ss and m == expected
        mults.append({"W": f"W{j + 1}", "multiplicities": list(m), "expected": list(expected), "semisimple": ss})
    return {"in_locus": in_locus, "regular_decomposition": regular, "semisimple": semisimple, "detail": mults}


def theorem_checkers(pres: HopfPresentation, samples=None, seed: int = 0) -> list[Check]:
    """Every applicable structural check, labeled pass / fail / skipped."""
    out: list[Check] = []
    space = pres.character_space(samples)
    chars = space.sampled()
    ident = pres.identity_character()
    A0 = pres.identity_fiber()
    chev0 = chevalley_property(A0).holds
    s0 = sd(A0)
    profile = sd_profile(pres, samples)
    no_chev = "identity fiber lacks the Chevalley property"

    # square-dimension inequalities (sampled, not proved)
    if chev0:
        rows = {chi: {"sd": profile[chi], "irr": irr_count(pres.build_fiber(chi))} for chi in chars}
        ok = all(r["sd"] >= s0 >= r["irr"] for r in rows.values())
        out.append(_check("sd_inequalities", PASS if ok else FAIL, sd_identity=s0, rows=rows, scope="sampled"))
    else:
        out.append(_check("sd_inequalities", SKIPPED, reason=no_chev))

    I = subgroup_I(pres, samples)
    ok = ident in I.subgroup_I and I.closed
    out.append(_check("subgroup_I", PASS if ok else FAIL, members=list(I.subgroup_I)))

    # discriminant loci contain the subgroup
    td = None
    if pres.central.shape != "mixed":
        td = regular_trace_over_C(pres)
    loci = {}
    for k in range(1, pres.dim + 2):
        loci[k] = sd_zero_locus(pres, k, samples, td=td, check=td is not None)
    if chev0:
        bad = [k for k, pts in loci.items() if pts and not set(I.subgroup_I) <= set(pts)]
        out.append(
            _check("I_in_locus", FAIL if bad else PASS, loci={k: list(v) for k, v in loci.items()}, violations=bad)
        )
    else:
        out.append(_check("I_in_locus", SKIPPED, reason=no_chev))

    try:
        cert = lowest_level(pres, samples, seed)
        if cert.fpdim_level is None:
            out.append(_check("lowest_level", SKIPPED, level=cert.level, reason=no_chev))
        else:
            out.append(_check("lowest_level", PASS, level=cert.level, fpdim_plus_one=cert.fpdim_level))
    except FiberlabError as exc:
        out.append(_check("lowest_level", FAIL, error=str(exc)))
        cert = None

    if chev0 and cert is not None:
        rows = {}
        ok = True
        for chi in chars:
            r = level_equivalence(pres, chi, cert.level, seed)
            ok &= r["in_locus"] == r["regular_decomposition"] == r["semisimple"]
            rows[chi] = r
        out.append(_check("level_equivalence", PASS if ok else FAIL, level=cert.level, rows=rows))
    else:
        out.append(_check("level_equivalence", SKIPPED, reason=no_chev))

    members = {chi: chevalley_locus_membership(pres, chi, seed) for chi in chars}
    ok = all(members.values()) == chev0
    out.append(_check("chevalley_locus", PASS if ok else FAIL, membership=members, identity_fiber_chevalley=chev0))

    if chev0:
        try:
            mats = {chi: regular_identity_check(pres, chi, seed).regular_matrix for chi in chars}
            out.append(_check("regular_identity", PASS, sd_identity=s0, regular_matrices=mats))
        except FiberlabError as exc:
            out.append(_check("regular_identity", FAIL, error=str(exc)))
    else:
        out.append(_check("regular_identity", SKIPPED, reason=no_chev))

    try:
        od = coset_orbit_check(pres, seed)
        out.append(
            _check("coset_orbit", PASS, cosets=[sorted(c.label() for c in s) for s in od.cosets], free_directions=od.free_directions, scope="torsion part")
        )
    except FiberlabError as exc:
        out.append(_check("coset_orbit", FAIL, error=str(exc)))

    try:
        total = total_algebra(pres)
    except UnsupportedCentralShape:
        total = None
    if total is None:
        reason = "total algebra is infinite-dimensional"
        out.append(_check("chevalley_total", SKIPPED, reason=reason))
        out.append(_check("md_triviality", SKIPPED, reason=reason))
    else:
        res = chevalley_property(total)
        expected = pres.expect.get("chevalley_total")
        data = {"holds": res.holds}
        if not res.holds:
            data.update(failed=res.failed, witness=_witness(total, res.witness))
        if expected is not None:
            data["expected"] = expected
            status = PASS if str(res.holds).lower() == str(expected).lower() else FAIL
        else:
            status = PASS if res.holds else FAIL
        out.append(_check("chevalley_total", status, **data))
        if res.holds:
            forms = {k: modified_discriminant_ideal(td, k).form for k in range(1, pres.dim + 2)}
            ok = all(f in ("unit", "zero") for f in forms.values())
            out.append(_check("md_triviality", PASS if ok else FAIL, forms=forms))
        else:
            out.append(_check("md_triviality", SKIPPED, reason="total algebra lacks the Chevalley property"))

    if s0 == A0.dim:
        ok = all(profile[chi] == pres.dim for chi in chars)
        out.append(_check("fiber_semisimplicity", PASS if ok else FAIL, sd_profile=profile))
    else:
        out.append(_check("fiber_semisimplicity", SKIPPED, reason="identity fiber is not semisimple"))
    return out


def _witness(A, vec) -> str:
    terms = [f"{c}*[{A.basis_labels[i]}]" for i, c in enumerate(vec) if not c.is_zero()]
    return " + ".join(terms)
