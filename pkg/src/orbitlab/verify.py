"""Re-check certificates from scratch."""
from __future__ import annotations

from typing import Any

from .cochar import limit, points_equal
from .matrix import Matrix
from .modules import generic_determinant, intertwiner_basis, is_semisimple_module, span_algebra
from .orbits import (
    CLOSED,
    NO_DESTABILIZER,
    NOT_CLOSED,
    Certificate,
    destabilizer_search,
    ru_conjugacy_back,
    ru_system,
)
from .torus import ConvexCertificate, verify_convex


def _check_nonconjugacy(cert: Certificate) -> list[str]:
    x, lam, H = cert.instance, cert.destabilizer, cert.subgroup
    nc = cert.nonconjugacy or {}
    method = nc.get("method")
    if method == "module_nonisomorphism":
        if H.kind not in ("FullGL", "FullSL") or x.kind != "conjugation":
            return ["module non-isomorphism only certifies full-group conjugation"]
        t, lim = x.point, cert.limit_value
        errs = []
        hom = intertwiner_basis(t, lim)
        end = intertwiner_basis(t, t)
        reason = nc.get("reason")
        if reason == "no_intertwiner":
            ok = not hom
        elif reason == "hom_dimension_mismatch":
            ok = len(hom) != len(end)
        elif reason == "generic_determinant_zero":
            ok = bool(hom) and not generic_determinant(hom)
        else:
            ok = False
        if not ok:
            errs.append(f"non-isomorphism reason {reason!r} does not hold")
        if nc.get("instance_semisimple") is False and is_semisimple_module(t):
            errs.append("instance claimed non-semisimple but is semisimple")
        if nc.get("limit_semisimple") is True and not is_semisimple_module(lim):
            errs.append("limit claimed semisimple but is not")
        return errs
    if method == "ru_affine_system":
        system = ru_system(x, lam, H, cert.limit_value)
        row = nc.get("witness_row")
        F = lam.field
        if row is None or len(row) != system.rhs.rows:
            return ["inconsistency witness has the wrong length"]
        y = Matrix.from_rows(F, [row])
        if system.variables and not (y @ system.matrix).is_zero():
            return ["witness row does not annihilate the system matrix"]
        if (y @ system.rhs).is_zero():
            return ["witness row does not detect an inconsistency"]
        return []
    if method == "finite_list":
        res = ru_conjugacy_back(x, lam, H)
        return [] if res.witness is None else ["a finite-list element conjugates the limit back"]
    return [f"unknown non-conjugacy method {method!r}"]


def verify_orbit(cert: Certificate) -> list[str]:
    x, H = cert.instance, cert.subgroup
    if H is None:
        return ["missing subgroup"]
    if cert.verdict == CLOSED:
        if H.kind not in ("FullGL", "FullSL") or x.kind != "conjugation":
            return ["Closed verdicts are only exact for full-group conjugation"]
        data = cert.semisimplicity or {}
        alg = span_algebra(x.point)
        errs = []
        if alg.radical_basis:
            errs.append("spanned algebra has a nonzero radical")
        if data.get("algebra_dim") != alg.dimension or data.get("radical_dim") != 0:
            errs.append("semisimplicity data does not match")
        return errs
    if cert.verdict == NOT_CLOSED:
        lam = cert.destabilizer
        if lam is None or cert.limit_value is None:
            return ["NotClosed needs a destabilizer and a limit value"]
        errs = []
        if not H.contains_cocharacter(lam):
            errs.append("destabilizer does not lie in the subgroup")
        lim = limit(x, lam)
        if not lim.exists:
            return errs + ["limit along the destabilizer does not exist"]
        if not points_equal(x.kind, lim.value, cert.limit_value):
            errs.append("recorded limit differs from the recomputed limit")
            return errs
        errs += _check_nonconjugacy(cert)
        return errs
    if cert.verdict == NO_DESTABILIZER:
        if cert.torus_used is None or cert.search_bound is None:
            return ["exhausted search needs its torus and bound"]
        again = destabilizer_search(x, H, cert.torus_used, cert.search_bound, cert.seed)
        if again.verdict != NO_DESTABILIZER:
            return ["re-running the search finds a destabilizer"]
        if cert.searched is not None and again.searched != cert.searched:
            return ["searched lattice size differs"]
        return []
    return [f"unknown verdict {cert.verdict!r}"]


def verify_json(d: dict[str, Any]) -> list[str]:
    """Problems with a certificate given as parsed JSON (empty list = valid)."""
    try:
        kind = d.get("type", "orbit")
        if kind == "torus_convex":
            return verify_convex(ConvexCertificate.from_json(d))
        if kind == "orbit":
            return verify_orbit(Certificate.from_json(d))
        return [f"unknown certificate type {kind!r}"]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        return [f"malformed certificate: {exc}"]
