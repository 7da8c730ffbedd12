"""Alcove membership, restricted weights, weak linkage, and l-admissibility."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rootsystem import RootSystem
from .weyl import WeylElement, WeylGroup

CONTEXTS = ("base", "weight-separation", "kostant", "ring")


class PreconditionError(ValueError):
    """A stated precondition (alcove membership, modulus bound, gate) failed."""


@dataclass(frozen=True)
class LinkageDatum:
    """lambda = w.0 + modulus * sigma, with sigma zero or minuscule."""
    w: WeylElement
    sigma: tuple
    modulus: int

    def reconstruct(self, rs: RootSystem) -> tuple:
        base = self.w.dot((0,) * rs.rank, rs)
        return tuple(b + self.modulus * s for b, s in zip(base, self.sigma))


@dataclass(frozen=True)
class AdmissibilityProfile:
    modulus: int
    odd: bool
    gt_h: bool
    ge_hminus1: bool
    gt_2hminus2: bool
    coprime_type_conditions: bool
    base_coprime: bool

    def flags(self) -> dict:
        return {"odd": self.odd, "gt_h": self.gt_h, "ge_hminus1": self.ge_hminus1,
                "gt_2hminus2": self.gt_2hminus2,
                "coprime_type_conditions": self.coprime_type_conditions,
                "base_coprime": self.base_coprime}


def in_alcove(lam: tuple, p: int, rs: RootSystem, closed: bool = False) -> bool:
    """Membership of lambda in the bottom p-alcove (or its closure)."""
    if p < 2:
        raise PreconditionError("modulus must be at least 2")
    shifted = tuple(x + r for x, r in zip(lam, rs.rho))
    for beta in rs.positive_roots:
        v = rs.pairing(shifted, beta)
        if closed:
            if v < 0 or v > p:
                return False
        else:
            if v <= 0 or v >= p:
                return False
    return True


def j_restricted(mu: tuple, J, p: int, rs: RootSystem) -> bool:
    """mu in (X_J)_1: J-dominant with (mu, alpha^vee) < p for alpha in J."""
    for beta in rs.phi_j_plus(J):
        if rs.pairing(mu, beta) < 0:
            return False
    return all(mu[i] < p for i in J)


def weak_linkage(lam: tuple, modulus: int, rs: RootSystem,
                 group: WeylGroup) -> LinkageDatum | None:
    """The unique (w, sigma) with lam = w.0 + modulus*sigma, or None.

    Exhausts all of W, so each returned datum doubles as a per-instance
    uniqueness certificate.  Requires lam dominant in the closed bottom
    alcove and modulus > h.
    """
    if modulus <= rs.coxeter_number:
        raise PreconditionError(
            f"weak linkage requires modulus > h = {rs.coxeter_number}")
    if not rs.is_dominant(lam) or not in_alcove(lam, modulus, rs, closed=True):
        raise PreconditionError("lambda must lie in X^+ and the closed bottom alcove")
    zero = (0,) * rs.rank
    found = []
    for w in group.elements:
        base = w.dot(zero, rs)
        diff = tuple(x - b for x, b in zip(lam, base))
        if all(c % modulus == 0 for c in diff):
            sigma = tuple(c // modulus for c in diff)
            found.append(LinkageDatum(w, sigma, modulus))
    if not found:
        return None
    if len(found) > 1:
        raise PreconditionError(
            f"linkage datum not unique for {lam} at modulus {modulus}")
    datum = found[0]
    minus = set(rs.minuscule_weights())
    assert datum.sigma == zero or datum.sigma in minus
    return datum


def admissibility(ell: int, rs: RootSystem, context: str):
    """Evaluate the root-of-unity admissibility flags and gate for a context.

    Returns (AdmissibilityProfile, passed: bool).
    """
    if context not in CONTEXTS:
        raise ValueError(f"unknown context {context!r}; expected one of {CONTEXTS}")
    if ell < 1:
        raise PreconditionError("modulus must be positive")
    h = rs.coxeter_number
    coprime = True
    if rs.letter == "A":
        coprime = coprime and math.gcd(ell, rs.rank + 1) == 1
    if rs.label == "E6" or rs.label == "G2":
        coprime = coprime and math.gcd(ell, 3) == 1
    base_coprime = math.gcd(ell, 3) == 1 if rs.label == "G2" else True
    profile = AdmissibilityProfile(
        modulus=ell,
        odd=ell % 2 == 1,
        gt_h=ell > h,
        ge_hminus1=ell >= h - 1,
        gt_2hminus2=ell > 2 * (h - 1),
        coprime_type_conditions=coprime,
        base_coprime=base_coprime,
    )
    if context == "base":
        passed = profile.odd and profile.base_coprime
    elif context == "weight-separation":
        passed = profile.odd and profile.base_coprime and profile.coprime_type_conditions
    elif context == "kostant":
        passed = profile.odd and profile.base_coprime and profile.ge_hminus1
    else:  # ring
        passed = (profile.odd and profile.base_coprime
                  and profile.coprime_type_conditions and profile.gt_2hminus2)
    return profile, passed


def require_admissible(ell: int, rs: RootSystem, context: str) -> AdmissibilityProfile:
    profile, passed = admissibility(ell, rs, context)
    if not passed:
        failing = [k for k, v in profile.flags().items() if not v]
        raise PreconditionError(
            f"l={ell} fails admissibility for context {context!r} on {rs.label}"
            f" (violated flags: {', '.join(failing) or 'context requirement'})")
    return profile
