"""Paradoxical decompositions, checked exhaustively inside a ball.

A certificate lists disjoint pieces covering ``S`` and "copies": elements
``s`` acting injectively on a domain ``D`` with ``sD`` equal to a union of
pieces. Any fairly invariant probability measure then satisfies

    1 = mu(S) = sum of mu(piece) >= sum over copies of mu(sD) = sum of mu(D),

which is impossible once the copies' domains add up to more than 1.

Membership in the pieces is decided by closed-form oracles (word prefixes,
principal ideals). The ball check is an independent confirmation of the
structural claims restricted to a finite window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .families import Bicyclic, FreeSemigroup, Polycyclic
from .semigroup import Semigroup
from .sets import AllOfS, FiniteList, PrefixCylinder, RightIdeal, SetSpec


@dataclass(frozen=True)
class Copy:
    element: object
    domain: str       # piece label or "S"
    image: tuple      # piece labels whose union is claimed to be element * domain


@dataclass
class ParadoxCertificate:
    semigroup: Semigroup
    pieces: list                  # of (label, SetSpec)
    copies: list                  # of Copy
    massless: tuple = ()          # finite sets, which carry no mass
    aux: dict = field(default_factory=dict)  # extra labelled sets used in images
    radius: int = 0
    verified: bool = False
    failures: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    def piece(self, label: str) -> SetSpec:
        if label == "S":
            return AllOfS()
        return {**dict(self.pieces), **self.aux}[label]

    @property
    def witness(self) -> Optional[str]:
        return self.failures[0] if self.failures else None

    def report(self) -> str:
        S = self.semigroup
        labels = [lab for lab, _ in self.pieces]
        lines = [f"family: {S.name}", f"radius: {self.radius}"]
        for name, ok in self.checks.items():
            lines.append(f"check {name}: {'ok' if ok else 'FAILED'}")
        if not self.verified:
            lines.append("certificate rejected")
            lines.extend(f"witness: {f}" for f in self.failures)
            return "\n".join(lines) + "\n"
        lines.append("pieces: S = " + " u ".join(labels) + " (disjoint)")
        for c in self.copies:
            lines.append(f"copy: {S.format(c.element)} acts injectively on {c.domain}, "
                         f"{S.format(c.element)}{c.domain} = " + " u ".join(c.image))
        heavy = [lab for lab in labels if lab not in self.massless]
        lines.append("1 = μ(S)")
        lines.append("  = " + " + ".join(f"μ({lab})" for lab in labels))
        if self.massless:
            lines.append("  = " + " + ".join(f"μ({lab})" for lab in heavy)
                         + "   (finite sets are massless)")
        unions = " + ".join(f"μ({' u '.join(c.image)})" for c in self.copies)
        translates = " + ".join(f"μ({S.format(c.element)}{c.domain})" for c in self.copies)
        lines.append("  ≥ " + unions)
        if translates != unions:
            lines.append("  = " + translates)
        lines.append("  = " + " + ".join("1" if c.domain == "S" else f"μ({c.domain})"
                                         for c in self.copies) + "   (fair invariance)")
        lines.append(f"  = {len(self.copies)}")
        lines.append(f"1 ≥ {len(self.copies)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"family": self.semigroup.name, "radius": self.radius, "verified": self.verified,
                "checks": self.checks, "failures": self.failures,
                "pieces": [lab for lab, _ in self.pieces]}


def verify(cert: ParadoxCertificate, radius: int) -> ParadoxCertificate:
    """Run every check inside window ``radius``; records failures with witnesses."""
    S = cert.semigroup
    fmt = S.format
    cert.radius = radius
    cert.failures = []
    ball = list(S.window(radius))
    members = {lab: {x for x in ball if spec.contains(S, x)} for lab, spec in cert.pieces}

    disjoint = True
    labels = [lab for lab, _ in cert.pieces]
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            common = members[a] & members[b]
            if common:
                disjoint = False
                x = min(common, key=S.key)
                cert.failures.append(f"{fmt(x)} lies in both {a} and {b}")

    covered = set().union(*members.values()) if members else set()
    missing = [x for x in ball if x not in covered]
    if missing:
        cert.failures.append(f"{fmt(missing[0])} lies in no piece")

    injective = images = True
    for c in cert.copies:
        dom = cert.piece(c.domain)
        targets = [cert.piece(lab) for lab in c.image]
        in_image = lambda y: any(t.contains(S, y) for t in targets)
        seen: dict = {}
        for x in ball:
            if not dom.contains(S, x):
                continue
            y = S.mul(c.element, x)
            if y in seen:
                injective = False
                cert.failures.append(f"{fmt(c.element)} is not injective on {c.domain}: "
                                     f"{fmt(seen[y])} and {fmt(x)} both map to {fmt(y)}")
                break
            seen[y] = x
            if not in_image(y):
                images = False
                cert.failures.append(f"{fmt(c.element)}·{fmt(x)} = {fmt(y)} is outside "
                                     + " u ".join(c.image))
                break
        # every image point in the ball has a preimage in the domain
        pad = S.preimage_pad(c.element) or 0
        reached = {S.mul(c.element, x) for x in S.window(radius + pad) if dom.contains(S, x)}
        for y in ball:
            if in_image(y) and y not in reached:
                images = False
                cert.failures.append(f"{fmt(y)} is in " + " u ".join(c.image)
                                     + f" but not in {fmt(c.element)}{c.domain}")
                break

    cert.checks = {"disjoint": disjoint, "cover": not missing,
                   "injective": injective, "images": images}
    cert.verified = all(cert.checks.values())
    return cert


def free_semigroup_certificate() -> ParadoxCertificate:
    S = FreeSemigroup(2)
    return ParadoxCertificate(
        S,
        pieces=[("{a,b}", FiniteList(("a", "b"))),
                ("aS", PrefixCylinder("a", proper=True)),
                ("bS", PrefixCylinder("b", proper=True))],
        copies=[Copy("a", "S", ("aS",)), Copy("b", "S", ("bS",))],
    )


def polycyclic_certificate() -> ParadoxCertificate:
    S = Polycyclic()
    return ParadoxCertificate(
        S,
        pieces=[("H[P]", PrefixCylinder("P")), ("H[Q]", PrefixCylinder("Q")),
                ("H[p]", PrefixCylinder("p")), ("H[q]", PrefixCylinder("q")),
                ("{0,1}", FiniteList((S.ZERO, S.identity)))],
        copies=[Copy(("p", ""), "S", ("H[P]", "{0}")), Copy(("q", ""), "S", ("H[Q]", "{0}"))],
        massless=("{0,1}", "{0}"),
        aux={"{0}": FiniteList((S.ZERO,))},
    )


def bicyclic_attempt() -> ParadoxCertificate:
    """pB and qB as pieces: fails, the bicyclic monoid has no such decomposition."""
    S = Bicyclic()
    return ParadoxCertificate(
        S,
        pieces=[("pB", RightIdeal(S.P)), ("qB", RightIdeal(S.Q))],
        copies=[Copy(S.P, "S", ("pB",)), Copy(S.Q, "S", ("qB",))],
    )


BUILTINS = {"fs2": free_semigroup_certificate, "p2": polycyclic_certificate,
            "bicyclic": bicyclic_attempt}


def paradox_certificate(name: str, radius: int) -> ParadoxCertificate:
    if name not in BUILTINS:
        raise ValueError(f"unknown certificate {name!r}; built-ins: {', '.join(sorted(BUILTINS))}")
    return verify(BUILTINS[name](), radius)
