"""Divisorial Zariski decomposition over the declared prime exceptional divisors.

``D = P + sum b_i E_i`` with ``P`` q-nef (non-negative against every prime
exceptional), ``N = sum b_i E_i`` effective, ``P`` orthogonal to each ``E_i``
in the support and the support's Gram matrix negative definite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from hkcones.errors import IncompleteExceptionalData, NotPseudoEffective
from hkcones.lattice import DivisorClass, inertia, solve
from hkcones.scalar import sign

__all__ = ["ZariskiDecomposition", "brute_force_decompose", "decompose", "in_closed_positive_cone", "in_open_positive_cone"]


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: DivisorClass
    negative_coeffs: dict = field(default_factory=dict)

    @property
    def support(self):
        return frozenset(self.negative_coeffs)

    def negative(self, model):
        out = DivisorClass.zero(model.rank)
        for e in model.exceptionals:
            b = self.negative_coeffs.get(e.name)
            if b:
                out = out + e.prime_class * b
        return out

    def scaled(self, t):
        return ZariskiDecomposition(self.positive * t, {k: v * t for k, v in self.negative_coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, ZariskiDecomposition):
            return NotImplemented
        return self.positive == other.positive and dict(self.negative_coeffs) == dict(other.negative_coeffs)

    def __hash__(self):
        return hash((self.positive, frozenset(self.negative_coeffs.items())))


def in_closed_positive_cone(model, x):
    if x.is_zero():
        return True
    return sign(model.q(x)) >= 0 and sign(model.q(x, model.ample)) > 0


def in_open_positive_cone(model, x):
    return sign(model.q(x)) > 0 and sign(model.q(x, model.ample)) > 0


def _negative_definite(model, excs):
    if not excs:
        return True
    gram = [[model.q(e.prime_class, f.prime_class) for f in excs] for e in excs]
    pos, neg, zero = inertia(gram)
    return neg == len(excs)


def _solve_support(model, d, excs):
    """Coefficients ``b`` with ``q(d - sum b_j E_j, E_i) == 0`` for all ``i``."""
    gram = [[model.q(f.prime_class, e.prime_class) for f in excs] for e in excs]
    rhs = [model.q(d, e.prime_class) for e in excs]
    return solve(gram, rhs)


def _positive_part(model, d, excs, coeffs):
    p = d
    for e, b in zip(excs, coeffs):
        p = p - e.prime_class * b
    return p


def _precheck(model, d):
    # a non-zero pseudo-effective class pairs positively with an ample class
    if not d.is_zero() and sign(model.q(d, model.ample)) <= 0:
        raise NotPseudoEffective(f"{d} pairs non-positively with the ample class")


def decompose(model, d):
    """Active-set Zariski decomposition.

    Start from the exceptionals that ``d`` meets negatively, solve the
    orthogonality system on that set, and add every exceptional the
    resulting positive part still meets negatively.  The set only grows, so
    the loop ends after at most ``len(model.exceptionals)`` rounds.
    """
    _precheck(model, d)
    excs = list(model.exceptionals)
    active = [e for e in excs if sign(model.q(d, e.ray)) < 0]
    coeffs = ()
    p = d
    while True:
        if not _negative_definite(model, active):
            _diagnose_indefinite(model, d, active)
        coeffs = _solve_support(model, d, active)
        p = _positive_part(model, d, active, coeffs)
        grow = [e for e in excs if e not in active and sign(model.q(p, e.ray)) < 0]
        if not grow:
            break
        active.extend(grow)
    if any(sign(b) < 0 for b in coeffs):
        raise NotPseudoEffective(f"{d}: negative part would have a negative coefficient")
    if not in_closed_positive_cone(model, p):
        raise NotPseudoEffective(f"{d}: positive part {p} lies outside the closed positive cone")
    # report in declaration order, dropping zero coefficients
    by_name = {e.name: b for e, b in zip(active, coeffs) if sign(b) > 0}
    ordered = {e.name: by_name[e.name] for e in excs if e.name in by_name}
    return ZariskiDecomposition(p, ordered)


MAX_BRUTE_FORCE = 12


def _diagnose_indefinite(model, d, active):
    """The active set stopped being negative definite: decide which error that is.

    For a pseudo-effective class every active set lies inside the support of
    N(D), which is negative definite.  So either ``d`` is not pseudo-effective
    (no support at all yields a decomposition) or the declared exceptional
    data contradicts that picture.
    """
    names = "{" + ", ".join(e.name for e in active) + "}"
    if len(model.exceptionals) <= MAX_BRUTE_FORCE and not _candidates(model, d):
        raise NotPseudoEffective(f"{d}: the negative part would need the indefinite support {names}")
    raise IncompleteExceptionalData(f"support {names} is not negative definite")


def _candidates(model, d):
    excs = list(model.exceptionals)
    found = []
    for k in range(len(excs) + 1):
        for subset in combinations(excs, k):
            if not _negative_definite(model, subset):
                continue
            coeffs = _solve_support(model, d, subset)
            if any(sign(b) <= 0 for b in coeffs):
                continue
            p = _positive_part(model, d, subset, coeffs)
            if any(sign(model.q(p, e.ray)) < 0 for e in excs):
                continue
            if not in_closed_positive_cone(model, p):
                continue
            found.append(ZariskiDecomposition(p, {e.name: b for e, b in zip(subset, coeffs)}))
    return found


def brute_force_decompose(model, d):
    """Independent oracle: try every negative-definite support and keep the one that fits."""
    if len(model.exceptionals) > MAX_BRUTE_FORCE:
        raise ValueError(f"brute force limited to {MAX_BRUTE_FORCE} exceptionals")
    _precheck(model, d)
    found = _candidates(model, d)
    if not found:
        raise NotPseudoEffective(f"{d}: no support satisfies the decomposition conditions")
    if len(found) > 1:
        raise IncompleteExceptionalData(f"{d}: {len(found)} competing decompositions")
    return found[0]
