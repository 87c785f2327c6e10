"""Numerical-semigroup combinatorics for the weight tuple.

Every grading question in the engine reduces to membership in the
additive semigroup S generated by the weights: a quasi-degree d carries
monomials exactly when d is a non-negative integer combination of the
weights.  Weights stay tiny (two digits), so bounded enumeration beats
any clever Frobenius algorithm here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from functools import lru_cache


class WeightError(ValueError):
    """Weight tuples the engine refuses to work with."""


def _representable(d: int, lambdas: tuple[int, ...]) -> bool:
    if d < 0:
        return False
    if d == 0:
        return True
    if not lambdas:
        return False
    head, tail = lambdas[0], lambdas[1:]
    return any(_representable(d - a * head, tail) for a in range(d // head + 1))


@dataclass(frozen=True)
class Weights:
    """Strictly increasing positive integers with gcd 1, none of them a
    non-negative integer combination of the others."""

    lambdas: tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lambdas)
        object.__setattr__(self, "lambdas", lam)
        if len(lam) < 2:
            raise WeightError("need at least two weights")
        if any(x <= 0 for x in lam):
            raise WeightError("weights must be positive")
        if any(a >= b for a, b in zip(lam, lam[1:])):
            raise WeightError("weights must be strictly increasing")
        g = gcd(*lam)
        if g != 1:
            reduced = ",".join(str(x // g) for x in lam)
            raise WeightError(
                f"weights have common factor {g}; normalize to {reduced}"
            )
        for j, lj in enumerate(lam):
            others = lam[:j] + lam[j + 1:]
            if _representable(lj, others):
                raise WeightError(
                    f"weight {lj} is a combination of the others; "
                    "drop it and renormalize"
                )

    @classmethod
    def of(cls, *lambdas: int) -> "Weights":
        return cls(tuple(lambdas))

    @classmethod
    def normalized(cls, lambdas) -> "Weights":
        lam = tuple(int(x) for x in lambdas)
        if not lam or any(x <= 0 for x in lam):
            raise WeightError("weights must be positive")
        g = gcd(*lam)
        return cls(tuple(x // g for x in lam))

    @property
    def k(self) -> int:
        return len(self.lambdas)

    def __iter__(self):
        return iter(self.lambdas)

    def __getitem__(self, i: int) -> int:
        return self.lambdas[i]


def is_representable(d: int, w: Weights) -> bool:
    """True iff d lies in the semigroup generated by the weights."""
    return _cached_membership(d, w.lambdas)


@lru_cache(maxsize=None)
def _cached_membership(d: int, lambdas: tuple[int, ...]) -> bool:
    return _representable(d, lambdas)


def representations(d: int, w: Weights) -> list[tuple[int, ...]]:
    """All exponent tuples (a_1, ..., a_k) with sum a_i * lambda_i = d,
    in ascending lexicographic order."""
    if d < 0:
        return []
    return list(_cached_representations(d, w.lambdas))


@lru_cache(maxsize=None)
def _cached_representations(d: int, lambdas: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    if not lambdas:
        return ((),) if d == 0 else ()
    head, tail = lambdas[0], lambdas[1:]
    out = []
    for a in range(d // head + 1):
        for rest in _cached_representations(d - a * head, tail):
            out.append((a,) + rest)
    return tuple(sorted(out))


def gaps(w: Weights) -> list[int]:
    """All natural numbers outside the semigroup, ascending.

    Scans upward until lambda_1 consecutive members appear; from there on
    every number is a member (add lambda_1 repeatedly).  The scan is capped
    at lambda_1 * lambda_k, a safe ceiling at this scale.
    """
    lam = w.lambdas
    cap = lam[0] * lam[-1] + lam[-1]
    out = []
    run = 0
    d = 1
    while run < lam[0]:
        if d > cap:  # unreachable for validated weights
            raise WeightError("gap scan exceeded its ceiling")
        if is_representable(d, w):
            run += 1
        else:
            out.append(d)
            run = 0
        d += 1
    return out


def frobenius_number(w: Weights) -> int:
    """Largest natural number not representable by the weights."""
    gs = gaps(w)
    if not gs:
        raise WeightError("no gaps; smallest weight is 1")
    f = gs[-1]
    if w.k == 2:
        # Sylvester's closed form is an independent check for two weights.
        l1, l2 = w.lambdas
        if f != l1 * l2 - l1 - l2:
            raise AssertionError("gap scan disagrees with the two-weight formula")
    return f


def grlex_key(exps: tuple[int, ...]) -> tuple:
    """Graded lexicographic sort key: total degree first, then lex."""
    return (sum(exps), exps)


def least_monomial(d: int, w: Weights) -> tuple[int, ...] | None:
    """Graded-lex least exponent tuple of quasi-degree d, or None."""
    reps = representations(d, w)
    if not reps:
        return None
    return min(reps, key=grlex_key)
