"""Numerical semigroups from the five-parameter family, plus brute-force oracles.

The constructor realizes the 4-generator parametrization of pseudo-symmetric
semigroups from the parameters (alpha1..alpha4, alpha21).  Everything else in
this module is deliberately independent of the polynomial machinery: the
membership/order tables, the gap enumeration, the pseudo-symmetry test and
the order-counting Hilbert oracle are plain dynamic programming over the
generators, so they can arbitrate results produced by the algebraic route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class PseudoSymmetricParams:
    """The five integers driving the whole construction.

    Requires alpha_i > 1 for i = 1..4 and 0 < alpha21 < alpha1 - 1.
    """

    alpha1: int
    alpha2: int
    alpha3: int
    alpha4: int
    alpha21: int

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "alpha3", "alpha4"):
            if getattr(self, name) <= 1:
                raise ParameterError(f"{name} > 1 violated ({name}={getattr(self, name)})")
        if self.alpha21 <= 0:
            raise ParameterError(f"alpha21 > 0 violated (alpha21={self.alpha21})")
        if self.alpha21 >= self.alpha1 - 1:
            raise ParameterError(
                f"alpha21 < alpha1 - 1 violated (alpha21={self.alpha21}, alpha1={self.alpha1})"
            )

    def as_dict(self) -> dict:
        return {
            "alpha1": self.alpha1,
            "alpha2": self.alpha2,
            "alpha3": self.alpha3,
            "alpha4": self.alpha4,
            "alpha21": self.alpha21,
        }


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]

    def gcd(self) -> int:
        return math.gcd(*self.generators)


@dataclass(frozen=True)
class SemigroupTable:
    """Membership and maximal-order tables for 0..bound.

    order[s] is the largest number of generators (with repetition) summing to
    s, or -1 when s is not in the semigroup.  order[0] = 0.
    """

    bound: int
    member: list[bool]
    order: list[int]


def construct_generators(params: PseudoSymmetricParams) -> NumericalSemigroup:
    """The four generators, in formula order (not sorted)."""
    a1, a2, a3, a4, a21 = (
        params.alpha1,
        params.alpha2,
        params.alpha3,
        params.alpha4,
        params.alpha21,
    )
    n1 = a2 * a3 * (a4 - 1) + 1
    n2 = a21 * a3 * a4 + (a1 - a21 - 1) * (a3 - 1) + a3
    n3 = a1 * a4 + (a1 - a21 - 1) * (a2 - 1) * (a4 - 1) - a4 + 1
    n4 = a1 * a2 * (a3 - 1) + a21 * (a2 - 1) + a2
    return NumericalSemigroup((n1, n2, n3, n4))


def check_conditions(params: PseudoSymmetricParams) -> dict[str, bool]:
    """The six generator inequalities, sortedness, and coprimality.

    Non-coprime generators can come out of the formulas (e.g. alpha values
    (5,4,2,2) with alpha21 = 2 give (9,12,15,30)); those tuples do not define
    a numerical semigroup and every downstream result is out of scope for
    them, so the flag is surfaced here and filtered on in the sweep.
    """
    a1, a2, a3, a4, a21 = (
        params.alpha1,
        params.alpha2,
        params.alpha3,
        params.alpha4,
        params.alpha21,
    )
    S = construct_generators(params)
    n = S.generators
    return {
        "c1": a1 > a4,
        "c2": a3 < a1 - a21,
        "c3": a4 < a2 + a3 - 1,
        "c4": a2 > a21 + 1,
        "c5": a21 + a3 > a4,
        "c6": a1 + a21 + 1 >= a2 + a4,
        "sorted": n[0] < n[1] < n[2] < n[3],
        "coprime": S.gcd() == 1,
    }


def membership_table(S: NumericalSemigroup, bound: int) -> SemigroupTable:
    if bound < 0:
        raise ParameterError(f"bound >= 0 violated (bound={bound})")
    member = [False] * (bound + 1)
    order = [-1] * (bound + 1)
    member[0] = True
    order[0] = 0
    gens = S.generators
    for s in range(1, bound + 1):
        best = -1
        for g in gens:
            if g <= s and member[s - g]:
                prev = order[s - g]
                if prev + 1 > best:
                    best = prev + 1
        if best >= 0:
            member[s] = True
            order[s] = best
    return SemigroupTable(bound, member, order)


def _table_with_conductor(S: NumericalSemigroup) -> tuple[SemigroupTable, int]:
    """Table large enough to certify completeness, plus the conductor.

    A run of min(generators) consecutive members certifies that everything
    beyond the run start is a member; the bound doubles until one appears.
    """
    if S.gcd() != 1:
        raise ParameterError(f"gcd of generators must be 1 (got {S.gcd()})")
    n_min = min(S.generators)
    bound = 2 * max(S.generators)
    while True:
        table = membership_table(S, bound)
        run = 0
        for s in range(bound + 1):
            run = run + 1 if table.member[s] else 0
            if run == n_min:
                return table, s - n_min + 1
        bound *= 2


def frobenius_and_gaps(S: NumericalSemigroup) -> tuple[int, list[int]]:
    """Largest non-member and the full sorted gap list.

    For ⟨1⟩-like inputs with no gaps the Frobenius number is reported as -1.
    """
    table, conductor = _table_with_conductor(S)
    gaps = [s for s in range(conductor) if not table.member[s]]
    return (gaps[-1] if gaps else -1), gaps


def genus(S: NumericalSemigroup) -> int:
    return len(frobenius_and_gaps(S)[1])


def is_pseudo_symmetric(S: NumericalSemigroup) -> bool:
    """Gap-set test: F even and every gap x != F/2 has F - x in S."""
    frobenius, gaps = frobenius_and_gaps(S)
    if frobenius < 0 or frobenius % 2 != 0:
        return False
    table, _ = _table_with_conductor(S)
    half = frobenius // 2
    for x in gaps:
        if x == half:
            continue
        if not table.member[frobenius - x]:
            return False
    return True


def hilbert_oracle(S: NumericalSemigroup, up_to_level: int) -> list[int]:
    """H(0..L) counted combinatorially: H(n) = #{s in S : order(s) = n}.

    Every element of order <= L is at most L * max(generators), so the table
    bound (L+1) * max(generators) captures all of them.
    """
    if up_to_level < 0:
        raise ParameterError(f"up_to_level >= 0 violated ({up_to_level})")
    bound = (up_to_level + 1) * max(S.generators)
    table = membership_table(S, bound)
    counts = [0] * (up_to_level + 1)
    for o in table.order:
        if 0 <= o <= up_to_level:
            counts[o] += 1
    return counts
