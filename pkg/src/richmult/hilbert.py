"""Hilbert series of monomial ideals; dimension and degree extraction.

The numerator N(t) of the series N(t)/(1-t)^k of k[x_1..x_k]/M is computed
by pivot splitting: N(M) = N(M + (p)) + t^deg(p) * N(M : p) with a single
variable as pivot, with memoization on minimal generator sets.  Writing
N(t) = (1-t)^s * Q(t) with Q(1) != 0, the quotient has Krull dimension
k - s and degree Q(1).
"""

from __future__ import annotations

from typing import Iterable

from dataclasses import dataclass

from .groebner import PolyIdeal
from .poly import Exps, mono_deg, mono_divides


def minimalize_monomials(gens: Iterable[Exps]) -> list[Exps]:
    """Minimal generating set of the monomial ideal generated by gens."""
    gens = sorted(set(gens), key=lambda e: (mono_deg(e), e))
    out: list[Exps] = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


def _poly_mul(a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


def _poly_add_shifted(a: tuple, b: tuple, shift: int) -> tuple:
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for j, y in enumerate(b):
        out[shift + j] += y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def hilbert_numerator(gens: Iterable[Exps], nvars: int) -> tuple[int, ...]:
    """Coefficients of N(t) for the monomial ideal generated by gens."""
    memo: dict = {}

    def recurse(mons: tuple) -> tuple:
        if not mons:
            return (1,)
        if any(mono_deg(e) == 0 for e in mons):
            return (0,)  # unit ideal: zero quotient
        cached = memo.get(mons)
        if cached is not None:
            return cached
        purity = [sum(1 for x in e if x) for e in mons]
        if all(p == 1 for p in purity):
            # Pairwise coprime pure powers: complete intersection.
            result = (1,)
            for e in mons:
                d = mono_deg(e)
                factor = [0] * (d + 1)
                factor[0] = 1
                factor[d] = -1
                result = _poly_mul(result, tuple(factor))
        else:
            # Pivot on the most shared variable of a mixed generator, so the
            # split strictly shrinks both branches.
            counts = [0] * nvars
            for e, pure in zip(mons, purity):
                if pure > 1:
                    for i, x in enumerate(e):
                        if x:
                            counts[i] += 1
            pivot = max(range(nvars), key=lambda i: counts[i])
            # M + (x_pivot): drop generators divisible by the pivot.
            plus = [e for e in mons if e[pivot] == 0]
            unit = tuple(1 if i == pivot else 0 for i in range(nvars))
            plus.append(unit)
            # M : x_pivot.
            colon = minimalize_monomials(
                tuple(x - 1 if i == pivot and x else x for i, x in enumerate(e))
                for e in mons
            )
            a = recurse(tuple(sorted(plus)))
            b = recurse(tuple(sorted(colon)))
            result = _poly_add_shifted(a, b, 1)
        memo[mons] = result
        return result

    mons = tuple(sorted(minimalize_monomials(gens)))
    if any(mono_deg(e) == 0 for e in mons):
        return (0,)  # unit ideal: zero ring
    return recurse(mons)


@dataclass(frozen=True)
class HilbertData:
    """Reduced series numerator plus the dimension/degree it encodes: the
    series of the quotient is numerator(t) / (1-t)^dimension with
    numerator(1) = degree != 0."""

    numerator: tuple[int, ...]
    nvars: int
    dimension: int
    degree: int


def hilbert_data(gens: Iterable[Exps], nvars: int) -> HilbertData:
    raw = hilbert_numerator(gens, nvars)
    if raw == (0,):
        raise ValueError("unit ideal has no Hilbert data")
    reduced = list(raw)
    strips = 0
    while sum(reduced) == 0:
        # Divide by (1 - t): r_i = q_i + r_{i-1}, remainder must vanish.
        out = []
        acc = 0
        for c in reduced:
            acc += c
            out.append(acc)
        assert out[-1] == 0
        out.pop()
        reduced = out if out else [1]
        strips += 1
    while len(reduced) > 1 and reduced[-1] == 0:
        reduced.pop()
    degree = sum(reduced)
    if degree <= 0:
        raise ValueError(f"non-positive degree from numerator {raw}")
    return HilbertData(
        numerator=tuple(reduced),
        nvars=nvars,
        dimension=nvars - strips,
        degree=degree,
    )


def ideal_hilbert_data(ideal: PolyIdeal) -> HilbertData:
    """Hilbert data of the leading-term ideal of a polynomial ideal."""
    if ideal.is_unit():
        raise ValueError("unit ideal has no Hilbert data")
    return hilbert_data(ideal.leading_exponents(), ideal.ring.nvars)


def ideal_dimension(ideal: PolyIdeal) -> int:
    """Affine Krull dimension of ring/I (for graded orders this equals the
    dimension of the leading-term quotient)."""
    return ideal_hilbert_data(ideal).dimension


def projective_degree(ideal: PolyIdeal) -> int:
    """Degree of the projectivization of the cone cut out by a homogeneous
    ideal (for dimension 0: the vector-space length of the quotient)."""
    for g in ideal.gens:
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous generator: {g}")
    if ideal.is_unit():
        raise ValueError("unit ideal has no degree")
    return ideal_hilbert_data(ideal).degree
