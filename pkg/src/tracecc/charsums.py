"""Character sums over GF(p**m) and their closed forms.

Directly summed quantities (canonical additive character, quadratic Gauss
sums, completed quadratic sums) are evaluated exactly as integer counts per
trace residue and only turned into complex numbers at the very end, which
keeps roundoff far below the comparison tolerance. Closed-form predictions
compute powers of sqrt(-1) as exact quarter turns so the predictor side
cannot drift in sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    ClosedFormMismatch,
    FieldMismatch,
    OddDegree,
    PredictionMismatch,
    ZeroLeadingCoefficient,
)
from .gfpm import Field, FieldElement, make_field, quadratic_character

#: absolute tolerance, per real/imaginary component, for closed-form agreement
EPS = 1e-9

_QUARTER_TURNS = (1, 1j, -1, -1j)


@lru_cache(maxsize=None)
def _zeta_table(p: int) -> np.ndarray:
    table = np.exp(2j * np.pi * np.arange(p) / p)
    table.setflags(write=False)
    return table


def _legendre(u: int, p: int) -> int:
    u %= p
    if u == 0:
        return 0
    return 1 if pow(u, (p - 1) // 2, p) == 1 else -1


def _component_deviation(a: complex, b: complex) -> float:
    return max(abs(a.real - b.real), abs(a.imag - b.imag))


def additive_character(x: FieldElement) -> complex:
    """Canonical additive character exp(2*pi*i*Tr(x)/p)."""
    return complex(_zeta_table(x.field.p)[x.trace()])


def quadratic_trace_sign(p: int, m: int) -> int:
    """The sign (-1)^(((p-1)/2)^2 * m/2) attached to even extension degrees."""
    if m % 2:
        raise OddDegree("the sign is defined for even extension degrees only")
    return -1 if (((p - 1) // 2) ** 2 * (m // 2)) % 2 else 1


def gauss_sum_closed_fq(p: int, m: int) -> complex:
    """Closed form of the quadratic Gauss sum over GF(p**m)."""
    turn = _QUARTER_TURNS[(((p - 1) // 2) ** 2 * m) % 4]
    return (-1) ** ((m - 1) % 2) * turn * math.sqrt(p**m)


def _sum_over_residue_counts(counts: np.ndarray, p: int) -> complex:
    return complex(np.dot(counts, _zeta_table(p)))


def _gauss_sum_direct(field: Field) -> complex:
    # integer count of eta over each trace residue, then one length-p dot
    counts = np.bincount(
        field.trace_table,
        weights=field.quadratic_character_table.astype(np.float64),
        minlength=field.p,
    )
    return _sum_over_residue_counts(counts, field.p)


def gauss_sum_fq(field: Field, check: bool = True):
    """Quadratic Gauss sum over GF(p**m): (direct summation, closed form)."""
    evaluated = _gauss_sum_direct(field)
    closed = gauss_sum_closed_fq(field.p, field.m)
    if check and _component_deviation(evaluated, closed) > EPS:
        raise ClosedFormMismatch(
            f"Gauss sum over {field!r}: direct {evaluated} vs closed form {closed}"
        )
    return evaluated, closed


def gauss_sum_fp(p: int, check: bool = True):
    """Quadratic Gauss sum over the prime field GF(p)."""
    return gauss_sum_fq(make_field(p, 1), check=check)


def quadratic_sum(a2: FieldElement, a1: FieldElement, a0: FieldElement):
    """Sum of chi1(a2*x**2 + a1*x + a0) over the field: (direct, closed form).

    The closed form is chi1(a0 - a1**2/(4*a2)) * eta(a2) * G(eta, chi1).
    """
    field = a2.field
    if a1.field != field or a0.field != field:
        raise FieldMismatch("quadratic coefficients belong to different fields")
    if a2.is_zero():
        raise ZeroLeadingCoefficient("leading coefficient must be nonzero")
    p = field.p
    residues = (
        field.trace_of_multiples(a2)[field.square_index_table].astype(np.int16)
        + field.trace_of_multiples(a1)
        + a0.trace()
    ) % p
    counts = np.bincount(residues, minlength=p).astype(np.float64)
    evaluated = _sum_over_residue_counts(counts, p)

    shift = a0 - a1 * a1 * (field.constant(4) * a2).inverse()
    closed = (
        complex(_zeta_table(p)[shift.trace()])
        * quadratic_character(a2)
        * gauss_sum_closed_fq(p, field.m)
    )
    return evaluated, closed


# -- trace fibers ------------------------------------------------------------


@dataclass(frozen=True)
class FiberCountReport:
    alpha: int
    count_enumerated: int
    count_predicted: int
    kind: str  # "linear-trace" or "quadratic-trace"


def count_trace_fiber(field: Field, alpha: int) -> FiberCountReport:
    """Exhaustive count of {x : Tr(x) = alpha}, checked against p^(m-1)."""
    alpha = int(alpha) % field.p
    enumerated = int(np.count_nonzero(field.trace_table == alpha))
    predicted = field.p ** (field.m - 1)
    if enumerated != predicted:
        raise PredictionMismatch(
            f"linear trace fiber alpha={alpha} over {field!r}: {enumerated} != {predicted}"
        )
    return FiberCountReport(alpha, enumerated, predicted, "linear-trace")


def predicted_square_trace_fiber(p: int, m: int, alpha: int) -> int:
    """Closed-form size of {x : Tr(x**2) = alpha}, split on parity of m and alpha = 0."""
    alpha = int(alpha) % p
    h = ((p - 1) // 2) ** 2
    if m % 2:
        if alpha == 0:
            return p ** (m - 1)
        sign = -1 if (h * ((m + 1) // 2)) % 2 else 1
        return p ** (m - 1) + _legendre(-alpha, p) * sign * p ** ((m - 1) // 2)
    tau = -1 if (h * (m // 2)) % 2 else 1
    if alpha == 0:
        return p ** (m - 1) - tau * (p - 1) * p ** ((m - 2) // 2)
    return p ** (m - 1) + tau * p ** ((m - 2) // 2)


def count_trace_square_fiber(field: Field, alpha: int) -> FiberCountReport:
    """Exhaustive count of {x : Tr(x**2) = alpha}, checked against the closed form."""
    alpha = int(alpha) % field.p
    squares_trace = field.trace_table[field.square_index_table]
    enumerated = int(np.count_nonzero(squares_trace == alpha))
    predicted = predicted_square_trace_fiber(field.p, field.m, alpha)
    if enumerated != predicted:
        raise PredictionMismatch(
            f"quadratic trace fiber alpha={alpha} over {field!r}: {enumerated} != {predicted}"
        )
    return FiberCountReport(alpha, enumerated, predicted, "quadratic-trace")
