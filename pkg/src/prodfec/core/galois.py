"""Arithmetic over GF(2^8) with log/antilog tables.

Elements are plain integers in [0, 255], read as binary polynomials of degree < 8.
The scalar functions define the arithmetic; the ``*_array`` variants apply the same
definitions elementwise to NumPy arrays and back the batched BCH decoder.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TypeAlias

import numpy as np
import numpy.typing as npt

from prodfec.core.errors import FieldDomainError

FieldElement: TypeAlias = int

# x^8 + x^4 + x^3 + x^2 + 1
PRIMITIVE_POLY = 0x11D
FIELD_SIZE = 256
# Multiplicative group order, also the order of ALPHA.
FIELD_ORDER = 255
ALPHA: FieldElement = 0x02


def _build_tables() -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
    # EXP is doubled so that EXP[LOG[a] + LOG[b]] needs no reduction.
    exp = np.zeros(2 * FIELD_ORDER, dtype=np.int64)
    log = np.zeros(FIELD_SIZE, dtype=np.int64)
    value = 1
    for power in range(FIELD_ORDER):
        exp[power] = value
        log[value] = power
        value <<= 1
        if value & 0x100:
            value ^= PRIMITIVE_POLY
    exp[FIELD_ORDER:] = exp[:FIELD_ORDER]
    exp.flags.writeable = False
    log.flags.writeable = False
    return exp, log


EXP_TABLE, LOG_TABLE = _build_tables()


def _check(a: FieldElement) -> None:
    if not 0 <= a < FIELD_SIZE:
        raise FieldDomainError(f"{a} is not an element of GF(2^8)")


def gf_add(a: FieldElement, b: FieldElement) -> FieldElement:
    """Add two field elements (bitwise xor; also subtraction)."""
    return a ^ b


def gf_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Multiply two field elements modulo ``PRIMITIVE_POLY``."""
    _check(a)
    _check(b)
    if a == 0 or b == 0:
        return 0
    return int(EXP_TABLE[LOG_TABLE[a] + LOG_TABLE[b]])


def gf_inv(a: FieldElement) -> FieldElement:
    """
    Multiplicative inverse.

    Raises:
        FieldDomainError: If ``a`` is zero
    """
    _check(a)
    if a == 0:
        raise FieldDomainError("0 has no multiplicative inverse")
    return int(EXP_TABLE[(FIELD_ORDER - LOG_TABLE[a]) % FIELD_ORDER])


def gf_pow(a: FieldElement, n: int) -> FieldElement:
    """
    Raise ``a`` to the integer power ``n``.

    Negative exponents are allowed for nonzero ``a``. ``0 ** 0`` is 1.

    Raises:
        FieldDomainError: If ``a`` is zero and ``n`` is negative
    """
    _check(a)
    if a == 0:
        if n < 0:
            raise FieldDomainError("negative power of 0 is undefined")
        return 1 if n == 0 else 0
    return int(EXP_TABLE[(int(LOG_TABLE[a]) * n) % FIELD_ORDER])


def gf_log(a: FieldElement) -> int:
    """
    Discrete logarithm to base ``ALPHA``, in [0, 254].

    Raises:
        FieldDomainError: If ``a`` is zero
    """
    _check(a)
    if a == 0:
        raise FieldDomainError("log of 0 is undefined")
    return int(LOG_TABLE[a])


def gf_mul_array(a: npt.ArrayLike, b: npt.ArrayLike) -> npt.NDArray[np.int64]:
    """Elementwise ``gf_mul`` over broadcastable arrays."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    product = EXP_TABLE[LOG_TABLE[a] + LOG_TABLE[b]]
    return np.where((a == 0) | (b == 0), 0, product)


def gf_div_array(a: npt.ArrayLike, b: npt.ArrayLike) -> npt.NDArray[np.int64]:
    """Elementwise ``a / b``; entries where ``b`` is zero come out as zero and must be masked."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    quotient = EXP_TABLE[(LOG_TABLE[a] - LOG_TABLE[b]) % FIELD_ORDER]
    return np.where((a == 0) | (b == 0), 0, quotient)


def gf_square_array(a: npt.ArrayLike) -> npt.NDArray[np.int64]:
    return gf_mul_array(a, a)


def gf_pow_alpha_array(exponents: npt.ArrayLike) -> npt.NDArray[np.int64]:
    """``ALPHA ** e`` for every integer ``e`` (any sign) in the array."""
    return EXP_TABLE[np.mod(np.asarray(exponents, dtype=np.int64), FIELD_ORDER)]


@dataclass(frozen=True)
class FieldPolynomial:
    """
    Polynomial with GF(2^8) coefficients, lowest degree first.

    Trailing zero coefficients are stripped on construction, so the leading
    coefficient is nonzero unless this is the zero polynomial ``(0,)``.
    """

    coefficients: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coefficients) or [0]
        for c in coeffs:
            _check(c)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def of(cls, coefficients: Iterable[FieldElement]) -> FieldPolynomial:
        return cls(tuple(coefficients))

    @classmethod
    def from_roots(cls, roots: Iterable[FieldElement]) -> FieldPolynomial:
        """Product of ``(x - r)`` over ``roots``."""
        poly = cls((1,))
        for root in roots:
            poly = poly_mul(poly, cls((root, 1)))
        return poly

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def __call__(self, x: FieldElement) -> FieldElement:
        return poly_eval(self, x)


def poly_eval(p: FieldPolynomial | Sequence[FieldElement], x: FieldElement) -> FieldElement:
    """Evaluate ``p`` at ``x`` by Horner's rule."""
    coefficients = p.coefficients if isinstance(p, FieldPolynomial) else tuple(p)
    result = 0
    for c in reversed(coefficients):
        result = gf_mul(result, x) ^ c
    return result


def poly_add(p: FieldPolynomial, q: FieldPolynomial) -> FieldPolynomial:
    size = max(len(p.coefficients), len(q.coefficients))
    a = p.coefficients + (0,) * (size - len(p.coefficients))
    b = q.coefficients + (0,) * (size - len(q.coefficients))
    return FieldPolynomial(tuple(x ^ y for x, y in zip(a, b)))


def poly_mul(p: FieldPolynomial, q: FieldPolynomial) -> FieldPolynomial:
    result = [0] * (len(p.coefficients) + len(q.coefficients) - 1)
    for i, a in enumerate(p.coefficients):
        if a == 0:
            continue
        for j, b in enumerate(q.coefficients):
            result[i + j] ^= gf_mul(a, b)
    return FieldPolynomial(tuple(result))


def poly_divmod(
    dividend: FieldPolynomial, divisor: FieldPolynomial
) -> tuple[FieldPolynomial, FieldPolynomial]:
    """
    Long division over GF(2^8).

    Returns:
        (quotient, remainder) with ``deg(remainder) < deg(divisor)``

    Raises:
        FieldDomainError: If ``divisor`` is the zero polynomial
    """
    if divisor.is_zero:
        raise FieldDomainError("division by the zero polynomial")
    remainder = list(dividend.coefficients)
    d = divisor.degree
    lead_inv = gf_inv(divisor.coefficients[-1])
    quotient = [0] * max(len(remainder) - d, 1)
    for shift in range(len(remainder) - 1 - d, -1, -1):
        factor = gf_mul(remainder[shift + d], lead_inv)
        if factor == 0:
            continue
        quotient[shift] = factor
        for k, c in enumerate(divisor.coefficients):
            remainder[shift + k] ^= gf_mul(factor, c)
    return FieldPolynomial(tuple(quotient)), FieldPolynomial(tuple(remainder[:d] or [0]))
