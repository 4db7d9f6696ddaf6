"""Systematic BCH(255,231) code with a bounded-distance decoder for t = 3.

Bit convention: index ``j`` of a 255-bit word holds the coefficient of ``x^(254 - j)``,
so index 0 is the highest degree. Information bits occupy indices 0..230 and the 24
parity bits indices 231..254.

Decoding is batched: the ``*_batch`` functions take an (M, 255) bit matrix and work on
all words at once. The single-word functions are views over them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import TypeAlias

import numpy as np
import numpy.typing as npt

from prodfec.core.errors import CodeLengthError
from prodfec.core.galois import (
    ALPHA,
    EXP_TABLE,
    FIELD_ORDER,
    LOG_TABLE,
    FieldElement,
    FieldPolynomial,
    gf_div_array,
    gf_mul_array,
    gf_pow,
    gf_pow_alpha_array,
    gf_square_array,
    poly_mul,
)

logger = logging.getLogger(__name__)

N = 255
K = 231
T = 3
PARITY_BITS = N - K
NUM_SYNDROMES = 2 * T

Bits: TypeAlias = npt.NDArray[np.uint8]
SyndromeSet: TypeAlias = tuple[FieldElement, ...]

# Polynomial degree of every bit index.
DEGREES = np.arange(N - 1, -1, -1, dtype=np.int64)


class BddKind(IntEnum):
    NO_ERROR = 0
    CORRECTED = 1
    FAILURE = 2


@dataclass(frozen=True)
class BddOutcome:
    """Result of bounded-distance decoding one component word."""

    kind: BddKind
    flips: frozenset[int]
    mu: npt.NDArray[np.int8]

    @property
    def failed(self) -> bool:
        return self.kind is BddKind.FAILURE


@dataclass(frozen=True)
class BatchBddOutcome:
    """Per-word kinds and an (M, 255) mask of proposed flips (all False unless CORRECTED)."""

    kind: npt.NDArray[np.int8]
    flips: npt.NDArray[np.bool_]


def _cyclotomic_coset(i: int) -> list[int]:
    coset = []
    e = i % FIELD_ORDER
    while e not in coset:
        coset.append(e)
        e = (2 * e) % FIELD_ORDER
    return coset


@lru_cache(maxsize=1)
def build_generator() -> FieldPolynomial:
    """
    Generator polynomial: lcm of the minimal polynomials of alpha, alpha^3, alpha^5.

    The three cyclotomic cosets are distinct and of size 8, so the lcm is their
    product and has degree 24. Coefficients are 0 or 1.
    """
    generator = FieldPolynomial((1,))
    for i in (1, 3, 5):
        roots = [gf_pow(ALPHA, e) for e in _cyclotomic_coset(i)]
        generator = poly_mul(generator, FieldPolynomial.from_roots(roots))
    if any(c not in (0, 1) for c in generator.coefficients):
        raise ArithmeticError("generator polynomial is not binary")
    logger.debug("BCH generator degree %d", generator.degree)
    return generator


def generator_mask() -> int:
    """Generator as an integer, bit ``d`` = coefficient of ``x^d``."""
    return sum(c << d for d, c in enumerate(build_generator().coefficients))


@lru_cache(maxsize=1)
def parity_matrix() -> Bits:
    """
    (231, 24) GF(2) matrix P with parity = info @ P (mod 2).

    Row ``r`` holds the remainder of ``x^(254 - r)`` modulo the generator, laid out
    highest degree first like the parity bits of a codeword.
    """
    g = generator_mask()
    remainders = []
    rem = 1
    for _ in range(N):
        remainders.append(rem)
        rem <<= 1
        if rem >> PARITY_BITS:
            rem ^= g
    matrix = np.zeros((K, PARITY_BITS), dtype=np.uint8)
    for r in range(K):
        rem = remainders[N - 1 - r]
        for p in range(PARITY_BITS):
            matrix[r, p] = (rem >> (PARITY_BITS - 1 - p)) & 1
    matrix.flags.writeable = False
    return matrix


@lru_cache(maxsize=1)
def _syndrome_matrix() -> npt.NDArray[np.float32]:
    # Column 8*b + k is bit k of alpha^(i * degree) for the odd syndrome i = 2b + 1.
    columns = []
    for i in (1, 3, 5):
        powers = gf_pow_alpha_array(i * DEGREES)
        for k in range(8):
            columns.append((powers >> k) & 1)
    return np.stack(columns, axis=1).astype(np.float32)


def _as_words(words: npt.ArrayLike) -> Bits:
    array = np.asarray(words, dtype=np.uint8)
    if array.ndim != 2 or array.shape[1] != N:
        raise CodeLengthError(f"expected an (M, {N}) bit matrix, got shape {array.shape}")
    return array


def _as_word(word: npt.ArrayLike) -> Bits:
    array = np.asarray(word, dtype=np.uint8)
    if array.shape != (N,):
        raise CodeLengthError(f"expected {N} bits, got shape {array.shape}")
    return array


def encode_batch(info: npt.ArrayLike) -> Bits:
    """Encode every row of an (M, 231) bit matrix into an (M, 255) codeword matrix."""
    rows = np.asarray(info, dtype=np.uint8)
    if rows.ndim != 2 or rows.shape[1] != K:
        raise CodeLengthError(f"expected an (M, {K}) bit matrix, got shape {rows.shape}")
    parity = (rows.astype(np.float32) @ parity_matrix().astype(np.float32)).astype(np.int64) & 1
    return np.concatenate([rows, parity.astype(np.uint8)], axis=1)


def encode(info: npt.ArrayLike) -> Bits:
    """
    Systematically encode 231 information bits.

    Raises:
        CodeLengthError: If ``info`` is not exactly 231 bits
    """
    bits = np.asarray(info, dtype=np.uint8)
    if bits.shape != (K,):
        raise CodeLengthError(f"expected {K} information bits, got shape {bits.shape}")
    return encode_batch(bits[np.newaxis, :])[0]


def syndromes_batch(words: npt.ArrayLike) -> npt.NDArray[np.int64]:
    """
    Syndromes S1..S6 of every word, shape (M, 6).

    The odd syndromes come from one GF(2) matrix product; the even ones follow
    from S_2i = S_i^2.
    """
    bits = _as_words(words)
    counts = bits.astype(np.float32) @ _syndrome_matrix()
    parity = counts.astype(np.int64) & 1
    weights = np.left_shift(1, np.arange(8, dtype=np.int64))
    odd = (parity.reshape(-1, 3, 8) * weights).sum(axis=2)
    s1, s3, s5 = odd[:, 0], odd[:, 1], odd[:, 2]
    s2 = gf_square_array(s1)
    return np.stack([s1, s2, s3, gf_square_array(s2), s5, gf_square_array(s3)], axis=1)


def syndromes(word: npt.ArrayLike) -> SyndromeSet:
    """Syndromes of one word: ``s[i]`` is the word polynomial evaluated at alpha^(i+1)."""
    return tuple(int(s) for s in syndromes_batch(_as_word(word)[np.newaxis, :])[0])


def is_codeword(word: npt.ArrayLike) -> bool:
    return not any(syndromes(word))


def solve_error_locators(
    s: npt.ArrayLike,
) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.bool_]]:
    """
    Direct (Peterson) solution of the Newton identities for t = 3.

    Args:
        s: (M, 6) syndrome matrix

    Returns:
        (locators, ok): locators is (M, 4), coefficients of 1 + l1 x + l2 x^2 + l3 x^3;
        ok is False where no locator of degree <= 3 is consistent with the syndromes
    """
    s = np.asarray(s, dtype=np.int64).reshape(-1, NUM_SYNDROMES)
    s1, s3, s5 = s[:, 0], s[:, 2], s[:, 4]
    s1_sq = gf_square_array(s1)
    s1_cube = gf_mul_array(s1_sq, s1)
    det = s1_cube ^ s3
    singular = det == 0

    lam2 = gf_div_array(gf_mul_array(s1_sq, s3) ^ s5, det)
    lam3 = det ^ gf_mul_array(s1, lam2)
    lam2 = np.where(singular, 0, lam2)
    lam3 = np.where(singular, 0, lam3)

    # Singular system: at most one error, consistent only if S5 = S1^5.
    s1_fifth = gf_mul_array(s1_cube, s1_sq)
    ok = ~singular | (s5 == s1_fifth)

    locators = np.stack([np.ones_like(s1), s1, lam2, lam3], axis=1)
    locators[~ok] = 0
    return locators, ok


def solve_error_locator(s: SyndromeSet) -> FieldPolynomial | None:
    """Error locator for one syndrome set, or ``None`` on failure."""
    locators, ok = solve_error_locators(np.asarray(s, dtype=np.int64)[np.newaxis, :])
    if not ok[0]:
        return None
    return FieldPolynomial(tuple(int(c) for c in locators[0]))


def _locator_degrees(locators: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
    nonzero = locators != 0
    top = locators.shape[1] - 1 - np.argmax(nonzero[:, ::-1], axis=1)
    return np.where(nonzero.any(axis=1), top, 0)


def chien_search_batch(
    locators: npt.ArrayLike,
) -> tuple[npt.NDArray[np.bool_], npt.NDArray[np.bool_]]:
    """
    Evaluate every locator at the inverse locator alpha^(-degree) of all 255 positions.

    Returns:
        (roots, ok): roots is an (M, 255) position mask; ok is False where the number
        of distinct roots differs from the locator degree
    """
    lam = np.asarray(locators, dtype=np.int64)
    if lam.ndim != 2 or lam.shape[1] > T + 1:
        raise ValueError(f"locators must be an (M, <={T + 1}) coefficient matrix")
    values = np.zeros((lam.shape[0], N), dtype=np.int64)
    for k in range(lam.shape[1]):
        coeff = lam[:, k : k + 1]
        exponent = LOG_TABLE[coeff] - k * DEGREES[np.newaxis, :]
        term = EXP_TABLE[np.mod(exponent, FIELD_ORDER)]
        values ^= np.where(coeff == 0, 0, term)
    roots = values == 0
    ok = roots.sum(axis=1) == _locator_degrees(lam)
    return roots, ok


def chien_search(locator: FieldPolynomial) -> frozenset[int] | None:
    """Positions whose inverse locator is a root, or ``None`` if the root count != degree."""
    if locator.degree > T:
        raise ValueError(f"locator degree {locator.degree} exceeds t = {T}")
    roots, ok = chien_search_batch(np.asarray(locator.coefficients, dtype=np.int64)[np.newaxis])
    if not ok[0]:
        return None
    return frozenset(int(j) for j in np.flatnonzero(roots[0]))


def bdd_decode_batch(
    words: npt.ArrayLike, s: npt.NDArray[np.int64] | None = None
) -> BatchBddOutcome:
    """
    Bounded-distance decode every word of an (M, 255) matrix.

    Args:
        words: received words
        s: their syndromes, if already computed

    Returns:
        BatchBddOutcome; corrected words are always codewords, possibly the wrong one
    """
    bits = _as_words(words)
    if s is None:
        s = syndromes_batch(bits)
    kind = np.full(bits.shape[0], BddKind.NO_ERROR, dtype=np.int8)
    flips = np.zeros(bits.shape, dtype=np.bool_)

    active = np.flatnonzero(s.any(axis=1))
    if active.size == 0:
        return BatchBddOutcome(kind=kind, flips=flips)

    locators, solved = solve_error_locators(s[active])
    roots, found = chien_search_batch(locators)
    success = solved & found
    kind[active] = np.where(success, BddKind.CORRECTED, BddKind.FAILURE)
    flips[active[success]] = roots[success]
    return BatchBddOutcome(kind=kind, flips=flips)


def mu_values(decoded: npt.ArrayLike, failed: npt.ArrayLike) -> npt.NDArray[np.int8]:
    """+1 for a decoded 0, -1 for a decoded 1, and 0 throughout failed words."""
    mu = (1 - 2 * np.asarray(decoded, dtype=np.int8)).astype(np.int8)
    return np.where(np.asarray(failed, dtype=np.bool_), np.int8(0), mu).astype(np.int8)


def bdd_decode(word: npt.ArrayLike) -> BddOutcome:
    """Bounded-distance decode one component word."""
    bits = _as_word(word)
    batch = bdd_decode_batch(bits[np.newaxis, :])
    kind = BddKind(int(batch.kind[0]))
    mask = batch.flips[0]
    decoded = bits ^ mask.astype(np.uint8)
    mu = mu_values(decoded, np.full(N, kind is BddKind.FAILURE))
    return BddOutcome(kind=kind, flips=frozenset(int(j) for j in np.flatnonzero(mask)), mu=mu)
