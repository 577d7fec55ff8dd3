"""Encoder, decoder and membership test for the deletion-correcting codes.

The codebook with parameters (n, T) consists of the permutations p whose
inverse has digit-vector parity congruent to T modulo n.  Each codebook has
(n-1)! codewords, the n codebooks partition all permutations of length n, and
every codebook corrects one deletion.

Messages live in the mixed-radix data domain {1,2} x {1,2,3} x ... x
{1,...,n-1}: the data digits a_1, ..., a_{n-2}.  Encoding appends the unique
final digit that forces the total parity into T's residue class and inverts
the digit-vector bijection.  Decoding reinserts the missing symbol at the one
position whose candidate parity lands in T's class; the parities of all n
candidate positions are computed together in O(n log n) from a single
digit-vector evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import (
    DigitOutOfRangeError,
    InvalidSymbolsError,
    LengthMismatchError,
    MessageOutOfRangeError,
    NotACodewordError,
    ParamOutOfRangeError,
    WrongLengthError,
)
from .perms import Permutation, inverse
from .represent import (
    RepVector,
    insertion_parities,
    parity,
    rep_fast,
    rep_inverse_fast,
    shifted_mod,
)

__all__ = [
    "CodeParams",
    "DigitMessage",
    "DecodeResult",
    "digits_from_message",
    "message_from_digits",
    "encode",
    "membership",
    "decode",
]


@dataclass(frozen=True)
class CodeParams:
    """Codebook identifier: length n >= 2 and parity class t (reduced mod n)."""

    n: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ParamOutOfRangeError(f"code length {self.n} must be at least 2")
        object.__setattr__(self, "t", self.t % self.n)


@dataclass(frozen=True)
class DigitMessage:
    """Data digits a_1, ..., a_{n-2} with a_j in {1, ..., j+1}.

    ``value`` is the little-endian mixed-radix integer sum((a_j - 1) * j!),
    computed lazily: it can be astronomically large, and the encoder never
    needs it.
    """

    n: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.digits, tuple):
            object.__setattr__(self, "digits", tuple(self.digits))
        if self.n < 2:
            raise ParamOutOfRangeError(f"message length {self.n} must be at least 2")
        if len(self.digits) != self.n - 2:
            raise DigitOutOfRangeError(
                f"expected {self.n - 2} digits, got {len(self.digits)}"
            )
        for j, a in enumerate(self.digits, start=1):
            if not 1 <= a <= j + 1:
                raise DigitOutOfRangeError(f"digit a_{j} = {a} outside 1..{j + 1}")

    @cached_property
    def value(self) -> int:
        return message_from_digits(self)


@dataclass(frozen=True)
class DecodeResult:
    """Decoded codeword, its data digits, and where the missing symbol went.

    ``insertion_index`` is n-1 when the input already had full length.
    """

    codeword: Permutation
    digits: DigitMessage
    insertion_index: int


def digits_from_message(n: int, m: int) -> DigitMessage:
    """Expand a message integer in 0 <= m < (n-1)! into its data digits.

    Little-endian factoradic: peel radices 2, 3, ..., n-1 in order.

    >>> digits_from_message(4, 5).digits
    (2, 3)
    """
    if m < 0:
        raise MessageOutOfRangeError(f"message {m} is negative")
    rest = m
    digits = []
    for j in range(1, n - 1):
        rest, r = divmod(rest, j + 1)
        digits.append(1 + r)
    if rest != 0:
        raise MessageOutOfRangeError(f"message {m} is not below ({n}-1)!")
    msg = DigitMessage(n, tuple(digits))
    msg.__dict__["value"] = m  # seed the lazy field; it is already known
    return msg


def message_from_digits(d: DigitMessage) -> int:
    """The message integer of a digit vector (inverse of digits_from_message)."""
    value = 0
    for j in range(len(d.digits), 0, -1):
        value = value * (j + 1) + (d.digits[j - 1] - 1)
    return value


def encode(params: CodeParams, d: DigitMessage) -> Permutation:
    """Encode data digits into a codeword of the (n, t) codebook.

    The final digit a_{n-1} is the shifted residue <t - 1 - sum(digits)>_n in
    {1, ..., n}, which makes the full digit vector sum to t modulo n.  The
    codeword is the inverse of the permutation the digit vector maps to.
    """
    if d.n != params.n:
        raise LengthMismatchError(
            f"message length {d.n} does not match code length {params.n}"
        )
    n = params.n
    last = shifted_mod(params.t - 1 - sum(d.digits), n)
    alpha = RepVector((1,) + d.digits + (last,))
    return inverse(rep_inverse_fast(alpha))


def membership(p: Permutation, params: CodeParams) -> bool:
    """Whether p belongs to the (n, t) codebook."""
    if p.n != params.n:
        raise LengthMismatchError(
            f"permutation length {p.n} does not match code length {params.n}"
        )
    return parity(rep_fast(inverse(p))) % params.n == params.t


def _checked_symbols(w: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate distinctness and range of received symbols."""
    seen = bytearray(n)
    out = tuple(w)
    for i, v in enumerate(out):
        if not 0 <= v < n:
            raise InvalidSymbolsError(f"symbol {v} at index {i} is outside 0..{n - 1}")
        if seen[v]:
            raise InvalidSymbolsError(f"symbol {v} repeats at index {i}")
        seen[v] = 1
    return out


def decode(params: CodeParams, w: Sequence[int]) -> DecodeResult:
    """Recover codeword and data from a received word of length n or n-1.

    A full-length word is only checked for membership.  A word one short is
    completed: the missing symbol is appended, the parity profile of all n
    reinsertion positions is computed, and the unique position whose parity
    falls in t's residue class locates the deletion.
    """
    n = params.n
    word = _checked_symbols(w, n)
    if len(word) == n:
        codeword = Permutation(word)
        alpha = rep_fast(inverse(codeword))
        if parity(alpha) % n != params.t:
            raise NotACodewordError(
                f"word has parity class {parity(alpha) % n}, expected {params.t}"
            )
        digits = DigitMessage(n, alpha.components[1 : n - 1])
        return DecodeResult(codeword=codeword, digits=digits, insertion_index=n - 1)
    if len(word) != n - 1:
        raise WrongLengthError(
            f"received word must have length {n} or {n - 1}, got {len(word)}"
        )
    missing = n * (n - 1) // 2 - sum(word)
    appended = Permutation(word + (missing,))
    profile = insertion_parities(appended).parities
    hits = [i for i, p in enumerate(profile) if p % n == params.t]
    if len(hits) != 1:
        raise RuntimeError(
            f"parity profile hit class {params.t} at {len(hits)} positions; "
            "this contradicts the single-deletion guarantee"
        )
    position = n - 1 - hits[0]
    codeword = Permutation(word[:position] + (missing,) + word[position:])
    alpha = rep_fast(inverse(codeword))
    digits = DigitMessage(n, alpha.components[1 : n - 1])
    return DecodeResult(codeword=codeword, digits=digits, insertion_index=position)
