"""Permutation arithmetic over the symbol set {0, ..., n-1}.

A permutation is stored in vector form: ``values[i]`` is the image of ``i``.
All operations are pure and return fresh immutable values, so permutations
may be shared freely between threads.

Text format: comma-separated decimal symbols, zero-based, e.g. ``"3,0,5,1,2,4"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateSymbolError,
    LengthMismatchError,
    ParamOutOfRangeError,
    SymbolOutOfRangeError,
    WrongLengthError,
)

__all__ = [
    "Permutation",
    "DeletedWord",
    "validate",
    "identity",
    "compose",
    "inverse",
    "suffix_rotation",
    "transposition",
    "delete_at",
    "deletion_ball",
    "parse_permutation",
    "permutation_text",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0, ..., n-1} in vector form; values[i] = image of i."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = self.values
        if not isinstance(values, tuple):
            values = tuple(values)
            object.__setattr__(self, "values", values)
        n = len(values)
        if n < 1:
            raise WrongLengthError("a permutation needs length at least 1")
        seen = bytearray(n)
        for i, v in enumerate(values):
            if not 0 <= v < n:
                raise SymbolOutOfRangeError(
                    f"symbol {v} at index {i} is outside 0..{n - 1}"
                )
            if seen[v]:
                raise DuplicateSymbolError(f"symbol {v} repeats at index {i}")
            seen[v] = 1

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return permutation_text(self)


@dataclass(frozen=True)
class DeletedWord:
    """Channel output after one deletion: the n-1 surviving symbols in order.

    ``missing`` is the unique absent symbol; it is determined by ``symbols``
    but carried explicitly because every consumer needs it.
    """

    n: int
    symbols: tuple[int, ...]
    missing: int

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        n = self.n
        if len(self.symbols) != n - 1:
            raise WrongLengthError(
                f"expected {n - 1} surviving symbols, got {len(self.symbols)}"
            )
        seen = bytearray(n)
        for i, v in enumerate(self.symbols):
            if not 0 <= v < n:
                raise SymbolOutOfRangeError(
                    f"symbol {v} at index {i} is outside 0..{n - 1}"
                )
            if seen[v]:
                raise DuplicateSymbolError(f"symbol {v} repeats at index {i}")
            seen[v] = 1
        if not 0 <= self.missing < n or seen[self.missing]:
            raise SymbolOutOfRangeError(
                f"missing symbol {self.missing} is not the absent one"
            )


def validate(seq: Iterable[int], n: int) -> Permutation:
    """Check that seq is a length-n rearrangement of {0, ..., n-1}.

    >>> validate((0, 2, 1, 3), 4).values
    (0, 2, 1, 3)
    """
    values = tuple(seq)
    if len(values) != n:
        raise WrongLengthError(f"expected length {n}, got {len(values)}")
    return Permutation(values)


def identity(n: int) -> Permutation:
    """The identity permutation of length n."""
    return Permutation(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Function composition: result(x) = p(q(x)).

    >>> compose(Permutation((2, 0, 1)), Permutation((1, 2, 0))).values
    (0, 1, 2)
    """
    if p.n != q.n:
        raise LengthMismatchError(f"cannot compose lengths {p.n} and {q.n}")
    pv = p.values
    return Permutation(tuple(pv[x] for x in q.values))


def inverse(p: Permutation) -> Permutation:
    """The two-sided inverse: result(p(i)) = i.

    >>> inverse(Permutation((3, 0, 5, 1, 2, 4))).values
    (1, 3, 4, 0, 5, 2)
    """
    values = p.values
    inv = [0] * len(values)
    for i, v in enumerate(values):
        inv[v] = i
    return Permutation(tuple(inv))


def suffix_rotation(n: int, i: int, s: int) -> Permutation:
    """Cyclically rotate the suffix starting at position i by s places.

    Vector form (0, ..., i-1, i+s, ..., n-1, i, ..., i+s-1); the full-shift
    case s = n-i is the identity.

    >>> suffix_rotation(4, 2, 1).values
    (0, 1, 3, 2)
    >>> suffix_rotation(4, 0, 1).values
    (1, 2, 3, 0)
    """
    if not 0 <= i <= n - 1:
        raise ParamOutOfRangeError(f"start position {i} outside 0..{n - 1}")
    if not 1 <= s <= n - i:
        raise ParamOutOfRangeError(f"shift {s} outside 1..{n - i}")
    return Permutation(tuple(range(i)) + tuple(range(i + s, n)) + tuple(range(i, i + s)))


def transposition(n: int, i: int, j: int) -> Permutation:
    """The permutation exchanging positions i and j (i < j), fixing the rest."""
    if not 0 <= i < j <= n - 1:
        raise ParamOutOfRangeError(f"need 0 <= i < j <= {n - 1}, got i={i}, j={j}")
    values = list(range(n))
    values[i], values[j] = values[j], values[i]
    return Permutation(tuple(values))


def delete_at(p: Permutation, i: int) -> DeletedWord:
    """Delete the symbol at position i.

    The surviving symbols equal the first n-1 entries of p composed with the
    single-step suffix rotation at i (the deleted symbol is pushed to the end).

    >>> delete_at(Permutation((0, 2, 1, 3)), 1).symbols
    (0, 1, 3)
    """
    n = p.n
    if not 0 <= i <= n - 1:
        raise ParamOutOfRangeError(f"position {i} outside 0..{n - 1}")
    values = p.values
    return DeletedWord(n=n, symbols=values[:i] + values[i + 1 :], missing=values[i])


def deletion_ball(p: Permutation) -> set[Permutation]:
    """All permutations reachable by deleting one symbol and appending it.

    The ball has exactly n members and always contains p itself (deleting the
    last position is a no-op under this encoding).
    """
    n = p.n
    values = p.values
    return {
        Permutation(values[:i] + values[i + 1 :] + (values[i],)) for i in range(n)
    }


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse the comma-separated text format, optionally enforcing a length."""
    parts = [part.strip() for part in text.split(",") if part.strip() != ""]
    try:
        values = tuple(int(part) for part in parts)
    except ValueError as exc:
        raise SymbolOutOfRangeError(f"cannot parse permutation text {text!r}") from exc
    if n is not None:
        return validate(values, n)
    return Permutation(values)


def permutation_text(p: Permutation) -> str:
    """Render a permutation in the comma-separated text format."""
    return ",".join(str(v) for v in p.values)
