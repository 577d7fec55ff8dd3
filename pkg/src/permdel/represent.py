"""The bijection between permutations and suffix-rotation digit vectors.

Every permutation of length n factors uniquely as a product of suffix
rotations, one per level::

    p  =  suffix_rotation(n, n-2, a_1) o ... o suffix_rotation(n, 0, a_{n-1})

with digits a_j in {1, ..., j+1} and a_0 fixed at 1.  ``RepVector`` holds the
digit vector [a_0, ..., a_{n-1}]; ``rep_naive``/``rep_fast`` compute it from a
permutation and ``rep_inverse_naive``/``rep_inverse_fast`` rebuild the
permutation.  The *parity* of a permutation is the plain integer sum of its
digits; the codec fixes it modulo n to carve out a codebook.

Digit semantics (used throughout): rotate p so that symbol n-1-j sits first;
a_j is then the number of symbols larger than n-2-j that appear to the left
of n-2-j.  Equivalently, a_j counts the symbols >= n-1-j inside the cyclic
window that starts at the position of symbol n-1-j and ends at the position
of symbol n-2-j.  For j = n-1 the window ends at the period boundary instead,
which gives a_{n-1} = n - (position of symbol 0).

Text format for digit vectors: comma-separated decimal components including
the leading 1, e.g. ``"1,1,2,3,5"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidRepVectorError
from .perms import Permutation, compose, identity, inverse, suffix_rotation
from .structures import InsertableSequence, RankedSet

__all__ = [
    "RepVector",
    "BitProfile",
    "ParityProfile",
    "shifted_mod",
    "rep_naive",
    "rep_fast",
    "rep_inverse_naive",
    "rep_inverse_fast",
    "parity",
    "b_sequence",
    "insertion_parities",
    "parse_rep_vector",
    "rep_vector_text",
]


@dataclass(frozen=True)
class RepVector:
    """Digit vector [a_0, ..., a_{n-1}] with a_0 = 1 and 1 <= a_j <= j+1."""

    components: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.components, tuple):
            object.__setattr__(self, "components", tuple(self.components))
        if len(self.components) < 1:
            raise InvalidRepVectorError("digit vector needs at least one component")
        for j, a in enumerate(self.components):
            if not 1 <= a <= j + 1:
                raise InvalidRepVectorError(
                    f"component a_{j} = {a} outside 1..{j + 1}"
                )

    @property
    def n(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return rep_vector_text(self)


@dataclass(frozen=True)
class BitProfile:
    """The bits b_1, ..., b_{n-1} recording which digit walks pass the largest symbol."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.bits, tuple):
            object.__setattr__(self, "bits", tuple(self.bits))
        for j, b in enumerate(self.bits, start=1):
            if b not in (0, 1):
                raise InvalidRepVectorError(f"bit b_{j} = {b} is not 0/1")

    @property
    def n(self) -> int:
        return len(self.bits) + 1


@dataclass(frozen=True)
class ParityProfile:
    """Parities of the n candidate permutations produced by reinsertions.

    Entry i is the parity of the candidate that reinserts the trailing symbol
    at position n-1-i; entry 0 is the parity of the uninserted permutation.
    For valid inputs the entries are n consecutive integers, so they cover
    every residue class modulo n exactly once.
    """

    parities: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.parities, tuple):
            object.__setattr__(self, "parities", tuple(self.parities))


def shifted_mod(x: int, n: int) -> int:
    """The residue of x in the shifted range {1, ..., n} (n when n divides x)."""
    r = x % n
    return n if r == 0 else r


def parity(alpha: RepVector) -> int:
    """Sum of the digit components, as a plain (unreduced) integer."""
    return sum(alpha.components)


def rep_inverse_naive(alpha: RepVector) -> Permutation:
    """Rebuild the permutation by composing the suffix-rotation factors.

    Quadratic-time reference: starting from the identity, step j applies the
    rotation at start position n-1-j with shift a_j on the right.
    """
    n = alpha.n
    digits = alpha.components
    p = identity(n)
    for j in range(1, n):
        p = compose(p, suffix_rotation(n, n - 1 - j, digits[j]))
    return p


def rep_naive(rho: Permutation) -> RepVector:
    """Digit vector of a permutation by direct cyclic-window counting (O(n^2)).

    Works on the inverse permutation: with c[s] the position of symbol s,
    digit a_i counts the symbols s in {n-1-i, ..., n-1} whose position falls
    inside the cyclic window from c[n-1-i] to c[n-2-i].
    """
    n = rho.n
    c = inverse(rho).values
    a = [0] * n
    for i in range(n - 1):
        anchor = c[n - 1 - i]
        bound = (c[n - 2 - i] - anchor) % n
        count = 0
        for k in range(i + 1):
            if (c[n - 1 - k] - anchor) % n <= bound:
                count += 1
        a[i] = count
    a[n - 1] = n - c[0]
    return RepVector(tuple(a))


def rep_fast(rho: Permutation) -> RepVector:
    """Digit vector of a permutation in O(n log n) via rank queries.

    Processes symbols j = 0, 1, ... in increasing order, keeping the positions
    of already-processed symbols in a RankedSet.  The digit for symbol j is
    the length of the cyclic window from position-of-j to position-of-(j-1)
    minus the number of processed (smaller) symbols lying inside it; the
    window may wrap around the end of the vector.
    """
    n = rho.n
    iota = inverse(rho).values
    a = [0] * n
    a[n - 1] = n - iota[0]
    ranks = RankedSet(n)
    ranks.insert(iota[0])
    count_less = ranks.count_less
    insert = ranks.insert
    for j in range(1, n):
        prev = iota[j - 1]
        cur = iota[j]
        if prev > cur:
            a[n - 1 - j] = (prev - cur) - (count_less(prev) - count_less(cur))
        else:
            a[n - 1 - j] = (prev - cur + n) - (j - count_less(cur) + count_less(prev))
        insert(cur)
    return RepVector(tuple(a))


def rep_inverse_fast(alpha: RepVector) -> Permutation:
    """Rebuild the permutation in O(n log n) with positional insertions.

    Builds the cyclic order of the symbols n-1, n-2, ..., 0 by inserting each
    symbol j exactly a_{n-2-j} slots to the right of symbol j+1.  To sidestep
    cyclic wrap-around the working array holds two mirrored copies of the
    word, so every insertion is performed twice, the copies one (new) word
    length apart.  The last digit finally picks which length-n window of the
    doubled array is the answer: symbol 0 must land at position n - a_{n-1}.
    """
    n = alpha.n
    digits = alpha.components
    if n == 1:
        return Permutation((0,))
    if n == 2:
        return Permutation((1, 0) if digits[1] == 1 else (0, 1))
    seq = InsertableSequence((n - 2, n - 1, n - 2, n - 1))
    x = 0  # index of the first copy of the most recently placed symbol
    size = 2  # symbols in the cyclic word so far
    insert_at = seq.insert_at
    for j in range(n - 3, -1, -1):
        p = x + digits[n - 2 - j]
        if p > size:
            p -= size
        size += 1
        insert_at(p, j)
        insert_at(p + size, j)
        x = p
    start = (x + digits[n - 1]) % n
    flat = seq.to_list()
    return Permutation(tuple(flat[start : start + n]))


def b_sequence(rho: Permutation) -> BitProfile:
    """The bits b_1, ..., b_{n-1} governing how reinsertion shifts the parity.

    Walk the vector of rho cyclically to the right from symbol i to symbol
    i-1; bit b_{n-1-i} is 1 exactly when the walk passes the largest symbol
    n-1.  For i = 0 the walk ends at the period boundary instead of at a
    symbol, i.e. its length is the unreduced distance n - position(0), and
    the boundary itself is reached before any wrapped-around symbol.
    """
    n = rho.n
    pos = inverse(rho).values
    top = pos[n - 1]
    bits = [0] * (n - 1)
    for i in range(n - 1):
        to_top = (pos[i] - top) % n  # n minus the walk distance to symbol n-1
        if i == 0:
            walk = n - pos[0]
        else:
            walk = (pos[i - 1] - pos[i]) % n
        bits[n - 2 - i] = 0 if to_top + walk <= n else 1
    return BitProfile(tuple(bits))


def insertion_parities(pi: Permutation) -> ParityProfile:
    """Parities of all n reinsertion candidates of pi, in O(n log n).

    pi is the received word with the missing symbol appended at the end.  The
    candidate that moves the trailing symbol back to position n-1-i has the
    inverse suffix_rotation(n, n-1-i, 1) o inverse(pi), and its parity follows
    from entry 0 by a running update driven by the bit sequence:

        profile[i] = profile[0] + i * (1 - b_i) - (b_1 + ... + b_i)

    Only one full digit-vector computation is performed.
    """
    n = pi.n
    rho = inverse(pi)
    base = parity(rep_fast(rho))
    bits = b_sequence(rho).bits
    out = [base] * n
    ones = 0
    for i in range(1, n):
        b = bits[i - 1]
        ones += b
        out[i] = base + i * (1 - b) - ones
    return ParityProfile(tuple(out))


def parse_rep_vector(text: str) -> RepVector:
    """Parse the comma-separated digit-vector text format."""
    parts = [part.strip() for part in text.split(",") if part.strip() != ""]
    try:
        components = tuple(int(part) for part in parts)
    except ValueError as exc:
        raise InvalidRepVectorError(f"cannot parse digit vector {text!r}") from exc
    return RepVector(components)


def rep_vector_text(alpha: RepVector) -> str:
    """Render a digit vector in the comma-separated text format."""
    return ",".join(str(a) for a in alpha.components)
