"""Brute-force ground truth at small lengths.

Everything here favors transparency over speed: codes are enumerated by
testing every permutation, digit vectors are recomputed with the quadratic
reference ``rep_naive`` (never the fast paths being certified), and the
perfectness report re-derives each claim from scratch:

* every codebook has exactly (n-1)! codewords,
* the n codebooks partition the symmetric group,
* the one-deletion balls of a codebook tile the symmetric group disjointly,
* every (codeword, deletion position) pair decodes back to the original.

Also provided: the ascent-weighted signature identity linking the digit-sum
construction to classic single-deletion codes, and a machine check of the
pivot relations that drive the constant-time parity updates in the decoder.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations as iter_permutations
from math import factorial

from .codec import CodeParams, decode, membership
from .errors import BoundExceededError
from .perms import Permutation, compose, delete_at, inverse, suffix_rotation
from .represent import b_sequence, parity, rep_fast, rep_naive

__all__ = [
    "PerfectnessReport",
    "enumerate_code",
    "check_perfect",
    "certify_partition",
    "vt_signature_check",
    "check_parity_lemmas",
    "find_parity_lemma_violation",
    "DEFAULT_EXHAUSTIVE_BOUND",
]

DEFAULT_EXHAUSTIVE_BOUND = 8

_MAX_COUNTEREXAMPLES = 10


@dataclass(frozen=True)
class PerfectnessReport:
    """Outcome of the exhaustive perfectness certification at one length."""

    n: int
    code_sizes: tuple[int, ...]
    partition: bool
    balls_disjoint: bool
    decode_ok: bool
    counterexamples: tuple[str, ...] = field(default=())

    @property
    def sizes_ok(self) -> bool:
        expected = factorial(self.n - 1)
        return all(size == expected for size in self.code_sizes)

    @property
    def ok(self) -> bool:
        return (
            self.sizes_ok and self.partition and self.balls_disjoint and self.decode_ok
        )

    def text_lines(self) -> list[str]:
        return [
            f"n: {self.n}",
            "code_sizes: " + ",".join(str(s) for s in self.code_sizes),
            f"sizes_ok: {str(self.sizes_ok).lower()}",
            f"partition: {str(self.partition).lower()}",
            f"balls_disjoint: {str(self.balls_disjoint).lower()}",
            f"decode_ok: {str(self.decode_ok).lower()}",
            f"ok: {str(self.ok).lower()}",
        ] + [f"counterexample: {c}" for c in self.counterexamples]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "code_sizes": list(self.code_sizes),
            "sizes_ok": self.sizes_ok,
            "partition": self.partition,
            "balls_disjoint": self.balls_disjoint,
            "decode_ok": self.decode_ok,
            "ok": self.ok,
            "counterexamples": list(self.counterexamples),
        }


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise BoundExceededError(
            f"length {n} exceeds the exhaustive bound {bound}"
        )


def enumerate_code(params: CodeParams, bound: int = DEFAULT_EXHAUSTIVE_BOUND) -> list[Permutation]:
    """All members of the codebook, in lexicographic vector order."""
    _check_bound(params.n, bound)
    return [
        p
        for vals in iter_permutations(range(params.n))
        for p in (Permutation(vals),)
        if membership(p, params)
    ]


def check_perfect(n: int, bound: int = DEFAULT_EXHAUSTIVE_BOUND) -> PerfectnessReport:
    """Enumerate all n codebooks of length n and certify perfectness."""
    _check_bound(n, bound)
    codes: dict[int, list[Permutation]] = {t: [] for t in range(n)}
    for vals in iter_permutations(range(n)):
        p = Permutation(vals)
        residue = parity(rep_fast(inverse(p))) % n
        codes[residue].append(p)
    return certify_partition(n, codes)


def certify_partition(n: int, codes: dict[int, list[Permutation]]) -> PerfectnessReport:
    """Certify an explicit family of codebooks (seam for fault injection)."""
    counterexamples: list[str] = []

    def note(msg: str) -> None:
        if len(counterexamples) < _MAX_COUNTEREXAMPLES:
            counterexamples.append(msg)

    sizes = tuple(len(codes.get(t, [])) for t in range(n))

    # Partition: membership holds for the claimed class, every permutation is
    # claimed exactly once, and nothing outside the symmetric group sneaks in.
    partition = True
    claimed: set[tuple[int, ...]] = set()
    for t in range(n):
        params = CodeParams(n, t)
        for p in codes.get(t, []):
            if not membership(p, params):
                partition = False
                note(f"t={t}: {p} fails membership")
            if p.values in claimed:
                partition = False
                note(f"{p} claimed by more than one codebook")
            claimed.add(p.values)
    if len(claimed) != factorial(n):
        partition = False
        note(f"codebooks cover {len(claimed)} of {factorial(n)} permutations")

    # Deletion balls of one codebook must tile the symmetric group: no member
    # may appear in two balls, and the ball count must reach n!.
    balls_disjoint = True
    for t in range(n):
        seen: set[tuple[int, ...]] = set()
        for p in codes.get(t, []):
            vals = p.values
            for i in range(n):
                member = vals[:i] + vals[i + 1 :] + (vals[i],)
                if member in seen:
                    balls_disjoint = False
                    note(f"t={t}: ball member {member} duplicated")
                seen.add(member)
        if sizes[t] == factorial(n - 1) and len(seen) != factorial(n):
            balls_disjoint = False
            note(f"t={t}: balls cover {len(seen)} of {factorial(n)} permutations")

    # Every deletion of every codeword must decode back; expected digits come
    # from the quadratic reference path.
    decode_ok = True
    for t in range(n):
        params = CodeParams(n, t)
        for p in codes.get(t, []):
            expected_digits = rep_naive(inverse(p)).components[1 : n - 1]
            for i in range(n):
                received = delete_at(p, i)
                try:
                    result = decode(params, received.symbols)
                except Exception as exc:  # noqa: BLE001 - report, do not abort
                    decode_ok = False
                    note(f"t={t}: decode({p}, pos {i}) raised {exc!r}")
                    continue
                if (
                    result.codeword != p
                    or result.insertion_index != i
                    or result.digits.digits != expected_digits
                ):
                    decode_ok = False
                    note(f"t={t}: decode({p}, pos {i}) returned {result.codeword}")

    return PerfectnessReport(
        n=n,
        code_sizes=sizes,
        partition=partition,
        balls_disjoint=balls_disjoint,
        decode_ok=decode_ok,
        counterexamples=tuple(counterexamples),
    )


def vt_signature_check(rho: Permutation) -> bool:
    """Verify the ascent-weighted signature identity for one permutation.

    With digit vector [a_0, ..., a_{n-1}] of rho and c the vector form of the
    inverse of rho, the ascent indicators of c (1 where c_j > c_{j-1}) satisfy

        sum(a_j) + sum(j * ascent_j)  ==  0   (mod n).
    """
    n = rho.n
    digit_sum = parity(rep_fast(rho))
    c = inverse(rho).values
    weighted_ascents = sum(j for j in range(1, n) if c[j] > c[j - 1])
    return (digit_sum + weighted_ascents) % n == 0


def check_parity_lemmas(rho: Permutation) -> bool:
    """True when every pivot relation holds for rho (see the module docstring)."""
    return find_parity_lemma_violation(rho) is None


def find_parity_lemma_violation(rho: Permutation) -> str | None:
    """Locate the first failing pivot relation for rho, or None if all hold.

    The n reinsertion candidates of rho are built from the closed form
    (one-step suffix rotation composed on the left); their digit vectors are
    all recomputed with the quadratic reference.  The auxiliary digit vector
    of the length-(n-1) word obtained by dropping the trailing symbol of the
    inverse (values renumbered to close the gap) anchors the suffix
    relations.
    """
    n = rho.n
    alphas = [
        rep_naive(compose(suffix_rotation(n, n - 1 - i, 1), rho)).components
        for i in range(n)
    ]
    a = alphas[0]
    if n == 1:
        return None if a == (1,) else f"digit vector of {rho} is {a}"

    iota = inverse(rho).values
    head, delta = iota[: n - 1], iota[n - 1]
    for i in range(n):
        expected = head[: n - 1 - i] + (delta,) + head[n - 1 - i :]
        if inverse(compose(suffix_rotation(n, n - 1 - i, 1), rho)).values != expected:
            return f"candidate {i}: inverse is not the reinsertion at {n - 1 - i}"

    # Auxiliary vector: drop the trailing symbol, renumber by rank.
    rank = {v: r for r, v in enumerate(sorted(head))}
    shrunk = Permutation(tuple(rank[v] for v in head))
    aux = rep_naive(inverse(shrunk)).components

    bits = b_sequence(rho).bits  # bits[i-1] is b_i

    for i in range(2, n):  # prefix stability
        if any(alphas[k][i] != a[i] for k in range(1, i)):
            return f"prefix stability fails at digit {i}"
    for i in range(n - 1):  # suffix stability, anchored by the auxiliary vector
        if any(alphas[k][i] != aux[i] for k in range(i + 2, n)):
            return f"suffix stability fails at digit {i}"
    for i in range(1, n):  # digit vs auxiliary digit differs by the bit
        if a[i] != aux[i - 1] + bits[i - 1]:
            return f"digit {i}: {a[i]} != aux {aux[i - 1]} + bit {bits[i - 1]}"
    for i in range(1, n - 1):  # cross relation one step off the diagonal
        if alphas[i + 1][i - 1] != alphas[i - 1][i] - bits[i - 1]:
            return f"cross relation fails at {i}"
    for i in range(n - 1):  # adjacent pivots are complementary
        if alphas[i][i] + alphas[i + 1][i] != i + 2:
            return f"pivot sum at {i}: {alphas[i][i]} + {alphas[i + 1][i]} != {i + 2}"
    for i in range(n - 1):  # pivot recurrence
        if alphas[i + 1][i + 1] != alphas[i][i] + a[i + 1] - (i + 2) * bits[i]:
            return f"pivot recurrence fails at {i}"
    pivot = 1
    for i in range(n):  # pivot closed form
        if i > 0:
            pivot += a[i] - (i + 1) * bits[i - 1]
        if alphas[i][i] != pivot:
            return f"pivot closed form at {i}: {alphas[i][i]} != {pivot}"
    base = sum(a)
    ones = 0
    for i in range(1, n):  # parity profile identity, end to end
        ones += bits[i - 1]
        if sum(alphas[i]) != base + i * (1 - bits[i - 1]) - ones:
            return f"parity profile identity fails at {i}"
    return None
