"""Order-statistic containers used by the quasi-linear code paths.

``RankedSet`` answers "how many stored values are below x" in O(log U) over a
bounded integer universe, via a cumulative-count (Fenwick) array.

``InsertableSequence`` supports insert-at-arbitrary-index and positional reads.
It stores elements in chunks of bounded size and locates a position through a
Fenwick index over chunk sizes, so single operations cost O(chunk + log chunks);
with the fixed chunk size this behaves linearly in practice for the workloads
here (millions of inserts).  Neither structure supports removal; the encoding
and decoding algorithms never delete.

Instances are not safe for concurrent mutation.  Distinct instances may be
used in parallel, and read-only access after construction is safe to share.
"""

from __future__ import annotations

from itertools import chain
from typing import Iterable, Iterator

from .errors import DuplicateInsertError, IndexOutOfRangeError, ParamOutOfRangeError

__all__ = ["RankedSet", "InsertableSequence"]


class RankedSet:
    """Set of distinct integers from {0, ..., universe-1} with rank queries."""

    __slots__ = ("_universe", "_tree", "_present", "_size")

    def __init__(self, universe: int, values: Iterable[int] = ()) -> None:
        if universe < 0:
            raise ParamOutOfRangeError("universe size must be nonnegative")
        self._universe = universe
        self._tree = [0] * (universe + 1)
        self._present = bytearray(universe)
        self._size = 0
        for v in values:
            self.insert(v)

    def __len__(self) -> int:
        return self._size

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self._universe and bool(self._present[x])

    def insert(self, x: int) -> None:
        """Add x to the set; x must not already be present."""
        if not 0 <= x < self._universe:
            raise ParamOutOfRangeError(
                f"value {x} outside universe 0..{self._universe - 1}"
            )
        if self._present[x]:
            raise DuplicateInsertError(f"value {x} already present")
        self._present[x] = 1
        self._size += 1
        tree = self._tree
        limit = self._universe
        i = x + 1
        while i <= limit:
            tree[i] += 1
            i += i & -i

    def count_less(self, x: int) -> int:
        """Number of stored values strictly below x (x may be any integer)."""
        if x <= 0:
            return 0
        if x > self._universe:
            return self._size
        tree = self._tree
        total = 0
        i = x
        while i > 0:
            total += tree[i]
            i -= i & -i
        return total


# Chunks split once they exceed twice this load.
_LOAD = 2048


class InsertableSequence:
    """A list of integers supporting insert_at(k, v) and positional get(k)."""

    __slots__ = ("_blocks", "_tree", "_hi_bit", "_len")

    def __init__(self, values: Iterable[int] = ()) -> None:
        flat = list(values)
        self._len = len(flat)
        self._blocks = [flat[i : i + _LOAD] for i in range(0, len(flat), _LOAD)] or [[]]
        self._rebuild_index()

    def _rebuild_index(self) -> None:
        blocks = self._blocks
        m = len(blocks)
        tree = [0] * (m + 1)
        for i in range(1, m + 1):
            tree[i] += len(blocks[i - 1])
            j = i + (i & -i)
            if j <= m:
                tree[j] += tree[i]
        self._tree = tree
        self._hi_bit = 1 << (m.bit_length() - 1)

    def _locate(self, k: int) -> tuple[int, int]:
        """Map rank k to (block index, offset); k == len maps past the end."""
        tree = self._tree
        m = len(self._blocks)
        idx = 0
        bit = self._hi_bit
        while bit:
            nxt = idx + bit
            if nxt <= m and tree[nxt] <= k:
                k -= tree[nxt]
                idx = nxt
            bit >>= 1
        return idx, k

    def __len__(self) -> int:
        return self._len

    def __iter__(self) -> Iterator[int]:
        return chain.from_iterable(self._blocks)

    def insert_at(self, k: int, v: int) -> None:
        """Insert v so that it occupies index k; 0 <= k <= len is required."""
        if not 0 <= k <= self._len:
            raise IndexOutOfRangeError(f"insert position {k} outside 0..{self._len}")
        blocks = self._blocks
        idx, offset = self._locate(k)
        if idx == len(blocks):
            idx -= 1
            offset = len(blocks[idx])
        block = blocks[idx]
        block.insert(offset, v)
        self._len += 1
        if len(block) > 2 * _LOAD:
            half = len(block) // 2
            blocks.insert(idx + 1, block[half:])
            del block[half:]
            self._rebuild_index()
        else:
            tree = self._tree
            m = len(blocks)
            i = idx + 1
            while i <= m:
                tree[i] += 1
                i += i & -i

    def get(self, k: int) -> int:
        """The element at index k."""
        if not 0 <= k < self._len:
            raise IndexOutOfRangeError(f"index {k} outside 0..{self._len - 1}")
        idx, offset = self._locate(k)
        return self._blocks[idx][offset]

    __getitem__ = get

    def to_list(self) -> list[int]:
        """Materialize the whole sequence as a plain list."""
        return list(chain.from_iterable(self._blocks))
