"""The transpose-then-reshape pixel shuffle as an explicit permutation.

A :class:`Permutation` stores ``mapping[k]``, the destination linear index of
source index ``k``. Its disjoint cycles are computed once at construction, so
the ``k``-th power costs O(N) however large ``k`` is.
"""

import math

import numpy as np

from ._validation import SizeMismatchError, check_channel


class Permutation:
    """A bijection on ``{0, ..., size - 1}`` with its cycle decomposition."""

    def __init__(self, mapping, check=True):
        mapping = np.array(mapping, dtype=np.intp).ravel()
        if check:
            n = mapping.size
            seen = np.zeros(n, dtype=bool)
            if n and (mapping.min() < 0 or mapping.max() >= n):
                raise ValueError("permutation entries out of range")
            seen[mapping] = True
            if not seen.all():
                raise ValueError("mapping is not a bijection")
        mapping.setflags(write=False)
        self.mapping = mapping
        self.cycles = self._decompose(mapping)

    @staticmethod
    def _decompose(mapping):
        n = mapping.size
        visited = bytearray(n)
        cycles = []
        fwd = mapping.tolist()
        for start in range(n):
            if visited[start]:
                continue
            cyc = [start]
            visited[start] = 1
            nxt = fwd[start]
            while nxt != start:
                cyc.append(nxt)
                visited[nxt] = 1
                nxt = fwd[nxt]
            cycles.append(np.array(cyc, dtype=np.intp))
        return cycles

    @classmethod
    def identity(cls, size):
        return cls(np.arange(size), check=False)

    @property
    def size(self):
        return self.mapping.size

    @property
    def order(self):
        """Smallest ``k >= 1`` with ``self ** k`` equal to the identity."""
        return math.lcm(*(len(c) for c in self.cycles)) if self.cycles else 1

    def is_identity(self):
        return bool(np.array_equal(self.mapping, np.arange(self.size)))

    def compose(self, other):
        """Permutation equivalent to applying ``self`` first, then ``other``."""
        if other.size != self.size:
            raise SizeMismatchError(
                f"cannot compose permutations of sizes {self.size} and {other.size}"
            )
        return Permutation(other.mapping[self.mapping], check=False)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return bool(np.array_equal(self.mapping, other.mapping))

    __hash__ = None

    def __pow__(self, k):
        return permutation_power(self, k)

    def __len__(self):
        return self.size

    def __repr__(self):
        if self.size <= 16:
            return f"Permutation({self.mapping.tolist()})"
        return f"Permutation(size={self.size}, cycles={len(self.cycles)})"


def build_transpose_reshape_permutation(c, p):
    """Permutation of transposing a ``c x p`` matrix and refilling it column-major.

    In linear row-major indices this is ``k -> (k mod c) * p + k // c``. Row
    and column vectors give the identity; square matrices give the transpose.
    """
    if c < 1 or p < 1:
        raise ValueError(f"dimensions must be positive, got {c}x{p}")
    k = np.arange(c * p, dtype=np.intp)
    return Permutation((k % c) * p + k // c, check=False)


def apply_permutation(perm, ch):
    """Move every sample of ``ch`` from linear index ``k`` to ``perm.mapping[k]``."""
    ch = check_channel(ch)
    if perm.size != ch.size:
        raise SizeMismatchError(
            f"permutation of size {perm.size} cannot act on a {ch.shape[0]}x{ch.shape[1]} channel"
        )
    out = np.empty(ch.size, dtype=ch.dtype)
    out[perm.mapping] = ch.ravel()
    return out.reshape(ch.shape)


def invert_permutation(perm):
    inv = np.empty_like(perm.mapping)
    inv[perm.mapping] = np.arange(perm.size, dtype=np.intp)
    return Permutation(inv, check=False)


def permutation_power(perm, k):
    """``perm`` composed with itself ``k`` times, via the cycle decomposition."""
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    out = np.empty_like(perm.mapping)
    for cyc in perm.cycles:
        n = cyc.size
        shift = k % n
        out[cyc] = np.roll(cyc, -shift) if shift else cyc
    return Permutation(out, check=False)


def naive_iterate(perm, k):
    """Literal ``k``-fold composition; the slow reference for :func:`permutation_power`."""
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    result = Permutation.identity(perm.size)
    for _ in range(k):
        result = result.compose(perm)
    return result
