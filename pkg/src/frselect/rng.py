"""Deterministic SplitMix64 random streams.

Every random decision in the package (input shuffles, sample draws, pivot
sampling) is taken from an :class:`RngStream`.  A stream is identified by a
``(seed, stream)`` pair, so trial ``i`` of an experiment seeded with ``s``
always sees the same numbers regardless of execution order or platform.

Generator::

    state <- state + 0x9E3779B97F4A7C15           (mod 2**64)
    z     <- (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z     <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    out   <- z ^ (z >> 31)

Initial state for ``(seed, stream)`` is ``mix64(seed ^ mix64(stream + GAMMA))``.

Bounded integers in ``[0, m)`` reject raw outputs below ``2**64 mod m`` and
reduce the rest modulo ``m``; the accepted range is a multiple of ``m`` long,
so the result is exactly uniform.

The hot loops (Fisher-Yates shuffles) run in numba kernels that reproduce
the pure-Python stream bit for bit.
"""

import numpy as np
from numba import njit

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MUL1 = 0xBF58476D1CE4E5B9
MUL2 = 0x94D049BB133111EB


def mix64(z):
    z &= MASK64
    z = ((z ^ (z >> 30)) * MUL1) & MASK64
    z = ((z ^ (z >> 27)) * MUL2) & MASK64
    return z ^ (z >> 31)


class RngStream:
    """SplitMix64 stream keyed by ``(seed, stream)``."""

    def __init__(self, seed=0, stream=0):
        if seed < 0 or stream < 0:
            raise ValueError("seed and stream must be nonnegative")
        self.seed = seed & MASK64
        self.stream = stream & MASK64
        self.state = mix64(self.seed ^ mix64((self.stream + GAMMA) & MASK64))

    def next_u64(self):
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def below(self, m):
        """Uniform integer in ``[0, m)``."""
        if m <= 0:
            raise ValueError("m must be positive")
        threshold = (1 << 64) % m
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % m

    def uniform(self):
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, arr, lo=0, hi=None):
        """Fisher-Yates shuffle of ``arr[lo:hi]`` in place (numpy arrays)."""
        hi = len(arr) if hi is None else hi
        self.state = int(_shuffle(arr, lo, hi, np.uint64(self.state)))

    def stage(self, arr, lo, hi, m):
        """Move ``m`` elements drawn without replacement from ``arr[lo:hi]``
        to ``arr[lo:lo+m]`` (partial forward Fisher-Yates)."""
        if not 0 <= m <= hi - lo:
            raise ValueError("cannot draw %d of %d elements" % (m, hi - lo))
        self.state = int(_stage(arr, lo, hi, m, np.uint64(self.state)))

    def __repr__(self):
        return "RngStream(seed=%d, stream=%d)" % (self.seed, self.stream)


_G = np.uint64(GAMMA)
_M1 = np.uint64(MUL1)
_M2 = np.uint64(MUL2)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)


@njit(cache=True)
def _next(state):
    state = state + _G
    z = state
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return state, z ^ (z >> _S31)


@njit(cache=True)
def _below(state, m):
    mu = np.uint64(m)
    threshold = (np.uint64(0) - mu) % mu
    while True:
        state, x = _next(state)
        if x >= threshold:
            return state, np.int64(x % mu)


@njit(cache=True)
def _shuffle(arr, lo, hi, state):
    for i in range(hi - 1, lo, -1):
        state, j = _below(state, i - lo + 1)
        j += lo
        tmp = arr[i]
        arr[i] = arr[j]
        arr[j] = tmp
    return state


@njit(cache=True)
def _stage(arr, lo, hi, m, state):
    for i in range(lo, lo + m):
        state, j = _below(state, hi - i)
        j += i
        tmp = arr[i]
        arr[i] = arr[j]
        arr[j] = tmp
    return state
