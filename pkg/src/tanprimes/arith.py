"""Prime and arithmetic-function infrastructure.

Segmented sieve (wheel-2) plus the classical arithmetic functions the
decompositions need: von Mangoldt Lambda, Moebius mu, and the k-fold
divisor function tau_k.  Exactness is preferred over speed everywhere:
factorizations come from a smallest-prime-factor table below the segment
cap and trial division above it.

Segments are independent, so sieving parallelizes by range; the base
prime table is read-only shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ResourceError

SEGMENT_SIZE = 1 << 20
SPAN_BUDGET = 1 << 28  # max (hi - lo) a single primes_in call will take

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)  # exact below 3.3e24


def sieve_flags(limit: int) -> np.ndarray:
    """Boolean primality table for 0..limit (inclusive), plain Eratosthenes."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:: p] = False
    return flags


_flags_cache: np.ndarray = sieve_flags(1 << 16)


def prime_flags(limit: int) -> np.ndarray:
    """Cached, grow-only primality bitmap covering at least 0..limit."""
    global _flags_cache
    if limit >= len(_flags_cache):
        _flags_cache = sieve_flags(int(limit * 1.2) + 16)
    return _flags_cache


@dataclass
class SieveSegment:
    """Primality bitmap for [lo, hi); flags[i] iff lo+i is prime."""

    lo: int
    hi: int
    flags: np.ndarray

    def primes(self) -> np.ndarray:
        return self.lo + np.nonzero(self.flags)[0]


def _base_primes(limit: int) -> np.ndarray:
    return np.nonzero(prime_flags(limit))[0]


def sieve_segment(lo: int, hi: int) -> SieveSegment:
    """Sieve [lo, hi) against base primes <= sqrt(hi); wheel-2 internally."""
    n = hi - lo
    flags = np.zeros(n, dtype=bool)
    # odd candidates only; 2 handled explicitly
    start = lo if lo % 2 else lo + 1
    flags[start - lo:: 2] = True
    if lo <= 2 < hi:
        flags[2 - lo] = True
    if lo <= 1 < hi:
        flags[1 - lo] = False
    for p in _base_primes(math.isqrt(max(hi - 1, 1))):
        p = int(p)
        if p == 2:
            continue
        first = max(p * p, ((lo + p - 1) // p) * p)
        if first % 2 == 0:
            first += p
        if first < hi:
            flags[first - lo:: 2 * p] = False
    return SieveSegment(lo, hi, flags)


def primes_in(lo: int, hi: int, segment_size: int = SEGMENT_SIZE) -> np.ndarray:
    """Ascending array of exactly the primes in [lo, hi)."""
    if not (2 <= lo < hi):
        raise ValueError(f"need 2 <= lo < hi, got [{lo}, {hi})")
    if hi - lo > SPAN_BUDGET:
        raise ResourceError(
            f"span {hi - lo} exceeds budget {SPAN_BUDGET}; re-segment the call")
    chunks = []
    for a in range(lo, hi, segment_size):
        b = min(a + segment_size, hi)
        chunks.append(sieve_segment(a, b).primes())
    return np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)


def is_prime(n: int) -> bool:
    """Exact primality: bitmap lookup below the cache, Miller-Rabin above.

    The Miller-Rabin base set is deterministic for n < 3.3 * 10^24.
    """
    if n < 2:
        return False
    if n < len(_flags_cache):
        return bool(_flags_cache[n])
    if n >= 3_317_044_064_679_887_385_961_981:
        raise ValueError("n beyond the deterministic Miller-Rabin range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# -- factorization ----------------------------------------------------------

_SPF_LIMIT = 1 << 20
_spf_cache: np.ndarray | None = None


def _spf_table() -> np.ndarray:
    """Smallest-prime-factor table for 0.._SPF_LIMIT-1 (0 and 1 map to self)."""
    global _spf_cache
    if _spf_cache is None:
        spf = np.zeros(_SPF_LIMIT, dtype=np.int32)
        for p in range(2, math.isqrt(_SPF_LIMIT) + 1):
            if spf[p] == 0:
                sl = spf[p * p:: p]
                sl[sl == 0] = p
        rest = spf == 0  # primes, plus {0, 1}
        spf[rest] = np.arange(_SPF_LIMIT, dtype=np.int32)[rest]
        _spf_cache = spf
    return _spf_cache


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization [(p, e), ...], ascending p.

    SPF-table walk below the segment cap, trial division (mod-30 wheel)
    above it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out: list[tuple[int, int]] = []
    if n < _SPF_LIMIT:
        spf = _spf_table()
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 7
    incs = (4, 2, 4, 2, 4, 6, 2, 6)  # wheel mod 30
    i = 0
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += incs[i]
        i = (i + 1) % 8
    if n > 1:
        out.append((n, 1))
    return out


def prime_power_split(n: int) -> tuple[int, int] | None:
    """(p, k) if n = p^k for prime p, else None."""
    fac = factorize(n) if n > 1 else []
    if len(fac) == 1:
        return fac[0]
    return None


def mangoldt(n: int) -> float:
    """von Mangoldt: log p at prime powers p^k, zero elsewhere."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pk = prime_power_split(n)
    return math.log(pk[0]) if pk else 0.0


def mangoldt_range(lo: int, hi: int) -> np.ndarray:
    """Lambda(n) for lo <= n < hi as a float array (index n - lo)."""
    out = np.zeros(hi - lo, dtype=np.float64)
    flags = prime_flags(hi - 1)
    idx = np.arange(max(lo, 2), hi)
    pr = idx[flags[max(lo, 2): hi]]
    out[pr - lo] = np.log(pr.astype(np.float64))
    # higher prime powers
    for p in _base_primes(math.isqrt(max(hi - 1, 1))):
        p = int(p)
        q = p * p
        while q < hi:
            if q >= lo:
                out[q - lo] = math.log(p)
            q *= p
    return out


def moebius(n: int) -> int:
    """Moebius function: (-1)^omega on squarefree n, else 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def tau_k(n: int, k: int) -> int:
    """Number of ordered k-factorizations of n (k-fold divisor function)."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    out = 1
    for _, e in (factorize(n) if n > 1 else []):
        out *= math.comb(e + k - 1, k - 1)
    return out


def tau_k_range(limit: int, k: int) -> np.ndarray:
    """tau_k(n) for 0 <= n <= limit via k-1 divisor convolutions of ones."""
    arr = np.zeros(limit + 1, dtype=np.int64)
    arr[1:] = 1
    for _ in range(k - 1):
        nxt = np.zeros(limit + 1, dtype=np.int64)
        for d in range(1, limit + 1):
            nxt[d::d] += arr[d]
        arr = nxt
    return arr


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**j for d in ds for j in range(e + 1)]
    return sorted(ds)
