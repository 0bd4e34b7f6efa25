"""Certified extended-precision scalar arithmetic (midpoint-radius balls).

A :class:`Ball` stores a rigorous enclosure ``[a, b]`` of a real value
together with the working precision in bits, and exposes the
midpoint-radius view ``(mid, rad)`` with the invariant

    |v - mid| <= rad        for every v the ball may represent.

All arithmetic is outward-rounded, so the result of an operation encloses
the exact result applied to any members of the operand balls.  The heavy
lifting is delegated to mpmath's interval kernels (``mpmath.libmp.libmpi``),
which round endpoints outward at the requested precision; that keeps every
operation a pure function of its inputs with no global precision state, so
balls are safe to share between worker processes.

The module also hosts the two core certified operations of the workbench:

* :func:`eval_f` -- enclosure of ``f(n) = n^c * tan^theta(log n)``, with
  ``tan`` computed as sin/cos on balls (argument reduction happens inside
  the interval kernel at full working precision) and real powers computed
  as ``exp(c * log x)``.
* :func:`certified_floor` -- floor extraction proven by an enclosure that
  excludes integers, escalating precision (doubling) until unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from mpmath import mpf as _mpf_ctx  # noqa: F401  (handy in debugging)
from mpmath.libmp import (
    fzero,
    from_float,
    from_int,
    from_str,
    mpf_abs,
    mpf_add,
    mpf_cmp,
    mpf_div,
    mpf_eq,
    mpf_ge,
    mpf_gt,
    mpf_le,
    mpf_lt,
    mpf_mul,
    mpf_neg,
    mpf_pi,
    mpf_shift,
    mpf_sub,
    round_ceiling,
    round_floor,
    round_nearest,
    to_float,
    to_str,
)
from mpmath.libmp import libmpi as _mpi

from .errors import DomainError, FloorUndecidable, PrecisionExhausted

DEFAULT_PREC = 64
PREC_CAP = 4096

_RawMpf = tuple
Real = Union[int, float, str]


def _raw(value: Real, prec: int, rnd=round_nearest) -> _RawMpf:
    """Convert to a raw mpf.  int/float are exact; str rounds at ``prec``."""
    if isinstance(value, int):
        return from_int(value)
    if isinstance(value, float):
        return from_float(value)
    if isinstance(value, str):
        return from_str(value, prec, rnd)
    if isinstance(value, tuple) and len(value) == 4:
        return value
    raise TypeError(f"cannot interpret {value!r} as a real number")


def raw_floor(x: _RawMpf) -> int:
    """Exact floor of a raw mpf (mantissa/exponent arithmetic, no rounding)."""
    sign, man, exp, bc = x
    if man == 0:
        if x == fzero:
            return 0
        raise ValueError("floor of non-finite value")
    m = -man if sign else man
    if exp >= 0:
        return m << exp
    return m >> (-exp)  # arithmetic shift floors toward -inf


class Ball:
    """Certified enclosure of one real number at a fixed working precision."""

    __slots__ = ("a", "b", "prec")

    def __init__(self, a: _RawMpf, b: _RawMpf, prec: int):
        if mpf_gt(a, b):
            raise ValueError("invalid enclosure: lower endpoint above upper")
        self.a = a
        self.b = b
        self.prec = prec

    # -- construction --------------------------------------------------

    @classmethod
    def point(cls, value: Real, prec: int = DEFAULT_PREC) -> "Ball":
        """Exact point ball for an int/float; outward-rounded pair for str."""
        if isinstance(value, str):
            return cls(from_str(value, prec, round_floor),
                       from_str(value, prec, round_ceiling), prec)
        x = _raw(value, prec)
        return cls(x, x, prec)

    @classmethod
    def from_endpoints(cls, lo: Real, hi: Real, prec: int = DEFAULT_PREC) -> "Ball":
        return cls(_raw(lo, prec, round_floor), _raw(hi, prec, round_ceiling), prec)

    @classmethod
    def pi(cls, prec: int = DEFAULT_PREC) -> "Ball":
        return cls(mpf_pi(prec, round_floor), mpf_pi(prec, round_ceiling), prec)

    # -- midpoint-radius view -------------------------------------------

    @property
    def mid(self) -> _RawMpf:
        return _mpi.mpi_mid((self.a, self.b), self.prec)

    @property
    def rad(self) -> _RawMpf:
        """Upper bound on |v - mid|; rounded up so the invariant is rigorous."""
        m = self.mid
        lo_gap = mpf_sub(m, self.a, self.prec, round_ceiling)
        hi_gap = mpf_sub(self.b, m, self.prec, round_ceiling)
        return hi_gap if mpf_ge(hi_gap, lo_gap) else lo_gap

    @property
    def mid_float(self) -> float:
        return to_float(self.mid)

    @property
    def rad_float(self) -> float:
        r = to_float(self.rad)
        # to_float rounds to nearest; bump into a safe upper bound
        return r * (1.0 + 2e-16) + 5e-324

    @property
    def width_float(self) -> float:
        return to_float(mpf_sub(self.b, self.a, 53, round_ceiling))

    # -- arithmetic ------------------------------------------------------

    def _wrap(self, iv, prec=None) -> "Ball":
        return Ball(iv[0], iv[1], prec or self.prec)

    def _coerce(self, other) -> "Ball":
        if isinstance(other, Ball):
            return other
        x = _raw(other, self.prec)
        return Ball(x, x, self.prec)

    def __add__(self, other) -> "Ball":
        o = self._coerce(other)
        return self._wrap(_mpi.mpi_add((self.a, self.b), (o.a, o.b), self.prec))

    __radd__ = __add__

    def __sub__(self, other) -> "Ball":
        o = self._coerce(other)
        return self._wrap(_mpi.mpi_sub((self.a, self.b), (o.a, o.b), self.prec))

    def __rsub__(self, other) -> "Ball":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other) -> "Ball":
        o = self._coerce(other)
        return self._wrap(_mpi.mpi_mul((self.a, self.b), (o.a, o.b), self.prec))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Ball":
        o = self._coerce(other)
        if o.contains_zero():
            raise DomainError("division by a ball containing zero")
        return self._wrap(_mpi.mpi_div((self.a, self.b), (o.a, o.b), self.prec))

    def __rtruediv__(self, other) -> "Ball":
        return self._coerce(other).__truediv__(self)

    def __neg__(self) -> "Ball":
        return self._wrap(_mpi.mpi_neg((self.a, self.b), self.prec))

    def exp(self) -> "Ball":
        return self._wrap(_mpi.mpi_exp((self.a, self.b), self.prec))

    def log(self) -> "Ball":
        if not self.is_strictly_positive():
            raise DomainError("log of a ball touching (-inf, 0]")
        return self._wrap(_mpi.mpi_log((self.a, self.b), self.prec))

    def sin(self) -> "Ball":
        return self._wrap(_mpi.mpi_sin((self.a, self.b), self.prec))

    def cos(self) -> "Ball":
        return self._wrap(_mpi.mpi_cos((self.a, self.b), self.prec))

    def tan(self) -> "Ball":
        # sin/cos quotient; the kernel reduces the argument mod pi at
        # working precision before dividing.
        return self._wrap(_mpi.mpi_tan((self.a, self.b), self.prec))

    def atan(self) -> "Ball":
        return self._wrap(_mpi.mpi_atan((self.a, self.b), self.prec))

    def sqrt(self) -> "Ball":
        return self._wrap(_mpi.mpi_sqrt((self.a, self.b), self.prec))

    def pow_int(self, k: int) -> "Ball":
        return self._wrap(_mpi.mpi_pow_int((self.a, self.b), k, self.prec))

    def pow(self, exponent: "Ball") -> "Ball":
        """Real power ``x^e = exp(e * log x)``; requires a positive base."""
        if not self.is_strictly_positive():
            raise DomainError("real power of a ball touching (-inf, 0]")
        e = self._coerce(exponent)
        return (e * self.log()).exp()

    def at_prec(self, prec: int) -> "Ball":
        return Ball(self.a, self.b, prec)

    # -- queries -----------------------------------------------------------

    def contains_zero(self) -> bool:
        return mpf_le(self.a, fzero) and mpf_ge(self.b, fzero)

    def is_strictly_positive(self) -> bool:
        return mpf_gt(self.a, fzero)

    def contains(self, value: Real) -> bool:
        x = _raw(value, self.prec)
        return mpf_le(self.a, x) and mpf_le(x, self.b)

    def lt(self, value: Real) -> bool:
        """Certainly less-than: the whole enclosure is below ``value``."""
        return mpf_lt(self.b, _raw(value, self.prec))

    def gt(self, value: Real) -> bool:
        return mpf_gt(self.a, _raw(value, self.prec))

    def le(self, value: Real) -> bool:
        return mpf_le(self.b, _raw(value, self.prec))

    def ge(self, value: Real) -> bool:
        return mpf_ge(self.a, _raw(value, self.prec))

    def floor_bounds(self) -> tuple[int, int]:
        """(floor(a), floor(b)) computed exactly."""
        return raw_floor(self.a), raw_floor(self.b)

    def is_within(self, outer: "Ball", slack_ulps: int = 1) -> bool:
        """Containment in ``outer`` inflated by ``slack_ulps`` of its ulp scale."""
        mag = mpf_abs(outer.b if mpf_ge(mpf_abs(outer.b), mpf_abs(outer.a))
                      else outer.a)
        slack = mpf_shift(mag, slack_ulps - outer.prec)
        lo = mpf_sub(outer.a, slack, outer.prec + 8, round_floor)
        hi = mpf_add(outer.b, slack, outer.prec + 8, round_ceiling)
        return mpf_ge(self.a, lo) and mpf_le(self.b, hi)

    def __repr__(self) -> str:
        dps = max(6, int(self.prec / 3.33) - 2)
        return f"Ball[{to_str(self.a, dps)}, {to_str(self.b, dps)}]@{self.prec}"


@dataclass(frozen=True)
class Params:
    """Exponent pair (c, theta) of the map f(n) = n^c * tan^theta(log n).

    ``c`` and ``theta`` are pinned to exact binary values at construction
    (floats are taken verbatim; strings are rounded once at 256 bits), so
    every module computes against the same real numbers.  gamma = 1/c is
    derived, correctly rounded at whatever precision it is requested.

    The theorem hypothesis is 1 < c < 12/11 with theta > 1; theta = 1 is
    additionally accepted here because the power then collapses and the
    map stays well-defined (used by edge tests).  The CLI enforces the
    strict hypothesis.
    """

    c_raw: _RawMpf
    theta_raw: _RawMpf

    PIN_PREC = 256

    def __init__(self, c: Real = 1.05, theta: Real = 2):
        object.__setattr__(self, "c_raw", _raw(c, self.PIN_PREC))
        object.__setattr__(self, "theta_raw", _raw(theta, self.PIN_PREC))
        # exact rational comparisons: 1 < c and 11*c < 12, theta >= 1
        one = from_int(1)
        if not mpf_gt(self.c_raw, one):
            raise DomainError(f"c = {self.c} must exceed 1")
        if not mpf_lt(mpf_mul(self.c_raw, from_int(11)), from_int(12)):
            raise DomainError(f"c = {self.c} must be below 12/11")
        if not mpf_ge(self.theta_raw, one):
            raise DomainError(f"theta = {self.theta} must be >= 1")

    @property
    def c(self) -> float:
        return to_float(self.c_raw)

    @property
    def theta(self) -> float:
        return to_float(self.theta_raw)

    @property
    def gamma(self) -> float:
        return to_float(mpf_div(from_int(1), self.c_raw, 53, round_nearest))

    def c_ball(self, prec: int) -> Ball:
        return Ball(self.c_raw, self.c_raw, prec)

    def theta_ball(self, prec: int) -> Ball:
        return Ball(self.theta_raw, self.theta_raw, prec)

    def gamma_ball(self, prec: int) -> Ball:
        one = Ball.point(1, prec)
        return one / self.c_ball(prec)

    def theta_is_one(self) -> bool:
        return mpf_eq(self.theta_raw, from_int(1))


def eval_f(n: int, p: Params, prec: int = DEFAULT_PREC,
           cap: int = PREC_CAP) -> Ball:
    """Certified enclosure of f(n) = n^c * tan^theta(log n).

    Requires tan(log n) strictly positive (true inside branch windows);
    an enclosure touching (-inf, 0] raises DomainError since the real
    power is undefined there for non-integer theta.
    """
    if prec > cap:
        raise PrecisionExhausted(f"prec {prec} exceeds cap {cap}")
    if n < 2:
        raise DomainError("n must be >= 2")
    nb = Ball.point(n, prec)
    ln = nb.log()
    t = ln.tan()
    if not t.is_strictly_positive():
        raise DomainError(
            f"tan(log {n}) enclosure touches (-inf, 0]; n is outside a "
            f"branch window")
    arg = p.c_ball(prec) * ln + p.theta_ball(prec) * t.log()
    return arg.exp()


def certified_floor(v: Ball,
                    escalate: Optional[Callable[[int], Ball]] = None,
                    cap: int = PREC_CAP) -> int:
    """Floor of the exact value enclosed by ``v``, proven by the enclosure.

    While the enclosure straddles an integer, ``escalate(prec)`` is asked
    to re-evaluate at doubled precision.  Raises FloorUndecidable at the
    cap -- a boundary tie is surfaced, never rounded away.
    """
    while True:
        lo_f, hi_f = v.floor_bounds()
        if lo_f == hi_f:
            return lo_f
        nxt = max(v.prec * 2, DEFAULT_PREC)
        if escalate is None or nxt > cap:
            raise FloorUndecidable(lo_f, hi_f, v.prec)
        v = escalate(nxt)


def certified_floor_f(n: int, p: Params, prec: int = DEFAULT_PREC,
                      cap: int = PREC_CAP) -> int:
    """certified_floor of eval_f(n) with the canonical escalation ladder."""
    v = eval_f(n, p, prec, cap)
    return certified_floor(v, lambda q: eval_f(n, p, q, cap), cap)
