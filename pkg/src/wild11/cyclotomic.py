"""Exact arithmetic in Q(zeta_11) and recovery of eigenspace traces.

Elements are written in the power basis 1, z, ..., z^9 of the degree-10
cyclotomic field, with z a fixed primitive 11th root of unity; z^10 is
eliminated through z^10 = -(1 + z + ... + z^9).  This representation is
unique, so equality is coordinate-wise.

The central operation is :func:`inverse_dft`: given the eleven integer
traces tr_n of (automorphism^n . Frobenius) on degree-2 cohomology, it
solves

    tr_n = sum_{i=0}^{10} z^(n*i) a_i          (n = 0, ..., 10)

for the relative traces a_i of Frobenius on the z^i-eigenspaces.  Two hard
gates protect the inversion: the invariant eigenspace must carry a_0 = 2q
exactly (anything else means the fixed-point tallies are wrong), and every
a_i must land in Z[zeta] (anything else means an arithmetic bug upstream).

Coordinates are exact rationals throughout; integer-valued coordinates are
stored as Python ints, which are exact rationals too.  No floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import InconsistencyError

DEGREE = 10  # [Q(zeta_11) : Q]
ORDER = 11


def _normalize(c: Rational) -> Rational:
    """Prefer int storage for integer values; ints and Fractions mix freely."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, Rational):
        f = Fraction(c)
        return int(f) if f.denominator == 1 else f
    raise TypeError(f"coordinates must be exact rationals, got {type(c).__name__}")


class CycNum:
    """An element of Q(zeta_11) in the power basis, coordinates c0..c9."""

    __slots__ = ("coords",)

    def __init__(self, coords=()):
        coords = tuple(_normalize(c) for c in coords)
        if len(coords) > DEGREE:
            raise ValueError(f"at most {DEGREE} coordinates, got {len(coords)}")
        self.coords = coords + (0,) * (DEGREE - len(coords))

    @staticmethod
    def zeta_power(k: int) -> "CycNum":
        k %= ORDER
        if k < DEGREE:
            return CycNum((0,) * k + (1,))
        return CycNum((-1,) * DEGREE)

    @staticmethod
    def from_rational(x: Rational) -> "CycNum":
        return CycNum((x,))

    def _coerce(self, other) -> "CycNum | None":
        if isinstance(other, CycNum):
            return other
        if isinstance(other, Rational):
            return CycNum.from_rational(other)
        return None

    def __add__(self, other) -> "CycNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other) -> "CycNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other) -> "CycNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "CycNum":
        return CycNum(tuple(-a for a in self.coords))

    def __mul__(self, other) -> "CycNum":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        raw = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(self.coords):
            if x:
                for j, y in enumerate(o.coords):
                    if y:
                        raw[i + j] += x * y
        # fold exponents >= 11 back via z^11 = 1, then kill z^10
        folded = raw[:ORDER] + [0] * (ORDER - len(raw[:ORDER]))
        for k in range(ORDER, len(raw)):
            folded[k - ORDER] += raw[k]
        top = folded[DEGREE]
        return CycNum(tuple(folded[i] - top for i in range(DEGREE)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycNum":
        if e < 0:
            raise ValueError("negative powers not supported")
        result = CycNum((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        return isinstance(o, CycNum) and self.coords == o.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_integral(self) -> bool:
        """True when the element lies in Z[zeta] (all coordinates integers)."""
        return all(isinstance(c, int) for c in self.coords)

    def as_rational(self) -> Fraction | None:
        """The rational value if the element lies in Q, else None."""
        if any(self.coords[1:]):
            return None
        return Fraction(self.coords[0])

    def __repr__(self) -> str:
        return f"CycNum({list(self.coords)})"


ZETA = CycNum.zeta_power(1)


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_neg(a: CycNum) -> CycNum:
    return -a


def galois_apply(s: int, a: CycNum) -> CycNum:
    """Image of a under the field automorphism zeta -> zeta^s, gcd(s, 11) = 1."""
    if s % ORDER == 0:
        raise ValueError("s must be a unit mod 11")
    out = [a.coords[0]] + [0] * (DEGREE - 1)
    tail = 0  # accumulated coefficient mapped onto z^10
    for i in range(1, DEGREE):
        k = (s * i) % ORDER
        if k < DEGREE:
            out[k] += a.coords[i]
        else:
            tail += a.coords[i]
    if tail:
        out = [c - tail for c in out]
    return CycNum(tuple(out))


def as_rational(a: CycNum) -> Fraction | None:
    return a.as_rational()


@dataclass(frozen=True)
class EigenTraces:
    """Relative Frobenius traces a_1 .. a_10 over F_q; a[i-1] is a_i.

    For tallies produced by honest point counts every a_i lies in Z[zeta]
    and the multiset {a_1, ..., a_10} is stable under each Galois map
    zeta -> zeta^s.
    """

    q: int
    a: tuple[CycNum, ...]

    def __post_init__(self):
        if len(self.a) != DEGREE:
            raise ValueError(f"expected {DEGREE} traces, got {len(self.a)}")

    def all_integral(self) -> bool:
        return all(x.is_integral() for x in self.a)

    def sum_as_rational(self) -> Fraction:
        total = CycNum()
        for x in self.a:
            total = total + x
        value = total.as_rational()
        if value is None:
            raise InconsistencyError("sum of eigenspace traces is not rational")
        return value

    def is_galois_stable(self) -> bool:
        reference = sorted(x.coords for x in self.a)
        for s in range(2, ORDER):
            imaged = sorted(galois_apply(s, x).coords for x in self.a)
            if imaged != reference:
                return False
        return True

    def galois_permutation(self, s: int) -> tuple[int, ...] | None:
        """Observed index map under zeta -> zeta^s: position i holds j with
        sigma_s(a_{i+1}) = a_{j+1}.  None if some image has no match; when
        traces repeat, the lowest matching index is reported."""
        perm = []
        for x in self.a:
            img = galois_apply(s, x)
            for j, y in enumerate(self.a):
                if y == img:
                    perm.append(j)
                    break
            else:
                return None
        return tuple(perm)


def inverse_dft(tr: list[int] | tuple[int, ...], q: int) -> EigenTraces:
    """Solve tr_n = sum_i z^(n i) a_i for a_1..a_10, given all eleven tr_n.

    Raises InconsistencyError if the forced invariant-part trace a_0 differs
    from 2q (a wrong tally) or if any a_i is not in Z[zeta] (an arithmetic
    bug somewhere upstream).
    """
    tr = list(tr)
    if len(tr) != ORDER:
        raise ValueError(f"expected {ORDER} traces, got {len(tr)}")
    if any(not isinstance(t, int) for t in tr):
        raise ValueError("traces must be integers")
    total = sum(tr)
    if total != ORDER * 2 * q:
        raise InconsistencyError(
            f"a_0 = {Fraction(total, ORDER)} != 2q = {2 * q}; the fixed-point tally is inconsistent"
        )
    out = []
    for i in range(1, ORDER):
        # accumulate sum_n tr_n * z^(-n i) in the redundant basis 1..z^10
        acc = [0] * ORDER
        for n in range(ORDER):
            acc[(-n * i) % ORDER] += tr[n]
        coords = [acc[k] - acc[DEGREE] for k in range(DEGREE)]
        if any(c % ORDER for c in coords):
            raise InconsistencyError(
                f"eigenspace trace a_{i} = (1/11)*{coords} is not an algebraic integer"
            )
        out.append(CycNum(tuple(c // ORDER for c in coords)))
    return EigenTraces(q=q, a=tuple(out))


def forward_dft(traces: EigenTraces) -> list[int]:
    """Reconstruct the integer traces tr_0..tr_10 from eigenspace traces.

    Exact inverse of :func:`inverse_dft`; used as a self-check."""
    out = []
    for n in range(ORDER):
        total = CycNum.from_rational(2 * traces.q)  # a_0 contribution
        for i, a_i in enumerate(traces.a, start=1):
            total = total + CycNum.zeta_power(n * i) * a_i
        value = total.as_rational()
        if value is None or value.denominator != 1:
            raise InconsistencyError(f"reconstructed tr_{n} = {total} is not an integer")
        out.append(int(value))
    return out
