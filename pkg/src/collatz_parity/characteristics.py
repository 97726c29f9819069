"""Characteristic numbers, characteristic equations, and particular points.

Every length-n parity vector v with m ones determines the affine action
T^n(N) = (3^m N + P) / 2^n on its realizers.  The numbers computed here are
all exact integers or rationals attached to v:

    n, m      length and number of ones
    P         affine offset, via recurrence or closed form over one-positions
    c         2^n - 3^m
    a, b      the unique pair with 3^m a + 1 = 2^n b, 0 < a < 2^n, 0 < b < 3^m
    alpha,beta / A,B   Euclidean splits of P by 3^m and by 2^n
    N0        smallest positive realizer of v (unique in [1, 2^n])
    r0        N0 / 2^n
    X, Y      P*a and P*b; X realizes v and T^n(X) = Y
    X*, Y*    the odd-residue decomposition over one-positions; X* realizes v

All solving is done with modular inverses modulo powers of two; realizers of
v are exactly the arithmetic progression N0 + 2^n * k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import ParityVector


@dataclass(frozen=True)
class CharacteristicSet:
    """All base characteristic numbers of one finite parity vector.

    a, b, X, Y are None when m = 0 (the characteristic equation needs m >= 1).
    """

    n: int
    m: int
    P: int
    c: int
    a: int | None
    b: int | None
    alpha: int
    beta: int
    A: int
    B: int
    N0: int
    X: int | None
    Y: int | None
    r0: Fraction

    def check(self) -> None:
        """Re-verify every internal identity; raises AssertionError on breakage."""
        pow2 = 1 << self.n
        pow3 = 3**self.m
        assert self.c == pow2 - pow3
        assert self.alpha * pow3 + self.beta == self.P and 0 <= self.beta < pow3
        assert self.A * pow2 + self.B == self.P and 0 <= self.B < pow2
        assert 1 <= self.N0 <= pow2
        assert self.r0 == Fraction(self.N0, pow2) and 0 < self.r0 <= 1
        if self.m == 0:
            assert self.P == 0 and self.a is None and self.b is None
            assert self.X is None and self.Y is None
        else:
            assert self.a is not None and self.b is not None
            assert pow3 * self.a + 1 == pow2 * self.b
            assert 0 < self.a < pow2 and 0 < self.b < pow3
            assert self.X == self.P * self.a and self.Y == self.P * self.b
            assert pow3 - 2**self.m <= self.P <= (1 << (self.n - self.m)) * (pow3 - 2**self.m)


class XStarRow(NamedTuple):
    k: int        # 1-based index of the one among the ones
    j: int        # 1-based position of that one in the vector
    theta: int    # least positive solution of 3^k * theta = -1 (mod 2^(n-j+1)); odd
    z: int        # 2^(j-1) * theta
    t: int        # (3^k * theta + 1) / 2^(n-j+1)


@dataclass(frozen=True)
class XStarDecomposition:
    """Per-one-position decomposition of the particular point X*."""

    rows: tuple[XStarRow, ...]
    Xstar: int
    Ystar: int
    J: int  # X = X* + 2^n * J

    def check(self, v: ParityVector) -> None:
        n = v.n
        pow2 = 1 << n
        for row in self.rows:
            assert row.theta & 1 == 1
            assert 3**row.k * row.theta + 1 == (1 << (n - row.j + 1)) * row.t
            assert row.z == (1 << (row.j - 1)) * row.theta
        assert self.Xstar == sum(r.z for r in self.rows)
        m = len(self.rows)
        assert self.Ystar == sum(3 ** (m - r.k) * r.t for r in self.rows)
        lifted = 3**m * self.Xstar + p_closed_form(v)
        assert lifted % pow2 == 0 and lifted // pow2 == self.Ystar


def p_recurrence(v: ParityVector) -> tuple[int, ...]:
    """The sequence (P_1, ..., P_n): P_j = P_{j-1} on a 0 bit, 3*P_{j-1} + 2^{j-1} on a 1."""
    out = []
    P = 0
    pw = 1
    for e in v.bits:
        if e:
            P = 3 * P + pw
        out.append(P)
        pw <<= 1
    return tuple(out)


def p_closed_form(v: ParityVector) -> int:
    """P as the weighted sum 3^{m-i} * 2^{j_i - 1} over the one-positions j_1 < ... < j_m."""
    ones = v.one_positions()
    m = len(ones)
    return sum(3 ** (m - i) * (1 << (j - 1)) for i, j in enumerate(ones, start=1))


def _ab_from_inverse(m: int, n: int) -> tuple[int, int]:
    # a is the least positive solution of 3^m * a = -1 (mod 2^n).
    pow2 = 1 << n
    a = pow2 - pow(3, -m, pow2)
    b = (3**m * a + 1) >> n
    return a, b


def ab_recurrence(m: int, n: int) -> list[tuple[int, int]]:
    """The (a_{m,i}, b_{m,i}) table for i = 1..n, built by the halving recurrence.

    Start from a = 1, b = (3^m + 1)/2.  While b is even the power of two in
    3^m a + 1 rises for free (halve b); when b is odd, adding 2^{i-1} to a
    makes b + 3^m even again.  The final pair satisfies 3^m a + 1 = 2^n b.
    """
    if m < 1:
        raise ValueError(f"ab_recurrence requires m >= 1, got {m}")
    if n < 1:
        raise ValueError(f"ab_recurrence requires n >= 1, got {n}")
    pow3 = 3**m
    a = 1
    b = (pow3 + 1) >> 1
    table = [(a, b)]
    for i in range(2, n + 1):
        if b & 1 == 0:
            b >>= 1
        else:
            a += 1 << (i - 1)
            b = (b + pow3) >> 1
        table.append((a, b))
    return table


def ab_family_member(m: int, n: int, j: int) -> tuple[int, int]:
    """The j-th member (a + 2^n j, b + 3^m j) of the solution family of 3^m a + 1 = 2^n b."""
    if m < 1 or n < 1:
        raise ValueError(f"ab_family_member requires m, n >= 1, got ({m}, {n})")
    a, b = _ab_from_inverse(m, n)
    return a + (1 << n) * j, b + 3**m * j


def g_of(v: ParityVector, N: int) -> Fraction:
    """The affine value (3^m N + P) / 2^n as an exact reduced rational."""
    if N < 1:
        raise ValueError(f"g_of requires N >= 1, got {N}")
    return Fraction(3**v.ones * N + p_closed_form(v), 1 << v.n)


def is_member(v: ParityVector, N: int) -> bool:
    """Whether the length-n sequence starting at N has parity vector v.

    Holds iff (3^m N + P) is divisible by 2^n, i.e. g_of(v, N) is an integer.
    """
    if N < 1:
        raise ValueError(f"is_member requires N >= 1, got {N}")
    return (3**v.ones * N + p_closed_form(v)) & ((1 << v.n) - 1) == 0


def apply_vector(v: ParityVector, N: int) -> int:
    """T^n(N) = (3^m N + P) / 2^n for a realizer N of v."""
    pow2 = 1 << v.n
    num = 3**v.ones * N + p_closed_form(v)
    if N < 1 or num % pow2 != 0:
        n0 = solve_n0(v)
        raise ValueError(
            f"N={N} does not realize the vector: N mod 2^{v.n} = {N % pow2}, "
            f"members satisfy N mod 2^{v.n} = {n0 % pow2}"
        )
    return num // pow2


def solve_n0(v: ParityVector) -> int:
    """Smallest positive realizer of v: N0 = -P * (3^m)^{-1} mod 2^n, with 0 mapped to 2^n."""
    pow2 = 1 << v.n
    r = (-p_closed_form(v) * pow(3, -v.ones, pow2)) % pow2
    return pow2 if r == 0 else r


def nth_realizer(v: ParityVector, j: int) -> int:
    """The j-th realizer N_j = N0 + 2^n * j."""
    if j < 0:
        raise ValueError(f"realizer index must be >= 0, got {j}")
    return solve_n0(v) + (1 << v.n) * j


def xy_points(v: ParityVector) -> tuple[int, int]:
    """The particular points X = P*a and Y = P*b; X realizes v and T^n(X) = Y."""
    m = v.ones
    if m == 0:
        raise ValueError("xy_points requires at least one 1 bit (m >= 1)")
    a, b = _ab_from_inverse(m, v.n)
    P = p_closed_form(v)
    return P * a, P * b


def xstar_decompose(v: ParityVector) -> XStarDecomposition:
    """Decompose X* = sum 2^{j_k - 1} theta_k over the one-positions of v.

    theta_k is the least positive solution of 3^k theta = -1 (mod 2^{n-j_k+1}),
    which the congruence forces to be odd; t_k is the matching cofactor, and
    Y* = sum 3^{m-k} t_k satisfies T^n(X*) = Y*.
    """
    m = v.ones
    if m == 0:
        raise ValueError("xstar_decompose requires at least one 1 bit (m >= 1)")
    n = v.n
    rows = []
    Xstar = 0
    Ystar = 0
    pow3k = 1
    for k, j in enumerate(v.one_positions(), start=1):
        pow3k *= 3
        mod = 1 << (n - j + 1)
        theta = mod - pow(pow3k, -1, mod)
        t = (pow3k * theta + 1) >> (n - j + 1)
        z = (1 << (j - 1)) * theta
        rows.append(XStarRow(k, j, theta, z, t))
        Xstar += z
        Ystar = 3 * Ystar + t
    X, _ = xy_points(v)
    J = (X - Xstar) >> n
    return XStarDecomposition(tuple(rows), Xstar, Ystar, J)


def compose_p(v1: ParityVector, v2: ParityVector) -> int:
    """P of the concatenation v1 || v2, from the parts: 3^{m(v2)} P(v1) + 2^{n(v1)} P(v2)."""
    return 3**v2.ones * p_closed_form(v1) + (1 << v1.n) * p_closed_form(v2)


def repeat_p(u: ParityVector, k: int) -> int:
    """P of u repeated k times: P(u) * (3^{km} - 2^{kn}) / (3^m - 2^n)."""
    if k < 1:
        raise ValueError(f"repeat count must be >= 1, got {k}")
    m, n = u.ones, u.n
    num = p_closed_form(u) * (3 ** (k * m) - (1 << (k * n)))
    den = 3**m - (1 << n)  # never zero: powers of 2 and 3 only meet at 1
    q, r = divmod(num, den)
    assert r == 0
    return q


class OmegaExtremes(NamedTuple):
    min_vector: ParityVector
    min_p: int
    max_vector: ParityVector
    max_p: int


def omega_extremes(n: int, m: int) -> OmegaExtremes:
    """Extremes of P over all length-n vectors with m ones.

    The minimum 3^m - 2^m is attained by 1^m 0^{n-m} (ones packed left); the
    maximum 2^{n-m} (3^m - 2^m) by 0^{n-m} 1^m (ones packed right).
    """
    if n < 1:
        raise ValueError(f"omega_extremes requires n >= 1, got {n}")
    if not 0 <= m <= n:
        raise ValueError(f"omega_extremes requires 0 <= m <= n, got m={m}, n={n}")
    if m == 0:
        zeros = ParityVector((0,) * n)
        return OmegaExtremes(zeros, 0, zeros, 0)
    spread = 3**m - 2**m
    vmin = ParityVector((1,) * m + (0,) * (n - m))
    vmax = ParityVector((0,) * (n - m) + (1,) * m)
    return OmegaExtremes(vmin, spread, vmax, (1 << (n - m)) * spread)


def cycle_fixed_point(u: ParityVector) -> Fraction:
    """The unique rational fixed by x -> (3^m x + P) / 2^n, i.e. P / (2^n - 3^m).

    An infinite repetition of u is realizable by an integer only if this value
    is a positive integer.  m = 0 gives 0: no positive fixed point.
    """
    return Fraction(p_closed_form(u), (1 << u.n) - 3**u.ones)


def congruence_witness(v1: ParityVector, v2: ParityVector, x1: int, x2: int) -> int:
    """The integer j with 3^{m2-m1} x2 P(v1) - x1 P(v2) = 2^n j, for realizers x1, x2.

    Requires n(v1) = n(v2) and m(v2) >= m(v1); the equal-m case reduces to
    P(v1) x2 - P(v2) x1 = 2^n j.
    """
    if v1.n != v2.n:
        raise ValueError(f"vectors must share a length, got {v1.n} and {v2.n}")
    if v2.ones < v1.ones:
        raise ValueError(f"need m(v2) >= m(v1), got {v2.ones} < {v1.ones}")
    if not is_member(v1, x1):
        raise ValueError(f"x1={x1} does not realize v1")
    if not is_member(v2, x2):
        raise ValueError(f"x2={x2} does not realize v2")
    num = 3 ** (v2.ones - v1.ones) * x2 * p_closed_form(v1) - x1 * p_closed_form(v2)
    q, r = divmod(num, 1 << v1.n)
    assert r == 0, "congruence witness must be an exact integer"
    return q


def char_set(v: ParityVector) -> CharacteristicSet:
    """Compute the full characteristic set of v."""
    n, m = v.n, v.ones
    pow2 = 1 << n
    pow3 = 3**m
    P = p_closed_form(v)
    alpha, beta = divmod(P, pow3)
    A, B = divmod(P, pow2)
    N0 = solve_n0(v)
    if m == 0:
        a = b = X = Y = None
    else:
        a, b = _ab_from_inverse(m, n)
        X, Y = P * a, P * b
    return CharacteristicSet(
        n=n, m=m, P=P, c=pow2 - pow3, a=a, b=b,
        alpha=alpha, beta=beta, A=A, B=B,
        N0=N0, X=X, Y=Y, r0=Fraction(N0, pow2),
    )
