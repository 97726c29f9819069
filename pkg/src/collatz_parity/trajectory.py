"""Order-j characteristic sequences of infinite vectors, and the realizability classifier.

For an infinite bit stream V the length-j prefix has its own characteristic
set; those values as functions of j are the order-j characteristic numbers.
Rows are computed incrementally:

  * P_j by the one-step recurrence,
  * N0_j by lifting the residue from mod 2^j to mod 2^{j+1}: the lift that
    matches the parity of T^j(N0_j) keeps the vector realized (the dichotomy
    N0_{j+1} in {N0_j, N0_j + 2^j}),
  * the inverse of 3^{m_j} mod 2^j by one Newton step per row (times the
    inverse of 3 when a new one arrives), giving a_j and b_j in O(1) big-int
    operations per row.

True limits are never computed; everything here is horizon-bounded, and the
classifier says only what the computed rows support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .core import BitStreamExhausted, ParityVector, PrefixGenerator
from .characteristics import char_set, xstar_decompose

HALVED = "halved"
HALVED_PLUS_HALF = "halved-plus-half"

STABILIZED = "stabilized"
GROWING = "growing"
INCONCLUSIVE = "inconclusive"

DEFAULT_HORIZON = 256
DEFAULT_WINDOW = 32


@dataclass(frozen=True)
class TrajectoryRow:
    """Order-j characteristic numbers of one prefix; a/b-derived fields are None while m = 0."""

    j: int
    m: int
    P: int
    c: int
    N0: int
    alpha: int
    beta: int
    A: int
    B: int
    a: int | None
    b: int | None
    X: int | None
    Y: int | None
    Xstar: int | None
    Ystar: int | None
    K: int | None
    Kstar: int | None
    f1: int | None
    f2: int | None

    @property
    def n(self) -> int:
        return self.j

    @property
    def r0(self) -> Fraction:
        return Fraction(self.N0, 1 << self.j)

    @property
    def q(self) -> Fraction | None:
        return None if self.X is None else Fraction(self.X, 1 << self.j)

    @property
    def qstar(self) -> Fraction | None:
        return None if self.Xstar is None else Fraction(self.Xstar, 1 << self.j)

    @property
    def m_over_n(self) -> Fraction:
        return Fraction(self.m, self.j)

    @property
    def P_over_2n(self) -> Fraction:
        return Fraction(self.P, 1 << self.j)

    @property
    def P_over_3m(self) -> Fraction:
        return Fraction(self.P, 3**self.m)

    @property
    def P_over_2n3m(self) -> Fraction:
        return Fraction(self.P, (1 << self.j) * 3**self.m)

    @property
    def alpha_over_2n(self) -> Fraction:
        return Fraction(self.alpha, 1 << self.j)

    @property
    def A_over_3m(self) -> Fraction:
        return Fraction(self.A, 3**self.m)

    @property
    def f2_over_2n(self) -> Fraction | None:
        return None if self.f2 is None else Fraction(self.f2, 1 << self.j)

    @property
    def ab_gap(self) -> Fraction | None:
        """|a/2^n - b/3^m|; the two ratios become equivalent for large prefixes."""
        if self.a is None:
            return None
        return abs(Fraction(self.a, 1 << self.j) - Fraction(self.b, 3**self.m))

    @property
    def q_int_distance(self) -> Fraction | None:
        return None if self.q is None else _int_distance(self.q)

    @property
    def qstar_int_distance(self) -> Fraction | None:
        return None if self.qstar is None else _int_distance(self.qstar)


def _int_distance(x: Fraction) -> Fraction:
    frac = x - (x.numerator // x.denominator)
    return min(frac, 1 - frac)


def _xstar_sums(ones: list[int], n: int) -> tuple[int, int]:
    # X* = sum 2^{j_k-1} theta_k, Y* = sum 3^{m-k} t_k over one-positions.
    Xstar = 0
    Ystar = 0
    pow3k = 1
    for k, jk in enumerate(ones, start=1):
        pow3k *= 3
        shift = n - jk + 1
        mod = 1 << shift
        theta = mod - pow(pow3k, -1, mod)
        t = (pow3k * theta + 1) >> shift
        Xstar += (1 << (jk - 1)) * theta
        Ystar = 3 * Ystar + t
    return Xstar, Ystar


def iter_trajectory(gen: PrefixGenerator, horizon: int) -> Iterator[TrajectoryRow]:
    """Stream rows for j = 1..horizon.

    A finite bit source that runs dry raises BitStreamExhausted whose
    `position` is the last complete row index; rows up to it have already
    been yielded.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    bits = gen.bits()
    m = 0
    P = 0
    pow3m = 1
    pow2 = 1          # 2^{j-1} while processing row j
    N0 = 1
    u = 1             # T^{j}(N0_j) after each row
    inv3 = 1          # 3^{-1} mod 2^j
    inv3m = 1         # (3^m)^{-1} mod 2^j
    ones: list[int] = []
    for j in range(1, horizon + 1):
        try:
            e = next(bits)
        except StopIteration:
            raise BitStreamExhausted(
                f"bit source exhausted after {j - 1} complete rows "
                f"(requested horizon {horizon})",
                j - 1,
            ) from None
        if (u & 1) != e:
            N0 += pow2
            u += pow3m
        u = u >> 1 if e == 0 else (3 * u + 1) >> 1
        newpow2 = pow2 << 1
        mask = newpow2 - 1
        if j > 1:
            inv3 = (inv3 * (2 - 3 * inv3)) & mask
            inv3m = (inv3m * (2 - pow3m * inv3m)) & mask
        if e:
            P = 3 * P + pow2
            m += 1
            pow3m *= 3
            ones.append(j)
            inv3m = (inv3m * inv3) & mask
        pow2 = newpow2

        alpha, beta = divmod(P, pow3m)
        A, B = divmod(P, pow2)
        if m == 0:
            a = b = X = Y = Xstar = Ystar = K = Kstar = f1 = f2 = None
        else:
            a = pow2 - inv3m
            b = (pow3m * a + 1) >> j
            X, Y = P * a, P * b
            Xstar, Ystar = _xstar_sums(ones, j)
            K = (X - N0) >> j
            Kstar = (Xstar - N0) >> j
            f1, f2 = divmod(B * a, pow2)
        yield TrajectoryRow(
            j=j, m=m, P=P, c=pow2 - pow3m, N0=N0,
            alpha=alpha, beta=beta, A=A, B=B,
            a=a, b=b, X=X, Y=Y, Xstar=Xstar, Ystar=Ystar,
            K=K, Kstar=Kstar, f1=f1, f2=f2,
        )


def trajectory(gen: PrefixGenerator, horizon: int) -> list[TrajectoryRow]:
    """All rows for j = 1..horizon as a list."""
    return list(iter_trajectory(gen, horizon))


def row_from_prefix(v: ParityVector) -> TrajectoryRow:
    """Recompute one row from scratch through the finite-vector module.

    Independent of the incremental path; used to cross-check it.
    """
    cs = char_set(v)
    if cs.m == 0:
        Xstar = Ystar = K = Kstar = f1 = f2 = None
    else:
        dec = xstar_decompose(v)
        Xstar, Ystar = dec.Xstar, dec.Ystar
        K = (cs.X - cs.N0) >> cs.n
        Kstar = (Xstar - cs.N0) >> cs.n
        f1, f2 = divmod(cs.B * cs.a, 1 << cs.n)
    return TrajectoryRow(
        j=cs.n, m=cs.m, P=cs.P, c=cs.c, N0=cs.N0,
        alpha=cs.alpha, beta=cs.beta, A=cs.A, B=cs.B,
        a=cs.a, b=cs.b, X=cs.X, Y=cs.Y, Xstar=Xstar, Ystar=Ystar,
        K=K, Kstar=Kstar, f1=f1, f2=f2,
    )


def lemma51_check(prev: TrajectoryRow, cur: TrajectoryRow) -> str:
    """Which of the two consecutive-row relations holds for r0.

    Returns "halved" when r0_{j+1} = r0_j / 2 (N0 unchanged) and
    "halved-plus-half" when r0_{j+1} = r0_j / 2 + 1/2 (N0 lifted by 2^j).
    Exactly one must hold.
    """
    if cur.j != prev.j + 1:
        raise ValueError(f"rows must be consecutive, got j={prev.j} then j={cur.j}")
    if cur.r0 == prev.r0 / 2:
        return HALVED
    if cur.r0 == prev.r0 / 2 + Fraction(1, 2):
        return HALVED_PLUS_HALF
    raise AssertionError(
        f"r0 dichotomy violated between rows {prev.j} and {cur.j}: "
        f"{prev.r0} -> {cur.r0}"
    )


@dataclass(frozen=True)
class ClassifierDiagnostics:
    """Final-row diagnostics attached to a verdict.

    q/qstar distances are the exact distance of X_j/2^j and X*_j/2^j to the
    nearest integer; ones_in_window counts 1 bits inside the final window
    (zero suggests an all-zero tail, outside the infinite-ones assumption).
    """

    final_j: int
    q_distance: Fraction | None
    qstar_distance: Fraction | None
    m_over_n: Fraction
    P_over_2n: Fraction
    ones_in_window: int


@dataclass(frozen=True)
class RealizabilityVerdict:
    """Horizon-bounded verdict on the prefix-realizer sequence N0_j.

    stabilized: N0_j constant over the final `window` rows (candidate = that value).
    growing:    N0_j still changed inside the final window; distinct_count is the
                number of distinct values seen (N0_j is non-decreasing).
    inconclusive: fewer complete rows than `window` (short bit source).
    """

    kind: str
    horizon: int
    window: int
    rows_computed: int
    candidate: int | None = None
    stable_since: int | None = None
    distinct_count: int | None = None
    diagnostics: ClassifierDiagnostics | None = None


def classify(gen: PrefixGenerator, horizon: int = DEFAULT_HORIZON,
             window: int = DEFAULT_WINDOW) -> RealizabilityVerdict:
    """Classify the N0_j behavior of a stream over a finite horizon.

    The verdict claims nothing beyond the computed rows: a stream may change
    N0 right after the horizon, so "stabilized" is evidence, not proof.
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    if window > horizon:
        raise ValueError(f"window ({window}) must not exceed horizon ({horizon})")
    rows: list[TrajectoryRow] = []
    try:
        for row in iter_trajectory(gen, horizon):
            rows.append(row)
    except BitStreamExhausted:
        pass
    if len(rows) < window:
        return RealizabilityVerdict(
            kind=INCONCLUSIVE, horizon=horizon, window=window, rows_computed=len(rows)
        )
    last = rows[-1]
    m_before_window = rows[-window - 1].m if len(rows) > window else 0
    diag = ClassifierDiagnostics(
        final_j=last.j,
        q_distance=last.q_int_distance,
        qstar_distance=last.qstar_int_distance,
        m_over_n=last.m_over_n,
        P_over_2n=last.P_over_2n,
        ones_in_window=last.m - m_before_window,
    )
    # N0_j is non-decreasing; a change at row j means N0_j != N0_{j-1}.
    changes = [cur.j for prev, cur in zip(rows, rows[1:]) if cur.N0 != prev.N0]
    last_change = changes[-1] if changes else None
    first_window_j = len(rows) - window + 1
    if last_change is not None and last_change >= first_window_j:
        return RealizabilityVerdict(
            kind=GROWING, horizon=horizon, window=window, rows_computed=len(rows),
            distinct_count=len(changes) + 1, diagnostics=diag,
        )
    return RealizabilityVerdict(
        kind=STABILIZED, horizon=horizon, window=window, rows_computed=len(rows),
        candidate=last.N0, stable_since=last_change or 1, diagnostics=diag,
    )


ASYMPTOTIC_FIELDS = (
    "P_over_2n3m", "P_over_3m", "alpha_over_2n", "A_over_3m",
    "ab_gap", "m_over_n", "P_over_2n", "f2_over_2n",
)


@dataclass(frozen=True)
class AsymptoticReport:
    """Exact per-row decay diagnostics plus last-row and max-over-tail summaries.

    The tail is the second half of the rows; max_over_tail ignores rows where
    a diagnostic is undefined (m = 0).
    """

    rows: tuple[TrajectoryRow, ...]
    tail_start: int
    last: dict
    max_over_tail: dict

    def row_values(self, row: TrajectoryRow) -> dict:
        return {name: getattr(row, name) for name in ASYMPTOTIC_FIELDS}


def asymptotic_report(rows: Iterable[TrajectoryRow]) -> AsymptoticReport:
    rows = tuple(rows)
    if len(rows) < 2:
        raise ValueError("asymptotic_report needs at least 2 rows")
    tail_start = len(rows) // 2
    tail = rows[tail_start:]
    last = {name: getattr(rows[-1], name) for name in ASYMPTOTIC_FIELDS}
    max_over_tail = {}
    for name in ASYMPTOTIC_FIELDS:
        values = [getattr(r, name) for r in tail if getattr(r, name) is not None]
        max_over_tail[name] = max(values) if values else None
    return AsymptoticReport(rows=rows, tail_start=tail_start + 1, last=last,
                            max_over_tail=max_over_tail)
