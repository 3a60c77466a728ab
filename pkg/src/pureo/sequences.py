"""Integer machinery for O-sequences.

Binomial expansions, Macaulay and Kruskal-Katona growth bounds,
differentiability, SI-sequences and shape statistics.  Everything here works
on plain Python integers, so there is no overflow ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator


class SequenceParseError(ValueError):
    """Raised for malformed comma-separated sequences; ``position`` is 1-based."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (entry {position})")
        self.position = position


class IntSeq(tuple):
    """A finite sequence ``(h_0, ..., h_e)`` of integers.

    By default entries must be nonnegative and trailing zeros are trimmed, so
    ``socle_degree`` is canonical.  ``raw=True`` skips both rules; first
    differences and f-to-h transforms use it, since they may legitimately be
    negative or end in zeros.
    """

    raw: bool

    def __new__(cls, values: Iterable[int] = (), *, raw: bool = False):
        vals = [int(v) for v in values]
        if not raw:
            for i, v in enumerate(vals):
                if v < 0:
                    raise ValueError(f"negative entry {v} at degree {i}")
            while vals and vals[-1] == 0:
                vals.pop()
        self = super().__new__(cls, vals)
        self.raw = raw
        return self

    @classmethod
    def candidate(cls, values: Iterable[int]) -> "IntSeq":
        """Build an O-sequence candidate; requires ``h_0 = 1``."""
        seq = values if isinstance(values, IntSeq) and not values.raw else cls(values)
        if not seq or seq[0] != 1:
            raise ValueError(f"candidate sequence must start with 1, got {tuple(seq)}")
        return seq

    @classmethod
    def parse(cls, text: str) -> "IntSeq":
        parts = text.strip().strip("()").split(",")
        vals = []
        for pos, part in enumerate(parts, 1):
            part = part.strip()
            try:
                v = int(part)
            except ValueError:
                raise SequenceParseError(f"not an integer: {part!r}", pos) from None
            if v < 0:
                raise SequenceParseError(f"negative entry {v}", pos)
            vals.append(v)
        return cls(vals)

    @property
    def socle_degree(self) -> int:
        return len(self) - 1

    @property
    def codimension(self) -> int:
        return self[1] if len(self) > 1 else 0

    @property
    def type(self) -> int:
        return self[-1] if self else 0

    @property
    def has_negative(self) -> bool:
        return any(v < 0 for v in self)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"IntSeq({', '.join(map(str, self))})"


@dataclass(frozen=True)
class DBinomialExpansion:
    """``n = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta)``."""

    n: int
    d: int
    terms: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(f"C({k},{j})" for k, j in self.terms)

    def total(self) -> int:
        return sum(comb(k, j) for k, j in self.terms)


def _largest_top(n: int, j: int) -> int:
    # largest k with C(k, j) <= n, given n >= 1
    lo = j
    hi = j + 1
    while comb(hi, j) <= n:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, j) <= n:
            lo = mid
        else:
            hi = mid
    return lo


def d_expansion(n: int, d: int) -> DBinomialExpansion:
    """Greedy d-binomial expansion of ``n``."""
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    terms = []
    rest = n
    for j in range(d, 0, -1):
        if rest == 0:
            break
        k = _largest_top(rest, j)
        terms.append((k, j))
        rest -= comb(k, j)
    return DBinomialExpansion(n, d, tuple(terms))


def macaulay_growth(n: int, d: int) -> int:
    """``(n_(d))^1_1``: the largest value allowed in degree d+1 after n in degree d."""
    return sum(comb(k + 1, j + 1) for k, j in d_expansion(n, d).terms)


def kk_growth(n: int, d: int) -> int:
    """Kruskal-Katona bound: each ``C(k, j)`` becomes ``C(k, j+1)``."""
    return sum(comb(k, j + 1) for k, j in d_expansion(n, d).terms)


@dataclass(frozen=True)
class SequenceCheck:
    ok: bool
    failed_at: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_o_sequence(h: Iterable[int]) -> SequenceCheck:
    """Check Macaulay's bound ``h_{t+1} <= ((h_t)_(t))^1_1`` for every t >= 1.

    ``failed_at`` is the degree of the first entry that exceeds its bound (or
    is negative).
    """
    h = tuple(h)
    if not h or h[0] != 1:
        raise ValueError("an O-sequence must start with h_0 = 1")
    for i, v in enumerate(h):
        if v < 0:
            return SequenceCheck(False, i)
    for t in range(1, len(h) - 1):
        if h[t + 1] > macaulay_growth(h[t], t):
            return SequenceCheck(False, t + 1)
    return SequenceCheck(True)


def is_f_vector(f: Iterable[int]) -> SequenceCheck:
    """Kruskal-Katona test; ``f[0] = 1`` counts the empty face."""
    f = tuple(f)
    if not f or f[0] != 1:
        raise ValueError("f-vector must start with f_{-1} = 1")
    for i, v in enumerate(f):
        if v < 0:
            return SequenceCheck(False, i)
    for i in range(1, len(f) - 1):
        if f[i + 1] > kk_growth(f[i], i):
            return SequenceCheck(False, i + 1)
    return SequenceCheck(True)


def first_difference(h: Iterable[int]) -> IntSeq:
    h = tuple(h)
    if not h:
        return IntSeq((), raw=True)
    return IntSeq([h[0]] + [h[i] - h[i - 1] for i in range(1, len(h))], raw=True)


def integrate(g: Iterable[int]) -> IntSeq:
    """Partial sums; inverse of :func:`first_difference`."""
    out = []
    acc = 0
    for v in g:
        acc += v
        out.append(acc)
    return IntSeq(out, raw=True)


def is_differentiable(h: Iterable[int], through_degree: int | None = None) -> bool:
    h = tuple(h)
    e = len(h) - 1
    if through_degree is None:
        through_degree = e
    if through_degree > e:
        raise ValueError(f"through_degree {through_degree} exceeds socle degree {e}")
    delta = first_difference(h[: through_degree + 1])
    if delta.has_negative:
        return False
    return bool(is_o_sequence(delta))


def hibi_violation(h: Iterable[int]) -> tuple[int, int] | None:
    """First pair (i, j) with ``i <= j <= e - i`` and ``h_i > h_j``, if any."""
    h = tuple(h)
    e = len(h) - 1
    for i in range(e + 1):
        for j in range(i, e - i + 1):
            if h[i] > h[j]:
                return (i, j)
    return None


@dataclass(frozen=True)
class UnimodalityReport:
    is_unimodal: bool
    is_strictly_unimodal: bool
    num_local_maxima: int
    is_flawless: bool
    first_half_nondecreasing: bool


def _plateaus(h: tuple[int, ...]) -> list[tuple[int, int, int]]:
    runs = []
    i = 0
    while i < len(h):
        j = i
        while j + 1 < len(h) and h[j + 1] == h[i]:
            j += 1
        runs.append((i, j, h[i]))
        i = j + 1
    return runs


def analyze_shape(h: Iterable[int]) -> UnimodalityReport:
    h = tuple(h)
    e = len(h) - 1
    runs = _plateaus(h)
    maxima = 0
    for k, (_, _, v) in enumerate(runs):
        left = runs[k - 1][2] if k > 0 else None
        right = runs[k + 1][2] if k + 1 < len(runs) else None
        if (left is None or left < v) and (right is None or right < v):
            maxima += 1

    # unimodal: values of consecutive plateaus rise then fall
    vals = [v for _, _, v in runs]
    peak = vals.index(max(vals)) if vals else 0
    unimodal = all(a < b for a, b in zip(vals[:peak], vals[1 : peak + 1])) and all(
        a > b for a, b in zip(vals[peak:], vals[peak + 1 :])
    )
    # strictly unimodal: the only plateau longer than one entry is the top one
    strict = unimodal and all(i == j or v == max(vals) for i, j, v in runs)

    half = e // 2
    flawless = all(h[i] <= h[e - i] for i in range(half + 1))
    nondecreasing = all(h[i] <= h[i + 1] for i in range(half))
    return UnimodalityReport(unimodal, strict, maxima, flawless, nondecreasing)


def is_si_sequence(h: Iterable[int]) -> bool:
    h = tuple(h)
    e = len(h) - 1
    if any(h[i] != h[e - i] for i in range(e + 1)):
        return False
    return is_differentiable(h, e // 2)


def o_sequences(r: int, e: int, *, exact_socle: bool = True) -> Iterator[IntSeq]:
    """All O-sequences ``(1, r, h_2, ..., h_e)``.

    With ``exact_socle=False`` the sequences may end in zeros (they are
    yielded untrimmed, with e+1 entries).
    """
    if e == 0:
        yield IntSeq((1,))
        return
    prefix = [1, r]

    def extend(t: int) -> Iterator[IntSeq]:
        if t == e:
            if exact_socle:
                if prefix[-1] > 0:
                    yield IntSeq(prefix)
            else:
                yield IntSeq(prefix, raw=True)
            return
        for v in range(macaulay_growth(prefix[t], t) + 1):
            prefix.append(v)
            yield from extend(t + 1)
            prefix.pop()

    if exact_socle and r == 0:
        return
    yield from extend(1)


def differentiable_o_sequences(r: int, e: int) -> Iterator[IntSeq]:
    """All differentiable O-sequences of codimension r and socle degree e.

    Obtained by integrating every O-sequence ``(1, r-1, ...)`` of length e+1.
    """
    for g in o_sequences(r - 1, e, exact_socle=False):
        yield IntSeq(integrate(g))
