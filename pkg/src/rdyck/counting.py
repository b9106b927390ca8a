"""Exact counting: linear recurrences and coefficients of the closed rational forms.

Each family's counting sequence by semilength has a rational generating
function whose denominator encodes the suffix recursion of
:mod:`rdyck.classes`.  Counts are produced by three independent routes —
literal enumeration, the recurrence, and series expansion of the closed form
— and the test suite insists they agree.

A note on the quasi family's recurrence: besides the usual suffix terms it
carries a +1 for every semilength 2 <= n <= r+s.  Those account for the
single-arch members U w D (w a prefix of (UD)^r (DU)^(s-1)) that no
lead-in/suffix decomposition reaches.  Dropping the term undercounts: already
at r = s = 1 the semilength-2 count would come out 1 even though both UDUD
and UUDD belong.  The same +1 appears in the closed form as the numerator sum
of x^j over 2 <= j <= r+s.

All arithmetic is exact: Python integers throughout, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass

from rdyck.classes import PathClass, generate
from rdyck.core import RationalParam, part_size

__all__ = [
    "CountTable",
    "Polynomial",
    "RationalSeries",
    "check_sum_identity",
    "class_gf",
    "compositions_gf",
    "count_enumeration",
    "count_recurrence",
    "quasi_gf",
    "rational_gf",
    "rational_gf_unreduced",
    "restricted_gf",
    "series_coeffs",
]


class Polynomial:
    """Dense integer polynomial; coefficient index = exponent, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()) -> None:
        items = list(coeffs)
        while items and items[-1] == 0:
            items.pop()
        self.coeffs: tuple[int, ...] = tuple(items)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "Polynomial":
        """Build from an exponent -> coefficient mapping."""
        if not terms:
            return cls()
        top = max(terms)
        dense = [0] * (top + 1)
        for exponent, coefficient in terms.items():
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
            dense[exponent] += coefficient
        return cls(dense)

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(size))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] - other[i] for i in range(size))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def __repr__(self) -> str:
        return f"Polynomial({self.coeffs!r})"


@dataclass(frozen=True)
class RationalSeries:
    """numerator/denominator viewed as a formal power series.

    The denominator's constant term must be 1 so the expansion is defined.
    """

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self) -> None:
        if self.denominator[0] != 1:
            raise ValueError("denominator constant term must be 1 for series expansion")


@dataclass(frozen=True)
class CountTable:
    """Exact counts indexed by semilength, tagged with how they were produced."""

    values: tuple[int, ...]
    source: str

    _SOURCES = ("enumeration", "recurrence", "series")

    def __post_init__(self) -> None:
        if self.source not in self._SOURCES:
            raise ValueError(f"source must be one of {self._SOURCES}, got {self.source!r}")
        if any(v < 0 for v in self.values):
            raise ValueError("counts must be non-negative")

    def as_line(self) -> str:
        """Comma-separated values on one line."""
        return ",".join(str(v) for v in self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def rational_gf(q: RationalParam) -> RationalSeries:
    """Closed form for the rational-family counts, reduced:

        numerator    1 - sum_{k=1}^{r-1} x^(k + ceil(ks/r)) - 2 x^(r+s)
        denominator  1 - x - sum_{k=1}^{r-1} x^(k + ceil(ks/r)) - 2 x^(r+s) + x^(r+s+1)
    """
    num = {0: 1}
    den = {0: 1, 1: -1}
    for k in range(1, q.r):
        e = part_size(q, k)
        num[e] = num.get(e, 0) - 1
        den[e] = den.get(e, 0) - 1
    top = q.r + q.s
    num[top] = num.get(top, 0) - 2
    den[top] = den.get(top, 0) - 2
    den[top + 1] = den.get(top + 1, 0) + 1
    return RationalSeries(Polynomial.from_terms(num), Polynomial.from_terms(den))


def rational_gf_unreduced(q: RationalParam) -> RationalSeries:
    """The same series before cancelling the k = r term against (1 - x^(r+s)):

        numerator    1 - x^(r+s) - sum_{k=1}^{r} x^(k + ceil(ks/r))
        denominator  (1 - x)(1 - x^(r+s)) - sum_{k=1}^{r} x^(k + ceil(ks/r))

    Cross-multiplied equality with :func:`rational_gf` is part of the tests.
    """
    top = q.r + q.s
    num = {0: 1, top: -1}
    den = {0: 1, 1: -1, top: -1, top + 1: 1}
    for k in range(1, q.r + 1):
        e = part_size(q, k)
        num[e] = num.get(e, 0) - 1
        den[e] = den.get(e, 0) - 1
    return RationalSeries(Polynomial.from_terms(num), Polynomial.from_terms(den))


def _capped_run_sum(q: RationalParam) -> dict[int, int]:
    # T = sum_{p=1}^{r} x^(p + ceil(ps/r)); the exponents are distinct.
    terms: dict[int, int] = {}
    for p in range(1, q.r + 1):
        e = part_size(q, p)
        terms[e] = terms.get(e, 0) + 1
    return terms


def restricted_gf(q: RationalParam) -> RationalSeries:
    """(1 - T) / (1 - x - T) with T = sum_{p=1}^{r} x^(p + ceil(ps/r))."""
    run_sum = _capped_run_sum(q)
    num = {0: 1}
    den = {0: 1, 1: -1}
    for e, c in run_sum.items():
        num[e] = num.get(e, 0) - c
        den[e] = den.get(e, 0) - c
    return RationalSeries(Polynomial.from_terms(num), Polynomial.from_terms(den))


def quasi_gf(q: RationalParam) -> RationalSeries:
    """(1 + sum_{j=2}^{r+s} x^j - T) / (1 - x - T); same denominator as restricted_gf.

    The x^j sum is the single-arch family noted in the module docstring.
    """
    run_sum = _capped_run_sum(q)
    num = {0: 1}
    for j in range(2, q.r + q.s + 1):
        num[j] = num.get(j, 0) + 1
    den = {0: 1, 1: -1}
    for e, c in run_sum.items():
        num[e] = num.get(e, 0) - c
        den[e] = den.get(e, 0) - c
    return RationalSeries(Polynomial.from_terms(num), Polynomial.from_terms(den))


def compositions_gf(q: RationalParam) -> RationalSeries:
    """1 / (1 - sum over the capped part set of x^part); counts compositions by total.

    Since the capped part set is {1} plus the part sizes with p <= r, the
    denominator equals that of restricted_gf; coefficient n here equals
    coefficient n+1 there (dropping restricted_gf's constant term leaves
    x / (1 - x - T)).
    """
    den = {0: 1, 1: -1}
    for e, c in _capped_run_sum(q).items():
        den[e] = den.get(e, 0) - c
    return RationalSeries(Polynomial.from_terms({0: 1}), Polynomial.from_terms(den))


def class_gf(q: RationalParam, path_class: PathClass) -> RationalSeries:
    """The generating function whose coefficients count the given family."""
    if path_class is PathClass.RATIONAL:
        return rational_gf(q)
    if path_class is PathClass.RESTRICTED:
        return restricted_gf(q)
    return quasi_gf(q)


def series_coeffs(series: RationalSeries, order: int) -> CountTable:
    """Exact power-series coefficients a_0..a_order of numerator/denominator.

    Standard linear-recurrence expansion: a_n = num_n - sum_{j>=1} den_j * a_{n-j}.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    num, den = series.numerator, series.denominator
    if den[0] != 1:
        raise ValueError("denominator constant term must be 1 for series expansion")
    coeffs: list[int] = []
    for n in range(order + 1):
        value = num[n] - sum(den[j] * coeffs[n - j] for j in range(1, min(n, den.degree()) + 1))
        coeffs.append(value)
    return CountTable(tuple(coeffs), "series")


def count_recurrence(q: RationalParam, path_class: PathClass, order: int) -> CountTable:
    """Counts c_0..c_order from the suffix recurrence.

    c_0 = 1 and, for n >= 1,

        c_n = c_{n-1} + sum over lead-ins p of c_{n - p - ceil(ps/r)}

    where a summand appears only when its index stays >= 1, and p is capped at
    r outside the rational family.  For the quasi family an extra +1 enters
    whenever 2 <= n <= r+s (the single-arch members; see the module
    docstring).
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    exponents: list[int] = []
    p = 1
    while path_class is PathClass.RATIONAL or p <= q.r:
        e = part_size(q, p)
        if e > order:
            break
        exponents.append(e)
        p += 1
    values = [1]
    for n in range(1, order + 1):
        total = values[n - 1]
        if path_class is PathClass.QUASI and 2 <= n <= q.r + q.s:
            total += 1
        total += sum(values[n - e] for e in exponents if n - e >= 1)
        values.append(total)
    return CountTable(tuple(values), "recurrence")


def count_enumeration(q: RationalParam, path_class: PathClass, order: int) -> CountTable:
    """Counts by literally generating every set; the slow cross-check."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    values = tuple(len(generate(q, path_class, n)) for n in range(order + 1))
    return CountTable(values, "enumeration")


def check_sum_identity(q: RationalParam, order: int) -> bool:
    """Verify, as truncated series to ``order``, that

        sum_{p>=1} x^(p + ceil(ps/r))  ==  (sum_{k=1}^{r} x^(k + ceil(ks/r))) / (1 - x^(r+s)).

    The left side enumerates its exponents directly; the right side goes
    through the series expander, so the two routes are independent.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    direct = [0] * (order + 1)
    p = 1
    while True:
        e = part_size(q, p)
        if e > order:
            break
        direct[e] += 1
        p += 1
    folded = RationalSeries(
        Polynomial.from_terms(_capped_run_sum(q)),
        Polynomial.from_terms({0: 1, q.r + q.s: -1}),
    )
    return tuple(direct) == series_coeffs(folded, order).values
