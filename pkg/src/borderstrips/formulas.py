"""Closed-form counts, counting polynomials, q-identities, and the volume
sequence.

Everything here is exact: integers, Fractions, or integer-coefficient
polynomials.  Sequence recursions divide mid-computation, so they run on
Fractions and assert integrality at the end; floating point never appears.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Iterator

from .enumeration import DEFAULT_BUDGET, EnumerationBudget, count_bsd, enum_bsp
from .perm import descents_k
from .polynomial import Polynomial, falling_factorial
from .shape import Word, hor_statistic, isometry_orbit


class UnsupportedRangeError(ValueError):
    """The closed form does not apply to these parameters."""


def _as_word(word: Word | str) -> Word:
    return word if isinstance(word, Word) else Word.parse(word)


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator


# ---------------------------------------------------------------------------
# q-analogues

def q_bracket(m: int) -> Polynomial:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise ValueError("bracket of a negative integer")
    return Polynomial((1,) * m, "q")


def q_factorial(m: int) -> Polynomial:
    """[m]_q! = [1]_q [2]_q ... [m]_q, with [0]_q! = 1."""
    if m < 0:
        raise ValueError("factorial of a negative integer")
    result = Polynomial((1,), "q")
    for i in range(1, m + 1):
        result = result * q_bracket(i)
    return result


def qpoly_single_column(n: int) -> Polynomial:
    """[n-1]_q! * (1 + 2q + ... + n q^(n-1)): the single-c-word identity."""
    if n < 1:
        raise ValueError("n must be positive")
    return q_factorial(n - 1) * Polynomial(tuple(range(1, n + 1)), "q")


# ---------------------------------------------------------------------------
# counting formulas

def bst_closed(k: int, n: int) -> int:
    """(n+k)!/2^k tableaux, valid exactly when the word is no longer than n."""
    if k < 0:
        raise ValueError("word length must be nonnegative")
    if k > n:
        raise UnsupportedRangeError(
            f"the tableau count is word dependent for k > n (k={k}, n={n}); enumerate instead"
        )
    return _as_integer(Fraction(factorial(n + k), 2**k), "tableau count")


def f_polynomial(word: Word | str, budget: EnumerationBudget = DEFAULT_BUDGET) -> Polynomial:
    """The degree-2k counting polynomial of a word.

    Summing the falling factorial (n + k - d)_(2k) over the member
    permutations of (word, k), where d is the k-descent count.  Scaled by
    (n-k)!/(2k)! it counts decompositions for every n > 2k - 1.
    """
    word = _as_word(word)
    k = len(word)
    if k == 0:
        return Polynomial((1,), "n")
    result = Polynomial((), "n")
    for tau in enum_bsp(word, k, budget):
        d = len(descents_k(tau, k))
        result = result + falling_factorial(k - d, 2 * k, "n")
    return result


def bsd_count_formula(word: Word | str, n: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    """Decomposition count through the polynomial route, for n > 2k - 1."""
    word = _as_word(word)
    k = len(word)
    if n <= 2 * k - 1:
        raise UnsupportedRangeError(
            f"the polynomial route needs n > 2k - 1 (k={k}, n={n}); enumerate instead"
        )
    value = Fraction(f_polynomial(word, budget)(n) * factorial(n - k), factorial(2 * k))
    return _as_integer(value, f"decomposition count of ({word.display()}, {n})")


def rc_closed(n: int) -> int:
    """(n+1)!(3n+2)/12, the decomposition count of the rc word for n >= 2."""
    if n < 2:
        raise UnsupportedRangeError(f"the rc closed form needs n >= 2, got {n}")
    return _as_integer(Fraction(factorial(n + 1) * (3 * n + 2), 12), "rc count")


def total_over_words(k: int, n: int) -> tuple[int, Polynomial]:
    """Total decomposition count over all 2^k words, with its q-analogue."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    return (n + 1) ** k * factorial(n), q_bracket(n + 1) ** k * q_factorial(n)


def j_statistic(word: Word | str, budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    """Total k-descent count over the member permutations of (word, k)."""
    word = _as_word(word)
    k = len(word)
    if k == 0:
        return 0
    return sum(len(descents_k(tau, k)) for tau in enum_bsp(word, k, budget))


# ---------------------------------------------------------------------------
# straightness

@dataclass(frozen=True)
class StraightnessReport:
    first: Word
    second: Word
    hor_first: int
    hor_second: int
    poly_first: Polynomial
    poly_second: Polynomial
    difference: Polynomial  # poly_first - poly_second
    leading_equal: bool
    subleading_delta: int  # degree-(2k-1) coefficient of the difference
    eventually_larger: str  # "first", "second" or "equal"
    note: str

    def eventually_larger_word(self) -> Word | None:
        if self.eventually_larger == "first":
            return self.first
        if self.eventually_larger == "second":
            return self.second
        return None


_STRAIGHTNESS_NOTE = (
    "Straighter words (larger |hor|) have the larger subleading coefficient "
    "and therefore eventually more decompositions; a published statement of "
    "this inequality carries the opposite sign, contradicted by its own "
    "proof and by exact counts, and is treated here as a sign slip."
)


def straightness_compare(
    v: Word | str, w: Word | str, budget: EnumerationBudget = DEFAULT_BUDGET
) -> StraightnessReport:
    """Compare the counting polynomials of two same-length words."""
    v, w = _as_word(v), _as_word(w)
    if len(v) != len(w):
        raise ValueError("words must have the same length")
    k = len(v)
    fv, fw = f_polynomial(v, budget), f_polynomial(w, budget)
    diff = fv - fw
    if diff.is_zero():
        larger = "equal"
    else:
        larger = "first" if diff.coeffs[-1] > 0 else "second"
    return StraightnessReport(
        first=v,
        second=w,
        hor_first=hor_statistic(v),
        hor_second=hor_statistic(w),
        poly_first=fv,
        poly_second=fw,
        difference=diff,
        leading_equal=fv.coefficient(2 * k) == fw.coefficient(2 * k),
        subleading_delta=diff.coefficient(2 * k - 1) if k else 0,
        eventually_larger=larger,
        note=_STRAIGHTNESS_NOTE,
    )


# ---------------------------------------------------------------------------
# partitions and compositions

def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n, reverse-lexicographically."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    yield from gen(n, n)


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n into exactly `parts` positive parts, lexicographically."""
    if n < 0 or parts < 0:
        raise ValueError("need nonnegative arguments")
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first, *rest)


def multinomial(parts: tuple[int, ...]) -> int:
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


# ---------------------------------------------------------------------------
# the volume sequence, three ways

def zograf_sequence(n_max: int) -> list[int]:
    """v_3, v_4, ..., v_(n_max) via the defining recursion, exactly."""
    if n_max < 3:
        raise ValueError("the sequence starts at index 3")
    values: dict[int, int] = {3: 1}
    for m in range(4, n_max + 1):
        acc = Fraction(0)
        for i in range(1, m - 2):
            acc += (
                Fraction(i * (m - i - 2), m - 1)
                * comb(m - 4, i - 1)
                * comb(m, i + 1)
                * values[i + 2]
                * values[m - i]
            )
        values[m] = _as_integer(acc / 2, f"v_{m}")
    return [values[m] for m in range(3, n_max + 1)]


def rect_recurrence(n_max: int) -> list[int]:
    """a(0), ..., a(n_max): decomposition counts of the 2n x n rectangle."""
    if n_max < 0:
        raise ValueError("need n_max >= 0")
    values: dict[int, int] = {0: 1}
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += (
                Fraction(i * (m - i + 1), m + 2)
                * comb(m - 1, i - 1)
                * comb(m + 3, i + 1)
                * values[i - 1]
                * values[m - i]
            )
        values[m] = _as_integer(acc / 2, f"a({m})")
    return [values[m] for m in range(n_max + 1)]


def kaufmann_sum(n: int) -> int:
    """v_n as an alternating sum over compositions of n - 3."""
    if n < 4:
        raise ValueError("the composition formula needs n >= 4")
    total = Fraction(0)
    for k in range(1, n - 2):
        sign = (-1) ** (n - 3 - k)
        inner = 0
        for m in compositions(n - 3, k):
            inner += multinomial(m) * multinomial(tuple(x + 1 for x in m))
        total += Fraction(sign * inner, factorial(k))
    return _as_integer(total, f"v_{n} (composition sum)")


def partition_ie_sum(n: int) -> int:
    """Decomposition count of the 2n x n rectangle by inclusion-exclusion
    over partitions of n."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = Fraction(0)
    for p in partitions(n):
        sign = (-1) ** (sum(p) - len(p))
        mult_fact = prod(factorial(c) for c in Counter(p).values())
        total += Fraction(
            sign * multinomial(p) * multinomial(tuple(x + 1 for x in p)), mult_fact
        )
    return _as_integer(total, f"rectangle count at n={n}")


def wp_volume(n: int) -> tuple[Fraction, int]:
    """The volume of the n-punctured-sphere moduli space as
    (rational coefficient, power of pi)."""
    if n < 4:
        raise UnsupportedRangeError(f"the volume formula needs n >= 4, got {n}")
    v_n = zograf_sequence(n)[-1]
    return Fraction(v_n, factorial(n) * factorial(n - 3)), 2 * (n - 3)


def format_sequence(values: list[int], start_index: int = 0) -> str:
    """Newline-delimited 'index value' pairs."""
    return "\n".join(f"{start_index + i} {v}" for i, v in enumerate(values))


# ---------------------------------------------------------------------------
# the word-recovery scan

@dataclass(frozen=True)
class ScanReport:
    k: int
    orbits: tuple[tuple[str, ...], ...]
    polynomial_groups: tuple[tuple[str, ...], ...]
    count_groups: tuple[tuple[str, ...], ...]  # grouped by the count at n = k
    conjecture_holds: bool  # polynomial groups coincide with orbits
    stronger_holds: bool  # count groups already coincide with orbits
    counterexamples: tuple[str, ...]


def _group_words(words: list[Word], key) -> tuple[tuple[str, ...], ...]:
    buckets: dict[object, list[str]] = {}
    for word in words:
        buckets.setdefault(key(word), []).append(str(word))
    groups = [tuple(sorted(g)) for g in buckets.values()]
    return tuple(sorted(groups))


def conjecture_scan(k: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> ScanReport:
    """Group all words of length k by counting polynomial and compare the
    groups with isometry orbits.

    Only the provable direction is asserted (isometric words must share a
    polynomial); whether the groups are exactly the orbits is reported, never
    assumed.  The count at n = k is grouped the same way as a scan of the
    stronger recovery statement.
    """
    if k < 0:
        raise ValueError("word length must be nonnegative")
    words = [Word(tuple(letters)) for letters in product("cr", repeat=k)]
    polys = {str(w): f_polynomial(w, budget) for w in words}
    counts = {str(w): count_bsd(w, k, budget) if k >= 1 else 1 for w in words}
    orbit_of = {str(w): tuple(sorted(str(x) for x in isometry_orbit(w))) for w in words}

    orbits = tuple(sorted(set(orbit_of.values())))
    poly_groups = _group_words(words, lambda w: polys[str(w)])
    count_groups = _group_words(words, lambda w: counts[str(w)])

    for orbit in orbits:
        first = polys[orbit[0]]
        for member in orbit[1:]:
            if polys[member] != first:
                raise RuntimeError(
                    f"isometric words {orbit[0]} and {member} have different polynomials"
                )

    counterexamples = []
    for group in poly_groups:
        member_orbits = {orbit_of[w] for w in group}
        if len(member_orbits) > 1:
            counterexamples.append(
                "words " + ", ".join(group) + " share a polynomial across "
                f"{len(member_orbits)} isometry orbits"
            )
    return ScanReport(
        k=k,
        orbits=orbits,
        polynomial_groups=poly_groups,
        count_groups=count_groups,
        conjecture_holds=poly_groups == orbits,
        stronger_holds=count_groups == orbits,
        counterexamples=tuple(counterexamples),
    )
