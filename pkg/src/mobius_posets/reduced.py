"""Reduced incidence algebras as algebras of sequences on {1, 2, ...}.

Four typed posets are covered, each by the structure coefficients c(n; d, k)
of its reduced algebra:

=============  ==========================  ================================
family         poset and typing            c(n; d, k)
=============  ==========================  ================================
dirichlet      N under divisibility, m/n   [n = dk]
linear         N under <=, m - n + 1       [n = d + k - 1]
binomial       finite subsets, |T|-|S|+1   [n = d + k - 1] C(n-1, k-1)
qbinomial      subspaces of F_q^inf        [n = d + k - 1] C(n-1, k-1)_q
=============  ==========================  ================================

Sequences are :class:`ReducedSequence` objects; the unit is the indicator of
index 1 and the zeta function is the constant 1.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence, Union

from .core import PosetView
from .fields import prime_power
from .keys import ElementKey, format_rational, parse_rational
from .zoo import Divisibility, FiniteSubsets, LinearOrder, Subspaces

FAMILIES = ("dirichlet", "linear", "binomial", "qbinomial")


@dataclass(frozen=True)
class CoefficientFamily:
    kind: str
    q: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise ValueError(f"unknown coefficient family {self.kind!r}; choose from {FAMILIES}")
        if self.kind == "qbinomial":
            if self.q is None:
                raise ValueError("qbinomial family needs q")
            prime_power(self.q)

    def __str__(self) -> str:
        return f"qbinomial(q={self.q})" if self.kind == "qbinomial" else self.kind


DIRICHLET = CoefficientFamily("dirichlet")
LINEAR = CoefficientFamily("linear")
BINOMIAL = CoefficientFamily("binomial")


def qbinomial_family(q: int) -> CoefficientFamily:
    return CoefficientFamily("qbinomial", q)


class ReducedSequence:
    """A map n -> Q on the positive integers.

    Either finitely supported (``values``) or given by a ``rule``; absent
    indices of a finite sequence are 0.
    """

    __slots__ = ("values", "rule")

    def __init__(
        self,
        values: Mapping[int, "Fraction | int | str"] | None = None,
        rule: Callable[[int], "Fraction | int"] | None = None,
    ):
        self.values: dict[int, Fraction] = {}
        for n, v in (values or {}).items():
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"sequence indices must be positive integers, got {n!r}")
            v = Fraction(v)
            if v:
                self.values[n] = v
        self.rule = rule

    @classmethod
    def from_list(cls, seq: Sequence["Fraction | int"], start: int = 1) -> "ReducedSequence":
        return cls({start + i: v for i, v in enumerate(seq)})

    def __call__(self, n: int) -> Fraction:
        if self.rule is not None:
            return Fraction(self.rule(n))
        return self.values.get(n, Fraction(0))

    def support(self) -> list[int]:
        if self.rule is not None:
            raise ValueError("support of a rule-defined sequence is not available")
        return sorted(self.values)

    def to_list(self, N: int) -> list[Fraction]:
        return [self(n) for n in range(1, N + 1)]

    def __bool__(self) -> bool:
        return self.rule is not None or bool(self.values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ReducedSequence) and self.rule is None and other.rule is None:
            return self.values == other.values
        return NotImplemented

    def __repr__(self) -> str:
        if self.rule is not None:
            return "ReducedSequence(<rule>)"
        return f"ReducedSequence({ {n: str(v) for n, v in sorted(self.values.items())} })"


SequenceLike = Union[ReducedSequence, Mapping[int, "Fraction | int"], Callable[[int], "Fraction | int"]]


def _seq(f: SequenceLike) -> Callable[[int], Fraction]:
    if isinstance(f, ReducedSequence) or callable(f):
        return f  # type: ignore[return-value]
    return lambda n: Fraction(f.get(n, 0))


ZETA = ReducedSequence(rule=lambda n: 1)
DELTA = ReducedSequence({1: 1})


# ----------------------------------------------------------------------
# q-analogues


def _check_nonneg(*args: int) -> None:
    for a in args:
        if a < 0:
            raise ValueError(f"arguments must be nonnegative, got {a}")


def q_integer(d: int, q: int) -> int:
    """[d]_q = 1 + q + ... + q^(d-1)."""
    _check_nonneg(d)
    return d if q == 1 else (q**d - 1) // (q - 1)


@lru_cache(maxsize=None)
def qfactorial(n: int, q: int) -> int:
    _check_nonneg(n)
    if q < 1:
        raise ValueError("q must be a positive integer")
    out = 1
    for d in range(1, n + 1):
        out *= q_integer(d, q)
    return out


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int, q: int) -> int:
    """Gaussian binomial [n choose k]_q; 0 when k > n. ``q = 1`` gives C(n, k)."""
    _check_nonneg(n, k)
    if q < 1:
        raise ValueError("q must be a positive integer")
    if k > n:
        return 0
    if q == 1:
        return math.comb(n, k)
    k = min(k, n - k)
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


# ----------------------------------------------------------------------
# structure coefficients and convolution


def structure_coefficient(fam: CoefficientFamily, n: int, d: int, k: int) -> int:
    if min(n, d, k) < 1:
        raise ValueError("n, d, k must be positive")
    if fam.kind == "dirichlet":
        return int(n == d * k)
    if n != d + k - 1:
        return 0
    if fam.kind == "linear":
        return 1
    if fam.kind == "binomial":
        return math.comb(n - 1, k - 1)
    return qbinomial(n - 1, k - 1, fam.q)  # type: ignore[arg-type]


def splittings(fam: CoefficientFamily, n: int) -> list[tuple[int, int]]:
    """The pairs (d, k) for which c(n; d, k) can be nonzero."""
    if fam.kind == "dirichlet":
        return [(d, n // d) for d in range(1, n + 1) if n % d == 0]
    return [(d, n + 1 - d) for d in range(1, n + 1)]


def reduced_convolve(fam: CoefficientFamily, f: SequenceLike, g: SequenceLike, n: int) -> Fraction:
    """(f * g)(n) = Σ_{d,k} c(n; d, k) f(d) g(k)."""
    fv, gv = _seq(f), _seq(g)
    total = Fraction(0)
    for d, k in splittings(fam, n):
        a = fv(d)
        if a:
            total += structure_coefficient(fam, n, d, k) * a * gv(k)
    return total


def reduced_zeta_transform(fam: CoefficientFamily, f: SequenceLike, n: int) -> Fraction:
    """g(n) = (ζ * f)(n) = Σ_{d,k} c(n; d, k) f(k)."""
    fv = _seq(f)
    total = Fraction(0)
    for d, k in splittings(fam, n):
        b = fv(k)
        if b:
            total += structure_coefficient(fam, n, d, k) * b
    return total


def reduced_mobius(fam: CoefficientFamily, N: int) -> ReducedSequence:
    """μ on {1..N} from ζ * μ = δ, solved index by index.

    c(n; d, n) is nonzero only for d = 1 where it equals 1, so each step is a
    plain subtraction.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    mu: dict[int, Fraction] = {1: Fraction(1)}
    for n in range(2, N + 1):
        acc = Fraction(0)
        for d, k in splittings(fam, n):
            if k < n:
                acc += structure_coefficient(fam, n, d, k) * mu[k]
        mu[n] = -acc
    return ReducedSequence(mu)


def zeta_times(fam: CoefficientFamily, f: SequenceLike, N: int) -> ReducedSequence:
    return ReducedSequence({n: reduced_zeta_transform(fam, f, n) for n in range(1, N + 1)})


# ----------------------------------------------------------------------
# typings and brute-force verification


def typing(fam: CoefficientFamily, P: PosetView) -> Callable[[ElementKey, ElementKey], int]:
    """The natural typing t(x, y) of the poset matching ``fam`` (0 off intervals)."""
    kind = fam.kind
    if kind == "dirichlet" and isinstance(P, Divisibility):
        raw = lambda x, y: y.payload // x.payload
    elif kind == "linear" and isinstance(P, LinearOrder):
        raw = lambda x, y: y.payload - x.payload + 1
    elif kind == "binomial" and isinstance(P, FiniteSubsets):
        raw = lambda x, y: len(y.payload) - len(x.payload) + 1
    elif kind == "qbinomial" and isinstance(P, Subspaces) and P.q == fam.q:
        raw = lambda x, y: len(y.payload[1]) - len(x.payload[1]) + 1
    else:
        raise ValueError(f"poset {P.name} does not carry the {fam} typing")
    return lambda x, y: raw(x, y) if P.leq(x, y) else 0


def verify_structure_coefficients(
    fam: CoefficientFamily, P: PosetView, frontier: int, n_max: int | None = None
) -> dict:
    """Count, for every interval [x, y] inside ``frontier(frontier)`` of type n <= n_max,
    the z with t(x, z) = d and t(z, y) = k, and compare with the closed form.
    """
    t = typing(fam, P)
    elements = P.frontier(frontier)
    mismatches = []
    typing_errors = []
    intervals = checked = 0
    for y in elements:
        down = P.down_set(y)
        below = {z: set(P.down_set(z)) for z in down}
        if t(y, y) != 1:
            typing_errors.append({"x": P.format_key(y), "y": P.format_key(y), "type": t(y, y)})
        for x in down:
            n = t(x, y)
            if n < 1:
                typing_errors.append({"x": P.format_key(x), "y": P.format_key(y), "type": n})
                continue
            if n_max is not None and n > n_max:
                continue
            intervals += 1
            tally = Counter((t(x, z), t(z, y)) for z in down if x in below[z])
            for d in range(1, n + 1):
                for k in range(1, n + 1):
                    expected = structure_coefficient(fam, n, d, k)
                    found = tally.get((d, k), 0)
                    checked += 1
                    if expected != found:
                        mismatches.append(
                            {"x": P.format_key(x), "y": P.format_key(y), "d": d, "k": k,
                             "expected": expected, "found": found}
                        )
            stray = [dk for dk in tally if not (1 <= dk[0] <= n and 1 <= dk[1] <= n)]
            for d, k in stray:
                mismatches.append(
                    {"x": P.format_key(x), "y": P.format_key(y), "d": d, "k": k,
                     "expected": 0, "found": tally[(d, k)]}
                )
    # t must vanish exactly off the comparable pairs (sampled on the frontier)
    for x in elements[:40]:
        for y in elements[:40]:
            if (t(x, y) != 0) != P.leq(x, y):
                typing_errors.append({"x": P.format_key(x), "y": P.format_key(y), "type": t(x, y)})
    ok = not mismatches and not typing_errors
    return {
        "family": str(fam),
        "poset": P.name,
        "frontier": frontier,
        "n_max": n_max,
        "intervals_checked": intervals,
        "coefficients_checked": checked,
        "mismatches": mismatches,
        "typing_errors": typing_errors,
        "verdict": "all-match" if ok else "mismatch",
    }


def poset_for_family(fam: CoefficientFamily) -> PosetView:
    if fam.kind == "dirichlet":
        return Divisibility()
    if fam.kind == "linear":
        return LinearOrder()
    if fam.kind == "binomial":
        return FiniteSubsets()
    return Subspaces(fam.q)  # type: ignore[arg-type]


# ----------------------------------------------------------------------
# the polynomials P_k(u) with P_k(q^n) = C(n, k)_q


class QPolynomial:
    """Polynomial in u with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable["Fraction | int"]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, u: "Fraction | int") -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return QPolynomial(x + y for x, y in zip(a, b))

    def __mul__(self, other: "QPolynomial | Fraction | int") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return QPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return QPolynomial([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"QPolynomial({[str(c) for c in self.coeffs]})"


@lru_cache(maxsize=None)
def pk_polynomial(k: int, q: int) -> QPolynomial:
    """P_k(u) = Π_{d=1..k} (1 - q^(1-d) u) / (1 - q^d), expanded."""
    _check_nonneg(k)
    if q < 2:
        raise ValueError("q must be >= 2")
    poly = QPolynomial([1])
    for d in range(1, k + 1):
        scale = Fraction(1, 1 - q**d)
        poly = poly * QPolynomial([scale, -Fraction(1, q ** (d - 1)) * scale])
    return poly


def pk_evaluate(poly: QPolynomial, u: "Fraction | int") -> Fraction:
    return poly(u)


def prop8_polynomial(f: ReducedSequence, q: int) -> QPolynomial:
    """Σ_{k in supp f} f(k) P_{k-1}(u)."""
    total = QPolynomial([])
    for k in f.support():
        total = total + pk_polynomial(k - 1, q) * f(k)
    return total


# ----------------------------------------------------------------------
# support checks for the binomial and q-binomial algebras


def prop7_check(f: ReducedSequence, N: int, tol: float = 1e-2) -> dict:
    """g = ζ * f in the binomial algebra has no zeros in a tail of (max S, N],
    and g(N) / C(N-1, k1-1) is within ``tol`` of f(k1), k1 = max supp f."""
    if not f:
        raise ValueError("f must be nonzero")
    S = f.support()
    k1 = S[-1]
    if N <= k1:
        raise ValueError(f"N must exceed max(supp f) = {k1}")
    g = {n: reduced_zeta_transform(BINOMIAL, f, n) for n in range(k1 + 1, N + 1)}
    n0 = None
    for n in range(N, k1, -1):
        if g[n] == 0:
            break
        n0 = n
    zeros = [n for n, v in g.items() if v == 0]
    ratio = g[N] / math.comb(N - 1, k1 - 1)
    err = abs(ratio - f(k1))
    return {
        "support": S,
        "k1": k1,
        "N": N,
        "n0": n0,
        "zeros": zeros,
        "ratio": format_rational(ratio),
        "ratio_float": float(ratio),
        "leading": format_rational(f(k1)),
        "ratio_error": float(err),
        "tolerance": tol,
        "passed": n0 is not None and err <= tol,
    }


def prop8_check(f: ReducedSequence, q: int, N: int) -> dict:
    """Compare direct q-binomial sums with the polynomial Σ f(k) P_{k-1} at u = q^(n-1)."""
    fam = qbinomial_family(q)
    poly = prop8_polynomial(f, q)
    S = f.support()
    start = S[-1] + 1 if S else 1
    direct = {n: reduced_zeta_transform(fam, f, n) for n in range(start, N + 1)}
    via_poly = {n: poly(Fraction(q) ** (n - 1)) for n in range(start, N + 1)}
    disagree = [n for n in direct if direct[n] != via_poly[n]]
    zeros = [n for n, v in direct.items() if v == 0]
    zero_iff = poly.is_zero() == (not S)
    root_bound_ok = poly.is_zero() or len(zeros) <= poly.degree
    return {
        "q": q,
        "support": S,
        "N": N,
        "range": [start, N],
        "polynomial": poly.to_json(),
        "degree": poly.degree,
        "disagreements": disagree,
        "zeros": zeros,
        "zero_iff_f_zero": zero_iff,
        "root_bound_ok": root_bound_ok,
        "passed": not disagree and zero_iff and root_bound_ok,
    }


def linear_order_counterexample(N: int = 12) -> tuple[ReducedSequence, ReducedSequence]:
    """μ and ζ * μ for N under the usual order, both computed on {1..N}."""
    mu = reduced_mobius(LINEAR, N)
    return mu, zeta_times(LINEAR, mu, N)


def certify_linear_order(N: int = 12) -> dict:
    mu, zm = linear_order_counterexample(N)
    ok = mu.support() == [1, 2] and zm.support() == [1] and zm == DELTA
    return {
        "family": "linear",
        "N": N,
        "mu": sequence_to_json(mu, N),
        "zeta_mu": sequence_to_json(zm, N),
        "mu_support": mu.support(),
        "zeta_mu_support": zm.support(),
        "verdict": "R-violated" if ok else "not-certified",
    }


# ----------------------------------------------------------------------
# serialization


def sequence_to_json(f: ReducedSequence, N: int | None = None) -> list[dict]:
    if N is None:
        idx = f.support()
    else:
        idx = range(1, N + 1)
    return [{"n": n, "value": format_rational(f(n))} for n in idx]


def sequence_from_json(items: Iterable[Mapping]) -> ReducedSequence:
    return ReducedSequence({int(it["n"]): parse_rational(str(it["value"])) for it in items})


def parse_sequence(text: str) -> ReducedSequence:
    """``"2:1,4:-10"`` -> {2: 1, 4: -10}."""
    vals: dict[int, Fraction] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        if ":" not in part:
            raise ValueError(f"expected 'n:value', got {part!r}")
        n, v = part.split(":", 1)
        idx = int(n)
        if idx < 1:
            raise ValueError(f"index must be >= 1, got {idx}")
        vals[idx] = vals.get(idx, Fraction(0)) + parse_rational(v)
    return ReducedSequence(vals)


def polynomial_from_json(items: Sequence[str]) -> QPolynomial:
    return QPolynomial(parse_rational(c) for c in items)
