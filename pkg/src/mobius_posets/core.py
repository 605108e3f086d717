"""Locally finite posets with a minimum, and exact Möbius/zeta machinery.

Every poset is accessed through :class:`PosetView`: an order oracle, the
finite principal down-sets ``[bottom, x]``, and a nested family of finite
down-closed *frontiers* that exhaust the poset. All arithmetic is done with
:class:`fractions.Fraction`; Möbius values are plain ints.
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from .keys import ElementKey, FamilyMismatchError

Rational = Fraction
IntervalFunction = Callable[[ElementKey, ElementKey], "Fraction | int"]

CACHE_ENV = "MOBIUS_POSETS_CACHE"


def _cache_limit_from_env() -> int | None:
    raw = os.environ.get(CACHE_ENV)
    if raw is None or raw.strip() == "":
        return None
    limit = int(raw)
    if limit < 0:
        raise ValueError(f"{CACHE_ENV} must be a nonnegative integer")
    return limit


class MobiusCache:
    """Memo for Möbius values, keyed by ``(x, y)``.

    Writes go through a lock so a view can be shared between threads. When a
    size limit is set and would be exceeded the whole table is dropped; values
    are always recomputable, so eviction never changes results.
    """

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self._pairs: dict[tuple[ElementKey, ElementKey], int] = {}
        self._lock = threading.Lock()

    def get(self, x: ElementKey, y: ElementKey) -> int | None:
        return self._pairs.get((x, y))

    def update(self, items: Mapping[tuple[ElementKey, ElementKey], int]) -> None:
        with self._lock:
            if self.limit is not None and len(self._pairs) + len(items) > self.limit:
                self._pairs.clear()
                if len(items) > self.limit:
                    return
            self._pairs.update(items)

    def clear(self) -> None:
        with self._lock:
            self._pairs.clear()

    def __len__(self) -> int:
        return len(self._pairs)


class PosetView:
    """Base class for an explorable locally finite poset.

    Subclasses set ``family`` and ``name`` and implement ``leq``,
    ``down_set``, ``frontier``, ``in_frontier``, ``rank``, ``valid`` and the
    key text round trip. ``rank`` must be strictly order preserving
    (``x < y`` implies ``rank(x) < rank(y)``); it is only used to sort.
    """

    family: str = ""
    name: str = ""
    bottom: ElementKey | None = None

    def __init__(self) -> None:
        self.mobius_cache = MobiusCache(_cache_limit_from_env())

    # order oracle -----------------------------------------------------
    def leq(self, x: ElementKey, y: ElementKey) -> bool:
        raise NotImplementedError

    def down_set(self, x: ElementKey) -> list[ElementKey]:
        raise NotImplementedError

    def frontier(self, n: int) -> list[ElementKey]:
        raise NotImplementedError

    def in_frontier(self, x: ElementKey, n: int) -> bool:
        raise NotImplementedError

    def rank(self, x: ElementKey) -> int:
        return len(self.down_set(x))

    def valid(self, x: ElementKey) -> bool:
        return True

    # text form --------------------------------------------------------
    def parse_key(self, text: str) -> ElementKey:
        raise NotImplementedError

    def format_key(self, x: ElementKey) -> str:
        raise NotImplementedError

    # helpers ----------------------------------------------------------
    def check(self, x: ElementKey) -> None:
        if not isinstance(x, ElementKey) or x.family != self.family:
            raise FamilyMismatchError(
                f"key {x!r} does not belong to poset family {self.family!r}"
            )
        if not self.valid(x):
            raise ValueError(f"{x!r} is not an element of {self.name}")

    def lt(self, x: ElementKey, y: ElementKey) -> bool:
        return x != y and self.leq(x, y)

    def up_set_in(self, x: ElementKey, n: int) -> list[ElementKey]:
        return [y for y in self.frontier(n) if self.leq(x, y)]

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class SupportedFunction:
    """A finitely supported function ``P -> Q``, i.e. an element of J(P).

    Only nonzero values are stored; missing keys read as 0.
    """

    __slots__ = ("values",)

    def __init__(self, values: Mapping[ElementKey, "Fraction | int | str"] | None = None):
        self.values: dict[ElementKey, Fraction] = {}
        for k, v in (values or {}).items():
            v = Fraction(v)
            if v:
                self.values[k] = v

    @classmethod
    def indicator(cls, x: ElementKey, value: "Fraction | int" = 1) -> "SupportedFunction":
        return cls({x: value})

    def __call__(self, x: ElementKey) -> Fraction:
        return self.values.get(x, Fraction(0))

    def support(self) -> list[ElementKey]:
        return sorted(self.values)

    def items(self) -> list[tuple[ElementKey, Fraction]]:
        return sorted(self.values.items())

    def __bool__(self) -> bool:
        return bool(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SupportedFunction):
            return self.values == other.values
        return NotImplemented

    def __add__(self, other: "SupportedFunction") -> "SupportedFunction":
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out.get(k, 0) + v
        return SupportedFunction(out)

    def __neg__(self) -> "SupportedFunction":
        return SupportedFunction({k: -v for k, v in self.values.items()})

    def __sub__(self, other: "SupportedFunction") -> "SupportedFunction":
        return self + (-other)

    def __mul__(self, c: "Fraction | int") -> "SupportedFunction":
        return SupportedFunction({k: c * v for k, v in self.values.items()})

    __rmul__ = __mul__

    def map_keys(self, fn: Callable[[ElementKey], ElementKey]) -> "SupportedFunction":
        return SupportedFunction({fn(k): v for k, v in self.values.items()})

    def __repr__(self) -> str:
        body = ", ".join(f"{k.payload!r}: {v}" for k, v in self.items())
        return f"SupportedFunction({{{body}}})"


PointFunction = Union[SupportedFunction, Mapping[ElementKey, Fraction], Callable[[ElementKey], "Fraction | int"]]


def _evaluator(h: PointFunction) -> Callable[[ElementKey], Fraction]:
    if isinstance(h, SupportedFunction) or callable(h):
        return h  # type: ignore[return-value]
    return lambda x: Fraction(h.get(x, 0))


# ----------------------------------------------------------------------
# intervals and the Möbius function


def interval_elements(P: PosetView, x: ElementKey, y: ElementKey) -> list[ElementKey]:
    """Elements of the closed interval ``[x, y]`` in key order (empty if x is not <= y)."""
    P.check(x)
    P.check(y)
    if not P.leq(x, y):
        return []
    return sorted(z for z in P.down_set(y) if P.leq(x, z))


def mobius(P: PosetView, x: ElementKey, y: ElementKey, *, cache: bool = True) -> int:
    """μ_P(x, y) by the defining recursion over ``[x, y]``."""
    P.check(x)
    P.check(y)
    if x == y:
        return 1
    if not P.leq(x, y):
        return 0
    memo = P.mobius_cache if cache else MobiusCache()
    hit = memo.get(x, y)
    if hit is not None:
        return hit

    members = [z for z in P.down_set(y) if P.leq(x, z)]
    inside = set(members)
    members.sort(key=P.rank)
    vals: dict[ElementKey, int] = {}
    for z in members:
        known = memo.get(x, z)
        if known is not None:
            vals[z] = known
        elif z == x:
            vals[z] = 1
        else:
            vals[z] = -sum(vals[w] for w in P.down_set(z) if w in inside and w != z)
    memo.update({(x, z): v for z, v in vals.items()})
    return vals[y]


def mobius_column(P: PosetView, y: ElementKey, *, cache: bool = True) -> dict[ElementKey, int]:
    """``{z: μ(z, y)}`` for every z in the down-set of y.

    Uses the dual recursion μ(z, y) = -Σ_{z < w <= y} μ(w, y), which costs one
    pass over the intervals inside ``[bottom, y]`` instead of one interval per z.
    """
    P.check(y)
    memo = P.mobius_cache if cache else MobiusCache()
    down = P.down_set(y)
    known = {z: memo.get(z, y) for z in down}
    if all(v is not None for v in known.values()):
        return known  # type: ignore[return-value]

    above: dict[ElementKey, list[ElementKey]] = {z: [] for z in down}
    for w in down:
        for z in P.down_set(w):
            if z != w:
                above[z].append(w)
    col: dict[ElementKey, int] = {}
    for z in sorted(down, key=P.rank, reverse=True):
        col[z] = 1 if z == y else -sum(col[w] for w in above[z])
    memo.update({(z, y): v for z, v in col.items()})
    return col


# ----------------------------------------------------------------------
# the incidence algebra


def zeta(P: PosetView) -> IntervalFunction:
    return lambda x, y: 1 if P.leq(x, y) else 0


def delta(P: PosetView) -> IntervalFunction:
    return lambda x, y: 1 if x == y else 0


def mobius_function(P: PosetView) -> IntervalFunction:
    return lambda x, y: mobius(P, x, y)


def lift(P: PosetView, f: PointFunction) -> IntervalFunction:
    """View a function on P as the interval function supported on ``[bottom, x]``."""
    if P.bottom is None:
        raise ValueError(f"{P.name} has no minimum element")
    ev = _evaluator(f)
    bottom = P.bottom
    return lambda x, y: ev(y) if x == bottom and P.leq(x, y) else 0


def convolve_at(
    P: PosetView, f: IntervalFunction, g: IntervalFunction, x: ElementKey, y: ElementKey
) -> Fraction:
    """(f * g)(x, y) = Σ_{x <= z <= y} f(x, z) g(z, y)."""
    total = Fraction(0)
    for z in interval_elements(P, x, y):
        a = f(x, z)
        if a:
            total += a * g(z, y)
    return total


def convolve(P: PosetView, f: IntervalFunction, g: IntervalFunction) -> IntervalFunction:
    return lambda x, y: convolve_at(P, f, g, x, y)


# ----------------------------------------------------------------------
# transforms of functions on P


def zeta_transform(P: PosetView, f: PointFunction, x: ElementKey) -> Fraction:
    """g(x) = Σ_{z <= x} f(z).

    For a :class:`SupportedFunction` the sum runs over the support instead of
    the down-set of x; the terms that are skipped are all zero.
    """
    P.check(x)
    if isinstance(f, SupportedFunction):
        total = Fraction(0)
        for z, v in f.values.items():
            P.check(z)
            if P.leq(z, x):
                total += v
        return total
    ev = _evaluator(f)
    return sum((Fraction(ev(z)) for z in P.down_set(x)), Fraction(0))


def zeta_transform_on(
    P: PosetView, f: SupportedFunction, elements: Iterable[ElementKey]
) -> dict[ElementKey, Fraction]:
    """Zeta transform of ``f`` evaluated at each of ``elements``."""
    support = list(f.values.items())
    for z, _ in support:
        P.check(z)
    leq = P.leq
    out = {}
    for x in elements:
        total = Fraction(0)
        for z, v in support:
            if leq(z, x):
                total += v
        out[x] = total
    return out


def mobius_invert(P: PosetView, g: PointFunction, x: ElementKey) -> Fraction:
    """f(x) = Σ_{z <= x} μ(z, x) g(z)."""
    ev = _evaluator(g)
    col = mobius_column(P, x)
    total = Fraction(0)
    for z, m in col.items():
        if m:
            total += m * ev(z)
    return total


def support_on_frontier(P: PosetView, h: PointFunction, n: int) -> list[ElementKey]:
    """Sorted ``{x in frontier(n) : h(x) != 0}``."""
    ev = _evaluator(h)
    return sorted(x for x in P.frontier(n) if ev(x) != 0)
