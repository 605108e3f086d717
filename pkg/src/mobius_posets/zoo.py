"""Concrete poset families.

Frontier conventions (``n`` is the rank bound):

* divisibility, antichain, linear order: the integers ``1..n``
* finite subsets: every subset of ``{1..n}``
* subspaces of F_q^infinity: every subspace of F_q^n
* products: product of the component frontiers
* the two counterexamples: the fixed small elements, every ``(l, d)`` with
  ``l, d <= n`` in each copy of A x D, and ``D0 ∩ [2, n]``
* finite posets read from a file: elements of height ``<= n``
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path
from typing import Iterable, Sequence

from .core import PosetView
from .fields import combine, enumerate_rref, field as gf, prime_power, rref, in_row_space
from .keys import (
    ElementKey,
    KeyParseError,
    parse_int,
    parse_pair,
    split_top_level,
    strip_prefix,
)


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _positive(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 1


# ----------------------------------------------------------------------
# basic families


class Divisibility(PosetView):
    family = "div"
    name = "divisibility"

    def __init__(self):
        super().__init__()
        self.bottom = ElementKey("div", 1)

    def key(self, n: int) -> ElementKey:
        return ElementKey("div", n)

    def leq(self, x, y):
        return y.payload % x.payload == 0

    def down_set(self, x):
        return [ElementKey("div", d) for d in divisors(x.payload)]

    def frontier(self, n):
        return [ElementKey("div", k) for k in range(1, n + 1)]

    def in_frontier(self, x, n):
        return x.payload <= n

    def rank(self, x):
        return x.payload

    def valid(self, x):
        return _positive(x.payload)

    def parse_key(self, text):
        return self.key(parse_int(strip_prefix(text.strip(), "div"), "positive integer"))

    def format_key(self, x):
        return f"div:{x.payload}"


class Antichain(PosetView):
    """The positive integers with no nontrivial relations (no minimum)."""

    family = "anti"
    name = "antichain"

    def key(self, n: int) -> ElementKey:
        return ElementKey("anti", n)

    def leq(self, x, y):
        return x.payload == y.payload

    def down_set(self, x):
        return [x]

    def frontier(self, n):
        return [ElementKey("anti", k) for k in range(1, n + 1)]

    def in_frontier(self, x, n):
        return x.payload <= n

    def rank(self, x):
        return 0

    def valid(self, x):
        return _positive(x.payload)

    def parse_key(self, text):
        return self.key(parse_int(strip_prefix(text.strip(), "anti"), "positive integer"))

    def format_key(self, x):
        return f"anti:{x.payload}"


class LinearOrder(PosetView):
    family = "lin"
    name = "linear"

    def __init__(self):
        super().__init__()
        self.bottom = ElementKey("lin", 1)

    def key(self, n: int) -> ElementKey:
        return ElementKey("lin", n)

    def leq(self, x, y):
        return x.payload <= y.payload

    def down_set(self, x):
        return [ElementKey("lin", k) for k in range(1, x.payload + 1)]

    def frontier(self, n):
        return [ElementKey("lin", k) for k in range(1, n + 1)]

    def in_frontier(self, x, n):
        return x.payload <= n

    def rank(self, x):
        return x.payload

    def valid(self, x):
        return _positive(x.payload)

    def parse_key(self, text):
        return self.key(parse_int(strip_prefix(text.strip(), "lin"), "positive integer"))

    def format_key(self, x):
        return f"lin:{x.payload}"


class FiniteSubsets(PosetView):
    """Finite subsets of {1, 2, ...} under inclusion; keys are sorted tuples."""

    family = "set"
    name = "subsets"

    def __init__(self):
        super().__init__()
        self.bottom = ElementKey("set", ())

    def key(self, elements: Iterable[int]) -> ElementKey:
        return ElementKey("set", tuple(sorted(set(elements))))

    def leq(self, x, y):
        return set(x.payload).issubset(y.payload)

    def down_set(self, x):
        s = x.payload
        return [ElementKey("set", c) for r in range(len(s) + 1) for c in combinations(s, r)]

    def frontier(self, n):
        return sorted(self.down_set(ElementKey("set", tuple(range(1, n + 1)))))

    def in_frontier(self, x, n):
        return not x.payload or x.payload[-1] <= n

    def rank(self, x):
        return len(x.payload)

    def valid(self, x):
        s = x.payload
        return (
            isinstance(s, tuple)
            and all(_positive(v) for v in s)
            and all(a < b for a, b in zip(s, s[1:]))
        )

    def parse_key(self, text):
        body = strip_prefix(text.strip(), "set")
        if not (body.startswith("{") and body.endswith("}")):
            raise KeyParseError(f"expected 'set:{{a,b,...}}', got {text!r}")
        inner = body[1:-1].strip()
        items = [parse_int(t, "positive integer") for t in inner.split(",")] if inner else []
        return self.key(items)

    def format_key(self, x):
        return "set:{" + ",".join(map(str, x.payload)) + "}"


_SUB_RE = re.compile(r"^q=(\d+);rref=(\[.*\])$")


class Subspaces(PosetView):
    """Finite-dimensional subspaces of F_q^infinity under inclusion.

    Keys hold ``(q, rows)`` with ``rows`` the canonical trimmed RREF basis, so
    a subspace of F_q^n keeps its key inside every larger ambient space.
    """

    family = "sub"

    def __init__(self, q: int = 2):
        super().__init__()
        prime_power(q)
        self.q = q
        self.F = gf(q)
        self.name = f"subspaces(q={q})"
        self.bottom = ElementKey("sub", (q, ()))
        self._down: dict[ElementKey, list[ElementKey]] = {}

    def key(self, rows: Sequence[Sequence[int]]) -> ElementKey:
        return ElementKey("sub", (self.q, rref(rows, self.F)))

    def dim(self, x: ElementKey) -> int:
        return len(x.payload[1])

    def leq(self, x, y):
        Y = y.payload[1]
        if len(x.payload[1]) > len(Y):
            return False
        return all(in_row_space(r, Y, self.F) for r in x.payload[1])

    def down_set(self, x):
        hit = self._down.get(x)
        if hit is not None:
            return hit
        basis = x.payload[1]
        k = len(basis)
        out = []
        for r in range(k + 1):
            for C in enumerate_rref(k, r, self.F):
                out.append(ElementKey("sub", (self.q, rref(combine(C, basis, self.F), self.F))))
        self._down[x] = out
        return out

    def frontier(self, n):
        out = []
        for r in range(n + 1):
            for M in enumerate_rref(n, r, self.F):
                out.append(ElementKey("sub", (self.q, rref(M, self.F))))
        return sorted(out)

    def in_frontier(self, x, n):
        return all(len(r) <= n for r in x.payload[1])

    def rank(self, x):
        return len(x.payload[1])

    def valid(self, x):
        q, rows = x.payload
        if q != self.q:
            return False
        try:
            return rref(rows, self.F) == rows and all(0 <= v < q for r in rows for v in r)
        except (TypeError, IndexError):
            return False

    def parse_key(self, text):
        body = strip_prefix(text.strip(), "sub").replace(" ", "")
        m = _SUB_RE.match(body)
        if not m:
            raise KeyParseError(f"expected 'sub:q=Q;rref=[[...],...]', got {text!r}")
        q = int(m.group(1))
        if q != self.q:
            raise KeyParseError(f"key has q={q} but poset has q={self.q}")
        inner = m.group(2)[1:-1]
        rows = []
        for part in split_top_level(inner) if inner else []:
            if not (part.startswith("[") and part.endswith("]")):
                raise KeyParseError(f"bad matrix row {part!r}")
            entries = part[1:-1]
            row = [parse_int(t, "field element") for t in entries.split(",")] if entries else []
            if any(not 0 <= v < q for v in row):
                raise KeyParseError(f"entry out of range for GF({q}) in {part!r}")
            rows.append(row)
        return self.key(rows)

    def format_key(self, x):
        q, rows = x.payload
        body = ",".join("[" + ",".join(map(str, r)) + "]" for r in rows)
        return f"sub:q={q};rref=[{body}]"


class Product(PosetView):
    """Componentwise order on ``left x right``."""

    family = "prod"

    def __init__(self, left: PosetView, right: PosetView):
        super().__init__()
        self.left, self.right = left, right
        self.name = f"product({left.name},{right.name})"
        if left.bottom is not None and right.bottom is not None:
            self.bottom = ElementKey("prod", (left.bottom, right.bottom))

    def key(self, a: ElementKey, b: ElementKey) -> ElementKey:
        return ElementKey("prod", (a, b))

    def leq(self, x, y):
        (a1, b1), (a2, b2) = x.payload, y.payload
        return self.left.leq(a1, a2) and self.right.leq(b1, b2)

    def down_set(self, x):
        a, b = x.payload
        return [
            ElementKey("prod", (p, q))
            for p, q in product(self.left.down_set(a), self.right.down_set(b))
        ]

    def frontier(self, n):
        return sorted(
            ElementKey("prod", (p, q))
            for p, q in product(self.left.frontier(n), self.right.frontier(n))
        )

    def in_frontier(self, x, n):
        a, b = x.payload
        return self.left.in_frontier(a, n) and self.right.in_frontier(b, n)

    def rank(self, x):
        a, b = x.payload
        return self.left.rank(a) + self.right.rank(b)

    def valid(self, x):
        try:
            a, b = x.payload
            self.left.check(a)
            self.right.check(b)
        except (TypeError, ValueError):
            return False
        return True

    def parse_key(self, text):
        a, b = parse_pair(strip_prefix(text.strip(), "prod"))
        return self.key(self.left.parse_key(a), self.right.parse_key(b))

    def format_key(self, x):
        a, b = x.payload
        return f"prod:({self.left.format_key(a)},{self.right.format_key(b)})"


# ----------------------------------------------------------------------
# the two counterexamples


class CounterexampleP(PosetView):
    """u below z1, z2 below every element of A x D; D0 = D \\ {1} hung off u.

    Payloads: ``('u',)``, ``('z', j)``, ``('m', l, d)`` for ``(l, d)`` in
    A x D, and ``('d0', d)`` for ``d >= 2``.
    """

    family = "P"
    name = "counterexample-p"

    def __init__(self):
        super().__init__()
        self.u = ElementKey("P", ("u",))
        self.z1 = ElementKey("P", ("z", 1))
        self.z2 = ElementKey("P", ("z", 2))
        self.bottom = self.u

    def m(self, ell: int, d: int = 1) -> ElementKey:
        return ElementKey("P", ("m", ell, d))

    def d0(self, d: int) -> ElementKey:
        return ElementKey("P", ("d0", d))

    def leq(self, x, y):
        a, b = x.payload, y.payload
        if a == b:
            return True
        tag = a[0]
        if tag == "u":
            return True
        if tag == "z":
            return b[0] == "m"
        if tag == "m":
            return b[0] == "m" and a[1] == b[1] and b[2] % a[2] == 0
        return b[0] == "d0" and b[1] % a[1] == 0

    def down_set(self, x):
        p = x.payload
        tag = p[0]
        if tag == "u":
            return [self.u]
        if tag == "z":
            return [self.u, x]
        if tag == "m":
            return [self.u, self.z1, self.z2] + [self.m(p[1], e) for e in divisors(p[2])]
        return [self.u] + [self.d0(e) for e in divisors(p[1]) if e > 1]

    def frontier(self, n):
        out = [self.u, self.z1, self.z2]
        out += [self.m(ell, d) for ell in range(1, n + 1) for d in range(1, n + 1)]
        out += [self.d0(d) for d in range(2, n + 1)]
        return sorted(out)

    def in_frontier(self, x, n):
        p = x.payload
        if p[0] == "m":
            return p[1] <= n and p[2] <= n
        if p[0] == "d0":
            return p[1] <= n
        return True

    def rank(self, x):
        p = x.payload
        tag = p[0]
        if tag == "u":
            return 0
        if tag == "z":
            return 1
        if tag == "m":
            return 1 + p[2]
        return p[1]

    def valid(self, x):
        p = x.payload
        if not isinstance(p, tuple) or not p:
            return False
        if p == ("u",) or p in (("z", 1), ("z", 2)):
            return True
        if p[0] == "m":
            return len(p) == 3 and _positive(p[1]) and _positive(p[2])
        return p[0] == "d0" and len(p) == 2 and _positive(p[1]) and p[1] >= 2

    def parse_key(self, text):
        body = strip_prefix(text.strip(), "P")
        if body == "u":
            return self.u
        if body in ("z1", "z2"):
            return self.z1 if body == "z1" else self.z2
        if body.startswith("prod:"):
            a, b = parse_pair(body[5:])
            return self.m(parse_int(a), parse_int(b))
        if body.startswith("d0:"):
            return self.d0(parse_int(body[3:]))
        raise KeyParseError(f"not an element of counterexample P: {text!r}")

    def format_key(self, x):
        p = x.payload
        if p[0] == "u":
            return "P:u"
        if p[0] == "z":
            return f"P:z{p[1]}"
        if p[0] == "m":
            return f"P:prod:({p[1]},{p[2]})"
        return f"P:d0:{p[1]}"


LETTERS = ("a", "b", "c")


class CounterexampleQ(PosetView):
    """u below a, b, c; copies Qa, Qb, Qc of A x D; x < Qy for letters x != y.

    Payloads: ``('u',)``, ``('l', x)`` for a letter x, ``('q', x, l, d)``
    for ``(l, d)`` in the copy Q_x, and ``('d0', d)``.
    """

    family = "Q"
    name = "counterexample-q"

    def __init__(self):
        super().__init__()
        self.u = ElementKey("Q", ("u",))
        self.bottom = self.u

    def letter(self, x: str) -> ElementKey:
        return ElementKey("Q", ("l", x))

    def copy(self, x: str, ell: int, d: int = 1) -> ElementKey:
        return ElementKey("Q", ("q", x, ell, d))

    def d0(self, d: int) -> ElementKey:
        return ElementKey("Q", ("d0", d))

    def leq(self, x, y):
        a, b = x.payload, y.payload
        if a == b:
            return True
        tag = a[0]
        if tag == "u":
            return True
        if tag == "l":
            return b[0] == "q" and b[1] != a[1]
        if tag == "q":
            return b[0] == "q" and a[1] == b[1] and a[2] == b[2] and b[3] % a[3] == 0
        return b[0] == "d0" and b[1] % a[1] == 0

    def down_set(self, x):
        p = x.payload
        tag = p[0]
        if tag == "u":
            return [self.u]
        if tag == "l":
            return [self.u, x]
        if tag == "q":
            lets = [self.letter(y) for y in LETTERS if y != p[1]]
            return [self.u] + lets + [self.copy(p[1], p[2], e) for e in divisors(p[3])]
        return [self.u] + [self.d0(e) for e in divisors(p[1]) if e > 1]

    def frontier(self, n):
        out = [self.u] + [self.letter(x) for x in LETTERS]
        out += [
            self.copy(x, ell, d)
            for x in LETTERS
            for ell in range(1, n + 1)
            for d in range(1, n + 1)
        ]
        out += [self.d0(d) for d in range(2, n + 1)]
        return sorted(out)

    def in_frontier(self, x, n):
        p = x.payload
        if p[0] == "q":
            return p[2] <= n and p[3] <= n
        if p[0] == "d0":
            return p[1] <= n
        return True

    def rank(self, x):
        p = x.payload
        tag = p[0]
        if tag == "u":
            return 0
        if tag == "l":
            return 1
        if tag == "q":
            return 1 + p[3]
        return p[1]

    def valid(self, x):
        p = x.payload
        if not isinstance(p, tuple) or not p:
            return False
        if p == ("u",):
            return True
        if p[0] == "l":
            return len(p) == 2 and p[1] in LETTERS
        if p[0] == "q":
            return len(p) == 4 and p[1] in LETTERS and _positive(p[2]) and _positive(p[3])
        return p[0] == "d0" and len(p) == 2 and _positive(p[1]) and p[1] >= 2

    def parse_key(self, text):
        body = strip_prefix(text.strip(), "Q")
        if body == "u":
            return self.u
        if body in LETTERS:
            return self.letter(body)
        m = re.match(r"^Q([abc]):(.*)$", body)
        if m:
            a, b = parse_pair(m.group(2))
            return self.copy(m.group(1), parse_int(a), parse_int(b))
        if body.startswith("d0:"):
            return self.d0(parse_int(body[3:]))
        raise KeyParseError(f"not an element of counterexample Q: {text!r}")

    def format_key(self, x):
        p = x.payload
        if p[0] == "u":
            return "Q:u"
        if p[0] == "l":
            return f"Q:{p[1]}"
        if p[0] == "q":
            return f"Q:Q{p[1]}:({p[2]},{p[3]})"
        return f"Q:d0:{p[1]}"


def permute_q_key(x: ElementKey, perm: dict[str, str]) -> ElementKey:
    """Apply a permutation of {a, b, c} to a key of counterexample Q.

    Letters and copy tags move together, which is an automorphism of Q.
    """
    p = x.payload
    if p[0] == "l":
        return ElementKey("Q", ("l", perm[p[1]]))
    if p[0] == "q":
        return ElementKey("Q", ("q", perm[p[1]], p[2], p[3]))
    return x


def build_counterexample_P() -> CounterexampleP:
    return CounterexampleP()


def build_counterexample_Q() -> CounterexampleQ:
    return CounterexampleQ()


# ----------------------------------------------------------------------
# finite posets from files

LABEL_RE = re.compile(r"^[A-Za-z0-9_{}(),]+$")


class PosetFileError(ValueError):
    pass


class FinitePoset(PosetView):
    """A finite poset given by labels and (not necessarily transitive) relations."""

    family = "fin"

    def __init__(self, elements: Sequence[str], relations: Iterable[tuple[str, str]], bottom: str, name: str = "finite"):
        super().__init__()
        self.name = name
        seen = set()
        for e in elements:
            if not LABEL_RE.match(e):
                raise PosetFileError(f"bad label {e!r}")
            if e in seen:
                raise PosetFileError(f"duplicate label {e!r}")
            seen.add(e)
        self.labels = sorted(seen)
        up: dict[str, set[str]] = {e: {e} for e in self.labels}
        for a, b in relations:
            for lab in (a, b):
                if lab not in seen:
                    raise PosetFileError(f"relation ({a}, {b}) uses undeclared label {lab!r}")
            up[a].add(b)
        # transitive closure by repeated reachability
        closed: dict[str, set[str]] = {}
        for e in self.labels:
            stack, reach = [e], {e}
            while stack:
                v = stack.pop()
                for w in up[v]:
                    if w not in reach:
                        reach.add(w)
                        stack.append(w)
            closed[e] = reach
        for a in self.labels:
            for b in closed[a]:
                if a != b and a in closed[b]:
                    raise PosetFileError(
                        f"relation is not antisymmetric: ({a}, {b}) and ({b}, {a}) both hold"
                    )
        if bottom not in seen:
            raise PosetFileError(f"bottom {bottom!r} is not a declared element")
        missing = [e for e in self.labels if e not in closed[bottom]]
        if missing:
            raise PosetFileError(f"bottom {bottom!r} is not below {missing[0]!r}: pair ({bottom}, {missing[0]})")
        self._up = closed
        self._down = {e: sorted(a for a in self.labels if e in closed[a]) for e in self.labels}
        self.bottom = ElementKey("fin", bottom)
        height: dict[str, int] = {}
        for e in sorted(self.labels, key=lambda v: len(self._down[v])):
            below = [height[a] for a in self._down[e] if a != e]
            height[e] = 1 + max(below) if below else 0
        self._height = height

    def key(self, label: str) -> ElementKey:
        return ElementKey("fin", label)

    def leq(self, x, y):
        return y.payload in self._up[x.payload]

    def down_set(self, x):
        return [ElementKey("fin", a) for a in self._down[x.payload]]

    def frontier(self, n):
        return [ElementKey("fin", e) for e in self.labels if self._height[e] <= n]

    def in_frontier(self, x, n):
        return self._height[x.payload] <= n

    def rank(self, x):
        return self._height[x.payload]

    def max_height(self) -> int:
        return max(self._height.values())

    def valid(self, x):
        return x.payload in self._up

    def parse_key(self, text):
        label = strip_prefix(text.strip(), "fin")
        if label not in self._up:
            raise KeyParseError(f"unknown element {text!r}")
        return self.key(label)

    def format_key(self, x):
        return f"fin:{x.payload}"


def parse_poset_file(text: str, name: str = "finite") -> FinitePoset:
    """Read the line-oriented ``poset v1`` format."""
    lines = text.splitlines()
    elements: list[str] = []
    relations: list[tuple[str, str]] = []
    bottom = None
    header_seen = False
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != "poset v1":
                raise PosetFileError(f"line {lineno}: expected header 'poset v1', got {line!r}")
            header_seen = True
            continue
        parts = line.split()
        kw, args = parts[0], parts[1:]
        if kw == "elem" and len(args) == 1:
            if not LABEL_RE.match(args[0]):
                raise PosetFileError(f"line {lineno}: bad label {args[0]!r}")
            if args[0] in elements:
                raise PosetFileError(f"line {lineno}: duplicate label {args[0]!r}")
            elements.append(args[0])
        elif kw == "rel" and len(args) == 2:
            relations.append((args[0], args[1]))
        elif kw == "bottom" and len(args) == 1:
            if bottom is not None:
                raise PosetFileError(f"line {lineno}: bottom given twice")
            bottom = args[0]
        else:
            raise PosetFileError(f"line {lineno}: cannot parse {line!r}")
    if not header_seen:
        raise PosetFileError("empty file: missing 'poset v1' header")
    if bottom is None:
        raise PosetFileError("missing 'bottom <label>' line")
    return FinitePoset(elements, relations, bottom, name=name)


def load_poset_file(path: str | Path) -> FinitePoset:
    path = Path(path)
    return parse_poset_file(path.read_text(encoding="utf-8"), name=f"file:{path.name}")


def format_poset_file(elements: Sequence[str], relations: Iterable[tuple[str, str]], bottom: str) -> str:
    out = ["poset v1"]
    out += [f"elem {e}" for e in elements]
    out += [f"rel {a} {b}" for a, b in relations]
    out.append(f"bottom {bottom}")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------
# family specs

KINDS = (
    "divisibility",
    "antichain",
    "linear",
    "subsets",
    "subspaces",
    "product",
    "counterexample-p",
    "counterexample-q",
    "finite",
)

ALIASES = {
    "div": "divisibility",
    "anti": "antichain",
    "lin": "linear",
    "linear-order": "linear",
    "set": "subsets",
    "sub": "subspaces",
    "P": "counterexample-p",
    "Q": "counterexample-q",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    q: int | None = None
    components: tuple["FamilySpec", "FamilySpec"] | None = None
    path: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown poset family {self.kind!r}")
        if self.kind == "subspaces":
            prime_power(self.q if self.q is not None else 2)
        if self.kind == "product" and (self.components is None or len(self.components) != 2):
            raise ValueError("product needs exactly two component specs")
        if self.kind == "finite" and not self.path:
            raise ValueError("finite poset needs a file path")


def parse_family(text: str, q: int | None = None) -> FamilySpec:
    """``div``, ``subspaces``, ``product:anti,div``, ``file:path.poset`` and so on."""
    text = text.strip()
    if text.startswith("file:"):
        return FamilySpec("finite", path=text[5:])
    if text.startswith("product:") or text.startswith("prod:"):
        body = text.split(":", 1)[1]
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts = split_top_level(body)
        if len(parts) != 2:
            raise ValueError(f"product needs two components: {text!r}")
        return FamilySpec("product", components=(parse_family(parts[0], q), parse_family(parts[1], q)))
    kind = ALIASES.get(text, text)
    if kind not in KINDS and Path(text).is_file():
        return FamilySpec("finite", path=text)
    if kind == "subspaces":
        return FamilySpec(kind, q=q if q is not None else 2)
    return FamilySpec(kind)


def build(spec: FamilySpec) -> PosetView:
    kind = spec.kind
    if kind == "divisibility":
        return Divisibility()
    if kind == "antichain":
        return Antichain()
    if kind == "linear":
        return LinearOrder()
    if kind == "subsets":
        return FiniteSubsets()
    if kind == "subspaces":
        return Subspaces(spec.q if spec.q is not None else 2)
    if kind == "product":
        left, right = spec.components  # type: ignore[misc]
        return Product(build(left), build(right))
    if kind == "counterexample-p":
        return build_counterexample_P()
    if kind == "counterexample-q":
        return build_counterexample_Q()
    return load_poset_file(spec.path)  # type: ignore[arg-type]


def frontier_policy(spec: FamilySpec, n: int) -> list[ElementKey]:
    if n < 0:
        raise ValueError("rank bound must be >= 0")
    return build(spec).frontier(n)


ZOO_DESCRIPTIONS = {
    "divisibility": "positive integers, d <= n iff d | n (alias: div)",
    "antichain": "positive integers, no nontrivial relations, no minimum (alias: anti)",
    "linear": "positive integers under the usual order (alias: lin)",
    "subsets": "finite subsets of {1,2,...} under inclusion (alias: set)",
    "subspaces": "finite-dimensional subspaces of F_q^inf, q from --q (alias: sub)",
    "product:A,B": "componentwise order on A x B",
    "counterexample-p": "has property G but not H_2 (alias: P)",
    "counterexample-q": "has property M but not H_3 (alias: Q)",
    "file:PATH": "finite poset in 'poset v1' format",
}
