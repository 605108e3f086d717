"""Finite fields GF(q) and reduced row echelon form over them.

Field elements are the integers ``0..q-1``. For a prime ``q`` they are the
residues mod ``q``; for ``q = p**e`` an integer encodes the polynomial whose
base-``p`` digits are its coefficients, reduced modulo a fixed monic
irreducible polynomial of degree ``e``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

Row = tuple[int, ...]
Matrix = tuple[Row, ...]


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise ValueError otherwise."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"q={q} is not a prime power")
    return p, e


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    # mod is monic of degree e
    e = len(mod) - 1
    for i in range(len(out) - 1, e - 1, -1):
        c = out[i]
        if c:
            for j in range(e + 1):
                out[i - e + j] = (out[i - e + j] - c * mod[j]) % p
    return out[:e] + [0] * max(0, e - len(out))


def _is_irreducible(poly: list[int], p: int) -> bool:
    # poly is monic of degree e; trial division by monic polys of degree <= e // 2
    e = len(poly) - 1
    for deg in range(1, e // 2 + 1):
        for tail in product(range(p), repeat=deg):
            div = list(tail) + [1]
            rem = list(poly)
            for i in range(len(rem) - 1, deg - 1, -1):
                c = rem[i]
                if c:
                    for j in range(deg + 1):
                        rem[i - deg + j] = (rem[i - deg + j] - c * div[j]) % p
            if not any(rem[:deg]):
                return False
    return True


class GF:
    """Arithmetic in the finite field with ``q`` elements, via lookup tables."""

    def __init__(self, q: int):
        p, e = prime_power(q)
        self.q, self.p, self.e = q, p, e
        if e == 1:
            self.add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            modulus = next(
                list(tail) + [1]
                for tail in product(range(p), repeat=e)
                if tail[0] and _is_irreducible(list(tail) + [1], p)
            )
            digits = [self._digits(a) for a in range(q)]
            self.add = [
                [self._encode([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)]
                for a in range(q)
            ]
            self.mul = [
                [self._encode(_poly_mulmod(digits[a], digits[b], modulus, p)) for b in range(q)]
                for a in range(q)
            ]
        self.neg = [self.add[a].index(0) for a in range(q)]
        self.inv = [0] + [self.mul[a].index(1) for a in range(1, q)]

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


def rref(rows: Sequence[Sequence[int]], F: GF) -> Matrix:
    """Canonical reduced row echelon form of the row space of ``rows``.

    Zero rows are dropped and every row is cut to the width of the last
    nonzero column, so a subspace of F_q^n has the same key in every ambient
    F_q^m with m >= n.
    """
    width = max((len(r) for r in rows), default=0)
    M = [list(r) + [0] * (width - len(r)) for r in rows]
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    pivot_row = 0
    for col in range(width):
        sel = next((i for i in range(pivot_row, len(M)) if M[i][col]), None)
        if sel is None:
            continue
        M[pivot_row], M[sel] = M[sel], M[pivot_row]
        prow = M[pivot_row]
        s = inv[prow[col]]
        if s != 1:
            prow[:] = [mul[s][x] for x in prow]
        for i, row in enumerate(M):
            c = row[col]
            if i != pivot_row and c:
                nc = neg[c]
                row[:] = [add[x][mul[nc][y]] for x, y in zip(row, prow)]
        pivot_row += 1
        if pivot_row == len(M):
            break
    M = M[:pivot_row]
    last = max((max((j for j, x in enumerate(r) if x), default=-1) for r in M), default=-1)
    return tuple(tuple(r[: last + 1]) for r in M)


def pivots(M: Matrix) -> list[int]:
    return [next(j for j, x in enumerate(r) if x) for r in M]


def in_row_space(v: Sequence[int], M: Matrix, F: GF) -> bool:
    """Test ``v`` against a matrix already in RREF."""
    width = max((len(r) for r in M), default=0)
    w = list(v) + [0] * (width - len(v))
    add, mul, neg = F.add, F.mul, F.neg
    for row, p in zip(M, pivots(M)):
        if w[p]:
            c = neg[w[p]]
            for j, y in enumerate(row):
                if y:
                    w[j] = add[w[j]][mul[c][y]]
    return not any(w)


def enumerate_rref(n: int, r: int, F: GF) -> Iterator[Matrix]:
    """All r x n RREF matrices over F, i.e. all r-dimensional subspaces of F^n.

    The matrices come back uncanonicalised (full width ``n``); callers that
    need keys pass them through :func:`rref`.
    """
    q = F.q
    for piv in combinations(range(n), r):
        free = [(i, j) for i, p in enumerate(piv) for j in range(p + 1, n) if j not in piv]
        for vals in product(range(q), repeat=len(free)):
            M = [[0] * n for _ in range(r)]
            for i, p in enumerate(piv):
                M[i][p] = 1
            for (i, j), v in zip(free, vals):
                M[i][j] = v
            yield tuple(tuple(row) for row in M)


def combine(coeffs: Matrix, basis: Matrix, F: GF) -> list[list[int]]:
    """Rows of ``coeffs @ basis`` over F."""
    width = max((len(b) for b in basis), default=0)
    out = []
    add, mul = F.add, F.mul
    for c in coeffs:
        acc = [0] * width
        for a, b in zip(c, basis):
            if a:
                for j, y in enumerate(b):
                    acc[j] = add[acc[j]][mul[a][y]]
        out.append(acc)
    return out
