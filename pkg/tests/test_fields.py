from itertools import product

import pytest

from mobius_posets.fields import (
    GF,
    combine,
    enumerate_rref,
    field,
    in_row_space,
    prime_power,
    rref,
)


@pytest.mark.parametrize("q,expected", [(2, (2, 1)), (4, (2, 2)), (9, (3, 2)), (27, (3, 3)), (49, (7, 2)), (101, (101, 1))])
def test_prime_power(q, expected):
    assert prime_power(q) == expected


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100, -4])
def test_prime_power_rejects(q):
    with pytest.raises(ValueError):
        prime_power(q)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_field_axioms(q):
    F = GF(q)
    els = range(q)
    for a, b, c in product(els, repeat=3):
        assert F.add[a][F.add[b][c]] == F.add[F.add[a][b]][c]
        assert F.mul[a][F.mul[b][c]] == F.mul[F.mul[a][b]][c]
        assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]
    for a in els:
        assert F.add[a][0] == a and F.mul[a][1] == a
        assert F.add[a][F.neg[a]] == 0
        if a:
            assert F.mul[a][F.inv[a]] == 1
    # characteristic p
    for a in els:
        acc = 0
        for _ in range(F.p):
            acc = F.add[acc][a]
        assert acc == 0


def test_rref_canonical_and_trimmed():
    F = field(2)
    a = rref([[1, 1, 0, 0], [0, 1, 1, 0]], F)
    b = rref([[1, 0, 1], [1, 1, 0]], F)
    assert a == b == ((1, 0, 1), (0, 1, 1))
    assert rref([[0, 0, 0]], F) == ()
    assert rref([], F) == ()


def test_in_row_space_cancellation_past_width():
    F = field(2)
    M = rref([[1, 0, 1], [0, 1, 1]], F)
    assert in_row_space([1, 1], M, F)  # (1,1,0) = r1 + r2
    assert not in_row_space([1], M, F)
    F3 = field(3)
    M3 = rref([[1, 0, 1], [0, 1, 1]], F3)
    assert not in_row_space([1, 1], M3, F3)


@pytest.mark.parametrize("q,n", [(2, 3), (3, 2), (4, 2), (2, 4)])
def test_enumerate_rref_matches_brute_force(q, n):
    # oracle: distinct row spaces of all spanning sets of up to n vectors
    F = field(q)
    vecs = list(product(range(q), repeat=n))
    spaces = set()
    for r in range(n + 1):
        for rows in product(vecs, repeat=r):
            spaces.add(rref(list(rows), F))
    enumerated = {rref(M, F) for r in range(n + 1) for M in enumerate_rref(n, r, F)}
    assert enumerated == spaces


def test_combine():
    F = field(3)
    basis = ((1, 0, 2), (0, 1, 1))
    assert combine(((1, 1),), basis, F) == [[1, 1, 0]]
    assert combine(((2, 0),), basis, F) == [[2, 0, 1]]
