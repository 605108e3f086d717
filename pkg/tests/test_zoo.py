from itertools import product

import pytest

from mobius_posets.checkers import hk_witnesses, up_set_symmetric_difference
from mobius_posets.keys import ElementKey, KeyParseError
from mobius_posets.zoo import (
    LETTERS,
    Antichain,
    Divisibility,
    FamilySpec,
    FinitePoset,
    FiniteSubsets,
    LinearOrder,
    PosetFileError,
    Product,
    Subspaces,
    build,
    build_counterexample_P,
    build_counterexample_Q,
    format_poset_file,
    frontier_policy,
    load_poset_file,
    parse_family,
    parse_poset_file,
    permute_q_key,
)


def small_families():
    return [
        (Divisibility(), 30),
        (Antichain(), 6),
        (LinearOrder(), 8),
        (FiniteSubsets(), 4),
        (Subspaces(2), 3),
        (Subspaces(3), 2),
        (Product(Antichain(), Divisibility()), 4),
        (Product(FiniteSubsets(), LinearOrder()), 3),
        (build_counterexample_P(), 8),
        (build_counterexample_Q(), 5),
    ]


@pytest.mark.parametrize("P,n", small_families())
def test_leq_is_partial_order(P, n):
    els = P.frontier(n)
    for x in els:
        assert P.leq(x, x)
    for x, y in product(els, repeat=2):
        if x != y and P.leq(x, y):
            assert not P.leq(y, x)
    sample = els[:30]
    for x, y, z in product(sample, repeat=3):
        if P.leq(x, y) and P.leq(y, z):
            assert P.leq(x, z)


@pytest.mark.parametrize("P,n", small_families())
def test_down_set_matches_leq(P, n):
    els = P.frontier(n)
    for y in els[:40]:
        assert sorted(P.down_set(y)) == sorted(x for x in els if P.leq(x, y))


@pytest.mark.parametrize("P,n", small_families())
def test_bottom_below_everything(P, n):
    if P.bottom is None:
        return
    assert all(P.leq(P.bottom, x) for x in P.frontier(n))


# ---------------------------------------------------------------- build examples


def test_subsets_order():
    S = FiniteSubsets()
    assert S.leq(S.key([1]), S.key([1, 3]))
    assert not S.leq(S.key([2]), S.key([1, 3]))
    assert S.frontier(2) == sorted([S.key([]), S.key([1]), S.key([2]), S.key([1, 2])])


def test_subspace_counts():
    V = Subspaces(2)
    lines = [x for x in V.frontier(3) if V.dim(x) == 1]
    # oracle: nonzero vectors of F_2^3 up to scalars (only scalar 1)
    assert len(lines) == 2**3 - 1
    assert len(V.frontier(2)) == 5
    V3 = Subspaces(3)
    # (3^3 - 1) / (3 - 1) lines in F_3^3
    assert sum(1 for x in V3.frontier(3) if V3.dim(x) == 1) == 13


def test_subspace_embedding_nests_keys():
    V = Subspaces(2)
    assert set(V.frontier(2)) <= set(V.frontier(3))
    x = V.key([[1, 1]])
    y = V.key([[1, 0, 0], [0, 1, 0]])
    assert V.leq(x, y)
    assert V.format_key(V.key([[1, 0, 1], [0, 1, 1]])) == "sub:q=2;rref=[[1,0,1],[0,1,1]]"


def test_product_order_examples_and_oracle():
    A, Dv = Antichain(), Divisibility()
    PR = Product(A, Dv)
    k = lambda a, d: PR.key(A.key(a), Dv.key(d))
    assert PR.leq(k(3, 2), k(3, 6))
    assert not PR.leq(k(3, 2), k(4, 6))
    for a1, a2, d1, d2 in product(range(1, 5), range(1, 5), range(1, 13), range(1, 13)):
        assert PR.leq(k(a1, d1), k(a2, d2)) == (a1 == a2 and d2 % d1 == 0)
    assert PR.format_key(k(3, 6)) == "prod:(anti:3,div:6)"


def test_counterexample_P_examples():
    P = build_counterexample_P()
    assert P.leq(P.u, P.z1)
    assert not P.leq(P.z1, P.z2) and not P.leq(P.z2, P.z1)
    for ell in range(1, 10):
        assert P.leq(P.z1, P.m(ell)) and P.leq(P.z2, P.m(ell))
        between = [x for x in P.down_set(P.m(ell)) if P.lt(P.z1, x) and P.lt(x, P.m(ell))]
        assert between == []
    assert P.leq(P.u, P.d0(6))
    assert not P.leq(P.z1, P.d0(6))
    assert P.format_key(P.m(7, 1)) == "P:prod:(7,1)"
    assert P.parse_key("prod:(7,1)") == P.m(7, 1)


def test_counterexample_Q_examples():
    Q = build_counterexample_Q()
    a = Q.letter("a")
    assert Q.leq(a, Q.copy("b", 1, 1))
    assert Q.leq(a, Q.copy("c", 3, 4))
    assert not Q.leq(a, Q.copy("a", 1, 1))
    assert Q.leq(Q.u, Q.letter("c"))
    assert Q.leq(Q.u, Q.d0(4))
    assert not Q.leq(a, Q.d0(4))
    assert Q.format_key(Q.copy("a", 2, 3)) == "Q:Qa:(2,3)"
    assert Q.parse_key("Qb:(1,1)") == Q.copy("b", 1, 1)


def test_frontier_examples():
    assert [x.payload for x in Divisibility().frontier(6)] == [1, 2, 3, 4, 5, 6]
    assert [x.payload for x in Antichain().frontier(4)] == [1, 2, 3, 4]
    assert frontier_policy(FamilySpec("subspaces", q=2), 2) == Subspaces(2).frontier(2)
    with pytest.raises(ValueError):
        frontier_policy(FamilySpec("divisibility"), -1)


# ---------------------------------------------------------------- counterexample scans


@pytest.mark.parametrize("n", [5, 10, 25, 40])
def test_P_symmetric_difference_is_z1_z2(n):
    P = build_counterexample_P()
    assert up_set_symmetric_difference(P, P.z1, P.z2, n) == {P.z1, P.z2}


@pytest.mark.parametrize("n", [3, 8, 20])
def test_Q_witnesses_exactly_one_each(n):
    Q = build_counterexample_Q()
    S = [Q.letter(x) for x in LETTERS]
    rep = hk_witnesses(Q, S, n)
    for z in S:
        c = rep.per_candidate[z]
        assert c.count == 1 and c.samples == [z] and c.stabilized


@pytest.mark.parametrize("n", [12, 30, 60])
def test_D0_with_u_isomorphic_to_divisibility(n):
    P = build_counterexample_P()
    Dv = Divisibility()
    phi = {Dv.key(1): P.u}
    phi.update({Dv.key(d): P.d0(d) for d in range(2, n + 1)})
    assert sorted(phi.values()) == sorted(x for x in P.frontier(n) if x == P.u or x.payload[0] == "d0")
    for a, b in product(phi, repeat=2):
        assert Dv.leq(a, b) == P.leq(phi[a], phi[b])


def test_permute_q_key():
    Q = build_counterexample_Q()
    perm = {"a": "b", "b": "c", "c": "a"}
    assert permute_q_key(Q.letter("a"), perm) == Q.letter("b")
    assert permute_q_key(Q.copy("c", 2, 3), perm) == Q.copy("a", 2, 3)
    assert permute_q_key(Q.u, perm) == Q.u
    for x, y in product(Q.frontier(5), repeat=2):
        assert Q.leq(x, y) == Q.leq(permute_q_key(x, perm), permute_q_key(y, perm))


# ---------------------------------------------------------------- family specs


def test_parse_family_and_build():
    assert parse_family("div") == FamilySpec("divisibility")
    assert parse_family("subspaces", q=4) == FamilySpec("subspaces", q=4)
    spec = parse_family("product:anti,div")
    assert spec.kind == "product"
    assert isinstance(build(spec), Product)
    with pytest.raises(ValueError):
        parse_family("nonsense")
    with pytest.raises(ValueError):
        FamilySpec("subspaces", q=6)
    with pytest.raises(ValueError):
        parse_family("product:div")


def test_bad_keys_rejected():
    with pytest.raises(KeyParseError):
        Divisibility().parse_key("div:x")
    with pytest.raises(ValueError):
        Divisibility().check(ElementKey("div", -3))
    with pytest.raises(ValueError):
        Subspaces(2).parse_key("sub:q=3;rref=[[1]]")
    with pytest.raises(ValueError):
        build_counterexample_Q().parse_key("Q:d")


# ---------------------------------------------------------------- finite poset files


DIAMOND = """poset v1
# a diamond with a tail
elem b
elem x
elem y
elem t
elem w
rel b x
rel b y
rel x t
rel y t
rel t w
bottom b
"""


def test_load_diamond(tmp_path):
    path = tmp_path / "diamond.poset"
    path.write_text(DIAMOND)
    F = load_poset_file(path)
    k = F.key
    assert F.leq(k("b"), k("w"))
    assert not F.leq(k("x"), k("y"))
    assert F.rank(k("t")) == 2 and F.max_height() == 3
    spec = parse_family(f"file:{path}")
    assert build(spec).frontier(1) == [k("b"), k("x"), k("y")]


def test_format_round_trip():
    text = format_poset_file(["b", "x", "y"], [("b", "x"), ("b", "y")], "b")
    F = parse_poset_file(text)
    assert F.labels == ["b", "x", "y"]


@pytest.mark.parametrize(
    "text,needle",
    [
        ("elem a\n", "line 1"),
        ("poset v1\nelem a\nelem a\nbottom a\n", "duplicate"),
        ("poset v1\nelem a\nelem b\nrel a b\nrel b a\nbottom a\n", "(a, b)"),
        ("poset v1\nelem a\nelem b\nbottom a\n", "(a, b)"),
        ("poset v1\nelem a\nrel a z\nbottom a\n", "'z'"),
        ("poset v1\nelem a\n", "bottom"),
        ("poset v1\nelem a b\nbottom a\n", "line 2"),
        ("poset v1\nelem a;b\nbottom a\n", "bad label"),
        ("", "header"),
    ],
)
def test_file_errors(text, needle):
    with pytest.raises(PosetFileError) as err:
        parse_poset_file(text)
    assert needle in str(err.value)


def test_finite_poset_is_transitively_closed():
    F = FinitePoset(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")], "a")
    assert F.leq(F.key("a"), F.key("d"))
    assert [x.payload for x in F.down_set(F.key("d"))] == ["a", "b", "c", "d"]
