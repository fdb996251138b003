"""Sequence categories: the free symmetric strict monoidal construction.

Oracles here are independent of the implementation: interleavings are
recomputed with itertools.product, transpose permutations by matching
uniquely labelled entries, and every strength/interleaving map is checked
against its defining composite assembled from smaller primitives.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shufflecat.fincat import load_fincat
from shufflecat.freesmc import (
    BaseLevel,
    Fun,
    FreeLevel,
    ProdLevel,
    SeqMor,
    SeqObj,
    compose_seq,
    eta,
    eta_mor,
    gamma_component,
    gamma_inv_component,
    gamma_ij_component,
    identity_seq,
    mu,
    mu_mor,
    omega,
    omega_mor,
    omega_n,
    omega_n_mor,
    omega_prime,
    omega_prime_mor,
    omega_sigma,
    omega_sigma_mor,
    partitions_for,
    seq,
    strength_t1,
    strength_t1_mor,
    strength_t2,
    strength_t2_mor,
    strength_ti,
    strength_ti_mor,
    sym_mor,
    tmap,
)
from shufflecat.perms import Perm, all_perms, block, compose, identity, invert, permute

ARROW = load_fincat(
    {
        "name": "arrow",
        "objects": ["x", "y"],
        "morphisms": [{"id": "f", "src": "x", "tgt": "y"}],
        "compose": [],
    }
)
ALEV = BaseLevel(ARROW)
SWAP = Perm((2, 1))

LABELS = load_fincat(
    {
        "name": "labels",
        "objects": [f"{c}{k}" for c in "abc" for k in (1, 2, 3, 4)],
        "morphisms": [],
        "compose": [],
    }
)
LLEV = BaseLevel(LABELS)


def mors_from(obj):
    return tuple(m for m in ARROW.all_morphisms() if ARROW.src(m) == obj)


@st.composite
def seq_mors(draw, max_len=3):
    n = draw(st.integers(min_value=0, max_value=max_len))
    source = tuple(draw(st.sampled_from(("x", "y"))) for _ in range(n))
    perm = Perm(tuple(draw(st.permutations(tuple(range(1, n + 1))))))
    comps = tuple(draw(st.sampled_from(mors_from(source[i]))) for i in range(n))
    target = [None] * n
    for i in range(1, n + 1):
        target[perm(i) - 1] = ARROW.tgt(comps[i - 1])
    return SeqMor(SeqObj(source), SeqObj(tuple(target)), perm, comps)


def extend(m):
    """A morphism composable after m, built entrywise."""
    comps = tuple(mors_from(e)[-1] for e in m.target.entries)
    target = [None] * len(comps)
    for i, c in enumerate(comps):
        target[i] = ARROW.tgt(c)
    return SeqMor(m.target, SeqObj(tuple(target)), identity(len(comps)), comps)


# ---------------------------------------------------------------- basics


def test_eta():
    assert eta("x") == seq(("x",))
    m = eta_mor(ALEV, "f")
    assert m.source == seq(("x",)) and m.target == seq(("y",))
    assert m.perm == identity(1) and m.components == ("f",)
    assert eta_mor(ALEV, "id_x") == identity_seq(ALEV, eta("x"))


def test_identity_and_sym():
    x = seq(("x", "y", "x"))
    assert identity_seq(ALEV, x).perm == identity(3)
    rho = Perm((2, 3, 1))
    m = sym_mor(ALEV, x, rho)
    assert m.target == x
    assert m.source == seq(permute(x.entries, rho))
    for i in range(1, 4):
        assert m.target.entries[m.perm(i) - 1] == m.source.entries[i - 1]


def test_compose_identity_laws():
    x = seq(("x", "y"))
    m = sym_mor(ALEV, x, SWAP)
    assert compose_seq(ALEV, m, identity_seq(ALEV, m.source)) == m
    assert compose_seq(ALEV, identity_seq(ALEV, m.target), m) == m


def test_compose_pure_symmetries():
    x = seq(("x", "y", "x"))
    a, b = Perm((2, 3, 1)), Perm((2, 1, 3))
    m1 = sym_mor(ALEV, seq(permute(x.entries, a)), b)
    m2 = sym_mor(ALEV, x, a)
    c = compose_seq(ALEV, m2, m1)
    assert c.perm == compose(a, b)
    assert all(ARROW.is_identity(k) for k in c.components)


def test_compose_reindexes_components():
    m1 = sym_mor(ALEV, seq(("x", "y")), SWAP)
    m2 = SeqMor(seq(("x", "y")), seq(("y", "y")), identity(2), ("f", "id_y"))
    c = compose_seq(ALEV, m2, m1)
    assert c.source == seq(("y", "x")) and c.target == seq(("y", "y"))
    assert c.perm == SWAP
    assert c.components == ("id_y", "f")


def test_compose_endpoint_mismatch_raises():
    m = sym_mor(ALEV, seq(("x", "y")), SWAP)
    with pytest.raises(ValueError):
        compose_seq(ALEV, m, m)


@settings(max_examples=60)
@given(seq_mors())
def test_compose_associative(m1):
    m2 = extend(m1)
    m3 = extend(m2)
    lhs = compose_seq(ALEV, m3, compose_seq(ALEV, m2, m1))
    rhs = compose_seq(ALEV, compose_seq(ALEV, m3, m2), m1)
    assert lhs == rhs


# ---------------------------------------------------------------- mu


def test_mu_erases_parentheses():
    s = seq((seq(("x", "y")), seq(("x",))))
    assert mu(s) == seq(("x", "y", "x"))
    assert mu(seq(())) == seq(())


def test_mu_mor_outer_swap_blocks():
    inner1 = seq(("x",))
    inner2 = seq(("y", "x"))
    flev = FreeLevel(ALEV)
    outer = sym_mor(flev, seq((inner2, inner1)), SWAP)
    m = mu_mor(outer)
    assert m.source == seq(("x", "y", "x"))
    assert m.target == seq(("y", "x", "x"))
    assert m.perm == block(SWAP, [identity(1), identity(2)])
    assert m.perm == Perm((3, 1, 2))


@settings(max_examples=50)
@given(st.data())
def test_mu_mor_pure_perm_oracle(data):
    sizes = data.draw(st.lists(st.integers(0, 2), min_size=0, max_size=3))
    n = len(sizes)
    outer_p = Perm(tuple(data.draw(st.permutations(tuple(range(1, n + 1))))))
    blocks = []
    for k in sizes:
        entries = tuple(data.draw(st.sampled_from(("x", "y"))) for _ in range(k))
        p = Perm(tuple(data.draw(st.permutations(tuple(range(1, k + 1))))))
        blocks.append(sym_mor(ALEV, seq(entries), p))
    target = [None] * n
    for i in range(1, n + 1):
        target[outer_p(i) - 1] = blocks[i - 1].target
    outer = SeqMor(
        seq(tuple(b.source for b in blocks)), seq(tuple(target)), outer_p, tuple(blocks)
    )
    m = mu_mor(outer)
    # pure symmetries satisfy target[perm(i)] == source[i]
    placed = [None] * len(m.source.entries)
    for i in range(1, len(placed) + 1):
        placed[m.perm(i) - 1] = m.source.entries[i - 1]
    assert tuple(placed) == m.target.entries
    assert m.source == mu(outer.source) and m.target == mu(outer.target)


def test_mu_mor_compatible_with_compose():
    flev = FreeLevel(ALEV)
    inner = SeqMor(seq(("x",)), seq(("y",)), identity(1), ("f",))
    m1 = sym_mor(flev, seq((seq(("x",)), seq(("x", "y")))), SWAP)
    m2 = SeqMor(
        m1.target,
        seq((seq(("y",)), seq(("x", "y")))),
        identity(2),
        (inner, identity_seq(ALEV, seq(("x", "y")))),
    )
    lhs = mu_mor(compose_seq(flev, m2, m1))
    rhs = compose_seq(ALEV, mu_mor(m2), mu_mor(m1))
    assert lhs == rhs


# ---------------------------------------------------------------- tmap

COLLAPSE = Fun(lambda o: "x", lambda m: "id_x")


def test_tmap_identity():
    ident = Fun(lambda o: o, lambda m: m)
    x = seq(("x", "y"))
    assert tmap(ident, x) == x
    m = sym_mor(ALEV, x, SWAP)
    assert tmap(ident, m) == m


def test_tmap_componentwise():
    assert tmap(COLLAPSE, seq(("y", "y"))) == seq(("x", "x"))
    m = SeqMor(seq(("x",)), seq(("y",)), identity(1), ("f",))
    assert tmap(COLLAPSE, m) == identity_seq(ALEV, seq(("x",)))


@settings(max_examples=40)
@given(seq_mors())
def test_tmap_functorial(m1):
    m2 = extend(m1)
    lhs = tmap(COLLAPSE, compose_seq(ALEV, m2, m1))
    rhs = compose_seq(ALEV, tmap(COLLAPSE, m2), tmap(COLLAPSE, m1))
    assert lhs == rhs


# ---------------------------------------------------------------- strengths


def test_strength_t2_objects():
    assert strength_t2("a", seq(())) == seq(())
    assert strength_t2("a", seq(("b1", "b2"))) == seq((("a", "b1"), ("a", "b2")))


def test_strength_t2_morphisms():
    m = sym_mor(ALEV, seq(("x", "y")), SWAP)
    r = strength_t2_mor(ALEV, "f", m)
    assert r.source == seq((("x", "y"), ("x", "x")))
    assert r.target == seq((("y", "x"), ("y", "y")))
    assert r.perm == SWAP
    assert r.components == (("f", "id_y"), ("f", "id_x"))


def test_strength_t1_objects():
    assert strength_t1(seq(("a1", "a2")), "b") == seq((("a1", "b"), ("a2", "b")))


def test_strength_ti_direct():
    got = strength_ti(3, 2, ("a", seq(("c1", "c2")), "b"))
    assert got == seq((("a", "c1", "b"), ("a", "c2", "b")))
    assert strength_ti(2, 2, ("a", seq(("b1",)))) == strength_t2("a", seq(("b1",)))
    assert strength_ti(3, 2, ("a", seq(()), "b")) == seq(())


def ti_via_pair(n, i, args):
    """Move slot i to the end, apply the binary strength, relabel back."""
    rest = args[: i - 1] + args[i:]
    paired = strength_t2(rest, args[i - 1])
    back = lambda e: e[0][: i - 1] + (e[1],) + e[0][i - 1 :]
    return tmap(Fun(back, back), paired)


def ti_via_tail(n, i, args):
    """First interleave the tail group, then the full product."""
    u = strength_ti(n - i + 1, 1, args[i - 1 :])
    nested = strength_ti(i, i, args[: i - 1] + (u,))
    flat = lambda e: e[: i - 1] + e[i - 1]
    return tmap(Fun(flat, flat), nested)


def ti_via_head(n, i, args):
    """First interleave the head group, then the full product."""
    v = strength_ti(i, i, args[:i])
    nested = strength_ti(n - i + 1, 1, (v,) + args[i:])
    flat = lambda e: e[0] + e[1:]
    return tmap(Fun(flat, flat), nested)


def test_strength_ti_factorizations():
    pool = [seq(p) for k in range(3) for p in itertools.product("xy", repeat=k)]
    for n in (2, 3, 4):
        for i in range(1, n + 1):
            for x in pool:
                args = tuple("u%d" % k if k != i else x for k in range(1, n + 1))
                direct = strength_ti(n, i, args)
                assert direct == ti_via_pair(n, i, args)
                assert direct == ti_via_tail(n, i, args)
                assert direct == ti_via_head(n, i, args)


def test_strength_ti_mor():
    m = sym_mor(ALEV, seq(("x", "y")), SWAP)
    r = strength_ti_mor((ALEV, None, ALEV), 3, 2, ("f", m, "id_y"))
    assert r.perm == SWAP
    assert r.source == strength_ti(3, 2, ("x", m.source, "y"))
    assert r.target == strength_ti(3, 2, ("y", m.target, "y"))
    assert r.components == (("f", "id_y", "id_y"), ("f", "id_x", "id_y"))


# ---------------------------------------------------------------- monad laws


def nested_objs(depth, max_len=2):
    if depth == 0:
        yield from ("x", "y")
        return
    inner = list(nested_objs(depth - 1, max_len))
    for k in range(max_len + 1):
        for combo in itertools.product(inner, repeat=k):
            yield seq(combo)


def test_monad_unit_laws():
    for s in nested_objs(1):
        assert mu(tmap(Fun(eta, None), s)) == s
        assert mu(eta(s)) == s


def test_monad_associativity():
    count = 0
    for s in itertools.islice(nested_objs(3, max_len=2), 400):
        assert mu(mu(s)) == mu(tmap(Fun(mu, None), s))
        count += 1
    assert count > 50


def test_strength_eta_mu_compat():
    # t after (1 x eta) equals eta of the pair
    assert strength_t2("a", eta("b")) == eta(("a", "b"))
    for yy in itertools.islice(nested_objs(2), 100):
        # t after (1 x mu) equals mu after Tt after t
        lhs = strength_t2("a", mu(yy))
        rhs = mu(
            tmap(Fun(lambda e: strength_t2(e[0], e[1]), None), strength_t2("a", yy))
        )
        assert lhs == rhs


# ---------------------------------------------------------------- omega


def interleave_oracle(xs, row_major=True):
    n, m = len(xs[0].entries), len(xs[1].entries)
    if row_major:
        return seq(tuple((a, b) for a in xs[0].entries for b in xs[1].entries))
    return seq(tuple((a, b) for b in xs[1].entries for a in xs[0].entries))


def test_omega_objects():
    x, y = seq(("a1", "a2")), seq(("b1", "b2"))
    assert omega(x, y) == seq(
        (("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2"))
    )
    assert omega_prime(x, y) == seq(
        (("a1", "b1"), ("a2", "b1"), ("a1", "b2"), ("a2", "b2"))
    )
    assert omega(seq(()), y) == seq(())
    assert omega(x, seq(())) == seq(())


def omega_via_composite(x, y):
    inner = strength_t1(x, y)
    expand = Fun(lambda e: strength_t2(e[0], e[1]), None)
    return mu(tmap(expand, inner))


def omega_prime_via_composite(x, y):
    inner = strength_t2(x, y)
    expand = Fun(lambda e: strength_t1(e[0], e[1]), None)
    return mu(tmap(expand, inner))


def test_omega_equals_defining_composite():
    pool = [seq(p) for k in range(4) for p in itertools.product(("a", "b"), repeat=k)]
    for x in pool:
        for y in pool:
            assert omega(x, y) == omega_via_composite(x, y)
            assert omega(x, y) == interleave_oracle((x, y), True)
            assert omega_prime(x, y) == omega_prime_via_composite(x, y)
            assert omega_prime(x, y) == interleave_oracle((x, y), False)


def omega_mor_via_composite(p, q):
    flev = FreeLevel(ALEV)
    inner = strength_t1_mor(flev, p, q)
    expand = Fun(
        lambda e: strength_t2(e[0], e[1]),
        lambda em: strength_t2_mor(ALEV, em[0], em[1]),
    )
    return mu_mor(tmap(expand, inner))


@settings(max_examples=40)
@given(seq_mors(max_len=2), seq_mors(max_len=2))
def test_omega_mor_matches_composite(p, q):
    assert omega_mor(p, q) == omega_mor_via_composite(p, q)


# ---------------------------------------------------------------- gamma


def transpose_oracle(x, y):
    """Match uniquely labelled interleavings entry by entry."""
    src = omega(x, y).entries
    tgt = omega_prime(x, y).entries
    images = tuple(tgt.index(e) + 1 for e in src)
    return Perm(images)


def test_gamma_transpose_2x2():
    x, y = seq(("a1", "a2")), seq(("b1", "b2"))
    g = gamma_component(LLEV, LLEV, x, y)
    assert g.perm == Perm((1, 3, 2, 4))
    assert g.source == omega(x, y) and g.target == omega_prime(x, y)
    assert all(
        LABELS.is_identity(c[0]) and LABELS.is_identity(c[1]) for c in g.components
    )


def test_gamma_transpose_2x3():
    x, y = seq(("a1", "a2")), seq(("b1", "b2", "b3"))
    g = gamma_component(LLEV, LLEV, x, y)
    assert g.perm == Perm((1, 3, 5, 2, 4, 6))
    assert g.perm == transpose_oracle(x, y)


def test_gamma_label_matching_oracle():
    for n in range(4):
        for m in range(4):
            x = seq(tuple(f"a{i+1}" for i in range(n)))
            y = seq(tuple(f"b{j+1}" for j in range(m)))
            assert gamma_component(LLEV, LLEV, x, y).perm == transpose_oracle(x, y)


def test_gamma_identity_when_singleton():
    x1, y = seq(("a1",)), seq(("b1", "b2"))
    plev = ProdLevel((LLEV, LLEV))
    g = gamma_component(LLEV, LLEV, x1, y)
    assert g == identity_seq(plev, omega(x1, y))
    h = gamma_component(LLEV, LLEV, y, x1)
    assert h == identity_seq(plev, omega(y, x1))


def test_gamma_inverse():
    x, y = seq(("a1", "a2", "a3")), seq(("b1", "b2"))
    plev = ProdLevel((LLEV, LLEV))
    g = gamma_component(LLEV, LLEV, x, y)
    gi = gamma_inv_component(LLEV, LLEV, x, y)
    assert gi.perm == invert(g.perm)
    assert compose_seq(plev, gi, g) == identity_seq(plev, omega(x, y))
    assert compose_seq(plev, g, gi) == identity_seq(plev, omega_prime(x, y))


@settings(max_examples=40)
@given(seq_mors(max_len=2), seq_mors(max_len=2))
def test_gamma_natural(p, q):
    plev = ProdLevel((ALEV, ALEV))
    lhs = compose_seq(plev, gamma_component(ALEV, ALEV, p.target, q.target), omega_mor(p, q))
    rhs = compose_seq(plev, omega_prime_mor(p, q), gamma_component(ALEV, ALEV, p.source, q.source))
    assert lhs == rhs


def test_symmetry_axiom():
    x, y = seq(("a1", "a2")), seq(("b1", "b2", "b3"))
    plev = ProdLevel((LLEV, LLEV))
    g = gamma_component(LLEV, LLEV, x, y)
    h = gamma_component(LLEV, LLEV, y, x)
    swap_pair = lambda e: (e[1], e[0])
    h_relabelled = tmap(Fun(swap_pair, swap_pair), h)
    assert compose_seq(plev, h_relabelled, g) == identity_seq(plev, omega(x, y))


# ---------------------------------------------------------------- gamma_ij


def test_gamma_ij_binary_is_gamma():
    x, y = seq(("a1", "a2")), seq(("b1", "b2"))
    g = gamma_ij_component((LLEV, LLEV), 2, 1, 2, (x, y))
    assert g == gamma_component(LLEV, LLEV, x, y)


def test_gamma_ij_empty_slot():
    x, y = seq(()), seq(("b1",))
    g = gamma_ij_component((LLEV, LLEV, LLEV), 3, 1, 3, (x, "c1", y))
    assert g.source == g.target == seq(())


def test_gamma_ij_partition_independent():
    pool = {1: seq(("a1",)), 2: seq(("a1", "a2"))}
    for n in (2, 3, 4):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                for li in (1, 2):
                    for lj in (1, 2):
                        args = tuple(
                            pool[li] if k == i else pool[lj] if k == j else f"c{k}"
                            for k in range(1, n + 1)
                        )
                        levels = tuple(LLEV for _ in range(n))
                        results = {
                            gamma_ij_component(levels, n, i, j, args, K)
                            for K in partitions_for(n, i, j)
                        }
                        assert len(results) == 1, (n, i, j, li, lj)


def test_gamma_ij_has_both_orders_as_inverses():
    x, y = seq(("a1", "a2")), seq(("b1", "b2"))
    levels = (LLEV, LLEV, LLEV)
    args = (x, "c2", y)
    g = gamma_ij_component(levels, 3, 1, 3, args)
    h = gamma_ij_component(levels, 3, 3, 1, args)
    assert h.perm == invert(g.perm)
    assert h.source == g.target and h.target == g.source
    plev = ProdLevel(levels)
    assert compose_seq(plev, h, g) == identity_seq(plev, g.source)


def test_gamma_ij_two_partitions_n3_agree():
    x, y = seq(("a1", "a2")), seq(("b1", "b2"))
    levels = (LLEV, LLEV, LLEV)
    args = (x, "c2", y)
    k_wide = (0, 2, 3)
    k_tight = (0, 1, 3)
    a = gamma_ij_component(levels, 3, 1, 3, args, k_wide)
    b = gamma_ij_component(levels, 3, 1, 3, args, k_tight)
    assert a == b


# ---------------------------------------------------------------- omega_n


def omega_n_oracle(xs):
    return seq(tuple(itertools.product(*(x.entries for x in xs))))


def omega_n_left_recursion(xs):
    if not xs:
        return seq(((),))
    acc = seq(tuple((e,) for e in xs[0].entries))
    for x in xs[1:]:
        nested = omega(acc, x)
        flat = lambda e: e[0] + (e[1],)
        acc = tmap(Fun(flat, flat), nested)
    return acc


def omega_n_right_recursion(xs):
    if not xs:
        return seq(((),))
    if len(xs) == 1:
        return seq(tuple((e,) for e in xs[0].entries))
    rest = omega_n_right_recursion(xs[1:])
    nested = omega(xs[0], rest)
    flat = lambda e: (e[0],) + e[1]
    return tmap(Fun(flat, flat), nested)


def test_omega_n_small_cases():
    assert omega_n(()) == seq(((),))
    x = seq(("a1", "a2"))
    assert omega_n((x,)) == seq((("a1",), ("a2",)))
    xs = (seq(("a1", "a2")), seq(("b1",)), seq(("c1", "c2")))
    got = omega_n(xs)
    assert got == seq(
        (
            ("a1", "b1", "c1"),
            ("a1", "b1", "c2"),
            ("a2", "b1", "c1"),
            ("a2", "b1", "c2"),
        )
    )
    assert omega_n((x, seq(()))) == seq(())


def test_omega_n_matches_recursions():
    pool = [seq(p) for k in range(3) for p in itertools.product(("a", "b"), repeat=k)]
    for n in (2, 3, 4):
        for xs in itertools.islice(itertools.product(pool, repeat=n), 200):
            direct = omega_n(xs)
            assert direct == omega_n_oracle(xs)
            assert direct == omega_n_left_recursion(xs)
            assert direct == omega_n_right_recursion(xs)


def omega_n_mor_left(ms):
    wrap = Fun(lambda e: (e,), lambda c: (c,))
    acc = tmap(wrap, ms[0])
    for mm in ms[1:]:
        nested = omega_mor(acc, mm)
        flat = lambda e: e[0] + (e[1],)
        acc = tmap(Fun(flat, flat), nested)
    return acc


@settings(max_examples=30)
@given(seq_mors(max_len=2), seq_mors(max_len=2), seq_mors(max_len=2))
def test_omega_n_mor_consistent(p, q, r):
    m = omega_n_mor((p, q, r))
    assert m.source == omega_n((p.source, q.source, r.source))
    assert m.target == omega_n((p.target, q.target, r.target))
    assert m == omega_n_mor_left((p, q, r))
    expected = tuple(
        (a, b, c)
        for a in p.components
        for b in q.components
        for c in r.components
    )
    assert m.components == expected


# ---------------------------------------------------------------- omega_sigma


def test_omega_sigma_identity_is_omega_n():
    xs = (seq(("a1", "a2")), seq(("b1",)))
    assert omega_sigma(identity(2), xs) == omega_n(xs)


def test_omega_sigma_swap_is_prime():
    x, y = seq(("a1", "a2")), seq(("b1", "b2"))
    got = omega_sigma(SWAP, (x, y))
    assert got == omega_prime(x, y)


def omega_sigma_oracle(sigma, xs):
    """All tuples, ordered lexicographically by their sigma-permuted indices."""
    n = len(xs)
    grid = itertools.product(*(range(len(x.entries)) for x in xs))
    ordered = sorted(grid, key=lambda t: tuple(t[sigma(k) - 1] for k in range(1, n + 1)))
    return seq(tuple(tuple(xs[s].entries[t[s]] for s in range(n)) for t in ordered))


def test_omega_sigma_against_sort_oracle():
    xs = (seq(("a1", "a2")), seq(("b1",)), seq(("c1", "c2")))
    for sigma in all_perms(3):
        assert omega_sigma(sigma, xs) == omega_sigma_oracle(sigma, xs)


@settings(max_examples=20)
@given(seq_mors(max_len=2), seq_mors(max_len=2))
def test_omega_sigma_mor_endpoints(p, q):
    m = omega_sigma_mor(SWAP, (p, q))
    assert m.source == omega_sigma(SWAP, (p.source, q.source))
    assert m.target == omega_sigma(SWAP, (p.target, q.target))


# ---------------------------------------------------------------- mutations


def test_mutations_flip_and_restore():
    from shufflecat.mutations import MUTATIONS, inject

    x, y = seq(("a1", "a2")), seq(("b1", "b2"))
    clean = gamma_component(LLEV, LLEV, x, y)
    with inject("gamma-transpose-direction"):
        assert gamma_component(LLEV, LLEV, x, y).perm == invert(clean.perm)
    assert gamma_component(LLEV, LLEV, x, y) == clean
    with inject("strength-slot-index"):
        assert strength_ti(2, 1, (x, "c")).entries == (("c", "a1"), ("c", "a2"))
    assert strength_ti(2, 1, (x, "c")).entries == (("a1", "c"), ("a2", "c"))
    assert len(MUTATIONS) == 5
    with pytest.raises(KeyError):
        with inject("nonsense"):
            pass
