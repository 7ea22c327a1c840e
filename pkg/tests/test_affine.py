import random

import pytest

from hsw.affine import (affine_identity, coset_decompose, min_rep, omega_elements,
                        parse_weight, parse_word, reduced_word, simple_reflections,
                        translation, word_elt)


def test_translation_lengths(a1, a2):
    # l(t_lam) = sum over positive coroots of |<lam, a-check>|
    assert translation(a1, (1,)).length == 1
    assert translation(a1, (-1,)).length == 1
    assert translation(a1, (2,)).length == 2
    assert translation(a2, (1, 0)).length == 2
    assert translation(a2, (1, 1)).length == 4
    assert translation(a2, (-1, 2)).length == 4


def test_omega_elements(a1, a2, b2, g2):
    for datum, n in ((a1, 2), (a2, 3), (b2, 2), (g2, 1)):
        oms = omega_elements(datum)
        assert len(oms) == n
        assert all(x.length == 0 for x in oms)
        # closed under the group operations
        for x in oms:
            assert x.inverse() in oms
            for y in oms:
                assert (x * y).length == 0


def test_group_laws_random(a2):
    rng = random.Random(5150)
    simples = simple_reflections(a2)
    e = affine_identity(a2)

    def rand_elt():
        x = rng.choice(omega_elements(a2))
        for _ in range(rng.randrange(5)):
            x = x * rng.choice(simples).elt
        return x

    for _ in range(150):
        x, y, z = rand_elt(), rand_elt(), rand_elt()
        assert (x * y) * z == x * (y * z)
        assert x * x.inverse() == e
        assert x.inverse().length == x.length
        assert (x * y).length <= x.length + y.length


def test_simple_reflections_shape(a2, b2):
    for datum in (a2, b2):
        simples = simple_reflections(datum)
        finite = [s for s in simples if s.kind == "finite"]
        affine = [s for s in simples if s.kind == "affine"]
        assert [s.label for s in finite] == ["s1", "s2"]
        assert [s.label for s in affine] == ["s0"]
        assert all(s.elt.length == 1 for s in simples)
        for s in simples:
            assert (s.elt * s.elt).is_identity()


def test_multi_component_affine_labels():
    from hsw import datum_preset
    d = datum_preset("A1xA1")
    labels = [s.label for s in simple_reflections(d)]
    assert labels == ["s1", "s2", "s0:1", "s0:2"]


def test_reduced_word_reassembles(a2):
    rng = random.Random(99)
    simples = simple_reflections(a2)
    for _ in range(80):
        x = rng.choice(omega_elements(a2))
        for _ in range(rng.randrange(6)):
            x = x * rng.choice(simples).elt
        omega, word = reduced_word(x)
        assert omega.length == 0
        assert len(word) == x.length
        acc = omega
        for s in word:
            acc = acc * s.elt
        assert acc == x


def test_min_rep_is_minimum(a2):
    """brute force the coset over the finite group"""
    for lam in [(0, 0), (1, 0), (-1, 2), (2, 2), (-3, 1)]:
        m = min_rep(a2, lam)
        lengths = []
        for w in a2.weyl_elements():
            elt = translation(a2, lam)
            acc = affine_identity(a2)
            for i in w.reduced_word():
                acc = acc * simple_reflections(a2)[i].elt
            lengths.append((acc * elt).length)
        assert m.length == min(lengths)
        assert m.lam == lam


def test_coset_decompose(a2):
    rng = random.Random(3)
    simples = simple_reflections(a2)
    for _ in range(40):
        x = rng.choice(omega_elements(a2))
        for _ in range(rng.randrange(5)):
            x = x * rng.choice(simples).elt
        u, lam = coset_decompose(x)
        m = min_rep(a2, lam)
        assert u.length + m.length == x.length
        assert lam == x.lam


def test_parse_weight():
    assert parse_weight("1,-2", 2) == (1, -2)
    assert parse_weight(" 3 ", 1) == (3,)
    with pytest.raises(ValueError):
        parse_weight("1,2", 1)
    with pytest.raises(ValueError):
        parse_weight("x", 1)


def test_parse_word(a1, a2):
    word = parse_word(a1, "s,s0")
    assert [s.label for s in word] == ["s1", "s0"]
    word = parse_word(a2, "s1,s2,s0")
    assert [s.label for s in word] == ["s1", "s2", "s0"]
    with pytest.raises(ValueError):
        parse_word(a2, "s")  # ambiguous outside rank one
    with pytest.raises(ValueError):
        parse_word(a2, "s9")


def test_word_elt_lengths(a1):
    simples = {s.label: s for s in simple_reflections(a1)}
    x = word_elt(a1, (simples["s0"], simples["s1"]))
    assert x.length == 2
    assert x.lam != (0,) * a1.rank  # s0 moves the translation part
