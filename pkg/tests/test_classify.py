import random

import pytest

from superrep.algebra import CliffordSignature, ShiftedContext, trivial_algebra
from superrep.classify import (NotRealIrreducible, classify_irreducible, clifford_irreducibles,
                               commutant_certifies, composition_factors, q1_context, q1_graded, q1_ungraded,
                               random_module, shift_irreducibles)
from superrep.exactnum import ExactMatrix, FieldTag
from superrep.kring import q1_provider
from superrep.supermodule import (SuperModule, delta, direct_sum, isomorphic, is_valid, morita_reduce,
                                  parity_reverse, tensor_modules, trivial_module)

C, R = FieldTag.COMPLEX, FieldTag.REAL


def _dims(mods):
    return sorted((m.dim_even, m.dim_odd) if m.graded else (m.dim, 0) for m in mods)


def test_composition_of_semisimple_sum():
    ctx = q1_context(C)
    i, pi = trivial_module(ctx), trivial_module(ctx, odd=True)
    rep = composition_factors(direct_sum(i, pi))
    assert _dims(rep.factors) == [(0, 1), (1, 0)] and all(rep.certified)


def test_delta_c2_is_l4():
    rep = composition_factors(delta(q1_ungraded(2)))
    assert len(rep.factors) == 1 and isomorphic(rep.factors[0], q1_graded(4))


def test_clifford_one_is_irreducible():
    for s in clifford_irreducibles(1, 0, C, True):
        rep = composition_factors(s)
        assert rep.multiplicities == [1] and rep.certified == [True]


def test_non_semisimple_product_splits():
    # L4+ (x) L-4+ has H = 0 and Q nonzero with Q^2 = 0: indecomposable but not simple
    g1 = q1_provider().graded(1).modules
    plus4 = next(m for m in g1 if m.name == "L[4]+")
    plus_m4 = next(m for m in g1 if m.name == "L[-4]+")
    m = tensor_modules(plus4, plus_m4)
    assert not commutant_certifies(m)
    rep = composition_factors(m)
    assert rep.total_dim() == m.dim and len(rep.factors) == 2 and all(rep.certified)


def test_tags():
    ctx = q1_context(C)
    assert classify_irreducible(trivial_module(ctx)).type == "M"
    t = classify_irreducible(q1_graded(4))
    assert t.type == "Q" and t.involution == "yes" and t.self_dual
    (v,) = clifford_irreducibles(1, 0, R, True)
    t = classify_irreducible(v)
    assert t.self_dual and t.involution == "no"


def test_split_real_commutant_rejected():
    ctx = ShiftedContext(trivial_algebra(R), CliffordSignature(0, 1))
    m = SuperModule(ctx, 2, 0, (), [ExactMatrix([[0, 1], [1, 0]], R)], False)
    with pytest.raises(NotRealIrreducible):
        classify_irreducible(m)


def test_ungraded_clifford_examples():
    (e_mod,) = clifford_irreducibles(1, 0, R, False)
    assert e_mod.dim == 2
    ref = SuperModule(e_mod.context, 2, 0, (), [ExactMatrix([[0, -1], [1, 0]], R)], False)
    assert isomorphic(e_mod, ref)
    signs = sorted(m.cliff_action[0].data[0][0] for m in clifford_irreducibles(0, 1, R, False))
    assert signs == [-1, 1]
    assert _dims(clifford_irreducibles(8, 0, R, False)) == [(16, 0)]


def test_real_graded_dimension_pattern():
    want = {0: [(0, 1), (1, 0)], 1: [(1, 1)], 2: [(2, 2)], 3: [(4, 4)], 4: [(4, 4), (4, 4)], 5: [(8, 8)],
            6: [(8, 8)], 7: [(8, 8)], 8: [(8, 8), (8, 8)]}
    for n, dims in want.items():
        assert _dims(clifford_irreducibles(n, 0, R, True)) == dims, n


def test_complex_counts_alternate():
    for n in range(6):
        assert len(clifford_irreducibles(n, 0, C, True)) == (2 if n % 2 == 0 else 1)


def test_shift_of_trivial_algebra():
    ctx = ShiftedContext(trivial_algebra(C))
    (s,) = shift_irreducibles([trivial_module(ctx), trivial_module(ctx, odd=True)])
    assert (s.dim_even, s.dim_odd) == (1, 1) and s.signature == CliffordSignature(1, 0)
    twice = shift_irreducibles([s])
    back = morita_reduce(twice[0])
    assert back.signature == CliffordSignature() and back.dim == 1


def test_shift_of_l4_gives_pi_partners():
    shifted = shift_irreducibles([q1_graded(4)])
    plus, minus = shifted
    assert not isomorphic(plus, minus) and isomorphic(plus, parity_reverse(minus))


def test_random_modules_validate():
    rng = random.Random(1)
    mods = q1_provider().graded(0).modules
    for _ in range(5):
        m = random_module(mods[0].context, mods, rng, 6)
        assert is_valid(m) and m.dim <= 6
