import random

import pytest

from superrep.algebra import CliffordSignature, RelationError, ShiftedContext, trivial_algebra
from superrep.classify import clifford_irreducibles, composition_factors, q1_context, q1_graded, q1_ungraded
from superrep.exactnum import ExactMatrix, FieldTag
from superrep.kring import q1_provider
from superrep.superspace import EVEN, ODD
from superrep.supermodule import (SuperModule, boxtimes, conjugate, degrade, delta, diag_lift, direct_sum,
                                  forget_grading, hom_space, involution_exists, isomorphic, iso_test,
                                  morita_embed, morita_reduce, parity_reverse, project_even,
                                  random_graded_basis_change, regrade, restrict_generator, tensor_modules,
                                  trivial_module, validate_module)

C, R = FieldTag.COMPLEX, FieldTag.REAL


@pytest.fixture(scope="module")
def q1():
    ctx = q1_context(C)
    return {"ctx": ctx, "I": trivial_module(ctx), "Pi": trivial_module(ctx, odd=True), "L4": q1_graded(4),
            "L9": q1_graded(9), "C0": q1_ungraded(0), "C2": q1_ungraded(2), "C-2": q1_ungraded(-2)}


def test_validation(q1):
    validate_module(q1["L4"])
    validate_module(q1["I"])
    bad = SuperModule(q1["ctx"], 1, 1, [ExactMatrix([[4, 0], [0, 4]], C), ExactMatrix([[0, 2], [3, 0]], C)], (),
                      True, "bad")
    with pytest.raises(RelationError, match=r"\[Q,Q\]"):
        validate_module(bad)


def test_parity_reversal(q1):
    pi_i = parity_reverse(q1["I"])
    assert (pi_i.dim_even, pi_i.dim_odd) == (0, 1) and pi_i.g_action == q1["Pi"].g_action
    assert parity_reverse(parity_reverse(q1["L4"])) == q1["L4"]
    assert isomorphic(q1["L4"], parity_reverse(q1["L4"]))


def test_conjugation(q1):
    assert isomorphic(conjugate(q1["C2"]), q1["C-2"])
    assert isomorphic(q1["L4"], conjugate(q1["L4"]))
    assert conjugate(q1["I"]) == q1["I"]


def test_diagonal_functor(q1):
    assert isomorphic(delta(q1["C2"]), q1["L4"])
    assert isomorphic(delta(q1["C0"]), direct_sum(q1["I"], q1["Pi"]))
    new_e = diag_lift(q1["C2"]).cliff_action[0]
    assert new_e @ new_e == ExactMatrix.identity(2, C).scale(-1)


def test_project_even_inverts_lift(q1):
    for u in (q1["C0"], q1["C2"], *clifford_irreducibles(1, 1, R, False)):
        back = project_even(diag_lift(u))
        assert back.g_action == u.g_action and back.cliff_action == u.cliff_action
    for v in q1_provider().graded(1).modules:
        assert isomorphic(diag_lift(project_even(v)), v)


def test_project_even_of_shifted_l4(q1):
    plus, minus = [m for m in q1_provider().graded(1).modules if m.name.startswith("L[4]")]
    images = {project_even(plus).g_action[1].data[0][0], project_even(minus).g_action[1].data[0][0]}
    assert images == {C.coerce(2), C.coerce(-2)}


def test_degrade_and_regrade():
    k = trivial_module(ShiftedContext(trivial_algebra(R)))
    d = degrade(k)
    assert d.signature == CliffordSignature(0, 1) and d.cliff_action[0] == ExactMatrix([[1]], R)
    u = SuperModule(ShiftedContext(trivial_algebra(R), CliffordSignature(0, 1)), 2, 0, (),
                    [ExactMatrix([[1, 0], [0, -1]], R)], False)
    g = regrade(u)
    assert g.graded and (g.dim_even, g.dim_odd) == (1, 1) and g.signature == CliffordSignature()


def test_forget_l4_decomposes(q1):
    assert len(composition_factors(degrade(q1["L4"])).factors) == 1
    plain = composition_factors(forget_grading(q1["L4"]))
    names = {f.g_action[1].data[0][0] for f in plain.factors}
    assert names == {C.coerce(2), C.coerce(-2)}


def test_restriction(q1):
    assert restrict_generator(diag_lift(q1["C2"])) == delta(q1["C2"])
    s = q1_provider().graded(1).modules[1]
    assert restrict_generator(s).g_action == s.g_action


def test_tensor_identities(q1):
    v, w = q1["L4"], direct_sum(q1["I"], q1["L9"])
    assert isomorphic(tensor_modules(q1["I"], v), v)
    lhs = parity_reverse(tensor_modules(v, w))
    assert isomorphic(lhs, tensor_modules(parity_reverse(v), w))
    assert isomorphic(lhs, tensor_modules(v, parity_reverse(w)))


def test_tensor_eigenvalues_add(q1):
    rep = composition_factors(tensor_modules(q1["L4"], q1["L9"]))
    for f in rep.factors:
        assert f.g_action[0] == ExactMatrix.identity(f.dim, C).scale(13)


def test_boxtimes(q1):
    b = boxtimes(q1["C2"], q1["C-2"])
    assert (b.dim_even, b.dim_odd) == (1, 1)
    assert isomorphic(b, parity_reverse(boxtimes(q1["C-2"], q1["C2"])))
    assert isomorphic(boxtimes(q1["C0"], q1["C0"]), delta(q1["C0"]))


def test_hom_spaces(q1):
    assert hom_space(q1["I"], q1["Pi"], EVEN).dim == 0
    assert hom_space(q1["L4"], q1["L4"], EVEN).dim == 1
    assert hom_space(q1["L4"], q1["L4"], ODD).dim == 1
    (e_mod,) = clifford_irreducibles(1, 0, R, False)
    assert hom_space(e_mod, e_mod, EVEN).dim == 2


def test_iso_test(q1):
    assert iso_test(q1["L4"], q1["L4"]).verdict == "isomorphic"
    assert iso_test(q1["I"], q1["Pi"]).verdict == "not_isomorphic" or not iso_test(q1["I"], q1["Pi"])
    plus, minus = [m for m in q1_provider().graded(1).modules if m.name.startswith("L[4]")]
    assert not isomorphic(plus, minus)
    assert isomorphic(plus, parity_reverse(minus))


def test_iso_test_survives_basis_change(q1):
    rng = random.Random(3)
    m = direct_sum(q1["L4"], q1["I"], q1["L9"])
    assert isomorphic(m, random_graded_basis_change(m, rng))


def test_involutions(q1):
    (v,) = clifford_irreducibles(1, 0, R, True)
    assert involution_exists(v).verdict == "no"
    assert involution_exists(direct_sum(v, parity_reverse(v))).verdict == "yes"
    assert involution_exists(q1["L4"]).verdict == "yes"


def test_morita_round_trip():
    s = clifford_irreducibles(2, 0, C, True)[0]
    regular = direct_sum(s, parity_reverse(s))
    red = morita_reduce(regular)
    assert red.signature == CliffordSignature() and (red.dim_even, red.dim_odd) == (1, 1)
    assert isomorphic(morita_embed(red), regular)
    (u,) = clifford_irreducibles(1, 1, R, False)
    red_u = morita_reduce(direct_sum(u, u))
    assert red_u.dim == 2 and red_u.signature == CliffordSignature()
