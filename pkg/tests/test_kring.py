import pytest

from superrep.algebra import ShiftedContext, trivial_algebra
from superrep.classify import q1_graded, q1_ungraded
from superrep.exactnum import FieldTag, IntegerMatrix, LatticeRelation, lattice_compare
from superrep.kring import (IrreducibleRegistry, build_sequence, build_six_real, check_exactness, class_of,
                            connecting_maps, corrupt_arrow, delta_map, eigenlattice, pi_matrix, point_provider,
                            q1_provider, quotient_group, r_minus, r_plus, restrict_map, sr_group)
from superrep.supermodule import delta, direct_sum, trivial_module, zero_module

C, R = FieldTag.COMPLEX, FieldTag.REAL


def _lattice(*cols):
    return IntegerMatrix.from_columns([list(c) for c in cols], len(cols[0]))


@pytest.fixture(scope="module")
def q1():
    return q1_provider()


def test_class_of_examples(q1):
    ctx = ShiftedContext(trivial_algebra(C))
    i, pi = trivial_module(ctx), trivial_module(ctx, odd=True)
    reg = IrreducibleRegistry(ctx, True, [i, pi])
    assert class_of(direct_sum(i, pi), reg).padded() == [1, 1]
    assert class_of(zero_module(ctx), reg).padded() == [0, 0]
    reg0 = q1.graded(0)
    want = [0] * len(reg0)
    want[reg0.names().index("L[4]")] = 1
    assert class_of(delta(q1_ungraded(2)), reg0).padded() == want


def test_pi_swap_on_point():
    assert pi_matrix(point_provider(C), 0).tolist() == [[0, 1], [1, 0]]


def test_registry_pi_partner_is_an_involution(q1):
    for n in (0, 1):
        p = q1.graded(n).pi_partner()
        assert all(p[p[k]] == k for k in range(len(p)))


def test_delta_on_q1(q1):
    dm = delta_map(q1, 0).matrix
    names_u, names_g = q1.ungraded(0).names(), q1.graded(0).names()
    cols = dict(zip(names_u, dm.columns()))
    assert cols["C[0]"] == [1 if n in ("I", "Pi") else 0 for n in names_g]
    assert cols["C[2]"] == cols["C[-2]"] == [1 if n == "L[4]" else 0 for n in names_g]


def test_restriction_from_degree_one(q1):
    m = restrict_map(q1, 0).matrix
    src, dst = q1.graded(1).names(), q1.graded(0).names()
    cols = dict(zip(src, m.columns()))
    assert cols["I+Pi"] == [1 if n in ("I", "Pi") else 0 for n in dst]
    assert cols["L[4]+"] == cols["L[4]-"] == [1 if n == "L[4]" else 0 for n in dst]


def test_eigenlattices(q1):
    p = point_provider(C)
    assert lattice_compare(r_plus(p, 0), _lattice((1, 1))) is LatticeRelation.EQUAL
    assert lattice_compare(r_minus(p, 0), _lattice((1, -1))) is LatticeRelation.EQUAL
    names = q1.graded(0).names()
    gens = [[1 if n in ("I", "Pi") else 0 for n in names]] + [[int(n == m) for n in names] for m in ("L[4]", "L[-4]")]
    assert lattice_compare(r_plus(q1, 0), _lattice(*gens)) is LatticeRelation.EQUAL
    ident = IntegerMatrix.identity(3)
    assert lattice_compare(eigenlattice(ident, 1), ident) is LatticeRelation.EQUAL
    assert eigenlattice(ident, -1).cols == 0


def test_quotients(q1):
    sr0 = sr_group(q1, 0)
    assert (sr0.free_rank, sr0.torsion) == (1, ())
    assert sr_group(point_provider(R), 1).torsion == (2,)
    free = quotient_group("free", 3, IntegerMatrix.zeros(3, 0))
    assert free.text() == "Z ⊕ Z ⊕ Z"
    with pytest.raises(ValueError):
        sr0.contains_relation([1])


def test_connecting_map_is_one_minus_pi(q1):
    d = connecting_maps(point_provider(C), 0)["delta"]
    assert d.apply([1, 0]) == [1, -1] and d.apply([0, 0]) == [0, 0]
    names = q1.graded(0).names()
    d = connecting_maps(q1, 0)["delta"]
    image = d.apply([int(n == "I") for n in names])
    assert image == [1 if n == "I" else -1 if n == "Pi" else 0 for n in names]


def test_six_complex_point():
    seq = build_sequence(point_provider(C), "six_complex")
    verdicts = check_exactness(seq)
    assert all(v.exact for v in verdicts)
    assert [n.group.text() for n in seq.nodes] == ["Z", "0", "Z", "Z", "Z", "Z ⊕ Z"]


def test_six_real_sequences_exact():
    prov = point_provider(R)
    for n in (0, 1, 2):
        assert all(v.exact for v in check_exactness(build_six_real(prov, n)))


@pytest.mark.parametrize("k", [2, 3, 4, 5])  # arrows out of nonzero groups
def test_corruption_is_localized(k):
    seq = build_sequence(point_provider(C), "six_complex")
    bad = corrupt_arrow(seq, k)
    failing = {i for i, v in enumerate(check_exactness(bad)) if not v.exact}
    assert failing and failing <= {k, (k + 1) % len(seq)}


def test_periodicity():
    real, cx = point_provider(R), point_provider(C)
    for n in (0, 1):
        assert sr_group(real, n).text() == sr_group(real, n + 8).text()
        assert sr_group(cx, n).text() == sr_group(cx, n + 2).text()
    assert sr_group(q1_provider(), 0).text() == sr_group(q1_provider(), 2).text()


def test_group_element_arithmetic(q1):
    reg = q1.graded(0)
    a = class_of(q1_graded(4), reg)
    assert (a - a).padded() == [0] * len(reg)
    assert (a + a).padded() == [2 * x for x in a.padded()]
