from superrep.exactnum import ExactMatrix, FieldTag
from superrep.superspace import (EVEN, ODD, GradedMap, SuperSpace, koszul_sign, map_tensor,
                                 parity_reverse_space, tensor_space)

R = FieldTag.REAL


def test_koszul_sign():
    assert koszul_sign(ODD, ODD) == -1
    assert koszul_sign(EVEN, ODD) == 1
    assert koszul_sign(EVEN, EVEN) == 1


def test_tensor_dimensions():
    assert tensor_space(SuperSpace(1, 0), SuperSpace(1, 0))[0] == SuperSpace(1, 0)
    assert tensor_space(SuperSpace(1, 1), SuperSpace(1, 1))[0] == SuperSpace(2, 2)
    assert tensor_space(SuperSpace(0, 1), SuperSpace(0, 1))[0] == SuperSpace(1, 0)


def test_map_tensor_identity_and_grading():
    v, w = SuperSpace(1, 1), SuperSpace(2, 1)
    ident = map_tensor(GradedMap.identity(v), GradedMap.identity(w))
    assert ident.matrix == ExactMatrix.identity(v.dim * w.dim, R)
    grading = map_tensor(GradedMap.grading(v), GradedMap.grading(w))
    assert grading.matrix == tensor_space(v, w)[0].grading_operator()


def test_map_tensor_koszul_sign_on_odd_vectors():
    odd = SuperSpace(0, 1)
    f = GradedMap(odd, SuperSpace(1, 0), ExactMatrix([[1]], R), ODD)
    g = GradedMap(odd, SuperSpace(1, 0), ExactMatrix([[1]], R), ODD)
    assert map_tensor(f, g).matrix == ExactMatrix([[-1]], R)


def test_parity_reverse_space():
    rev, perm = parity_reverse_space(SuperSpace(2, 1))
    assert rev == SuperSpace(1, 2) and perm == [2, 0, 1]
    twice, _ = parity_reverse_space(rev)
    assert twice == SuperSpace(2, 1)
    assert parity_reverse_space(SuperSpace(0, 0))[0] == SuperSpace(0, 0)
