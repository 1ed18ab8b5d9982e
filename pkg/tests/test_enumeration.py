import itertools

import pytest

from quivergrass.ar import projective
from quivergrass.enumeration import all_subreps, count_subreps, iter_subreps
from quivergrass.errors import BudgetExceeded, PreconditionFailed
from quivergrass.linalg import GF, QQ
from quivergrass.quiver import validate_quiver
from quivergrass.rep import Representation, SubrepWitness
from quivergrass.standard import by_name


def point_quiver():
    return validate_quiver({"vertices": [1], "arrows": []})


def gauss(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def test_single_vertex_counts():
    Q = point_quiver()
    for p in (2, 3, 5):
        for d in range(6):
            M = Representation.from_ints(Q, GF(p), [d], [])
            for e in range(d + 1):
                assert count_subreps(M, [e]) == gauss(d, e, p)


def test_examples(A2, K2):
    for p in (2, 3, 5):
        assert count_subreps(projective(A2, 1, GF(p)), (1, 0)) == 0
    assert count_subreps(projective(K2, 1, GF(3)), (0, 1)) == 4
    M = Representation.from_ints(point_quiver(), GF(2), [3], [])
    assert count_subreps(M, [1]) == 7


def test_iter_yields_closed_distinct_subreps():
    Q = by_name("D4*")
    M = Representation.from_ints(Q, GF(2), [2, 1, 1, 1], [[[1], [0]], [[0], [1]], [[1], [1]]])
    for e in itertools.product(*(range(d + 1) for d in M.dims)):
        subs = list(iter_subreps(M, e))
        assert len(subs) == count_subreps(M, e)
        assert len(set(subs)) == len(subs)
        for bases in subs:
            W = SubrepWitness(M, [list(b) for b in bases])
            assert W.dims == e


def test_out_of_range_and_errors(A2):
    M = projective(A2, 1, GF(2))
    assert count_subreps(M, (2, 0)) == 0
    with pytest.raises(PreconditionFailed):
        count_subreps(projective(A2, 1, QQ), (1, 1))
    big = Representation.from_ints(point_quiver(), GF(5), [8], [])
    with pytest.raises(BudgetExceeded):
        list(iter_subreps(big, [4], budget=1000))


def test_parallel_matches_serial(K2):
    M = Representation.from_ints(K2, GF(5), [5, 5], [[[int(i == j) for j in range(5)] for i in range(5)],
                                                     [[int(j == i + 1) for j in range(5)] for i in range(5)]])
    e = (2, 2)
    assert count_subreps(M, e, workers=3) == count_subreps(M, e)


def test_all_subreps_lattice(A2):
    subs = all_subreps(projective(A2, 1, GF(2)))
    assert sum(len(v) for v in subs.values()) == 3
