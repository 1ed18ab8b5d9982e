import random

import pytest

from quivergrass.ar import dynkin_catalog, projective
from quivergrass.errors import FieldMismatch, NotClosedUnderArrows, QuiverMismatch, ShapeMismatch
from quivergrass.linalg import GF, QQ, Matrix
from quivergrass.quiver import euler_form
from quivergrass.rep import (Representation, SubrepWitness, cokernel, direct_sum, dual,
                             ext1_dim, hom_basis, hom_dim, image, indecomposable_summands, is_brick,
                             is_isomorphic, is_rigid, kernel, quotient, rep_from_json, restrict,
                             ringel_phi, simple, sub, support_components)
from quivergrass.standard import by_name


def rand_rep(Q, F, rng, maxd=2):
    dims = [rng.randint(0, maxd) for _ in Q.vertices]
    mats = []
    for a in Q.arrows:
        s, t = dims[Q.index[a.source]], dims[Q.index[a.target]]
        mats.append([[rng.randint(-2, 2) for _ in range(s)] for _ in range(t)])
    return Representation.from_ints(Q, F, dims, mats)


def test_construction_checks(A2):
    with pytest.raises(ShapeMismatch):
        Representation.from_ints(A2, QQ, [1, 1], [[[1, 0]]])
    M = Representation.from_ints(A2, GF(3), [1, 1], [[[4]]])
    assert M.mats[0].data == ((1,),)


def test_phi_examples(A2):
    S1, S2, P1 = simple(A2, 1), simple(A2, 2), projective(A2, 1)
    phi = ringel_phi(S1, S1)
    assert phi.cols == 1 and phi.rows == 0 and hom_dim(S1, S1) == 1
    phi = ringel_phi(P1, S2)
    assert phi.rank() == 1 and hom_dim(P1, S2) == 0
    phi = ringel_phi(S1, S2)
    assert phi.cols == 0 and phi.rows == 1 and ext1_dim(S1, S2) == 1


def test_hom_ext_examples(A2):
    S1, S2 = simple(A2, 1), simple(A2, 2)
    P1, P2 = projective(A2, 1), projective(A2, 2)
    assert hom_dim(P1, P1) == 1 and hom_dim(P1, S2) == 0 and hom_dim(P2, P1) == 1
    assert ext1_dim(S1, S2) == 1 and ext1_dim(S2, S1) == 0 and ext1_dim(P1, P1) == 0


def test_mismatch_errors(A2, K2):
    with pytest.raises(QuiverMismatch):
        hom_dim(simple(A2, 1), simple(K2, 1))
    with pytest.raises(FieldMismatch):
        hom_dim(simple(A2, 1, GF(2)), simple(A2, 1, GF(3)))


@pytest.mark.parametrize("name", ["A3", "D4", "K2", "A~2"])
@pytest.mark.parametrize("F", [QQ, GF(2), GF(3)], ids=str)
def test_euler_identity_random_pairs(name, F):
    Q = by_name(name)
    rng = random.Random(hash((name, str(F))) & 0xffff)
    for _ in range(50):
        M, N = rand_rep(Q, F, rng), rand_rep(Q, F, rng)
        assert hom_dim(M, N) - ext1_dim(M, N) == euler_form(Q, M.dims, N.dims)


def test_hom_basis_is_functorial():
    rng = random.Random(5)
    Q = by_name("D4")
    for _ in range(20):
        M, N = rand_rep(Q, GF(3), rng), rand_rep(Q, GF(3), rng)
        for f in hom_basis(M, N):
            assert f.is_valid()


def test_additivity():
    rng = random.Random(7)
    Q = by_name("A3")
    for _ in range(15):
        A, B, C = (rand_rep(Q, GF(2), rng) for _ in range(3))
        S = direct_sum(A, B)
        assert hom_dim(S, C) == hom_dim(A, C) + hom_dim(B, C)
        assert ext1_dim(S, C) == ext1_dim(A, C) + ext1_dim(B, C)
        assert hom_dim(C, S) == hom_dim(C, A) + hom_dim(C, B)


def test_sum_sub_quotient(A2):
    S1, S2, P1 = simple(A2, 1), simple(A2, 2), projective(A2, 1)
    D = direct_sum(S1, S2)
    assert D.dims == (1, 1) and D.mats[0].is_zero()
    W = SubrepWitness(P1, [[], [(1,)]])
    U, inc = sub(P1, W)
    assert is_isomorphic(U, S2) and inc.is_mono() and inc.is_valid()
    Qm, pr = quotient(P1, W)
    assert is_isomorphic(Qm, S1) and pr.is_epi() and pr.is_valid()
    C, pr2 = cokernel(inc)
    assert is_isomorphic(C, S1)
    with pytest.raises(NotClosedUnderArrows):
        SubrepWitness(P1, [[(1,)], []])


def test_kernel_image_bookkeeping():
    rng = random.Random(3)
    Q = by_name("A3")
    for _ in range(20):
        M, N = rand_rep(Q, GF(3), rng), rand_rep(Q, GF(3), rng)
        for f in hom_basis(M, N):
            K, _ = kernel(f)
            I, _ = image(f)
            assert [k + i for k, i in zip(K.dims, I.dims)] == list(M.dims)


def test_rigid_brick_examples(A2, K2):
    P1 = projective(A2, 1)
    assert is_rigid(P1) and is_brick(P1)
    D = direct_sum(simple(A2, 1), simple(A2, 2))
    assert not is_rigid(D) and not is_brick(D)
    R = Representation.from_ints(K2, QQ, [1, 1], [[[1]], [[1]]])
    assert is_brick(R) and not is_rigid(R) and ext1_dim(R, R) == 1


def test_isomorphism_examples(A2, K2):
    P1 = projective(A2, 1)
    assert is_isomorphic(P1, P1)
    assert not is_isomorphic(simple(A2, 1), simple(A2, 2))
    for p in (2, 3, 5):
        a = Representation.from_ints(K2, GF(p), [1, 1], [[[1]], [[0]]])
        b = Representation.from_ints(K2, GF(p), [1, 1], [[[0]], [[1]]])
        assert not is_isomorphic(a, b)
    # a base change is detected
    F = GF(5)
    M = Representation.from_ints(K2, F, [1, 2], [[[1], [2]], [[0], [1]]])
    g = Matrix(F, 2, 2, [[1, 1], [2, 3]])
    N = Representation(K2, F, [1, 2], [g @ m for m in M.mats])
    assert is_isomorphic(M, N)


def test_dual_and_json(K2):
    M = projective(K2, 1, GF(3))
    D = dual(M)
    assert D.dims == M.dims and dual(D) == M
    assert rep_from_json(M.dumps()) == M


def test_summands_and_support():
    Q = by_name("A3")
    cat = [c.module for c in dynkin_catalog(Q, GF(2))]
    D = direct_sum(cat[0], cat[1], cat[2])
    D.summands = None
    parts = indecomposable_summands(D)
    assert sorted(p.dims for p in parts) == sorted(c.dims for c in cat[:3])
    S = direct_sum(simple(Q, 1, GF(2)), simple(Q, 3, GF(2)))
    assert support_components(S) == [[1], [3]]
    R = restrict(S, [1])
    assert R.dims == (1,)


def test_happel_ringel_dichotomy():
    for name in ("A3", "D4", "D4*"):
        Q = by_name(name)
        cat = [c.module for c in dynkin_catalog(Q, GF(3))]
        rng = random.Random(0)
        for X in cat:
            for Y in cat:
                if ext1_dim(Y, X):
                    continue
                H = hom_basis(X, Y)
                combos = list(H) + [sum((h.scale(rng.randint(0, 2)) for h in H[1:]), H[0])
                                    for _ in range(3)] if H else []
                for f in combos:
                    if not f.is_zero():
                        assert f.is_mono() or f.is_epi()
