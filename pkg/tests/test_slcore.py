import itertools
from fractions import Fraction

import pytest

from thetagraded.linalg import Matrix
from thetagraded.slcore import (
    ThetaSet,
    Weight,
    bracket,
    canonical_theta_classes,
    circ,
    diamond,
    eps,
    matrix_unit,
    root_system,
    simple_roots,
    sl_basis,
    sl_coords,
    sl_dim,
    sl_from_coords,
    sl_structure_constants,
    theta_label_weight,
    trace_form,
)


def test_defining_sl2_relation():
    e12 = matrix_unit(3, 1, 2)
    e21 = matrix_unit(3, 2, 1)
    h1 = matrix_unit(3, 1, 1) - matrix_unit(3, 2, 2)
    assert bracket(e12, e21) == h1
    assert bracket(h1, e12) == e12.scale(2)


def test_bracket_alternating():
    for _, x in sl_basis(3):
        assert bracket(x, x).is_zero()


def test_diamond_example():
    e12 = matrix_unit(4, 1, 2)
    e21 = matrix_unit(4, 2, 1)
    assert diamond(e12, e21) == matrix_unit(4, 1, 1) + matrix_unit(4, 2, 2)


def test_trace_form_h1():
    h1 = matrix_unit(3, 1, 1) - matrix_unit(3, 2, 2)
    assert trace_form(h1, h1, 3) == Fraction(2, 3)


@pytest.mark.parametrize("n", [3, 4])
def test_circ_traceless_and_relation(n):
    basis = sl_basis(n)
    for (_, x), (_, y) in itertools.product(basis[:5], basis[:5]):
        c = circ(x, y, n)
        assert c.trace() == 0
        expected = diamond(x, y) - Matrix.identity(n).scale(2 * trace_form(x, y, n))
        assert c == expected


@pytest.mark.parametrize("n,count", [(3, 6), (4, 12)])
def test_root_system_counts(n, count):
    roots = root_system(n)
    assert len(roots) == count
    assert sum(1 for _, s in roots if s) == n - 1


def test_root_evaluation_n4():
    alpha = eps(4, 1) - eps(4, 2)
    assert alpha.h_values() == (2, -1, 0)


@pytest.mark.parametrize("n", [3, 4])
def test_jacobi_on_basis(n):
    basis = [m for _, m in sl_basis(n)]
    for x, y, z in itertools.combinations(basis, 3):
        s = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)
        assert s.is_zero()


@pytest.mark.parametrize("n", [3, 4])
def test_trace_form_invariant(n):
    basis = [m for _, m in sl_basis(n)]
    for x, y, z in itertools.product(basis[: sl_dim(n)], repeat=3):
        lhs = trace_form(bracket(x, y), z, n) + trace_form(y, bracket(x, z), n)
        assert lhs == 0


@pytest.mark.parametrize("n", [3, 4])
def test_theta_set_closed_under_negation(n):
    ts = ThetaSet(n)
    full = ts.full_set()
    assert all(-w in full for w in full)
    for w, _ in root_system(n):
        assert w in full
    assert Weight(n, [0] * n) in full


@pytest.mark.parametrize("n", [3, 4])
def test_sl_coords_roundtrip(n):
    for _, x in sl_basis(n):
        assert sl_from_coords(n, sl_coords(n, x)) == x


def test_weight_canonical_representative():
    w1 = Weight(3, [2, 1, 0])
    w2 = Weight(3, [3, 2, 1])
    assert w1 == w2
    assert w1.h_values() == w2.h_values() == (1, 1)
    assert (-w1).coords == Weight(3, [-2, -1, 0]).coords


def test_theta3_positive_uses_corrected_set():
    # the printed Theta_3^+ list reuses n=4 symbols; the corrected set is
    # {w1+w2, w1, w2, 2w1, 2w2, 0}
    labels = canonical_theta_classes(3)
    weights = {theta_label_weight(3, lab) for lab in labels}
    w1, w2 = simple_weights = (eps(3, 1), eps(3, 1) + eps(3, 2))
    expected = {
        w1 + w2,
        w1,
        w2,
        w1 + w1,
        w2 + w2,
        Weight(3, [0, 0, 0]),
    }
    assert weights == expected
    assert len(labels) == 6


def test_theta4_has_seven_classes_with_shared_omega2():
    assert len(canonical_theta_classes(4)) == 7
    assert theta_label_weight(4, "Lam") == theta_label_weight(4, "Lam'")


def test_structure_constants_antisymmetric():
    sc = sl_structure_constants(3)
    for (i, j), coords in sc.items():
        assert [-c for c in coords] == sc[(j, i)]
