from fractions import Fraction

import pytest

from thetagraded.characters import irrep_dim
from thetagraded.gmodules import (
    CATALOG_LABELS,
    GModule,
    NonThetaConstituent,
    catalog,
    equivariance_residual,
    highest_weight_vectors,
    identification,
    is_representation,
    isotypic_decompose,
    module_hom_space,
    to_coords,
    weight_decompose,
)
from thetagraded.linalg import Matrix, invert
from thetagraded.slcore import (
    ThetaSet,
    Weight,
    eps,
    matrix_unit,
    sl_basis_names,
    theta_label_dim,
    theta_label_weight,
)


def test_catalog_dimensions():
    assert catalog(4, "S").dim == 10
    assert catalog(4, "Lam").dim == 6
    assert catalog(3, "adj").dim == 8
    for n in (3, 4):
        for lab in CATALOG_LABELS:
            assert catalog(n, lab).dim == theta_label_dim(n, lab)


def test_trivial_module_has_zero_actions():
    t = catalog(3, "T")
    assert all(a.is_zero() for a in t.actions)


def test_action_h1_on_e1():
    v = catalog(3, "V")
    h1 = sl_basis_names(3).index("H_1")
    assert v.act_vec(h1, [Fraction(1), Fraction(0), Fraction(0)]) == [1, 0, 0]


def test_unknown_label_rejected():
    with pytest.raises(ValueError):
        catalog(3, "bogus")


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("lab", CATALOG_LABELS)
def test_representation_property(n, lab):
    assert is_representation(catalog(n, lab), pairs="generators")


def test_representation_property_full_pairs_small():
    assert is_representation(catalog(3, "V"), pairs="all")
    assert is_representation(catalog(4, "Lam"), pairs="all")


def test_weights_of_natural_module_n4():
    wd = weight_decompose(catalog(4, "V"))
    assert set(wd.spaces) == {eps(4, i) for i in range(1, 5)}
    assert all(s.dim == 1 for s in wd.spaces.values())


def test_adjoint_n3_weight_spaces():
    wd = weight_decompose(catalog(3, "adj"))
    zero = Weight(3, [0, 0, 0])
    assert wd.spaces[zero].dim == 2
    assert sum(1 for w in wd.spaces if w != zero) == 6


def test_symmetric_square_weights_n3():
    wd = weight_decompose(catalog(3, "S"))
    expected = {eps(3, i) + eps(3, j) for i in range(1, 4) for j in range(i, 4)}
    assert set(wd.spaces) == expected
    assert all(s.dim == 1 for s in wd.spaces.values())


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("lab", CATALOG_LABELS)
def test_catalog_weights_lie_in_theta(n, lab):
    full = ThetaSet(n).full_set()
    for w in catalog(n, lab).basis_weights():
        assert w in full


def test_highest_weight_vectors_examples():
    v = catalog(4, "V")
    hw = highest_weight_vectors(v, eps(4, 1))
    assert hw.vectors() == [[1, 0, 0, 0]]

    lam = catalog(4, "Lam")
    hw = highest_weight_vectors(lam, eps(4, 1) + eps(4, 2))
    # E_12 - E_21 is the first Lam basis vector
    assert hw.vectors() == [[1, 0, 0, 0, 0, 0]]

    s = catalog(3, "S")
    hw = highest_weight_vectors(s, eps(3, 1) + eps(3, 1))
    assert hw.vectors() == [[1, 0, 0, 0, 0, 0]]


def _direct_sum(a, b):
    acts = []
    for x, y in zip(a.actions, b.actions):
        rows = []
        for i in range(a.dim):
            rows.append(list(x.data[i]) + [Fraction(0)] * b.dim)
        for i in range(b.dim):
            rows.append([Fraction(0)] * a.dim + list(y.data[i]))
        acts.append(Matrix(rows))
    return GModule(a.n, a.dim + b.dim, acts)


def test_isotypic_of_double_natural():
    v = catalog(4, "V")
    dec = isotypic_decompose(_direct_sum(v, v))
    assert dec.multiplicities() == {"V": 2}
    assert dec.check_dimension()


@pytest.mark.parametrize("n", [3, 4])
def test_isotypic_of_single_catalog_modules(n):
    from thetagraded.slcore import canonical_theta_classes
    for lab in canonical_theta_classes(n):
        dec = isotypic_decompose(catalog(n, lab))
        assert dec.multiplicities() == {lab: 1}


def test_non_theta_constituent_detected():
    from thetagraded.tensortheta import tensor
    m = tensor(catalog(3, "S"), catalog(3, "S"))
    with pytest.raises(NonThetaConstituent) as exc:
        isotypic_decompose(m)
    assert irrep_dim(exc.value.weight) > 0


def test_weight_decompose_survives_basis_change():
    v = catalog(3, "adj")
    p = Matrix([[1 if i == j else (1 if j == i + 1 else 0) for j in range(8)] for i in range(8)])
    pinv = invert(p)
    twisted = GModule(3, 8, [p * a * pinv for a in v.actions])
    wd = weight_decompose(twisted)
    assert {w: s.dim for w, s in wd.spaces.items()} == {
        w: s.dim for w, s in weight_decompose(v).spaces.items()
    }


@pytest.mark.parametrize("n,which", [(3, "f"), (3, "g"), (4, "f")])
def test_identifications_equivariant_and_normalized(n, which):
    idf = identification(n, which)
    src, tgt = catalog(n, idf.source), catalog(n, idf.target)
    assert equivariance_residual(idf.iso, src, tgt) == []
    inv = idf.inverse()
    assert idf.iso * inv.iso == Matrix.identity(tgt.dim)
    if n == 4:
        anchor = matrix_unit(4, 3, 4) - matrix_unit(4, 4, 3)
        img = idf.apply_raw(anchor)
        assert img == matrix_unit(4, 1, 2) - matrix_unit(4, 2, 1)
    elif which == "f":
        img = idf.apply_raw(matrix_unit(3, 2, 3) - matrix_unit(3, 3, 2))
        assert img == [1, 0, 0]
    else:
        img = idf.apply_raw(matrix_unit(3, 1, 2) - matrix_unit(3, 2, 1))
        assert img == [0, 0, 1]


def test_hom_solver_space_dimension_one():
    assert len(module_hom_space(catalog(4, "Lam'"), catalog(4, "Lam"))) == 1
    assert len(module_hom_space(catalog(3, "Lam"), catalog(3, "V'"))) == 1
    # no equivariant maps between inequivalent simples
    assert module_hom_space(catalog(4, "V"), catalog(4, "V'")) == []


def test_n3_exterior_identifications():
    # V = Lam' and V' = Lam as sl_3-modules
    assert len(module_hom_space(catalog(3, "V"), catalog(3, "Lam'"))) == 1
    assert len(module_hom_space(catalog(3, "V'"), catalog(3, "Lam"))) == 1
