import pytest

from thetagraded.gmodules import catalog, is_representation, isotypic_decompose
from thetagraded.slcore import theta_label_dim
from thetagraded.tensortheta import (
    GOLDEN_TABLE,
    TABLE_LABELS,
    golden_cell_multiset,
    tensor,
    theta_component,
    verify_tables,
)


def test_tensor_with_trivial_is_identity():
    v = catalog(4, "V")
    m = tensor(v, catalog(4, "T"))
    assert m.dim == 4
    assert isotypic_decompose(m).multiplicities() == {"V": 1}


def test_tensor_dimension():
    assert tensor(catalog(4, "S"), catalog(4, "S'")).dim == 100


def test_tensor_representation_property():
    assert is_representation(tensor(catalog(4, "adj"), catalog(4, "V")), pairs="generators")


def test_tensor_requires_matching_n():
    with pytest.raises(ValueError):
        tensor(catalog(3, "V"), catalog(4, "V"))


def test_adjoint_square_n3():
    tc = theta_component("adj", "adj", 3)
    assert tc.canonical() == {"adj": 2, "T": 1}
    # dim 64 minus (2*8 + 1); the remainder holds V(3w1), V(3w2), V(2w1+2w2)
    assert tc.remainder_dim == 64 - 17
    assert tc.total_dim() == 64


def test_symmetric_square_cell_n4():
    tc = theta_component("S", "S", 4)
    assert tc.canonical() == {}
    assert tc.remainder_dim == 100


def test_s_sprime_cell_n4():
    tc = theta_component("S", "S'", 4)
    assert tc.canonical() == {"adj": 1, "T": 1}
    assert tc.remainder_dim == 84


@pytest.mark.parametrize("n,cells", [(3, 25), (4, 36)])
def test_verify_tables(n, cells):
    rep = verify_tables(n)
    assert len(rep["cells"]) == cells
    assert rep["pass"]
    assert all(c["pass"] for c in rep["cells"])


def test_verify_tables_rejects_bad_n():
    with pytest.raises(ValueError):
        verify_tables(5)


@pytest.mark.parametrize("n", [3, 4])
def test_golden_table_symmetric(n):
    for r in TABLE_LABELS[n]:
        for c in TABLE_LABELS[n]:
            assert golden_cell_multiset(n, r, c) == golden_cell_multiset(n, c, r)


@pytest.mark.parametrize("n", [3, 4])
def test_computed_cells_symmetric(n):
    for r in TABLE_LABELS[n]:
        for c in TABLE_LABELS[n]:
            assert theta_component(r, c, n).canonical() == theta_component(c, r, n).canonical()


def test_n3_label_swap_invariance():
    # V is the same class as Lam', V' the same class as Lam
    pairs = [("V", "Lam'"), ("V'", "Lam")]
    for a, b in pairs:
        for other in ("adj", "S", "S'"):
            assert theta_component(a, other, 3).canonical() == theta_component(b, other, 3).canonical()
    assert theta_component("V", "V'", 3).canonical() == theta_component("Lam'", "Lam", 3).canonical()


@pytest.mark.parametrize("n", [3, 4])
def test_dimension_bookkeeping_every_cell(n):
    for r in TABLE_LABELS[n]:
        for c in TABLE_LABELS[n]:
            tc = theta_component(r, c, n)
            assert tc.total_dim() == theta_label_dim(n, r) * theta_label_dim(n, c)


def test_golden_cells_complete():
    assert len(GOLDEN_TABLE[3]) == 25
    assert len(GOLDEN_TABLE[4]) == 36
