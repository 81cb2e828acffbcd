from fractions import Fraction

import pytest

from thetagraded.brackets import Rule, Term
from thetagraded.extract import CoordinateData, example_sl_nk, extract_coordinates
from thetagraded.gmodules import catalog
from thetagraded.graded import (
    MissingProduct,
    assemble,
    check_condition_s,
    check_grading,
    check_jacobi,
    roundtrip_defects,
    trivial_data,
)
from thetagraded.mutation import flip_cell
from thetagraded.slcore import sl_dim


@pytest.mark.parametrize("n", [3, 4])
def test_trivial_data_assembles_to_sl_n(n):
    alg = assemble(trivial_data(n))
    assert alg.dim == sl_dim(n)
    rep = check_grading(alg)
    assert rep["pass"]


def test_trivial_sl4_full_jacobi_455_triples():
    alg = assemble(trivial_data(4))
    rep = check_jacobi(alg, mode="full")
    assert rep["triples"] == 455
    assert rep["pass"]


def test_missing_product_raises():
    data = trivial_data(3)
    del data.products[("A", "A", "A", "circ")]
    with pytest.raises(MissingProduct):
        assemble(data)


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 1), (4, 2)])
def test_roundtrip_slnk(n, k):
    ex = extract_coordinates(example_sl_nk(n, k))
    assert roundtrip_defects(ex) == []


def test_roundtrip_sl7(ex7, alg7):
    assert roundtrip_defects(ex7, alg7) == []


def test_full_jacobi_sl7(alg7):
    rep = check_jacobi(alg7, mode="full")
    assert rep["triples"] == 17296
    assert rep["pass"]


def test_sampled_jacobi_deterministic(alg7):
    a = check_jacobi(alg7, mode="sampled", samples=200, seed=5)
    b = check_jacobi(alg7, mode="sampled", samples=200, seed=5)
    assert a == b
    assert a["seed"] == 5 and a["triples"] == 200 and a["pass"]


def test_corrupted_product_breaks_jacobi(ex7):
    mutated = flip_cell(ex7.data, ("E", "E'", "A", "plain"))
    rep = check_jacobi(assemble(mutated), mode="full")
    assert not rep["pass"]
    assert rep["witnesses"]


def test_grading_sl7_and_sl9(alg7, alg9):
    for alg in (alg7, alg9):
        rep = check_grading(alg)
        assert rep["G1"]["pass"] and rep["G2"]["pass"] and rep["G3"]["pass"]


def test_grading_slnk(exnk31):
    rep = check_grading(assemble(exnk31.data))
    assert rep["pass"]


def test_adjoint_action_matches_module_action(alg7):
    # [x (x) 1, u] computed from structure constants equals the module
    # action of x on u's component
    n = alg7.n
    adj_off = alg7.offsets[("A", 0)]
    for i in range(sl_dim(n)):
        for b, (key, j, iu) in enumerate(alg7.basis_meta):
            if key == "D":
                expected = {}
            else:
                label = dict((k, l) for l, k in [(lab, key2) for lab, key2 in alg7.layout])[key]
                act = catalog(n, label).actions[i]
                off = alg7.offsets[(key, j)]
                expected = {off + r: act[r, iu] for r in range(act.rows) if act[r, iu]}
            assert alg7.bracket_sparse(adj_off + i, b) == expected


def _inflate_d(data):
    """Add one trivial dimension to D with no products touching it."""
    dims = dict(data.dims)
    dold = dims["D"]
    dims["D"] = dold + 1
    products = {}
    for key, tab in data.products.items():
        x, y, z, kind = key
        newtab = [[list(v) for v in row] for row in tab]
        if z == "D":
            newtab = [[v + [Fraction(0)] for v in row] for row in newtab]
        zdim = dims[z]
        if y == "D":
            for row in newtab:
                row.append([Fraction(0)] * zdim)
        if x == "D":
            width = len(newtab[0]) if newtab else dims[y]
            newtab.append([[Fraction(0)] * zdim for _ in range(width)])
        products[key] = newtab
    return CoordinateData(data.n, dims, products, data.one_index)


def test_extra_trivial_summand_fails_g3(exnk31):
    alg = assemble(_inflate_d(exnk31.data))
    rep = check_grading(alg)
    assert rep["G1"]["pass"] and rep["G2"]["pass"]
    assert not rep["G3"]["pass"]
    assert rep["G3"]["dim_span"] + 1 == rep["G3"]["dim_L0"]


def test_condition_s_holds_on_sl7(alg7):
    rep = check_condition_s(alg7)
    assert rep["pass"]


def test_condition_s_vacuous_on_trivial_data():
    rep = check_condition_s(assemble(trivial_data(3)))
    assert rep["pass"]


def test_condition_s_rejects_n4(alg9):
    with pytest.raises(ValueError):
        check_condition_s(alg9)


def test_condition_s_fails_on_synthetic_feedback(ex7):
    # inject an S (x) S -> S' product: the self-bracket of S (x) C no
    # longer vanishes and the checker must name a witness
    data = ex7.data.copy()
    data.products[("C", "C", "C'", "plain")] = [[[Fraction(1)]]]
    rule = Rule(
        ("C", "C"),
        [Term("C'", lambda s1, s2: s1 * s2 + s2 * s1, ("C", "C", "C'", "plain"), 1)],
    )
    alg = assemble(data, extra_rules=[rule])
    rep = check_condition_s(alg)
    assert not rep["pass"]
    assert rep["witnesses"]


def test_antisymmetry_of_structure_constants(alg7):
    for (a, b), row in alg7.table.items():
        flipped = alg7.bracket_sparse(b, a)
        assert flipped == {k: -v for k, v in row.items()}
