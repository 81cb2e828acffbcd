from fractions import Fraction

import pytest

from thetagraded.gmodules import catalog, identification
from thetagraded.homspaces import (
    HomContext,
    PaperHomEntry,
    bilinear_equivariance_defects,
    hom_space,
    hom_space_dim,
    paper_hom_entries,
    pairing_matrix,
    realize_formula,
    schur_consistency,
    verify_paper_homs,
)
from thetagraded.linalg import IncrementalSpan, Matrix
from thetagraded.slcore import sl_basis, sl_dim


@pytest.mark.parametrize("n", [3, 4])
def test_adjoint_square_hom_is_two_dimensional(n):
    assert hom_space_dim("adj", "adj", "adj", n) == 2
    assert len(hom_space("adj", "adj", "adj", n)) == 2


def test_hom_dim_examples_n4():
    assert hom_space_dim("V", "V", "S", 4) == 1
    from thetagraded.slcore import canonical_theta_classes
    for z in canonical_theta_classes(4):
        assert hom_space_dim("S", "S", z, 4) == 0


@pytest.mark.parametrize("n", [3, 4])
def test_invariant_pairings(n):
    # B(x.a, b) + B(a, x.b) = 0 for every pairing used by the solver
    for lab in ("adj", "V", "S", "Lam"):
        from thetagraded.homspaces import PRIME
        ma = catalog(n, lab)
        mb = catalog(n, PRIME[lab])
        beta = pairing_matrix(lab, n)
        for g in range(sl_dim(n)):
            lhs = ma.actions[g].transpose() * beta + beta * mb.actions[g]
            assert lhs.is_zero()


def test_hom_space_basis_is_equivariant():
    for (x, y, z) in [("adj", "adj", "adj"), ("V", "V", "S"), ("adj", "Lam", "S'")]:
        for phi in hom_space(x, y, z, 4):
            assert bilinear_equivariance_defects(phi, x, y, z, 4) == []


@pytest.mark.parametrize("n,count", [(3, 21), (4, 27)])
def test_paper_hom_lists_verify(n, count):
    rep = verify_paper_homs(n)
    assert rep["counted_entries"] == count
    assert rep["pass"]
    assert all(r["pass"] for r in rep["entries"])


def test_adjoint_square_formulas_independent():
    rep = verify_paper_homs(4)
    first = next(r for r in rep["entries"] if r["name"] == "g*g->g")
    assert first["dim_expected"] == 2 and first["dim_computed"] == 2
    assert first["independent"]


def test_entries_using_f_g_pass():
    for n in (3, 4):
        rep = verify_paper_homs(n)
        noted = [r for r in rep["entries"] if r["note"]]
        assert noted and all(r["pass"] for r in noted)


def test_trace_pairing_formula_nonzero():
    entry = next(e for e in paper_hom_entries(4) if e.name == "g*g->T")
    m = realize_formula(entry)
    assert m.shape() == (1, 225)
    assert not m.is_zero()


def test_antisymmetric_formula_vanishes_on_diagonal():
    entry = next(e for e in paper_hom_entries(4) if e.name == "V*V->Lam")
    m = realize_formula(entry)
    dv = 4
    for i in range(dv):
        col = i * dv + i
        assert all(m[r, col] == 0 for r in range(m.rows))


def test_s_lam_prime_formula_traceless():
    entry = next(e for e in paper_hom_entries(3) if e.name == "S*Lam'->g")
    ms = catalog(3, "S")
    ml = catalog(3, "Lam'")
    for s in ms.raw_basis:
        for lam in ml.raw_basis:
            assert (s * lam).trace() == 0


def test_corrupted_entry_fails():
    ctx = HomContext(3)
    bad = PaperHomEntry(
        3, "corrupt", ("S'", "Lam"), "adj",
        [lambda sp, a: sp * a],  # the non-equivariant printed order
    )
    rep = verify_paper_homs(3, entries=[bad])
    assert not rep["pass"]
    entry = rep["entries"][0]
    assert not entry["equivariant"] and not entry["in_span"]


def test_wrong_expected_dimension_fails():
    entries = paper_hom_entries(3)
    target = next(e for e in entries if e.name == "S*S'->T")
    target.dim_expected = 2
    rep = verify_paper_homs(3, entries=[target])
    assert not rep["pass"]


def test_composition_with_identification_stays_equivariant():
    # phi in Hom(Lam (x) Lam, T) composed with f (x) f on Lam' (x) Lam'
    n = 4
    f = identification(4, "f")
    basis = hom_space("Lam", "Lam", "T", n)
    assert len(basis) == 1
    phi = basis[0]
    dl = catalog(n, "Lam").dim
    rows = []
    for r in range(phi.rows):
        row = []
        for i in range(dl):
            for k in range(dl):
                val = Fraction(0)
                for a in range(dl):
                    fa = f.iso[a, i]
                    if not fa:
                        continue
                    for b in range(dl):
                        fb = f.iso[b, k]
                        if fb:
                            val += fa * fb * phi[r, a * dl + b]
                row.append(val)
        rows.append(row)
    twisted = Matrix(rows)
    assert bilinear_equivariance_defects(twisted, "Lam'", "Lam'", "T", n) == []
    assert not twisted.is_zero()


def test_schur_consistency_spot_checks():
    rep = schur_consistency(3, labels=("adj", "S"))
    assert rep["pass"]
