from fractions import Fraction

import pytest

from thetagraded.coordalg import (
    CoordAlgebra,
    build_frak_a,
    build_frak_b,
    split_a_dims,
    split_a_reconstruction_defects,
    verify_section4,
)
from thetagraded.graded import trivial_data
from thetagraded.linalg import vec_add


@pytest.mark.parametrize("n,expected", [(3, (5, 3)), (4, (9, 6))])
def test_split_a_dims(n, expected):
    assert split_a_dims(n) == expected
    assert sum(split_a_dims(n)) == n * n - 1


@pytest.mark.parametrize("n", [3, 4])
def test_split_a_reconstruction(n):
    assert split_a_reconstruction_defects(n) == []


def test_unit_is_one_plus(ex9):
    frak = build_frak_b(ex9.data)
    one = frak.unit()
    assert one == {"A+": [Fraction(1), Fraction(0)]}
    for p, i in frak.basis():
        x = frak.basis_elem(p, i)
        assert frak.equal(frak.mul(one, x), x)
        assert frak.equal(frak.mul(x, one), x)


def test_zero_cells_c_and_cprime(ex9, ex7):
    for data in (ex9.data, ex7.data):
        frak = CoordAlgebra(data) if data.n == 4 else build_frak_a(data, check_condition=False)
        for piece in ("C", "C'"):
            for i in range(frak.piece_dim(piece)):
                for j in range(frak.piece_dim(piece)):
                    prod = frak.mul(frak.basis_elem(piece, i), frak.basis_elem(piece, j))
                    assert prod == {}


# the cell map of the homogeneous multiplication: derived from the master
# formulas on symmetric/skew parts (the printed n=3 table has the A x C/E
# columns garbled; the n=4 table's (A+,E)->C' entry is circ vs bracket)
ALLOWED_N3 = {
    ("A", "A"): {"A+", "A-"},
    ("A", "C"): {"C", "E"}, ("C", "A"): {"C", "E"},
    ("A", "E"): {"C", "E"}, ("E", "A"): {"C", "E"},
    ("A", "C'"): {"C'", "E'"}, ("C'", "A"): {"C'", "E'"},
    ("A", "E'"): {"C'", "E'"}, ("E'", "A"): {"C'", "E'"},
    ("C", "C'"): {"A+", "A-"}, ("C'", "C"): {"A+", "A-"},
    ("C", "E'"): {"A+", "A-"}, ("E'", "C"): {"A+", "A-"},
    ("C'", "E"): {"A+", "A-"}, ("E", "C'"): {"A+", "A-"},
    ("E", "E'"): {"A+", "A-"}, ("E'", "E"): {"A+", "A-"},
    ("E", "E"): {"C'", "E'"},
    ("E'", "E'"): {"C", "E"},
    ("C", "E"): {"E'"}, ("E", "C"): {"E'"},
    ("C'", "E'"): {"E"}, ("E'", "C'"): {"E"},
    ("C", "C"): set(), ("C'", "C'"): set(),
}

ALLOWED_N4 = {
    ("A", "A"): {"A+", "A-"},
    ("A", "C"): {"C", "E"}, ("C", "A"): {"C", "E"},
    ("A", "E"): {"C", "E", "C'"}, ("E", "A"): {"C", "E", "C'"},
    ("A", "C'"): {"C'", "E"}, ("C'", "A"): {"C'", "E"},
    ("C", "C'"): {"A+", "A-"}, ("C'", "C"): {"A+", "A-"},
    ("C", "E"): {"A+", "A-"}, ("E", "C"): {"A+", "A-"},
    ("C'", "E"): {"A+", "A-"}, ("E", "C'"): {"A+", "A-"},
    ("E", "E"): {"A+"},
    ("C", "C"): set(), ("C'", "C'"): set(),
    ("A", "B"): {"B"}, ("B", "A"): {"B"},
    ("A", "B'"): {"B'"}, ("B'", "A"): {"B'"},
    ("C", "B"): set(), ("B", "C"): set(),
    ("C'", "B"): {"B'"}, ("B", "C'"): {"B'"},
    ("E", "B"): {"B'"}, ("B", "E"): {"B'"},
    ("C", "B'"): {"B"}, ("B'", "C"): {"B"},
    ("C'", "B'"): set(), ("B'", "C'"): set(),
    ("E", "B'"): {"B"}, ("B'", "E"): {"B"},
    ("B", "B"): {"C", "E"},
    ("B'", "B'"): {"C'", "E"},
    ("B", "B'"): {"A+", "A-"}, ("B'", "B"): {"A+", "A-"},
}


def _family(piece):
    return "A" if piece in ("A+", "A-") else piece


@pytest.mark.parametrize("fixture,allowed", [("ex7", ALLOWED_N3), ("ex9", ALLOWED_N4)])
def test_product_grading_matches_cells(fixture, allowed, request):
    data = request.getfixturevalue(fixture).data
    frak = build_frak_b(data) if data.n == 4 else build_frak_a(data, check_condition=False)
    for p1, i in frak.basis():
        for p2, j in frak.basis():
            prod = frak.mul(frak.basis_elem(p1, i), frak.basis_elem(p2, j))
            cell = allowed[(_family(p1), _family(p2))]
            assert set(prod) <= cell, (p1, p2, set(prod), cell)


def test_gamma_involution_properties(ex9):
    frak = build_frak_b(ex9.data)
    for p, i in frak.basis():
        x = frak.basis_elem(p, i)
        assert frak.equal(frak.gamma(frak.gamma(x)), x)
        assert frak.equal(frak.eta(frak.eta(x)), x)
    a_pieces = [(p, i) for p, i in frak.basis() if p not in ("B", "B'")]
    for p, i in a_pieces:
        x = frak.basis_elem(p, i)
        assert frak.equal(frak.eta(x), frak.gamma(x))


def test_gamma_antiautomorphism_exhaustive(ex9):
    frak = build_frak_b(ex9.data)
    a_pieces = [(p, i) for p, i in frak.basis() if p not in ("B", "B'")]
    for p1, i1 in a_pieces:
        x = frak.basis_elem(p1, i1)
        for p2, i2 in a_pieces:
            y = frak.basis_elem(p2, i2)
            assert frak.equal(frak.gamma(frak.mul(x, y)), frak.mul(frak.gamma(y), frak.gamma(x)))


def test_b_products_split_into_a_copies(ex9):
    # bb' + b'b lands in A+, bb' - b'b in A-, exactly
    frak = build_frak_b(ex9.data)
    for i in range(frak.piece_dim("B")):
        for j in range(frak.piece_dim("B'")):
            b = frak.basis_elem("B", i)
            bp = frak.basis_elem("B'", j)
            s = frak.add(frak.mul(b, bp), frak.mul(bp, b))
            d = frak.add(frak.mul(b, bp), frak.scale(frak.mul(bp, b), -1))
            assert set(s) <= {"A+"}
            assert set(d) <= {"A-"}


def test_b_alpha_is_gamma_twisted(ex9):
    frak = build_frak_b(ex9.data)
    for p in ("A+", "A-", "C", "E", "C'"):
        for i in range(frak.piece_dim(p)):
            alpha = frak.basis_elem(p, i)
            for j in range(frak.piece_dim("B")):
                b = frak.basis_elem("B", j)
                assert frak.equal(frak.mul(b, alpha), frak.mul(frak.gamma(alpha), b))
            for j in range(frak.piece_dim("B'")):
                bp = frak.basis_elem("B'", j)
                assert frak.equal(frak.mul(alpha, bp), frak.mul(bp, frak.gamma(alpha)))


def test_verify_section4_sl7(ex7):
    rep = verify_section4(ex7.data)
    assert rep["pass"], [c for c in rep["checks"] if not c["pass"]]
    names = {c["name"] for c in rep["checks"]}
    assert {"unit_1plus", "A_associative", "bimodule_CE", "bimodule_CpEp",
            "involution_order2", "antiautomorphism", "D_equals_pair_span",
            "pairing_images_are_ideals", "derivation_identity",
            "D_acts_by_derivations"} <= names


def test_verify_section4_sl9(ex9):
    rep = verify_section4(ex9.data)
    assert rep["pass"], [c for c in rep["checks"] if not c["pass"]]
    names = {c["name"] for c in rep["checks"]}
    assert {"bimodule_CECp", "bimodule_BBp", "eta_restricts_to_gamma"} <= names


def test_verify_section4_trivial_data():
    rep = verify_section4(trivial_data(3))
    assert rep["pass"]
    assert rep["a_associator_violations"] == 0


def test_frak_a_associativity_reported_not_asserted(ex7):
    rep = verify_section4(ex7.data)
    # the full algebra frak_a is not associative on this example; the
    # count is reported so the fact is visible, never asserted
    assert rep["a_associator_violations"] > 0
    assert rep["pass"]


def test_frak_b_requires_n4(ex7):
    with pytest.raises(ValueError):
        build_frak_b(ex7.data)


def test_d_pairing_skew_extension(ex9):
    frak = build_frak_b(ex9.data)
    for i in range(frak.piece_dim("B")):
        for j in range(frak.piece_dim("B'")):
            lhs = frak.pairing("B", i, "B'", j)
            rhs = frak.pairing("B'", j, "B", i)
            assert vec_add(lhs, rhs) == [Fraction(0)] * ex9.data.dims["D"]
