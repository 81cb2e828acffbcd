"""Assembly of Theta_n-graded Lie algebras from coordinate data, and the
Lie/grading verifiers.

assemble evaluates the master bracket formulas against the product
tables of a CoordinateData; the result carries exact structure
constants in the component basis.  check_jacobi clears denominators and
runs the integer kernel; check_grading verifies the three grading
axioms; check_condition_s verifies the n=3 vanishing hypothesis.
"""

import itertools
import math
import random
from fractions import Fraction

import numpy as np

from .brackets import components, master_rules, module_of
from .extract import CoordinateData, Extraction
from .gmodules import catalog
from .kernels import jacobi_scan
from .linalg import Subspace, zero_vec
from .slcore import ThetaSet, Weight, sl_basis_names, sl_structure_constants


class MissingProduct(Exception):
    """A master formula references a product table the data lacks."""


class GradedLieAlgebra:
    def __init__(self, n, layout, basis_meta, table, weights, offsets):
        self.n = n
        self.layout = layout
        self.basis_meta = basis_meta
        self.dim = len(basis_meta)
        self.table = table          # (i, j) -> {k: Fraction}, zero pairs absent
        self.weights = weights
        self.offsets = offsets

    def bracket_sparse(self, a, b):
        return self.table.get((a, b), {})

    def integer_constants(self):
        """(numpy int64 tensor, common denominator) clearing all fractions."""
        denom = 1
        for row in self.table.values():
            for c in row.values():
                denom = denom * c.denominator // math.gcd(denom, c.denominator)
        c = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for (i, j), row in self.table.items():
            for k, v in row.items():
                c[i, j, k] = int(v * denom)
        return c, denom

    def component_indices(self, key):
        return [t for t, (k, _, _) in enumerate(self.basis_meta) if k == key]


def assemble(data, extra_rules=None):
    """Build the graded Lie algebra defined by the coordinate data.

    extra_rules, when given, is a list of additional bracket Rules (used
    by mutation tests to inject products the master formulas exclude).
    """
    n = data.n
    layout = components(n)
    for _, key in layout:
        if key not in data.dims:
            raise ValueError(f"coordinate dimension for {key} missing")
    rules = dict(master_rules(n))
    if extra_rules:
        for r in extra_rules:
            rules[r.src] = r

    basis_meta = []
    weights = []
    offsets = {}
    for label, key in layout:
        mod = catalog(n, label)
        wlist = mod.basis_weights()
        for j in range(data.dims[key]):
            offsets[(key, j)] = len(basis_meta)
            for i in range(mod.dim):
                basis_meta.append((key, j, i))
                weights.append(wlist[i])

    raws = {key: catalog(n, label).raw_basis for label, key in layout}
    mod_dims = {key: catalog(n, label).dim for label, key in layout}

    # matrix-side coordinates per rule term, shared across coordinate pairs
    zc = {}
    for (k1, k2), rule in rules.items():
        for t in rule.terms:
            tl = module_of(n, t.target)
            zc[(k1, k2, t.prod_key)] = [
                [
                    [x * t.scale for x in _coords(tl, n, t.mat_fn(raws[k1][i], raws[k2][k]))]
                    for k in range(mod_dims[k2])
                ]
                for i in range(mod_dims[k1])
            ]

    table = {}
    for a, (k1, j1, i1) in enumerate(basis_meta):
        for b, (k2, j2, i2) in enumerate(basis_meta):
            if (k1, k2) in rules:
                rule, swap = rules[(k1, k2)], False
                args = (i1, i2, j1, j2)
            elif (k2, k1) in rules:
                rule, swap = rules[(k2, k1)], True
                args = (i2, i1, j2, j1)
            else:
                continue
            ii, kk, jj, ll = args
            out = {}
            for t in rule.terms:
                tv = data.products.get(t.prod_key)
                if tv is None:
                    raise MissingProduct(str(t.prod_key))
                pvec = tv[jj][ll]
                if not any(pvec):
                    continue
                coords = zc[(rule.src[0], rule.src[1], t.prod_key)][ii][kk]
                for m, val in enumerate(pvec):
                    if not val:
                        continue
                    off = offsets[(t.target, m)]
                    for r, x in enumerate(coords):
                        if x:
                            out[off + r] = out.get(off + r, Fraction(0)) + x * val
            if swap:
                out = {k: -v for k, v in out.items()}
            out = {k: v for k, v in out.items() if v}
            if out:
                table[(a, b)] = out
    return GradedLieAlgebra(n, layout, basis_meta, table, weights, offsets)


def _coords(label, n, elt):
    from .gmodules import to_coords
    return to_coords(label, n, elt)


def trivial_data(n):
    """A = span{1}, everything else zero; assembles to sl_n itself."""
    layout = components(n)
    dims = {key: 0 for _, key in layout}
    dims["A"] = 1
    products = {}
    for rule in master_rules(n).values():
        for t in rule.terms:
            p, q = dims[rule.src[0]], dims[rule.src[1]]
            products[t.prod_key] = [
                [zero_vec(dims[t.target]) for _ in range(q)] for _ in range(p)
            ]
    products[("A", "A", "A", "circ")] = [[[Fraction(2)]]]
    products[("A", "A", "A", "bracket")] = [[[Fraction(0)]]]
    return CoordinateData(n, dims, products, one_index=0)


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def check_jacobi(alg, mode="full", samples=5000, seed=0):
    """Evaluate the Jacobi identity on basis triples via the int kernel.

    mode 'full' scans all C(dim, 3) triples; 'sampled' draws the stated
    number of distinct triples from a seeded PRNG.  Violations are
    reported with their witness triples.
    """
    c, denom = alg.integer_constants()
    dim = alg.dim
    if mode == "full":
        triples = np.array(list(itertools.combinations(range(dim), 3)), dtype=np.int64)
        used_seed = None
    elif mode == "sampled":
        rng = random.Random(seed)
        seen = set()
        while len(seen) < min(samples, math.comb(dim, 3)):
            t = tuple(sorted(rng.sample(range(dim), 3)))
            seen.add(t)
        triples = np.array(sorted(seen), dtype=np.int64)
        used_seed = seed
    else:
        raise ValueError("mode must be 'full' or 'sampled'")
    flags = jacobi_scan(c, triples)
    bad = [tuple(int(x) for x in triples[t]) for t in np.nonzero(flags)[0][:10]]
    return {
        "mode": mode,
        "dim": dim,
        "denominator": denom,
        "triples": int(triples.shape[0]),
        "violations": int(flags.sum()),
        "witnesses": bad,
        "seed": used_seed,
        "pass": not flags.any(),
    }


def check_grading(alg):
    """The three axioms of a (Theta_n, sl_n)-grading, checked exactly.

    (G1) the A-coordinate-0 copy brackets like sl_n;
    (G2) ad H_i is diagonal on the basis with all weights in Theta_n;
    (G3) the 0-weight space equals the span of [L_a, L_-a], a != 0.
    """
    n = alg.n
    names = sl_basis_names(n)
    sc = sl_structure_constants(n)
    adj_off = alg.offsets[("A", 0)]
    sl_d = len(names)

    g1_bad = []
    for i in range(sl_d):
        for j in range(sl_d):
            got = alg.bracket_sparse(adj_off + i, adj_off + j)
            want = {
                adj_off + t: c for t, c in enumerate(sc[(i, j)]) if c
            }
            if got != want:
                g1_bad.append((names[i], names[j]))
    g1 = not g1_bad

    theta = ThetaSet(n).full_set()
    g2_bad = []
    for hi in range(1, n):
        h_idx = adj_off + names.index(f"H_{hi}")
        for b in range(alg.dim):
            got = alg.bracket_sparse(h_idx, b)
            lam = alg.weights[b].eval_h(hi)
            want = {b: Fraction(lam)} if lam else {}
            if got != want:
                g2_bad.append((hi, b))
    for b in range(alg.dim):
        if alg.weights[b] not in theta:
            g2_bad.append(("weight", b))
    g2 = not g2_bad

    zero_idx = [b for b in range(alg.dim) if alg.weights[b].is_zero()]
    l0 = Subspace(alg.dim, [_unit(alg.dim, b) for b in zero_idx])
    rows = []
    for a in range(alg.dim):
        wa = alg.weights[a]
        if wa.is_zero():
            continue
        for b in range(alg.dim):
            if alg.weights[b] == -wa:
                out = alg.bracket_sparse(a, b)
                if out:
                    v = zero_vec(alg.dim)
                    for k, val in out.items():
                        v[k] = val
                    rows.append(v)
    rhs = Subspace(alg.dim, rows)
    g3 = rhs == l0

    return {
        "G1": {"pass": g1, "witnesses": g1_bad[:5]},
        "G2": {"pass": g2, "witnesses": g2_bad[:5]},
        "G3": {"pass": g3, "dim_L0": l0.dim, "dim_span": rhs.dim},
        "pass": bool(g1 and g2 and g3),
    }


def _unit(dim, k):
    v = zero_vec(dim)
    v[k] = Fraction(1)
    return v


def check_condition_s(alg):
    """[S (x) C, S (x) C] = [S' (x) C', S' (x) C'] = 0 (n = 3 hypothesis).

    Evaluated on the assembled structure constants so injected synthetic
    products are caught; returns witnesses on failure.
    """
    if alg.n != 3:
        raise ValueError("the vanishing condition is an n=3 hypothesis")
    bad = []
    for key in ("C", "C'"):
        idxs = alg.component_indices(key)
        for a in idxs:
            for b in idxs:
                if alg.bracket_sparse(a, b):
                    bad.append((key, a, b))
    return {"pass": not bad, "witnesses": bad[:5]}


def roundtrip_defects(extraction, alg=None, max_report=5):
    """Basis pairs where the assembled bracket differs from the ambient one.

    Exact comparison of B . (assembled constants) against the ambient
    commutator for every ordered basis pair.
    """
    if alg is None:
        alg = assemble(extraction.data)
    emb = extraction.emb
    bmat = extraction.bmat
    dim = alg.dim
    cols = [extraction.basis_column_sparse(t) for t in range(dim)]
    bad = []
    for a in range(dim):
        for b in range(dim):
            amb = emb.ambient_bracket_coords(cols[a], cols[b])
            got = {}
            for k, v in alg.bracket_sparse(a, b).items():
                for r in range(bmat.rows):
                    x = bmat[r, k]
                    if x:
                        got[r] = got.get(r, Fraction(0)) + x * v
            got = {k: v for k, v in got.items() if v}
            if got != amb:
                bad.append((a, b))
                if len(bad) >= max_report:
                    return bad
    return bad
