"""Equivariant Hom spaces Hom(X (x) Y, Z) and the printed basis maps.

The solver runs through duality: an equivariant map X (x) Y -> Z is the
same as an equivariant embedding Z' -> X' (x) Y' (primes are the dual
partners realized inside the catalog, paired by trace forms), and those
embeddings are found by transporting highest weight vectors.  Bases are
returned in canonical RREF order so golden comparisons stay stable.
"""

from fractions import Fraction
from functools import lru_cache

from .gmodules import (
    catalog,
    from_coords,
    highest_weight_vectors,
    identification,
    lowering_indices,
    raising_indices,
    to_coords,
    transport_embedding,
)
from .linalg import IncrementalSpan, Matrix, invert, kernel, solve_span, zero_vec
from .slcore import canonical_theta_classes, canonical_theta_label, sl_dim, theta_label_weight
from .tensortheta import TensorAct

PRIME = {"adj": "adj", "V": "V'", "V'": "V", "S": "S'", "S'": "S", "Lam": "Lam'", "Lam'": "Lam", "T": "T"}


@lru_cache(maxsize=None)
def pairing_matrix(label, n):
    """Gram matrix of the invariant pairing between a module and its prime.

    adj, S, S', Lam, Lam' pair by tr(ab); V pairs with V' by v'^t u.
    All are exact and invertible.
    """
    a = catalog(n, label)
    b = catalog(n, PRIME[label])
    rows = []
    for ra in a.raw_basis:
        row = []
        for rb in b.raw_basis:
            if label in ("V", "V'"):
                row.append(sum(x * y for x, y in zip(ra, rb)))
            elif label == "T":
                row.append(Fraction(1))
            else:
                row.append((ra * rb).trace())
        rows.append(row)
    return Matrix(rows)


def _hw_vectors_act(act, lam):
    """Highest weight vectors of weight lam for an action-protocol object."""
    weights = act.basis_weights()
    idxs = [k for k, w in enumerate(weights) if w == lam]
    if not idxs:
        return []
    basis = []
    for k in idxs:
        v = zero_vec(act.dim)
        v[k] = Fraction(1)
        basis.append(v)
    rows = []
    for ridx in raising_indices(act.n):
        images = [act.act_vec(ridx, b) for b in basis]
        for coord in range(act.dim):
            rows.append([img[coord] for img in images])
    kern = kernel(Matrix(rows))
    out = []
    for coeffs in kern.vectors():
        v = zero_vec(act.dim)
        for c, k in zip(coeffs, idxs):
            v[k] = c
        out.append(v)
    return out


def hom_space_dim(x_label, y_label, z_label, n):
    """dim Hom(X (x) Y, Z) via highest weight vectors in X' (x) Y'."""
    act = TensorAct(catalog(n, PRIME[x_label]), catalog(n, PRIME[y_label]))
    lam = theta_label_weight(n, PRIME[z_label])
    return len(_hw_vectors_act(act, lam))


def hom_space(x_label, y_label, z_label, n):
    """Canonical RREF basis of Hom(X (x) Y, Z).

    Each basis element is a (dim Z) x (dim X * dim Y) matrix; the column
    for the pair (i, k) sits at index i * dim Y + k.
    """
    mx = catalog(n, x_label)
    my = catalog(n, y_label)
    mz = catalog(n, z_label)
    mxp = catalog(n, PRIME[x_label])
    myp = catalog(n, PRIME[y_label])
    mzp = catalog(n, PRIME[z_label])
    act = TensorAct(mxp, myp)
    lam = theta_label_weight(n, PRIME[z_label])
    hws = _hw_vectors_act(act, lam)
    if not hws:
        return []

    bx = pairing_matrix(x_label, n)
    by = pairing_matrix(y_label, n)
    beta_inv_t = invert(pairing_matrix(z_label, n)).transpose()

    raw_maps = []
    for w in hws:
        psi = transport_embedding(act, w, mzp, lam=lam)
        # Q[a][j] = P(t_a, psi(z'_j)) with a = (i, k) flattened
        q_rows = []
        for i in range(mx.dim):
            for k in range(my.dim):
                row = []
                for j in range(mzp.dim):
                    s = Fraction(0)
                    for p in range(mxp.dim):
                        bxv = bx[i, p]
                        if not bxv:
                            continue
                        base = p * myp.dim
                        for q in range(myp.dim):
                            byv = by[k, q]
                            if byv:
                                pv = psi[base + q, j]
                                if pv:
                                    s += bxv * byv * pv
                    row.append(s)
                q_rows.append(row)
        phi = beta_inv_t * Matrix(q_rows).transpose()
        raw_maps.append(phi)

    span = IncrementalSpan(mz.dim * mx.dim * my.dim)
    for phi in raw_maps:
        span.add([x for row in phi.data for x in row])
    basis = []
    for flat in span.rows:
        basis.append(Matrix([flat[r * mx.dim * my.dim:(r + 1) * mx.dim * my.dim] for r in range(mz.dim)]))
    return basis


def bilinear_equivariance_defects(phi, x_label, y_label, z_label, n, generators_only=True):
    """Exact equivariance defects of a map X (x) Y -> Z given as a matrix.

    Checks phi(g.x, y) + phi(x, g.y) = g.phi(x, y) on all basis pairs for
    the simple raising/lowering generators (which generate sl_n), or for
    the full basis when generators_only is False.
    """
    mx = catalog(n, x_label)
    my = catalog(n, y_label)
    mz = catalog(n, z_label)
    dx, dy, dz = mx.dim, my.dim, mz.dim
    gens = raising_indices(n) + lowering_indices(n)
    if not generators_only:
        gens = list(range(sl_dim(n)))
    table = [[[phi[r, i * dy + k] for r in range(dz)] for k in range(dy)] for i in range(dx)]
    defects = []
    for g in gens:
        xcols = mx._columns(g)
        ycols = my._columns(g)
        for i in range(dx):
            for k in range(dy):
                lhs = zero_vec(dz)
                for r, a in xcols[i]:
                    col = table[r][k]
                    for t in range(dz):
                        if col[t]:
                            lhs[t] += a * col[t]
                for r, a in ycols[k]:
                    col = table[i][r]
                    for t in range(dz):
                        if col[t]:
                            lhs[t] += a * col[t]
                rhs = mz.act_sparse(g, {t: v for t, v in enumerate(table[i][k]) if v})
                for t, v in rhs.items():
                    lhs[t] -= v
                if any(lhs):
                    defects.append((g, i, k))
    return defects


# ---------------------------------------------------------------------------
# the printed Hom lists
# ---------------------------------------------------------------------------

def _outer(u, v):
    return Matrix([[a * b for b in v] for a in u])


def _tr_scaled_id(m, n, denom):
    t = m.trace() / denom
    return Matrix([[m[i, j] - (t if i == j else 0) for j in range(n)] for i in range(n)])


class PaperHomEntry:
    """One line of the printed Hom lists: source pair, target, formulas.

    ``formulas`` holds one bilinear map per printed basis element (two for
    the adjoint-square line).  ``counted`` distinguishes the entries that
    make up the stated list length from repaired or relabeled variants
    that are verified but reported as notes.
    """

    def __init__(self, n, name, src, tgt, formulas, counted=True, note=None):
        self.n = n
        self.name = name
        self.src = src
        self.tgt = tgt
        self.formulas = formulas
        self.counted = counted
        self.note = note
        self.dim_expected = len(formulas)


class HomContext:
    """Identification maps used by the printed formulas."""

    def __init__(self, n):
        self.n = n
        if n == 3:
            self.f = identification(3, "f")       # Lam' -> V
            self.g = identification(3, "g")       # Lam  -> V'
            self.finv = self.f.inverse()
            self.ginv = self.g.inverse()
        else:
            self.f = identification(4, "f")       # Lam' -> Lam
            self.finv = self.f.inverse()

    def f_raw(self, elt):
        return self.f.apply_raw(elt)

    def finv_raw(self, elt):
        return self.finv.apply_raw(elt)

    def g_raw(self, elt):
        return self.g.apply_raw(elt)

    def ginv_raw(self, elt):
        return self.ginv.apply_raw(elt)


def paper_hom_entries(n, ctx=None):
    if ctx is None:
        ctx = HomContext(n)
    if n == 3:
        return _entries_n3(ctx)
    if n == 4:
        return _entries_n4(ctx)
    raise ValueError("n must be 3 or 4")


def _entries_n3(ctx):
    n = 3
    f, finv, g, ginv = ctx.f_raw, ctx.finv_raw, ctx.g_raw, ctx.ginv_raw
    E = []

    def add(name, src, tgt, formulas, counted=True, note=None):
        E.append(PaperHomEntry(n, name, src, tgt, formulas, counted=counted, note=note))

    add("g*g->g", ("adj", "adj"), "adj",
        [lambda x, y: x * y - y * x,
         lambda x, y: _tr_scaled_id(x * y + y * x, 3, 3)])
    add("Lam*Lam'->g", ("Lam", "Lam'"), "adj",
        [lambda a, b: _tr_scaled_id(a * b, 3, 3)])
    add("Lam*Lam->Lam'", ("Lam", "Lam"), "Lam'",
        [lambda a, b: _outer(g(a), g(b)) - _outer(g(b), g(a))],
        note="printed with f on lambda' arguments; realized through g on Lam arguments")
    add("Lam*Lam->S'", ("Lam", "Lam"), "S'",
        [lambda a, b: _outer(g(a), g(b)) + _outer(g(b), g(a))],
        note="printed with f on lambda' arguments; realized through g on Lam arguments")
    add("Lam'*Lam'->Lam", ("Lam'", "Lam'"), "Lam",
        [lambda a, b: _outer(f(a), f(b)) - _outer(f(b), f(a))],
        note="printed under Lam x Lam with g; realized on Lam' arguments through f")
    add("Lam'*Lam'->S", ("Lam'", "Lam'"), "S",
        [lambda a, b: _outer(f(a), f(b)) + _outer(f(b), f(a))],
        counted=False,
        note="supplementary repaired variant of the crosswired block; verified, not counted")
    add("S*Lam'->g", ("S", "Lam'"), "adj", [lambda s, b: s * b])
    add("S'*Lam->g", ("S'", "Lam"), "adj", [lambda sp, a: a * sp],
        note="printed as s'l, which is not equivariant for the stated actions; realized as l s'")
    add("S*S'->g", ("S", "S'"), "adj", [lambda s, sp: _tr_scaled_id(s * sp, 3, 3)])
    add("Lam'*g->Lam'", ("Lam'", "adj"), "Lam'",
        [lambda b, x: b * x + x.transpose() * b])
    add("S*Lam->Lam'", ("S", "Lam"), "Lam'",
        [lambda s, a: finv(s.apply(g(a)))])
    add("g*Lam->S", ("adj", "Lam"), "S",
        [lambda x, a: x * a - a * x.transpose()])
    add("g*Lam->Lam", ("adj", "Lam"), "Lam",
        [lambda x, a: x * a + a * x.transpose()])
    add("S'*Lam'->Lam", ("S'", "Lam'"), "Lam",
        [lambda sp, b: ginv(sp.apply(f(b)))])
    add("g*S->S", ("adj", "S"), "S",
        [lambda x, s: x * s + s * x.transpose()])
    add("S'*g->S'", ("S'", "adj"), "S'",
        [lambda sp, x: sp * x + x.transpose() * sp])
    add("Lam'*g->S'", ("Lam'", "adj"), "S'",
        [lambda b, x: b * x - x.transpose() * b])
    add("g*S->Lam", ("adj", "S"), "Lam",
        [lambda x, s: x * s - s * x.transpose()])
    add("S'*g->Lam'", ("S'", "adj"), "Lam'",
        [lambda sp, x: sp * x - x.transpose() * sp])
    add("g*g->T", ("adj", "adj"), "T",
        [lambda x, y: [(x * y).trace() / 3]])
    add("Lam*Lam'->T", ("Lam", "Lam'"), "T",
        [lambda a, b: [(a * b).trace() / 3]])
    add("S*S'->T", ("S", "S'"), "T",
        [lambda s, sp: [(s * sp).trace() / 3]])
    return E


def _entries_n4(ctx):
    n = 4
    f, finv = ctx.f_raw, ctx.finv_raw
    E = []

    def add(name, src, tgt, formulas, counted=True, note=None):
        E.append(PaperHomEntry(n, name, src, tgt, formulas, counted=counted, note=note))

    add("g*g->g", ("adj", "adj"), "adj",
        [lambda x, y: x * y - y * x,
         lambda x, y: _tr_scaled_id(x * y + y * x, 4, 4)])
    add("V*V'->g", ("V", "V'"), "adj",
        [lambda u, v: _tr_scaled_id(_outer(u, v), 4, 4)])
    add("S*Lam->g", ("S", "Lam"), "adj", [lambda s, a: s * finv(a)])
    add("S'*Lam->g", ("S'", "Lam"), "adj", [lambda sp, a: a * sp],
        note="printed as s'l, which is not equivariant for the stated actions; realized as l s'")
    add("Lam*Lam->g", ("Lam", "Lam"), "adj",
        [lambda a, b: _tr_scaled_id(a * finv(b), 4, 4)])
    add("S*S'->g", ("S", "S'"), "adj", [lambda s, sp: _tr_scaled_id(s * sp, 4, 4)])
    add("g*V->V", ("adj", "V"), "V", [lambda x, u: x.apply(u)])
    add("Lam*V'->V", ("Lam", "V'"), "V", [lambda a, v: a.apply(v)])
    add("S*V'->V", ("S", "V'"), "V", [lambda s, v: s.apply(v)])
    add("g*V'->V'", ("adj", "V'"), "V'", [lambda x, v: x.transpose().apply(v)])
    add("S'*V->V'", ("S'", "V"), "V'", [lambda sp, u: sp.apply(u)])
    add("Lam*V->V'", ("Lam", "V"), "V'", [lambda a, u: finv(a).apply(u)])
    add("g*S->S", ("adj", "S"), "S",
        [lambda x, s: x * s + s * x.transpose()])
    add("V*V->S", ("V", "V"), "S",
        [lambda u, v: _outer(u, v) + _outer(v, u)])
    add("g*Lam->S", ("adj", "Lam"), "S",
        [lambda x, a: x * a - a * x.transpose()])
    add("g*Lam->S'", ("adj", "Lam"), "S'",
        [lambda x, a: finv(a) * x - x.transpose() * finv(a)])
    add("S'*g->S'", ("S'", "adj"), "S'",
        [lambda sp, x: sp * x + x.transpose() * sp])
    add("V'*V'->S'", ("V'", "V'"), "S'",
        [lambda u, v: _outer(u, v) + _outer(v, u)])
    add("Lam'*g->S'", ("Lam'", "adj"), "S'",
        [lambda b, x: b * x - x.transpose() * b],
        counted=False,
        note="source Lam' is outside the stated label set; read as Hom(Lam x g, S') through f")
    add("Lam*g->S'", ("Lam", "adj"), "S'",
        [lambda a, x: finv(a) * x - x.transpose() * finv(a)],
        counted=False,
        note="the Lam' x g entry realized on Lam arguments through f; verified, not counted")
    add("g*Lam->Lam", ("adj", "Lam"), "Lam",
        [lambda x, a: x * a + a * x.transpose()])
    add("g*S->Lam", ("adj", "S"), "Lam",
        [lambda x, s: x * s - s * x.transpose()])
    add("V*V->Lam", ("V", "V"), "Lam",
        [lambda u, v: _outer(u, v) - _outer(v, u)])
    add("S'*g->Lam", ("S'", "adj"), "Lam",
        [lambda sp, x: f(sp * x - x.transpose() * sp)])
    add("V'*V'->Lam", ("V'", "V'"), "Lam",
        [lambda u, v: f(_outer(u, v) - _outer(v, u))])
    add("g*g->T", ("adj", "adj"), "T",
        [lambda x, y: [(x * y).trace() / 4]])
    add("V'*V->T", ("V'", "V"), "T",
        [lambda v, u: [sum(a * b for a, b in zip(u, v)) / 4]])
    add("S*S'->T", ("S", "S'"), "T",
        [lambda s, sp: [(s * sp).trace() / 4]])
    add("Lam*Lam->T", ("Lam", "Lam"), "T",
        [lambda a, b: [(a * finv(b)).trace() / 4]])
    return E


def realize_formula(entry, which=0):
    """Matrix of one printed bilinear map on the fixed module bases."""
    n = entry.n
    mx = catalog(n, entry.src[0])
    my = catalog(n, entry.src[1])
    mz = catalog(n, entry.tgt)
    fn = entry.formulas[which]
    cols = []
    for bx in mx.raw_basis:
        for by in my.raw_basis:
            val = fn(bx, by)
            cols.append(to_coords(entry.tgt, n, val))
    return Matrix(list(zip(*cols)))


def verify_paper_homs(n, entries=None):
    """Check every printed Hom entry: equivariant, nonzero, inside the
    solver's Hom space, and matching the stated dimension count."""
    if entries is None:
        entries = paper_hom_entries(n)
    results = []
    hom_cache = {}
    for entry in entries:
        key = (entry.src[0], entry.src[1], entry.tgt)
        if key not in hom_cache:
            hom_cache[key] = hom_space(*key, n)
        basis = hom_cache[key]
        mats = [realize_formula(entry, k) for k in range(len(entry.formulas))]
        equivariant = all(
            not bilinear_equivariance_defects(m, entry.src[0], entry.src[1], entry.tgt, n)
            for m in mats
        )
        nonzero = all(not m.is_zero() for m in mats)
        in_span = all(
            solve_span([b for b in basis], m) is not None for m in mats
        ) if basis else False
        if len(mats) > 1:
            span = IncrementalSpan(mats[0].rows * mats[0].cols)
            independent = all(span.add([x for row in m.data for x in row]) for m in mats)
        else:
            independent = True
        results.append(
            {
                "name": entry.name,
                "source": list(entry.src),
                "target": entry.tgt,
                "equivariant": equivariant,
                "nonzero": nonzero,
                "in_span": in_span,
                "independent": independent,
                "dim_expected": entry.dim_expected,
                "dim_computed": len(basis),
                "counted": entry.counted,
                "note": entry.note,
                "pass": bool(
                    equivariant
                    and nonzero
                    and in_span
                    and independent
                    and len(basis) == entry.dim_expected
                ),
            }
        )
    counted = [r for r in results if r["counted"]]
    return {
        "n": n,
        "entries": results,
        "counted_entries": len(counted),
        "pass": all(r["pass"] for r in results),
    }


def schur_consistency(n, labels=None):
    """dim Hom(X (x) Y, Z) against the Z-multiplicity of theta_component."""
    from .tensortheta import TABLE_LABELS, theta_component

    if labels is None:
        labels = TABLE_LABELS[n]
    rows = []
    for xl in labels:
        for yl in labels:
            mults = theta_component(xl, yl, n).canonical()
            for zl in canonical_theta_classes(n):
                dim_hom = hom_space_dim(xl, yl, zl, n)
                expected = mults.get(canonical_theta_label(n, zl), 0)
                rows.append(
                    {
                        "X": xl,
                        "Y": yl,
                        "Z": zl,
                        "dim_hom": dim_hom,
                        "multiplicity": expected,
                        "pass": dim_hom == expected,
                    }
                )
    return {"n": n, "rows": rows, "pass": all(r["pass"] for r in rows)}

