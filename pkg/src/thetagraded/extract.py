"""The paper's concrete examples and coordinate extraction.

An EmbeddedAlgebra is an ambient sl_N with a distinguished copy of sl_n
acting adjointly.  extract_coordinates identifies each isotypic piece
with (module) (x) (multiplicity space) via highest-weight transport,
picks the distinguished element 1 of A so that sl_n sits at coordinate
index 0, and solves the master bracket formulas for every product table.
The 1/2 coefficients of the master formulas fix all normalizations once
1 is fixed.
"""

from fractions import Fraction

from .brackets import components, master_rules, module_of
from .gmodules import (
    GModule,
    NonThetaConstituent,
    catalog,
    highest_weight_vectors,
    to_coords,
    transport_embedding,
    weight_decompose,
)
from .linalg import (
    IncrementalSpan,
    Matrix,
    coords_in_rows,
    invert,
    solve_span,
    vec_is_zero,
    zero_vec,
)
from .slcore import (
    Weight,
    matrix_unit,
    sl_basis,
    sl_coords,
    theta_label_weight,
)


class ExtractionError(Exception):
    pass


class EmbeddedAlgebra:
    """Ambient sl_N with an embedded grading copy of sl_n."""

    def __init__(self, n, big_n, embed_raw, name):
        self.n = n
        self.big_n = big_n
        self.name = name
        self.dim = big_n * big_n - 1
        self.ambient_basis = sl_basis(big_n)
        self.embedded = [embed_raw(x) for _, x in sl_basis(n)]
        self.module = self._restriction_module()

    def _restriction_module(self):
        acts = []
        for gmat in self.embedded:
            cols = [sl_coords(self.big_n, gmat * m - m * gmat) for _, m in self.ambient_basis]
            acts.append(Matrix(list(zip(*cols))))
        return GModule(self.n, self.dim, acts)

    def embedding_defects(self):
        """Pairs where iota([x,y]) != [iota(x), iota(y)]; empty iff a
        Lie algebra homomorphism (injectivity is clear from the blocks)."""
        from .slcore import sl_structure_constants
        sc = sl_structure_constants(self.n)
        bad = []
        for i, gi in enumerate(self.embedded):
            for j, gj in enumerate(self.embedded):
                lhs = gi * gj - gj * gi
                rhs = Matrix.zeros(self.big_n, self.big_n)
                for t, c in enumerate(sc[(i, j)]):
                    if c:
                        rhs = rhs + self.embedded[t].scale(c)
                if lhs != rhs:
                    bad.append((i, j))
        return bad

    def ambient_bracket_coords(self, u_coords, v_coords):
        """sl_N coordinates of [u, v] for sparse coordinate dicts."""
        mats = self.ambient_basis
        acc = {}
        for i, a in u_coords.items():
            mi = mats[i][1]
            for j, b in v_coords.items():
                mj = mats[j][1]
                c = a * b
                comm = mi * mj - mj * mi
                for t, x in enumerate(sl_coords(self.big_n, comm)):
                    if x:
                        acc[t] = acc.get(t, Fraction(0)) + c * x
        return {k: v for k, v in acc.items() if v}


def example_sl_nk(n, k):
    """sl_{n+k} with sl_n in the northwest corner."""
    if k < 1:
        raise ValueError("k must be >= 1")
    big = n + k

    def embed(x):
        rows = []
        for i in range(big):
            row = []
            for j in range(big):
                row.append(x[i, j] if i < n and j < n else Fraction(0))
            rows.append(row)
        return Matrix(rows)

    return EmbeddedAlgebra(n, big, embed, f"sl{n}+{k}")


def example_sl_2n1(n):
    """sl_{2n+1} with x |-> diag(x, -x^t, 0)."""
    big = 2 * n + 1

    def embed(x):
        rows = []
        for i in range(big):
            row = []
            for j in range(big):
                if i < n and j < n:
                    row.append(x[i, j])
                elif n <= i < 2 * n and n <= j < 2 * n:
                    row.append(-x[j - n, i - n])
                else:
                    row.append(Fraction(0))
            rows.append(row)
        return Matrix(rows)

    return EmbeddedAlgebra(n, big, embed, f"sl{2 * n + 1}")


class CoordinateData:
    """Dimensions, distinguished element and product tables.

    products maps (X, Y, Z, kind) to a nested table T[j][l] = vector of
    length dims[Z]: the Z-coordinates of the product of the j-th X basis
    element with the l-th Y basis element.
    """

    def __init__(self, n, dims, products, one_index=0):
        self.n = n
        self.dims = dict(dims)
        self.products = products
        self.one_index = one_index

    def table(self, key):
        return self.products[key]

    def product(self, key, j, l):
        t = self.products.get(key)
        if t is None:
            return None
        return t[j][l]

    def copy(self):
        prods = {
            k: [[list(v) for v in row] for row in tab] for k, tab in self.products.items()
        }
        return CoordinateData(self.n, dict(self.dims), prods, self.one_index)


class Extraction:
    """CoordinateData plus the embedding data needed for round trips."""

    def __init__(self, emb, data, coord_bases, embeddings, basis_meta, bmat, binv):
        self.emb = emb
        self.data = data
        self.coord_bases = coord_bases
        self.embeddings = embeddings
        self.basis_meta = basis_meta
        self.bmat = bmat
        self.binv = binv

    def basis_column_sparse(self, idx):
        col = self.bmat.col(idx)
        return {i: v for i, v in enumerate(col) if v}


def extract_coordinates(emb):
    """Coordinate data of an embedded example; see the module docstring."""
    n = emb.n
    m = emb.module
    wd = weight_decompose(m)
    layout = components(n)

    coord_bases = {}
    embeddings = {}
    for label, key in layout:
        lam = theta_label_weight(n, label)
        hw = highest_weight_vectors(m, lam, wd=wd)
        vecs = hw.vectors()
        if key == "A":
            iota = _embedding_vector(emb)
            if not hw.contains(iota):
                raise ExtractionError("the embedded copy is not a highest weight line of A")
            sift = IncrementalSpan(m.dim)
            sift.add(iota)
            ordered = [iota]
            for v in vecs:
                if sift.add(v):
                    ordered.append(v)
            vecs = ordered
        coord_bases[key] = vecs
        if key == "D":
            embeddings[key] = [Matrix.column(v) for v in vecs]
        else:
            zmod = catalog(n, label)
            embeddings[key] = [transport_embedding(m, v, zmod, lam=lam) for v in vecs]

    total = sum(
        len(coord_bases[key]) * catalog(n, label).dim for label, key in layout
    )
    if total != m.dim:
        # some constituent is outside Theta_n^+; report the worst offender
        from .gmodules import isotypic_decompose
        isotypic_decompose(m, build_components=False)
        raise ExtractionError("component dimensions do not fill the ambient algebra")

    basis_meta = []
    cols = []
    for label, key in layout:
        dim_mod = catalog(n, label).dim
        for j, phi in enumerate(embeddings[key]):
            for i in range(dim_mod):
                basis_meta.append((key, j, i))
                cols.append(phi.col(i))
    bmat = Matrix(list(zip(*cols)))
    binv = invert(bmat)

    dims = {key: len(coord_bases[key]) for _, key in layout}
    products = _solve_products(emb, n, layout, embeddings, basis_meta, binv, dims)
    data = CoordinateData(n, dims, products, one_index=0)
    return Extraction(emb, data, coord_bases, embeddings, basis_meta, bmat, binv)


def _embedding_vector(emb):
    """The embedded copy as a vector of Hom(adj, L): its highest weight
    image iota(E_1n) in ambient coordinates."""
    n = emb.n
    hw_idx = [name for name, _ in sl_basis(n)].index(f"E_1_{n}")
    return sl_coords(emb.big_n, emb.embedded[hw_idx])


def _block_offsets(n, layout, dims):
    offs = {}
    pos = 0
    for label, key in layout:
        dim_mod = catalog(n, label).dim
        for j in range(dims[key]):
            offs[(key, j)] = pos
            pos += dim_mod
    return offs, pos


def _solve_products(emb, n, layout, embeddings, basis_meta, binv, dims):
    rules = master_rules(n)
    raws = {key: catalog(n, label).raw_basis for label, key in layout}
    mod_dims = {key: catalog(n, label).dim for label, key in layout}
    offsets, _ = _block_offsets(n, layout, dims)

    products = {}
    for (k1, k2), rule in rules.items():
        p, q = dims[k1], dims[k2]
        terms = [t for t in rule.terms if dims[t.target] > 0]
        for t in rule.terms:
            key = t.prod_key
            products[key] = [[zero_vec(dims[t.target]) for _ in range(q)] for _ in range(p)]
        if p == 0 or q == 0 or not terms:
            continue

        d1, d2 = mod_dims[k1], mod_dims[k2]
        # matrix-side coordinate vectors per basis pair, shared over (j, l)
        zc = {}
        for t in terms:
            tl = module_of(n, t.target)
            zc[t.prod_key] = [
                [
                    [x * t.scale for x in to_coords(tl, n, t.mat_fn(raws[k1][i], raws[k2][k]))]
                    for k in range(d2)
                ]
                for i in range(d1)
            ]
        by_target = {}
        for t in terms:
            by_target.setdefault(t.target, []).append(t)

        for j in range(p):
            for l in range(q):
                solved = _solve_pair(
                    emb, n, (k1, k2), by_target, zc, embeddings, offsets, binv,
                    mod_dims, dims, j, l,
                )
                for prod_key, vecs in solved.items():
                    products[prod_key][j][l] = vecs
    return products


def _solve_pair(emb, n, src, by_target, zc, embeddings, offsets, binv, mod_dims, dims, j, l):
    k1, k2 = src
    d1, d2 = mod_dims[k1], mod_dims[k2]
    phi1 = embeddings[k1][j]
    phi2 = embeddings[k2][l]

    design = {z: [] for z in by_target}       # rows over stacked (i, k)
    rhs = {z: [] for z in by_target}          # per m: stacked right sides
    need = {z: len(ts) for z, ts in by_target.items()}
    done = {z: False for z in by_target}

    for i in range(d1):
        if all(done.values()):
            break
        u = {r: v for r, v in enumerate(phi1.col(i)) if v}
        for k in range(d2):
            if all(done.values()):
                break
            v = {r: vv for r, vv in enumerate(phi2.col(k)) if vv}
            r_amb = emb.ambient_bracket_coords(u, v)
            r_comp = _binv_apply_sparse(binv, r_amb)
            for z, ts in by_target.items():
                if done[z]:
                    continue
                dz = mod_dims[z]
                for row_i in range(dz):
                    design[z].append([zc[t.prod_key][i][k][row_i] for t in ts])
                for mcopy in range(dims[z]):
                    off = offsets[(z, mcopy)]
                    block = [r_comp.get(off + r, Fraction(0)) for r in range(dz)]
                    if len(rhs[z]) <= mcopy:
                        rhs[z].append([])
                    rhs[z][mcopy].extend(block)
                cols = list(zip(*design[z]))
                span = IncrementalSpan(len(design[z]))
                rank = sum(1 for c in cols if span.add(list(c)))
                if rank == need[z]:
                    done[z] = True

    solved = {}
    for z, ts in by_target.items():
        if not done[z]:
            raise ExtractionError(
                f"underdetermined products for {src} -> {z}; data is not master-formula shaped"
            )
        vecs_per_term = [zero_vec(dims[z]) for _ in ts]
        cols = [list(c) for c in zip(*design[z])]
        for mcopy in range(dims[z]):
            sol = solve_span(cols, rhs[z][mcopy])
            if sol is None:
                raise ExtractionError(f"inconsistent bracket for {src} -> {z}")
            for t_idx, val in enumerate(sol):
                vecs_per_term[t_idx][mcopy] = val
        for t, vec in zip(ts, vecs_per_term):
            solved[t.prod_key] = vec
    # repackage: one vector per prod_key
    return solved


def _binv_apply_sparse(binv, svec):
    out = {}
    for c, val in svec.items():
        for r in range(binv.rows):
            x = binv[r, c]
            if x:
                out[r] = out.get(r, Fraction(0)) + x * val
    return {k: v for k, v in out.items() if v}
