"""Catalog of standard sl_n-modules and decomposition machinery.

Modules are given by one exact action matrix per sl_n basis element.
Matrix-shaped modules (adj, S, S', Lam, Lam') and vector-shaped ones
(V, V') carry fixed basis conventions so that every serialized matrix
is pinned down:

    V   : e_1 .. e_n                      x.v  = x v
    V'  : e_1 .. e_n                      x.v' = -x^t v'
    S   : E_11..E_nn, then E_ij+E_ji (i<j)  x.s  = x s + s x^t
    S'  : same basis as S                 x.s' = -s' x - x^t s'
    Lam : E_ij-E_ji (i<j)                 x.l  = x l + l x^t
    Lam': same basis as Lam               x.l' = -l' x - x^t l'
    adj : the sl_basis itself             ad x
    T   : one basis vector, zero action
"""

from fractions import Fraction
from functools import lru_cache

from .linalg import (
    IncrementalSpan,
    Matrix,
    Subspace,
    coords_in_rows,
    kernel,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)
from .characters import peel_character
from .slcore import (
    Weight,
    canonical_theta_label,
    canonical_theta_classes,
    sl_basis,
    sl_basis_names,
    sl_coords,
    sl_dim,
    sl_structure_constants,
    theta_label_dim,
    theta_label_weight,
    theta_weight_to_label,
)

CATALOG_LABELS = ("adj", "V", "V'", "S", "S'", "Lam", "Lam'", "T")


class NonIntegralWeight(Exception):
    """An H_i eigenvalue was not an integer: not a weight module."""


class NonThetaConstituent(Exception):
    """A highest weight outside Theta_n^+ was found."""

    def __init__(self, weight):
        self.weight = weight
        super().__init__(f"constituent with highest weight {weight} is outside Theta_n^+")


class GModule:
    """Finite-dimensional sl_n-module with explicit action matrices."""

    def __init__(self, n, dim, actions, label=None, raw_basis=None):
        self.n = n
        self.dim = dim
        self.actions = tuple(actions)
        self.label = label
        self.raw_basis = raw_basis
        if len(self.actions) != sl_dim(n):
            raise ValueError("one action matrix per sl_n basis element required")
        for a in self.actions:
            if a.shape() != (dim, dim):
                raise ValueError("action matrix has wrong shape")
        self._sparse_cols = {}

    def act_vec(self, idx, vec):
        return self.actions[idx].apply(vec)

    def act_sparse(self, idx, svec):
        """Action on a sparse vector {index: value}; returns a sparse dict."""
        cols = self._columns(idx)
        out = {}
        for k, v in svec.items():
            for r, a in cols[k]:
                out[r] = out.get(r, Fraction(0)) + v * a
        return {k: v for k, v in out.items() if v}

    def _columns(self, idx):
        if idx not in self._sparse_cols:
            a = self.actions[idx]
            self._sparse_cols[idx] = [
                [(r, a[r, c]) for r in range(self.dim) if a[r, c] != 0]
                for c in range(self.dim)
            ]
        return self._sparse_cols[idx]

    def basis_weights(self):
        """Weight of each basis vector, when all H actions are diagonal."""
        n = self.n
        names = sl_basis_names(n)
        hidx = [names.index(f"H_{i}") for i in range(1, n)]
        for i in hidx:
            a = self.actions[i]
            for r in range(self.dim):
                for c in range(self.dim):
                    if r != c and a[r, c] != 0:
                        return None
        out = []
        for k in range(self.dim):
            hv = []
            for i in hidx:
                v = self.actions[i][k, k]
                if v.denominator != 1:
                    raise NonIntegralWeight(f"H eigenvalue {v} is not an integer")
                hv.append(int(v))
            out.append(weight_from_h_values(n, hv))
        return out

    def weight_multiset(self):
        ws = self.basis_weights()
        if ws is None:
            wd = weight_decompose(self)
            return {w: s.dim for w, s in wd.spaces.items()}
        out = {}
        for w in ws:
            out[w] = out.get(w, 0) + 1
        return out


def weight_from_h_values(n, hv):
    """Weight with given values on H_1..H_{n-1} (epsilon coords, last = 0)."""
    coords = [0] * n
    for i in range(n - 2, -1, -1):
        coords[i] = coords[i + 1] + hv[i]
    return Weight(n, coords)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def _sym_basis(n):
    from .slcore import matrix_unit
    out = [matrix_unit(n, i, i) for i in range(1, n + 1)]
    out += [
        matrix_unit(n, i, j) + matrix_unit(n, j, i)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    return out


def _skew_basis(n):
    from .slcore import matrix_unit
    return [
        matrix_unit(n, i, j) - matrix_unit(n, j, i)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]


def raw_action(label, x, elt):
    """Module action of x in sl_n on a raw element."""
    if label == "adj":
        return x * elt - elt * x
    if label == "V":
        return x.apply(list(elt))
    if label == "V'":
        return vec_scale(x.transpose().apply(list(elt)), -1)
    xt = x.transpose()
    if label in ("S", "Lam"):
        return x * elt + elt * xt
    if label in ("S'", "Lam'"):
        return -(elt * x) - xt * elt
    if label == "T":
        return [Fraction(0)]
    raise ValueError(f"unknown label {label!r}")


def to_coords(label, n, elt):
    """Coordinates of a raw element in the fixed basis of its module."""
    if label == "adj":
        return sl_coords(n, elt)
    if label in ("V", "V'"):
        return list(elt)
    if label in ("S", "S'"):
        coords = [elt[i, i] for i in range(n)]
        coords += [elt[i, j] for i in range(n) for j in range(i + 1, n)]
        return coords
    if label in ("Lam", "Lam'"):
        return [elt[i, j] for i in range(n) for j in range(i + 1, n)]
    if label == "T":
        return list(elt)
    raise ValueError(f"unknown label {label!r}")


def from_coords(label, n, coords):
    raw = catalog_raw_basis(label, n)
    if label in ("V", "V'", "T"):
        return list(coords)
    m = Matrix.zeros(n, n)
    for c, b in zip(coords, raw):
        if c:
            m = m + b.scale(c)
    return m


def catalog_raw_basis(label, n):
    if label == "adj":
        return [m for _, m in sl_basis(n)]
    if label in ("V", "V'"):
        return [[Fraction(1) if k == i else Fraction(0) for k in range(n)] for i in range(n)]
    if label in ("S", "S'"):
        return _sym_basis(n)
    if label in ("Lam", "Lam'"):
        return _skew_basis(n)
    if label == "T":
        return [[Fraction(1)]]
    raise ValueError(f"unknown label {label!r}")


@lru_cache(maxsize=None)
def catalog(n, label):
    """The standard module for a Theta label, with its fixed basis."""
    if label not in CATALOG_LABELS:
        raise ValueError(f"unknown label {label!r}")
    raw = catalog_raw_basis(label, n)
    dim = len(raw)
    actions = []
    for _, x in sl_basis(n):
        cols = [to_coords(label, n, raw_action(label, x, b)) for b in raw]
        actions.append(Matrix(list(zip(*cols))))
    return GModule(n, dim, actions, label=label, raw_basis=raw)


def representation_residual(m, pairs="all"):
    """Exact defect of the representation property.

    Checks action([b_i, b_j]) - [action(b_i), action(b_j)] over basis
    pairs; 'generators' restricts i to the simple raising/lowering set,
    which already forces the property everywhere.
    """
    n = m.n
    names = sl_basis_names(n)
    sc = sl_structure_constants(n)
    if pairs == "generators":
        gens = [names.index(f"E_{i}_{i+1}") for i in range(1, n)]
        gens += [names.index(f"E_{i+1}_{i}") for i in range(1, n)]
        first = gens
    else:
        first = range(len(names))
    worst = []
    for i in first:
        for j in range(len(names)):
            if i == j:
                continue
            coords = sc[(i, j)]
            for k in range(m.dim):
                ek = {k: Fraction(1)}
                lhs = {}
                for t, c in enumerate(coords):
                    if c:
                        for r, v in m.act_sparse(t, ek).items():
                            lhs[r] = lhs.get(r, Fraction(0)) + c * v
                rhs = m.act_sparse(i, m.act_sparse(j, ek))
                for r, v in m.act_sparse(j, m.act_sparse(i, ek)).items():
                    rhs[r] = rhs.get(r, Fraction(0)) - v
                for r in set(lhs) | set(rhs):
                    d = lhs.get(r, Fraction(0)) - rhs.get(r, Fraction(0))
                    if d:
                        worst.append(((i, j, k, r), d))
    return worst


def is_representation(m, pairs="all"):
    return not representation_residual(m, pairs=pairs)


# ---------------------------------------------------------------------------
# weight machinery
# ---------------------------------------------------------------------------

class WeightDecomposition:
    def __init__(self, module, spaces):
        self.module = module
        self.spaces = spaces  # Weight -> Subspace

    def total_dim(self):
        return sum(s.dim for s in self.spaces.values())


def weight_decompose(m):
    """Simultaneous H_i eigenspace decomposition with integer weights."""
    ws = m.basis_weights()
    if ws is not None:
        buckets = {}
        for k, w in enumerate(ws):
            buckets.setdefault(w, []).append(k)
        spaces = {}
        for w, idxs in buckets.items():
            rows = []
            for k in idxs:
                v = zero_vec(m.dim)
                v[k] = Fraction(1)
                rows.append(v)
            spaces[w] = Subspace(m.dim, rows)
        return WeightDecomposition(m, spaces)

    n = m.n
    names = sl_basis_names(n)
    hidx = [names.index(f"H_{i}") for i in range(1, n)]
    full = [
        [Fraction(1) if c == r else Fraction(0) for c in range(m.dim)]
        for r in range(m.dim)
    ]
    blocks = [(full, [])]
    for hi in hidx:
        refined = []
        for basis, tags in blocks:
            op_rows = []
            for b in basis:
                img = m.act_vec(hi, b)
                cc = coords_in_rows(basis, img)
                if cc is None:
                    raise NonIntegralWeight("H action does not preserve the block")
                op_rows.append(cc)
            op = Matrix(list(zip(*op_rows)))  # columns are images
            bound = 0
            for r in range(op.rows):
                s = sum(abs(op[r, c]) for c in range(op.cols))
                bound = max(bound, s)
            bound = int(bound) + 1
            found = 0
            for ev in range(-bound, bound + 1):
                shifted = Matrix(
                    [
                        [op[r, c] - (ev if r == c else 0) for c in range(op.cols)]
                        for r in range(op.rows)
                    ]
                )
                kern = kernel(shifted)
                if kern.dim == 0:
                    continue
                lifted = []
                for coeffs in kern.vectors():
                    v = zero_vec(m.dim)
                    for c, b in zip(coeffs, basis):
                        if c:
                            v = vec_add(v, vec_scale(b, c))
                    lifted.append(v)
                sub = Subspace(m.dim, lifted)
                refined.append((sub.vectors(), tags + [ev]))
                found += sub.dim
            if found != len(basis):
                raise NonIntegralWeight("non-integral H eigenvalue detected")
        blocks = refined
    spaces = {}
    for basis, tags in blocks:
        w = weight_from_h_values(n, tags)
        sub = Subspace(m.dim, basis)
        if w in spaces:
            sub = spaces[w].sum(sub)
        spaces[w] = sub
    return WeightDecomposition(m, spaces)


def raising_indices(n):
    names = sl_basis_names(n)
    return [names.index(f"E_{i}_{i+1}") for i in range(1, n)]


def lowering_indices(n):
    names = sl_basis_names(n)
    return [names.index(f"E_{i+1}_{i}") for i in range(1, n)]


def highest_weight_vectors(m, lam, wd=None):
    """Vectors of weight lam annihilated by all simple raising actions."""
    if wd is None:
        wd = weight_decompose(m)
    space = wd.spaces.get(lam)
    if space is None or space.dim == 0:
        return Subspace(m.dim, [])
    basis = space.vectors()
    rows = []
    for ridx in raising_indices(m.n):
        images = [m.act_vec(ridx, b) for b in basis]
        for coord in range(m.dim):
            rows.append([img[coord] for img in images])
    coeff_kernel = kernel(Matrix(rows))
    lifted = []
    for coeffs in coeff_kernel.vectors():
        v = zero_vec(m.dim)
        for c, b in zip(coeffs, basis):
            if c:
                v = vec_add(v, vec_scale(b, c))
        lifted.append(v)
    return Subspace(m.dim, lifted)


def lowering_orbit(act, start):
    """Spanning basis of U(n^-) . start, with the lowering words used.

    Returns (vectors, words); deterministic BFS with ops in fixed order.
    The adopted words generate the same basis in any isomorphic copy of
    the highest weight module, which is what transport relies on.
    """
    span = IncrementalSpan(act.dim)
    span.add(start)
    vectors = [list(start)]
    words = [()]
    queue = [(start, ())]
    lows = lowering_indices(act.n)
    while queue:
        vec, word = queue.pop(0)
        for li in lows:
            img = act.act_vec(li, vec)
            if vec_is_zero(img):
                continue
            if span.add(img):
                vectors.append(img)
                words.append(word + (li,))
                queue.append((img, word + (li,)))
    return vectors, words


def transport_embedding(act, hwvec, zmod, lam=None):
    """Equivariant embedding of zmod into the module behind ``act``.

    ``hwvec`` must be a highest weight vector of weight lam = hw(zmod).
    Returns the (act.dim x zmod.dim) matrix of the unique equivariant
    map sending the highest weight vector of zmod to hwvec.
    """
    if lam is None:
        lam = module_highest_weight(zmod)
    vectors, words = lowering_orbit(act, hwvec)
    if len(vectors) != zmod.dim:
        raise ArithmeticError(
            f"orbit of highest weight vector has dim {len(vectors)}, expected {zmod.dim}"
        )
    z_hw = highest_weight_vectors(zmod, lam).vectors()
    if len(z_hw) != 1:
        raise ArithmeticError("module has no unique highest weight line")
    z_vecs = []
    for word in words:
        v = z_hw[0]
        for li in word:
            v = zmod.act_vec(li, v)
        z_vecs.append(v)
    cols = []
    for k in range(zmod.dim):
        e = zero_vec(zmod.dim)
        e[k] = Fraction(1)
        coeffs = coords_in_rows(z_vecs, e)
        if coeffs is None:
            raise ArithmeticError("transport images do not span the module")
        col = zero_vec(act.dim)
        for c, w in zip(coeffs, vectors):
            if c:
                col = vec_add(col, vec_scale(w, c))
        cols.append(col)
    return Matrix(list(zip(*cols)))


def module_highest_weight(m):
    if m.label is not None:
        return theta_label_weight(m.n, m.label)
    ws = m.weight_multiset()
    return max(ws, key=lambda w: (w.height_key(), w.coords))


# ---------------------------------------------------------------------------
# isotypic decomposition
# ---------------------------------------------------------------------------

class IsotypicDecomposition:
    """Multiplicities, highest weight vectors and components per label."""

    def __init__(self, module, parts, remainder):
        self.module = module
        self.parts = parts  # label -> dict(mult, hw_vectors, component)
        self.remainder = remainder

    def multiplicities(self):
        return {lab: p["mult"] for lab, p in self.parts.items() if p["mult"]}

    def check_dimension(self):
        total = sum(
            p["mult"] * theta_label_dim(self.module.n, lab)
            for lab, p in self.parts.items()
        )
        return total + self.remainder.dim == self.module.dim


def isotypic_decompose(m, build_components=True):
    """Decompose a completely reducible module with Theta constituents.

    Multiplicities come from highest weight vector counts and are
    cross-checked against character peeling; a highest weight outside
    Theta_n^+ raises NonThetaConstituent with the offending weight.
    """
    n = m.n
    wd = weight_decompose(m)
    label_of = theta_weight_to_label(n)
    peeled = dict(peel_character(n, {w: s.dim for w, s in wd.spaces.items()}))

    parts = {}
    for lab in canonical_theta_classes(n):
        lam = theta_label_weight(n, lab)
        hw = highest_weight_vectors(m, lam, wd=wd)
        if hw.dim != peeled.get(lam, 0):
            raise ArithmeticError("peeling and highest weight count disagree")
        comp = None
        if build_components:
            rows = []
            for vec in hw.vectors():
                orbit, _ = lowering_orbit(m, vec)
                rows.extend(orbit)
            comp = Subspace(m.dim, rows)
            if comp.dim != hw.dim * theta_label_dim(n, lab):
                raise ArithmeticError("component dimension mismatch")
        parts[lab] = {"mult": hw.dim, "hw_vectors": hw, "component": comp}

    for lam, mult in peeled.items():
        if mult and lam not in label_of:
            raise NonThetaConstituent(lam)
    remainder = Subspace(m.dim, [])
    return IsotypicDecomposition(m, parts, remainder)


# ---------------------------------------------------------------------------
# identifications f, g
# ---------------------------------------------------------------------------

class Identification:
    """Equivariant isomorphism between two catalog modules."""

    def __init__(self, n, name, source, target, iso):
        self.n = n
        self.name = name
        self.source = source
        self.target = target
        self.iso = iso

    def inverse(self):
        from .linalg import invert
        return Identification(self.n, self.name + "^-1", self.target, self.source, invert(self.iso))

    def apply_raw(self, elt):
        src = catalog(self.n, self.source)
        coords = to_coords(self.source, self.n, elt)
        out = self.iso.apply(coords)
        return from_coords(self.target, self.n, out)


def module_hom_space(msrc, mtgt):
    """Basis of equivariant linear maps msrc -> mtgt (dense solve).

    Fine for catalog-sized modules; equivariance is imposed for the
    simple raising and lowering generators, which suffices.
    """
    ds, dt = msrc.dim, mtgt.dim
    gens = raising_indices(msrc.n) + lowering_indices(msrc.n)
    rows = []
    for g in gens:
        a_s = msrc.actions[g]
        a_t = mtgt.actions[g]
        for i in range(dt):
            for j in range(ds):
                row = zero_vec(dt * ds)
                for k in range(dt):
                    if a_t[i, k]:
                        row[k * ds + j] += a_t[i, k]
                for k in range(ds):
                    if a_s[k, j]:
                        row[i * ds + k] -= a_s[k, j]
                rows.append(row)
    kern = kernel(Matrix(rows))
    mats = []
    for v in kern.vectors():
        mats.append(Matrix([v[i * ds:(i + 1) * ds] for i in range(dt)]))
    return mats


@lru_cache(maxsize=None)
def identification(n, which):
    """The paper's identification maps, solver-derived and normalized.

    n=3: f : Lam' -> V   with f(highest weight vector of Lam') = e_1
         g : Lam  -> V'  with g(E_12 - E_21) = e_3
    n=4: f : Lam' -> Lam with f(E_34 - E_43) = E_12 - E_21
    """
    from .slcore import matrix_unit

    if n == 3 and which == "f":
        src_lab, tgt_lab = "Lam'", "V"
        anchor_src = matrix_unit(3, 2, 3) - matrix_unit(3, 3, 2)
        anchor_tgt = [Fraction(1), Fraction(0), Fraction(0)]
    elif n == 3 and which == "g":
        src_lab, tgt_lab = "Lam", "V'"
        anchor_src = matrix_unit(3, 1, 2) - matrix_unit(3, 2, 1)
        anchor_tgt = [Fraction(0), Fraction(0), Fraction(1)]
    elif n == 4 and which == "f":
        src_lab, tgt_lab = "Lam'", "Lam"
        anchor_src = matrix_unit(4, 3, 4) - matrix_unit(4, 4, 3)
        anchor_tgt = matrix_unit(4, 1, 2) - matrix_unit(4, 2, 1)
    else:
        raise ValueError(f"identification {which!r} is not defined for n={n}")

    msrc = catalog(n, src_lab)
    mtgt = catalog(n, tgt_lab)
    homs = module_hom_space(msrc, mtgt)
    if len(homs) != 1:
        raise ArithmeticError(f"Hom({src_lab},{tgt_lab}) has dim {len(homs)}, expected 1")
    iso = homs[0]
    src_coords = to_coords(src_lab, n, anchor_src)
    tgt_coords = to_coords(tgt_lab, n, anchor_tgt)
    img = iso.apply(src_coords)
    scale = None
    for a, b in zip(img, tgt_coords):
        if b:
            scale = a / b
            break
    if not scale:
        raise ArithmeticError("anchor vector maps to zero")
    for a, b in zip(img, tgt_coords):
        if a != scale * b:
            raise ArithmeticError("anchor image is not proportional to the stated one")
    iso = iso.scale(Fraction(1) / scale)
    return Identification(n, which, src_lab, tgt_lab, iso)


def equivariance_residual(phi, msrc, mtgt):
    """phi . act_src(b) - act_tgt(b) . phi over all sl basis elements."""
    bad = []
    for idx in range(sl_dim(msrc.n)):
        lhs = phi * msrc.actions[idx]
        rhs = mtgt.actions[idx] * phi
        if lhs != rhs:
            bad.append(idx)
    return bad
