"""The grading algebra sl_n (n = 3, 4): basis, products, roots, Theta sets.

Basis order is fixed once and for all: off-diagonal matrix units E_ij
(i != j, lexicographic) followed by H_i = E_ii - E_{i+1,i+1}.  Structure
constants, JSON files and golden tests all depend on this order.
"""

from fractions import Fraction
from functools import lru_cache

from .linalg import Matrix, Rational

SL_NS = (3, 4)


def matrix_unit(n, i, j):
    """E_ij as an n x n Matrix (1-based indices)."""
    return Matrix(
        [[Fraction(1) if (r == i - 1 and c == j - 1) else Fraction(0) for c in range(n)]
         for r in range(n)]
    )


def sl_basis_names(n):
    names = [f"E_{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    names += [f"H_{i}" for i in range(1, n)]
    return names


@lru_cache(maxsize=None)
def _sl_basis_cached(n):
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                out.append((f"E_{i}_{j}", matrix_unit(n, i, j)))
    for i in range(1, n):
        out.append((f"H_{i}", matrix_unit(n, i, i) - matrix_unit(n, i + 1, i + 1)))
    return tuple(out)


def sl_basis(n):
    """Ordered basis of sl_n: [(name, Matrix), ...]."""
    return list(_sl_basis_cached(n))


def sl_dim(n):
    return n * n - 1


def bracket(x, y):
    """[x, y] = xy - yx."""
    return x * y - y * x


def diamond(x, y):
    """x <> y = xy + yx."""
    return x * y + y * x


def trace_form(x, y, n):
    """(x | y) = (1/n) tr(xy)."""
    return (x * y).trace() / n


def circ(x, y, n):
    """x o y = xy + yx - (2/n) tr(xy) I; always traceless."""
    t = (x * y).trace()
    d = diamond(x, y)
    c = Fraction(2, n) * t
    return Matrix(
        [[d[i, j] - (c if i == j else 0) for j in range(n)] for i in range(n)]
    )


def sl_coords(n, m):
    """Coordinates of a traceless n x n matrix in the sl_basis order.

    Off-diagonal entries are read directly; the diagonal is expanded on
    the H_i via partial sums (valid exactly because tr(m) = 0).
    """
    if m.trace() != 0:
        raise ValueError("matrix is not traceless")
    coords = []
    for i in range(n):
        for j in range(n):
            if i != j:
                coords.append(m[i, j])
    s = Fraction(0)
    for i in range(n - 1):
        s += m[i, i]
        coords.append(s)
    return coords


def sl_from_coords(n, coords):
    basis = sl_basis(n)
    m = Matrix.zeros(n, n)
    for c, (_, b) in zip(coords, basis):
        if c:
            m = m + b.scale(c)
    return m


@lru_cache(maxsize=None)
def _sl_structure_cached(n):
    basis = sl_basis(n)
    out = {}
    for i, (_, x) in enumerate(basis):
        for j, (_, y) in enumerate(basis):
            out[(i, j)] = tuple(sl_coords(n, bracket(x, y)))
    return out


def sl_structure_constants(n):
    """[b_i, b_j] expanded in the fixed basis, as a dict (i, j) -> coord list."""
    return {k: list(v) for k, v in _sl_structure_cached(n).items()}


class Weight:
    """Integral weight of sl_n in epsilon coordinates.

    Stored in the canonical representative mod (1,...,1): coordinates are
    shifted so the minimum is 0, which makes equality well defined.
    Evaluation against H_i is representative independent.
    """

    __slots__ = ("n", "coords")

    def __init__(self, n, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != n:
            raise ValueError("wrong number of coordinates")
        lo = min(coords) if coords else 0
        self.n = n
        self.coords = tuple(c - lo for c in coords)

    def eval_h(self, i):
        """Value on the coroot H_i (1-based)."""
        return self.coords[i - 1] - self.coords[i]

    def h_values(self):
        return tuple(self.eval_h(i) for i in range(1, self.n))

    def is_dominant(self):
        return all(self.eval_h(i) >= 0 for i in range(1, self.n))

    def is_zero(self):
        return all(c == self.coords[0] for c in self.coords)

    def __add__(self, other):
        return Weight(self.n, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return Weight(self.n, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Weight(self.n, [-c for c in self.coords])

    def __eq__(self, other):
        return isinstance(other, Weight) and self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.n, self.coords))

    def __repr__(self):
        return f"Weight{self.coords}"

    def projected(self):
        """Sum-zero representative (Fractions), for inner products."""
        mean = Fraction(sum(self.coords), self.n)
        return tuple(Fraction(c) - mean for c in self.coords)

    def height_key(self):
        """Strictly decreases when subtracting a positive root; used to
        order dominant weights for character peeling."""
        p = self.projected()
        rho = rho_vector(self.n)
        return sum(a * b for a, b in zip(p, rho))


def eps(n, i):
    """epsilon_i as a Weight (1-based)."""
    return Weight(n, [1 if k == i - 1 else 0 for k in range(n)])


def rho_vector(n):
    """Half sum of positive roots of A_{n-1}, in sum-zero coordinates."""
    mean = Fraction(n - 1, 2)
    return tuple(Fraction(n - 1 - k) - mean for k in range(n))


def simple_roots(n):
    return [eps(n, i) - eps(n, i + 1) for i in range(1, n)]


def root_system(n):
    """All n(n-1) roots of A_{n-1}; returns [(Weight, is_simple), ...]."""
    if n not in SL_NS:
        raise ValueError("n must be 3 or 4")
    simples = set(simple_roots(n))
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                w = eps(n, i) - eps(n, j)
                out.append((w, w in simples))
    return out


# Theta_n^+ labels.  For n = 3 the classes omega_1 and omega_2 each carry
# two names (V = Lam', V' = Lam); for n = 4 the single class omega_2
# carries Lam and Lam'.  The first listed name per class is canonical.
THETA_LABELS = ("adj", "V", "V'", "S", "S'", "Lam", "Lam'", "T")


def fundamental_weight(n, k):
    """omega_k = eps_1 + ... + eps_k."""
    return Weight(n, [1 if i < k else 0 for i in range(n)])


def theta_label_weight(n, label):
    w = fundamental_weight
    table = {
        "adj": w(n, 1) + w(n, n - 1),
        "V": w(n, 1),
        "V'": w(n, n - 1),
        "S": w(n, 1) + w(n, 1),
        "S'": w(n, n - 1) + w(n, n - 1),
        "Lam": w(n, 2),
        "Lam'": w(n, n - 2),
        "T": Weight(n, [0] * n),
    }
    if label not in table:
        raise ValueError(f"unknown Theta label {label!r}")
    return table[label]


def theta_label_dim(n, label):
    dims = {
        "adj": n * n - 1,
        "V": n,
        "V'": n,
        "S": n * (n + 1) // 2,
        "S'": n * (n + 1) // 2,
        "Lam": n * (n - 1) // 2,
        "Lam'": n * (n - 1) // 2,
        "T": 1,
    }
    return dims[label]


def canonical_theta_classes(n):
    """Canonical label per dominant Theta weight.

    n = 3 merges V into Lam' and V' into Lam; n = 4 merges Lam' into Lam.
    The merged class keeps the dimension of its representative module.
    """
    if n == 3:
        labels = ["adj", "S", "S'", "Lam", "Lam'", "T"]
    elif n == 4:
        labels = ["adj", "S", "S'", "Lam", "V", "V'", "T"]
    else:
        raise ValueError("n must be 3 or 4")
    return labels


def canonical_theta_label(n, label):
    """Collapse a Theta label onto its canonical class representative."""
    if n == 3:
        merge = {"V": "Lam'", "V'": "Lam"}
    else:
        merge = {"Lam'": "Lam"}
    return merge.get(label, label)


def theta_weight_to_label(n):
    """Map dominant Theta weight -> canonical class label."""
    out = {}
    for lab in canonical_theta_classes(n):
        out[theta_label_weight(n, lab)] = lab
    return out


class ThetaSet:
    """Theta_n = {0, +-eps_i +- eps_j, +-eps_i, +-2eps_i} with its dominant labels."""

    def __init__(self, n):
        if n not in SL_NS:
            raise ValueError("n must be 3 or 4")
        self.n = n
        self.dominant_weights = {lab: theta_label_weight(n, lab) for lab in THETA_LABELS}

    def full_set(self):
        n = self.n
        ws = {Weight(n, [0] * n)}
        for i in range(1, n + 1):
            ws.add(eps(n, i))
            ws.add(-eps(n, i))
            ws.add(eps(n, i) + eps(n, i))
            ws.add(-(eps(n, i) + eps(n, i)))
            for j in range(1, n + 1):
                if i != j:
                    ws.add(eps(n, i) - eps(n, j))
                    ws.add(eps(n, i) + eps(n, j))
                    ws.add(-(eps(n, i) + eps(n, j)))
        return ws

    def contains(self, w):
        return w in self.full_set()
