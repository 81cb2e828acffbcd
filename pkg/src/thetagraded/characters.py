"""Character-level machinery: weight multisets, Freudenthal multiplicities,
and greedy character peeling.

Everything works on Weight values with exact arithmetic; no module is ever
materialised here, which keeps the tensor-table verification fast.
"""

from fractions import Fraction
from functools import lru_cache

from .slcore import Weight, eps, rho_vector, simple_roots


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def positive_roots(n):
    return [eps(n, i) - eps(n, j) for i in range(1, n + 1) for j in range(1, n + 1) if i < j]


@lru_cache(maxsize=None)
def _irrep_weights_cached(n, hcoords):
    lam = Weight(n, hcoords)
    return _freudenthal(n, lam)


def irrep_weights(lam):
    """Weight multiset of the simple module V(lam) as {Weight: mult}."""
    if not lam.is_dominant():
        raise ValueError("highest weight must be dominant")
    return dict(_irrep_weights_cached(lam.n, lam.coords))


def irrep_dim(lam):
    return sum(irrep_weights(lam).values())


def _freudenthal(n, lam):
    """Freudenthal recursion over the weight lattice below lam.

    Candidates are enumerated level by level (lam minus nonnegative
    combinations of simple roots) and pruned by |mu| <= |lam|, which
    contains the convex hull of the Weyl orbit of lam.  A weight at BFS
    depth d can see nonzero multiplicities at most d steps up any
    positive-root ray, which bounds the inner loops.
    """
    rho = rho_vector(n)
    pos = positive_roots(n)
    simples = simple_roots(n)
    lam_p = lam.projected()
    lam_norm = _dot(lam_p, lam_p)
    lam_rho_norm = _dot(_vadd(lam_p, rho), _vadd(lam_p, rho))

    mult = {lam: 1}
    depth = {lam: 0}
    level = [lam]
    while level:
        nxt = set()
        for mu in level:
            for alpha in simples:
                nu = mu - alpha
                if nu in depth or nu in nxt:
                    continue
                nu_p = nu.projected()
                if _dot(nu_p, nu_p) > lam_norm:
                    continue
                nxt.add(nu)
        d = depth[level[0]] + 1
        for nu in sorted(nxt, key=lambda w: w.coords):
            depth[nu] = d
            nu_p = nu.projected()
            denom = lam_rho_norm - _dot(_vadd(nu_p, rho), _vadd(nu_p, rho))
            if denom == 0:
                mult[nu] = 0
                continue
            num = Fraction(0)
            for alpha in pos:
                a_p = alpha.projected()
                for k in range(1, d + 1):
                    up = nu + _scale_weight(alpha, k)
                    m_up = mult.get(up, 0)
                    if m_up:
                        num += 2 * m_up * _dot(up.projected(), a_p)
            m = num / denom
            if m.denominator != 1 or m < 0:
                raise ArithmeticError("Freudenthal produced a non-integer multiplicity")
            mult[nu] = int(m)
        level = list(nxt)
    return tuple((w, m) for w, m in mult.items() if m > 0)


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _scale_weight(w, k):
    return Weight(w.n, [k * c for c in w.coords])


def weight_multiset_product(wa, wb):
    """Weight multiset of a tensor product from the factor multisets."""
    out = {}
    for w1, m1 in wa.items():
        for w2, m2 in wb.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + m1 * m2
    return out


def peel_character(n, weights):
    """Greedy character peeling of a completely reducible character.

    Repeatedly takes the dominant weight of maximal height present,
    subtracts the full weight multiset of its simple module, and records
    (highest weight, multiplicity) pairs.  Deterministic and loop-free.
    """
    remaining = {w: m for w, m in weights.items() if m}
    found = []
    while remaining:
        top = max(remaining, key=lambda w: (w.height_key(), w.coords))
        if not top.is_dominant():
            raise ArithmeticError("maximal weight not dominant; input is not a character")
        m = remaining[top]
        if m < 0:
            raise ArithmeticError("negative multiplicity during peeling")
        for w, k in irrep_weights(top).items():
            nm = remaining.get(w, 0) - m * k
            if nm < 0:
                raise ArithmeticError("peeling went negative; input is not a character")
            if nm:
                remaining[w] = nm
            else:
                remaining.pop(w, None)
        found.append((top, m))
    return found
