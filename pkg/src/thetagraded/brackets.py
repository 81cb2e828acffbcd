"""Master bracket formulas for Theta_n-graded Lie algebras (n = 3, 4).

One registry drives both directions: coordinate extraction solves for
the product tables that make these formulas match an ambient bracket,
and assembly evaluates the same formulas against stored tables.  Every
term couples a matrix-side bilinear map with one named coordinate
product; the 1/2 coefficients are the printed ones and are never
renormalized.

The trivial sector is handled uniformly by viewing D as T (x) D, so the
scalar trace terms and the D-action lines are ordinary rules.
"""

from fractions import Fraction
from functools import lru_cache

from .gmodules import identification
from .linalg import Matrix
from .slcore import bracket as mbracket
from .slcore import circ as mcirc
from .slcore import trace_form

HALF = Fraction(1, 2)
ONE = Fraction(1)


def components(n):
    """(module label, coordinate key) layout; D last."""
    if n == 3:
        return [("adj", "A"), ("S", "C"), ("S'", "C'"), ("Lam", "E"), ("Lam'", "E'"), ("T", "D")]
    if n == 4:
        return [("adj", "A"), ("V", "B"), ("V'", "B'"), ("S", "C"), ("S'", "C'"), ("Lam", "E"), ("T", "D")]
    raise ValueError("n must be 3 or 4")


def module_of(n, key):
    for lab, k in components(n):
        if k == key:
            return lab
    raise KeyError(key)


def coordinate_keys(n):
    return [k for _, k in components(n)]


class Term:
    __slots__ = ("target", "mat_fn", "prod_key", "scale")

    def __init__(self, target, mat_fn, prod_key, scale):
        self.target = target
        self.mat_fn = mat_fn
        self.prod_key = prod_key
        self.scale = Fraction(scale)


class Rule:
    __slots__ = ("src", "terms")

    def __init__(self, src, terms):
        self.src = src
        self.terms = terms


def _outer(u, v):
    return Matrix([[a * b for b in v] for a in u])


def _scaled_traceless(m, n):
    t = m.trace() / n
    return Matrix([[m[i, j] - (t if i == j else 0) for j in range(n)] for i in range(n)])


@lru_cache(maxsize=None)
def master_rules(n):
    """All nonzero bracket rules, keyed by ordered source pair.

    Reversed source pairs are not listed; the bracket on them is minus
    the listed rule with swapped arguments.  Source pairs absent in both
    orders have zero bracket.
    """
    if n == 3:
        rules = _rules_n3()
    elif n == 4:
        rules = _rules_n4()
    else:
        raise ValueError("n must be 3 or 4")
    # D acts on every component, and D brackets into D.
    for key in coordinate_keys(n):
        if key == "D":
            continue
        rules.append(
            Rule(("D", key), [Term(key, lambda d, y: y, ("D", key, key, "plain"), ONE)])
        )
    rules.append(
        Rule(("D", "D"), [Term("D", lambda d1, d2: [ONE], ("D", "D", "D", "bracket"), ONE)])
    )
    return {r.src: r for r in rules}


def _rules_n3():
    n = 3
    f = identification(3, "f")
    g = identification(3, "g")
    finv = f.inverse()
    ginv = g.inverse()
    fr, gr = f.apply_raw, g.apply_raw
    finvr, ginvr = finv.apply_raw, ginv.apply_raw

    return [
        Rule(("A", "A"), [
            Term("A", lambda x, y: mcirc(x, y, n), ("A", "A", "A", "bracket"), HALF),
            Term("A", mbracket, ("A", "A", "A", "circ"), HALF),
            Term("D", lambda x, y: [trace_form(x, y, n)], ("A", "A", "D", "plain"), ONE),
        ]),
        Rule(("E", "E'"), [
            Term("A", lambda a, b: _scaled_traceless(a * b, n), ("E", "E'", "A", "plain"), ONE),
            Term("D", lambda a, b: [trace_form(a, b, n)], ("E", "E'", "D", "plain"), ONE),
        ]),
        Rule(("E", "E"), [
            Term("C'", lambda a, b: _outer(gr(a), gr(b)) + _outer(gr(b), gr(a)),
                 ("E", "E", "C'", "plain"), HALF),
            Term("E'", lambda a, b: _outer(gr(a), gr(b)) - _outer(gr(b), gr(a)),
                 ("E", "E", "E'", "plain"), HALF),
        ]),
        Rule(("E'", "E'"), [
            Term("C", lambda a, b: _outer(fr(a), fr(b)) + _outer(fr(b), fr(a)),
                 ("E'", "E'", "C", "plain"), HALF),
            Term("E", lambda a, b: _outer(fr(a), fr(b)) - _outer(fr(b), fr(a)),
                 ("E'", "E'", "E", "plain"), HALF),
        ]),
        Rule(("C", "C'"), [
            Term("A", lambda s, sp: _scaled_traceless(s * sp, n), ("C", "C'", "A", "plain"), ONE),
            Term("D", lambda s, sp: [trace_form(s, sp, n)], ("C", "C'", "D", "plain"), ONE),
        ]),
        Rule(("A", "C"), [
            Term("C", lambda x, s: x * s + s * x.transpose(), ("A", "C", "C", "plain"), HALF),
            Term("E", lambda x, s: x * s - s * x.transpose(), ("A", "C", "E", "plain"), HALF),
        ]),
        Rule(("A", "E"), [
            Term("E", lambda x, a: x * a + a * x.transpose(), ("A", "E", "E", "plain"), HALF),
            Term("C", lambda x, a: x * a - a * x.transpose(), ("A", "E", "C", "plain"), HALF),
        ]),
        Rule(("C'", "A"), [
            Term("C'", lambda sp, x: sp * x + x.transpose() * sp, ("C'", "A", "C'", "plain"), HALF),
            Term("E'", lambda sp, x: sp * x - x.transpose() * sp, ("C'", "A", "E'", "plain"), HALF),
        ]),
        Rule(("E'", "A"), [
            Term("E'", lambda b, x: b * x + x.transpose() * b, ("E'", "A", "E'", "plain"), HALF),
            Term("C'", lambda b, x: b * x - x.transpose() * b, ("E'", "A", "C'", "plain"), HALF),
        ]),
        Rule(("C", "E'"), [
            Term("A", lambda s, b: s * b, ("C", "E'", "A", "plain"), ONE),
        ]),
        # printed as s'l; that order is not equivariant for the stated
        # actions, the transposed order l s' is
        Rule(("C'", "E"), [
            Term("A", lambda sp, a: a * sp, ("C'", "E", "A", "plain"), ONE),
        ]),
        Rule(("C'", "E'"), [
            Term("E", lambda sp, b: ginvr(sp.apply(fr(b))), ("C'", "E'", "E", "plain"), ONE),
        ]),
        Rule(("E", "C"), [
            Term("E'", lambda a, s: finvr(s.apply(gr(a))), ("E", "C", "E'", "plain"), ONE),
        ]),
    ]


def _rules_n4():
    n = 4
    f = identification(4, "f")
    finv = f.inverse()
    fr, finvr = f.apply_raw, finv.apply_raw

    return [
        Rule(("A", "A"), [
            Term("A", lambda x, y: mcirc(x, y, n), ("A", "A", "A", "bracket"), HALF),
            Term("A", mbracket, ("A", "A", "A", "circ"), HALF),
            Term("D", lambda x, y: [trace_form(x, y, n)], ("A", "A", "D", "plain"), ONE),
        ]),
        Rule(("B", "B'"), [
            Term("A", lambda u, v: _scaled_traceless(_outer(u, v), n), ("B", "B'", "A", "plain"), ONE),
            Term("D", lambda u, v: [Fraction(2, n) * sum(a * b for a, b in zip(u, v))],
                 ("B", "B'", "D", "plain"), ONE),
        ]),
        Rule(("C", "C'"), [
            Term("A", lambda s, sp: _scaled_traceless(s * sp, n), ("C", "C'", "A", "plain"), ONE),
            Term("D", lambda s, sp: [trace_form(s, sp, n)], ("C", "C'", "D", "plain"), ONE),
        ]),
        Rule(("E", "E"), [
            Term("A", lambda a, b: _scaled_traceless(a * finvr(b), n), ("E", "E", "A", "plain"), ONE),
            Term("D", lambda a, b: [trace_form(a, finvr(b), n)], ("E", "E", "D", "plain"), ONE),
        ]),
        Rule(("B", "B"), [
            Term("C", lambda u, v: _outer(u, v) + _outer(v, u), ("B", "B", "C", "plain"), HALF),
            Term("E", lambda u, v: _outer(u, v) - _outer(v, u), ("B", "B", "E", "plain"), HALF),
        ]),
        Rule(("B'", "B'"), [
            Term("C'", lambda u, v: _outer(u, v) + _outer(v, u), ("B'", "B'", "C'", "plain"), HALF),
            Term("E", lambda u, v: fr(_outer(u, v) - _outer(v, u)), ("B'", "B'", "E", "plain"), HALF),
        ]),
        Rule(("A", "C"), [
            Term("C", lambda x, s: x * s + s * x.transpose(), ("A", "C", "C", "plain"), HALF),
            Term("E", lambda x, s: x * s - s * x.transpose(), ("A", "C", "E", "plain"), HALF),
        ]),
        Rule(("A", "E"), [
            Term("E", lambda x, a: x * a + a * x.transpose(), ("A", "E", "E", "plain"), HALF),
            Term("C", lambda x, a: x * a - a * x.transpose(), ("A", "E", "C", "plain"), HALF),
            Term("C'", lambda x, a: finvr(a) * x - x.transpose() * finvr(a),
                 ("A", "E", "C'", "plain"), HALF),
        ]),
        Rule(("C'", "A"), [
            Term("C'", lambda sp, x: sp * x + x.transpose() * sp, ("C'", "A", "C'", "plain"), HALF),
            Term("E", lambda sp, x: fr(sp * x - x.transpose() * sp), ("C'", "A", "E", "plain"), HALF),
        ]),
        Rule(("C", "E"), [
            Term("A", lambda s, a: s * finvr(a), ("C", "E", "A", "plain"), ONE),
        ]),
        # printed as s'l; realized in the equivariant order l s'
        Rule(("C'", "E"), [
            Term("A", lambda sp, a: a * sp, ("C'", "E", "A", "plain"), ONE),
        ]),
        Rule(("A", "B"), [
            Term("B", lambda x, u: x.apply(u), ("A", "B", "B", "plain"), ONE),
        ]),
        Rule(("C'", "B"), [
            Term("B'", lambda sp, u: sp.apply(u), ("C'", "B", "B'", "plain"), ONE),
        ]),
        Rule(("E", "B"), [
            Term("B'", lambda a, u: finvr(a).apply(u), ("E", "B", "B'", "plain"), ONE),
        ]),
        Rule(("B'", "A"), [
            Term("B'", lambda u, x: x.transpose().apply(u), ("B'", "A", "B'", "plain"), ONE),
        ]),
        Rule(("B'", "C"), [
            Term("B", lambda u, s: s.apply(u), ("B'", "C", "B", "plain"), ONE),
        ]),
        Rule(("B'", "E"), [
            Term("B", lambda u, a: [-t for t in a.apply(u)], ("B'", "E", "B", "plain"), ONE),
        ]),
    ]
