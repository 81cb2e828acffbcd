"""Mutation sensitivity: a single flipped product matrix must be caught.

Negating one nonzero product table of extracted coordinate data has to
break either the Jacobi identity of the assembled algebra or one of the
section-4 structure checks; anything else would mean the verifiers are
too weak to pin the data down.
"""

import random

from .coordalg import ConditionViolated, verify_section4
from .graded import assemble, check_jacobi
from .linalg import vec_scale


def nonzero_cells(data):
    out = []
    for key, table in sorted(data.products.items()):
        if any(any(v) for row in table for v in row):
            out.append(key)
    return out


def flip_cell(data, key):
    mut = data.copy()
    mut.products[key] = [[vec_scale(v, -1) for v in row] for row in mut.products[key]]
    return mut


def mutation_report(data, count=10, seed=0, jacobi_mode="full", samples=5000):
    """Flip `count` seeded nonzero cells; report whether each was caught."""
    cells = nonzero_cells(data)
    rng = random.Random(seed)
    if count <= len(cells):
        picks = rng.sample(cells, count)
    else:
        picks = cells + [cells[rng.randrange(len(cells))] for _ in range(count - len(cells))]
    entries = []
    for key in picks:
        mut = flip_cell(data, key)
        caught_by = None
        jac = check_jacobi(assemble(mut), mode=jacobi_mode, samples=samples, seed=seed)
        if not jac["pass"]:
            caught_by = "jacobi"
        else:
            try:
                rep = verify_section4(mut)
                if not rep["pass"]:
                    caught_by = "section4"
            except ConditionViolated:
                caught_by = "condition"
        entries.append({"cell": list(key), "caught_by": caught_by, "detected": caught_by is not None})
    return {
        "seed": seed,
        "mutations": entries,
        "pass": all(e["detected"] for e in entries),
    }
