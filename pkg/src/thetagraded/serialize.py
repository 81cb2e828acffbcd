"""JSON wire formats.

Rationals serialize as "p/q" (or "p" when the denominator is 1).  A
GModule file is {"n", "dim", "label"?, "actions": {"E_i_j": [[..]],
"H_i": [[..]]}}.  A CoordinateData file stores dims, the index of the
distinguished element of A, and one entry per product cell
{"cell": [X, Y, Z, kind], "matrix": [[..]]}, where matrix row j*dim(Y)+l
holds the Z-coordinates of the product of the j-th X and l-th Y basis
elements.  All emitters sort keys, so identical inputs give identical
bytes.
"""

import json
from fractions import Fraction

from .extract import CoordinateData
from .gmodules import GModule
from .linalg import Matrix
from .slcore import sl_basis_names


def rat_to_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def str_to_rat(s):
    return Fraction(s)


def matrix_to_lists(m):
    return [[rat_to_str(x) for x in row] for row in m.data]


def matrix_from_lists(rows):
    return Matrix([[str_to_rat(x) for x in row] for row in rows])


def vec_to_list(v):
    return [rat_to_str(x) for x in v]


def vec_from_list(v):
    return [str_to_rat(x) for x in v]


def gmodule_to_json(m):
    names = sl_basis_names(m.n)
    out = {
        "n": m.n,
        "dim": m.dim,
        "actions": {name: matrix_to_lists(a) for name, a in zip(names, m.actions)},
    }
    if m.label is not None:
        out["label"] = m.label
    return out


def gmodule_from_json(obj):
    n = int(obj["n"])
    dim = int(obj["dim"])
    names = sl_basis_names(n)
    actions = []
    for name in names:
        if name not in obj["actions"]:
            raise ValueError(f"missing action matrix for {name}")
        actions.append(matrix_from_lists(obj["actions"][name]))
    return GModule(n, dim, actions, label=obj.get("label"))


def coorddata_to_json(data):
    cells = []
    for (x, y, z, kind), table in sorted(data.products.items()):
        p = len(table)
        q = len(table[0]) if p else 0
        rows = []
        for j in range(p):
            for l in range(q):
                rows.append(vec_to_list(table[j][l]))
        cells.append({"cell": [x, y, z, kind], "matrix": rows})
    return {
        "n": data.n,
        "dims": dict(sorted(data.dims.items())),
        "one_index": data.one_index,
        "products": cells,
    }


def coorddata_from_json(obj):
    n = int(obj["n"])
    dims = {k: int(v) for k, v in obj["dims"].items()}
    products = {}
    for entry in obj["products"]:
        x, y, z, kind = entry["cell"]
        xd = dims[x]
        yd = dims[y]
        zd = dims[z]
        rows = entry["matrix"]
        if len(rows) != xd * yd:
            raise ValueError(f"cell {entry['cell']}: expected {xd * yd} rows, got {len(rows)}")
        table = [[vec_from_list(rows[j * yd + l]) for l in range(yd)] for j in range(xd)]
        for row in table:
            for v in row:
                if len(v) != zd:
                    raise ValueError(f"cell {entry['cell']}: wrong target length")
        products[(x, y, z, kind)] = table
    return CoordinateData(n, dims, products, one_index=int(obj.get("one_index", 0)))


def dumps(obj):
    """Deterministic JSON text (sorted keys, fixed separators)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
