"""Integer Jacobi-scan kernels.

Assembled structure constants are exact rationals with a small common
denominator; clearing it turns the Jacobi identity into an integer
statement, so the hot triple scan runs on int64 arrays.  The numba
kernel is the default; set THETA_GRADED_BACKEND=numpy to force the
pure-numpy fallback (same results, bit for bit).  THETA_GRADED_THREADS
caps numba threading.  An overflow guard keeps int64 exact.
"""

import os

import numpy as np

_BACKEND = None


def backend():
    """Resolved kernel backend name: 'numba' or 'numpy'."""
    global _BACKEND
    if _BACKEND is None:
        choice = os.environ.get("THETA_GRADED_BACKEND", "").strip().lower()
        if choice not in ("", "numba", "numpy"):
            raise ValueError(f"THETA_GRADED_BACKEND must be 'numba' or 'numpy', got {choice!r}")
        if choice == "numpy":
            _BACKEND = "numpy"
        else:
            try:
                import numba  # noqa: F401
                _set_threads()
                _BACKEND = "numba"
            except ImportError:
                if choice == "numba":
                    raise
                _BACKEND = "numpy"
    return _BACKEND


def _set_threads():
    cap = os.environ.get("THETA_GRADED_THREADS")
    if cap:
        import numba
        numba.set_num_threads(max(1, min(int(cap), numba.config.NUMBA_NUM_THREADS)))


def check_overflow_bound(c):
    """int64 safety: 3 * dim * max|C|^2 must stay below 2^62."""
    cmax = int(np.abs(c).max()) if c.size else 0
    dim = c.shape[0]
    if 3 * dim * cmax * cmax >= 2 ** 62:
        raise OverflowError("structure constants too large for the int64 kernel")


_NUMBA_SCAN = None


def _numba_scan():
    global _NUMBA_SCAN
    if _NUMBA_SCAN is None:
        from numba import njit

        @njit(cache=False)
        def scan(c, triples, flags):
            dim = c.shape[0]
            for t in range(triples.shape[0]):
                i, j, k = triples[t, 0], triples[t, 1], triples[t, 2]
                bad = 0
                for d in range(dim):
                    s = 0
                    for m in range(dim):
                        s += (
                            c[i, j, m] * c[m, k, d]
                            + c[j, k, m] * c[m, i, d]
                            + c[k, i, m] * c[m, j, d]
                        )
                    if s != 0:
                        bad = 1
                        break
                flags[t] = bad

        _NUMBA_SCAN = scan
    return _NUMBA_SCAN


def _numpy_scan(c, triples, flags, chunk=1024):
    for lo in range(0, triples.shape[0], chunk):
        part = triples[lo:lo + chunk]
        i, j, k = part[:, 0], part[:, 1], part[:, 2]
        total = np.einsum("tm,mtd->td", c[i, j, :], c[:, k, :], optimize=True)
        total += np.einsum("tm,mtd->td", c[j, k, :], c[:, i, :], optimize=True)
        total += np.einsum("tm,mtd->td", c[k, i, :], c[:, j, :], optimize=True)
        flags[lo:lo + part.shape[0]] = np.any(total != 0, axis=1)


def jacobi_scan(c, triples):
    """Flag per triple: 1 if the Jacobi sum is nonzero, else 0."""
    c = np.ascontiguousarray(c, dtype=np.int64)
    triples = np.ascontiguousarray(triples, dtype=np.int64)
    check_overflow_bound(c)
    flags = np.zeros(triples.shape[0], dtype=np.int64)
    if triples.shape[0] == 0:
        return flags
    if backend() == "numba":
        _numba_scan()(c, triples, flags)
    else:
        _numpy_scan(c, triples, flags)
    return flags


def jacobi_scan_fractions(table, dim, triples):
    """Exact Fraction reference scan (slow); used to validate the kernels."""
    from fractions import Fraction

    flags = []
    for (i, j, k) in triples:
        acc = {}
        for (a, b, e) in ((i, j, k), (j, k, i), (k, i, j)):
            v1 = table.get((a, b), {})
            for m, c1 in v1.items():
                for d, c2 in table.get((m, e), {}).items():
                    acc[d] = acc.get(d, Fraction(0)) + c1 * c2
        flags.append(1 if any(acc.values()) else 0)
    return flags
