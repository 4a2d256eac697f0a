"""Backend selection for the hot kernels.

The compiled ``_core`` extension is used when it imports; otherwise, or when
``CCLIQUE_PURE=1`` is set, everything runs on ``_pycore``. Both backends
return identical results and identical operation counts.
"""

import os

import numpy as np

from . import _pycore

_core = None
if os.environ.get("CCLIQUE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _core
    except ImportError:  # extension not built
        _core = None

BACKEND = "compiled" if _core is not None else "python"


def bk_pivot(masks):
    if _core is not None and len(masks) <= 64:
        return _core.bk_pivot(masks)
    return _pycore.bk_pivot(masks)


def _triple_array(adj):
    n = len(adj)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum([len(a) for a in adj], out=indptr[1:])
    indices = np.fromiter((x for a in adj for x in a), dtype=np.int64, count=int(indptr[-1]))
    return _core.wedge_triples_csr(indptr, indices, n)


def wedge_triples(adj, adj_sets):
    if _core is None:
        return _pycore.wedge_triples(adj, adj_sets)
    return list(map(tuple, _triple_array(adj).tolist()))


def wedge_mids(adj, adj_sets):
    """``(mids, count)`` as in :func:`_pycore.wedge_mids`.

    The compiled path groups the triple array with numpy so Python objects
    are made per endpoint pair rather than per wedge.
    """
    if _core is None:
        return _pycore.wedge_mids(adj, adj_sets)
    arr = _triple_array(adj)
    count = len(arr)
    mids = [dict() for _ in adj]
    if not count:
        return mids, 0
    # both orientations, sorted by (x, y, mid)
    x = np.concatenate([arr[:, 0], arr[:, 2]])
    y = np.concatenate([arr[:, 2], arr[:, 0]])
    m = np.concatenate([arr[:, 1], arr[:, 1]])
    idx = np.lexsort((m, y, x))
    x, y, m = x[idx], y[idx], m[idx]
    cut = np.flatnonzero((x[1:] != x[:-1]) | (y[1:] != y[:-1])) + 1
    starts = np.concatenate([[0], cut]).tolist()
    ends = np.concatenate([cut, [len(x)]]).tolist()
    xs, ys, ms = x.tolist(), y.tolist(), m.tolist()
    for s, e in zip(starts, ends):
        mids[xs[s]][ys[s]] = tuple(ms[s:e])
    return mids, count
