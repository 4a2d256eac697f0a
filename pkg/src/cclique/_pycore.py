"""Pure-Python versions of the hot kernels.

The compiled module ``_core`` implements the same functions with the same
operation counting; :mod:`cclique._accel` picks one at import time.
"""


def bk_pivot(masks):
    """Bron-Kerbosch with Tomita pivoting on local bitmask adjacency.

    ``masks[i]`` is the neighbourhood of local vertex ``i`` as an int bitmask.
    Returns ``(cliques, calls, ops, delay_max)`` with cliques as bitmasks in
    emission order. The pivot maximises ``|P & N(u)|`` over ``P | X`` with
    ties to the smallest index.
    """
    m = len(masks)
    if m == 0:
        return [], 0, 0, 0
    cliques = []
    calls = 0
    ops = 0
    last = 0
    delay_max = 0
    # explicit stack of frames: [r, p, x, cand]
    full = (1 << m) - 1
    stack = [[0, full, 0, None]]
    while stack:
        frame = stack[-1]
        r, p, x, cand = frame
        if cand is None:
            calls += 1
            ops += 1
            if not p:
                if not x:
                    cliques.append(r)
                    if ops - last > delay_max:
                        delay_max = ops - last
                    last = ops
                stack.pop()
                continue
            q = p | x
            best = -1
            best_cover = -1
            while q:
                low = q & -q
                u = low.bit_length() - 1
                q ^= low
                cover = (p & masks[u]).bit_count()
                ops += 1
                if cover > best_cover:
                    best, best_cover = u, cover
            cand = p & ~masks[best]
            frame[3] = cand
        if not cand:
            stack.pop()
            continue
        low = cand & -cand
        w = low.bit_length() - 1
        frame[3] = cand ^ low
        frame[1] = p ^ low
        frame[2] = x | low
        ops += 1
        nw = masks[w]
        stack.append([r | low, p & nw, x & nw, None])
    return cliques, calls, ops, delay_max


def wedge_triples(adj, adj_sets):
    """All induced 2-paths as ``(a, m, b)`` with ``a < b``, grouped by midpoint."""
    out = []
    for m, nb in enumerate(adj):
        for i, a in enumerate(nb):
            sa = adj_sets[a]
            for b in nb[i + 1:]:
                if b not in sa:
                    out.append((a, m, b))
    return out


def wedge_mids(adj, adj_sets):
    """Per-endpoint midpoint map ``mids[x][y]`` (sorted tuples) and the wedge count."""
    mids = [dict() for _ in adj]
    count = 0
    for a, m, b in wedge_triples(adj, adj_sets):
        count += 1
        mids[a].setdefault(b, []).append(m)
        mids[b].setdefault(a, []).append(m)
    for d in mids:
        for k, ms in d.items():
            d[k] = tuple(sorted(ms))
    return mids, count
