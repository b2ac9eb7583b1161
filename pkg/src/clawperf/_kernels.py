"""Bit-parallel kernels over adjacency rows.

A graph of order ``n <= 64`` is passed as a ``uint64`` array ``rows`` with
``rows[v]`` the neighbourhood bitmask of ``v``. All masks stay ``uint64``;
numba widens mixed signed/unsigned bit operations to ``int64``, so integer
literals never meet a mask directly.
"""

import numpy as np

from ._jit import njit

U0 = np.uint64(0)
U1 = np.uint64(1)
MAX_AUTS = 64


# ---------------------------------------------------------------- bit helpers

@njit
def bit(i):
    return U1 << np.uint64(i)


@njit
def full_mask(n):
    if n >= 64:
        return ~U0
    return (U1 << np.uint64(n)) - U1


@njit
def popcount(x):
    c = 0
    while x:
        x &= x - U1
        c += 1
    return c


@njit
def lowest(x):
    i = 0
    while not ((x >> np.uint64(i)) & U1):
        i += 1
    return i


@njit
def above_mask(n, s):
    # vertices strictly greater than s
    if s >= 63:
        return U0
    return full_mask(n) & ~((U1 << np.uint64(s + 1)) - U1)


@njit
def complement_rows(rows, n):
    full = full_mask(n)
    out = np.empty(n, np.uint64)
    for v in range(n):
        out[v] = ~rows[v] & full & ~bit(v)
    return out


@njit
def reach_within(rows, start, mask):
    mask = np.uint64(mask)
    reach = bit(start)
    while True:
        nxt = reach
        m = reach
        while m:
            v = lowest(m)
            m &= m - U1
            nxt |= rows[v]
        nxt &= mask
        if nxt == reach:
            return reach
        reach = nxt


@njit
def is_connected_mask(rows, mask):
    mask = np.uint64(mask)
    if mask == U0:
        return True
    return reach_within(rows, lowest(mask), mask) == mask


# ------------------------------------------------------------- clique search

@njit
def _color_sort(rows, P, order, colors):
    # greedy sequential colouring of P; order is non-decreasing in colour
    cnt = 0
    U = P
    k = 0
    while U:
        k += 1
        Q = U
        while Q:
            v = lowest(Q)
            Q &= ~bit(v)
            Q &= ~rows[v]
            U &= ~bit(v)
            order[cnt] = v
            colors[cnt] = k
            cnt += 1
    return cnt


@njit
def max_clique(rows, n, cand):
    """Maximum clique inside ``cand``; returns (size, witness mask)."""
    cand = np.uint64(cand)
    if cand == U0:
        return 0, U0
    order = np.empty((n + 1, n), np.int64)
    colors = np.empty((n + 1, n), np.int64)
    idx = np.zeros(n + 1, np.int64)
    P = np.zeros(n + 1, np.uint64)
    R = np.zeros(n + 1, np.uint64)
    best = 0
    best_set = U0
    P[0] = cand
    idx[0] = _color_sort(rows, cand, order[0], colors[0]) - 1
    d = 0
    while d >= 0:
        i = idx[d]
        if i < 0 or d + colors[d, i] <= best:
            d -= 1
            continue
        v = order[d, i]
        idx[d] = i - 1
        newP = P[d] & rows[v]
        newR = R[d] | bit(v)
        P[d] &= ~bit(v)
        if newP == U0:
            if d + 1 > best:
                best = d + 1
                best_set = newR
        else:
            d += 1
            P[d] = newP
            R[d] = newR
            idx[d] = _color_sort(rows, newP, order[d], colors[d]) - 1
    return best, best_set


@njit
def independence(rows, n):
    comp = complement_rows(rows, n)
    return max_clique(comp, n, full_mask(n))


@njit
def all_max_independent_sets(rows, n, alpha, out):
    """Write every independent set of size ``alpha`` into ``out``; return count."""
    cnt = 0
    if alpha == 0:
        out[0] = U0
        return 1
    full = full_mask(n)
    cand = np.zeros(n + 2, np.uint64)
    cur = np.zeros(n + 2, np.uint64)
    cand[0] = full
    d = 0
    while d >= 0:
        c = cand[d]
        if c == U0 or d + popcount(c) < alpha:
            d -= 1
            continue
        v = lowest(c)
        cand[d] = c & ~bit(v)
        s = cur[d] | bit(v)
        if d + 1 == alpha:
            if cnt < out.shape[0]:
                out[cnt] = s
            cnt += 1
            continue
        nc = c & ~rows[v] & above_mask(n, v)
        cur[d + 1] = s
        cand[d + 1] = nc
        d += 1
    return cnt


# ---------------------------------------------------------- chromatic number

@njit
def k_colourable(rows, n, k):
    if n == 0:
        return True
    if k <= 0:
        return False
    # static order: decreasing degree
    deg = np.empty(n, np.int64)
    for v in range(n):
        deg[v] = popcount(rows[v])
    order = np.argsort(-deg, kind="mergesort")
    classes = np.zeros(k, np.uint64)
    choice = np.full(n, -1, np.int64)
    used = np.zeros(n + 1, np.int64)  # colours in use before position i
    i = 0
    while i >= 0:
        if i == n:
            return True
        v = order[i]
        c = choice[i]
        if c >= 0:
            classes[c] &= ~bit(v)
        c += 1
        limit = min(k - 1, used[i])
        while c <= limit and (classes[c] & rows[v]) != U0:
            c += 1
        if c > limit:
            choice[i] = -1
            i -= 1
            continue
        choice[i] = c
        classes[c] |= bit(v)
        used[i + 1] = max(used[i], c + 1)
        i += 1
    return False


@njit
def chromatic(rows, n):
    if n == 0:
        return 0
    lb, _ = max_clique(rows, n, full_mask(n))
    k = lb
    while not k_colourable(rows, n, k):
        k += 1
    return k


@njit
def perfect_by_definition(rows, n):
    """Return -1 if chi == omega on every induced subgraph, else a failing subset."""
    N = 1 << n
    r = np.empty(n, np.int64)
    for v in range(n):
        r[v] = np.int64(rows[v])
    indep = np.zeros(N, np.bool_)
    omega = np.zeros(N, np.int64)
    chi = np.zeros(N, np.int64)
    indep[0] = True
    for S in range(1, N):
        v = 0
        while not (S >> v) & 1:
            v += 1
        rest = S & ~(1 << v)
        indep[S] = indep[rest] and (r[v] & S) == 0
        o1 = omega[rest]
        o2 = 1 + omega[S & r[v]]
        omega[S] = o1 if o1 > o2 else o2
        best = n + 1
        T = rest
        while True:
            I = T | (1 << v)
            if indep[I]:
                c = 1 + chi[S ^ I]
                if c < best:
                    best = c
            if T == 0:
                break
            T = (T - 1) & rest
        chi[S] = best
        if chi[S] != omega[S]:
            return S
    return -1


# ------------------------------------------------------- canonical labelling

@njit
def _key_less(keys, a, b, width):
    for j in range(width):
        if keys[a, j] != keys[b, j]:
            return keys[a, j] < keys[b, j]
    return False


@njit
def _rank(keys, n, width):
    order = np.arange(n)
    for i in range(1, n):
        j = i
        while j > 0 and _key_less(keys, order[j], order[j - 1], width):
            t = order[j]
            order[j] = order[j - 1]
            order[j - 1] = t
            j -= 1
    col = np.empty(n, np.int64)
    c = 0
    if n > 0:
        col[order[0]] = 0
    for i in range(1, n):
        if _key_less(keys, order[i - 1], order[i], width):
            c += 1
        col[order[i]] = c
    return col, c + 1


@njit
def _refine(rows, n, col, k):
    while k < n:
        cm = np.zeros(k, np.uint64)
        for v in range(n):
            cm[col[v]] |= bit(v)
        keys = np.empty((n, k + 1), np.int64)
        for v in range(n):
            keys[v, 0] = col[v]
            for j in range(k):
                keys[v, j + 1] = popcount(rows[v] & cm[j])
        newcol, nk = _rank(keys, n, k + 1)
        if nk == k:
            break
        col = newcol
        k = nk
    return col, k


@njit
def _individualize(rows, n, col, w):
    keys = np.empty((n, 1), np.int64)
    cw = col[w]
    for u in range(n):
        keys[u, 0] = 2 * col[u] + (1 if (col[u] == cw and u != w) else 0)
    c, k = _rank(keys, n, 1)
    return _refine(rows, n, c, k)


@njit
def _leaf_cert(rows, n, pos, cert, inv):
    for v in range(n):
        inv[pos[v]] = v
    for p in range(n):
        m = rows[inv[p]]
        c = U0
        while m:
            u = lowest(m)
            m &= m - U1
            c |= bit(pos[u])
        cert[p] = c


@njit
def _cert_cmp(a, b, n):
    for p in range(n):
        if a[p] != b[p]:
            return -1 if a[p] < b[p] else 1
    return 0


@njit
def _uf_find(par, x):
    while par[x] != x:
        par[x] = par[par[x]]
        x = par[x]
    return x


@njit
def canon(rows, n, init):
    """Canonical labelling by colour refinement plus individualisation search.

    Returns ``(cert, pos, rootcol)``: ``cert`` is the relabelled adjacency
    (row ``p`` holds the neighbours of the vertex at canonical position
    ``p``), ``pos[v]`` the canonical position of ``v`` and ``rootcol`` the
    equitable colouring refined from ``init``.
    """
    cert_best = np.zeros(n, np.uint64)
    pos_best = np.zeros(n, np.int64)
    if n == 0:
        return cert_best, pos_best, pos_best.copy()
    keys = np.empty((n, 1), np.int64)
    for v in range(n):
        keys[v, 0] = init[v]
    c0, k0 = _rank(keys, n, 1)
    col0, k0 = _refine(rows, n, c0, k0)
    root = col0.copy()
    if k0 == n:
        inv = np.empty(n, np.int64)
        _leaf_cert(rows, n, col0, cert_best, inv)
        return cert_best, col0.copy(), root

    inv_best = np.empty(n, np.int64)
    cert_first = np.zeros(n, np.uint64)
    inv_first = np.empty(n, np.int64)
    cert = np.empty(n, np.uint64)
    inv = np.empty(n, np.int64)
    have = False

    auts = np.empty((MAX_AUTS, n), np.int64)
    na = 0
    par = np.empty(n, np.int64)

    colst = np.empty((n + 1, n), np.int64)
    memb = np.empty((n + 1, n), np.int64)
    msz = np.zeros(n + 1, np.int64)
    midx = np.zeros(n + 1, np.int64)
    path = np.empty(n + 1, np.int64)

    d = 0
    colst[0] = col0
    # target cell: smallest non-singleton, then lowest colour
    size = np.zeros(n, np.int64)
    for v in range(n):
        size[col0[v]] += 1
    tc = -1
    for c in range(k0):
        if size[c] > 1 and (tc < 0 or size[c] < size[tc]):
            tc = c
    s = 0
    for v in range(n):
        if col0[v] == tc:
            memb[0, s] = v
            s += 1
    msz[0] = s
    midx[0] = 0

    while d >= 0:
        if midx[d] >= msz[d]:
            d -= 1
            continue
        w = memb[d, midx[d]]
        midx[d] += 1
        skip = False
        for t in range(midx[d] - 1):
            u = memb[d, t]
            if (rows[u] & ~bit(w)) == (rows[w] & ~bit(u)):
                skip = True
                break
        if not skip and na > 0:
            for x in range(n):
                par[x] = x
            for a in range(na):
                fixes = True
                for j in range(d):
                    if auts[a, path[j]] != path[j]:
                        fixes = False
                        break
                if not fixes:
                    continue
                for x in range(n):
                    rx = _uf_find(par, x)
                    ry = _uf_find(par, auts[a, x])
                    if rx != ry:
                        par[rx] = ry
            rw = _uf_find(par, w)
            for t in range(midx[d] - 1):
                if _uf_find(par, memb[d, t]) == rw:
                    skip = True
                    break
        if skip:
            continue
        newcol, nk = _individualize(rows, n, colst[d], w)
        path[d] = w
        if nk == n:
            _leaf_cert(rows, n, newcol, cert, inv)
            if not have:
                have = True
                cert_best[:] = cert
                pos_best[:] = newcol
                inv_best[:] = inv
                cert_first[:] = cert
                inv_first[:] = inv
                continue
            cmpb = _cert_cmp(cert, cert_best, n)
            if cmpb < 0:
                cert_best[:] = cert
                pos_best[:] = newcol
                inv_best[:] = inv
            else:
                for ref in range(2):
                    same = cmpb == 0 if ref == 0 else _cert_cmp(cert, cert_first, n) == 0
                    if not same or na >= MAX_AUTS:
                        continue
                    ident = True
                    for v in range(n):
                        g = inv_best[newcol[v]] if ref == 0 else inv_first[newcol[v]]
                        auts[na, v] = g
                        if g != v:
                            ident = False
                    if not ident:
                        na += 1
            continue
        d += 1
        colst[d] = newcol
        for c in range(nk):
            size[c] = 0
        for v in range(n):
            size[newcol[v]] += 1
        tc = -1
        for c in range(nk):
            if size[c] > 1 and (tc < 0 or size[c] < size[tc]):
                tc = c
        s = 0
        for v in range(n):
            if newcol[v] == tc:
                memb[d, s] = v
                s += 1
        msz[d] = s
        midx[d] = 0
    return cert_best, pos_best, root


@njit
def same_orbit(rows, n, a, b):
    """True iff some automorphism maps vertex a to vertex b."""
    if a == b:
        return True
    ia = np.zeros(n, np.int64)
    ib = np.zeros(n, np.int64)
    ia[a] = 1
    ib[b] = 1
    ca, _, _ = canon(rows, n, ia)
    cb, _, _ = canon(rows, n, ib)
    return _cert_cmp(ca, cb, n) == 0


# ------------------------------------------------------ induced containment

@njit
def _pattern_order(pat, pn, start, order):
    placed = U0
    order[0] = start
    placed |= bit(start)
    for i in range(1, pn):
        bestv = -1
        bk = -1
        bd = -1
        for v in range(pn):
            if (placed >> np.uint64(v)) & U1:
                continue
            k = popcount(pat[v] & placed)
            dg = popcount(pat[v])
            if k > bk or (k == bk and dg > bd):
                bestv = v
                bk = k
                bd = dg
        order[i] = bestv
        placed |= bit(bestv)


@njit
def _embed_from(host, hn, pat, pn, order, first_cand, degok, out):
    cand = np.zeros(pn, np.uint64)
    cur = np.full(pn, -1, np.int64)
    used = U0
    cand[0] = first_cand & degok[order[0]]
    d = 0
    while True:
        if cur[d] >= 0:
            used &= ~bit(cur[d])
            cur[d] = -1
        if cand[d] == U0:
            d -= 1
            if d < 0:
                return False
            continue
        h = lowest(cand[d])
        cand[d] &= cand[d] - U1
        cur[d] = h
        used |= bit(h)
        if d == pn - 1:
            for j in range(pn):
                out[order[j]] = cur[j]
            return True
        d += 1
        p = order[d]
        c = degok[p] & ~used
        for j in range(d):
            q = order[j]
            if (pat[p] >> np.uint64(q)) & U1:
                c &= host[cur[j]]
            else:
                c &= ~host[cur[j]]
        cand[d] = c


@njit
def find_induced(host, hn, pat, pn, forced, out):
    """Search an induced copy of ``pat`` in ``host``; with ``forced >= 0`` the
    copy must use that host vertex. Fills ``out[p]`` and returns True on success."""
    if pn == 0:
        return True
    if pn > hn:
        return False
    hdeg = np.empty(hn, np.int64)
    for v in range(hn):
        hdeg[v] = popcount(host[v])
    degok = np.zeros(pn, np.uint64)
    for p in range(pn):
        dp = popcount(pat[p])
        nd = pn - 1 - dp
        m = U0
        for v in range(hn):
            if hdeg[v] >= dp and hn - 1 - hdeg[v] >= nd:
                m |= bit(v)
        if m == U0:
            return False
        degok[p] = m
    order = np.empty(pn, np.int64)
    if forced >= 0:
        for q in range(pn):
            if not (degok[q] >> np.uint64(forced)) & U1:
                continue
            _pattern_order(pat, pn, q, order)
            if _embed_from(host, hn, pat, pn, order, bit(forced), degok, out):
                return True
        return False
    start = 0
    for p in range(pn):
        if popcount(pat[p]) > popcount(pat[start]):
            start = p
    _pattern_order(pat, pn, start, order)
    return _embed_from(host, hn, pat, pn, order, full_mask(hn), degok, out)


# ------------------------------------------------------------ cycle search

@njit
def find_induced_cycle(rows, n, L):
    """Induced cycle of length L (>= 4) as a vertex sequence, or empty array."""
    path = np.empty(L, np.int64)
    cand = np.zeros(L, np.uint64)
    if L > n or L < 4:
        return path[:0]
    for s in range(n):
        above = above_mask(n, s)
        first = rows[s] & above
        if popcount(first) < 2:
            continue
        path[0] = s
        cand[1] = first
        d = 1
        while d >= 1:
            if cand[d] == U0:
                d -= 1
                continue
            v = lowest(cand[d])
            cand[d] &= cand[d] - U1
            path[d] = v
            if d == L - 1:
                return path
            nd = d + 1
            blocked = U0
            for j in range(1, nd - 1):
                blocked |= rows[path[j]] | bit(path[j])
            c = rows[v] & above & ~blocked
            if nd < L - 1:
                c &= ~rows[s]
            else:
                c &= rows[s] & above_mask(n, path[1])
            cand[nd] = c
            d = nd
    return path[:0]


@njit
def shortest_odd_hole(rows, n, min_len):
    L = min_len
    while L <= n:
        cyc = find_induced_cycle(rows, n, L)
        if cyc.shape[0] > 0:
            return cyc
        L += 2
    return np.empty(0, np.int64)


@njit
def perfect_code(rows, n):
    """0 if perfect; 1 if an odd hole exists; 2 if only an odd antihole (>= 7)."""
    if shortest_odd_hole(rows, n, 5).shape[0] > 0:
        return 1
    comp = complement_rows(rows, n)
    if shortest_odd_hole(comp, n, 7).shape[0] > 0:
        return 2
    return 0


# ----------------------------------------------------------- augmentation

@njit
def claw_at_new(rows, N):
    # new vertex as centre
    m = N
    while m:
        a = lowest(m)
        m &= m - U1
        A = N & ~rows[a] & ~bit(a)
        mm = A
        while mm:
            b = lowest(mm)
            mm &= mm - U1
            if A & ~rows[b] & ~bit(b):
                return True
    # new vertex as a leaf
    m = N
    while m:
        u = lowest(m)
        m &= m - U1
        S = rows[u] & ~N
        mm = S
        while mm:
            a = lowest(mm)
            mm &= mm - U1
            if S & ~rows[a] & ~bit(a):
                return True
    return False


@njit
def expand(rows, n, claw_free, pats, pat_ns, connected, min_alpha):
    """Children of ``rows`` under vertex-addition canonical augmentation.

    Returns ``(count, masks, certs, alphas)`` for the accepted children; the
    new vertex has index ``n`` and neighbourhood ``masks[i]``. Children with
    independence number below ``min_alpha`` are discarded.
    """
    n1 = n + 1
    total = 1 << n
    masks = np.empty(total, np.uint64)
    certs = np.empty((total, n1), np.uint64)
    alphas = np.empty(total, np.int64)
    cnt = 0
    full = full_mask(n)
    full1 = full_mask(n1)
    comp = complement_rows(rows, n)
    ap, _ = max_clique(comp, n, full)
    child = np.empty(n1, np.uint64)
    emb = np.empty(64, np.int64)
    zeros = np.zeros(n1, np.int64)
    newbit = bit(n)
    start = 1 if connected else 0
    for mi in range(start, total):
        N = np.uint64(mi)
        if claw_free and claw_at_new(rows, N):
            continue
        for u in range(n):
            if (N >> np.uint64(u)) & U1:
                child[u] = rows[u] | newbit
            else:
                child[u] = rows[u]
        child[n] = N
        bad = False
        for i in range(pat_ns.shape[0]):
            if find_induced(child, n1, pats[i], pat_ns[i], n, emb):
                bad = True
                break
        if bad:
            continue
        a2, _ = max_clique(comp, n, full & ~N)
        a = ap if ap > a2 + 1 else a2 + 1
        if a < min_alpha:
            continue
        cert, pos, root = canon(child, n1, zeros)
        dv = -1
        bp = -1
        for u in range(n1):
            if pos[u] <= bp:
                continue
            if connected and not is_connected_mask(child, full1 & ~bit(u)):
                continue
            bp = pos[u]
            dv = u
        if dv != n:
            if root[dv] != root[n]:
                continue
            if not same_orbit(child, n1, dv, n):
                continue
        masks[cnt] = N
        certs[cnt] = cert
        alphas[cnt] = a
        cnt += 1
    return cnt, masks, certs, alphas


# ------------------------------------------ induced-cycle neighbourhoods

@njit
def all_induced_cycles(rows, n, L, out):
    """Every induced L-cycle once, in cyclic order, into ``out``; returns count."""
    path = np.empty(L, np.int64)
    cand = np.zeros(L, np.uint64)
    cnt = 0
    if L > n or L < 4:
        return 0
    for s in range(n):
        above = above_mask(n, s)
        first = rows[s] & above
        if popcount(first) < 2:
            continue
        path[0] = s
        cand[1] = first
        d = 1
        while d >= 1:
            if cand[d] == U0:
                d -= 1
                continue
            v = lowest(cand[d])
            cand[d] &= cand[d] - U1
            path[d] = v
            if d == L - 1:
                if cnt < out.shape[0]:
                    out[cnt, :] = path
                cnt += 1
                continue
            nd = d + 1
            blocked = U0
            for j in range(1, nd - 1):
                blocked |= rows[path[j]] | bit(path[j])
            c = rows[v] & above & ~blocked
            if nd < L - 1:
                c &= ~rows[s]
            else:
                c &= rows[s] & above_mask(n, path[1])
            cand[nd] = c
            d = nd
    return cnt


@njit
def attachment_code(rows, order, L, x):
    """0 K2, 1 P3, 2 P4, 3 C5, 4 2K2, -1 anything else."""
    cm = U0
    for i in range(L):
        cm |= bit(order[i])
    S = rows[x] & cm
    k = popcount(S)
    if k == L:
        return 3 if L == 5 else -1
    start = 0
    while (S >> np.uint64(order[start])) & U1:
        start += 1
    runs = 0
    r1 = 0
    r2 = 0
    cur = 0
    for i in range(1, L + 1):
        v = order[(start + i) % L]
        if (S >> np.uint64(v)) & U1:
            cur += 1
        elif cur > 0:
            if runs == 0:
                r1 = cur
            elif runs == 1:
                r2 = cur
            runs += 1
            cur = 0
    if runs == 1:
        if r1 == 2:
            return 0
        if r1 == 3:
            return 1
        if r1 == 4:
            return 2
        return -1
    if runs == 2 and r1 == 2 and r2 == 2 and L >= 6:
        return 4
    return -1


@njit
def claims_host(rows, n, cycles, ncyc, L, indep, nind, stats):
    """Accumulate checks for one claw-free host into ``stats``:
    [contexts, edge violations, cd2 checks, cd2 violations,
    attachment checks, attachment violations]."""
    for c in range(ncyc):
        order = cycles[c]
        cm = U0
        for i in range(L):
            cm |= bit(order[i])
        nc = U0
        for i in range(L):
            nc |= rows[order[i]]
        nc &= ~cm
        for t in range(nind):
            I = indep[t]
            e = 0
            outside = I & ~cm
            for i in range(L):
                e += popcount(rows[order[i]] & outside)
            ic = popcount(I & cm)
            rhs_proof = 2 * L - 4 * ic
            rhs_stmt = 2 * L - 4 * popcount(I & (cm | nc)) + 4 * popcount(I & nc)
            stats[0] += 1
            if e > rhs_proof or e > rhs_stmt or rhs_proof != rhs_stmt:
                stats[1] += 1
        far = full_mask(n) & ~cm & ~nc
        m = nc
        while m:
            x = lowest(m)
            m &= m - U1
            stats[4] += 1
            if attachment_code(rows, order, L, x) < 0:
                stats[5] += 1
            if rows[x] & far:
                stats[2] += 1
                S = rows[x] & cm
                if popcount(S) != 2:
                    stats[3] += 1
                else:
                    a = lowest(S)
                    b = lowest(S & (S - U1))
                    if not (rows[a] >> np.uint64(b)) & U1:
                        stats[3] += 1
