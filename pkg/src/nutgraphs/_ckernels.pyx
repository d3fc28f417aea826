# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; same contract as ``_pykernels`` for n <= 64."""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil

cdef enum:
    MAXN = 64
cdef uint64_t PRIME = 2147483647ULL


cdef inline uint64_t _row_code(int n, uint64_t row, int r) noexcept nogil:
    cdef uint64_t code = 0
    cdef int col
    row &= ~((2ULL << r) - 1) if r < 63 else 0ULL
    while row:
        col = ctz(row)
        row &= row - 1
        code |= 1ULL << (n - 1 - col)
    return code


cdef int _search(int n, int r, int known, const uint64_t* adj, const uint64_t* ident,
                 const uint64_t* cells, int ncells) noexcept nogil:
    cdef uint64_t first = cells[0]
    cdef uint64_t kmask = (1ULL << known) - 1 if known < 64 else ~0ULL
    cdef uint64_t cand = first & kmask
    cdef uint64_t refined[MAXN]
    cdef uint64_t low, nbrs, chunk, m, a
    cdef int w, i, nref, pos, s, sa
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        w = ctz(low)
        nbrs = adj[w]
        chunk = 0
        pos = r + 1
        nref = 0
        for i in range(ncells):
            m = cells[i]
            if i == 0:
                m ^= low
                if m == 0:
                    continue
            s = popcount(m)
            a = m & nbrs
            if a:
                sa = popcount(a)
                chunk |= ((1ULL << sa) - 1) << (n - pos - sa)
                refined[nref] = a
                nref += 1
                if a != m:
                    refined[nref] = m & ~nbrs
                    nref += 1
            else:
                refined[nref] = m
                nref += 1
            pos += s
        if chunk > ident[r]:
            return 0
        if chunk == ident[r] and r + 1 < known and nref:
            if not _search(n, r + 1, known, adj, ident, refined, nref):
                return 0
    return 1


cdef int _canonical(int n, const uint64_t* adj, const uint64_t* ident, int known) noexcept nogil:
    cdef uint64_t cells[1]
    if n <= 1:
        return 1
    cells[0] = (1ULL << n) - 1 if n < 64 else ~0ULL
    return _search(n, 0, known, adj, ident, cells, 1)


cdef struct State:
    int n
    int lo
    int hi
    int connected
    int stop
    uint64_t adj[MAXN]
    uint64_t ident[MAXN]
    int deg[MAXN]


cdef inline void _set(State* st, int k, int j) noexcept nogil:
    st.adj[k] |= 1ULL << j
    st.adj[j] |= 1ULL << k
    st.deg[k] += 1
    st.deg[j] += 1


cdef inline void _unset(State* st, int k, int j) noexcept nogil:
    st.adj[k] ^= 1ULL << j
    st.adj[j] ^= 1ULL << k
    st.deg[k] -= 1
    st.deg[j] -= 1


cdef int _leaf(State* st, int k, list out) except -1:
    cdef int n = st.n
    cdef int j
    if k + 1 < n:
        if st.connected and not (st.adj[k + 1] & ((2ULL << k) - 1)):
            return 0
        if st.lo > 0:
            for j in range(k + 1, n):
                if st.deg[j] + n - k - 2 < st.lo:
                    return 0
    st.ident[k] = _row_code(n, st.adj[k], k)
    if _canonical(n, st.adj, st.ident, k + 1):
        _fill(st, k + 1, out)
    return 0


cdef int _distribute(State* st, int k, int* cs, int* caps, int* suffix, int ncell,
                     int i, int used, int need_lo, int need_hi, list out) except -1:
    cdef int top, c, j
    if i == ncell:
        if used >= need_lo:
            _leaf(st, k, out)
        return 0
    if used + suffix[i] < need_lo:
        return 0
    top = caps[i]
    if need_hi - used < top:
        top = need_hi - used
    for j in range(cs[i], cs[i] + top):
        _set(st, k, j)
    c = top
    while True:
        _distribute(st, k, cs, caps, suffix, ncell, i + 1, used + c, need_lo, need_hi, out)
        if c == 0:
            break
        c -= 1
        _unset(st, k, cs[i] + c)
    return 0


cdef int _fill(State* st, int k, list out) except -1:
    cdef int n = st.n
    cdef int cs[MAXN]
    cdef int caps[MAXN]
    cdef int suffix[MAXN + 1]
    cdef int ncell = 0
    cdef int start, j, i, need_lo, need_hi
    cdef uint64_t mask
    if k == st.stop:
        out.append(tuple([st.adj[i] for i in range(n)]))
        return 0
    mask = (1ULL << k) - 1
    start = k + 1
    for j in range(k + 2, n + 1):
        if j == n or (st.adj[j] & mask) != (st.adj[start] & mask):
            cs[ncell] = start
            caps[ncell] = j - start if st.deg[start] < st.hi else 0
            ncell += 1
            start = j
    suffix[ncell] = 0
    for i in range(ncell - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    need_lo = st.lo - st.deg[k]
    if need_lo < 0:
        need_lo = 0
    need_hi = st.hi - st.deg[k]
    if n - 1 - k < need_hi:
        need_hi = n - 1 - k
    if need_hi < need_lo:
        return 0
    _distribute(st, k, cs, caps, suffix, ncell, 0, 0, need_lo, need_hi, out)
    return 0


def expand(int n, adj, int k, int stop, int lo, int hi, bint connected):
    cdef State st
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernel supports n <= 64")
    st.n = n
    st.lo = lo
    st.hi = hi
    st.connected = connected
    st.stop = stop
    for i in range(MAXN):
        st.adj[i] = 0
        st.deg[i] = 0
        st.ident[i] = 0
    for i in range(n):
        st.adj[i] = adj[i]
        st.deg[i] = popcount(st.adj[i])
    for i in range(k):
        st.ident[i] = _row_code(n, st.adj[i], i)
    out = []
    _fill(&st, k, out)
    return out


def is_canonical(int n, adj, int known):
    cdef uint64_t a[MAXN]
    cdef uint64_t ident[MAXN]
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernel supports n <= 64")
    for i in range(n):
        a[i] = adj[i]
    for i in range(known):
        ident[i] = _row_code(n, a[i], i)
    return bool(_canonical(n, a, ident, known))


def nullity_mod_p(int n, adj):
    cdef uint64_t m[MAXN][MAXN]
    cdef uint64_t row_bits, f, inv, b, e, x
    cdef int i, j, r, c, piv, rank = 0
    if n > MAXN:
        raise ValueError("compiled kernel supports n <= 64")
    for i in range(n):
        row_bits = adj[i]
        for j in range(n):
            m[i][j] = (row_bits >> j) & 1
    for c in range(n):
        piv = -1
        for r in range(rank, n):
            if m[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(n):
                m[rank][j], m[piv][j] = m[piv][j], m[rank][j]
        # modular inverse by exponentiation
        inv = 1
        b = m[rank][c]
        e = PRIME - 2
        while e:
            if e & 1:
                inv = inv * b % PRIME
            b = b * b % PRIME
            e >>= 1
        for r in range(rank + 1, n):
            if m[r][c]:
                f = m[r][c] * inv % PRIME
                for j in range(c, n):
                    x = m[rank][j]
                    if x:
                        m[r][j] = (m[r][j] + PRIME - f * x % PRIME) % PRIME
        rank += 1
    return n - rank
