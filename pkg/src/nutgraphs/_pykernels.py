"""Pure-Python hot kernels.

This module is the reference implementation of the routines that the compiled
``_ckernels`` extension accelerates. Both expose the same three functions:

``expand(n, adj, k, stop, lo, hi, connected)``
    Orderly row-by-row generation. ``adj`` is a sequence of ``n`` adjacency
    bitmasks whose first ``k`` rows are complete. Returns every canonical
    extension whose first ``stop`` rows are complete, as tuples of bitmasks.

``is_canonical(n, adj, known)``
    Whether the labelling of ``adj`` has the lexicographically largest
    upper-triangle row code, looking only at orderings whose first ``known``
    vertices have complete rows.

``nullity_mod_p(n, adj)``
    Nullity of the adjacency matrix over GF(p), p = 2**31 - 1.

A graph is canonical when reading its upper triangle row by row gives the
largest bit string over all relabellings. Every ordering achieving the maximum
keeps the not-yet-placed vertices sorted by their adjacency to the placed ones,
so the search only ever picks the next vertex from the leading cell.
"""

from __future__ import annotations

PRIME = 2147483647


def _chunk(n: int, r: int, cells: list[int], nbrs: int) -> tuple[int, list[int]]:
    # Split every cell into (adjacent, non-adjacent) and encode row r.
    chunk = 0
    pos = r + 1
    out = []
    for m in cells:
        s = m.bit_count()
        a = m & nbrs
        if a:
            sa = a.bit_count()
            chunk |= ((1 << sa) - 1) << (n - pos - sa)
            out.append(a)
            if a != m:
                out.append(m & ~nbrs)
        else:
            out.append(m)
        pos += s
    return chunk, out


def _row_codes(n: int, adj, known: int) -> list[int]:
    codes = []
    for r in range(known):
        c = 0
        row = adj[r]
        for col in range(r + 1, n):
            if row >> col & 1:
                c |= 1 << (n - 1 - col)
        codes.append(c)
    return codes


def is_canonical(n: int, adj, known: int) -> bool:
    if n <= 1:
        return True
    ident = _row_codes(n, adj, known)
    everyone = (1 << n) - 1

    def search(r: int, cells: list[int]) -> bool:
        first = cells[0]
        rest = cells[1:]
        cand = first & ((1 << known) - 1)
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            head = first ^ low
            cur = [head] + rest if head else rest
            chunk, refined = _chunk(n, r, cur, adj[w])
            if chunk > ident[r]:
                return False
            if chunk == ident[r] and r + 1 < known and refined:
                if not search(r + 1, refined):
                    return False
        return True

    return search(0, [everyone])


def _row_choices(cells, caps, need_lo, need_hi):
    # Yield tuples of per-cell counts; ones go to the front of each cell.
    m = len(cells)
    counts = [0] * m
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]

    def rec(i, used):
        if i == m:
            if used >= need_lo:
                yield tuple(counts)
            return
        if used + suffix[i] < need_lo:
            return
        top = min(caps[i], need_hi - used)
        for c in range(top, -1, -1):
            counts[i] = c
            yield from rec(i + 1, used + c)
        counts[i] = 0

    yield from rec(0, 0)


def expand(n: int, adj, k: int, stop: int, lo: int, hi: int, connected: bool) -> list[tuple]:
    adj = list(adj)
    deg = [a.bit_count() for a in adj]
    out: list[tuple] = []

    def rec(k: int) -> None:
        if k == stop:
            out.append(tuple(adj))
            return
        # cells over the free columns k+1..n-1
        mask = (1 << k) - 1
        cells = []
        start = k + 1
        for j in range(k + 2, n + 1):
            if j == n or (adj[j] & mask) != (adj[start] & mask):
                cells.append((start, j))
                start = j
        caps = [(e - s) if deg[s] < hi else 0 for s, e in cells]
        need_lo = max(lo - deg[k], 0)
        need_hi = min(hi - deg[k], n - 1 - k)
        if need_hi < need_lo:
            return
        bit_k = 1 << k
        slack = n - k - 2
        for counts in _row_choices(cells, caps, need_lo, need_hi):
            row = 0
            for (s, _e), c in zip(cells, counts):
                for j in range(s, s + c):
                    row |= 1 << j
                    adj[j] |= bit_k
                    deg[j] += 1
            adj[k] |= row
            deg[k] += row.bit_count()
            ok = True
            if k + 1 < n:
                if connected and not adj[k + 1] & ((bit_k << 1) - 1):
                    ok = False
                elif lo > 0:
                    for j in range(k + 1, n):
                        if deg[j] + slack < lo:
                            ok = False
                            break
            if ok and is_canonical(n, adj, k + 1):
                rec(k + 1)
            adj[k] ^= row
            deg[k] -= row.bit_count()
            for (s, _e), c in zip(cells, counts):
                for j in range(s, s + c):
                    adj[j] ^= bit_k
                    deg[j] -= 1

    rec(k)
    return out


def nullity_mod_p(n: int, adj) -> int:
    rows = [[(adj[i] >> j) & 1 for j in range(n)] for i in range(n)]
    rank = 0
    p = PRIME
    for c in range(n):
        piv = None
        for r in range(rank, n):
            if rows[r][c]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], p - 2, p)
        for r in range(rank + 1, n):
            f = rows[r][c]
            if f:
                f = f * inv % p
                row = rows[r]
                for j in range(c, n):
                    if prow[j]:
                        row[j] = (row[j] - f * prow[j]) % p
        rank += 1
    return n - rank
