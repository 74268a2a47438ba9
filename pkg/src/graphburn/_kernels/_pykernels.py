"""Pure-Python reference versions of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same search order, so both backends return identical answers.
Bitsets are plain ints (bit ``v`` set means vertex/element ``v``).
"""
from collections import deque

import numpy as np

MASK64 = (1 << 64) - 1


def all_pairs_bfs(indptr, indices, n):
    """Hop distances between all vertex pairs; ``-1`` marks unreachable."""
    dist = np.full((n, n), -1, dtype=np.int32)
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if row[w] < 0:
                    row[w] = du
                    queue.append(w)
        dist[s] = row
    return dist


def component_labels(indptr, indices, n):
    """Component id per vertex, numbered in order of each component's smallest vertex."""
    label = np.full(n, -1, dtype=np.int32)
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    count = 0
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if label[w] < 0:
                    label[w] = count
                    stack.append(w)
        count += 1
    return label


def fire(indptr, indices, n, centers):
    """Remaining radius of the fire at each vertex after the schedule; ``-1`` = unburned.

    Center ``centers[i]`` starts a fire of radius ``i``; fires spread one hop
    per unit of radius. Processed by decreasing radius, so each vertex is
    expanded once per level it is improved at.
    """
    k = len(centers)
    remaining = [-1] * n
    buckets = [[] for _ in range(k)]
    for i, b in enumerate(centers):
        if i > remaining[b]:
            remaining[b] = i
            buckets[i].append(b)
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    for level in range(k - 1, 0, -1):
        for u in buckets[level]:
            if remaining[u] != level:
                continue
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if remaining[w] < level - 1:
                    remaining[w] = level - 1
                    buckets[level - 1].append(w)
    return np.array(remaining, dtype=np.int32)


def separated_set(indptr, indices, n, radius, limit):
    """Greedy scan in id order keeping vertices farther than ``radius`` from all kept ones.

    Stops as soon as ``limit`` vertices are kept.
    """
    unreached = radius + 1
    best = [unreached] * n
    centers = []
    for v in range(n):
        if best[v] <= radius:
            continue
        centers.append(v)
        if len(centers) >= limit:
            break
        best[v] = 0
        queue = deque([(v, 0)])
        while queue:
            u, d = queue.popleft()
            if d >= radius:
                continue
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if best[w] > d + 1:
                    best[w] = d + 1
                    queue.append((w, d + 1))
    return centers


def cover_search(balls, full):
    """Pick one center per level so the chosen balls cover ``full``.

    ``balls[j][v]`` is the ball of the j-th level around ``v``; callers pass
    levels in decreasing radius order. Returns the chosen vertex per level
    (``-1`` for levels left unused once everything is covered) or ``None``.
    """
    levels = len(balls)
    if full == 0:
        return [-1] * levels
    if levels == 0:
        return None
    n = len(balls[0])
    # tail[j]: best-case number of vertices levels j.. can still cover
    tail = [0] * (levels + 1)
    for j in range(levels - 1, -1, -1):
        tail[j] = tail[j + 1] + max(bin(b).count("1") for b in balls[j])
    chosen = [-1] * levels
    failed = set()

    def rec(j, uncovered):
        if uncovered == 0:
            return True
        if j == levels:
            return False
        need = bin(uncovered).count("1")
        if tail[j] < need or (j, uncovered) in failed:
            return False
        row = balls[j]
        cands = []
        for v in range(n):
            c = row[v] & uncovered
            if c:
                cands.append((-bin(c).count("1"), v, c))
        if not cands:
            # nothing at this level helps; leave it unused
            if rec(j + 1, uncovered):
                return True
            failed.add((j, uncovered))
            return False
        cands.sort()
        if -cands[0][0] + tail[j + 1] < need:
            failed.add((j, uncovered))
            return False
        kept = []
        for negsize, v, c in cands:
            if any(c & ~other == 0 for other in kept):
                continue
            kept.append(c)
            chosen[j] = v
            if rec(j + 1, uncovered & ~c):
                return True
        chosen[j] = -1
        failed.add((j, uncovered))
        return False

    if rec(0, full):
        return chosen
    return None


def set_cover(sets, universe, budget):
    """Minimum-cardinality subfamily of ``sets`` covering ``universe``.

    Returns the chosen indices if the minimum is at most ``budget``, else
    ``None``. Branches on the lowest uncovered element; prunes with a packing
    bound (elements that never share a set need distinct sets) and memoises
    the largest budget already known to fail for each uncovered mask.
    """
    if universe == 0:
        return []
    nbits = universe.bit_length()
    containing = [[] for _ in range(nbits)]
    cooc = [0] * nbits
    for idx, s in enumerate(sets):
        s &= universe
        x = s
        while x:
            low = x & -x
            e = low.bit_length() - 1
            containing[e].append(idx)
            cooc[e] |= s
            x ^= low
    x = universe
    while x:
        low = x & -x
        if not containing[low.bit_length() - 1]:
            return None
        x ^= low

    def lower_bound(mask):
        blocked = 0
        count = 0
        x = mask
        while x:
            low = x & -x
            x ^= low
            if not blocked & low:
                count += 1
                blocked |= cooc[low.bit_length() - 1]
        return count

    failed = {}
    path = []

    def rec(mask, b):
        if mask == 0:
            return True
        if b == 0 or failed.get(mask, -1) >= b or lower_bound(mask) > b:
            return False
        e = (mask & -mask).bit_length() - 1
        seen = set()
        for idx in containing[e]:
            part = sets[idx] & mask
            if part in seen:
                continue
            seen.add(part)
            path.append(idx)
            if rec(mask & ~part, b - 1):
                return True
            path.pop()
        failed[mask] = b
        return False

    for b in range(lower_bound(universe), budget + 1):
        if rec(universe, b):
            return list(path)
    return None


def splitmix64(state):
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def trial_state(seed, trial):
    return (seed & MASK64) ^ (((trial + 1) * 0xD1B54A32D192ED03) & MASK64)


def color_coding(members, universe_size, t, colors, trials, seed):
    """Randomised search for ``t`` pairwise-disjoint members via color coding.

    Each trial colors the universe with ``colors`` colors and looks for ``t``
    members whose color sets are pairwise disjoint (which forces disjointness
    of the members themselves). Returns member indices or ``None``.
    """
    for trial in range(trials):
        state = trial_state(seed, trial)
        coloring = []
        for _ in range(universe_size):
            state, z = splitmix64(state)
            coloring.append(z % colors)
        colored = []
        for idx, m in enumerate(members):
            cmask = 0
            size = 0
            x = m
            while x:
                low = x & -x
                x ^= low
                cmask |= 1 << coloring[low.bit_length() - 1]
                size += 1
            if bin(cmask).count("1") == size:
                colored.append((idx, cmask))
        if len(colored) < t:
            continue
        # layer[mask] = (previous mask, member index)
        back = [{0: (-1, -1)}]
        for _ in range(t):
            nxt = {}
            for mask in sorted(back[-1]):
                for idx, cmask in colored:
                    if cmask & mask:
                        continue
                    new = mask | cmask
                    if new not in nxt:
                        nxt[new] = (mask, idx)
            if not nxt:
                break
            back.append(nxt)
        if len(back) == t + 1:
            mask = min(back[-1])
            picked = []
            for layer in range(t, 0, -1):
                prev, idx = back[layer][mask]
                picked.append(idx)
                mask = prev
            picked.reverse()
            return picked
    return None
