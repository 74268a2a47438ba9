# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; mirrors ``_pykernels`` decision for decision.

Bitset kernels work on 64-bit words, so the dispatcher only routes inputs
with at most 64 vertices/elements here.
"""
from libc.stdint cimport int32_t, int64_t, uint64_t
from libcpp.vector cimport vector
from libcpp.unordered_set cimport unordered_set
from libcpp.unordered_map cimport unordered_map
from libcpp.pair cimport pair
from libcpp.algorithm cimport sort
from cython.operator cimport dereference as deref

import numpy as np

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


def all_pairs_bfs(indptr, indices, int n):
    cdef int32_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int32_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    out = np.full((n, n), -1, dtype=np.int32)
    cdef int32_t[:, ::1] dist = out
    cdef vector[int32_t] queue
    cdef int s, u, w, head, tail, j, du
    queue.resize(max(n, 1))
    with nogil:
        for s in range(n):
            dist[s, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[s, u] + 1
                for j in range(ip[u], ip[u + 1]):
                    w = ix[j]
                    if dist[s, w] < 0:
                        dist[s, w] = du
                        queue[tail] = w
                        tail += 1
    return out


def component_labels(indptr, indices, int n):
    cdef int32_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int32_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    out = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] label = out
    cdef vector[int32_t] stack
    cdef int s, u, w, j, count = 0
    with nogil:
        for s in range(n):
            if label[s] >= 0:
                continue
            label[s] = count
            stack.push_back(s)
            while stack.size():
                u = stack.back()
                stack.pop_back()
                for j in range(ip[u], ip[u + 1]):
                    w = ix[j]
                    if label[w] < 0:
                        label[w] = count
                        stack.push_back(w)
            count += 1
    return out


def fire(indptr, indices, int n, centers):
    cdef int32_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int32_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int k = len(centers)
    out = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] remaining = out
    cdef vector[vector[int32_t]] buckets
    cdef int i, b, level, idx, u, w, j
    buckets.resize(k)
    for i in range(k):
        b = centers[i]
        if i > remaining[b]:
            remaining[b] = i
            buckets[i].push_back(b)
    with nogil:
        for level in range(k - 1, 0, -1):
            idx = 0
            while idx < <int>buckets[level].size():
                u = buckets[level][idx]
                idx += 1
                if remaining[u] != level:
                    continue
                for j in range(ip[u], ip[u + 1]):
                    w = ix[j]
                    if remaining[w] < level - 1:
                        remaining[w] = level - 1
                        buckets[level - 1].push_back(w)
    return out


def separated_set(indptr, indices, int n, int radius, int limit):
    cdef int32_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int32_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef vector[int32_t] best
    cdef vector[int32_t] qv
    cdef vector[int32_t] qd
    cdef vector[int32_t] centers
    cdef int v, u, w, d, j, head
    best.assign(n, radius + 1)
    with nogil:
        for v in range(n):
            if best[v] <= radius:
                continue
            centers.push_back(v)
            if <int>centers.size() >= limit:
                break
            best[v] = 0
            qv.clear()
            qd.clear()
            qv.push_back(v)
            qd.push_back(0)
            head = 0
            while head < <int>qv.size():
                u = qv[head]
                d = qd[head]
                head += 1
                if d >= radius:
                    continue
                for j in range(ip[u], ip[u + 1]):
                    w = ix[j]
                    if best[w] > d + 1:
                        best[w] = d + 1
                        qv.push_back(w)
                        qd.push_back(d + 1)
    return [int(c) for c in centers]


cdef class _CoverSearch:
    cdef int levels, n
    cdef vector[uint64_t] balls
    cdef vector[int] tail
    cdef vector[unordered_set[uint64_t]] failed
    cdef vector[int] chosen

    cdef bint rec(self, int j, uint64_t uncovered) nogil:
        cdef int need, v, i, size
        cdef uint64_t c, other
        cdef vector[uint64_t] keys
        cdef vector[uint64_t] kept
        cdef bint dominated
        cdef int base
        if uncovered == 0:
            return True
        if j == self.levels:
            return False
        need = popcount64(uncovered)
        if self.tail[j] < need or self.failed[j].count(uncovered):
            return False
        base = j * self.n
        for v in range(self.n):
            c = self.balls[base + v] & uncovered
            if c:
                # ascending key = descending coverage, then ascending id
                keys.push_back((<uint64_t>(64 - popcount64(c)) << 8) | <uint64_t>v)
        if keys.size() == 0:
            # nothing at this level helps; leave it unused
            if self.rec(j + 1, uncovered):
                return True
            self.failed[j].insert(uncovered)
            return False
        sort(keys.begin(), keys.end())
        if 64 - <int>(keys[0] >> 8) + self.tail[j + 1] < need:
            self.failed[j].insert(uncovered)
            return False
        for i in range(<int>keys.size()):
            v = <int>(keys[i] & 0xFF)
            c = self.balls[base + v] & uncovered
            dominated = False
            for other in kept:
                if c & ~other == 0:
                    dominated = True
                    break
            if dominated:
                continue
            kept.push_back(c)
            self.chosen[j] = v
            if self.rec(j + 1, uncovered & ~c):
                return True
        self.chosen[j] = -1
        self.failed[j].insert(uncovered)
        return False


def cover_search(balls, full):
    cdef _CoverSearch cs = _CoverSearch()
    cdef int levels = len(balls)
    cdef int j, v, best, pc
    cdef uint64_t b
    cdef uint64_t target = <uint64_t>full
    cdef bint ok
    if full == 0:
        return [-1] * levels
    if levels == 0:
        return None
    cs.levels = levels
    cs.n = len(balls[0])
    cs.balls.resize(levels * cs.n)
    cs.tail.assign(levels + 1, 0)
    cs.chosen.assign(levels, -1)
    cs.failed.resize(levels)
    for j in range(levels):
        row = balls[j]
        for v in range(cs.n):
            cs.balls[j * cs.n + v] = <uint64_t>row[v]
    for j in range(levels - 1, -1, -1):
        best = 0
        for v in range(cs.n):
            pc = popcount64(cs.balls[j * cs.n + v])
            if pc > best:
                best = pc
        cs.tail[j] = cs.tail[j + 1] + best
    with nogil:
        ok = cs.rec(0, target)
    if ok:
        return [int(c) for c in cs.chosen]
    return None


cdef class _SetCover:
    cdef vector[uint64_t] sets
    cdef vector[vector[int]] containing
    cdef vector[uint64_t] cooc
    cdef unordered_map[uint64_t, int] failed
    cdef vector[int] path

    cdef int lower_bound(self, uint64_t mask) nogil:
        cdef uint64_t blocked = 0
        cdef uint64_t low
        cdef int count = 0
        while mask:
            low = mask & (~mask + 1)
            mask ^= low
            if not (blocked & low):
                count += 1
                blocked |= self.cooc[ctz64(low)]
        return count

    cdef bint rec(self, uint64_t mask, int b) nogil:
        cdef unordered_map[uint64_t, int].iterator it
        cdef unordered_set[uint64_t] seen
        cdef uint64_t part
        cdef int e, i, idx
        if mask == 0:
            return True
        if b == 0:
            return False
        it = self.failed.find(mask)
        if it != self.failed.end() and deref(it).second >= b:
            return False
        if self.lower_bound(mask) > b:
            return False
        e = ctz64(mask)
        for i in range(<int>self.containing[e].size()):
            idx = self.containing[e][i]
            part = self.sets[idx] & mask
            if seen.count(part):
                continue
            seen.insert(part)
            self.path.push_back(idx)
            if self.rec(mask & ~part, b - 1):
                return True
            self.path.pop_back()
        self.failed[mask] = b
        return False


def set_cover(sets, universe, int budget):
    cdef _SetCover sc = _SetCover()
    cdef uint64_t uni = <uint64_t>universe
    cdef uint64_t s, x, low
    cdef int idx, e, b, nbits
    cdef bint ok = False
    if universe == 0:
        return []
    nbits = int(universe).bit_length()
    sc.containing.resize(nbits)
    sc.cooc.assign(nbits, 0)
    for idx in range(len(sets)):
        s = (<uint64_t>sets[idx]) & uni
        sc.sets.push_back(<uint64_t>sets[idx])
        x = s
        while x:
            low = x & (~x + 1)
            e = ctz64(low)
            sc.containing[e].push_back(idx)
            sc.cooc[e] |= s
            x ^= low
    x = uni
    while x:
        low = x & (~x + 1)
        if sc.containing[ctz64(low)].size() == 0:
            return None
        x ^= low
    for b in range(sc.lower_bound(uni), budget + 1):
        with nogil:
            ok = sc.rec(uni, b)
        if ok:
            return [int(i) for i in sc.path]
    return None


cdef inline uint64_t _splitmix_next(uint64_t* state) nogil:
    cdef uint64_t z
    state[0] += 0x9E3779B97F4A7C15ULL
    z = state[0]
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def color_coding(members, int universe_size, int t, int colors, long long trials, seed):
    cdef vector[uint64_t] mem
    cdef vector[int] coloring
    cdef vector[int] cidx
    cdef vector[uint64_t] cmask_of
    cdef vector[unordered_map[uint64_t, pair[uint64_t, int]]] back
    cdef vector[uint64_t] keys
    cdef uint64_t state, x, low, cm, mask, new
    cdef uint64_t seed64 = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef long long trial
    cdef int i, e, size, layer, idx, q
    cdef pair[uint64_t, int] entry
    for m in members:
        mem.push_back(<uint64_t>m)
    coloring.resize(universe_size)
    for trial in range(trials):
        state = seed64 ^ (<uint64_t>(trial + 1) * 0xD1B54A32D192ED03ULL)
        for e in range(universe_size):
            coloring[e] = <int>(_splitmix_next(&state) % <uint64_t>colors)
        cidx.clear()
        cmask_of.clear()
        for i in range(<int>mem.size()):
            cm = 0
            size = 0
            x = mem[i]
            while x:
                low = x & (~x + 1)
                x ^= low
                cm |= (<uint64_t>1) << coloring[ctz64(low)]
                size += 1
            if popcount64(cm) == size:
                cidx.push_back(i)
                cmask_of.push_back(cm)
        if <int>cidx.size() < t:
            continue
        back.clear()
        back.resize(1)
        back[0][0] = pair[uint64_t, int](0, -1)
        for layer in range(t):
            keys.clear()
            for kv in back[layer]:
                keys.push_back(kv.first)
            sort(keys.begin(), keys.end())
            back.resize(layer + 2)
            for mask in keys:
                for q in range(<int>cidx.size()):
                    if cmask_of[q] & mask:
                        continue
                    new = mask | cmask_of[q]
                    if back[layer + 1].count(new) == 0:
                        back[layer + 1][new] = pair[uint64_t, int](mask, cidx[q])
            if back[layer + 1].size() == 0:
                break
        if <int>back.size() == t + 1 and back[t].size() > 0:
            keys.clear()
            for kv in back[t]:
                keys.push_back(kv.first)
            sort(keys.begin(), keys.end())
            mask = keys[0]
            picked = []
            for layer in range(t, 0, -1):
                entry = back[layer][mask]
                picked.append(int(entry.second))
                mask = entry.first
            picked.reverse()
            return picked
    return None
