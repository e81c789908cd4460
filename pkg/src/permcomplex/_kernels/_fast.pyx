# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python decomposition kernels.

Same task-tree algorithm as ``pure.py``: segments of the value-sorted
position array live in one growable buffer with stack discipline (a child
segment sits above its suspended parent and is freed when it finishes).
A parallel buffer keeps per-segment suffix maxima so the connectivity
query can test split emptiness in O(1) without building the suffix.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy

import numpy as np

ctypedef long long i64


cdef struct Frame:
    Py_ssize_t off
    Py_ssize_t m
    Py_ssize_t shift
    Py_ssize_t a
    Py_ssize_t b


cdef struct Scratch:
    i64 *buf
    i64 *sufmax
    Py_ssize_t cap
    Frame *frames
    Py_ssize_t fcap


cdef int _scratch_init(Scratch *s, Py_ssize_t n) except -1:
    s.cap = 4 * n + 64
    s.fcap = n + 8
    s.buf = NULL
    s.sufmax = NULL
    s.frames = NULL
    s.buf = <i64 *> malloc(s.cap * sizeof(i64))
    s.sufmax = <i64 *> malloc(s.cap * sizeof(i64))
    s.frames = <Frame *> malloc(s.fcap * sizeof(Frame))
    if s.buf == NULL or s.sufmax == NULL or s.frames == NULL:
        _scratch_free(s)
        raise MemoryError()
    return 0


cdef void _scratch_free(Scratch *s) noexcept:
    if s.buf != NULL:
        free(s.buf)
        s.buf = NULL
    if s.sufmax != NULL:
        free(s.sufmax)
        s.sufmax = NULL
    if s.frames != NULL:
        free(s.frames)
        s.frames = NULL


cdef int _scratch_reserve(Scratch *s, Py_ssize_t need) except -1:
    cdef Py_ssize_t newcap = s.cap
    cdef i64 *nb
    cdef i64 *nsm
    if need <= s.cap:
        return 0
    while newcap < need:
        newcap *= 2
    nb = <i64 *> realloc(s.buf, newcap * sizeof(i64))
    if nb == NULL:
        raise MemoryError()
    s.buf = nb
    nsm = <i64 *> realloc(s.sufmax, newcap * sizeof(i64))
    if nsm == NULL:
        raise MemoryError()
    s.sufmax = nsm
    s.cap = newcap
    return 0


cdef int _frames_reserve(Scratch *s, Py_ssize_t need) except -1:
    cdef Py_ssize_t newcap = s.fcap
    cdef Frame *nf
    if need <= s.fcap:
        return 0
    while newcap < need:
        newcap *= 2
    nf = <Frame *> realloc(s.frames, newcap * sizeof(Frame))
    if nf == NULL:
        raise MemoryError()
    s.frames = nf
    s.fcap = newcap
    return 0


cdef inline void _fill_sufmax(Scratch *s, Py_ssize_t off, Py_ssize_t m) noexcept:
    cdef Py_ssize_t t
    if m == 0:
        return
    s.sufmax[off + m - 1] = s.buf[off + m - 1]
    for t in range(m - 2, -1, -1):
        if s.sufmax[off + t + 1] > s.buf[off + t]:
            s.sufmax[off + t] = s.sufmax[off + t + 1]
        else:
            s.sufmax[off + t] = s.buf[off + t]


cdef int _sphere_counts_raw(const i64 *pos, Py_ssize_t n, i64 *counts, Scratch *s) except -1:
    """counts[d] += number of S^d summands; counts must have length >= n + 1."""
    cdef Py_ssize_t sp, top, off, m, shift, a, b, t, cm, child_off
    cdef i64 p, v
    cdef bint spawned
    if n == 0:
        return 0
    _scratch_reserve(s, n)
    memcpy(s.buf, pos, n * sizeof(i64))
    s.frames[0] = Frame(0, n, 0, 0, 1)
    sp = 1
    top = n
    while sp > 0:
        off = s.frames[sp - 1].off
        m = s.frames[sp - 1].m
        shift = s.frames[sp - 1].shift
        a = s.frames[sp - 1].a
        b = s.frames[sp - 1].b
        spawned = False
        while b < m:
            if s.buf[off + a] < s.buf[off + b]:
                b += 1
            else:
                p = s.buf[off + a]
                _scratch_reserve(s, top + (m - b))
                child_off = top
                cm = 0
                for t in range(b, m):
                    v = s.buf[off + t]
                    if v > p:
                        s.buf[child_off + cm] = v
                        cm += 1
                a = b
                b += 1
                if cm == 0:
                    counts[shift] += 1
                else:
                    s.frames[sp - 1].a = a
                    s.frames[sp - 1].b = b
                    _frames_reserve(s, sp + 1)
                    s.frames[sp] = Frame(child_off, cm, shift + 1, 0, 1)
                    sp += 1
                    top = child_off + cm
                    spawned = True
                    break
        if not spawned:
            top = off
            sp -= 1
    return 0


cdef int _has_sphere_le_raw(const i64 *pos, Py_ssize_t n, Py_ssize_t r, Scratch *s) except -1:
    cdef Py_ssize_t sp, top, off, m, shift, a, b, t, cm, child_off
    cdef i64 p, v
    cdef bint spawned
    if n == 0 or r < 0:
        return 0
    _scratch_reserve(s, n)
    memcpy(s.buf, pos, n * sizeof(i64))
    _fill_sufmax(s, 0, n)
    s.frames[0] = Frame(0, n, 0, 0, 1)
    sp = 1
    top = n
    while sp > 0:
        off = s.frames[sp - 1].off
        m = s.frames[sp - 1].m
        shift = s.frames[sp - 1].shift
        a = s.frames[sp - 1].a
        b = s.frames[sp - 1].b
        spawned = False
        while b < m:
            if s.buf[off + a] < s.buf[off + b]:
                b += 1
            else:
                p = s.buf[off + a]
                if s.sufmax[off + b] < p:
                    return 1  # empty split: sphere of dimension shift <= r
                a = b
                b += 1
                if shift + 1 <= r:
                    _scratch_reserve(s, top + (m - b + 1))
                    child_off = top
                    cm = 0
                    for t in range(b - 1, m):
                        v = s.buf[off + t]
                        if v > p:
                            s.buf[child_off + cm] = v
                            cm += 1
                    _fill_sufmax(s, child_off, cm)
                    s.frames[sp - 1].a = a
                    s.frames[sp - 1].b = b
                    _frames_reserve(s, sp + 1)
                    s.frames[sp] = Frame(child_off, cm, shift + 1, 0, 1)
                    sp += 1
                    top = child_off + cm
                    spawned = True
                    break
        if not spawned:
            top = off
            sp -= 1
    return 0


def sphere_counts(pos):
    """dict dimension -> summand count; {} for contractible (or size 0)."""
    cdef i64[::1] arr = np.ascontiguousarray(pos, dtype=np.int64)
    cdef Py_ssize_t n = arr.shape[0]
    cdef Scratch s
    counts_arr = np.zeros(n + 1, dtype=np.int64)
    cdef i64[::1] counts = counts_arr
    if n == 0:
        return {}
    _scratch_init(&s, n)
    try:
        _sphere_counts_raw(&arr[0], n, &counts[0], &s)
    finally:
        _scratch_free(&s)
    return {int(d): int(counts_arr[d]) for d in range(n + 1) if counts_arr[d]}


def has_sphere_le(pos, r):
    """True iff the decomposition has a sphere of dimension <= r."""
    cdef i64[::1] arr = np.ascontiguousarray(pos, dtype=np.int64)
    cdef Py_ssize_t n = arr.shape[0]
    cdef Scratch s
    cdef int flag
    if n == 0 or r < 0:
        return False
    _scratch_init(&s, n)
    try:
        flag = _has_sphere_le_raw(&arr[0], n, int(r), &s)
    finally:
        _scratch_free(&s)
    return bool(flag)


def flags_not_r_connected(perms, r):
    """Per-row not-r-connected flags for rows of 0-based permutations."""
    cdef i64[:, ::1] P = np.ascontiguousarray(perms, dtype=np.int64)
    cdef Py_ssize_t m = P.shape[0]
    cdef Py_ssize_t n = P.shape[1]
    cdef Py_ssize_t i, j
    cdef Py_ssize_t rr = int(r)
    cdef Scratch s
    cdef i64 *inv
    if n < 1:
        raise ValueError("rows must be nonempty permutations")
    out_arr = np.zeros(m, dtype=bool)
    cdef unsigned char[::1] out = out_arr.view(np.uint8)
    if rr < 0:
        return out_arr
    _scratch_init(&s, n)
    inv = <i64 *> malloc(n * sizeof(i64))
    if inv == NULL:
        _scratch_free(&s)
        raise MemoryError()
    try:
        for i in range(m):
            for j in range(n):
                inv[P[i, j]] = j
            out[i] = 1 if _has_sphere_le_raw(inv, n, rr, &s) else 0
    finally:
        _scratch_free(&s)
        free(inv)
    return out_arr


def count_not_r_connected(perms, r):
    return int(flags_not_r_connected(perms, r).sum())
