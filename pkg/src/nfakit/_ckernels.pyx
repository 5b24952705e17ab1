# distutils: language = c++
"""Compiled subset construction and Moore refinement for automata with <= 64 states."""

from cython.operator cimport dereference as deref
from libc.stdint cimport uint64_t
from libcpp.map cimport map as cmap
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

from nfakit._pykernels import SubsetLimitExceeded

MAX_STATES = 64


cdef int _determinize(int nsym, vector[uint64_t]& delta, uint64_t init, Py_ssize_t limit,
                      vector[uint64_t]& subsets, vector[int]& table) except -1:
    # delta has one entry per (state, symbol); n is recovered from its length
    cdef Py_ssize_t n = delta.size() // nsym if nsym else 0
    cdef Py_ssize_t nchunks = (n + 7) // 8
    cdef vector[uint64_t] lut
    cdef Py_ssize_t a, c, b, bit, q, i, j
    cdef uint64_t acc, s, t
    lut.resize(nsym * nchunks * 256, 0)
    for a in range(nsym):
        for c in range(nchunks):
            for b in range(1, 256):
                acc = 0
                for bit in range(8):
                    q = c * 8 + bit
                    if (b >> bit) & 1 and q < n:
                        acc |= delta[q * nsym + a]
                lut[(a * nchunks + c) * 256 + b] = acc

    cdef unordered_map[uint64_t, int] index
    cdef unordered_map[uint64_t, int].iterator it
    subsets.clear()
    table.clear()
    index[init] = 0
    subsets.push_back(init)
    i = 0
    while i < <Py_ssize_t>subsets.size():
        s = subsets[i]
        for a in range(nsym):
            t = 0
            for c in range(nchunks):
                b = (s >> (8 * c)) & 0xFF
                if b:
                    t |= lut[(a * nchunks + c) * 256 + b]
            it = index.find(t)
            if it == index.end():
                j = subsets.size()
                if limit and j >= limit:
                    raise SubsetLimitExceeded(limit)
                index[t] = j
                subsets.push_back(t)
            else:
                j = deref(it).second
            table.push_back(j)
        i += 1
    return 0


cdef vector[int] _refine(Py_ssize_t n, int nsym, vector[int]& table, vector[int]& final):
    cdef vector[int] block, new
    cdef vector[int] key
    cdef cmap[vector[int], int] sigs
    cdef cmap[vector[int], int].iterator it
    cdef Py_ssize_t q, a, count, nb
    block.resize(n, 0)
    new.resize(n, 0)
    key.resize(nsym + 1, 0)
    if n == 0:
        return block
    cdef bint any_final = False, all_final = True
    for q in range(n):
        if final[q]:
            any_final = True
        else:
            all_final = False
    if any_final and not all_final:
        for q in range(n):
            if final[q] != final[0]:
                block[q] = 1
        count = 2
    else:
        count = 1
    while True:
        sigs.clear()
        for q in range(n):
            key[0] = block[q]
            for a in range(nsym):
                key[a + 1] = block[table[q * nsym + a]]
            it = sigs.find(key)
            if it == sigs.end():
                nb = sigs.size()
                sigs[key] = nb
                new[q] = nb
            else:
                new[q] = deref(it).second
        block.swap(new)
        if <Py_ssize_t>sigs.size() == count:
            return block
        count = sigs.size()


def determinize(int nsym, list delta, init, Py_ssize_t limit=0):
    cdef vector[uint64_t] d
    cdef vector[uint64_t] subsets
    cdef vector[int] table
    for m in delta:
        d.push_back(<uint64_t>m)
    _determinize(nsym, d, <uint64_t>init, limit, subsets, table)
    return [s for s in subsets], [t for t in table]


def refine(Py_ssize_t n, int nsym, list table, list final):
    cdef vector[int] t
    cdef vector[int] f
    for x in table:
        t.push_back(x)
    for x in final:
        f.push_back(<int>bool(x))
    return [b for b in _refine(n, nsym, t, f)]


def state_complexity(int nsym, list delta, init, final_mask, Py_ssize_t limit=0):
    cdef vector[uint64_t] d
    cdef vector[uint64_t] subsets
    cdef vector[int] table
    cdef vector[int] f
    cdef uint64_t fm = <uint64_t>final_mask
    cdef Py_ssize_t i, best = 0
    for m in delta:
        d.push_back(<uint64_t>m)
    _determinize(nsym, d, <uint64_t>init, limit, subsets, table)
    for i in range(<Py_ssize_t>subsets.size()):
        f.push_back(<int>((subsets[i] & fm) != 0))
    cdef vector[int] block = _refine(subsets.size(), nsym, table, f)
    for i in range(<Py_ssize_t>block.size()):
        if block[i] + 1 > best:
            best = block[i] + 1
    return best
