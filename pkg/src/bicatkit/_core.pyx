# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: same contracts as bicatkit.kernels.pure."""

import numpy as np

IMPLEMENTATION = "compiled"


def scan_pentagon(int[:, ::1] comp1, int[:, ::1] vcomp, int[:, ::1] comp2,
                  int[::1] id2, int[:, :, ::1] assoc, int cap):
    cdef Py_ssize_t n1 = comp1.shape[0]
    cdef Py_ssize_t k, h, g, f
    cdef int kh, hg, gf, lhs, rhs, step
    cdef long total = 0
    rows = []
    for k in range(n1):
        for h in range(n1):
            kh = comp1[k, h]
            if kh < 0:
                continue
            for g in range(n1):
                hg = comp1[h, g]
                if hg < 0:
                    continue
                for f in range(n1):
                    gf = comp1[g, f]
                    if gf < 0:
                        continue
                    lhs = vcomp[assoc[k, h, gf], assoc[kh, g, f]]
                    step = comp2[assoc[k, h, g], id2[f]]
                    step = vcomp[assoc[k, hg, f], step]
                    rhs = vcomp[comp2[id2[k], assoc[h, g, f]], step]
                    if lhs != rhs or lhs < 0:
                        total += 1
                        if len(rows) < cap:
                            rows.append((k, h, g, f))
    return rows, total


def scan_triangle(int[:, ::1] comp1, int[:, ::1] vcomp, int[:, ::1] comp2,
                  int[::1] id2, int[:, :, ::1] assoc, int[::1] lun,
                  int[::1] run, int[::1] one_src0, int[::1] id_one0, int cap):
    cdef Py_ssize_t n1 = comp1.shape[0]
    cdef Py_ssize_t g, f
    cdef int mid, lhs, rhs
    cdef long total = 0
    rows = []
    for g in range(n1):
        for f in range(n1):
            if comp1[g, f] < 0:
                continue
            mid = id_one0[one_src0[g]]
            lhs = vcomp[comp2[id2[g], lun[f]], assoc[g, mid, f]]
            rhs = comp2[run[g], id2[f]]
            if lhs != rhs or lhs < 0:
                total += 1
                if len(rows) < cap:
                    rows.append((g, f))
    return rows, total


def scan_assoc_nat(int[::1] two_src, int[::1] two_dst, int[:, ::1] comp2,
                   int[:, ::1] vcomp, int[:, :, ::1] assoc, int cap):
    cdef Py_ssize_t n2 = two_src.shape[0]
    cdef Py_ssize_t c, b, a
    cdef int cb, ba, lhs, rhs
    cdef long total = 0
    rows = []
    for c in range(n2):
        for b in range(n2):
            cb = comp2[c, b]
            if cb < 0:
                continue
            for a in range(n2):
                ba = comp2[b, a]
                if ba < 0:
                    continue
                lhs = vcomp[assoc[two_dst[c], two_dst[b], two_dst[a]], comp2[cb, a]]
                rhs = vcomp[comp2[c, ba], assoc[two_src[c], two_src[b], two_src[a]]]
                if lhs != rhs or lhs < 0:
                    total += 1
                    if len(rows) < cap:
                        rows.append((c, b, a))
    return rows, total


def scan_unitor_nat(int[::1] two_src, int[::1] two_dst, int[::1] one_src0,
                    int[::1] one_dst0, int[::1] id_one0, int[:, ::1] comp2,
                    int[:, ::1] vcomp, int[::1] id2, int[::1] lun,
                    int[::1] run, int cap):
    cdef Py_ssize_t n2 = two_src.shape[0]
    cdef Py_ssize_t a
    cdef int f, fp, iB, iA
    cdef long total = 0
    rows = []
    for a in range(n2):
        f = two_src[a]
        fp = two_dst[a]
        iB = id_one0[one_dst0[f]]
        iA = id_one0[one_src0[f]]
        if vcomp[lun[fp], comp2[id2[iB], a]] != vcomp[a, lun[f]]:
            total += 1
            if len(rows) < cap:
                rows.append((a, 0))
        if vcomp[run[fp], comp2[a, id2[iA]]] != vcomp[a, run[f]]:
            total += 1
            if len(rows) < cap:
                rows.append((a, 1))
    return rows, total


def scan_comp_typing(int[::1] two_src, int[::1] two_dst, int[:, ::1] comp1,
                     int[:, ::1] comp2, int cap):
    cdef Py_ssize_t n2 = two_src.shape[0]
    cdef Py_ssize_t b, a
    cdef int c
    cdef long total = 0
    rows = []
    for b in range(n2):
        for a in range(n2):
            c = comp2[b, a]
            if c < 0:
                continue
            if (two_src[c] != comp1[two_src[b], two_src[a]]
                    or two_dst[c] != comp1[two_dst[b], two_dst[a]]):
                total += 1
                if len(rows) < cap:
                    rows.append((b, a))
    return rows, total


def scan_comp_id(int[:, ::1] comp1, int[:, ::1] comp2, int[::1] id2, int cap):
    cdef Py_ssize_t n1 = comp1.shape[0]
    cdef Py_ssize_t g, f
    cdef long total = 0
    rows = []
    for g in range(n1):
        for f in range(n1):
            if comp1[g, f] < 0:
                continue
            if comp2[id2[g], id2[f]] != id2[comp1[g, f]]:
                total += 1
                if len(rows) < cap:
                    rows.append((g, f))
    return rows, total


def scan_interchange(int[:, ::1] vcomp, int[:, ::1] comp2, int cap):
    cdef Py_ssize_t n2 = vcomp.shape[0]
    cdef Py_ssize_t b2, b1, a2, a1, i, j, np_
    cdef int b21, lhs, rhs
    cdef long total = 0
    rows = []
    # collect vertically composable pairs once
    pair_list = np.argwhere(np.asarray(vcomp) >= 0).astype(np.intc, order="C")
    cdef int[:, ::1] pairs = pair_list
    np_ = pairs.shape[0]
    for i in range(np_):
        b2 = pairs[i, 0]
        b1 = pairs[i, 1]
        b21 = vcomp[b2, b1]
        for j in range(np_):
            a2 = pairs[j, 0]
            a1 = pairs[j, 1]
            if comp2[b1, a1] < 0:
                continue
            lhs = comp2[b21, vcomp[a2, a1]]
            rhs = vcomp[comp2[b2, a2], comp2[b1, a1]]
            if lhs != rhs or lhs < 0:
                total += 1
                if len(rows) < cap:
                    rows.append((b2, b1, a2, a1))
    return rows, total
