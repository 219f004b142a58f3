"""Pure-Python scan kernels (fallback for the compiled extension).

All functions take integer tables (numpy arrays) describing a bicategory:

- ``comp1[g, f]``  horizontal composite of 1-cells, -1 if not composable
- ``comp2[b, a]``  horizontal composite of 2-cells, -1 if not composable
- ``vcomp[b, a]``  vertical composite of 2-cells, -1 if not composable
- ``id2[f]``       identity 2-cell on 1-cell f
- ``assoc[h,g,f]`` associator component, -1 where undefined
- ``lun[f] / run[f]`` unitor components
- ``two_src[c] / two_dst[c]`` 1-cell endpoints of 2-cell c
- ``one_src0[f] / one_dst0[f]`` 0-cell endpoints of 1-cell f
- ``id_one0[A]``   identity 1-cell on 0-cell A

Each scan returns ``(rows, total)`` where ``rows`` is a list of index tuples
for the first ``cap`` violations and ``total`` counts all of them.
"""
from __future__ import annotations

import numpy as np

IMPLEMENTATION = "pure"


def _pairs(table: np.ndarray) -> list[tuple[int, int]]:
    return [tuple(p) for p in np.argwhere(np.asarray(table) >= 0)]


def scan_pentagon(comp1, vcomp, comp2, id2, assoc, cap):
    rows, total = [], 0
    n1 = comp1.shape[0]
    comp_pairs = _pairs(comp1)
    for k, h in comp_pairs:
        kh = comp1[k, h]
        for g in range(n1):
            if comp1[h, g] < 0:
                continue
            hg = comp1[h, g]
            for f in range(n1):
                if comp1[g, f] < 0:
                    continue
                gf = comp1[g, f]
                lhs = vcomp[assoc[k, h, gf], assoc[kh, g, f]]
                step1 = comp2[assoc[k, h, g], id2[f]]
                step2 = vcomp[assoc[k, hg, f], step1]
                rhs = vcomp[comp2[id2[k], assoc[h, g, f]], step2]
                if lhs != rhs or lhs < 0:
                    total += 1
                    if len(rows) < cap:
                        rows.append((k, h, g, f))
    return rows, total


def scan_triangle(comp1, vcomp, comp2, id2, assoc, lun, run, one_src0, id_one0, cap):
    rows, total = [], 0
    for g, f in _pairs(comp1):
        mid = id_one0[one_src0[g]]
        lhs = vcomp[comp2[id2[g], lun[f]], assoc[g, mid, f]]
        rhs = comp2[run[g], id2[f]]
        if lhs != rhs or lhs < 0:
            total += 1
            if len(rows) < cap:
                rows.append((g, f))
    return rows, total


def scan_assoc_nat(two_src, two_dst, comp2, vcomp, assoc, cap):
    rows, total = [], 0
    hpairs = _pairs(comp2)
    by_left: dict[int, list[int]] = {}
    for c, b in hpairs:
        by_left.setdefault(c, []).append(b)
    for c, b in hpairs:
        cb = comp2[c, b]
        for a in by_left.get(b, ()):
            ba = comp2[b, a]
            lhs = vcomp[assoc[two_dst[c], two_dst[b], two_dst[a]], comp2[cb, a]]
            rhs = vcomp[comp2[c, ba], assoc[two_src[c], two_src[b], two_src[a]]]
            if lhs != rhs or lhs < 0:
                total += 1
                if len(rows) < cap:
                    rows.append((c, b, a))
    return rows, total


def scan_unitor_nat(two_src, two_dst, one_src0, one_dst0, id_one0,
                    comp2, vcomp, id2, lun, run, cap):
    rows, total = [], 0
    n2 = two_src.shape[0]
    for a in range(n2):
        f, fp = two_src[a], two_dst[a]
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


def scan_comp_typing(two_src, two_dst, comp1, comp2, cap):
    rows, total = [], 0
    for b, a in _pairs(comp2):
        c = comp2[b, a]
        if (two_src[c] != comp1[two_src[b], two_src[a]]
                or two_dst[c] != comp1[two_dst[b], two_dst[a]]):
            total += 1
            if len(rows) < cap:
                rows.append((b, a))
    return rows, total


def scan_comp_id(comp1, comp2, id2, cap):
    rows, total = [], 0
    for g, f in _pairs(comp1):
        if comp2[id2[g], id2[f]] != id2[comp1[g, f]]:
            total += 1
            if len(rows) < cap:
                rows.append((g, f))
    return rows, total


def scan_interchange(vcomp, comp2, cap):
    rows, total = [], 0
    vpairs = _pairs(vcomp)
    for b2, b1 in vpairs:
        b21 = vcomp[b2, b1]
        for a2, a1 in vpairs:
            if comp2[b1, a1] < 0:
                continue
            lhs = comp2[b21, vcomp[a2, a1]]
            rhs = vcomp[comp2[b2, a2], comp2[b1, a1]]
            if lhs != rhs or lhs < 0:
                total += 1
                if len(rows) < cap:
                    rows.append((b2, b1, a2, a1))
    return rows, total
