"""Compiled depth-first walks over E8 in doubled coordinates.

Coordinates are ``d_i = 2 v_i``: all eight share one parity, their sum is
divisible by 4 and ``sum d_i^2 = 4 * norm``. Every walk visits the first
coordinate in increasing order and, below it, each coordinate in increasing
order, so emission is lexicographic on ``d``.
"""

import os

import numba
import numpy as np
from numba import njit, prange

# the bundled TBB is too old for numba; workqueue is always available
if "NUMBA_THREADING_LAYER" not in os.environ:
    numba.config.THREADING_LAYER = "workqueue"


@njit(cache=True)
def _top(rem, parity):
    # largest t >= 0 with t = parity (mod 2) and t*t <= rem; -1 if none
    if rem < 0:
        return -1
    t = np.int64(np.sqrt(np.float64(rem)))
    while t * t > rem:
        t -= 1
    while (t + 1) * (t + 1) <= rem:
        t += 1
    if (t - parity) % 2 != 0:
        t -= 1
    return t


@njit(cache=True)
def _walk_below(first, budget4, dual, hist):
    """Histogram every vector with leading coordinate ``first``.

    ``budget4`` bounds ``sum d_i^2``. ``hist[k, c]`` counts vectors of norm
    ``2k`` in class ``c`` of E8/2E8; ``dual`` holds the doubled dual basis,
    so ``(d . dual[j]) / 4`` is the j-th basis coordinate.
    """
    parity = first & 1
    d = np.zeros(8, np.int64)
    rem = np.zeros(9, np.int64)
    top = np.zeros(8, np.int64)
    s = np.zeros(9, np.int64)
    cs = np.zeros((9, 8), np.int64)

    d[0] = first
    rem[1] = budget4 - first * first
    if rem[1] < 0:
        return
    s[1] = first
    for j in range(8):
        cs[1, j] = first * dual[j, 0]

    k = 1
    top[1] = _top(rem[1], parity)
    d[1] = -top[1]
    if top[1] < 0:
        return
    while k >= 1:
        if d[k] > top[k]:
            k -= 1
            if k >= 1:
                d[k] += 2
            continue
        if k == 7:
            # last coordinate is stepped by 4 to keep sum = 0 (mod 4)
            sq = budget4 - rem[7] + d[7] * d[7]
            norm = sq // 4
            cls = 0
            for j in range(8):
                c = (cs[7, j] + d[7] * dual[j, 7]) // 4
                cls |= (c & 1) << j
            hist[norm // 2, cls] += 1
            d[7] += 4
            continue
        nk = k + 1
        rem[nk] = rem[k] - d[k] * d[k]
        s[nk] = s[k] + d[k]
        for j in range(8):
            cs[nk, j] = cs[k, j] + d[k] * dual[j, k]
        top[nk] = _top(rem[nk], parity)
        if top[nk] < 0:
            d[k] += 2
            continue
        lo = -top[nk]
        if nk == 7:
            # choose the residue class of d[7] that fixes the sum mod 4
            need = (-s[nk]) % 4
            while (lo - need) % 4 != 0:
                lo += 1
                if lo > top[nk]:
                    break
        d[nk] = lo
        k = nk


@njit(cache=True, parallel=True)
def norm_class_histogram(max_half_norm, dual):
    """Counts of E8 vectors by (norm/2, class) for norms up to ``2*max_half_norm``."""
    budget4 = 8 * max_half_norm
    r = np.int64(np.sqrt(np.float64(budget4)))
    while r * r > budget4:
        r -= 1
    width = 2 * r + 1
    part = np.zeros((width, max_half_norm + 1, 256), np.int64)
    for i in prange(width):
        _walk_below(i - r, budget4, dual, part[i])
    return part.sum(axis=0)


@njit(cache=True)
def _exact_walk(target4, out, write):
    """Count (and optionally write) vectors with ``sum d_i^2 == target4``."""
    r = np.int64(np.sqrt(np.float64(target4)))
    while r * r > target4:
        r -= 1
    d = np.zeros(8, np.int64)
    rem = np.zeros(9, np.int64)
    top = np.zeros(8, np.int64)
    s = np.zeros(9, np.int64)
    count = 0
    for first in range(-r, r + 1):
        parity = first & 1
        d[0] = first
        rem[1] = target4 - first * first
        s[1] = first
        top[1] = _top(rem[1], parity)
        if top[1] < 0:
            continue
        d[1] = -top[1]
        k = 1
        while k >= 1:
            if d[k] > top[k]:
                k -= 1
                if k >= 1:
                    d[k] += 2
                continue
            if k == 7:
                if d[7] * d[7] == rem[7] and (s[7] + d[7]) % 4 == 0:
                    if write:
                        for j in range(7):
                            out[count, j] = d[j]
                        out[count, 7] = d[7]
                    count += 1
                d[7] = -d[7] if d[7] < 0 else top[7] + 2
                continue
            nk = k + 1
            rem[nk] = rem[k] - d[k] * d[k]
            s[nk] = s[k] + d[k]
            top[nk] = _top(rem[nk], parity)
            if top[nk] < 0:
                d[k] += 2
                continue
            if nk == 7:
                # only +-sqrt(rem) can close the norm
                d[nk] = -top[nk] if top[nk] * top[nk] == rem[nk] else top[nk] + 2
            else:
                d[nk] = -top[nk]
            k = nk
    return count


def exact_norm_array(norm):
    """All vectors of the given norm, doubled, in lexicographic order."""
    target4 = 4 * norm
    dummy = np.zeros((1, 8), np.int64)
    n = _exact_walk(target4, dummy, False)
    out = np.zeros((n, 8), np.int64)
    _exact_walk(target4, out, True)
    return out
