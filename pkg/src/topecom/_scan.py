"""Bitmask subset scans: the hot loop behind committee enumeration.

Each candidate subset of topes is an integer mask; the test is a popcount
against every halfspace mask (and optionally against opposite-pair masks).
Two interchangeable backends produce identical results:

* "numba": JIT-compiled loops, Gosper's hack for fixed-size scans.
  Default whenever numba is importable.
* "numpy": chunked vectorized scan, no compilation.

Set TOPECOM_FORCE_NUMPY=1 to select the numpy path even when numba is
installed. bench/bench_scan.py compares the two.
"""

from __future__ import annotations

import importlib.util
import itertools
import os
from typing import Sequence

import numpy as np

MAX_BITS = 30
_CHUNK = 1 << 18
_RANGE_SCAN_LIMIT = 26  # above this the numpy layer scan streams combinations

_POP16 = np.array([v.bit_count() for v in range(1 << 16)], dtype=np.uint8)

_numba_cache: dict[str, object] = {}


def have_numba() -> bool:
    return importlib.util.find_spec("numba") is not None


def default_backend() -> str:
    if os.environ.get("TOPECOM_FORCE_NUMPY") == "1" or not have_numba():
        return "numpy"
    return "numba"


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if have_numba() else ("numpy",)


def committee_masks(
    n_topes: int,
    halfspace_masks: Sequence[int],
    k: int | None = None,
    pair_masks: Sequence[int] | None = None,
    backend: str | None = None,
) -> list[int]:
    """Masks of subsets with a strict popcount majority in every halfspace.

    k restricts the scan to subsets of that size; pair_masks drops any
    subset containing a complete two-bit pair. Returns ascending ints.
    """
    if backend is None:
        backend = default_backend()
    if not 1 <= n_topes <= MAX_BITS:
        raise ValueError(f"n_topes must lie in [1, {MAX_BITS}], got {n_topes}")
    if k is not None and not 1 <= k <= n_topes:
        raise ValueError(f"k must lie in [1, {n_topes}], got {k}")
    masks = np.asarray(list(halfspace_masks), dtype=np.int64)
    pairs = np.asarray(list(pair_masks or ()), dtype=np.int64)
    want_k = -1 if k is None else k
    if backend == "numpy":
        hits = _numpy_scan(n_topes, masks, pairs, want_k)
    elif backend == "numba":
        if not have_numba():
            raise RuntimeError("numba backend requested but numba is not installed")
        kernels = _numba_kernels()
        if want_k >= 0:
            hits = kernels["layer"](n_topes, masks, pairs, want_k, _POP16)
        else:
            hits = kernels["all"](n_topes, masks, pairs, _POP16)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return sorted(int(v) for v in hits)


# --- numpy path ------------------------------------------------------------


def _numpy_scan(n: int, masks: np.ndarray, pairs: np.ndarray, want_k: int) -> np.ndarray:
    hits: list[np.ndarray] = []
    for sub in _numpy_chunks(n, want_k):
        size = np.bitwise_count(sub).astype(np.int64)
        if want_k >= 0:
            keep = size == want_k
            sub, size = sub[keep], size[keep]
        ok = np.ones(sub.shape, dtype=bool)
        for m in masks:
            ok &= 2 * np.bitwise_count(sub & m).astype(np.int64) > size
        for p in pairs:
            ok &= (sub & p) != p
        hits.append(sub[ok])
    return np.concatenate(hits) if hits else np.empty(0, np.int64)


def _numpy_chunks(n: int, want_k: int):
    if want_k >= 0 and n > _RANGE_SCAN_LIMIT:
        # 2^n is too large to sweep; stream the size-k masks instead
        buf: list[int] = []
        for combo in itertools.combinations(range(n), want_k):
            m = 0
            for i in combo:
                m |= 1 << i
            buf.append(m)
            if len(buf) == _CHUNK:
                yield np.array(buf, dtype=np.int64)
                buf.clear()
        if buf:
            yield np.array(buf, dtype=np.int64)
        return
    total = 1 << n
    for lo in range(1, total, _CHUNK):
        yield np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)


# --- numba path ------------------------------------------------------------
#
# The kernel bodies are plain Python written in numba's nopython subset and
# compiled on first use, so importing this module never pays for numba.


def _kernel_scan_all(n, masks, pairs, pop):
    cap = 1024
    out = np.empty(cap, np.int64)
    cnt = 0
    total = np.int64(1) << n
    for s in range(1, total):
        size = np.int64(pop[s & 0xFFFF]) + np.int64(pop[(s >> 16) & 0xFFFF])
        ok = True
        for i in range(masks.shape[0]):
            hit = s & masks[i]
            c = np.int64(pop[hit & 0xFFFF]) + np.int64(pop[(hit >> 16) & 0xFFFF])
            if 2 * c <= size:
                ok = False
                break
        if ok:
            for i in range(pairs.shape[0]):
                if s & pairs[i] == pairs[i]:
                    ok = False
                    break
        if ok:
            if cnt == cap:
                cap *= 2
                grown = np.empty(cap, np.int64)
                grown[:cnt] = out[:cnt]
                out = grown
            out[cnt] = s
            cnt += 1
    return out[:cnt]


def _kernel_scan_layer(n, masks, pairs, k, pop):
    cap = 1024
    out = np.empty(cap, np.int64)
    cnt = 0
    limit = np.int64(1) << n
    s = (np.int64(1) << k) - np.int64(1)
    while s < limit:
        ok = True
        for i in range(masks.shape[0]):
            hit = s & masks[i]
            c = np.int64(pop[hit & 0xFFFF]) + np.int64(pop[(hit >> 16) & 0xFFFF])
            if 2 * c <= k:
                ok = False
                break
        if ok:
            for i in range(pairs.shape[0]):
                if s & pairs[i] == pairs[i]:
                    ok = False
                    break
        if ok:
            if cnt == cap:
                cap *= 2
                grown = np.empty(cap, np.int64)
                grown[:cnt] = out[:cnt]
                out = grown
            out[cnt] = s
            cnt += 1
        # Gosper's hack: next mask with the same popcount
        low = s & (-s)
        ripple = s + low
        s = ripple | (((s ^ ripple) // low) >> 2)
    return out[:cnt]


def _numba_kernels():
    if not _numba_cache:
        from numba import njit

        _numba_cache["all"] = njit(cache=True)(_kernel_scan_all)
        _numba_cache["layer"] = njit(cache=True)(_kernel_scan_layer)
    return _numba_cache
