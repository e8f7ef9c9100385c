#!/usr/bin/env python3
"""Benchmark the committee subset scan: numba JIT vs vectorized numpy.

Builds the 22-region system of eleven plane lines and times a full
2^22-subset sweep plus one fixed-size layer scan on each backend. The
numba path is timed after a warmup call so compilation is not counted.

Usage: python bench/bench_scan.py [n_lines]
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from topecom import _scan, from_central_arrangement  # noqa: E402
from topecom.committees import _halfspace_masks, _pair_masks  # noqa: E402


def timed(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    n_lines = int(sys.argv[1]) if len(sys.argv) > 1 else 11
    system = from_central_arrangement([(1, i) for i in range(n_lines)])
    n = len(system)
    masks = _halfspace_masks(system)
    pairs = _pair_masks(system)
    layer = n // 2 if (n // 2) % 2 else n // 2 - 1  # odd layers carry the committees here
    print(f"system: {n_lines} lines, {n} topes, scans over 2^{n} subsets")

    if not _scan.have_numba():
        print("numba not installed; only the numpy path is available")

    rows = []
    for backend in _scan.available_backends():
        # warmup covers JIT compilation and the popcount table
        _scan.committee_masks(min(n, 6), masks[:2], None, backend=backend)
        full_t, full_hits = timed(
            lambda: _scan.committee_masks(n, masks, None, pairs, backend=backend)
        )
        layer_t, layer_hits = timed(
            lambda: _scan.committee_masks(n, masks, layer, pairs, backend=backend)
        )
        rows.append((backend, full_t, len(full_hits), layer_t, len(layer_hits)))

    print(f"{'backend':<8} {'full scan':>12} {'hits':>8} {'layer ' + str(layer):>12} {'hits':>8}")
    for backend, full_t, full_n, layer_t, layer_n in rows:
        print(f"{backend:<8} {full_t:>11.3f}s {full_n:>8} {layer_t:>11.3f}s {layer_n:>8}")

    if len(rows) == 2:
        print(f"speedup (numpy/numba, full scan): {rows[1][1] / rows[0][1]:.1f}x")
        first = set(
            _scan.committee_masks(n, masks, None, pairs, backend=rows[0][0])
        )
        second = set(
            _scan.committee_masks(n, masks, None, pairs, backend=rows[1][0])
        )
        print(f"backends agree: {first == second}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
