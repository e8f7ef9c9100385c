import random

import pytest

from topecom import _scan


def naive_masks(n, halfspace_masks, k=None, pair_masks=None):
    hits = []
    for s in range(1, 1 << n):
        size = s.bit_count()
        if k is not None and size != k:
            continue
        if any(2 * (s & m).bit_count() <= size for m in halfspace_masks):
            continue
        if pair_masks and any(s & p == p for p in pair_masks):
            continue
        hits.append(s)
    return hits


def random_instance(rng, n):
    t = rng.randint(1, 4)
    masks = [rng.getrandbits(n) for _ in range(t)]
    idx = list(range(n))
    rng.shuffle(idx)
    pairs = [
        (1 << idx[2 * i]) | (1 << idx[2 * i + 1]) for i in range(rng.randint(0, n // 2))
    ]
    return masks, pairs


@pytest.mark.parametrize("backend", _scan.available_backends())
def test_backends_match_naive(backend):
    rng = random.Random(7)
    for trial in range(25):
        n = rng.randint(2, 10)
        masks, pairs = random_instance(rng, n)
        for k in [None, rng.randint(1, n)]:
            got = _scan.committee_masks(n, masks, k, pairs or None, backend=backend)
            assert got == naive_masks(n, masks, k, pairs), (trial, n, masks, pairs, k)


def test_backends_agree_on_larger_scan():
    masks = [0b101010101010101010, 0b011001100110011001, 0b000111000111000111]
    results = {
        backend: _scan.committee_masks(18, masks, None, backend=backend)
        for backend in _scan.available_backends()
    }
    baseline = next(iter(results.values()))
    assert all(r == baseline for r in results.values())
    assert baseline  # scan should find something for these overlapping masks


def test_layer_scan_covers_every_size():
    masks = [0b1111, 0b1010, 0b1100]
    whole = _scan.committee_masks(4, masks, None)
    per_layer = [
        m for k in range(1, 5) for m in _scan.committee_masks(4, masks, k)
    ]
    assert sorted(per_layer) == whole


def test_input_validation():
    with pytest.raises(ValueError):
        _scan.committee_masks(0, [1])
    with pytest.raises(ValueError):
        _scan.committee_masks(40, [1])
    with pytest.raises(ValueError):
        _scan.committee_masks(4, [1], k=5)
    with pytest.raises(ValueError):
        _scan.committee_masks(4, [1], backend="fortran")


def test_numpy_combination_stream_path():
    # force the streamed-combinations branch used when 2^n is too big to sweep
    old = _scan._RANGE_SCAN_LIMIT
    _scan._RANGE_SCAN_LIMIT = 4
    try:
        masks = [0b10110, 0b01101]
        got = _scan.committee_masks(5, masks, 3, backend="numpy")
        assert got == naive_masks(5, masks, 3)
    finally:
        _scan._RANGE_SCAN_LIMIT = old


def test_default_backend_env_flag(monkeypatch):
    monkeypatch.setenv("TOPECOM_FORCE_NUMPY", "1")
    assert _scan.default_backend() == "numpy"
    monkeypatch.delenv("TOPECOM_FORCE_NUMPY")
    if _scan.have_numba():
        assert _scan.default_backend() == "numba"
