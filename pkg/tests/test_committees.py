import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import topecom.committees as cm
import topecom.farey as fy
from topecom.errors import GuardError
from topecom.om_core import from_central_arrangement, opposite

F = Fraction

TRIANGLE_COMMITTEE = ("++-", "+-+", "-++")


def naive_layer(system, k, no_opposites=False):
    # independent oracle: combinations of tope strings, character counting
    out = []
    for combo in itertools.combinations(system.topes, k):
        if no_opposites and any(opposite(t) in combo for t in combo):
            continue
        if all(
            2 * sum(1 for t in combo if t[e] == "+") > k for e in range(system.t)
        ):
            out.append(combo)
    return out


class TestPredicates:
    def test_triangle_examples(self, triangle):
        assert cm.is_committee(triangle, TRIANGLE_COMMITTEE)
        assert not cm.is_committee(triangle, ("++-", "+-+", "+--"))

    def test_acyclic_singleton(self):
        system = from_central_arrangement([(1, 0), (0, 1), (1, 1)])
        assert cm.is_committee(system, ("+++",))

    def test_threshold_equivalence_exhaustive(self, triangle, fourlines):
        for system in (triangle, fourlines):
            for r in range(1, len(system) + 1):
                for combo in itertools.combinations(system.topes, r):
                    assert cm.is_committee(system, combo) == cm.is_committee_threshold(
                        system, combo
                    )

    def test_rejects_foreign_and_empty(self, triangle):
        with pytest.raises(ValueError):
            cm.is_committee(triangle, ("+++",))
        with pytest.raises(ValueError):
            cm.is_committee(triangle, ())

    def test_committee_constructor_validates(self, triangle):
        com = cm.committee(triangle, TRIANGLE_COMMITTEE)
        assert com.counts == (2, 2, 2)
        with pytest.raises(ValueError):
            cm.committee(triangle, ("++-", "+-+", "+--"))


class TestEnumeration:
    @pytest.mark.parametrize("backend", [None, "numpy"])
    def test_triangle_layers(self, triangle, backend):
        assert [c.members for c in cm.enumerate_layer(triangle, 3, backend=backend)] == [
            TRIANGLE_COMMITTEE
        ]
        assert cm.enumerate_layer(triangle, 2, backend=backend) == []
        assert cm.enumerate_layer(triangle, 4, no_opposites=True, backend=backend) == []

    def test_triangle_all(self, triangle):
        fam = cm.enumerate_all(triangle)
        assert fam.nonempty_layers() == (3,)
        assert fam.total() == 1
        assert sorted(fam.layers) == list(range(1, 7))

    def test_matches_naive_everywhere(self, triangle, fourlines):
        for system in (triangle, fourlines):
            for no_opp in (False, True):
                fam = cm.enumerate_all(system, no_opp)
                for k in range(1, len(system) + 1):
                    got = [c.members for c in fam.layers[k]]
                    assert got == sorted(naive_layer(system, k, no_opp)), (k, no_opp)

    def test_layer_matches_all(self, fourlines):
        fam = cm.enumerate_all(fourlines)
        for k in range(1, len(fourlines) + 1):
            assert [c.members for c in cm.enumerate_layer(fourlines, k)] == [
                c.members for c in fam.layers[k]
            ]

    def test_quadrants_acyclic_layer_one(self, quadrants):
        fam = cm.enumerate_all(quadrants)
        assert [c.members for c in fam.layers[1]] == [("++",)]

    def test_output_sorted_unique(self, fourlines):
        found = cm.enumerate_layer(fourlines, 3)
        members = [c.members for c in found]
        assert members == sorted(set(members))

    def test_layer_bounds_checked(self, triangle):
        with pytest.raises(ValueError):
            cm.enumerate_layer(triangle, 0)
        with pytest.raises(ValueError):
            cm.enumerate_layer(triangle, 7)

    def test_full_scan_guard(self):
        big = from_central_arrangement([(1, i) for i in range(13)])
        with pytest.raises(GuardError):
            cm.enumerate_all(big)

    def test_layer_scan_guard(self, fourlines, monkeypatch):
        monkeypatch.setattr(cm, "LAYER_GUARD", 10)
        with pytest.raises(GuardError):
            cm.enumerate_layer(fourlines, 4)
        assert cm.enumerate_layer(fourlines, 4, force=True) == []

    def test_minimal_family(self, triangle, fourlines):
        assert [c.members for c in cm.minimal_committees(triangle)] == [
            TRIANGLE_COMMITTEE
        ]
        mini = cm.minimal_committees(fourlines)
        mems = [set(c.members) for c in mini]
        assert all(not (a < b or b < a) for a in mems for b in mems)
        assert all(not cm.has_opposite_pair(c.members) for c in mini)

    def test_minimum_size_triangle(self, triangle):
        mini = cm.minimal_committees(triangle)
        assert min(mini.nonempty_layers()) == 3


class TestClosureLaws:
    def test_augment_all_applicable_pairs(self, fourlines):
        fam = cm.enumerate_all(fourlines)
        seen = 0
        for com in fam:
            taken = set(com.members)
            for tope in fourlines.topes:
                if tope in taken or opposite(tope) in taken or opposite(tope) < tope:
                    continue
                grown = cm.augment_with_opposite_pair(fourlines, com, tope)
                assert grown.size == com.size + 2
                assert cm.is_committee(fourlines, grown.members)
                seen += 1
        assert seen  # the scan must actually find applicable pairs

    def test_augment_rejects_overlap(self, triangle):
        com = cm.committee(triangle, TRIANGLE_COMMITTEE)
        # every opposite pair of this system meets the committee
        for tope in triangle.topes:
            with pytest.raises(ValueError):
                cm.augment_with_opposite_pair(triangle, com, tope)

    def test_union_counts_add(self, fourlines):
        fam = cm.enumerate_all(fourlines)
        pairs = [
            (a, b)
            for a in fam
            for b in fam
            if not set(a.members) & set(b.members)
        ]
        for a, b in pairs:
            u = cm.union_committees(fourlines, a, b)
            assert u.size == a.size + b.size
            assert u.counts == tuple(x + y for x, y in zip(a.counts, b.counts))

    def test_union_rejects_overlap(self, fourlines):
        fam = cm.enumerate_all(fourlines)
        first = next(iter(fam))
        with pytest.raises(ValueError):
            cm.union_committees(fourlines, first, first)

    @settings(max_examples=50, deadline=None)
    @given(data=st.data())
    def test_closure_properties_random(self, data):
        system = from_central_arrangement([(1, 0), (0, 1), (-1, 1), (-1, -1)])
        committees = list(cm.enumerate_all(system))
        com = data.draw(st.sampled_from(committees))
        tope = data.draw(st.sampled_from(system.topes))
        taken = set(com.members)
        if tope in taken or opposite(tope) in taken:
            with pytest.raises(ValueError):
                cm.augment_with_opposite_pair(system, com, tope)
        else:
            grown = cm.augment_with_opposite_pair(system, com, tope)
            assert cm.is_committee(system, grown.members)


class TestSignatures:
    def test_triangle_signature(self, triangle):
        com = cm.committee(triangle, TRIANGLE_COMMITTEE)
        for e in range(1, 4):
            assert cm.fraction_signature(triangle, com, e) == F(2, 3)

    def test_signature_range(self, fourlines):
        seq = fy.farey_boolean(len(fourlines), len(fourlines) // 2)
        std = fy.farey_sequence(len(fourlines) // 2)
        for com in cm.enumerate_all(fourlines):
            opposite_free = not cm.has_opposite_pair(com.members)
            for e in range(1, fourlines.t + 1):
                f = cm.fraction_signature(fourlines, com, e)
                assert f > F(1, 2)
                assert f in seq
                if opposite_free:
                    assert f in std

    def test_unanimous_halfspace(self, quadrants):
        com = cm.committee(quadrants, ("++",))
        assert cm.fraction_signature(quadrants, com, 1) == F(1, 1)


class TestVerifiers:
    def test_triangle_passes(self, triangle):
        assert cm.verify_prop8(triangle).ok
        assert cm.verify_thm9(triangle).ok

    def test_fourlines_passes(self, fourlines):
        assert cm.verify_prop8(fourlines).ok
        assert cm.verify_thm9(fourlines).ok

    def test_acyclic_reports_hypothesis(self, quadrants):
        rep = cm.verify_prop8(quadrants)
        assert rep.skipped and not rep.ok
        rep = cm.verify_thm9(quadrants)
        assert rep.skipped

    def test_layer_ranges(self, fourlines):
        fam = cm.enumerate_all(fourlines)
        nt = len(fourlines)
        assert all(3 <= k <= nt - 3 for k in fam.nonempty_layers())
        fam_free = cm.enumerate_all(fourlines, no_opposites=True)
        assert all(3 <= k <= nt // 2 for k in fam_free.nonempty_layers())
