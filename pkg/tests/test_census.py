import pytest

from signorder import (
    DegreeTooLarge,
    all_patterns,
    canonical_family_check,
    census,
    find_configurations,
    is_canonical,
    parse_pattern,
    plus_block_family,
    verify_theorem_small,
)


class TestCensus:
    def test_small_degrees(self):
        canonical = {0: 1, 1: 2, 2: 4, 3: 6, 4: 10, 5: 16, 6: 26}
        for d, expected in canonical.items():
            row = census(d)
            assert row.total == 1 << d
            assert row.canonical == expected
            assert row.canonical + row.noncanonical == row.total

    def test_window_tallies(self):
        assert census(3).window_counts == {"A": 1, "B": 0, "C": 1, "D": 0}
        assert census(4).window_counts == {"A": 3, "B": 1, "C": 3, "D": 1}

    def test_agrees_with_direct_scan(self):
        for d in range(11):
            row = census(d)
            canonical = 0
            windows = {kind: 0 for kind in "ABCD"}
            for pattern in all_patterns(d):
                hits = find_configurations(pattern)
                if not hits:
                    canonical += 1
                for hit in hits:
                    windows[hit.kind] += 1
            assert row.canonical == canonical
            assert row.window_counts == windows

    def test_degree_bounds(self):
        with pytest.raises(ValueError):
            census(-1)
        with pytest.raises(DegreeTooLarge):
            census(25)
        assert census(25, ceiling=25).total == 1 << 25

    def test_all_patterns_order(self):
        found = [str(p) for p in all_patterns(2)]
        assert found == ["+++", "++-", "+-+", "+--"]


class TestPlusBlockFamily:
    def test_degree_three(self):
        assert {str(p) for p in plus_block_family(3)} == {"++++", "+++-"}

    def test_degree_seven_member(self):
        family = {str(p) for p in plus_block_family(7)}
        assert "+++-+++-" in family
        assert "++++++++" in family
        # runs shorter than three are excluded
        assert "++-++-++" not in family
        assert "+++++-+-" not in family

    def test_structure(self):
        for pattern in plus_block_family(9):
            runs = [len(r) for r in str(pattern).split("-") if r]
            assert all(r >= 3 for r in runs)

    def test_family_is_canonical(self):
        for d in range(3, 21):
            assert canonical_family_check(d)

    def test_minimum_degree(self):
        with pytest.raises(ValueError):
            canonical_family_check(2)


class TestDeskCheck:
    def test_degree_two(self):
        verdicts = verify_theorem_small(2, budget=2_000)
        assert len(verdicts) == 4
        assert all(v.canonical and v.ok for v in verdicts)
        assert all(v.stray_orders == () for v in verdicts)

    def test_degree_three(self):
        verdicts = verify_theorem_small(3, budget=5_000)
        assert len(verdicts) == 8
        assert all(v.ok for v in verdicts)
        flagged = {str(v.pattern) for v in verdicts if not v.canonical}
        assert flagged == {"++--", "+--+"}
        for v in verdicts:
            if v.canonical:
                assert v.witness is None
            else:
                assert v.witness is not None
                assert v.witness_order is not None

    def test_witnesses_are_exact(self):
        from signorder import moduli_order_of_roots, pattern_of_poly, poly_from_roots

        for v in verify_theorem_small(3, budget=5_000):
            if v.witness is None:
                continue
            assert pattern_of_poly(poly_from_roots(v.witness)) == v.pattern
            assert moduli_order_of_roots(v.witness) == v.witness_order

    def test_degree_bounds(self):
        with pytest.raises(ValueError):
            verify_theorem_small(1)
        with pytest.raises(ValueError):
            verify_theorem_small(7)
