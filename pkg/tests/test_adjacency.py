from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from signorder import (
    AmbiguousPattern,
    BadNormalization,
    ExactPoly,
    FREE,
    MINUS,
    PLUS,
    SignPattern,
    expand_S,
    filter_T,
    find_configurations,
    lift_poly,
    lift_sources,
    parse_ambiguous,
    parse_pattern,
    pattern_of_poly,
    sign_counts,
    symbolic_lift,
    verify_proposition,
)
from signorder.errors import ZeroCoefficient

from support import build_u_vector, poly_from_u

sources = st.builds(
    lambda tail: SignPattern((PLUS, PLUS) + tuple(tail)),
    st.lists(st.sampled_from((PLUS, MINUS)), min_size=0, max_size=9),
)


def patterns_of(strings):
    return {parse_pattern(s) for s in strings}


class TestAmbiguousPattern:
    def test_parse_and_str(self):
        amb = parse_ambiguous("(+,+,±,±,-,-)")
        assert str(amb) == "++??--"
        assert parse_ambiguous("++??--") == amb

    def test_validation(self):
        with pytest.raises(ValueError):
            AmbiguousPattern((PLUS, MINUS, FREE, FREE))
        with pytest.raises(ValueError):
            AmbiguousPattern((PLUS, PLUS, 3, FREE))
        with pytest.raises(ValueError):
            AmbiguousPattern((PLUS, PLUS, FREE))


class TestLiftPoly:
    def test_degree_three(self):
        assert str(lift_poly(ExactPoly((5, 1)))) == "x^3+5x^2-x-5"

    def test_degree_four(self):
        assert str(lift_poly(ExactPoly((-2, 1, 1)))) == "x^4+x^3-3x^2-x+2"

    def test_degree_two(self):
        assert str(lift_poly(ExactPoly((1,)))) == "x^2-1"

    def test_requires_monic(self):
        with pytest.raises(ValueError):
            lift_poly(ExactPoly((1, 2)))


class TestSymbolicLift:
    def test_all_plus_source(self):
        assert str(symbolic_lift(parse_pattern("++++"))) == "++??--"

    def test_minimal_source(self):
        assert str(symbolic_lift(parse_pattern("++"))) == "++--"

    def test_degree_six_cases_in_order(self):
        # the seven sources with a sign besides (+,+,+,+), keyed by the
        # signs of (b, r, g) in x^4 + a x^3 + b x^2 + r x + g, a > 0
        cases = [
            ("++-++", "++-?+--"),
            ("++-+-", "++-??-+"),
            ("++--+", "++--++-"),
            ("++---", "++--?++"),
            ("+++-+", "++?-?+-"),
            ("+++--", "++?--++"),
            ("++++-", "++??--+"),
        ]
        for source, expected in cases:
            assert str(symbolic_lift(parse_pattern(source))) == expected

    def test_bad_normalization(self):
        with pytest.raises(BadNormalization):
            symbolic_lift(parse_pattern("+-++"))
        with pytest.raises(BadNormalization):
            symbolic_lift(parse_pattern("+"))

    @given(sources)
    def test_fixed_entries(self, source):
        amb = symbolic_lift(source)
        assert len(amb) == len(source) + 2
        assert amb.entries[0] == amb.entries[1] == PLUS
        assert amb.entries[-2] == -source[-2]
        assert amb.entries[-1] == -source[-1]
        for k in range(2, len(source)):
            if source[k] != source[k - 2]:
                assert amb.entries[k] == source[k]
            else:
                assert amb.entries[k] == FREE


class TestExpandAndFilter:
    def test_degree_five_sets(self):
        source = parse_pattern("++++")
        S = expand_S(symbolic_lift(source))
        T = filter_T(S, source)
        assert S == patterns_of(["++++--", "+++---", "++-+--", "++----"])
        assert T == patterns_of(["++++--", "+++---", "++----"])
        assert S - T == patterns_of(["++-+--"])

    def test_displayed_difference_is_a_typo(self):
        # (+,+,+,-,+,-) is sometimes quoted as the lone member of S minus
        # T, but it resolves no slot of (+,+,?,?,-,-): the fourth and
        # fifth entries are pinned to minus
        source = parse_pattern("++++")
        S = expand_S(symbolic_lift(source))
        assert parse_pattern("++-+--") in S
        assert parse_pattern("+++-+-") not in S

    def test_no_free_slots(self):
        assert expand_S(parse_ambiguous("++--")) == patterns_of(["++--"])

    def test_case_seven_exclusion(self):
        source = parse_pattern("++++-")
        S = expand_S(symbolic_lift(source))
        T = filter_T(S, source)
        assert len(S) == 4
        assert parse_pattern("++-+--+") in S
        assert parse_pattern("++-+--+") not in T
        assert sign_counts(parse_pattern("++-+--+"))[0] == 4
        assert sign_counts(source)[0] + 1 == 2

    @given(sources)
    def test_expand_size_and_membership(self, source):
        amb = symbolic_lift(source)
        free = sum(1 for e in amb.entries if e == FREE)
        S = expand_S(amb)
        assert len(S) == 1 << free
        for p in S:
            for entry, sign in zip(amb.entries, p):
                assert entry in (FREE, sign)


class TestConstructiveSoundness:
    """Every resolution of the free slots is realized by an actual
    coefficient vector, so expand_S never over-reports."""

    @given(sources, st.integers(min_value=0, max_value=(1 << 30)))
    @settings(max_examples=120, deadline=None)
    def test_builder_hits_every_resolution(self, source, pick):
        resolutions = sorted(expand_S(symbolic_lift(source)), key=str)
        resolution = resolutions[pick % len(resolutions)]
        u = build_u_vector(source, resolution)
        lifted = lift_poly(poly_from_u(u))
        assert pattern_of_poly(lifted) == resolution

    @given(sources)
    @settings(max_examples=60, deadline=None)
    def test_concrete_lift_lands_in_S(self, source):
        u = build_u_vector(source, sorted(expand_S(symbolic_lift(source)), key=str)[0])
        lifted = lift_poly(poly_from_u(u))
        assert pattern_of_poly(lifted) in expand_S(symbolic_lift(source))


nonzero_rationals = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=8
).filter(lambda q: q != 0)


class TestLiftAgreement:
    """Arbitrary coefficient vectors, not just ones built to order, land
    inside the symbolic account of their own sign pattern."""

    @given(
        st.fractions(
            min_value=Fraction(1, 8), max_value=Fraction(20), max_denominator=8
        ),
        st.lists(nonzero_rationals, min_size=0, max_size=9),
    )
    @settings(max_examples=150, deadline=None)
    def test_lift_pattern_is_a_resolution(self, u1, tail):
        u = (Fraction(1), u1) + tuple(tail)
        wstar = poly_from_u(u)
        source = pattern_of_poly(wstar)
        try:
            pattern = pattern_of_poly(lift_poly(wstar))
        except ZeroCoefficient:
            # a tie u_k == u_(k-2) is legal input but non-generic
            return
        assert pattern in expand_S(symbolic_lift(source))


class TestLiftSources:
    def test_count_and_shape(self):
        found = list(lift_sources(6))
        assert len(found) == 8
        for source in found:
            assert len(source) == 5
            assert source[0] == PLUS and source[1] == PLUS

    def test_minimal_degree(self):
        assert [str(s) for s in lift_sources(3)] == ["++"]


class TestVerifyProposition:
    def test_minimum_degree(self):
        with pytest.raises(ValueError):
            verify_proposition(2)

    def test_degree_three(self):
        reports = verify_proposition(3)
        assert len(reports) == 1
        report = reports[0]
        assert report.T == patterns_of(["++--"])
        assert report.holds
        assert [str(h) for h in report.verdicts[parse_pattern("++--")]] == ["A@1"]

    def test_holds_through_degree_seven(self):
        for d in range(3, 8):
            reports = verify_proposition(d)
            assert len(reports) == 1 << (d - 3)
            assert all(r.holds for r in reports)

    def test_json_shape(self):
        report = verify_proposition(3)[0]
        data = report.to_json_dict()
        assert data["source"] == "++"
        assert data["S"] == ["++--"]
        assert data["T"] == ["++--"]
        assert data["verdicts"] == {"++--": [{"position": 1, "kind": "A"}]}


class TestTighteningFailsFromDegreeEight:
    """The tightened lift of a general real coefficient vector can be
    window-free.  The minimal example is unique and fully explicit; the
    canonicity theorem is unaffected because no real-rooted cofactor has
    been observed to reproduce it (its own cofactor has complex roots)."""

    def test_unique_minimal_counterexample(self):
        reports = verify_proposition(8)
        bad = [
            (r.source, p)
            for r in reports
            for p, hits in r.verdicts.items()
            if not hits
        ]
        assert bad == [(parse_pattern("++++-+-"), parse_pattern("++-+----+"))]

    def test_counterexample_is_constructive(self):
        # u = (1, 1, 1/2, 2, -1, 1, -2) lifts to the window-free pattern
        u = (1, 1, Fraction(1, 2), 2, -1, 1, -2)
        wstar = poly_from_u(u)
        assert pattern_of_poly(wstar) == parse_pattern("++++-+-")
        lifted = lift_poly(wstar)
        pattern = pattern_of_poly(lifted)
        assert pattern == parse_pattern("++-+----+")
        assert find_configurations(pattern) == []
        assert sign_counts(pattern)[0] == sign_counts(parse_pattern("++++-+-"))[0] + 1

    def test_builder_reproduces_it(self):
        source = parse_pattern("++++-+-")
        resolution = parse_pattern("++-+----+")
        u = build_u_vector(source, resolution)
        assert pattern_of_poly(lift_poly(poly_from_u(u))) == resolution

    def test_truncation_leaves_the_tightened_set(self):
        # dropping the constant coefficient of the cofactor breaks the
        # count relation, which is where an induction over the degree
        # loses its grip on this example
        u = (1, 1, Fraction(1, 2), 2, -1, 1)
        truncated = pattern_of_poly(lift_poly(poly_from_u(u)))
        assert truncated == parse_pattern("++-+--+-")
        source = pattern_of_poly(poly_from_u(u))
        assert sign_counts(truncated)[0] != sign_counts(source)[0] + 1

    def test_violation_counts_grow(self):
        expected = {8: 1, 9: 4, 10: 11, 11: 28, 12: 69}
        for d, count in expected.items():
            reports = verify_proposition(d)
            bad = sum(
                1 for r in reports for hits in r.verdicts.values() if not hits
            )
            assert bad == count

    def test_every_violation_is_constructive(self):
        for d in (8, 9, 10):
            for report in verify_proposition(d):
                for resolution, hits in report.verdicts.items():
                    if hits:
                        continue
                    u = build_u_vector(report.source, resolution)
                    lifted = lift_poly(poly_from_u(u))
                    assert pattern_of_poly(lifted) == resolution
                    assert find_configurations(resolution) == []


class TestInductionTailTables:
    """Bookkeeping of the last coefficients when the cofactor gains one
    coefficient: the entry -u_(d-3) becomes u_(d-1)-u_(d-3) and -u_(d-1)
    is appended.  In the sub-case where the changed entry flips, the new
    tail is (..., -y, z, y) for an old tail ending (..., y, z)."""

    WINDOWS = [
        (PLUS, PLUS, MINUS, MINUS),
        (MINUS, MINUS, PLUS, PLUS),
        (PLUS, MINUS, MINUS, PLUS),
        (MINUS, PLUS, PLUS, MINUS),
    ]

    @staticmethod
    def _advance(tail):
        *head, y, z = tail
        return (*head, -y, z, y)

    def test_window_at_the_very_end(self):
        expected = [
            "+++--",
            "---++",
            "+-++-",
            "-+--+",
        ]
        for window, want in zip(self.WINDOWS, expected):
            advanced = self._advance(window)
            assert "".join("+" if s == PLUS else "-" for s in advanced) == want

    def test_window_one_step_in(self):
        # the fifth sign is forced: it must not complete a second window
        expected = [
            "++-+--",
            "--+-++",
            "+----+",
            "-++++-",
        ]
        for window, want in zip(self.WINDOWS, expected):
            candidates = [
                window + (s,)
                for s in (PLUS, MINUS)
                if window[1:] + (s,) not in self.WINDOWS
            ]
            assert len(candidates) == 1
            advanced = self._advance(candidates[0])
            assert "".join("+" if s == PLUS else "-" for s in advanced) == want
