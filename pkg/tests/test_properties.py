"""Property-based checks of the algebraic laws."""

from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import given, settings

from qsets.core import QuantumSet, ElementSet
from qsets.projline import ArcSet, arc_qcommutes, closure_points
from qsets.qsubsets import enumerate_qsubsets, powerset_qsubset_masks
from qsets.realline import IntervalUnion


@st.composite
def quantum_sets(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return QuantumSet.from_index_pairs(n, sorted(chosen))


@st.composite
def qset_with_two_subsets(draw):
    qs = draw(quantum_sets())
    d = draw(st.integers(min_value=0, max_value=qs.full_mask))
    e = draw(st.integers(min_value=0, max_value=qs.full_mask))
    return qs, ElementSet(qs.n, d), ElementSet(qs.n, e)


small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=8)
deltas = st.sampled_from([Fraction(1), Fraction(1, 2), Fraction(3, 4), Fraction(2)])


@st.composite
def interval_unions(draw, delta=None):
    delta = delta if delta is not None else draw(deltas)
    pairs = []
    for _ in range(draw(st.integers(min_value=0, max_value=4))):
        a = draw(small_fractions)
        b = a + abs(draw(small_fractions))
        pairs.append((a, b))
    if draw(st.booleans()):
        pairs.append((float("-inf"), draw(small_fractions)))
    if draw(st.booleans()):
        pairs.append((draw(small_fractions), float("inf")))
    return IntervalUnion.make(delta, pairs)


@st.composite
def arc_sets(draw):
    kind = draw(st.sampled_from(["empty", "full", "arc", "arc", "arc"]))
    if kind == "empty":
        return ArcSet.empty()
    if kind == "full":
        return ArcSet.full()
    start = draw(st.fractions(min_value=0, max_value=3, max_denominator=24))
    length = draw(st.fractions(min_value=0, max_value=1, max_denominator=24))
    return ArcSet.arc(start, length)


class TestQuantumSetLaws:
    @given(qset_with_two_subsets())
    @settings(deadline=None)
    def test_galois_connection(self, data):
        qs, d, e = data
        assert d.issubset(qs.qcomplement(e)) == e.issubset(qs.qcomplement(d))

    @given(qset_with_two_subsets())
    @settings(deadline=None)
    def test_antitone_and_triple_complement(self, data):
        qs, d, e = data
        dc = qs.qcomplement(d)
        assert qs.qcomplement(qs.qcomplement(dc)) == dc
        if d.issubset(e):
            assert qs.qcomplement(e).issubset(dc)

    @given(qset_with_two_subsets())
    @settings(deadline=None)
    def test_closure_operator_laws(self, data):
        qs, d, e = data
        c = qs.closure(d)
        assert d.issubset(c)
        assert qs.closure(c) == c
        if d.issubset(e):
            assert c.issubset(qs.closure(e))

    @given(qset_with_two_subsets())
    @settings(deadline=None)
    def test_de_morgan_on_closures(self, data):
        qs, d, e = data
        s, t = qs.closure(d), qs.closure(e)
        assert qs.qcomplement(qs.qunion(s, t)) == qs.qcomplement(s) & qs.qcomplement(t)

    @given(qset_with_two_subsets())
    @settings(deadline=None)
    def test_qcommute_symmetry_and_containment(self, data):
        qs, c, d = data
        assert qs.subsets_qcommute(c, d) == qs.subsets_qcommute(d, c)
        if c.issubset(d) or c.issubset(qs.qcomplement(d)):
            assert qs.subsets_qcommute(c, d)

    @given(quantum_sets(max_n=6))
    @settings(deadline=None, max_examples=40)
    def test_enumeration_matches_filter(self, qs):
        assert set(enumerate_qsubsets(qs).masks) == set(powerset_qsubset_masks(qs))


class TestIntervalLaws:
    @given(st.data())
    @settings(deadline=None)
    def test_galois_connection(self, data):
        delta = data.draw(deltas)
        u = data.draw(interval_unions(delta=delta))
        v = data.draw(interval_unions(delta=delta))
        assert u.issubset(v.qcomp()) == v.issubset(u.qcomp())

    @given(interval_unions())
    @settings(deadline=None)
    def test_triple_complement_and_idempotence(self, u):
        uc = u.qcomp()
        assert uc.qcomp().qcomp() == uc
        c = u.closure()
        assert u.issubset(c) and c.closure() == c

    @given(interval_unions())
    @settings(deadline=None)
    def test_closure_lands_in_closed_family(self, u):
        assert u.closure().is_qsubset()

    @given(interval_unions())
    @settings(deadline=None)
    def test_closed_iff_fixed_point(self, u):
        assert u.is_qsubset() == (u.closure() == u)

    @given(interval_unions(), st.sampled_from([Fraction(2), Fraction(1, 3), Fraction(7, 5)]))
    @settings(deadline=None)
    def test_scale_equivariance(self, u, factor):
        assert u.qcomp().scaled(factor) == u.scaled(factor).qcomp()


class TestArcLaws:
    @given(arc_sets())
    @settings(deadline=None)
    def test_double_complement_identity(self, a):
        assert a.qcomp().qcomp() == a

    @given(arc_sets(), arc_sets())
    @settings(deadline=None)
    def test_meet_commutative_and_absorbing(self, a, b):
        assert a.intersect(b) == b.intersect(a)
        assert a.intersect(a.qunion(b)) == a

    @given(arc_sets(), arc_sets())
    @settings(deadline=None)
    def test_de_morgan(self, a, b):
        assert a.qunion(b).qcomp() == a.qcomp().intersect(b.qcomp())

    @given(arc_sets(), arc_sets())
    @settings(deadline=None)
    def test_qcommute_symmetric(self, a, b):
        assert arc_qcommutes(a, b) == arc_qcommutes(b, a)

    @given(st.lists(st.fractions(min_value=0, max_value=3, max_denominator=12),
                    min_size=1, max_size=5))
    @settings(deadline=None)
    def test_closure_points_is_smallest_closed_cover(self, points):
        c = closure_points(points)
        assert all(c.contains_point(p) for p in points)
        assert c.qcomp().qcomp() == c
