from itertools import combinations_with_replacement, permutations

import pytest
from hypothesis import given, settings, strategies as st

from legcalc.errors import (
    InvalidParameters,
    MalformedPermutation,
    SizeGuardExceeded,
    SizeMismatch,
    UnrealizableInput,
)
from legcalc.mountain import Invariants as I, lattice_points_at_or_above, torus_knot_range
from legcalc.toruslinks import (
    OrderedLink,
    TorusLinkSpec,
    check_orientations,
    common_destabilizations,
    is_realizable,
    max_component_tb_sum,
    nondestabilizable_reps,
    permutation_realizable,
    realizable_permutation_count,
    realizable_permutations,
    total_tb,
    transverse_realizable,
    transverse_sl_max_component,
    unordered_isotopic,
)
from oracles import brute_realizable


def spec(n, p, q, sign):
    return TorusLinkSpec(n, p, q, sign)


class TestSpec:
    @pytest.mark.parametrize("args", [(1, 1, 2, "-"), (2, 2, 4, "-"), (2, 3, 2, "-"), (2, 2, 2, "+"), (2, 1, 2, "?")])
    def test_invalid(self, args):
        with pytest.raises(InvalidParameters):
            spec(*args)

    def test_q_equal_one(self):
        reps = nondestabilizable_reps(spec(3, 1, 1, "-"))
        assert [r.kind for r in reps] == ["NCopy"]
        assert reps[0].components == (I(-1, 0),) * 3


class TestReps:
    def test_two_copies_of_three(self):
        assert len(nondestabilizable_reps(spec(2, 1, 3, "-"))) == 6

    def test_three_copies_of_three(self):
        reps = nondestabilizable_reps(spec(3, 1, 3, "-"))
        assert len(reps) == 6
        assert sum(r.kind == "NCopy" for r in reps) == 3

    def test_knotted_negative(self):
        reps = nondestabilizable_reps(spec(2, 3, 7, "-"))
        assert {r.kind for r in reps} == {"NegKnottedMax"}
        assert sorted(r.r0 for r in reps) == [-4, -2, 2, 4]

    def test_positive(self):
        (rep,) = nondestabilizable_reps(spec(3, 2, 5, "+"))
        assert rep.kind == "PosMax" and rep.components == (I(3, 0),) * 3

    @pytest.mark.parametrize("q", range(1, 9))
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_count_and_max_tb_subset(self, n, q):
        reps = nondestabilizable_reps(spec(n, 1, q, "-"))
        assert len(reps) == q * (q + 1) // 2
        top = [r for r in reps if r.total_component_tb == -n * q]
        expected = [r for r in reps if r.kind == "NCopy" or (n == 2 and r.kind == "Twisted")]
        assert top == expected

    def test_twisted_shape(self):
        for rep in nondestabilizable_reps(spec(3, 1, 4, "-")):
            if rep.kind == "Twisted":
                hi, *lows = rep.components
                assert hi == I(-4 + rep.t, rep.r0)
                assert lows == [I(-4 - rep.t, rep.r0)] * 2


class TestTotals:
    def test_total_tb(self):
        assert total_tb(spec(2, 1, 3, "-"), [(-3, 0), (-3, 0)]) == -12
        assert total_tb(spec(2, 2, 3, "+"), [(1, 0), (1, 0)]) == 14

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            total_tb(spec(2, 1, 3, "-"), [(-3, 0)])

    def test_component_sum(self):
        assert max_component_tb_sum(spec(2, 2, 3, "+")) == 2
        assert max_component_tb_sum(spec(3, 1, 2, "-")) == -6
        assert max_component_tb_sum(spec(3, 3, 7, "-")) == -63


class TestRealizable:
    def test_examples(self):
        s = spec(2, 3, 7, "-")
        assert not is_realizable(s, [(-21, 4), (-21, 2)])
        assert is_realizable(s, [(-21, 4), (-21, 4)])
        res = is_realizable(spec(2, 1, 3, "-"), [(-2, 1), (-4, 1)])
        assert [(w.kind, w.t, w.r0) for w in res.witnesses] == [("Twisted", 1, 1)]
        res = is_realizable(spec(3, 1, 3, "-"), [(-2, 1), (-4, 1), (-4, 1)])
        assert res and all(w.kind == "Twisted" for w in res.witnesses)

    def test_positive_is_just_range(self):
        s = spec(2, 2, 3, "+")
        assert is_realizable(s, [(0, 1), (-3, 0)])
        assert not is_realizable(s, [(2, 1), (1, 0)])

    def test_reason_on_failure(self):
        res = is_realizable(spec(2, 3, 7, "-"), [(-21, 4), (-21, 2)])
        assert res.reason and not res.witnesses

    @pytest.mark.parametrize("n,q", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4)])
    def test_brute_force_equivalence(self, n, q):
        s = spec(n, 1, q, "-")
        floor = -12
        reps = nondestabilizable_reps(s)
        pts = lattice_points_at_or_above(torus_knot_range(1, q, "-"), floor)
        for combo in combinations_with_replacement(sorted(pts), n):
            assert bool(is_realizable(s, combo)) == brute_realizable(reps, combo, floor), combo

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([(2, 1, 3), (3, 1, 2), (2, 2, 5), (3, 3, 4)]), st.data())
    def test_cone_closure(self, params, data):
        n, p, q = params
        s = spec(n, p, q, "-")
        rep = data.draw(st.sampled_from(nondestabilizable_reps(s)))
        comps = list(rep.components)
        for _ in range(data.draw(st.integers(0, 5))):
            i = data.draw(st.integers(0, n - 1))
            dr = data.draw(st.sampled_from([1, -1]))
            comps[i] = I(comps[i].tb - 1, comps[i].r + dr)
            assert is_realizable(s, comps)

    def test_tb_observation(self):
        for n in (2, 3):
            for q in range(2, 6):
                s = spec(n, 1, q, "-")
                pts = lattice_points_at_or_above(torus_knot_range(1, q, "-"), -q - 6)
                for combo in combinations_with_replacement(pts, n):
                    if not is_realizable(s, combo):
                        continue
                    for i, c in enumerate(combo):
                        t = c.tb + q
                        if t >= 1:
                            assert all(d.tb <= -q - t for j, d in enumerate(combo) if j != i)

    def test_transverse_consistency(self):
        s = spec(2, 1, 3, "-")
        pts = lattice_points_at_or_above(torus_knot_range(1, 3, "-"), -8)
        for combo in combinations_with_replacement(pts, 2):
            if is_realizable(s, combo):
                assert transverse_realizable(s, [c.tb - c.r for c in combo])


class TestIsotopy:
    def test_examples(self):
        s = spec(2, 3, 7, "-")
        assert unordered_isotopic(s, [(-21, 4), (-22, 3)], [(-22, 3), (-21, 4)])
        assert not unordered_isotopic(s, [(-21, 4)] * 2, [(-21, 2)] * 2)

    def test_names_the_bad_link(self):
        s = spec(2, 3, 7, "-")
        with pytest.raises(UnrealizableInput) as err:
            unordered_isotopic(s, [(-21, 4)] * 2, [(-21, 4), (-21, 2)])
        assert err.value.which == "second"


class TestCommonDestabilizations:
    def test_adjacent_peaks(self):
        got = common_destabilizations(spec(2, 3, 7, "-"), [(-22, 3)] * 2)
        assert sorted(r.r0 for r in got) == [2, 4]

    def test_single_copy(self):
        got = common_destabilizations(spec(3, 1, 2, "-"), [(-2, -1)] * 3)
        assert [(r.kind, r.r0) for r in got] == [("NCopy", -1)]

    def test_includes_twisted(self):
        # (-1,0) x1 with (-3,0) x2 stabilizes to (-3,0) x3 as well
        got = common_destabilizations(spec(3, 1, 2, "-"), [(-3, 0)] * 3)
        assert [(r.kind, r.r0, r.t) for r in got] == [
            ("NCopy", -1, None), ("NCopy", 1, None), ("Twisted", 0, 1)
        ]

    def test_rejects_unrealizable(self):
        with pytest.raises(UnrealizableInput):
            common_destabilizations(spec(2, 3, 7, "-"), [(-21, 4), (-21, 2)])


class TestPermutations:
    def test_examples(self):
        s = spec(3, 2, 5, "-")
        top = OrderedLink((I(-10, 1),) * 3)
        assert permutation_realizable(s, top, (1, 2, 0))
        assert not permutation_realizable(s, top, (1, 0, 2))
        assert permutation_realizable(spec(3, 2, 5, "+"), OrderedLink((I(3, 0),) * 3), (1, 0, 2))

    def test_labels_respected(self):
        s = spec(4, 2, 5, "-")
        link = OrderedLink((I(-10, 1),) * 4, {0: 0, 1: 2, 2: 1, 3: 3})
        # cyclic order is 0, 2, 1, 3
        assert permutation_realizable(s, link, (2, 3, 1, 0))
        assert not permutation_realizable(s, link, (1, 2, 3, 0))

    def test_bad_labels(self):
        s = spec(3, 2, 5, "-")
        with pytest.raises(InvalidParameters):
            permutation_realizable(s, OrderedLink((I(-10, 1),) * 3, {0: 0, 1: 1}), (0, 1, 2))
        with pytest.raises(InvalidParameters):
            permutation_realizable(s, OrderedLink((I(-10, 1),) * 3, {0: 0, 1: 1, 2: 5}), (0, 1, 2))

    def test_low_components_swap(self):
        s = spec(3, 3, 7, "-")
        link = OrderedLink((I(-21, 2), I(-22, 3), I(-22, 3)))
        assert permutation_realizable(s, link, (0, 2, 1))

    def test_counts(self):
        s = spec(3, 2, 5, "-")
        assert realizable_permutation_count(s, OrderedLink((I(-10, 1),) * 3)) == 3
        assert realizable_permutation_count(spec(3, 2, 5, "+"), OrderedLink((I(3, 0),) * 3)) == 6
        mixed = OrderedLink((I(-10, 1), I(-11, 2), I(-11, 0)))
        assert realizable_permutation_count(s, mixed) == 1

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_group(self, n):
        s = spec(n, 2, 5, "-")
        link = OrderedLink((I(-10, 1),) * (n - 2) + (I(-11, 0),) * 2)
        group = set(realizable_permutations(s, link))
        for a in group:
            inv = tuple(sorted(range(n), key=lambda i: a[i]))
            assert inv in group
            for b in group:
                assert tuple(a[b[i]] for i in range(n)) in group

    def test_errors(self):
        s = spec(3, 2, 5, "-")
        link = OrderedLink((I(-10, 1),) * 3)
        with pytest.raises(MalformedPermutation):
            permutation_realizable(s, link, (0, 0, 1))
        with pytest.raises(UnrealizableInput):
            permutation_realizable(s, OrderedLink((I(-9, 0),) * 3), (0, 1, 2))
        with pytest.raises(SizeGuardExceeded):
            realizable_permutation_count(spec(10, 2, 5, "-"), OrderedLink((I(-10, 1),) * 10))

    def test_p_one_uses_minus_q(self):
        s = spec(3, 1, 4, "-")
        link = OrderedLink((I(-4, 1),) * 3)
        assert sorted(realizable_permutations(s, link)) == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]


class TestTransverse:
    def test_sl_max(self):
        assert transverse_sl_max_component(2, 3, "+") == 1
        assert transverse_sl_max_component(3, 7, "-") == -17
        assert transverse_sl_max_component(1, 5, "+") == -1
        assert transverse_sl_max_component(1, 5, "-") == -1

    @pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5), (3, 7), (4, 9), (5, 7)])
    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_sl_max_matches_range(self, p, q, sign):
        mr = torus_knot_range(p, q, sign)
        assert transverse_sl_max_component(p, q, sign) == max(pk.tb - pk.r for pk in mr.peaks)

    def test_realizable(self):
        assert transverse_realizable(spec(2, 2, 3, "+"), [1, 1])
        assert not transverse_realizable(spec(2, 2, 3, "+"), [1, 0])
        assert transverse_realizable(spec(2, 3, 7, "-"), [-17, -19])
        with pytest.raises(SizeMismatch):
            transverse_realizable(spec(2, 3, 7, "-"), [-17])


def test_mixed_orientations_rejected():
    check_orientations(["+", "+"])
    with pytest.raises(InvalidParameters):
        check_orientations(["+", "-"])


def test_all_orderings_agree():
    s = spec(3, 1, 3, "-")
    comps = [I(-2, 1), I(-4, 1), I(-4, 1)]
    verdicts = {bool(is_realizable(s, p)) for p in permutations(comps)}
    assert verdicts == {True}
