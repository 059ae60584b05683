"""Decomposition: recursion, toggles, matrix assembly and inversion."""

import pytest

from kacdecomp import (
    ClosureTooLarge,
    LengthMismatch,
    NotClosed,
    cap_spans,
    catalan_check,
    conjecture_scan,
    decompose,
    decompose_recursive,
    enumerate_matching,
    from_spec,
    invert_unitriangular,
    invert_unitriangular_rows,
    kac_modules_containing,
    multiplicity_matrix,
    predecessor,
    toggle_caps,
    verify_routes,
)

from conftest import fab, random_diagrams


class TestDecompose:
    def test_single_cross(self):
        for a in (-3, 0, 7):
            assert set(decompose(from_spec({a}))) == {
                from_spec({a}),
                from_spec({a - 1}),
            }

    def test_f23(self):
        assert decompose(fab(2, 3)) == [fab(2, 3), fab(1, 3), fab(0, 1)]

    def test_typical(self):
        f = from_spec((), {4, 1}, {2})
        assert decompose(f) == [f]

    def test_verify_mode(self, worked):
        assert decompose(worked, verify=True)

    def test_recursion_hand_run(self):
        # P(x:2) = {x:2, x:1}; re-attaching 3 gives {x:3,2, x:3,1};
        # scanning the moves of 3 adds x:1,0 exactly once
        assert set(decompose_recursive(from_spec({2}))) == {
            from_spec({2}),
            from_spec({1}),
        }
        assert set(decompose_recursive(fab(2, 3))) == {
            fab(2, 3),
            fab(1, 3),
            fab(0, 1),
        }

    def test_no_duplicates_catalan(self):
        # the recursion asserts exactly-once listing internally
        assert len(decompose_recursive(fab(2, 4))) == 5

    def test_cored_agreement(self):
        for f in random_diagrams(40, seed=51, max_crosses=4, lo=-6, hi=6):
            assert set(decompose_recursive(f)) == set(enumerate_matching(f))


class TestPredecessor:
    def test_cap_end(self):
        assert predecessor(fab(1, 3), 2) == fab(2, 3)

    def test_no_cap(self):
        assert predecessor(from_spec({0}), 5) is None

    def test_single_cross(self):
        assert predecessor(from_spec({-1}), 0) == from_spec({0})

    def test_matches_weight_zero_moves(self):
        from kacdecomp import apply_move, legal_ends

        for f in random_diagrams(30, seed=53, max_crosses=4, lo=-5, hi=5):
            for a in f.crosses:
                for b, w in legal_ends(f, a):
                    if w == 0:
                        assert predecessor(apply_move(f, a, b), a) == f

    def test_returned_move_is_weight_zero(self):
        # iff direction: whatever predecessor returns really has a
        # weight-zero legal move to g starting at a
        from kacdecomp import legal_ends

        for g in random_diagrams(30, seed=59, max_crosses=4, lo=-5, hi=5):
            for a in range(min(g.support, default=0) - 2, max(g.support, default=0) + 4):
                f = predecessor(g, a)
                if f is not None:
                    (b,) = g.crosses - f.crosses
                    assert (b, 0) in legal_ends(f, a)


class TestToggleCaps:
    def test_zero_bits(self, worked):
        assert toggle_caps(worked, (0,) * 5) == worked

    def test_single_and_double(self):
        f = fab(2, 3)  # caps (3,4), (2,5)
        assert toggle_caps(f, (1, 0)) == fab(2, 4)
        assert toggle_caps(f, (1, 1)) == fab(4, 5)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            toggle_caps(fab(2, 3), (1,))

    def test_membership(self):
        for f in random_diagrams(25, seed=57, max_crosses=3, lo=-5, hi=5):
            k = f.atypicality
            for mask in range(1 << k):
                bits = tuple((mask >> p) & 1 for p in range(k))
                assert f in decompose(toggle_caps(f, bits))

    def test_single_bit_is_a_rightward_move(self):
        # one-bit toggles relocate the cross to its own cap end, which is
        # always a circle
        from kacdecomp import apply_move, cap_diagram

        for f in random_diagrams(25, seed=63, max_crosses=3, lo=-5, hi=5):
            caps = cap_diagram(f).caps
            for p, cap in enumerate(caps):
                bits = tuple(1 if q == p else 0 for q in range(len(caps)))
                assert toggle_caps(f, bits) == apply_move(f, cap.begin, cap.end)


class TestCapSpans:
    def test_examples(self, worked):
        assert cap_spans(worked) == (1, 2, 6, 1, 4)
        assert cap_spans(from_spec({0})) == (1,)
        assert cap_spans(fab(2, 3)) == (1, 3)


class TestContaining:
    def test_typical(self):
        f = from_spec((), {5}, ())
        assert kac_modules_containing(f) == [f]

    def test_single_cross(self):
        assert set(kac_modules_containing(from_spec({-1}))) == {
            from_spec({-1}),
            from_spec({0}),
        }

    def test_f23(self):
        assert set(kac_modules_containing(fab(2, 3))) == {
            fab(2, 3),
            fab(2, 4),
            fab(3, 5),
            fab(4, 5),
        }

    def test_verify_mode(self):
        assert kac_modules_containing(fab(2, 3), verify=True)

    def test_incidence_duality(self):
        # g is a factor of K(f) exactly when f is a cap toggle of g
        for f in random_diagrams(40, seed=4242, max_crosses=4, lo=-8, hi=8, max_core=3):
            for g in decompose(f):
                assert f in set(kac_modules_containing(g))


class TestMultiplicityMatrix:
    def test_single_cross_seed(self):
        m = multiplicity_matrix([from_spec({0})])
        assert m.index == (from_spec({0}), from_spec({-1}))
        assert m.dense() == [[1, 0], [1, 1]]
        assert m.column_sum(from_spec({0})) == 2
        assert m.complete_columns() == [from_spec({0})]

    def test_typical_seed(self):
        f = from_spec((), {3}, ())
        m = multiplicity_matrix([f], levels=None)
        assert m.dense() == [[1]]
        assert m.incomplete_columns() == []

    def test_column_counts(self):
        m = multiplicity_matrix([fab(2, 3)], levels=2)
        assert len(m.index) == 8
        for f in m.complete_columns():
            assert m.column_sum(f) == len(decompose(f))
        for f in m.index:
            present = [g for g in m.factor_sets[f] if g in set(m.index)]
            assert m.column_sum(f) == len(present)

    def test_unitriangular_shape(self):
        m = multiplicity_matrix([fab(2, 3)], levels=2)
        dense = m.dense()
        n = len(m.index)
        for i in range(n):
            assert dense[i][i] == 1
            for j in range(i + 1, n):
                assert dense[i][j] == 0

    def test_closure_guard(self):
        with pytest.raises(ClosureTooLarge):
            multiplicity_matrix([from_spec({0})], levels=None, max_size=20)

    def test_json_and_csv(self):
        from kacdecomp.decomp import IndexedMatrix

        m = multiplicity_matrix([from_spec({0})])
        again = IndexedMatrix.from_json_obj(m.to_json_obj())
        assert again.index == m.index and again.entries == m.entries
        text = m.to_csv()
        assert text.splitlines()[0] == ",x:0,x:-1"
        assert text.splitlines()[1] == "x:0,1,0"

    def test_csv_quotes_diagram_commas(self):
        # serialized diagrams contain commas; the CSV must stay parseable
        import csv
        import io

        m = multiplicity_matrix([fab(2, 3)])
        rows = list(csv.reader(io.StringIO(m.to_csv())))
        assert rows[0][1:] == [str(f) for f in m.index]
        assert rows[1][0] == "x:3,2"
        assert [int(v) for v in rows[1][1:]] == m.dense()[0]


class TestInversion:
    def test_two_by_two(self):
        assert invert_unitriangular_rows([[1, 1], [0, 1]]) == [[1, -1], [0, 1]]

    def test_identity(self):
        eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert invert_unitriangular_rows(eye) == eye

    def test_not_unitriangular(self):
        with pytest.raises(ValueError):
            invert_unitriangular_rows([[1, 2], [3, 1]])
        with pytest.raises(ValueError):
            invert_unitriangular_rows([[2, 0], [0, 1]])

    def test_closure_inverse(self):
        m = multiplicity_matrix([fab(2, 3)], levels=2)
        inv = invert_unitriangular(m)
        assert m.multiply(inv).is_identity()
        assert inv.multiply(m).is_identity()
        assert all(v in (-1, 0, 1, 2, -2) for v in sum(inv.dense(), []))

    def test_require_closed(self):
        m = multiplicity_matrix([from_spec({0})])
        with pytest.raises(NotClosed):
            invert_unitriangular(m, require_closed=True)
        t = multiplicity_matrix([from_spec((), {3}, ())], levels=None)
        assert invert_unitriangular(t, require_closed=True).is_identity()


class TestVerifyRoutes:
    def test_passes(self, worked):
        for f in [fab(2, 3), worked, from_spec(())]:
            report = verify_routes(f)
            assert report.passed and not report.mismatches

    def test_report_json(self):
        obj = verify_routes(fab(2, 3)).to_json_obj()
        assert obj["passed"] is True
        assert obj["factors"] == ["x:3,2", "x:3,1", "x:1,0"]


class TestCatalan:
    def test_counts(self):
        for k, expected in [(1, 1), (2, 2), (3, 5), (4, 14)]:
            count, want, ok = catalan_check(k)
            assert ok and count == expected == want

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            catalan_check(0)


class TestConjecture:
    def test_small_windows_clean(self):
        assert conjecture_scan(2, -3, 3) == []
        assert conjecture_scan(3, 0, 6) == []

    def test_k_one_vacuous(self):
        assert conjecture_scan(1, 0, 3) == []

    def test_equality_cases_are_translates(self):
        # diagrams hitting the bound exist and are exactly the staircases
        from math import comb

        k = 3
        ck = comb(2 * k, k) // (k + 1)
        hits = []
        from itertools import combinations

        for combo in combinations(range(0, 7), k - 1):
            g = from_spec(combo)
            if len(decompose(g)) == ck:
                hits.append(combo)
        assert hits == [(0, 2), (1, 3), (2, 4), (3, 5), (4, 6)]
