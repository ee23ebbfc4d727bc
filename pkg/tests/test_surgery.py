import pytest
from hypothesis import given, settings, strategies as st

from braidcert.surgery import (
    AbelianGroup,
    Slope,
    SurgeryDiagram,
    first_homology,
    homological_longitude_slope,
    int_det,
    presentation_matrix,
    smith_normal_form,
    twist_image_slope,
    twist_slopes_covered,
)

small_ints = st.integers(min_value=-9, max_value=9)


def matrices(max_dim=4):
    return st.integers(min_value=0, max_value=max_dim).flatmap(
        lambda rows: st.integers(min_value=0, max_value=max_dim).flatmap(
            lambda cols: st.lists(
                st.lists(small_ints, min_size=cols, max_size=cols),
                min_size=rows,
                max_size=rows,
            )
        )
    )


def family_diagram(c_slope: Slope) -> SurgeryDiagram:
    return SurgeryDiagram((Slope(29, 1), c_slope), ((0, 2), (2, 0)))


class TestSlope:
    def test_normalization(self):
        assert Slope.of(6, 4) == Slope(3, 2)
        assert Slope.of(-6, 4) == Slope(-3, 2)
        assert Slope.of(3, -2) == Slope(-3, 2)
        assert Slope.of(-1, 0) == Slope.infinity()
        assert Slope.of(0, 5) == Slope(0, 1)

    def test_validation(self):
        with pytest.raises(ValueError):
            Slope(0, 0)
        with pytest.raises(ValueError):
            Slope(2, 4)
        with pytest.raises(ValueError):
            Slope(3, -1)
        with pytest.raises(ValueError):
            Slope(2, 0)

    def test_str(self):
        assert str(Slope(29, 1)) == "29"
        assert str(Slope(-1, 3)) == "-1/3"
        assert str(Slope.infinity()) == "inf"

    def test_json_roundtrip(self):
        s = Slope(-7, 3)
        assert Slope.from_json_obj(s.to_json_obj()) == s


class TestPresentationMatrix:
    def test_single_component(self):
        d = SurgeryDiagram((Slope(5, 3),), ((0,),))
        assert presentation_matrix(d) == [[5]]

    def test_lens_filling(self):
        assert presentation_matrix(family_diagram(Slope(0, 1))) == [[29, 2], [2, 0]]

    def test_twist_filling(self):
        for n in (1, 2, 7):
            assert presentation_matrix(family_diagram(Slope(-1, n))) == [
                [29, 2],
                [2 * n, -1],
            ]

    def test_rejects_unfilled(self):
        with pytest.raises(ValueError, match="unfilled"):
            presentation_matrix(family_diagram(Slope.infinity()))

    def test_diagram_validation(self):
        with pytest.raises(ValueError, match="symmetric"):
            SurgeryDiagram((Slope(1, 1), Slope(1, 1)), ((0, 1), (2, 0)))
        with pytest.raises(ValueError, match="diagonal"):
            SurgeryDiagram((Slope(1, 1),), ((1,),))
        with pytest.raises(ValueError, match="shape"):
            SurgeryDiagram((Slope(1, 1),), ((0, 0),))

    def test_json_roundtrip(self):
        d = family_diagram(Slope(-1, 4))
        assert SurgeryDiagram.from_json_obj(d.to_json_obj()) == d


class TestFirstHomology:
    def test_lens_filling(self):
        group = first_homology(family_diagram(Slope(0, 1)))
        assert group == AbelianGroup((4,))
        assert str(group) == "Z/4"

    def test_twist_fillings(self):
        for n in range(0, 21):
            c = Slope.of(-1, n)  # n = 0 normalizes to the unfilled slope
            group = first_homology(family_diagram(c))
            assert group.is_finite_cyclic
            assert group.order() == 29 + 4 * n

    def test_unfilled_components_dropped(self):
        d = family_diagram(Slope.infinity())
        assert first_homology(d) == AbelianGroup((29,))

    def test_empty_diagram(self):
        assert first_homology(SurgeryDiagram((), ())).is_trivial

    def test_zero_surgery_on_unknot(self):
        d = SurgeryDiagram((Slope(0, 1),), ((0,),))
        group = first_homology(d)
        assert group.rank == 1 and str(group) == "Z"

    @given(matrices())
    @settings(max_examples=80)
    def test_order_matches_determinant(self, m):
        if not m or not m[0] or len(m) != len(m[0]):
            return
        snf = smith_normal_form(m)
        diag = [snf.S[i][i] for i in range(len(m))]
        det = int_det(m)
        if det != 0:
            prod = 1
            for d in diag:
                prod *= d
            assert prod == abs(det)
        else:
            assert 0 in diag


class TestSmithNormalForm:
    @given(matrices())
    @settings(max_examples=120)
    def test_decomposition(self, m):
        rows = len(m)
        cols = len(m[0]) if rows else 0
        snf = smith_normal_form(m)
        # U S V == m
        recomposed = [
            [
                sum(
                    snf.U[i][k] * snf.S[k][l] * snf.V[l][j]
                    for k in range(rows)
                    for l in range(cols)
                )
                for j in range(cols)
            ]
            for i in range(rows)
        ]
        assert recomposed == [list(r) for r in m]
        assert abs(int_det(snf.U)) == 1
        assert abs(int_det(snf.V)) == 1
        # S diagonal, nonnegative, divisibility chain
        diag = []
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert snf.S[i][j] == 0
                else:
                    diag.append(snf.S[i][j])
        assert all(d >= 0 for d in diag)
        nonzero = [d for d in diag if d]
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        # zeros trail
        assert diag == sorted(diag, key=lambda d: (d == 0, 0))

    def test_known_matrix(self):
        snf = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
        assert [snf.S[i][i] for i in range(3)] == [2, 2, 156]


class TestAbelianGroup:
    def test_rendering(self):
        assert str(AbelianGroup(())) == "0"
        assert str(AbelianGroup((4,))) == "Z/4"
        assert str(AbelianGroup((2, 4, 0))) == "Z/2 ⊕ Z/4 ⊕ Z"
        assert str(AbelianGroup((0, 0))) == "Z^2"

    def test_order(self):
        assert AbelianGroup(()).order() == 1
        assert AbelianGroup((2, 4)).order() == 8
        assert AbelianGroup((0,)).order() is None

    def test_validation(self):
        with pytest.raises(ValueError):
            AbelianGroup((1,))
        with pytest.raises(ValueError):
            AbelianGroup((0, 2))
        with pytest.raises(ValueError):
            AbelianGroup((4, 2))


class TestSlopeArithmetic:
    def test_image_slope_family(self):
        assert twist_image_slope(Slope(29, 1), 2, 1) == Slope(33, 1)
        assert twist_image_slope(Slope(29, 1), 2, 0) == Slope(29, 1)

    def test_image_slope_rational(self):
        assert twist_image_slope(Slope(7, 2), 3, 2) == Slope(43, 2)

    def test_image_slope_rejects_unfilled(self):
        with pytest.raises(ValueError):
            twist_image_slope(Slope.infinity(), 2, 1)

    def test_longitude_family(self):
        assert homological_longitude_slope(Slope(29, 1), 2) == Slope(4, 29)

    def test_longitude_trivial(self):
        assert homological_longitude_slope(Slope(1, 1), 1) == Slope(1, 1)

    def test_longitude_negative(self):
        s = homological_longitude_slope(Slope(-3, 1), 2)
        assert s == Slope(-4, 3)
        assert s.p < 0

    def test_longitude_reduces(self):
        assert homological_longitude_slope(Slope(6, 1), 2) == Slope(2, 3)

    def test_longitude_rejects_zero(self):
        with pytest.raises(ValueError):
            homological_longitude_slope(Slope(0, 1), 2)

    def test_longitude_positive_when_hypotheses_hold(self):
        for p, q, w in [(29, 1, 2), (7, 2, 3), (1, 5, 1), (3, 4, -2)]:
            s = homological_longitude_slope(Slope(p, q), w)
            assert s.p > 0

    def test_coverage_predicate(self):
        covered = twist_slopes_covered(Slope(29, 1), 2)
        for n in (0, 1, 13, 100):
            assert covered(n)
        assert not covered(-1)

    def test_coverage_hypotheses(self):
        with pytest.raises(ValueError, match="positive"):
            twist_slopes_covered(Slope(-5, 1), 2)
        with pytest.raises(ValueError, match="linking"):
            twist_slopes_covered(Slope(29, 1), 0)
        with pytest.raises(ValueError, match="positive"):
            twist_slopes_covered(Slope.infinity(), 2)
