import math

import pytest
from hypothesis import given, strategies as st

from braidcert.cusp import (
    CuspShape,
    min_twist_meeting_threshold,
    normalized_length,
    normalized_length_lattice,
    slope_length,
    twist_normalized_length,
)

#: The reference cusp shape of the twisting-curve cusp of the link complement.
Z_REF = complex(0.05249786712, 0.61334493863)

coprime_slopes = st.tuples(
    st.integers(min_value=-20, max_value=20), st.integers(min_value=-20, max_value=20)
).filter(lambda pq: pq != (0, 0) and math.gcd(abs(pq[0]), abs(pq[1])) == 1)

shapes = st.tuples(
    st.floats(min_value=-3, max_value=3, allow_nan=False),
    st.floats(min_value=0.05, max_value=4, allow_nan=False),
).map(lambda ri: CuspShape(complex(*ri)))


class TestCuspShape:
    def test_requires_upper_half_plane(self):
        with pytest.raises(ValueError):
            CuspShape(complex(1.0, 0.0))
        with pytest.raises(ValueError):
            CuspShape(complex(0.3, -0.1))

    def test_parse(self):
        shape = CuspShape.parse("0.5,1.25")
        assert shape.z == complex(0.5, 1.25)
        with pytest.raises(ValueError):
            CuspShape.parse("1.0")
        with pytest.raises(ValueError):
            CuspShape.parse("a,b")


class TestSlopeLength:
    def test_meridian(self):
        assert slope_length(CuspShape(Z_REF), 1, 0) == 1.0

    def test_longitude(self):
        shape = CuspShape(Z_REF)
        assert slope_length(shape, 0, 1) == pytest.approx(abs(Z_REF))

    def test_reference_twist_slope(self):
        assert slope_length(CuspShape(Z_REF), -1, 13) == pytest.approx(7.98, abs=0.01)

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            slope_length(CuspShape(Z_REF), 2, 4)
        with pytest.raises(ValueError):
            slope_length(CuspShape(Z_REF), 0, 0)

    @given(shapes, coprime_slopes, coprime_slopes)
    def test_lattice_triangle_inequality(self, shape, s1, s2):
        (p1, q1), (p2, q2) = s1, s2
        combined = abs((p1 + p2) + (q1 + q2) * shape.z)
        assert combined <= slope_length(shape, *s1) + slope_length(shape, *s2) + 1e-9


class TestNormalizedLength:
    def test_reference_values(self):
        shape = CuspShape(Z_REF)
        assert twist_normalized_length(shape, 13) == pytest.approx(10.19, abs=0.01)
        assert twist_normalized_length(shape, 12) == pytest.approx(9.41, abs=0.01)

    def test_meridian_unit_area(self):
        assert normalized_length(CuspShape(complex(0, 1)), 1, 0) == 1.0

    @given(
        shapes,
        coprime_slopes,
        st.complex_numbers(
            min_magnitude=0.1, max_magnitude=5, allow_nan=False, allow_infinity=False
        ),
    )
    def test_scale_invariance(self, shape, slope, scale):
        p, q = slope
        reference = normalized_length(shape, p, q)
        rescaled = normalized_length_lattice(scale, scale * shape.z, p, q)
        assert rescaled == pytest.approx(reference, rel=1e-9)

    def test_matches_lattice_formula(self):
        shape = CuspShape(Z_REF)
        assert normalized_length(shape, -1, 13) == pytest.approx(
            normalized_length_lattice(1, shape.z, -1, 13), rel=1e-12
        )


class TestThresholdSearch:
    def test_reference_threshold(self):
        assert min_twist_meeting_threshold(CuspShape(Z_REF), 10.1) == 13

    def test_tiny_threshold(self):
        assert min_twist_meeting_threshold(CuspShape(Z_REF), 0.1) == 1

    def test_square_lattice(self):
        # |11i - 1| = sqrt(122) ~ 11.045 >= 10.1; |10i - 1| = sqrt(101) < 10.1
        assert min_twist_meeting_threshold(CuspShape(complex(0, 1)), 10.1) == 11

    def test_threshold_must_be_positive(self):
        with pytest.raises(ValueError):
            min_twist_meeting_threshold(CuspShape(Z_REF), 0.0)

    @given(shapes, st.floats(min_value=0.01, max_value=50, allow_nan=False))
    def test_first_hit_is_minimal(self, shape, threshold):
        n = min_twist_meeting_threshold(shape, threshold)
        assert twist_normalized_length(shape, n) >= threshold
        assert all(
            twist_normalized_length(shape, k) < threshold for k in range(1, n)
        )

    @given(shapes)
    def test_eventually_monotone(self, shape):
        z = shape.z
        bound = math.floor(z.real / abs(z) ** 2) + 1
        values = [twist_normalized_length(shape, n) for n in range(max(1, bound), max(1, bound) + 12)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_unreachable_guard_never_hit(self):
        # scan cap derivation: NL(n) >= n * sqrt(Im z)
        shape = CuspShape(complex(2.5, 0.05))
        n = min_twist_meeting_threshold(shape, 30)
        assert twist_normalized_length(shape, n) >= 30
