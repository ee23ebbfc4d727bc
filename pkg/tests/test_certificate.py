import json

import pytest

from braidcert.certificate import (
    ASSUMED,
    CLAIM_NAMES,
    CONSISTENT,
    FIXTURE,
    NOT_APPLICABLE,
    UNVERIFIED,
    VERIFIED,
    CertificateConfig,
    CertificateError,
    GeometryFixture,
    build_certificate,
    builtin_fixtures,
    family_surgery_diagram,
    index_fixtures,
    load_fixtures,
    render_report,
)
from braidcert.surgery import first_homology


@pytest.fixture(scope="module")
def refs():
    return builtin_fixtures()


class TestGeometryFixture:
    def test_roundtrip(self, refs):
        link = refs["K0_link"]
        assert GeometryFixture.from_json_obj(link.to_json_obj()) == link

    def test_validation(self):
        with pytest.raises(ValueError, match="order"):
            GeometryFixture("x", True, 0)
        with pytest.raises(ValueError, match="imaginary"):
            GeometryFixture("x", True, 1, cusp_shape=complex(1, -2))

    def test_builtin_contents(self, refs):
        assert set(refs) == {"K0_link"} | {f"K_{n}" for n in range(13)}
        link = refs["K0_link"]
        assert link.hyperbolic and link.symmetry_group_order == 1
        assert link.cusp_shape == complex(0.05249786712, 0.61334493863)
        assert link.shortest_geodesic_lower_bound >= 1.48
        assert refs["K_0"].identified_with == "m239"
        assert refs["K_0"].symmetry_group_order >= 2
        assert refs["K_1"].identified_with == "t12533"
        assert all(refs[f"K_{n}"].symmetry_group_order == 1 for n in range(1, 13))

    def test_load_fixtures_file(self, tmp_path, refs):
        path = tmp_path / "fx.json"
        path.write_text(json.dumps([refs["K0_link"].to_json_obj()]))
        loaded = load_fixtures(path)
        assert loaded == {"K0_link": refs["K0_link"]}

    def test_duplicate_subject_rejected(self, refs):
        with pytest.raises(ValueError, match="duplicate"):
            index_fixtures([refs["K0_link"], refs["K0_link"]])


class TestFamilyDiagram:
    def test_lens(self):
        assert str(first_homology(family_surgery_diagram(None))) == "Z/4"

    def test_zero_twists_unfilled(self):
        assert str(first_homology(family_surgery_diagram(0))) == "Z/29"


class TestBuildCertificate:
    def test_full_fixtures_n1(self, refs):
        cert = build_certificate(1, refs)
        assert cert.is_complete
        assert cert.unverified_claims() == []
        assert cert.all_ok
        statuses = {k: c.status for k, c in cert.claims.items()}
        assert statuses["braid_index_four"] == VERIFIED
        assert statuses["lens_space_filling"] == CONSISTENT
        assert statuses["lspace_knot"] == CONSISTENT
        assert statuses["hyperbolic"] == FIXTURE
        assert statuses["asymmetric"] == FIXTURE
        assert cert.computed["genus"] == 12
        assert cert.computed["braid_index"] == 4
        assert cert.computed["alexander_span"] == 24

    def test_no_fixtures_unverified_set(self, refs):
        for n in (1, 5, 12):
            cert = build_certificate(n)
            assert cert.unverified_claims() == ["hyperbolic", "asymmetric"]
            assert not cert.all_ok

    def test_threshold_route_n13(self, refs):
        cert = build_certificate(13, {"K0_link": refs["K0_link"]})
        assert cert.claims["hyperbolic"].status == VERIFIED
        assert cert.claims["asymmetric"].status == VERIFIED
        assert cert.computed["threshold_met"] is True
        assert cert.computed["min_twist_meeting_threshold"] == 13
        assert cert.unverified_claims() == []

    def test_threshold_route_insufficient_below_13(self, refs):
        cert = build_certificate(12, {"K0_link": refs["K0_link"]})
        assert cert.computed["threshold_met"] is False
        assert cert.claims["hyperbolic"].status == UNVERIFIED
        assert cert.claims["asymmetric"].status == UNVERIFIED

    def test_per_n_fixture_used_below_13(self, refs):
        cert = build_certificate(12, refs)
        assert cert.claims["hyperbolic"].status == FIXTURE
        assert cert.claims["asymmetric"].status == FIXTURE

    def test_threshold_route_independent_of_per_n_fixtures(self, refs):
        with_extra = dict(refs)
        with_extra["K_13"] = GeometryFixture("K_13", True, 1)
        only_knot = {"K_13": with_extra["K_13"]}
        assert (
            build_certificate(13, with_extra).claims["asymmetric"].status
            == build_certificate(13, {"K0_link": refs["K0_link"]}).claims["asymmetric"].status
            == VERIFIED
        )
        # without the link fixture, a per-n fixture still settles it, as a fixture
        assert build_certificate(13, only_knot).claims["asymmetric"].status == FIXTURE

    def test_wide_n_range_smoke(self, refs):
        for n in range(0, 41):
            cert = build_certificate(n, refs)
            assert cert.is_complete
            expected = (
                NOT_APPLICABLE if n == 0 else FIXTURE if n <= 12 else VERIFIED
            )
            assert cert.claims["asymmetric"].status == expected
            assert cert.all_ok

    def test_n0_special_casing(self, refs):
        cert = build_certificate(0, refs)
        assert cert.claims["asymmetric"].status == NOT_APPLICABLE
        assert cert.claims["lspace_knot"].status == ASSUMED
        assert cert.claims["hyperbolic"].status == FIXTURE
        assert cert.all_ok

    def test_homfly_cap_gives_consistent(self, refs):
        cert = build_certificate(7, refs)
        assert cert.claims["braid_index_four"].status == CONSISTENT
        assert cert.computed["mfw_bound"] is None
        cert_forced = build_certificate(7, refs, CertificateConfig(homfly_max_n=7))
        assert cert_forced.claims["braid_index_four"].status == VERIFIED
        assert cert_forced.computed["mfw_bound"] == 4

    def test_never_verified_without_inputs(self, refs):
        cert = build_certificate(9)
        for name in ("hyperbolic", "asymmetric"):
            assert cert.claims[name].status != VERIFIED
        assert cert.claims["braid_index_four"].status != VERIFIED

    def test_image_slope_and_twist_homology(self, refs):
        cert = build_certificate(20)
        assert cert.computed["image_slope"] == "109"
        assert cert.computed["h1_twist_check"] == "Z/109"

    def test_hypothesis_claim_present_for_every_n(self, refs):
        for n in (0, 1, 13, 30):
            cert = build_certificate(n)
            claim = cert.claims["twist_hypothesis_slope_bound"]
            assert claim.status == VERIFIED
            assert "29 >= 2 * 11 - 1 = 21" in claim.evidence

    def test_contradicting_fixture_raises(self, refs):
        bad = GeometryFixture("K_3", True, 2)
        with pytest.raises(CertificateError, match="symmetry order 2"):
            build_certificate(3, [bad])
        not_hyp = GeometryFixture("K_3", False, 1)
        with pytest.raises(CertificateError, match="non-hyperbolic"):
            build_certificate(3, [not_hyp])

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            build_certificate(-1)

    def test_claim_order_fixed(self, refs):
        cert = build_certificate(2, refs)
        assert tuple(cert.claims) == CLAIM_NAMES


class TestRenderReport:
    def test_json_deterministic(self, refs):
        a = render_report(build_certificate(1, refs), "json")
        b = render_report(build_certificate(1, refs), "json")
        assert a == b

    def test_json_fields(self, refs):
        obj = json.loads(render_report(build_certificate(1, refs), "json"))
        assert obj["schema_version"] == "1"
        assert obj["n"] == 1
        assert obj["computed"]["genus"] == 12
        assert obj["computed"]["braid_index"] == 4
        assert set(obj["claims"]) == set(CLAIM_NAMES)
        assert {a["label"] for a in obj["assumptions"]} == {
            "base_knot_lspace",
            "lens_space_filling",
            "positive_braids_fibered",
            "threshold_constant",
        }

    def test_text_report(self, refs):
        text = render_report(build_certificate(5, refs), "text")
        assert "certificate for n = 5" in text
        assert "VERIFIED" in text
        assert "assumptions:" in text

    def test_unknown_format(self, refs):
        with pytest.raises(ValueError, match="unknown report format"):
            render_report(build_certificate(1, refs), "xml")

    def test_missing_fixture_note_in_report(self):
        obj = json.loads(render_report(build_certificate(5), "json"))
        assert obj["claims"]["asymmetric"]["status"] == "UNVERIFIED"
        assert "n <= 12" in obj["claims"]["asymmetric"]["evidence"]
