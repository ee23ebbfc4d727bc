"""Exact knot invariants and evidence bundles for a twisted family of
positive 4-braid closures.

Subpackage map: ``braid`` (words, family, closures), ``polynomial`` (exact
Laurent arithmetic), ``alexander`` (Burau route), ``homfly`` (Hecke trace
route), ``skein`` (brute-force oracles), ``surgery`` (Smith normal form and
slope arithmetic), ``cusp`` (normalized lengths), ``certificate`` (evidence
bundles and fixtures), ``cli`` (command line).
"""

from .braid import (
    BraidWord,
    PDCode,
    Permutation,
    bennequin_genus,
    closure_pd_code,
    family_braid,
    is_knot_closure,
    is_twist_positive,
    parse_braid,
    permutation,
)
from .polynomial import KERNEL_BACKEND, LaurentPoly1, LaurentPoly2
from .alexander import (
    BurauMatrix,
    alexander_poly,
    burau_matrix,
    genus_from_alexander,
    lspace_form_check,
    reduced_burau,
)
from .homfly import (
    HeckeElement,
    HomflyPolynomial,
    braid_index_bounds,
    braid_index_certified,
    hecke_multiply_generator,
    homfly,
    mfw_lower_bound,
)
from .surgery import (
    AbelianGroup,
    Slope,
    SurgeryDiagram,
    first_homology,
    homological_longitude_slope,
    presentation_matrix,
    smith_normal_form,
    twist_image_slope,
    twist_slopes_covered,
)
from .cusp import (
    CuspShape,
    min_twist_meeting_threshold,
    normalized_length,
    slope_length,
    twist_normalized_length,
)
from .certificate import (
    CertificateConfig,
    CertificateError,
    GeometryFixture,
    LSpaceCertificate,
    build_certificate,
    builtin_fixtures,
    load_fixtures,
    render_report,
)

__version__ = "0.1.0"
