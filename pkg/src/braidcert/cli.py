"""Command line frontend.

Verbs: ``gen`` (print a family braid word), ``invariants`` (full invariant
report for a word or a family member), ``certify`` (build and render an
evidence bundle; exit 0 iff no claim is left unverified), ``cusp``
(normalized-length threshold search), ``homology`` (H1 of a surgery diagram
file).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .alexander import alexander_poly, genus_from_alexander, lspace_form_check
from .braid import (
    BraidWord,
    bennequin_genus,
    closure_pd_code,
    family_braid,
    is_twist_positive,
    parse_braid,
    permutation,
)
from .certificate import (
    CertificateConfig,
    build_certificate,
    builtin_fixtures,
    load_fixtures,
    render_report,
)
from .cusp import CuspShape, min_twist_meeting_threshold, twist_normalized_length
from .homfly import braid_index_bounds, homfly
from .polynomial import KERNEL_BACKEND
from .surgery import SurgeryDiagram, first_homology, presentation_matrix


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _resolve_braid(args) -> BraidWord:
    if args.n is not None:
        return family_braid(args.n)
    return parse_braid(args.braid, strands=args.strands)


def cmd_gen(args) -> int:
    b = family_braid(args.n)
    if args.json:
        sys.stdout.write(
            _dump({"n": args.n, "strands": b.strands, "letters": list(b.letters)})
        )
    else:
        print(b)
    return 0


def cmd_invariants(args) -> int:
    b = _resolve_braid(args)
    perm = permutation(b)
    knot = perm.is_single_cycle
    report: dict = {
        "strands": b.strands,
        "letters": list(b.letters),
        "letter_count": b.letter_count,
        "exponent_sum": b.exponent_sum,
        "positive": b.is_positive,
        "twist_positive": is_twist_positive(b),
        "knot_closure": knot,
        "permutation": list(perm.images),
        "cycle_type": list(perm.cycle_type()),
        "pd_code": closure_pd_code(b).to_json_obj(),
    }
    if knot and b.is_positive:
        report["genus"] = bennequin_genus(b)
    if knot:
        alex = alexander_poly(b)
        report["alexander"] = str(alex)
        report["alexander_json"] = alex.to_json_obj()
        report["alexander_span"] = alex.span
        report["genus_from_alexander"] = genus_from_alexander(alex)
        report["lspace_form_ok"] = lspace_form_check(alex)
    if not args.no_homfly:
        p = homfly(b)
        lower, upper = braid_index_bounds(b)
        report["homfly"] = str(p)
        report["homfly_json"] = p.to_json_obj()
        report["mfw_lower_bound"] = lower
        report["braid_index_upper_bound"] = upper
        if knot:
            report["braid_index"] = upper if lower == upper else "inconclusive"
    if args.json:
        sys.stdout.write(_dump(report))
    else:
        for key, value in report.items():
            if key.endswith("_json") or key == "pd_code":
                continue
            print(f"{key}: {value}")
    return 0


def cmd_certify(args) -> int:
    if args.fixtures == "builtin":
        fixtures = builtin_fixtures()
    elif args.fixtures:
        fixtures = load_fixtures(args.fixtures)
    else:
        fixtures = None
    config = CertificateConfig(
        normalized_length_threshold=args.threshold,
        homfly_max_n=args.homfly_max_n,
    )
    cert = build_certificate(args.n, fixtures, config)
    sys.stdout.write(render_report(cert, "json" if args.json else "text"))
    return 0 if cert.all_ok else 1


def cmd_cusp(args) -> int:
    shape = CuspShape.parse(args.z)
    n_min = min_twist_meeting_threshold(shape, args.threshold)
    report = {
        "z": {"re": shape.z.real, "im": shape.z.imag},
        "threshold": args.threshold,
        "min_twist_meeting_threshold": n_min,
        "normalized_lengths": {
            str(n): twist_normalized_length(shape, n)
            for n in range(max(1, n_min - 2), n_min + 2)
        },
    }
    if args.json:
        sys.stdout.write(_dump(report))
    else:
        print(f"z = {shape.z.real!r} + {shape.z.imag!r}i")
        print(f"threshold = {args.threshold!r}")
        print(f"min twist n with normalized length >= threshold: {n_min}")
        for n, val in report["normalized_lengths"].items():
            print(f"  L(-1/{n}) = {val!r}")
    return 0


def cmd_homology(args) -> int:
    with open(args.diagram, encoding="utf-8") as fh:
        diagram = SurgeryDiagram.from_json_obj(json.load(fh))
    group = first_homology(diagram)
    filled = diagram.drop_unfilled()
    matrix = presentation_matrix(filled) if filled.slopes else []
    if args.json:
        sys.stdout.write(
            _dump(
                {
                    "presentation_matrix": matrix,
                    "invariant_factors": list(group.invariant_factors),
                    "h1": str(group),
                    "order": group.order(),
                }
            )
        )
    else:
        print(f"presentation matrix: {matrix}")
        print(f"H1 = {group} (order {group.order()})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidcert",
        description="Exact invariants and evidence bundles for a twisted "
        "family of positive 4-braid closures.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__} (kernel backend: {KERNEL_BACKEND})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print the family braid word for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("invariants", help="invariant report for a braid word")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--braid", help="word such as '(1,2,3)^4,2,1'")
    group.add_argument("--n", type=int, help="family parameter")
    p.add_argument("--strands", type=int, help="override the strand count")
    p.add_argument("--no-homfly", action="store_true", help="skip the trace route")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("certify", help="build the evidence bundle for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--fixtures",
        help="fixture JSON file, or 'builtin' for the checked-in references",
    )
    p.add_argument("--threshold", type=float, default=10.1)
    p.add_argument("--homfly-max-n", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("cusp", help="normalized-length threshold search")
    p.add_argument("--z", required=True, help="cusp shape as 're,im'")
    p.add_argument("--threshold", type=float, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cusp)

    p = sub.add_parser("homology", help="H1 of a surgery diagram JSON file")
    p.add_argument("--diagram", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_homology)

    return parser


def _merge_braid_value(argv: list[str]) -> list[str]:
    """Let ``--braid -1,-2`` work: argparse would read the value as a flag."""
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--braid" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--braid={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_merge_braid_value(argv))
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
