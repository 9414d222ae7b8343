"""
Command-Line Front End

    isocant <command> [options] [--format text|json|csv] [--verbose]

Commands:
    volume        exact volume of I_d(ℓ,a)
    dual-volume   exact volume of J_d(b,c), from (b,c) or from (ℓ,a)
    vertices      the 2^{d+1}−2 vertices of I_d(ℓ,a)
    fvector       f-vector of J_d (or of I_d with --primal)
    facets        facet hyperplanes and vertex counts of J_d(b,c)
    roof          volume of a roof (C, V, ℓ₁, ℓ₂, h)
    mahler        Mahler polynomial p_d and its positivity certificate
    probability   meeting probability of d people waiting a fraction w
    metric-check  four-point condition of the pointed metric space behind J_d
    verify        run every applicable oracle (see verify_graph)
    table         sweep a or d into a CSV table

Exit codes: 0 success, 1 domain error, 2 usage error, 3 failed verification.
"""

import argparse
import csv
import logging
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from config import Config
from dualpoly import (
    DualParams,
    facet_hyperplane,
    facet_ids,
    facet_vertices,
    four_point_check,
    from_primal,
    metric_space,
)
from dualpoly import f_vector as dual_f_vector
from dualpoly import volume as dual_volume
from errors import BadParams, CertificateFailure, DimensionTooLarge, IsocantError
from exactnum import (
    Surd,
    decimal_image,
    format_rational,
    format_scalar,
    parse_scalar,
    to_rational,
)
from isocanted import IsocantedParams
from isocanted import f_vector as primal_f_vector
from isocanted import meeting_probability, vertex_label, vertices, volume
from mahler import mahler_lower_bound, positivity_certificate, volume_product
from records import OutputRecord, all_passed, canonical_json
from roofs import RoofSpec, roof_volume
from verify_graph import VerificationGraph

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3

TABLE_COLUMNS = [
    "d",
    "ell",
    "a",
    "b",
    "c",
    "vol_primal",
    "vol_dual",
    "product",
    "mahler_lower_bound",
    "margin",
]


class VerificationFailed(Exception):
    """Raised by a command whose records are fine but whose check did not pass."""

    def __init__(self, records: List[OutputRecord]) -> None:
        super().__init__("verification failed")
        self.records = records


def _rational(text: str) -> Fraction:
    try:
        return to_rational(text)
    except BadParams as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _scalar(text: str) -> Surd:
    try:
        return Surd.coerce(parse_scalar(text))
    except BadParams as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _point(point: Sequence[Fraction]) -> str:
    return "(" + ",".join(format_rational(x) for x in point) + ")"


def _check_dimension(d: int) -> None:
    if d > Config.CLOSED_FORM_DIMENSION_CAP:
        raise DimensionTooLarge(
            f"closed forms are capped at d={Config.CLOSED_FORM_DIMENSION_CAP}, got d={d}"
        )


def _dual_from_args(args: argparse.Namespace) -> DualParams:
    if args.b is not None and args.c is not None:
        return DualParams(args.d, args.b, args.c)
    if args.ell is not None and args.a is not None:
        return from_primal(args.ell, args.a, args.d)
    raise BadParams("give either --b and --c or --ell and --a")


def _volume(args: argparse.Namespace) -> List[OutputRecord]:
    _check_dimension(args.d)
    p = IsocantedParams(args.d, args.ell, args.a)
    value = volume(p)
    params = {"d": str(p.d), "ell": format_rational(p.ell), "a": format_rational(p.a)}
    return [OutputRecord("volume", params, format_rational(value), decimal_image(value))]


def _dual_volume(args: argparse.Namespace) -> List[OutputRecord]:
    _check_dimension(args.d)
    p = _dual_from_args(args)
    value = dual_volume(p)
    params = {"d": str(p.d), "b": format_rational(p.b), "c": format_rational(p.c)}
    return [OutputRecord("dual-volume", params, format_rational(value), decimal_image(value))]


def _vertices(args: argparse.Namespace) -> List[OutputRecord]:
    p = IsocantedParams(args.d, args.ell, args.a)
    points = vertices(p)
    labels = ["{" + ",".join(str(k) for k in sorted(vertex_label(p, v))) + "}" for v in points]
    params = {"d": str(p.d), "ell": format_rational(p.ell), "a": format_rational(p.a)}
    extras = {"vertices": [_point(v) for v in points], "labels": labels}
    return [OutputRecord("vertices", params, str(len(points)), float(len(points)), extras)]


def _fvector(args: argparse.Namespace) -> List[OutputRecord]:
    _check_dimension(args.d)
    counts = primal_f_vector(args.d) if args.primal else dual_f_vector(args.d)
    params = {"d": str(args.d), "body": "primal" if args.primal else "dual"}
    return [OutputRecord("fvector", params, ",".join(str(f) for f in counts))]


def _facets(args: argparse.Namespace) -> List[OutputRecord]:
    p = _dual_from_args(args)
    records = []
    for facet in facet_ids(p.d):
        plane = facet_hyperplane(p, facet)
        params = {
            "d": str(p.d),
            "b": format_rational(p.b),
            "c": format_rational(p.c),
            "facet": str(facet),
        }
        extras = {
            "kind": "extraordinary" if facet.is_extraordinary(p.d) else "ordinary",
            "vertices": len(facet_vertices(p, facet)),
        }
        exact = f"{_point(plane.normal)}·x = {format_rational(plane.offset)}"
        records.append(OutputRecord("facets", params, exact, None, extras))
    return records


def _roof(args: argparse.Namespace) -> List[OutputRecord]:
    spec = RoofSpec(args.C, args.V, args.ell1, args.ell2, args.h)
    value = roof_volume(spec)
    params = {
        "C": str(spec.C),
        "V": str(spec.V),
        "ell1": format_scalar(spec.ell1),
        "ell2": format_scalar(spec.ell2),
        "h": format_scalar(spec.h),
    }
    return [OutputRecord("roof", params, format_scalar(value), decimal_image(value))]


def _mahler(args: argparse.Namespace) -> List[OutputRecord]:
    _check_dimension(args.d)
    certificate = positivity_certificate(args.d, strict=args.certificate)
    polynomial = certificate.polynomial
    extras = {
        "d": args.d,
        "coeffs": [format_rational(c) for c in certificate.coefficients],
        "k_threshold": certificate.k_threshold,
        "sign_pattern": certificate.sign_pattern(),
        "verdict": certificate.verdict,
    }
    if args.certificate:
        extras["certificate"] = certificate.to_dict(encode_json=True)
    records = [OutputRecord("mahler", {"d": str(args.d)}, str(polynomial), None, extras)]
    if not certificate.verdict:
        raise VerificationFailed(records)
    return records


def _probability(args: argparse.Namespace) -> List[OutputRecord]:
    _check_dimension(args.d)
    value = meeting_probability(args.d, args.wait)
    params = {"d": str(args.d), "wait": format_rational(args.wait)}
    return [OutputRecord("probability", params, format_rational(value), decimal_image(value))]


def _metric_check(args: argparse.Namespace) -> List[OutputRecord]:
    metric = metric_space(args.d, args.ell, args.a)
    passed = four_point_check(metric)
    params = {"d": str(args.d), "ell": format_rational(args.ell), "a": format_rational(args.a)}
    extras = {"metric": [[format_rational(x) for x in row] for row in metric], "four_point": passed}
    records = [OutputRecord("metric-check", params, "true" if passed else "false", None, extras)]
    if not passed:
        raise VerificationFailed(records)
    return records


def _verify(args: argparse.Namespace) -> List[OutputRecord]:
    graph = VerificationGraph(workers=args.workers, logger=logging.getLogger("isocant:verify"))
    checks = graph.invoke(args.d, args.ell, args.a, samples=args.samples, seed=args.seed)
    passed = all_passed(checks)
    params = {"d": str(args.d), "ell": format_rational(args.ell), "a": format_rational(args.a)}
    extras = {"checks": [check.to_dict() for check in checks]}
    records = [OutputRecord("verify", params, "pass" if passed else "fail", None, extras)]
    if not passed:
        raise VerificationFailed(records)
    return records


def table_row(d: int, ell: Fraction, a: Fraction) -> Dict[str, str]:
    p = IsocantedParams(d, ell, a)
    dual = from_primal(p.ell, p.a, d)
    primal_volume, polar_volume = volume(p), dual_volume(dual)
    product = volume_product(p.ell, p.a, d)
    bound = mahler_lower_bound(d)
    values = [
        d,
        p.ell,
        p.a,
        dual.b,
        dual.c,
        primal_volume,
        polar_volume,
        product,
        bound,
        product - bound,
    ]
    return {column: format_rational(to_rational(v)) for column, v in zip(TABLE_COLUMNS, values)}


def _table(args: argparse.Namespace) -> List[OutputRecord]:
    if args.sweep == "a":
        if args.d is None or args.steps < 1:
            raise BadParams("an a-sweep needs --d and --steps ≥ 1")
        _check_dimension(args.d)
        grid = [(args.d, args.ell * k / args.steps) for k in range(args.steps)]
    else:
        if args.a is None or not 2 <= args.d_min <= args.d_max:
            raise BadParams("a d-sweep needs --a and 2 ≤ --d-min ≤ --d-max")
        _check_dimension(args.d_max)
        grid = [(d, args.a) for d in range(args.d_min, args.d_max + 1)]
    records = []
    for d, a in grid:
        row = table_row(d, args.ell, a)
        params = {"d": row["d"], "ell": row["ell"], "a": row["a"]}
        decimal = decimal_image(Fraction(row["product"]))
        records.append(OutputRecord("table", params, row["product"], decimal, row))
    return records


def _emit(records: List[OutputRecord], fmt: str, out=sys.stdout) -> None:
    if fmt == "json":
        for record in records:
            out.write(record.to_canonical_json() + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        if records and records[0].command == "table":
            writer.writerow(TABLE_COLUMNS)
            for record in records:
                writer.writerow([record.extras[column] for column in TABLE_COLUMNS])
        else:
            writer.writerow(["command", "params", "exact", "decimal"])
            for record in records:
                decimal = "" if record.decimal is None else repr(record.decimal)
                writer.writerow([record.command, canonical_json(record.params), record.exact, decimal])
    else:
        for record in records:
            out.write(record.to_text() + "\n")


def _configure_logging(level: str) -> None:
    resolved = logging.getLevelName(level.upper())
    known = isinstance(resolved, int)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s %(levelname)s %(message)s"))
    names = {"isocant:verify", "isocant:cli"} | {
        name for name in logging.root.manager.loggerDict if name.startswith("isocant:")
    }
    for name in sorted(names):
        logger = logging.getLogger(name)
        logger.setLevel(resolved if known else logging.INFO)
        if not logger.handlers:
            logger.addHandler(handler)
    if not known:
        logging.getLogger("isocant:cli").warning("unknown log level %r, using INFO", level)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=None)
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="isocant", description="Isocanted cubes, their polar duals and Mahler products"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def primal(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--d", type=int, required=True)
        sub.add_argument("--ell", type=_rational, required=True)
        sub.add_argument("--a", type=_rational, required=True)
        return sub

    primal("volume", "exact volume of I_d(ℓ,a)").set_defaults(handler=_volume)
    primal("vertices", "vertices of I_d(ℓ,a)").set_defaults(handler=_vertices)
    primal("metric-check", "four-point condition").set_defaults(handler=_metric_check)

    verify = primal("verify", "run every applicable oracle")
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--seed", type=lambda text: int(text, 0), default=None)
    verify.add_argument("--workers", type=int, default=None)
    verify.set_defaults(handler=_verify)

    for name, handler, help_text in (
        ("dual-volume", _dual_volume, "exact volume of J_d(b,c)"),
        ("facets", _facets, "facets of J_d(b,c)"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--d", type=int, required=True)
        sub.add_argument("--b", type=_rational)
        sub.add_argument("--c", type=_rational)
        sub.add_argument("--ell", type=_rational)
        sub.add_argument("--a", type=_rational)
        sub.set_defaults(handler=handler)

    fvector = commands.add_parser("fvector", parents=[common], help="f-vector")
    fvector.add_argument("--d", type=int, required=True)
    fvector.add_argument("--primal", action="store_true")
    fvector.set_defaults(handler=_fvector)

    roof = commands.add_parser("roof", parents=[common], help="roof volume")
    roof.add_argument("--C", type=int, required=True)
    roof.add_argument("--V", type=int, required=True)
    roof.add_argument("--ell1", type=_scalar, required=True)
    roof.add_argument("--ell2", type=_scalar, required=True)
    roof.add_argument("--h", type=_scalar, required=True)
    roof.set_defaults(handler=_roof)

    mahler = commands.add_parser("mahler", parents=[common], help="Mahler certificate")
    mahler.add_argument("--d", type=int, required=True)
    mahler.add_argument("--certificate", action="store_true")
    mahler.set_defaults(handler=_mahler)

    probability = commands.add_parser("probability", parents=[common], help="meeting probability")
    probability.add_argument("--d", type=int, required=True)
    probability.add_argument("--wait", type=_rational, required=True)
    probability.set_defaults(handler=_probability)

    table = commands.add_parser("table", parents=[common], help="parameter sweep")
    table.add_argument("--sweep", choices=["a", "d"], required=True)
    table.add_argument("--ell", type=_rational, default=Fraction(2))
    table.add_argument("--d", type=int)
    table.add_argument("--a", type=_rational)
    table.add_argument("--steps", type=int, default=8)
    table.add_argument("--d-min", type=int, default=2)
    table.add_argument("--d-max", type=int, default=10)
    table.set_defaults(handler=_table)

    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    config = Config()
    _configure_logging("DEBUG" if args.verbose else config.LOG_LEVEL)
    fmt = args.format or ("csv" if args.command == "table" else "text")
    handler: Callable[[argparse.Namespace], List[OutputRecord]] = args.handler

    try:
        records = handler(args)
    except VerificationFailed as e:
        _emit(e.records, fmt, out)
        return EXIT_VERIFY
    except CertificateFailure as e:
        err.write(f"error: {e}\n")
        return EXIT_VERIFY
    except IsocantError as e:
        err.write(f"error: {e}\n")
        return EXIT_DOMAIN
    _emit(records, fmt, out)
    return EXIT_OK
