#!/usr/bin/env python3
"""
Shimforge Runner

Command-line front end:
- forge totally real fields with certified Aut(F) = 1
- build quaternionic, unitary and type D data over them
- issue and replay rigidity certificates for conjugate pairs

Documents go to standard output (or --output); status and logs go to stderr.
Exit codes: 0 success / Granted, 1 Refused / replay mismatch / search
exhausted, 2 invalid input.
"""
import argparse
import sys
from pathlib import Path
from typing import Optional

import yaml
from rich.console import Console
from rich.markup import escape

from shimforge.arithmetic.polynomial import IntPolynomial
from shimforge.config.settings import DEFAULT_PRIME_BOUND
from shimforge.conjugator.certificate_types import MarkingRecord
from shimforge.conjugator.conjugate import propose_tau
from shimforge.conjugator.rigidity import issue_certificate
from shimforge.documents.codec import (
    DocumentKind,
    certificate_document,
    datum_document,
    field_document,
    load_document,
    serialize,
)
from shimforge.documents.replay import replay_document
from shimforge.errors import DocumentError, SearchExhausted, ShimforgeError
from shimforge.fields.field_types import TotallyRealField
from shimforge.fields.forge import (
    attach_split_primes,
    field_from_definer,
    forge_field,
    split_witness_at,
)
from shimforge.forms.calculators import minimal_noncompact_unitary
from shimforge.forms.form_types import (
    CMRecord,
    QuaternionDatum,
    ShimuraDatumDescriptor,
    TypeDDatum,
    UnitaryDatum,
)
from shimforge.places.permutations import PlacePermutation
from shimforge.places.place_types import FinitePlace
from shimforge.utils.helpers import parse_int_list, parse_signatures, write_text
from shimforge.utils.logger import log

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_INVALID = 2

console = Console(stderr=True)


def parse_finite_places(text: Optional[str]) -> list[FinitePlace]:
    """"p11:1,p13:2" -> [FinitePlace(11, 1), FinitePlace(13, 2)]"""
    if not text:
        return []
    return [FinitePlace.parse(part) for part in text.split(",") if part.strip()]


def parse_marks(text: Optional[str]) -> dict[FinitePlace, str]:
    """"p11:1=type-B,p11:2=type-A" -> {FinitePlace(11, 1): "type-B", ...}"""
    if not text:
        return {}
    marks = {}
    for entry in text.split(","):
        if not entry.strip():
            continue
        place, _, tag = entry.partition("=")
        if not tag:
            raise ValueError(f"mark must look like p<prime>:<slot>=<tag>, got {entry!r}")
        marks[FinitePlace.parse(place)] = tag.strip()
    return marks


def parse_marking(value: str) -> MarkingRecord:
    """A marking from a YAML file with a marked_place key, or inline "p11:1"."""
    path = Path(value)
    if path.is_file():
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
        if not isinstance(data, dict) or "marked_place" not in data:
            raise DocumentError(f"{path} has no marked_place entry")
        place = FinitePlace.parse(str(data["marked_place"]))
    else:
        place = FinitePlace.parse(value)
    return MarkingRecord(p=place.p, marked_place=place)


def emit(text: str, output: Optional[Path]) -> None:
    if output:
        write_text(output, text)
        console.print(f"[green]wrote[/green] {output}")
    else:
        sys.stdout.write(text)


def with_witnesses(field: TotallyRealField, places: list[FinitePlace]) -> TotallyRealField:
    """Attach split-prime witnesses for every prime a datum refers to."""
    for p in sorted({place.p for place in places}):
        if not field.has_split_witness(p):
            field = field.with_split_witness(split_witness_at(field.definer, p))
    return field


def cmd_forge_field(args) -> int:
    if args.definer:
        field = field_from_definer(IntPolynomial.parse(args.definer), args.prime_bound)
        seed = None
    else:
        if args.degree is None:
            raise ValueError("forge-field needs --degree or --definer")
        if args.degree < 3:
            raise ValueError(f"forge-field needs --degree d >= 3, got {args.degree}")
        field, _ = forge_field(args.degree, args.seed, prime_bound=args.prime_bound)
        seed = args.seed
    if args.split_primes:
        field = attach_split_primes(field, args.split_primes)
    emit(serialize(field_document(field, seed)), args.output)
    console.print(f"degree-{field.degree} field: {field.definer}")
    return EXIT_OK


def build_descriptor(args, field: TotallyRealField) -> ShimuraDatumDescriptor:
    marks = parse_marks(args.marks)
    if args.kind == "quaternionic":
        ram_finite = parse_finite_places(args.ram_finite)
        field = with_witnesses(field, ram_finite)
        datum = QuaternionDatum(
            field=field,
            ram_infinite=parse_int_list(args.ram_infinite),
            ram_finite=frozenset(ram_finite),
        )
    elif args.kind == "unitary":
        if args.n is None or args.signatures is None:
            raise ValueError("unitary data need --n and --signatures")
        field = with_witnesses(field, list(marks))
        datum = UnitaryDatum(
            field=field,
            n=args.n,
            signatures=parse_signatures(args.signatures),
            finite_marks=marks,
            cm=CMRecord(inert_primes=tuple(parse_int_list(args.inert_primes))),
            isotropic=args.isotropic,
        )
    else:
        if args.n is None or args.s_real is None:
            raise ValueError("type-d data need --n and --s-real")
        b_ram_finite = parse_finite_places(args.b_ram_finite)
        field = with_witnesses(field, list(marks) + b_ram_finite)
        s_real = set(parse_int_list(args.s_real))
        if args.s_quaternionic is not None:
            s_quaternionic = set(parse_int_list(args.s_quaternionic))
        else:
            s_quaternionic = set(field.real_places) - s_real
        datum = TypeDDatum(
            field=field,
            n=args.n,
            s_real=s_real,
            s_quaternionic=s_quaternionic,
            finite_marks=marks,
            b_ram_finite=frozenset(b_ram_finite),
        )
    return ShimuraDatumDescriptor(datum)


def cmd_forge_datum(args) -> int:
    document = load_document(args.field)
    descriptor = build_descriptor(args, document.field)
    emit(serialize(datum_document(descriptor, document.seed)), args.output)
    console.print(f"{descriptor.kind.value} datum over {descriptor.field.definer}")
    return EXIT_OK


def cmd_certify(args) -> int:
    document = load_document(args.datum)
    if document.datum is None:
        raise DocumentError(f"{args.datum} is a {document.kind.value} document, not a datum")
    descriptor = document.datum

    if args.propose:
        pi = propose_tau(descriptor)
        if pi is None:
            raise ValueError("all real places carry the same local data; no tau to propose")
    else:
        pi = PlacePermutation.parse(args.perm)
    marking = parse_marking(args.marking) if args.marking else None

    certificate = issue_certificate(descriptor, pi, marking, args.assert_realizable)
    emit(serialize(certificate_document(certificate, document.seed)), args.output)
    if certificate.verdict.granted:
        console.print(f"[green]{certificate.verdict}[/green] for pi = {pi}")
        return EXIT_OK
    console.print(f"[red]{certificate.verdict}[/red] for pi = {pi}")
    return EXIT_REFUSED


def cmd_replay(args) -> int:
    document = load_document(args.certificate)
    mismatches = replay_document(document)
    if document.kind is DocumentKind.CERTIFICATE:
        sys.stdout.write(f"verdict: {document.certificate.verdict}\n")
    if mismatches:
        sys.stdout.write(f"replay: mismatch ({','.join(mismatches)})\n")
        return EXIT_REFUSED
    sys.stdout.write("replay: ok\n")
    return EXIT_OK


def cmd_minimal_unitary(args) -> int:
    best = minimal_noncompact_unitary(args.degree, args.n_max)
    if best is None:
        console.print(f"[red]no noncompact unitary datum with n <= {args.n_max}[/red]")
        return EXIT_REFUSED
    dim, n, signatures = best
    report = {
        "degree": args.degree,
        "n": n,
        "dimension": dim,
        "signatures": ":".join(f"{p},{q}" for p, q in signatures),
    }
    emit(yaml.safe_dump(report, sort_keys=False), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shimforge",
        description="Forge Shimura data and certify nonhomeomorphic conjugates",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Forge a cubic field with certified Aut(F) = 1 and one split prime
  %(prog)s forge-field --degree 3 --seed 0 --split-primes 1 > field.yaml

  # Use a given definer instead (X^2 - 5)
  %(prog)s forge-field --definer=-5,0,1

  # Quaternionic datum definite at v1 and ramified at one place over 37
  %(prog)s forge-datum --field field.yaml --kind quaternionic --ram-infinite 1 --ram-finite p37:1

  # Unitary datum of dimension 10
  %(prog)s forge-datum --field field.yaml --kind unitary --n 4 --signatures 3,1:3,1:2,2 --isotropic

  # Certify with the proposed transposition, then replay
  %(prog)s certify --datum datum.yaml --propose --output cert.yaml
  %(prog)s replay --certificate cert.yaml

  # Smallest noncompact unitary example over a cubic field
  %(prog)s minimal-unitary --degree 3
        """,
    )
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    forge = subparsers.add_parser("forge-field", help="Forge a totally real field")
    forge.add_argument("--degree", type=int, help="Field degree d >= 3")
    forge.add_argument("--seed", type=int, default=0, help="Deterministic search seed")
    forge.add_argument(
        "--prime-bound", type=int, default=DEFAULT_PRIME_BOUND, help="Largest prime scanned"
    )
    forge.add_argument("--definer", help="Use this monic definer, coefficients c0,c1,...,cd")
    forge.add_argument("--split-primes", type=int, default=0, help="Attach K split-prime witnesses")
    forge.add_argument("--output", type=Path, help="Write the document here")

    datum = subparsers.add_parser("forge-datum", help="Build a datum over a field document")
    datum.add_argument("--field", type=Path, required=True, help="Field document")
    datum.add_argument("--kind", choices=["quaternionic", "unitary", "type-d"], required=True)
    datum.add_argument("--ram-infinite", help="Definite real places, e.g. 1,3")
    datum.add_argument("--ram-finite", help="Ramified p-adic places, e.g. p11:1")
    datum.add_argument("--n", type=int, help="Rank of the hermitian / skew-hermitian form")
    datum.add_argument("--signatures", help="Signatures by real place, e.g. 3,1:3,1:2,2")
    datum.add_argument("--marks", help="p-adic local types, e.g. p11:1=type-B,p11:2=type-A")
    datum.add_argument("--inert-primes", help="Primes inert in the CM extension, e.g. 11")
    datum.add_argument("--isotropic", action="store_true", help="Use the +-1 diagonal form")
    datum.add_argument("--s-real", help="Real places where B splits, e.g. 1")
    datum.add_argument("--s-quaternionic", help="Real places where B is definite (default: rest)")
    datum.add_argument("--b-ram-finite", help="Finite ramification of B, e.g. p11:1")
    datum.add_argument("--output", type=Path, help="Write the document here")

    certify = subparsers.add_parser("certify", help="Issue a rigidity certificate")
    certify.add_argument("--datum", type=Path, required=True, help="Datum document")
    choice = certify.add_mutually_exclusive_group(required=True)
    choice.add_argument("--perm", help="Permutation of real places, e.g. 2,1,3")
    choice.add_argument("--propose", action="store_true", help="Use the proposed transposition")
    certify.add_argument("--marking", help="Marking file or inline place, e.g. p11:1")
    certify.add_argument(
        "--assert-realizable", action="store_true", help="Assert pi is induced by some tau"
    )
    certify.add_argument("--output", type=Path, help="Write the document here")

    replay = subparsers.add_parser("replay", help="Replay a field, datum or certificate document")
    replay.add_argument("--certificate", type=Path, required=True, help="Document to replay")

    minimal = subparsers.add_parser("minimal-unitary", help="Smallest noncompact unitary example")
    minimal.add_argument("--degree", type=int, required=True, help="Field degree")
    minimal.add_argument("--n-max", type=int, default=8, help="Largest hermitian rank searched")
    minimal.add_argument("--output", type=Path, help="Write the report here")

    return parser


COMMANDS = {
    "forge-field": cmd_forge_field,
    "forge-datum": cmd_forge_datum,
    "certify": cmd_certify,
    "replay": cmd_replay,
    "minimal-unitary": cmd_minimal_unitary,
}


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_INVALID

    try:
        return COMMANDS[args.command](args)
    except SearchExhausted as exc:
        log.error(str(exc))
        console.print(f"[red]search exhausted:[/red] {escape(str(exc))}")
        return EXIT_REFUSED
    except (ShimforgeError, ValueError, LookupError) as exc:
        log.error(str(exc))
        console.print(f"[red]invalid input:[/red] {escape(str(exc))}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
