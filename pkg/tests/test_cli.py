"""
Tests for the command-line runner and the document codec.
"""
import random

import pytest
import yaml

from shimforge.conjugator.rigidity import issue_certificate
from shimforge.documents.codec import (
    DocumentKind,
    certificate_document,
    datum_document,
    field_document,
    load_document,
    parse,
    serialize,
    to_mapping,
)
from shimforge.documents.replay import replay_document
from shimforge.errors import DocumentError
from shimforge.forms.calculators import validate_construction_conditions
from shimforge.run_shimforge import main, parse_marking, parse_marks

S3_DEFINER = "--definer=-1,-4,0,1"
CYCLIC_DEFINER = "--definer=-1,-3,0,1"


def run(argv):
    return main([str(arg) for arg in argv])


@pytest.fixture
def s3_field_file(temp_dir):
    path = temp_dir / "field.yaml"
    assert run(["forge-field", S3_DEFINER, "--prime-bound", 10, "--output", path]) == 0
    return path


@pytest.fixture
def quaternion_datum_file(temp_dir, s3_field_file):
    path = temp_dir / "datum.yaml"
    argv = [
        "forge-datum", "--field", s3_field_file, "--kind", "quaternionic",
        "--ram-infinite", "1", "--ram-finite", "p37:1", "--output", path,
    ]
    assert run(argv) == 0
    return path


def test_field_from_definer(s3_field_file):
    document = load_document(s3_field_file)
    assert document.kind is DocumentKind.FIELD
    assert document.field.is_certified
    assert document.seed is None


def test_forged_field_to_stdout_is_deterministic(capsys):
    assert run(["forge-field", "--degree", 3, "--seed", 0, "--split-primes", 1]) == 0
    first = capsys.readouterr().out
    assert run(["forge-field", "--degree", 3, "--seed", 0, "--split-primes", 1]) == 0
    second = capsys.readouterr().out
    assert first == second
    document = parse(first)
    assert document.seed == 0
    assert len(document.field.split_witnesses) == 1


def test_forge_field_degree_two_exits_2():
    assert run(["forge-field", "--degree", 2]) == 2


def test_forge_field_complex_definer_exits_2():
    assert run(["forge-field", "--definer=1,0,1"]) == 2


def test_datum_document(quaternion_datum_file):
    document = load_document(quaternion_datum_file)
    assert document.kind is DocumentKind.DATUM
    assert document.report.real_rank == 2
    assert document.field.has_split_witness(37)


def test_datum_report_lists_definite_orbit(quaternion_datum_file):
    report = yaml.safe_load(quaternion_datum_file.read_text())["report"]
    assert report["reflex_degree"] == 3
    assert report["definite_orbit"] == [[1], [2], [3]]


def test_tampered_definite_orbit(quaternion_datum_file, capsys):
    data = yaml.safe_load(quaternion_datum_file.read_text())
    data["report"]["definite_orbit"] = [[1], [2]]
    quaternion_datum_file.write_text(yaml.safe_dump(data, sort_keys=False))
    capsys.readouterr()
    assert run(["replay", "--certificate", quaternion_datum_file]) == 1
    assert capsys.readouterr().out == "replay: mismatch (report)\n"


def test_uncertified_field_report_has_no_orbit(temp_dir):
    field = temp_dir / "cyclic.yaml"
    datum = temp_dir / "datum.yaml"
    assert run(["forge-field", CYCLIC_DEFINER, "--prime-bound", 50, "--output", field]) == 0
    argv = [
        "forge-datum", "--field", field, "--kind", "quaternionic",
        "--ram-infinite", "1", "--ram-finite", "p17:1", "--output", datum,
    ]
    assert run(argv) == 0
    report = yaml.safe_load(datum.read_text())["report"]
    assert "reflex_degree" not in report and "definite_orbit" not in report


def test_unitary_datum(temp_dir, s3_field_file):
    path = temp_dir / "unitary.yaml"
    argv = [
        "forge-datum", "--field", s3_field_file, "--kind", "unitary", "--n", 4,
        "--signatures", "3,1:3,1:2,2", "--isotropic", "--output", path,
    ]
    assert run(argv) == 0
    report = yaml.safe_load(path.read_text())["report"]
    assert report == {"dimension": 10, "real_rank": 4, "compactness": "NoncompactWitnessed"}


def test_type_d_datum_default_partition(temp_dir, s3_field_file):
    path = temp_dir / "type_d.yaml"
    argv = [
        "forge-datum", "--field", s3_field_file, "--kind", "type-d", "--n", 5,
        "--s-real", "1", "--output", path,
    ]
    assert run(argv) == 0
    document = load_document(path)
    assert document.report.dimension == 28
    assert sorted(v.index for v in document.datum.datum.s_quaternionic) == [2, 3]


def test_constraint_violation(temp_dir, s3_field_file):
    argv = [
        "forge-datum", "--field", s3_field_file, "--kind", "quaternionic",
        "--ram-infinite", "1", "--output", temp_dir / "bad.yaml",
    ]
    assert run(argv) == 2


def test_missing_field_file(temp_dir):
    argv = ["forge-datum", "--field", temp_dir / "absent.yaml", "--kind", "quaternionic"]
    assert run(argv) == 2


def test_granted_and_replayed(temp_dir, quaternion_datum_file, capsys):
    cert = temp_dir / "cert.yaml"
    assert run(["certify", "--datum", quaternion_datum_file, "--perm", "2,1,3", "--output", cert]) == 0
    data = yaml.safe_load(cert.read_text())
    assert data["verdict"] == "Granted"
    assert data["checks"]["aut_control"] == "CertifiedTrivialAut"
    assert data["conjugate"]["ram_infinite"] == [2]

    capsys.readouterr()
    assert run(["replay", "--certificate", cert]) == 0
    assert capsys.readouterr().out == "verdict: Granted\nreplay: ok\n"


def test_certify_identity_refused_but_replays(temp_dir, quaternion_datum_file):
    cert = temp_dir / "cert.yaml"
    assert run(["certify", "--datum", quaternion_datum_file, "--perm", "1,2,3", "--output", cert]) == 1
    assert yaml.safe_load(cert.read_text())["verdict"] == "Refused(partition_moved)"
    assert run(["replay", "--certificate", cert]) == 0


def test_certify_propose_uses_smallest_transposition(temp_dir, s3_field_file, capsys):
    datum = temp_dir / "unitary.yaml"
    argv = [
        "forge-datum", "--field", s3_field_file, "--kind", "unitary", "--n", 4,
        "--signatures", "3,1:3,1:2,2", "--isotropic", "--output", datum,
    ]
    assert run(argv) == 0
    capsys.readouterr()
    assert run(["certify", "--datum", datum, "--propose"]) == 0
    certificate = yaml.safe_load(capsys.readouterr().out)
    assert certificate["permutation"] == "3,2,1"


def test_galois_field_needs_marking(temp_dir):
    field = temp_dir / "cyclic.yaml"
    datum = temp_dir / "datum.yaml"
    assert run(["forge-field", CYCLIC_DEFINER, "--prime-bound", 50, "--output", field]) == 0
    argv = [
        "forge-datum", "--field", field, "--kind", "quaternionic",
        "--ram-infinite", "1", "--ram-finite", "p17:1", "--output", datum,
    ]
    assert run(argv) == 0
    base = ["certify", "--datum", datum, "--perm", "2,1,3", "--output", temp_dir / "c.yaml"]
    assert run(base) == 1
    assert run(base + ["--assert-realizable"]) == 1
    assert run(base + ["--assert-realizable", "--marking", "p17:1"]) == 0

    marking_file = temp_dir / "marking.yaml"
    marking_file.write_text("p: '17'\nmarked_place: p17:1\n")
    assert run(base + ["--assert-realizable", "--marking", marking_file]) == 0
    assert run(["replay", "--certificate", temp_dir / "c.yaml"]) == 0


def test_certify_invalid_datum_exits_2(temp_dir, s3_field_file):
    datum = temp_dir / "rank_one.yaml"
    argv = [
        "forge-datum", "--field", s3_field_file, "--kind", "quaternionic",
        "--ram-infinite", "1,2", "--output", datum,
    ]
    assert run(argv) == 0
    assert run(["certify", "--datum", datum, "--perm", "1,3,2"]) == 2


def test_certify_field_document_rejected(s3_field_file):
    assert run(["certify", "--datum", s3_field_file, "--perm", "2,1,3"]) == 2


def test_tampered_report(temp_dir, quaternion_datum_file, capsys):
    cert = temp_dir / "cert.yaml"
    assert run(["certify", "--datum", quaternion_datum_file, "--perm", "2,1,3", "--output", cert]) == 0
    data = yaml.safe_load(cert.read_text())
    data["report"]["dimension"] = 3
    cert.write_text(yaml.safe_dump(data, sort_keys=False))
    capsys.readouterr()
    assert run(["replay", "--certificate", cert]) == 1
    assert "replay: mismatch (report)" in capsys.readouterr().out


def test_tampered_verdict(temp_dir, quaternion_datum_file):
    cert = temp_dir / "cert.yaml"
    assert run(["certify", "--datum", quaternion_datum_file, "--perm", "1,2,3", "--output", cert]) == 1
    data = yaml.safe_load(cert.read_text())
    data["verdict"] = "Granted"
    cert.write_text(yaml.safe_dump(data, sort_keys=False))
    assert run(["replay", "--certificate", cert]) == 1


def test_truncated_document(temp_dir, quaternion_datum_file):
    cert = temp_dir / "cert.yaml"
    assert run(["certify", "--datum", quaternion_datum_file, "--perm", "2,1,3", "--output", cert]) == 0
    text = cert.read_text()
    cert.write_text(text[: len(text) // 3])
    assert run(["replay", "--certificate", cert]) == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as excinfo:
        main(["certify"])
    assert excinfo.value.code == 2
    assert main([]) == 2


def test_minimal_unitary_cubic_report(capsys):
    assert run(["minimal-unitary", "--degree", 3]) == 0
    report = yaml.safe_load(capsys.readouterr().out)
    assert report == {"degree": 3, "n": 4, "dimension": 10, "signatures": "3,1:3,1:2,2"}


def test_minimal_unitary_rational_field_refused():
    assert run(["minimal-unitary", "--degree", 1]) == 1


def test_parse_marks():
    marks = parse_marks("p11:1=type-B,p11:2=type-A")
    assert {str(place): tag for place, tag in marks.items()} == {"p11:1": "type-B", "p11:2": "type-A"}
    with pytest.raises(ValueError):
        parse_marks("p11:1")


def test_inline_marking():
    marking = parse_marking("p37:2")
    assert marking.p == 37 and marking.marked_place.slot == 2


def test_marking_file_without_place(temp_dir):
    path = temp_dir / "marking.yaml"
    path.write_text("p: '37'\n")
    with pytest.raises(DocumentError):
        parse_marking(str(path))


def test_field_document_text(s3_field):
    data = to_mapping(field_document(s3_field, seed=3))
    assert data["kind"] == "field"
    assert data["field"]["definer"] == ["-1", "-4", "0", "1"]
    assert data["field"]["galois"]["transitive"] == {"p": "3", "pattern": "3"}
    assert data["field"]["split_primes"] == [{"p": "37", "residues": ["21", "24", "29"]}]
    assert data["provenance"]["seed"] == "3"
    bounds = [bound for pair in data["field"]["embeddings"] for bound in pair]
    assert all(isinstance(bound, str) for bound in bounds)


def test_schema_version_checked(s3_field):
    data = to_mapping(field_document(s3_field))
    data["schema_version"] = "0"
    with pytest.raises(DocumentError):
        parse(yaml.safe_dump(data))


def test_not_a_mapping():
    with pytest.raises(DocumentError):
        parse("- just\n- a list\n")


def test_tampered_split_witness(s3_field):
    data = to_mapping(field_document(s3_field))
    data["field"]["split_primes"][0]["residues"] = ["21", "24", "30"]
    assert replay_document(parse(yaml.safe_dump(data, sort_keys=False))) == ["field"]


def test_round_trip_corpus(
    forged_fields, quadratic_field, s3_field, cyclic_field, make_descriptor, make_permutation
):
    rng = random.Random(99)
    fields = [quadratic_field, s3_field, cyclic_field] + [forged_fields[d] for d in range(3, 8)]
    for index in range(120):
        field = rng.choice(fields)
        descriptor = make_descriptor(rng, field)
        if validate_construction_conditions(descriptor):
            document = datum_document(descriptor, seed=index)
        else:
            pi = make_permutation(rng, field.degree)
            certificate = issue_certificate(descriptor, pi, assert_realizable=rng.random() < 0.5)
            document = certificate_document(certificate, seed=index)
        text = serialize(document)
        decoded = parse(text)
        assert decoded == document
        assert serialize(decoded) == text
        assert replay_document(decoded) == []


@pytest.fixture
def pinned_dir(project_root):
    return project_root / "tests" / "data"


@pytest.mark.parametrize(
    "name,verdict",
    [
        ("granted_quaternionic.yaml", "Granted"),
        ("refused_identity.yaml", "Refused(partition_moved)"),
        ("refused_galois_evasion.yaml", "Refused(aut_control,realizability)"),
    ],
)
def test_pinned_document_replays_byte_exact(pinned_dir, name, verdict, capsys):
    path = pinned_dir / name
    text = path.read_text()
    assert serialize(parse(text)) == text
    capsys.readouterr()
    assert run(["replay", "--certificate", path]) == 0
    assert capsys.readouterr().out == f"verdict: {verdict}\nreplay: ok\n"


def test_pinned_documents_match_fresh_certificates(temp_dir, quaternion_datum_file, pinned_dir):
    granted = temp_dir / "granted.yaml"
    identity = temp_dir / "identity.yaml"
    certify = ["certify", "--datum", quaternion_datum_file, "--perm"]
    assert run(certify + ["2,1,3", "--output", granted]) == 0
    assert run(certify + ["1,2,3", "--output", identity]) == 1
    assert granted.read_text() == (pinned_dir / "granted_quaternionic.yaml").read_text()
    assert identity.read_text() == (pinned_dir / "refused_identity.yaml").read_text()

    field = temp_dir / "cyclic.yaml"
    datum = temp_dir / "symmetric_finite.yaml"
    evasion = temp_dir / "evasion.yaml"
    assert run(["forge-field", CYCLIC_DEFINER, "--prime-bound", 50, "--output", field]) == 0
    argv = [
        "forge-datum", "--field", field, "--kind", "quaternionic",
        "--ram-infinite", "1", "--ram-finite", "p17:1,p17:2,p17:3", "--output", datum,
    ]
    assert run(argv) == 0
    assert run(["certify", "--datum", datum, "--perm", "2,1,3", "--output", evasion]) == 1
    assert evasion.read_text() == (pinned_dir / "refused_galois_evasion.yaml").read_text()


def test_tampered_pinned_document_fails_replay(temp_dir, pinned_dir):
    tampered = temp_dir / "tampered.yaml"
    text = (pinned_dir / "granted_quaternionic.yaml").read_text()
    tampered.write_text(text.replace("- '29'", "- '30'"))
    assert run(["replay", "--certificate", tampered]) == 1
