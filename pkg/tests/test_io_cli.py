"""Document round trips, strict parsing, submodule enumeration and the
command-line interface replayed over the shipped fixture corpus."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout
from importlib import resources
from pathlib import Path

import pytest

from moddeg import (direct_sum, enum_submodules, format_document,
                    parse_document, verify_certificate, document_for)
from moddeg.cli import main
from moddeg.errors import ParseError, TooLarge
from moddeg.fields import GF, QQ
from moddeg.fixtures import (GOLDEN_CASES, cert_dual_eta, fixture_documents,
                             kron_i2, regular_module, simple_module)

from support import brute_submodules, submodule_point_set

F2 = GF(2)
DATA = resources.files("moddeg") / "data"


def data_path(name: str) -> str:
    return str(DATA / name)


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_shipped_fixtures_round_trip():
    names = [n for n in sorted(p.name for p in DATA.iterdir())
             if n.endswith(".json") and n != "golden.json"]
    assert len(names) >= 25
    for name in names:
        text = (DATA / name).read_text(encoding="utf-8")
        doc = parse_document(text)
        assert format_document(doc) == text, name


def test_round_trip_of_fresh_documents():
    for name, doc in fixture_documents().items():
        text = format_document(doc)
        assert format_document(parse_document(text)) == text, name


def test_eta_fixture_parses_and_verifies():
    doc = parse_document((DATA / "cert_dual_eta.json").read_text(encoding="utf-8"))
    assert doc.kind == "certificate"
    assert verify_certificate(doc.value).ok


def test_malformed_row_length_is_parse_error():
    text = format_document(document_for(simple_module(QQ)))
    payload = json.loads(text)
    payload["mats"][0] = [["1", "0"]]
    with pytest.raises(ParseError):
        parse_document(json.dumps(payload))


def test_unknown_keys_rejected():
    text = format_document(document_for(simple_module(QQ)))
    payload = json.loads(text)
    payload["extra"] = 1
    with pytest.raises(ParseError):
        parse_document(json.dumps(payload))


def test_json_syntax_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_document("{\n  broken")
    assert err.value.line is not None


def test_float_entries_rejected():
    text = format_document(document_for(simple_module(QQ)))
    payload = json.loads(text)
    payload["mats"][0] = [["1.5"]]
    with pytest.raises(ParseError):
        parse_document(json.dumps(payload))


def test_non_prime_field_rejected():
    text = format_document(document_for(simple_module(GF(3))))
    payload = json.loads(text)
    payload["field"] = {"p": 6}
    with pytest.raises(ParseError):
        parse_document(json.dumps(payload))


def test_enum_submodules_examples():
    s = simple_module(F2)
    assert len(enum_submodules(s)) == 2
    ss = direct_sum(s, s)[0]
    assert len(enum_submodules(ss)) == 5
    lam = regular_module(F2, 2)
    subs = enum_submodules(lam)
    assert len(subs) == 3
    assert sorted(sub.dim for sub in subs) == [0, 1, 2]
    for sub in subs:
        assert sub.is_invariant()


def test_enum_submodules_against_independent_enumeration():
    for rep in (simple_module(F2), regular_module(F2, 2),
                direct_sum(simple_module(F2), regular_module(F2, 2))[0],
                kron_i2(F2)):
        if rep.dim > 3:
            continue
        fast = {submodule_point_set(sub) for sub in enum_submodules(rep)}
        slow = brute_submodules(rep)
        assert fast == slow


def test_enum_submodules_guard():
    with pytest.raises(TooLarge):
        enum_submodules(regular_module(F2, 2), guard=2)
    with pytest.raises(TooLarge):
        enum_submodules(regular_module(QQ, 2))


def test_golden_cases_replay():
    manifest = json.loads((DATA / "golden.json").read_text(encoding="utf-8"))
    assert manifest == GOLDEN_CASES
    for case in manifest:
        argv = [data_path(a) if a.endswith(".json") else a
                for a in case["argv"]]
        code, out, err = run_cli(argv)
        assert code == case["expect_exit"], (case["name"], err)
        if case.get("expect_stdout") is not None:
            assert out == case["expect_stdout"], case["name"]
        kinds = case.get("expect_kinds")
        if kinds:
            lines = out.splitlines()
            assert len(lines) == len(kinds), case["name"]
            for line, kind in zip(lines, kinds):
                assert parse_document(line).kind == kind


def test_cli_matches_library_on_push():
    code, out, _ = run_cli(["push-sub", data_path("cert_dual_eta.json"),
                            data_path("sub_dual_lambda_s.json")])
    assert code == 0
    sub_doc, cert_doc = [parse_document(line) for line in out.splitlines()]
    from moddeg import push_submodule
    from moddeg.fixtures import sub_dual_lambda_s
    direct = push_submodule(cert_dual_eta(QQ), sub_dual_lambda_s(QQ))
    assert sub_doc.value.space == direct.nprime.space
    assert cert_doc.value.q.mat == direct.cert.q.mat


def test_cli_vchain_outputs_documents_and_trace():
    code, out, _ = run_cli(["vchain", data_path("cert_dual_chain.json"),
                            data_path("sub_dual_soc.json")])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    nfinal, yfinal, cert = [parse_document(line) for line in lines[:3]]
    assert (nfinal.kind, yfinal.kind, cert.kind) == (
        "submodule", "submodule", "certificate")
    assert verify_certificate(cert.value).ok
    trace = json.loads(lines[3])
    assert trace["trace_dims"]


def test_cli_stdin_documents():
    import sys
    text = (DATA / "rep_dual_lambda2.json").read_text(encoding="utf-8")
    stdin = io.StringIO(text)
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = stdin
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = main(["validate", "-"])
    finally:
        sys.stdin = old
    assert code == 0


def test_cli_error_is_structured_json():
    code, out, err = run_cli(["validate", "/nonexistent/file.json"])
    assert code == 2
    payload = json.loads(err)
    assert "error" in payload and "message" in payload


def test_cli_invalid_representation_exits_one():
    bad = format_document(document_for(simple_module(QQ)))
    payload = json.loads(bad)
    payload["mats"][1] = [["1"]]     # X acts invertibly: relation fails
    path = Path("/tmp/moddeg_bad_rep.json")
    path.write_text(json.dumps(payload), encoding="utf-8")
    code, out, _ = run_cli(["validate", str(path)])
    assert code == 1
    report = json.loads(out)
    assert report["ok"] is False


def test_cli_field_mismatch_between_documents():
    other = format_document(document_for(simple_module(GF(3))))
    path = Path("/tmp/moddeg_f3_rep.json")
    path.write_text(other, encoding="utf-8")
    code, _, err = run_cli(["hom", data_path("rep_dual_lambda2.json"), str(path)])
    assert code == 2
    assert json.loads(err)["error"] == "FieldMismatch"
