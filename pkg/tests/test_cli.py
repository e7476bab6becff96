import json

import pytest

from etadiag import cj
from etadiag import diagrams as D
from etadiag import ext as X
from etadiag import groups as G
from etadiag import serialize as S
from etadiag import verify as V
from etadiag.cli import main, run_query
from etadiag.errors import ParseError

Z2, Z4 = G.cyclic(2), G.cyclic(4)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


# -- spec examples ------------------------------------------------------------------------


@pytest.mark.parametrize("argv,out", [
    (["ext", "Z/2", "Z/2"], "Z/2"),
    (["group", "normalize", "Z/4+Z/2"], "Z/2+Z/4"),
    (["cj", "representable", "b"], "Z/4 -[[1]]-> Z/2 -[[1]]-> Z/2 -[[2]]-> Z/4"),
    (["hom", "Z/4", "Z/6"], "Z/2"),
    (["ext", "Z", "Z/4"], "0"),
    (["ext", "Z/2", "Z"], "Z/2"),
])
def test_text_output(argv, out):
    code, stdout, stderr = run_query(argv)
    assert (code, stdout.strip(), stderr) == (0, out, "")


def test_json_format_anywhere():
    a = run_query(["--format", "json", "ext", "Z/4", "Z/4"])
    b = run_query(["ext", "Z/4", "Z/4", "--format", "json"])
    assert a == b and a[0] == 0
    assert json.loads(a[1]) == {"U": "Z/4", "V": "Z/4", "ext": "Z/4"}


def test_main_returns_code():
    assert main(["group", "normalize", "Z/6"]) == 0


# -- errors and exit codes ----------------------------------------------------------------


@pytest.mark.parametrize("argv", [
    ["group", "normalize", "Z/x"], ["ext", "Z/2"], ["cj", "representable", "q"], ["verify", "nope"],
    ["bogus"], ["diagram", "validate", "/nonexistent/file.json"],
])
def test_parse_errors_exit_1(argv):
    code, _, _ = run_query(argv)
    assert code == 1


def test_domain_error_names_the_relation(tmp_path):
    bad = {"kind": "eed", "A": "Z/2", "B": "Z/4", "C": "Z/2", "eta": [[1]], "chi": [[2]], "psi": [[0]]}
    code, _, err = run_query(["diagram", "validate", write(tmp_path, "bad.json", bad)])
    assert code == 2 and "chi.eta.psi=2" in err


def test_ill_defined_matrix_is_a_domain_error(tmp_path):
    bad = {"kind": "eta", "A": "Z/2", "C": "Z/4", "eta": [[1]]}
    code, _, err = run_query(["diagram", "validate", write(tmp_path, "bad.json", bad)])
    assert code == 2 and "IllDefined" in err


def test_malformed_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    assert run_query(["phi", str(p)])[0] == 1


def test_exactness_of_eta_diagram_is_a_domain_error(tmp_path):
    d = {"kind": "eta", "A": "Z/2", "C": "Z/2", "eta": [[1]]}
    assert run_query(["diagram", "exact", write(tmp_path, "e.json", d)])[0] == 2


# -- file-based subcommands ---------------------------------------------------------------


def test_phi_command(tmp_path):
    E = X.realize(X.ExtClass(Z2, Z2, ((1,),)))
    path = write(tmp_path, "e.json", S.extension_to_json(E))
    code, out, _ = run_query(["phi", path])
    assert code == 0 and out.strip() == "Z/2 -[[1]]-> Z/2"
    code, out, _ = run_query(["--format", "json", "phi", path])
    obj = json.loads(out)
    assert obj["matrix"] == [[1]] and obj["class"]["cosets"] == [[1]]


def test_diagram_commands(tmp_path):
    Fb = write(tmp_path, "fb.json", S.diagram_to_json(cj.representable("b")))
    assert run_query(["diagram", "validate", Fb])[1].strip() == "valid"
    assert run_query(["diagram", "exact", Fb])[1].strip() == "true"
    code, out, _ = run_query(["diagram", "homset", Fb, Fb, "--list"])
    assert code == 0 and out.splitlines()[0] == "Z/4 (4 morphisms)" and len(out.splitlines()) == 5
    obj = json.loads(run_query(["--format", "json", "diagram", "homset", Fb, Fb, "--list"])[1])
    assert obj["size"] == 4 and len(obj["morphisms"]) == 4


def test_dual_commands(tmp_path):
    Fb = write(tmp_path, "fb.json", S.diagram_to_json(cj.representable("b")))
    code, out, _ = run_query(["dual", "j", Fb])
    assert code == 0 and "(not exact)" not in out
    from etadiag.categories import H
    h = write(tmp_path, "h.json", S.diagram_to_json(H(Z2, Z2)))
    code, out, _ = run_query(["dual", "delta", h])
    assert code == 0 and out.strip().endswith("(not exact)")


def test_cj_table():
    code, out, _ = run_query(["cj", "table"])
    assert code == 0 and "rho.eta.beta = 2*1_b" in out
    obj = json.loads(run_query(["--format", "json", "cj", "table"])[1])
    assert obj["hom_groups"]["b,b"] == "Z/4" and len(obj["composition"]) == 27


# -- serialization ------------------------------------------------------------------------


def test_diagram_round_trip():
    from etadiag.categories import standard_emd
    for d in (cj.representable("a"), standard_emd(G.parse_group("Z/2+Z/4")), D.EtaDiagram(Z4, Z2, Z4.zero_map(Z2))):
        assert S.diagram_from_json(json.loads(S.dumps(S.diagram_to_json(d)))) == d


def test_morphism_and_class_round_trip():
    m = D.identity(cj.representable("b"))
    assert S.morphism_from_json(S.morphism_to_json(m)) == m
    c = X.ExtClass(Z4, Z4, ((3,),))
    assert S.ext_class_from_json(S.ext_class_to_json(c)) == c


def test_missing_key_is_parse_error():
    with pytest.raises(ParseError):
        S.diagram_from_json({"kind": "eed", "A": "Z/2"})
    with pytest.raises(ParseError):
        S.diagram_from_json({"kind": "other"})


# -- verify -------------------------------------------------------------------------------


def test_verify_json_is_deterministic():
    a = run_query(["--format", "json", "verify", "cj-tables"])
    b = run_query(["--format", "json", "verify", "cj-tables"])
    assert a == b and a[0] == 0
    obj = json.loads(a[1])
    assert obj["schema"] == 1 and obj["passed"] and "duration_s" not in obj
    t = json.loads(run_query(["--format", "json", "verify", "cj-tables", "--timing"])[1])
    assert "duration_s" in t


def test_verify_unknown_suite():
    with pytest.raises(KeyError):
        V.run_verify("nope")


def test_failing_suite_exits_3(monkeypatch):
    def broken(run, max_order, seed):
        run.check("always_false", False, lambda: {"replay": "ext Z/2 Z/2"})
        return 1

    monkeypatch.setitem(V.SUITES, "cj-tables", broken)
    code, out, _ = run_query(["verify", "cj-tables"])
    assert code == 3 and "FAIL" in out and "counterexample" in out


def test_failure_payload_replays(tmp_path):
    # a counterexample payload, written back to files, reproduces the failure
    bad = D.ExtEtaDiagram(Z2, Z4, Z2, Z2.identity(), G.make_hom(Z2, Z4, [[2]]), G.make_hom(Z4, Z2, [[0]]))
    report = V.VerifyReport("demo", 8, 0)
    run = V._Run(report)
    run.guarded("validates", lambda: D.validate(bad) is not None, lambda: V._diagrams(bad))
    payload = report.properties[0].counterexample
    assert "RelationFailed" in payload["error"]
    cmd = payload["replay"].split()
    files = [write(tmp_path, name, d) for name, d in zip(cmd[2:], payload["diagrams"])]
    code, _, err = run_query(cmd[:2] + files)
    assert code == 2 and "chi.eta.psi=2" in err
