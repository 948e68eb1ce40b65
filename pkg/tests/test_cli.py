import json

from orehom.cli import main
from orehom.spec_io import EXAMPLE_NAMES, build_example, decode_scalar, encode_scalar, parse_spec
from orehom.fields import make_field


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_example_round_trip_all_names(capsys, tmp_path):
    for name in EXAMPLE_NAMES:
        path = tmp_path / f"{name.replace(':', '_')}.json"
        code, _ = run(capsys, "example", name, "--out", str(path))
        assert code == 0
        doc = json.loads(path.read_text())
        parsed = parse_spec(doc)
        assert parsed.mono.n >= 2


def test_example_unknown_name(capsys):
    code = main(["example", "nosuch:99"])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_example_sweedler_equals_taft2(capsys):
    sw = build_example("sweedler")
    t2 = build_example("taft:2")
    sw.pop("name")
    t2.pop("name")
    assert sw == t2


def test_hh_oracle_flag(capsys):
    code, rep = run_json(capsys, "hh", "--spec", "sweedler", "--max-degree", "6", "--oracle")
    assert code == 0
    assert rep["modes"]["generic"] == [2, 1, 1, 1, 1, 1]
    assert rep["modes"]["oracle"] == [2, 1, 1, 1, 1, 1]
    assert all(c["agrees"] for c in rep["comparisons"])


def test_hh_closed_form_trunc(capsys):
    code, rep = run_json(capsys, "hh", "--spec", "trunc:3", "--max-degree", "6", "--closed-form")
    assert code == 0
    assert rep["modes"]["generic"] == [3, 2, 2, 2, 2, 2]
    assert rep["modes"]["closed_form_alpha_identity"] == rep["modes"]["generic"]


def test_hh_dihedral_reports_collapse_status(capsys):
    code, rep = run_json(capsys, "hh", "--spec", "dihedral:3", "--max-degree", "4")
    assert code == 0
    assert rep["hypotheses"]["collapse"]["holds"] is False
    assert rep["modes"]["generic"] == [4, 2, 2, 2]
    assert rep["audit"]["agrees"] is False
    assert rep["audit"]["displayed_table"] == [3, 1, 1, 1]


def test_hh_decompose_refused_without_collapse(capsys):
    code, rep = run_json(capsys, "hh", "--spec", "trunc:3", "--max-degree", "4", "--decompose")
    assert code == 0
    assert any("collapse" in r for r in rep["refusals"])


def test_hh_basis_flag(capsys):
    code, rep = run_json(capsys, "hh", "--spec", "sweedler", "--max-degree", "3", "--basis")
    assert code == 0
    assert len(rep["representatives"]) == 3
    assert len(rep["representatives"][0]) == 2


def test_hc_oracle_and_closed_form(capsys):
    code, rep = run_json(
        capsys, "hc", "--spec", "rank1:c4", "--max-degree", "5", "--oracle", "--closed-form"
    )
    assert code == 0
    assert rep["modes"]["generic"] == [3, 1, 3, 1, 3]
    assert rep["modes"]["oracle"] == [3, 1, 3, 1]
    assert "exponent_note" in rep
    assert "diverges at degrees [1]" in rep["exponent_note"]
    assert all(c["agrees"] for c in rep["comparisons"])


def test_hc_taft3(capsys):
    code, rep = run_json(capsys, "hc", "--spec", "taft:3", "--max-degree", "3")
    assert code == 0
    assert rep["modes"]["generic"] == [3, 2, 3]


def test_hc_decompose(capsys):
    code, rep = run_json(capsys, "hc", "--spec", "sweedler", "--max-degree", "4", "--decompose")
    assert code == 0
    assert any(c["against"] == "component sum" and c["agrees"] for c in rep["comparisons"])


def test_verify_passes_on_fixtures(capsys):
    for name in ("sweedler", "trunc:3"):
        code, rep = run_json(capsys, "verify", "--spec", name, "--max-degree", "4")
        assert code == 0
        assert rep["all_passed"] is True
        names = [c["check"] for c in rep["checks"]]
        assert "psi'phi' = id" in names
        assert "psi (Bw)^j B phi = 0" in names


def test_validation_error_exit_code(capsys, tmp_path):
    doc = build_example("sweedler")
    doc["extension"]["n"] = 1
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code = main(["hh", "--spec", str(p)])
    assert code == 1
    assert "n >= 2" in capsys.readouterr().err


def test_nonmultiplicative_character_rejected(capsys, tmp_path):
    doc = build_example("sweedler")
    doc["endomorphism"]["values"]["g"] = "2"
    p = tmp_path / "bad2.json"
    p.write_text(json.dumps(doc))
    code = main(["hh", "--spec", str(p)])
    assert code == 1


def test_reports_deterministic(capsys):
    _, out1 = run(capsys, "hh", "--spec", "sweedler", "--max-degree", "4", "--json")
    _, out2 = run(capsys, "hh", "--spec", "sweedler", "--max-degree", "4", "--json")
    assert out1 == out2


def test_human_rendering_contains_dims(capsys):
    code, out = run(capsys, "hh", "--spec", "sweedler", "--max-degree", "4")
    assert code == 0
    assert "generic: (2, 1, 1, 1)" in out


def test_rank_one_rewrite_logged(capsys):
    code, rep = run_json(capsys, "hh", "--spec", "rank1nc:c2xc4", "--max-degree", "4")
    assert code == 0
    assert rep["hypotheses"]["rank_one_case"] == "xi!=0, chi^n!=id"
    assert "rewrite" in rep["hypotheses"]
    assert rep["hypotheses"]["rewrite"]["kernel_subgroup"] == ["e"]


def test_scalar_codec_round_trip():
    F = make_field("cyclotomic", 4)
    s = F.scalar(["1/2", "-3"])
    assert decode_scalar(F, encode_scalar(F, s)) == s
    Q = make_field("rationals")
    q = Q.from_fraction("7/3")
    assert decode_scalar(Q, encode_scalar(Q, q)) == q


def test_quotient_rewrite_nontrivial_kernel():
    # a genuinely nontrivial quotient: C4 x C4 with chi(a) = i, chi(b) = -1,
    # g1 = b of order 4, so <g1^2> has two elements
    F = make_field("cyclotomic", 4)
    z = F.root()
    elems = [(j, l) for l in range(4) for j in range(4)]

    def lab(j, l):
        a = "" if j == 0 else f"a{j}"
        b = "" if l == 0 else f"b{l}"
        return (a + b) or "e"

    labels = [lab(j, l) for (j, l) in elems]
    index = {v: i for i, v in enumerate(elems)}
    table = [
        [labels[index[((j1 + j2) % 4, (l1 + l2) % 4)]] for (j2, l2) in elems]
        for (j1, l1) in elems
    ]
    chi = {lab(j, l): encode_scalar(F, (z ** j) * ((-F.one) ** l)) for (j, l) in elems}
    doc = {
        "name": "rank1nc:c4xc4",
        "field": {"kind": "cyclotomic", "order": 4},
        "rank_one": {"labels": labels, "table": table, "character": chi,
                      "g1": "b1", "n": 2, "xi": "1"},
    }
    parsed = parse_spec(doc)
    assert parsed.summary["rank_one_case"] == "xi!=0, chi^n!=id"
    assert sorted(parsed.summary["rewrite"]["kernel_subgroup"]) == ["b2", "e"]
    assert parsed.mono.base.dim == 8  # 16 / 2


def test_hc_dihedral_audit(capsys):
    code, rep = run_json(capsys, "hc", "--spec", "dihedral:4", "--max-degree", "4")
    assert code == 0
    assert rep["audit"]["displayed_table"] == [5, 2, 5, 2]
    assert rep["audit"]["computed"] == [6, 2, 6, 2]
    assert rep["audit"]["agrees"] is False


def test_hh_dihedral4_audit_even_reflection_count(capsys):
    code, rep = run_json(capsys, "hh", "--spec", "dihedral:4", "--max-degree", "4")
    assert code == 0
    assert rep["audit"]["displayed_table"] == [5, 2, 2, 2]
