import json
from pathlib import Path

import pytest

from codescent.cli import main, parse_instance, instance_payload, to_json

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name,code", [
    ("arrow_identity", 0),
    ("multi_arrow_identity", 1),
    ("square_fails", 1),
    ("z2_funnel_s0", 1),
    ("z2_funnel_two_arrows", 2),
])
def test_check_exit_codes(capsys, name, code):
    got, out, _ = run(capsys, "check", INSTANCES / ("%s.json" % name))
    assert got == code
    assert out.startswith("c: ")


def test_check_json_payload(capsys):
    code, out, _ = run(capsys, "check", INSTANCES / "multi_arrow_identity.json",
                       "--format", "json")
    assert code == 1
    payload = json.loads(out)
    assert payload["object"] == "c"
    assert payload["verdict"] == {"status": "fails", "degree": 0, "defect": 1}
    assert payload["strategy"] == "bar"
    assert payload["cutoff"] is None            # directed: no truncation
    assert payload["exact_through"] is None


def test_check_bounded_verdict_reports_range(capsys):
    code, out, _ = run(capsys, "check", INSTANCES / "z2_funnel_two_arrows.json",
                       "--format", "json")
    assert code == 2
    payload = json.loads(out)
    assert payload["verdict"]["status"] == "holds_up_to"
    assert payload["verdict"]["bound"] == 3
    assert payload["cutoff"] == 4
    assert payload["exact_through"] == 3


def test_check_at_member_is_automatic(capsys):
    code, out, _ = run(capsys, "check", INSTANCES / "z2_funnel_s0.json",
                       "--at", "d")
    assert code == 0
    assert out == "d: Holds\n"


def test_locus_empty_subset_tests_acyclicity(capsys):
    code, out, _ = run(capsys, "locus", INSTANCES / "empty_dset.json")
    assert code == 1
    lines = out.splitlines()
    assert "  x0: Holds" in lines
    assert "locus: x0" in lines
    assert "failures: x1" in lines


def test_locus_json_partition(capsys):
    code, out, _ = run(capsys, "locus", INSTANCES / "square_fails.json",
                       "--format", "json")
    assert code == 1
    payload = json.loads(out)
    assert set(payload["locus"]) == {"e", "d1", "d2"}
    assert payload["failures"] == ["c"]
    assert payload["verdicts"]["c"]["status"] == "fails"


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", INSTANCES / "arrow_identity.json")
    assert code == 0
    assert out.startswith("instance OK: 2 objects, 3 morphisms")
    code, out, _ = run(capsys, "validate", INSTANCES / "arrow_identity.json",
                       "--format", "json")
    info = json.loads(out)
    assert info["ok"] is True
    assert info["dset"] == ["d"]


def test_missing_file_is_a_data_error(capsys):
    code, _, err = run(capsys, "check", "no-such-file.json")
    assert code == 65
    assert "error:" in err


def test_malformed_json_is_a_data_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "validate", bad)
    assert code == 65
    assert "<json>" in err


def test_schema_violation_reports_json_path(capsys, tmp_path):
    payload = json.loads((INSTANCES / "arrow_identity.json").read_text())
    del payload["diagram"]["at"]["c"]
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(payload))
    code, _, err = run(capsys, "validate", broken)
    assert code == 65
    assert "$.diagram.at" in err


def test_missing_focus_is_a_data_error(capsys, tmp_path):
    payload = json.loads((INSTANCES / "arrow_identity.json").read_text())
    del payload["focus"]
    nofocus = tmp_path / "nofocus.json"
    nofocus.write_text(json.dumps(payload))
    code, _, err = run(capsys, "check", nofocus)
    assert code == 65
    assert "--at" in err


def test_prime_flag_mismatch(capsys):
    code, _, err = run(capsys, "check", INSTANCES / "arrow_identity.json",
                       "--prime", "3")
    assert code == 65
    assert "p=2" in err


def test_usage_errors_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check"])  # missing the instance argument
    assert exc.value.code == 64
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", "x.json"])
    assert exc.value.code == 64
    capsys.readouterr()


def test_round_trip_is_canonical(tmp_path):
    inst = parse_instance(str(INSTANCES / "z2_funnel_s0.json"))
    text = to_json(instance_payload(inst))
    copy = tmp_path / "copy.json"
    copy.write_text(text)
    again = parse_instance(str(copy))
    assert to_json(instance_payload(again)) == text
    assert again.prime == inst.prime
    assert again.pair == inst.pair
    assert again.cutoff == inst.cutoff


def test_export_dot_shape_facts(capsys):
    _, arrow, _ = run(capsys, "export-dot", INSTANCES / "arrow_identity.json")
    nodes = [l for l in arrow.splitlines() if l.startswith('  "') and "->" not in l]
    edges = [l for l in arrow.splitlines() if "->" in l]
    assert len(nodes) == 2 and len(edges) == 1
    assert '  "d" [peripheries=2];' in nodes
    assert edges[0] == '  "d" -> "c" [label="alpha"];'

    _, square, _ = run(capsys, "export-dot", INSTANCES / "square_fails.json")
    nodes = [l for l in square.splitlines() if l.startswith('  "') and "->" not in l]
    edges = [l for l in square.splitlines() if "->" in l]
    assert len(nodes) == 4 and len(edges) == 4   # composite diagonal omitted
    assert not any("gamma" in e for e in edges)

    _, square2, _ = run(capsys, "export-dot", INSTANCES / "square_fails.json")
    assert square2 == square                     # byte-deterministic


def test_export_dot_with_locus_colors(capsys):
    code, out, _ = run(capsys, "export-dot", INSTANCES / "multi_arrow_identity.json",
                       "--with-locus")
    assert code == 0
    assert 'fillcolor="lightcoral"' in out       # the failing focus
    assert 'fillcolor="palegreen"' in out        # the member


def test_prune_provenance_chain(capsys, tmp_path):
    code, out, _ = run(capsys, "prune", "objects", INSTANCES / "square_fails.json",
                       "--format", "json")
    assert code == 0
    first = json.loads(out)
    assert first["reductions"] == ["prune-objects"]
    step1 = tmp_path / "step1.json"
    step1.write_text(json.dumps(first))

    code, out, _ = run(capsys, "prune", "funnel", step1, "--format", "json")
    assert code == 0
    second = json.loads(out)
    assert second["reductions"] == ["prune-objects", "funnel"]

    # the reduction chain preserves the verdict at the focus
    step2 = tmp_path / "step2.json"
    step2.write_text(json.dumps(second))
    code, out, _ = run(capsys, "check", step2, "--format", "json")
    assert code == 1
    assert json.loads(out)["verdict"] == {"status": "fails", "degree": 2,
                                          "defect": 1}


def test_prune_strict_funnel_needs_outside_focus(capsys):
    code, _, err = run(capsys, "prune", "strict-funnel",
                       INSTANCES / "square_fails.json", "--at", "d1")
    assert code == 65
    assert "focus" in err


def test_glossy_flows(capsys):
    code, out, _ = run(capsys, "glossy", "right", INSTANCES / "z2_funnel_s0.json",
                       "--along", INSTANCES / "stabilizer_functor.json")
    assert code == 0
    assert "right glossy on {d, c}: yes" in out
    assert "d via m0, d via m1" in out

    code, out, _ = run(capsys, "glossy", "left", INSTANCES / "z2_funnel_s0.json",
                       "--along", INSTANCES / "stabilizer_functor.json")
    assert code == 1
    assert "no (fails at d)" in out

    code, out, _ = run(capsys, "glossy", "right", INSTANCES / "z2_funnel_s0.json",
                       "--along", INSTANCES / "stabilizer_functor.json",
                       "--at", "d", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["witnesses"] == {"d": [["d", "m0"], ["d", "m1"]]}


def test_kan_res_restricts_along_inclusion(capsys):
    code, out, _ = run(capsys, "kan", "res", INSTANCES / "z2_funnel_s0.json",
                       "--along", INSTANCES / "stabilizer_functor.json",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dset"] == ["d"]
    assert set(payload["diagram"]["at"]) == {"d", "c"}


def test_kan_ind_and_ext_collapse_to_a_point(capsys, tmp_path):
    collapse = tmp_path / "collapse.json"
    collapse.write_text(json.dumps({
        "category": {
            "objects": ["pt"],
            "morphisms": {"id_pt": {"src": "pt", "tgt": "pt"}},
            "identities": {"pt": "id_pt"},
            "composition": [],
        },
        "on_objects": {"d": "pt", "c": "pt"},
        "on_morphisms": {"alpha": "id_pt"},
    }))
    for direction in ("ind", "ext"):
        code, out, _ = run(capsys, "kan", direction,
                           INSTANCES / "arrow_identity.json",
                           "--along", collapse, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["dset"] == ["pt"]
        # constant one-dimensional diagram: both extensions stay rank one
        assert payload["diagram"]["at"]["pt"]["dims"] == [1]


def test_kan_unmapped_morphism_is_a_data_error(capsys):
    code, _, err = run(capsys, "kan", "ind", INSTANCES / "arrow_identity.json",
                       "--along", INSTANCES / "stabilizer_functor.json")
    assert code == 65
    assert "not mapped" in err
