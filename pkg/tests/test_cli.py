"""Command-line interface: exit codes, determinism, file outputs."""

import json

import pytest

from redkit.cli import main
from redkit.instances import (CyclicGroup, GroupSubsetSumInstance,
                              SubsetSumInstance, UnboundedSubsetSumInstance,
                              dumps, loads)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write(path, inst):
    path.write_text(dumps(inst))
    return str(path)


def test_gen_is_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["gen", "subset-sum", "--n", "4", "--seed", "7",
                 "--out", str(a)]) == 0
    assert main(["gen", "subset-sum", "--n", "4", "--seed", "7",
                 "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert loads(a.read_text()).kind == "subset_sum"


def test_gen_seed_changes_output(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    main(["gen", "subset-sum", "--n", "6", "--seed", "1", "--out", str(a)])
    main(["gen", "subset-sum", "--n", "6", "--seed", "2", "--out", str(b)])
    assert a.read_bytes() != b.read_bytes()


@pytest.mark.parametrize("argv,kind", [
    (["gen", "knapsack"], "knapsack"),
    (["gen", "ilp", "--variant", "monotone"], "ilp"),
    (["gen", "cnf"], "cnf"),
    (["gen", "unbounded"], "unbounded_subset_sum"),
    (["gen", "zq", "--q", "7"], "group_subset_sum"),
    (["gen", "coloring", "--graph", "k4"], "coloring"),
    (["gen", "cm", "--ell", "2", "--n", "3"], "counter_machine"),
])
def test_gen_kinds(tmp_path, argv, kind):
    out = tmp_path / "inst.json"
    assert main(argv + ["--out", str(out)]) == 0
    assert loads(out.read_text()).kind == kind


def test_gen_cm_from_coloring_matches_library(tmp_path):
    from redkit.catalog import get_reduction
    from redkit.families import named_graph
    from redkit.witness import Witness
    out = tmp_path / "cm.json"
    assert main(["gen", "cm", "--from-coloring", "k3", "--out", str(out)]) == 0
    expected = get_reduction("coloring-to-cm").apply(
        named_graph("k3"), Witness.zero(0))
    assert loads(out.read_text()) == expected


def test_solve_exit_codes(tmp_path, capsys):
    yes = _write(tmp_path / "yes.json", SubsetSumInstance((3, 5), 8))
    no = _write(tmp_path / "no.json", SubsetSumInstance((3, 5), 4))
    code, out, _ = run(capsys, "solve", yes)
    assert code == 0 and out.startswith("yes")
    code, out, _ = run(capsys, "solve", no)
    assert code == 1 and out.startswith("no")


def test_solve_json_payload(tmp_path, capsys):
    p = _write(tmp_path / "i.json", SubsetSumInstance((3, 5), 8))
    code, out, _ = run(capsys, "solve", p, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["answer"] == "yes"
    assert payload["kind"] == "subset_sum"
    assert payload["backend"] in ("compiled", "pure")
    assert payload["solution"] == [0, 1]


def test_solve_rejects_malformed_instance(tmp_path, capsys):
    p = tmp_path / "bad.json"
    text = dumps(SubsetSumInstance((3,), 1)).replace('"3"', '"-3"')
    p.write_text(text)
    code, _, err = run(capsys, "solve", str(p))
    assert code == 2
    assert "error:" in err


def test_solve_rejects_garbage_json(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    code, _, err = run(capsys, "solve", str(p))
    assert code == 2


def test_reduce_with_sidecar(tmp_path, capsys):
    src = _write(tmp_path / "src.json", SubsetSumInstance((3, 5), 8))
    out = tmp_path / "out.json"
    code, _, _ = run(capsys, "reduce", "ss-to-knapsack", src,
                     "--out", str(out))
    assert code == 0
    target = loads(out.read_text())
    assert target.kind == "knapsack"
    meta = json.loads((tmp_path / "out.json.meta.json").read_text())
    assert meta["reduction"] == "ss-to-knapsack"
    assert meta["witness"] == {"hex": "0", "length": 0}
    assert len(meta["source_sha256"]) == 64
    assert meta["parameter_before"] > 0 and meta["parameter_after"] > 0


def test_reduce_synthesize_yes_and_no(tmp_path, capsys):
    yes = _write(tmp_path / "yes.json", SubsetSumInstance((3, 5), 8))
    no = _write(tmp_path / "no.json", SubsetSumInstance((3, 5), 4))
    out = tmp_path / "t.json"
    code, _, _ = run(capsys, "reduce", "ss-to-monotone", yes,
                     "--synthesize", "--out", str(out))
    assert code == 0
    assert loads(out.read_text()).variant == "monotone"
    code, _, err = run(capsys, "reduce", "ss-to-monotone", no,
                       "--synthesize", "--out", str(out))
    assert code == 1
    assert "no-instance" in err


def test_reduce_explicit_witness(tmp_path, capsys):
    src = _write(tmp_path / "src.json",
                 GroupSubsetSumInstance(CyclicGroup(6), (1, 2), 3))
    out = tmp_path / "t.json"
    wit_hex = format(9, "x")  # lift target to 9 = 3 + 6
    code, _, _ = run(capsys, "reduce", "zq-to-ss", src,
                     "--witness", wit_hex, "--out", str(out))
    assert code == 0
    assert loads(out.read_text()).target == 9


def test_reduce_witness_length_mismatch(tmp_path, capsys):
    src = _write(tmp_path / "src.json", SubsetSumInstance((3, 5), 8))
    code, _, err = run(capsys, "reduce", "ss-to-monotone", src,
                       "--witness", "ffffffffffff")
    assert code == 2


def test_reduce_kind_mismatch(tmp_path, capsys):
    src = _write(tmp_path / "src.json", SubsetSumInstance((3, 5), 8))
    code, _, err = run(capsys, "reduce", "zq-to-ss", src)
    assert code == 2
    assert "expects" in err


def test_verify_identity_passes(capsys):
    code, out, _ = run(capsys, "verify", "identity-subset-sum",
                       "--family", "subset-sum:n=2,max=3,tmax=7")
    assert code == 0
    assert "0 violations" in out


def test_verify_chain(capsys):
    code, out, _ = run(capsys, "verify", "ss-to-zq+zq-to-ss",
                       "--family", "subset-sum:n=2,max=3,tmax=7", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] is True and rep["violations"] == []


def test_verify_unknown_reduction(capsys):
    code, _, err = run(capsys, "verify", "no-such-reduction")
    assert code == 2
    assert "error:" in err


def test_verify_unknown_family(capsys):
    code, _, err = run(capsys, "verify", "identity-subset-sum",
                       "--family", "nope")
    assert code == 2


def test_verify_limit(capsys):
    code, out, _ = run(capsys, "verify", "ss-to-knapsack",
                       "--family", "subset-sum", "--limit", "25", "--json")
    assert code == 0
    assert json.loads(out)["checked"] == 25


def test_cert_check_exit_codes(tmp_path, capsys):
    inst = _write(tmp_path / "u.json", UnboundedSubsetSumInstance((4, 5), 23))
    code, out, _ = run(capsys, "cert-check", "unbounded-ss", inst, "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] is True and rep["checked"] == 1
    code, _, err = run(capsys, "cert-check", "no-such-scheme", inst)
    assert code == 2
    code, _, err = run(capsys, "cert-check", "zkk", inst)
    assert code == 2          # scheme / instance kind mismatch


def test_entry_point_installed():
    import shutil
    import subprocess
    exe = shutil.which("redkit")
    if exe is None:
        pytest.skip("console script not on PATH")
    got = subprocess.run([exe, "--help"], capture_output=True, text=True)
    assert got.returncode == 0
    assert "reduce" in got.stdout
