import json

from dpd import theorem
from dpd.construct import from_named_faces


def k4():
    return from_named_faces([s.split() for s in ["a b c", "a b d", "b c d", "c a d"]])[0]


def test_theorem_small(entries):
    rep = theorem.verify_theorem(entries["theorem-small"].graph, seed=1, samples=200)
    assert rep["ok"] and set(rep["families"]) == {"ones", "boundary"}


def test_exhaustive_when_few_nontree_edges():
    rep = theorem.verify_theorem(k4(), seed=0, samples=10)
    assert rep["nontree_edges"] == 3
    assert rep["families"]["ones"] == {"mode": "exhaustive", "checked": 24 ** 3, "total": 24 ** 3}
    assert rep["families"]["boundary"]["mode"] == "sampled"


def test_too_few_colours_gives_replayable_witness(tmp_path):
    rep = theorem.verify_theorem(k4(), seed=0, s=3, samples=10, families=("ones",))
    assert not rep["ok"]
    w = rep["witness"]
    assert w["kind"] == "theorem" and len(w["precolored"]) == 3
    p = theorem.write_witness(w, tmp_path / "w.json")
    assert theorem.replay_witness(p.read_text()) == "COUNTEREXAMPLE"


def test_replay_detects_tampering():
    rep = theorem.verify_theorem(k4(), seed=0, s=3, samples=10, families=("ones",))
    w = json.loads(json.dumps(rep["witness"]))
    w["cover"]["s"] = 4
    w["cover"].pop("f", None)
    assert theorem.replay_witness(w) == "EXTENDS"


def test_fuzz_clean_and_deterministic():
    a = theorem.fuzz_conjecture(count=30, n=8, seed=9, samples=32)
    b = theorem.fuzz_conjecture(count=30, n=8, seed=9, samples=32)
    assert a == b and a["ok"] and a["instances"] == 30


def test_fuzz_with_two_colours_fails(tmp_path):
    rep = theorem.fuzz_conjecture(count=5, n=6, seed=1, s=2, samples=16, witness_dir=tmp_path)
    assert not rep["ok"]
    files = sorted(tmp_path.glob("*.json"))
    assert files
    for f in files:
        assert theorem.replay_witness(f.read_text()) == "COUNTEREXAMPLE"
