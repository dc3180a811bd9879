"""Smoke test for the qfusion extension module.

Build first:  pip install --no-build-isolation ./crates/qfusion-py
Run:          python -m pytest python/smoke_test.py   (or python python/smoke_test.py)
"""

import json

import qfusion


def test_fusion():
    prod = sorted(qfusion.fusion_product(3, 2, [2, 1], [2, 1]))
    assert [(nu, c) for nu, _, c in prod] == [([], 1), ([2, 1], 1)]
    assert qfusion.fusion_coeff(3, 2, [2, 1], [2, 1], []) == 1
    assert qfusion.verlinde_coeff(3, 2, [2, 1], [2, 1], [2, 1]) == 1


def test_quantum_product():
    prod = qfusion.quantum_product(4, 7, [3, 3, 2, 1], [2, 2, 1])
    got = sorted((tuple(nu), d, c) for nu, d, c in prod)
    assert got == [
        ((), 2, 1),
        ((2, 2, 2, 1), 1, 1),
        ((3, 2, 1, 1), 1, 2),
        ((3, 2, 2), 1, 1),
        ((3, 3, 1), 1, 1),
    ]
    assert qfusion.gw_invariant(4, 7, [3, 3, 2, 1], [2, 2, 1], [3, 2, 1, 1], 1) == 2
    assert qfusion.bvi_coeff(4, 7, [3, 3, 2, 1], [2, 2, 1], [3, 2, 1, 1]) == (1, 2)
    assert qfusion.littlewood_richardson([1], [1], [1, 1]) == 1


def test_tables():
    t = qfusion.CoeffTable.gw(2, 5)
    assert t.kind == "gw" and t.k == 2
    assert t[[3, 2], [2, 1], [3]] == (1, 1)
    assert t.get([1], [1], [3, 2]) is None
    assert qfusion.CoeffTable.from_json(t.to_json()) == t
    assert t.to_csv().splitlines()[0] == "lambda,mu,nu,d,c"
    for s in ["s3", "level_rank", "rotation", "curious"]:
        checked, bad = t.check_symmetry(s)
        assert checked > 0 and bad == []
    h = qfusion.hierarchy_build(5)
    assert len(h) == 6 and h[2] == t
    assert json.loads(qfusion.CoeffTable.fusion(3, 1).to_json())["kind"] == "fusion"


def test_partition():
    p = qfusion.Partition([3, 1])
    assert p.transpose().parts == [2, 1, 1]
    assert p.complement(2, 3).parts == [2]
    assert str(qfusion.Partition.parse("2,1")) == "2,1"
    assert len(qfusion.Partition.all_in_box(2, 3)) == 10
    try:
        qfusion.Partition([1, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("non-decreasing parts accepted")


def test_spectral_and_suites():
    basis, s = qfusion.smatrix(2, 1)
    assert len(basis) == 2 and abs(abs(s[0][0]) ** 2 + abs(s[0][1]) ** 2 - 1) < 1e-12
    ok, checks = qfusion.run_suite("bethe", 3, 2)
    assert ok and all(c["ok"] for c in checks)
    assert "operators" in qfusion.SUITES


def test_words():
    w = qfusion.parse_word("a0^2a2^4a1^5a0^6a2^3a1^2a0^3a2^2")
    pi = qfusion.word_to_multipartition(w, 3)
    assert pi == [[4, 2, 2, 2], [3, 1, 1], [4, 4, 2, 2]]
    assert qfusion.format_word(qfusion.multipartition_to_word(pi)) == "a0^2a2^4a1^5a0^6a2^3a1^2a0^3a2^2"
    rows = [[1, 1, 1, 2, 2, 3, 3, 4, 6, 10], [2, 2, 3, 3, 3, 4, 5, 6, 7], [9]]
    d, log = qfusion.normalize_tableau(rows, 11, log=True)
    assert d == [[1, 1, 1, 2, 2, 3, 3, 3, 4, 6, 6, 9, 10], [2, 2, 3, 3, 4, 5, 7]]
    assert log[0][0] == "(5)" and len(log) == 20
    assert qfusion.partition_to_word01([2, 1], 2, 5) == "01010"


if __name__ == "__main__":
    for name, f in list(globals().items()):
        if name.startswith("test_"):
            f()
            print("ok", name)
