import pytest

import dikernel as dk


def test_parse_and_format_round_trip():
    d = dk.parse("# name: C6\nn 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    assert d == dk.directed_cycle(6)
    assert dk.format(d) == "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"
    name, doc = dk.parse_document(dk.format(d, "C6"))
    assert name == "C6" and doc == d


def test_errors_carry_kind_and_line():
    with pytest.raises(dk.Error) as info:
        dk.parse("n 2\n0 0\n")
    assert info.value.kind == "LoopArc"
    assert info.value.line == 2
    with pytest.raises(dk.Error):
        dk.Digraph(2, [(0, 2)])


def test_kernels_on_cycles():
    assert dk.find_kernel(dk.directed_cycle(6), k=3) == [0, 3]
    assert dk.find_kernel(dk.directed_cycle(6), k=3, via_closure=True) == [0, 3]
    assert dk.find_kernel(dk.directed_cycle(4), k=3) is None
    assert dk.is_kernel(dk.directed_cycle(3), [0], k=3)
    assert dk.closure(dk.directed_cycle(4), 2).arc_count() == 8
    assert dk.distance_matrix(dk.Digraph(2, [(0, 1)])) == [[0, 1], [None, 0]]


def test_cycles_and_hypotheses():
    c6 = dk.directed_cycle(6)
    assert dk.cycles(c6) == [[0, 1, 2, 3, 4, 5]]
    report = dk.check_cycle_hypothesis(c6, "two-consecutive", min_cycle_len=3)
    assert report["satisfied"] is False
    assert dk.every_cycle_has_symmetric_arc(dk.Digraph(2, [(0, 1), (1, 0)]))["satisfied"]
    assert dk.is_3_kernel_perfect(c6)["perfect"]


def test_substitution_on_cycles():
    out = dk.substitute(dk.directed_cycle(6), 0)
    assert out["pre_3_kernel"] == [0, 3]
    assert out["is_3_kernel"] is True
    assert dk.substitute(dk.directed_cycle(4), 0)["is_3_kernel"] is False


def test_verify_reports():
    ids = [pid for pid, _ in dk.properties()]
    assert ids[0] == "closure-lemma" and ids[-1] == "theorem4"
    a = dk.verify("closure-distance", n=6, trials=20)
    assert a["report"]["status"] == "pass"
    assert a == {**dk.verify("closure-distance", n=6, trials=20), "footer": a["footer"]}
    fail = dk.verify("theorem4", n=6, trials=500, seed=11)
    assert fail["report"]["status"] == "fail"
    with pytest.raises(dk.Error) as info:
        dk.verify("duchet", n=5, exhaustive=True)
    assert info.value.kind == "SizeBound"
