import json
import math

import pytest

import lchkit


def test_unknot_dga():
    d = lchkit.resolve("L1 R1")
    assert d.chord_labels == ["r1"]
    assert d.bounded_face_count == 2
    out = lchkit.dga(d)
    assert out["differential"] == {"r1": ["1", "1"]}
    assert out["d_squared"] == "ok"
    assert [g["grading"] for g in out["generators"]] == [1]


def test_trefoil_disks():
    disks = lchkit.rigid_disks("L1 L1 X2 X2 X2 R1 R1")
    signatures = set()
    for disk in disks:
        pos = sorted(c["chord"] for c in disk["corners"] if c["sign"] == "+")
        neg = sorted(c["chord"] for c in disk["corners"] if c["sign"] == "-")
        signatures.add((tuple(pos), tuple(neg)))
        idx = disk["index"]
        assert idx["maslov"] == idx["branch"] == idx["crit"]
    assert (("r4",), ("r1",)) in signatures
    assert (("r4",), ("r1", "r2", "r3")) in signatures
    assert (("r2", "r3"), ()) in signatures
    assert len(lchkit.chords("L1 L1 X2 X2 X2 R1 R1")) == 5


def test_front_invariants_and_ncopy():
    front = lchkit.Front("L1 L1 X2 X2 X2 R1 R1")
    assert front.invariants() == [(1, 0)]
    copy = lchkit.n_copy("L1 R1", 3)
    assert len(copy.chord_labels) == 21
    assert copy.is_lrs


def test_json_round_trip():
    d = lchkit.resolve("L1 L1 X2 X2 X2 R1 R1")
    again = lchkit.resolve(d.to_json())
    assert again.to_json() == d.to_json()
    assert lchkit.dga(again) == lchkit.dga(d)


def test_census_and_render():
    c = lchkit.census("L1 X1 X1 R1")
    assert c["violations"] == []
    assert c["annulus_candidates"]
    svg = lchkit.render("L1 R1", highlight=[0])
    assert svg.count('class="cap"') == 2
    assert svg.count('class="highlight"') == 1


def test_errors():
    with pytest.raises(lchkit.LchkitError) as info:
        lchkit.resolve("L1 R1 L1 R1")
    assert info.value.kind == "NotPlat"
    with pytest.raises(lchkit.LchkitError) as info:
        lchkit.render("L1 R1", highlight=[7])
    assert info.value.kind == "UnknownFace"


def test_obstruction():
    assert lchkit.obstruction_integral(1.0, [1.0], [0.0]) == pytest.approx(math.pi, abs=1e-12)
    inner = [1.0, 0.3 + 0.2j, -0.1j]
    outer = [0.0, 0.5, 0.25]
    assert lchkit.obstruction_quadrature(1.0, inner, outer) == pytest.approx(math.pi, abs=1e-8)
    z = lchkit.find_obstruction_zero(1.0, lambda t: ([t + 3.0], [0.0]), (-5.0, -1.0))
    assert abs(z["T"] + 3.0) < 1e-9
    with pytest.raises(lchkit.LchkitError) as info:
        lchkit.find_obstruction_zero(1.0, lambda t: ([t + 3.0], [0.0]), (0.0, 1.0))
    assert info.value.kind == "NoSignChange"
