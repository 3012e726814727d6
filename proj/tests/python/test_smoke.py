import pytest

fpinc = pytest.importorskip("fpinc")


def test_elekes_counts():
    for n in range(1, 5):
        text = fpinc.generate("elekes", n=n, p=101)
        fast = fpinc.count(text)
        slow = fpinc.count(text, method="bruteforce")
        assert fast["incidences"] == n**4
        assert fast == slow
        assert fast["num_points"] == 2 * n**3
        assert fast["num_lines"] == n**3


def test_full_plane_witness_verifies():
    text = fpinc.generate("full_plane", p=5)
    report = fpinc.pipeline(text, fpinc.permissive_config())
    assert report["outcome"] == "witness"
    assert report["k"] == 4
    assert report["partial_diff"] <= 4 * report["k"]
    assert len(report["gradient_one_cover"]) == report["partial_diff"]
    ok, diffs = fpinc.verify(report)
    assert ok and diffs == []

    report["partial_diff"] += 1
    ok, diffs = fpinc.verify(report)
    assert not ok
    assert any(field == "partial_diff" for field, _, _ in diffs)


def test_no_witness_names_the_stage():
    report = fpinc.pipeline(fpinc.generate("elekes", n=3, p=101))
    assert report["outcome"] == "no_witness"
    assert report["no_witness"]["stage"] == "second_refinement"


def test_rudnev():
    r = fpinc.rudnev([1, 2, 3, 4, 5], 101)
    assert r["dminus"] == 9
    assert r["dratio"] == 19
    assert r["ratio"] == pytest.approx(19 / 5 ** (12 / 11), rel=1e-12)


def test_errors_are_value_errors():
    with pytest.raises(ValueError, match="duplicate point"):
        fpinc.count("p 7\npoint 1 2\npoint 1 2\n")
    with pytest.raises(fpinc.FpincError):
        fpinc.generate("elekes", n=2, p=4)
    with pytest.raises(ValueError, match="bogus"):
        fpinc.pipeline("p 7\npoint 1 2\nline 0 1 -2\n", {"bogus": 1})


def test_config_round_trip():
    cfg = fpinc.default_config()
    assert cfg["epsilon"] == 0.1
    assert "bsg" in cfg
