import pytest

import teamproof as tp


def test_countermodel_for_questioned_excluded_middle():
    out = tp.prove("p||(p|~p) => p||~p")
    assert out["valid"] is False
    assert out["countermodel"] == {"vars": ["p"], "team": [[0], [1]]}
    assert not tp.satisfies("p || ~p", out["countermodel"])


def test_derivation_pipeline():
    out = tp.prove("(p||q) & r => (p & r) || (q & r)")
    assert out["valid"]
    d = out["derivation"]
    assert tp.check(d) == (True, "")
    assert tp.check(tp.normalize(d))[0]
    assert tp.check(tp.eliminate_cuts(d))[0]
    assert len(tp.resolve(d)["leaves"]) >= 1
    assert tp.check(d, "gtprime")[0] in (True, False)


def test_corrupted_derivation_is_located():
    d = tp.prove("p & q => q")["derivation"]
    d["premises"][0]["conclusion"]["succedent"] = ["p"]
    ok, message = tp.check(d)
    assert not ok
    assert "LAnd" in message


def test_resolutions_and_closure():
    assert tp.resolutions("p||(q||r)", 1) == ["p", "q || r", "p || q", "p || r"]
    assert sorted(tp.resolutions("p||(q||r)")) == ["p", "q", "r"]
    c = tp.closure("p || ~p")
    assert c["downward_closed"] and not c["union_closed"]


def test_interpolant():
    out = tp.interpolate("p & q ; => ; p | r")
    assert out["valid"]
    assert tp.sequent_valid("p & q => " + out["interpolant"])
    assert tp.sequent_valid(out["interpolant"] + " => p | r")
    assert tp.interpolate("p & q => p | r")["interpolant"] == out["interpolant"]


def test_errors():
    with pytest.raises(tp.ParseError):
        tp.prove("p & => q")
    with pytest.raises(tp.ResourceLimit):
        tp.prove("(p||q)|(r||p), (q||r)|p => (p&q)||(q&r)||(r&p), p||q", budget=3)
    with pytest.raises(tp.TeamproofError):
        tp.interpolate("p||~p ; q => p||~p ; q")
    assert issubclass(tp.ParseError, tp.TeamproofError)
