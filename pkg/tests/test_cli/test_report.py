import json

import yaml

from toricmorse.cli.parsing import parse
from toricmorse.cli.report import (
    AffineSession,
    ToricSession,
    render,
    session_for,
    to_tree,
)
from toricmorse.config import DEFAULT_CONFIG

from .test_parsing import RUNNING

FIGURE = "central 2\n1 0 = 0\n3 -4 = 0\n3 4 = 0\n"


def running_session(**settings):
    return session_for(parse(RUNNING), DEFAULT_CONFIG.set(**settings))


def test_session_kinds():
    assert isinstance(running_session(), ToricSession)
    assert isinstance(session_for(parse(FIGURE)), AffineSession)


def test_single_sections():
    tree = to_tree(running_session().report("layers"))
    assert set(tree) == {"input", "layers"}
    assert tree["input"]["items"] == ["1 0 @ 0", "1 -1 @ 0", "1 1 @ 0"]
    assert tree["input"]["deficiency"] == 0
    assert tree["layers"]["counts"] == [2, 3, 1]
    assert len(tree["layers"]["layers"]) == 6
    assert sorted(r["items"] for r in tree["layers"]["layers"] if r["dim"] == 0) == [
        [0, 1, 2],
        [1, 2],
    ]

    faces = to_tree(running_session().report("faces"))["faces"]
    assert faces == {"f_vector": [2, 5, 3], "euler_characteristic": 0, "morphisms": 30}

    nbc = to_tree(running_session().report("nbc"))["nbc"]
    assert nbc == {"counts": [1, 3, 3], "y_counts": [3, 3, 1]}


def test_poincare_and_matching():
    session = running_session()
    tree = to_tree(session.report("poincare"))
    assert tree["poincare"] == {
        "polynomial": {"text": "1 + 5t + 7t^2", "coefficients": [1, 5, 7]},
        "value_at_one": 13,
    }

    matching = to_tree(session.report("matching"))["matching"]
    assert matching["census"] == [1, 5, 7]
    assert matching["total"] == 13
    assert matching["matched_pairs"] == 5
    assert matching["torus_census"] == [1, 2, 1]
    assert len(matching["critical"]) == 13


def test_salvetti_and_homology():
    session = running_session()
    salvetti = to_tree(session.report("salvetti"))["salvetti"]
    assert salvetti["objects"] == 23
    assert salvetti["objects_by_rank"] == [3, 10, 10]
    assert salvetti["strata"] == 7

    homology = to_tree(session.report("homology"))["homology"]
    assert homology["betti"] == [1, 5, 7]
    assert homology["torsion_free"]
    assert not homology["truncated"]
    assert homology["groups"][1] == {"degree": 1, "betti": 5, "torsion": []}


def test_verify_toric():
    checks = to_tree(running_session().report("verify"))["verify"]["checks"]
    names = [check["name"] for check in checks]
    for name in ("lift", "colimit", "strata", "xi", "y_counts", "betti", "torsion"):
        assert name in names

    checks = to_tree(running_session(skip_colimit=True).report("verify"))["verify"]
    colimit = [c for c in checks["checks"] if c["name"] == "colimit"]
    assert colimit == [{"name": "colimit", "detail": "skipped"}]


def test_inessential_input():
    session = session_for(parse("toric 2\n1 0 @ 0\n"))
    tree = to_tree(session.report("poincare"))
    assert tree["input"]["deficiency"] == 1
    assert tree["poincare"]["polynomial"]["coefficients"] == [1, 3, 2]
    homology = to_tree(session.report("homology"))["homology"]
    assert homology["betti"] == [1, 2]


def test_affine_report():
    tree = to_tree(session_for(parse(FIGURE)).report("report"))
    assert tree["input"]["items"] == ["1 0 = 0", "3 -4 = 0", "3 4 = 0"]
    assert tree["faces"]["f_vector"] == [1, 6, 6]
    assert tree["nbc"]["counts"] == [1, 3, 2]
    assert tree["poincare"]["polynomial"]["text"] == "1 + 3t + 2t^2"
    assert tree["salvetti"]["objects"] == 24
    assert tree["matching"]["census"] == [1, 3, 2]
    assert tree["homology"]["betti"] == [1, 3, 2]
    names = [check["name"] for check in tree["verify"]["checks"]]
    assert "zaslavsky" in names
    assert "central_strata" in names


def test_render():
    report = running_session().report("poincare")
    as_yaml = render(report)
    assert yaml.safe_load(as_yaml) == to_tree(report)
    assert "1 + 5t + 7t^2" in as_yaml

    as_json = render(report, as_json=True)
    assert json.loads(as_json) == to_tree(report)
    assert as_json == render(running_session().report("poincare"), as_json=True)
