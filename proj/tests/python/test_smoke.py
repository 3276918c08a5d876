import os
import sys

import pytest

module_dir = os.environ.get("ODPI_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

odpi = pytest.importorskip("_odpi")


def test_normalize_round_trip():
    assert odpi.normalize("d[p](f(0,0))") == "d[p](f(0,0))"
    assert odpi.normalize("f(0,0)+0") == "f(0,0)"
    assert odpi.normalize("0+W") == "W"


def test_cmp():
    assert odpi.cmp("d[p](f(0,0))", "p") == "LT"
    assert odpi.cmp("0", "W") == "LT"
    assert odpi.cmp("p", "W") == "GT"
    assert odpi.cmp("W", "W") == "EQ"


def test_classify():
    flags = odpi.classify("d[p](f(0,0))")
    assert flags == {"P": True, "SC": True, "R": True}
    assert odpi.classify("0") == {"P": False, "SC": False, "R": False}


def test_validate():
    good = odpi.validate("d[p;(f(0,0),p,p,3)](f(0,0))")
    assert good["valid"]
    bad = odpi.validate("d[p;(f(0,0),p,p,2)](f(0,0))")
    assert not bad["valid"]
    failed = [c["label"] for c in bad["checks"] if not c["passed"]]
    assert "shape.1" in failed


def test_parse_error():
    with pytest.raises(Exception):
        odpi.normalize("d[0](W)")


def test_enumerate_atoms():
    assert odpi.enumerate(max_size=1) == ["0", "W", "p"]


def test_qpart():
    view = odpi.qpart("d[p;(f(0,0),p,p,3)](f(0,0))")
    assert view["in"] == [3]
    assert view["levels"][3]["pd"] == "p"
    assert view["levels"][3]["st"] == "f(0,0)"


def test_chain_synth():
    descriptor = "\n".join(
        [
            "N: 4",
            "sigmas: p",
            "knots:",
            "indices:",
            "body: f(0,f(0,0))",
            "st_top: f(0,0)",
        ]
    )
    result = odpi.chain_synth(descriptor)
    assert result["valid"]
    assert result["synthesized"] == "d[p;(f(0,0),p,p,3)](f(0,f(0,0)))"
