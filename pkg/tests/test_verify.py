import json

import pytest

from gtfkit import verify
from gtfkit.verify import Check, VerificationReport


def test_report_bookkeeping():
    rep = VerificationReport("demo", 3)
    rep.equal("same", 1.0, 1.0 + 1e-12, 1e-9, p=2.0)
    rep.at_most("bound", 3.0, 2.0, q=float("inf"))
    rep.rel_equal("rel", 2.0, 2.0 * (1 + 1e-3), 1e-6)
    assert rep.summary == {"pass": 1, "fail": 2}
    assert not rep.ok
    assert rep.checks[1].residual == 1.0
    assert rep.checks[1].inputs == {"q": "inf"}
    for c in rep.checks:
        assert c.passed == (c.residual <= c.tolerance)


def test_json_schema_and_roundtrip():
    rep = VerificationReport("demo", 11)
    rep.equal("a", 0.1, 0.1 + 1e-17, 1e-12, x=0.3, n=4)
    rep.at_most("b", 1.0, 0.5)
    data = json.loads(rep.to_json())
    assert set(data) == {"suite", "seed", "checks", "summary"}
    assert set(data["checks"][0]) == {"name", "inputs", "lhs", "rhs", "residual", "tolerance", "pass"}
    assert data["summary"] == {"pass": 1, "fail": 1}
    back = VerificationReport.from_json(rep.to_json())
    assert back == rep
    assert back.to_json() == rep.to_json()


def test_check_dict_uses_pass_key():
    c = Check("n", {}, 1.0, 1.0, 0.0, 1e-9, True)
    assert Check.from_dict(c.to_dict()) == c


def test_text_report_lists_every_check():
    rep = VerificationReport("demo", 0)
    rep.equal("x", 1.0, 1.0, 0.0)
    text = rep.to_text().splitlines()
    assert text[0].startswith("PASS") and text[-1].endswith("pass=1 fail=0")


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run("nope")


def test_hyper_suite_seeded():
    first = verify.run("hyper", seed=7)
    assert first.ok
    names = [c.name for c in first.checks]
    assert names.count("2f1_first") == 200 and names.count("2f1_second") == 200
    assert all(c.residual <= 1e-9 for c in first.checks if c.name.startswith("2f1"))
    assert verify.run("hyper", seed=7).to_json() == first.to_json()
    assert verify.run("hyper", seed=8).to_json() != first.to_json()


@pytest.mark.parametrize("suite", ["bvp", "lyapunov"])
def test_suites_pass(suite):
    rep = verify.run(suite, seed=1)
    assert rep.ok, [c for c in rep.checks if not c.passed][:5]


def test_lyapunov_suite_has_500_lower_bound_checks():
    rep = verify.run("lyapunov", seed=1)
    assert sum(c.name == "lower_bound" for c in rep.checks) == 500
