from dataclasses import replace

import pytest

from lincode.gf2 import BitMatrix
from lincode.verify import Check, VerificationReport, verify_fixtures


def test_check_lines():
    assert Check("a", True, "ok").line() == "[PASS] a: ok"
    assert Check("b", False, "bad").line() == "[FAIL] b: bad"
    assert Check("c", False, "note", hard=False).line() == "[INFO] c: note"


def test_soft_failures_do_not_fail_report():
    report = VerificationReport([Check("a", True, ""), Check("c", False, "", hard=False)])
    assert report.passed
    assert report.failures == []


@pytest.mark.slow
def test_shipped_data_passes():
    report = verify_fixtures()
    assert report.passed, report.lines()
    names = [c.name for c in report.checks]
    assert names[:4] == ["group order", "orbit count", "[47,15,16] analytics", "[48,16,16] extension"]


@pytest.mark.slow
def test_flipped_bit_is_caught(shipped):
    words = list(shipped.gamma47.words)
    words[0] ^= 1
    tampered = replace(shipped, gamma47=BitMatrix(47, tuple(words)))
    report = verify_fixtures(tampered)
    assert not report.passed
    assert "[47,15,16] analytics" in [c.name for c in report.failures]


@pytest.mark.slow
def test_identity_group_is_caught(shipped):
    report = verify_fixtures(replace(shipped, m15=BitMatrix.identity(15)))
    failed = [c.name for c in report.failures]
    assert "group order" in failed
    assert "orbit count" in failed
