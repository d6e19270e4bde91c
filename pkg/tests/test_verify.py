import pytest

from monotri import InvalidInputError, verify
from monotri.verify import IDENTITIES

ALL_IDS = sorted(IDENTITIES)


@pytest.mark.parametrize("identity_id", ALL_IDS)
def test_identity_verifies_at_defaults(identity_id):
    report = verify(identity_id)
    assert report.status == "Verified", report.details
    assert report.details, "an executed identity must carry detail rows"
    assert all(e == a for _, e, a in report.details)
    assert report.elapsed_ms >= 0


def test_unknown_identity():
    with pytest.raises(InvalidInputError):
        verify("fermat")


def test_unknown_parameter():
    with pytest.raises(InvalidInputError):
        verify("table", {"q_max": 3})


def test_out_of_range_parameters_skip():
    report = verify("table", {"n_max": 15})
    assert report.status == "Skipped"
    assert report.reason and "n_max" in report.reason
    assert report.details == ()


def test_lemma2_is_seed_deterministic():
    a = verify("lemma2", {"seed": 42})
    b = verify("lemma2", {"seed": 42})
    assert a.details == b.details
    c = verify("lemma2", {"seed": 43})
    assert a.details != c.details
    assert a.status == c.status == "Verified"


def test_table_reports_reference_values():
    report = verify("table", {"n_max": 9})
    expected = {-1, 3, -26, 646, 0}
    assert {e for _, e, _ in report.details} == expected


def test_conjecture_small():
    report = verify("conjecture", {"m_max": 3})
    assert report.status == "Verified"
    values = [a for _, _, a in report.details]
    assert values == [-1, 3, -26]


def test_verified_iff_details_agree():
    for identity_id in ("reciprocity", "wni", "behrend"):
        report = verify(identity_id)
        assert (report.status == "Verified") == all(
            e == a for _, e, a in report.details
        )
