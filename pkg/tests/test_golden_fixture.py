"""Internal arithmetic of the embedded reference table, so transcription slips show up."""

import pytest

from hmcy.golden import REFERENCE_TABLE, FIELDS, KNOWN_TYPOS, PRIMES, ROW_LABELS


def cell(p, f):
    return KNOWN_TYPOS.get((p, f), REFERENCE_TABLE[p][f])


def test_shape():
    assert len(PRIMES) == 19 and list(PRIMES) == sorted(REFERENCE_TABLE)
    assert all(set(REFERENCE_TABLE[p]) == set(FIELDS) for p in PRIMES)
    assert set(ROW_LABELS) == set(FIELDS)


@pytest.mark.parametrize("p", PRIMES)
def test_column_arithmetic(p):
    c = lambda f: cell(p, f)  # noqa: E731
    assert c("p_plus_p2") == p + p * p
    assert c("p3_plus_1_minus_N") == p**3 + 1 - c("count_X_tilde")
    assert c("trace_h3") == c("p3_plus_1_minus_N") + c("h") * c("p_plus_p2")
    assert c("diff") == c("trace_h3") - c("a_p")
    assert c("diff") == p * c("diff_over_p")
    assert c("has_i") == (p % 4 == 1)
    if c("has_i"):
        assert c("w_check") == 2 * p + 2 - c("count_E") == c("diff_over_p")
    else:
        assert c("w_check") is None and c("count_E") == 0 and c("diff") == 0


def test_typos_really_differ():
    for (p, f), fixed in KNOWN_TYPOS.items():
        assert REFERENCE_TABLE[p][f] != fixed
