import pytest

from balsum.arith import ALPHA
from balsum.sequences import (
    balancing,
    balancing_binet,
    balancing_fast,
    gf_coefficients,
    lucas_balancing,
    lucas_balancing_binet,
    lucas_balancing_fast,
    sequence_table,
)

# A001109, first eleven terms.
GOLDEN_B = [0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105, 7997214]


def test_balancing_golden_values():
    assert [balancing(n) for n in range(11)] == GOLDEN_B


def test_balancing_spot_values():
    assert balancing(0) == 0
    assert balancing(6) == 6930
    assert balancing(10) == 7997214


@pytest.mark.parametrize(
    "fn", [balancing, lucas_balancing, balancing_fast, balancing_binet]
)
def test_negative_index_rejected(fn):
    with pytest.raises(ValueError):
        fn(-1)


def test_lucas_balancing_values():
    assert lucas_balancing(0) == 1
    assert lucas_balancing(1) == 3
    assert lucas_balancing(2) == 17
    assert lucas_balancing(3) == 6 * 17 - 3


def test_companion_identity():
    # 6*B(m) - 2*B(m-1) == 2*C(m); the m=2 instance is 34.
    assert 6 * balancing(2) - 2 * balancing(1) == 34 == 2 * lucas_balancing(2)
    for m in range(1, 101):
        assert 6 * balancing(m) - 2 * balancing(m - 1) == 2 * lucas_balancing(m)


def test_fast_spot_values():
    assert balancing_fast(5) == 1189
    assert balancing_fast(0) == 0
    assert balancing_fast(64) == balancing(64)


def test_binet_spot_values():
    assert balancing_binet(1) == 1
    assert balancing_binet(2) == 6
    assert balancing_binet(0) == 0


def test_three_way_agreement():
    for n in range(201):
        b = balancing(n)
        assert balancing_fast(n) == b
        assert balancing_binet(n) == b


def test_lucas_variants_agree():
    for n in range(101):
        c = lucas_balancing(n)
        assert lucas_balancing_fast(n) == c
        assert lucas_balancing_binet(n) == c


def test_cassini():
    assert balancing(1) * balancing(3) == balancing(2) ** 2 - 1  # 35 == 36 - 1
    for n in range(1, 101):
        assert balancing(n - 1) * balancing(n + 1) == balancing(n) ** 2 - 1


def test_pell_relation():
    for n in range(101):
        assert lucas_balancing(n) ** 2 - 8 * balancing(n) ** 2 == 1


def test_binet_parity():
    # ALPHA**n = C(n) + 2*B(n)*sqrt(2): rational part is C, sqrt part is even.
    for n in range(101):
        power = ALPHA**n
        assert power.b.denominator == 1 and power.b.numerator % 2 == 0
        assert power.a == lucas_balancing(n)
        assert power.b == 2 * balancing(n)


def test_gf_coefficients():
    assert gf_coefficients(3) == [0, 1, 6]
    assert gf_coefficients(1) == [0]
    assert gf_coefficients(11) == GOLDEN_B


def test_gf_coefficients_rejects_nonpositive():
    with pytest.raises(ValueError):
        gf_coefficients(0)


def test_gf_truncated_product():
    # (1 - 6z + z^2) * (sum of B(n) z^n up to N) == z, up to degree N-1.
    N = 50
    series = sequence_table(N)
    for j in range(N):
        coeff = series[j]
        if j >= 1:
            coeff -= 6 * series[j - 1]
        if j >= 2:
            coeff += series[j - 2]
        assert coeff == (1 if j == 1 else 0)


def test_sequence_table():
    assert sequence_table(10) == GOLDEN_B
    assert sequence_table(4, "C") == [1, 3, 17, 99, 577]
    assert sequence_table(0) == [0]
    with pytest.raises(ValueError):
        sequence_table(5, "X")
    with pytest.raises(ValueError):
        sequence_table(-1)
