from itertools import permutations

import numpy as np
import pytest
from conftest import COMPANION3, SWAP2, random_invertible, random_matrix

from lincode.errors import DimensionError, NotInvertibleError, OrderCapExceeded
from lincode.gf2 import (
    BitMatrix,
    BitVector,
    action_table,
    is_invertible,
    mat_mul,
    mat_vec_mul,
    matrix_order,
    matrix_power,
    nullity,
    rank,
)


def random_vector(rng, length):
    return BitVector.from_bits(rng.integers(0, 2, size=length).tolist())


# ---------------------------------------------------------------------------
# BitVector
# ---------------------------------------------------------------------------

def test_vector_string_bit_order():
    v = BitVector.from_string("1101")
    assert v.word == 0b1011
    assert v.to_string() == "1101"
    assert list(v) == [1, 1, 0, 1]


def test_vector_rejects_bits_beyond_length():
    with pytest.raises(DimensionError):
        BitVector(3, 0b1000)
    with pytest.raises(DimensionError):
        BitVector(65, 0)


def test_weight_matches_bit_by_bit_count(rng):
    for _ in range(200):
        length = int(rng.integers(1, 65))
        bits = rng.integers(0, 2, size=length).tolist()
        assert BitVector.from_bits(bits).weight() == sum(bits)


def test_dot_and_xor():
    a = BitVector.from_string("1100")
    b = BitVector.from_string("1010")
    assert a.dot(b) == 1
    assert (a ^ b).to_string() == "0110"
    with pytest.raises(DimensionError):
        a.dot(BitVector.from_string("101"))


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------

def test_identity_times_vector(rng):
    ident = BitMatrix.identity(15)
    for _ in range(10):
        v = random_vector(rng, 15)
        assert mat_vec_mul(ident, v) == v


def test_m15_first_column(shipped):
    e1 = BitVector.unit(15, 0)
    assert mat_vec_mul(shipped.m15, e1).to_string() == "111111011101111"


def test_matrix_times_zero_vector(shipped):
    assert mat_vec_mul(shipped.m15, BitVector.zeros(15)) == BitVector.zeros(15)


def test_mat_vec_dimension_mismatch(shipped):
    with pytest.raises(DimensionError):
        mat_vec_mul(shipped.m15, BitVector.zeros(14))


def test_times_identity(rng):
    a = random_matrix(rng, 6, 9)
    assert mat_mul(a, BitMatrix.identity(9)) == a


def test_m15_power_nine_is_inverse(shipped):
    m9 = matrix_power(shipped.m15, 9)
    assert mat_mul(shipped.m15, m9) == BitMatrix.identity(15)


def _perm_matrix(sigma):
    return BitMatrix(len(sigma), tuple(1 << sigma[i] for i in range(len(sigma))))


def test_permutation_products_compose():
    perms = list(permutations(range(3)))
    for s in perms:
        for t in perms:
            composed = tuple(t[s[i]] for i in range(3))
            assert mat_mul(_perm_matrix(s), _perm_matrix(t)) == _perm_matrix(composed)


def test_mat_mul_dimension_mismatch(rng):
    with pytest.raises(DimensionError):
        mat_mul(random_matrix(rng, 3, 4), random_matrix(rng, 3, 4))


def test_product_is_associative_on_vectors(rng):
    for _ in range(50):
        a = random_matrix(rng, 7, 5)
        b = random_matrix(rng, 5, 6)
        v = random_vector(rng, 6)
        assert mat_vec_mul(mat_mul(a, b), v) == mat_vec_mul(a, mat_vec_mul(b, v))


# ---------------------------------------------------------------------------
# Rank and order
# ---------------------------------------------------------------------------

def test_rank_basic(shipped):
    assert rank(BitMatrix.zeros(4, 6)) == 0
    assert rank(BitMatrix.identity(11)) == 11
    assert rank(shipped.gamma47) == 15


def test_rank_invariant_under_row_operations(rng):
    for _ in range(50):
        m = random_matrix(rng, 8, 10)
        words = list(m.words)
        i, j = rng.choice(8, size=2, replace=False)
        words[i], words[j] = words[j], words[i]
        assert rank(BitMatrix(10, tuple(words))) == rank(m)
        words[i] ^= words[j]
        assert rank(BitMatrix(10, tuple(words))) == rank(m)


def test_rank_leaves_input_untouched(shipped):
    before = shipped.gamma47.words
    rank(shipped.gamma47)
    assert shipped.gamma47.words == before


def test_nullity():
    assert nullity(BitMatrix.identity(4)) == 0
    assert nullity(BitMatrix.zeros(3, 5)) == 5


@pytest.mark.parametrize(
    ("matrix", "order"),
    [
        (BitMatrix.identity(5), 1),
        (SWAP2, 2),
        (COMPANION3, 7),
    ],
)
def test_matrix_order_small(matrix, order):
    assert matrix_order(matrix) == order


def test_m15_order(shipped):
    assert matrix_order(shipped.m15) == 10


def test_order_is_minimal(rng):
    for _ in range(10):
        m = random_invertible(rng, 6)
        t = matrix_order(m)
        ident = BitMatrix.identity(6)
        assert matrix_power(m, t) == ident
        assert all(matrix_power(m, j) != ident for j in range(1, t))


def test_is_invertible(rng, shipped):
    assert is_invertible(shipped.m15)
    assert is_invertible(random_invertible(rng, 6))
    assert not is_invertible(BitMatrix.from_rows(["11", "11"]))
    assert not is_invertible(random_matrix(rng, 2, 3))


def test_singular_matrix_has_no_order():
    with pytest.raises(NotInvertibleError, match="not invertible"):
        matrix_order(BitMatrix.from_rows(["11", "11"]))


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        matrix_order(COMPANION3, cap=3)


def test_order_needs_square(rng):
    with pytest.raises(DimensionError):
        matrix_order(random_matrix(rng, 2, 3))


# ---------------------------------------------------------------------------
# Views
# ---------------------------------------------------------------------------

def test_transpose_and_columns(rng):
    m = random_matrix(rng, 5, 8)
    t = m.transpose()
    assert t.shape == (8, 5)
    assert t.transpose() == m
    assert list(t.words) == m.columns()


def test_array_round_trip(rng):
    arr = rng.integers(0, 2, size=(4, 9)).astype(np.uint8)
    assert np.array_equal(BitMatrix.from_array(arr).to_array(), arr)


def test_action_table_matches_products(rng):
    m = random_invertible(rng, 5)
    table = action_table(m)
    for v in range(32):
        assert int(table[v]) == mat_vec_mul(m, BitVector(5, v)).word
