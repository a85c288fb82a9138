import pytest
from conftest import COMPANION3, HAMMING_ROWS, SWAP2, random_invertible

from lincode.errors import DimensionError, DomainError, EnumerationTooLarge
from lincode.gf2 import BitMatrix, BitVector, mat_vec_mul
from lincode.orbits import (
    MatrixGroup,
    burnside_count,
    column_orbit_decomposition,
    format_partition,
    generate_cyclic,
    orbit_partition,
)


def test_cyclic_group_elements():
    group = generate_cyclic(COMPANION3)
    assert group.order == 7
    assert group.elements[0] == BitMatrix.identity(3)
    assert len(set(group.elements)) == 7


def test_singer_cycle_is_transitive():
    partition = orbit_partition(generate_cyclic(COMPANION3))
    assert partition.num_orbits == 1
    assert partition.sizes == (7,)
    assert partition.reps == (1,)


def test_trivial_group_orbits_are_singletons():
    partition = orbit_partition(MatrixGroup.trivial(3))
    assert partition.reps == tuple(range(1, 8))
    assert partition.sizes == (1,) * 7
    assert burnside_count(MatrixGroup.trivial(3)) == 7


def test_swap_orbits():
    group = generate_cyclic(SWAP2)
    partition = orbit_partition(group)
    assert partition.reps == (1, 3)
    assert partition.sizes == (2, 1)
    assert partition.members(0) == [1, 2]
    assert partition.orbit_id(3) == 1
    assert burnside_count(group) == 2
    assert format_partition(partition) == "0 2 1\n1 1 3\n"


def test_zero_vector_has_no_orbit():
    partition = orbit_partition(MatrixGroup.trivial(2))
    with pytest.raises(DomainError):
        partition.orbit_id(0)


def test_orbits_of_random_groups(rng):
    for _ in range(10):
        group = generate_cyclic(random_invertible(rng, 6))
        partition = orbit_partition(group)
        assert sum(partition.sizes) == 63
        assert all(group.order % s == 0 for s in partition.sizes)
        assert partition.num_orbits == burnside_count(group)
        assert partition.num_orbits == orbit_partition(group.transpose()).num_orbits
        # Orbits are closed under the generator.
        for v in range(1, 64):
            image = mat_vec_mul(group.generator, BitVector(6, v)).word
            assert partition.orbit_id(image) == partition.orbit_id(v)


def test_visit_order_does_not_change_partition(rng):
    group = generate_cyclic(random_invertible(rng, 7))
    forward = orbit_partition(group)
    order = (1 + rng.permutation(127)).tolist()
    assert orbit_partition(group, visit_order=order).same_as(forward)


def test_incomplete_visit_order():
    with pytest.raises(DomainError):
        orbit_partition(MatrixGroup.trivial(3), visit_order=[1, 2, 3])
    with pytest.raises(DomainError):
        orbit_partition(MatrixGroup.trivial(3), visit_order=[0])


def test_orbit_budget():
    with pytest.raises(EnumerationTooLarge):
        orbit_partition(MatrixGroup.trivial(5), budget=4)


def test_m15_group(m15_group, m15_partition):
    assert m15_group.order == 10
    assert m15_partition.num_orbits == 3383
    assert burnside_count(m15_group) == 3383
    assert sum(m15_partition.sizes) == (1 << 15) - 1


@pytest.mark.slow
def test_m15_group_transpose(m15_group):
    assert orbit_partition(m15_group.transpose()).num_orbits == 3383


def test_hamming_columns_under_trivial_group():
    gen = BitMatrix.from_rows(HAMMING_ROWS)
    dec = column_orbit_decomposition(gen, orbit_partition(MatrixGroup.trivial(4)))
    assert set(dec.counts) == {0, 1, 3, 7, 10, 12, 13}
    assert dec.is_union_of_orbits
    assert dec.total_columns == 7
    x = dec.selection(15)
    assert sum(x) == 7
    assert x[13] == 1 and x[2] == 0


def test_partial_orbit_is_not_whole():
    gen = BitMatrix.from_columns([1, 3], 2)
    dec = column_orbit_decomposition(gen, orbit_partition(generate_cyclic(SWAP2)))
    assert dec.whole == {0: None, 1: 1}
    assert not dec.is_union_of_orbits
    with pytest.raises(DomainError):
        dec.selection(2)


def test_column_decomposition_errors():
    partition = orbit_partition(MatrixGroup.trivial(2))
    with pytest.raises(DimensionError):
        column_orbit_decomposition(BitMatrix.identity(3), partition)
    with pytest.raises(DomainError, match="column 1 is zero"):
        column_orbit_decomposition(BitMatrix.from_rows(["10", "10"]), partition)


def test_full_singer_orbit_as_columns():
    gen = BitMatrix.from_columns(list(range(1, 8)), 3)
    dec = column_orbit_decomposition(gen, orbit_partition(generate_cyclic(COMPANION3)))
    assert dec.counts == {0: 7}
    assert dec.whole == {0: 1}
    assert dec.is_union_of_orbits


def test_identity_columns_are_singletons():
    dec = column_orbit_decomposition(BitMatrix.identity(4), orbit_partition(MatrixGroup.trivial(4)))
    assert dec.counts == {0: 1, 1: 1, 3: 1, 7: 1}
    assert burnside_count(MatrixGroup.trivial(4)) == 15
