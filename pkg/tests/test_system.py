import numpy as np
import pytest
from conftest import COMPANION3, HAMMING_ROWS, random_invertible

import lincode.system as system_module
from lincode.code import LinearCode, weight_distribution
from lincode.errors import (
    ConsistencyError,
    DomainError,
    EnumerationTooLarge,
    FormatError,
    RankDeficientError,
)
from lincode.gf2 import BitMatrix
from lincode.orbits import MatrixGroup, column_orbit_decomposition, generate_cyclic, orbit_partition
from lincode.system import (
    attach_group,
    build_system,
    coefficient_rows,
    evaluate_selection,
    format_selection,
    format_system,
    materialize,
    parse_selection,
    parse_system,
    read_system,
    row_weights,
    write_system,
)

PARITY_TEXT = (
    "DIOSYS k=2 n=3 d=2 dmax=- rows=3 cols=3\n"
    "COL 0 1 1\n"
    "COL 1 1 2\n"
    "COL 2 1 3\n"
    "ROW 0 1 1 0 1\n"
    "ROW 1 2 0 1 1\n"
    "ROW 2 3 1 1 0\n"
)


@pytest.fixture
def parity_system():
    return build_system(MatrixGroup.trivial(2), 3, 2)


def test_trivial_group_system(parity_system):
    assert parity_system.A.tolist() == [[1, 0, 1], [0, 1, 1], [1, 1, 0]]
    assert parity_system.col_reps == (1, 2, 3)
    assert parity_system.lengths.tolist() == [1, 1, 1]


def test_singer_system_is_one_by_one():
    system = build_system(generate_cyclic(COMPANION3), 7, 4)
    assert system.A.tolist() == [[4]]
    code = materialize(system, [1])
    assert weight_distribution(code).nonzero() == [(0, 1), (4, 7)]


def test_row_sums(rng):
    for _ in range(5):
        system = build_system(generate_cyclic(random_invertible(rng, 6)), 20, 4)
        assert np.all(system.A.sum(axis=1) == 32)
        assert system.A.shape == (system.num_rows, system.num_cols)
        assert int(system.lengths.sum()) == 63


def test_rows_give_codeword_weights(rng):
    group = generate_cyclic(random_invertible(rng, 5))
    system = build_system(group, 10, 1)
    x = rng.integers(0, 3, size=system.num_cols)
    columns = [c for j, m in enumerate(x) for c in system.column_members(j) * int(m)]
    weights = row_weights(system, x)
    for i, v in enumerate(system.row_reps):
        direct = sum((v & c).bit_count() & 1 for c in columns)
        assert weights[i] == direct


def test_coefficient_rows_for_any_vector(rng):
    partition = orbit_partition(generate_cyclic(random_invertible(rng, 6)))
    vectors = list(range(1, 64))
    A = coefficient_rows(vectors, partition)
    for v in vectors:
        for j in range(partition.num_orbits):
            direct = sum((v & c).bit_count() & 1 for c in partition.members(j))
            assert A[v - 1, j] == direct


def test_rows_agree_across_orbit_members(rng):
    for _ in range(5):
        system = build_system(generate_cyclic(random_invertible(rng, 6)), 20, 4)
        orbits = system.row_orbits
        assert orbits.reps == system.row_reps
        for i in range(orbits.num_orbits):
            block = coefficient_rows(orbits.members(i), system.col_orbits)
            assert np.all(block == system.A[i])


def test_parallel_coefficient_rows_match(rng, monkeypatch):
    partition = orbit_partition(generate_cyclic(random_invertible(rng, 8)))
    vectors = list(range(1, 256))
    serial = coefficient_rows(vectors, partition)
    monkeypatch.setattr(system_module, "_BATCH_ELEMENTS", 1 << 12)
    assert np.array_equal(coefficient_rows(vectors, partition, workers=2), serial)


def test_targets_validated():
    with pytest.raises(DomainError):
        build_system(MatrixGroup.trivial(2), 3, 0)
    with pytest.raises(DomainError):
        build_system(MatrixGroup.trivial(2), 3, 2, d_max=1)
    with pytest.raises(EnumerationTooLarge):
        build_system(MatrixGroup.trivial(3), 7, 2, budget=2)


def test_parity_selection(parity_system):
    report = evaluate_selection(parity_system, [1, 1, 1])
    assert report.feasible and report.rank_ok
    assert (report.total_length, report.min_row_weight, report.max_row_weight) == (3, 2, 2)
    code = materialize(parity_system, [1, 1, 1])
    assert code.gen.to_strings() == ["101", "011"]


def test_infeasible_and_degenerate_selections(parity_system):
    with pytest.raises(DomainError, match="infeasible"):
        materialize(parity_system, [1, 1, 0])
    with pytest.raises(RankDeficientError, match="degenerate"):
        materialize(parity_system, [1, 0, 0])
    assert not evaluate_selection(parity_system, [1, 0, 0]).rank_ok


def test_hamming_selection_under_trivial_group():
    gen = BitMatrix.from_rows(HAMMING_ROWS)
    group = MatrixGroup.trivial(4)
    system = build_system(group, 7, 3, 7)
    x = column_orbit_decomposition(gen, system.col_orbits).selection(system.num_cols)
    report = evaluate_selection(system, x)
    assert report.feasible
    assert (report.min_row_weight, report.max_row_weight) == (3, 7)
    code = materialize(system, x)
    assert weight_distribution(code) == weight_distribution(LinearCode(gen))


def test_system_text_format(parity_system):
    assert format_system(parity_system) == PARITY_TEXT
    assert parse_system(PARITY_TEXT).same_as(parity_system)


def test_system_file_round_trip(tmp_path, rng):
    system = build_system(generate_cyclic(random_invertible(rng, 5)), 12, 3, 9)
    path = tmp_path / "sys.txt"
    write_system(path, system)
    assert read_system(path).same_as(system)


def test_parsed_system_needs_group_for_members():
    system = parse_system(format_system(build_system(generate_cyclic(COMPANION3), 7, 4)))
    with pytest.raises(DomainError):
        system.column_members(0)
    attached = attach_group(system, generate_cyclic(COMPANION3))
    assert attached.column_members(0) == list(range(1, 8))
    with pytest.raises(ConsistencyError):
        attach_group(system, MatrixGroup.trivial(3))


def test_parse_system_errors():
    with pytest.raises(FormatError) as err:
        parse_system("SYSTEM k=2\n")
    assert err.value.line == 1
    with pytest.raises(FormatError) as err:
        parse_system(PARITY_TEXT.replace("ROW 1 2 0 1 1", "ROW 1 2 0 1"))
    assert err.value.line == 6
    with pytest.raises(FormatError):
        parse_system(PARITY_TEXT.replace("COL 2 1 3", "COL 2 1 zz"))


def test_selection_text():
    assert format_selection([1, 0, 2]) == "0 1\n2 2\n"
    assert parse_selection("# chosen\n0 1\n2 2\n", 4) == (1, 0, 2, 0)
    with pytest.raises(FormatError):
        parse_selection("5 1\n", 4)
    with pytest.raises(FormatError):
        parse_selection("0 -1\n", 4)


@pytest.fixture(scope="module")
def m15_system(m15_group):
    return build_system(m15_group, 47, 16, 32)


@pytest.mark.slow
def test_m15_system(m15_system):
    system = m15_system
    assert system.A.shape == (3383, 3383)
    assert np.all(system.A.sum(axis=1) == 1 << 14)


@pytest.mark.slow
def test_m15_rows_agree_across_orbit_members(m15_system, rng):
    orbits = m15_system.row_orbits
    for i in rng.choice(orbits.num_orbits, size=40, replace=False).tolist():
        block = coefficient_rows(orbits.members(i), m15_system.col_orbits)
        assert np.all(block == m15_system.A[i])


@pytest.mark.slow
def test_gamma47_selection(m15_system, shipped):
    dec = column_orbit_decomposition(shipped.gamma47, m15_system.col_orbits)
    x = dec.selection(m15_system.num_cols)
    assert sum(1 for m in x if m) == 7

    report = evaluate_selection(m15_system, x)
    assert report.total_length == 47
    assert (report.min_row_weight, report.max_row_weight) == (16, 32)
    assert report.feasible

    code = materialize(m15_system, x)
    assert (code.n, code.k, code.min_distance, code.max_weight) == (47, 15, 16, 32)
