import itertools
from fractions import Fraction

import numpy as np
import pytest

from lpgst.pair_states import path_support_partition
from lpgst.relation_lattice import (ParityFunctional, RelationLattice,
                                    build_relation_system, integer_kernel,
                                    parity_holds)


def _in_lattice(basis, vector):
    """Exact membership of an integer vector in the span of basis vectors."""
    if not basis:
        return all(v == 0 for v in vector)
    rows = [[Fraction(b[i]) for b in basis] + [Fraction(vector[i])]
            for i in range(len(vector))]
    cols = len(basis)
    pivot_row = 0
    pivot_cols = []
    for c in range(cols):
        pivot = next((r for r in range(pivot_row, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        lead = rows[pivot_row][c]
        rows[pivot_row] = [x / lead for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][c] != 0:
                factor = rows[r][c]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_cols.append(c)
        pivot_row += 1
    # inconsistent system -> not in the rational span
    for r in range(pivot_row, len(rows)):
        if rows[r][cols] != 0:
            return False
    coeffs = {c: rows[i][cols] for i, c in enumerate(pivot_cols)}
    return all(coeffs.get(c, Fraction(0)).denominator == 1 for c in range(cols))


def test_integer_kernel_path_four_system():
    part = path_support_partition(4, 1)
    columns, sigma, index_map = build_relation_system(4, part)
    assert len(columns) == 3
    assert index_map == (1, 2, 3)
    assert sigma.sigma == (0, 1, 0)
    assert all(col[-1] == 1 for col in columns)  # zero-sum constraint row
    lattice = integer_kernel(columns, index_map)
    assert lattice.basis == ((1, -2, 1),)


def test_integer_kernel_injective_map_has_empty_kernel():
    columns = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert integer_kernel(columns).basis == ()


def test_integer_kernel_zero_column():
    columns = [(1, 2), (0, 0), (3, 5)]
    lattice = integer_kernel(columns)
    assert (0, 1, 0) in lattice.basis


def test_integer_kernel_exactness_on_random_matrices():
    rng = np.random.default_rng(29)
    for _ in range(40):
        rows = int(rng.integers(1, 5))
        d = int(rng.integers(1, 7))
        mat = rng.integers(-4, 5, size=(rows, d))
        columns = [tuple(int(x) for x in mat[:, j]) for j in range(d)]
        lattice = integer_kernel(columns)
        for vec in lattice.basis:
            combo = mat @ np.array(vec)
            assert np.array_equal(combo, np.zeros(rows, dtype=combo.dtype))
        assert len(lattice.basis) == d - np.linalg.matrix_rank(mat)


def test_integer_kernel_saturated_at_small_scale():
    rng = np.random.default_rng(31)
    for _ in range(15):
        rows = int(rng.integers(1, 4))
        d = 4
        mat = rng.integers(-3, 4, size=(rows, d))
        columns = [tuple(int(x) for x in mat[:, j]) for j in range(d)]
        basis = integer_kernel(columns).basis
        for point in itertools.product(range(-2, 3), repeat=d):
            if any(mat @ np.array(point)):
                continue
            assert _in_lattice(basis, point), (mat, point)


def test_build_relation_system_small_paths():
    columns, sigma, index_map = build_relation_system(3, path_support_partition(3, 1))
    assert index_map == (1, 2)
    assert sigma.sigma == (0, 1)
    assert columns[0] == (1, 0, 1)   # theta_1 = 1 plus the ones row
    assert columns[1] == (3, 0, 1)   # theta_2 = 3

    # single support eigenvalue: the zero-sum row forces an empty kernel
    columns, _, index_map = build_relation_system(2, path_support_partition(2, 1))
    assert index_map == (1,)
    assert columns == [(2, 0, 1)]
    assert integer_kernel(columns, index_map).basis == ()


def test_build_relation_system_rejects_empty_support():
    part = path_support_partition(4, 1)
    empty = type(part)(plus=frozenset(), minus=frozenset(),
                       excluded=part.plus | part.minus | part.excluded)
    with pytest.raises(ValueError, match="degenerate"):
        build_relation_system(4, empty)


def test_parity_holds_even_basis():
    lattice = RelationLattice(3, ((1, -2, 1),), (1, 2, 3))
    holds, witness = parity_holds(lattice, ParityFunctional((0, 1, 0)))
    assert holds and witness is None


def test_parity_holds_odd_basis_returns_certificate():
    part = path_support_partition(9, 1)
    columns, sigma, index_map = build_relation_system(9, part)
    lattice = integer_kernel(columns, index_map)
    holds, witness = parity_holds(lattice, sigma)
    assert not holds
    assert witness in lattice.basis
    assert sigma.dot(witness) % 2 == 1


def test_parity_holds_empty_basis_vacuous():
    lattice = RelationLattice(2, (), (1, 2))
    holds, witness = parity_holds(lattice, ParityFunctional((1, 1)))
    assert holds and witness is None


def test_parity_holds_dimension_check():
    lattice = RelationLattice(3, ((1, -2, 1),), (1, 2, 3))
    with pytest.raises(ValueError, match="dimension"):
        parity_holds(lattice, ParityFunctional((0, 1)))


def test_parity_invariant_under_unimodular_basis_change():
    for n, a in [(9, 1), (8, 1), (12, 1), (12, 2), (15, 2)]:
        columns, sigma, index_map = build_relation_system(
            n, path_support_partition(n, a))
        lattice = integer_kernel(columns, index_map)
        expected, _ = parity_holds(lattice, sigma)
        basis = [list(v) for v in lattice.basis]
        if len(basis) >= 2:
            # elementary unimodular moves: add rows, swap, negate
            basis[0] = [x + 3 * y for x, y in zip(basis[0], basis[1])]
            basis[-1] = [-x for x in basis[-1]]
            basis[0], basis[-1] = basis[-1], basis[0]
        transformed = RelationLattice(lattice.dimension,
                                      tuple(tuple(v) for v in basis),
                                      index_map)
        got, _ = parity_holds(transformed, sigma)
        assert got == expected, (n, a)


def test_restricted_and_generalized_systems_agree():
    for n in range(2, 25):
        for a in range(1, n):
            if 2 * a == n:
                continue
            part = path_support_partition(n, a)
            cols_r, sig_r, idx_r = build_relation_system(n, part)
            cols_g, sig_g, idx_g = build_relation_system(
                n, part, restrict_to_support=False)
            assert idx_g == tuple(range(1, n))
            holds_r, _ = parity_holds(integer_kernel(cols_r, idx_r), sig_r)
            holds_g, _ = parity_holds(integer_kernel(cols_g, idx_g), sig_g)
            assert holds_r == holds_g, (n, a)


def test_columns_must_share_length():
    with pytest.raises(ValueError, match="same length"):
        integer_kernel([(1, 2), (1,)])
