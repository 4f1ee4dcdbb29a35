"""Integer kernel of the eigenvalue relation system and the mod-2 parity
test over it.

The system stacks one column per support eigenvalue: the exact cyclotomic
coefficients of the eigenvalue with an extra all-ones row encoding the
zero-sum constraint. Its integer kernel is computed by unimodular column
reduction, so the returned basis generates every integer solution.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import theta_element
from .pair_states import SupportPartition


@dataclass(frozen=True)
class RelationLattice:
    """Saturated integer kernel basis of the relation system.

    basis vectors have length `dimension` (one entry per support
    eigenvalue); index_map sends each position to its eigenvalue index.
    """

    dimension: int
    basis: tuple[tuple[int, ...], ...]
    index_map: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class ParityFunctional:
    """0/1 marks over support positions; 1 flags a minus-sign eigenvalue."""

    sigma: tuple[int, ...]

    def dot(self, vector: tuple[int, ...]) -> int:
        return sum(s * v for s, v in zip(self.sigma, vector))


def integer_kernel(columns: list[tuple[int, ...]],
                   index_map: tuple[int, ...] | None = None) -> RelationLattice:
    """Basis of {v integer : sum_j v_j * columns[j] = 0}, exactly.

    Runs gcd-style column elimination row by row, always reducing against
    the smallest-magnitude entry with nearest-integer quotients to keep
    intermediates small. The accumulated transform is unimodular, so the
    zero columns at the end span (and saturate) the kernel. The product
    of the input matrix with the basis is re-verified before returning.
    """
    d = len(columns)
    if index_map is None:
        index_map = tuple(range(d))
    if d == 0:
        return RelationLattice(0, (), index_map)
    rows = len(columns[0])
    if any(len(c) != rows for c in columns):
        raise ValueError("columns must all have the same length")

    mat = [list(c) for c in columns]            # mat[j][i]: column j, row i
    transform = [[int(i == j) for i in range(d)] for j in range(d)]
    live = list(range(d))

    for row in range(rows):
        active = [j for j in live if mat[j][row] != 0]
        while len(active) > 1:
            pivot = min(active, key=lambda j: abs(mat[j][row]))
            piv_val = mat[pivot][row]
            for j in active:
                if j == pivot:
                    continue
                q = _nearest_quotient(mat[j][row], piv_val)
                if q:
                    _submul(mat[j], mat[pivot], q)
                    _submul(transform[j], transform[pivot], q)
            active = [j for j in active if mat[j][row] != 0]
        if active:
            live.remove(active[0])

    basis = []
    for j in live:
        assert all(v == 0 for v in mat[j])
        vec = transform[j]
        first = next((v for v in vec if v != 0), 0)
        if first < 0:
            vec = [-v for v in vec]
        basis.append(tuple(vec))
    basis.sort()

    for vec in basis:
        for i in range(rows):
            total = sum(vec[j] * columns[j][i] for j in range(d))
            if total != 0:
                raise AssertionError("kernel verification failed")
    return RelationLattice(d, tuple(basis), index_map)


def build_relation_system(
    n: int,
    part: SupportPartition,
    restrict_to_support: bool = True,
) -> tuple[list[tuple[int, ...]], ParityFunctional, tuple[int, ...]]:
    """Columns, parity marks, and index map for the path relation system.

    One column per eigenvalue index k: the cyclotomic coefficients of the
    eigenvalue with a trailing 1 for the zero-sum constraint. By default
    only support indices enter; restrict_to_support=False builds the wider
    system over every k = 1..n-1 (a consistency/debug variant whose parity
    outcome must agree with the restricted one).
    """
    if restrict_to_support:
        indices = sorted(part.support)
    else:
        indices = [k for k in range(1, n)]
    if not indices:
        raise ValueError("empty support: the relation system is degenerate")
    columns = [theta_element(n, k).coefficients + (1,) for k in indices]
    sigma = ParityFunctional(tuple(1 if k in part.minus else 0 for k in indices))
    return columns, sigma, tuple(indices)


def parity_holds(lat: RelationLattice,
                 sigma: ParityFunctional) -> tuple[bool, tuple[int, ...] | None]:
    """Whether sigma is even on every lattice vector, by checking the basis.

    sigma(v) mod 2 is linear in v, so even parity on a generating set
    extends to the whole lattice. Returns (True, None) or (False, witness)
    where the witness is a basis vector with odd parity.
    """
    if len(sigma.sigma) != lat.dimension:
        raise ValueError(
            f"parity functional length {len(sigma.sigma)} does not match "
            f"lattice dimension {lat.dimension}")
    for vec in lat.basis:
        if sigma.dot(vec) % 2 != 0:
            return False, vec
    return True, None


def _nearest_quotient(num: int, den: int) -> int:
    """Integer q minimizing |num - q*den|."""
    q, r = divmod(num, den)
    if 2 * abs(r) > abs(den):
        q += 1
    return q


def _submul(target: list[int], source: list[int], factor: int) -> None:
    for i in range(len(target)):
        target[i] -= factor * source[i]
