"""
Wall entries straight from their definition as determinants. Slow, and only
used to check the recurrences.
"""

from typing import List

from ..algebra import Domain
from ..seqgen.sequences import SequenceSpec


def toeplitz_matrix(terms: List[int], order: int) -> List[List[int]]:
    """
    The ``order`` x ``order`` matrix with entry ``(i, j) = terms[order - 1 + j - i]``,
    i.e. ``S(n + j - i)`` for ``terms = S(n-order+1) .. S(n+order-1)``
    """
    return [[terms[order - 1 + j - i] for j in range(order)] for i in range(order)]


def det_bareiss(matrix: List[List[int]]) -> int:
    """Fraction free elimination over the integers"""
    size = len(matrix)
    if size == 0:
        return 1
    work = [list(row) for row in matrix]
    sign = 1
    previous = 1
    for k in range(size - 1):
        if not work[k][k]:
            for i in range(k + 1, size):
                if work[i][k]:
                    work[i], work[k] = work[k], work[i]
                    sign = -sign
                    break
            else:
                return 0
        pivot = work[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                # exact by Sylvester's determinant identity
                work[i][j] = (pivot * work[i][j] - work[i][k] * work[k][j]) // previous
            work[i][k] = 0
        previous = pivot
    return sign * work[size - 1][size - 1]


def det_mod_p(matrix: List[List[int]], domain: Domain) -> int:
    """Gaussian elimination over the prime field ``domain``"""
    p = domain.p
    work = [[value % p for value in row] for row in matrix]
    size = len(work)
    det = 1
    for k in range(size):
        pivot_row = next((i for i in range(k, size) if work[i][k]), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
            det = -det
        pivot = work[k][k]
        det = det * pivot % p
        inverse = domain.inverse(pivot)
        for i in range(k + 1, size):
            factor = work[i][k] * inverse % p
            if factor:
                row, pivot_values = work[i], work[k]
                for j in range(k, size):
                    row[j] = (row[j] - factor * pivot_values[j]) % p
    return det % p


def hankel_oracle(seq: SequenceSpec, m: int, n: int) -> int:
    """
    ``S(m, n)``: the determinant of order ``m + 1`` with entries
    ``S(n + j - i)``. Rows -2 and -1 are 0 and 1.
    """
    if m < -2:
        raise ValueError('Walls start at row -2')
    if m == -2:
        return 0
    if m == -1:
        return 1
    order = m + 1
    terms = seq.terms(n - m, 2 * m + 1)
    matrix = toeplitz_matrix(terms, order)
    if seq.domain.is_field:
        return det_mod_p(matrix, seq.domain)
    return det_bareiss(matrix)
