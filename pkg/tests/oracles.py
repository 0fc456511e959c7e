"""Independent brute-force oracles used by the test suite.

These deliberately avoid the library's subspace/series machinery: nilpotency
is decided by evaluating every parenthesized product of basis elements, and
flag length by multiplying out every operator word. They exist to cross-check
the production algorithms, so they must stay dumb.
"""

from __future__ import annotations

from leibniz_engel.algebra import LeibnizAlgebra, mult_coords
from leibniz_engel.linalg import Matrix


def products_of_length(algebra: LeibnizAlgebra, length: int) -> set:
    """Values of all length-k products of basis elements, every
    parenthesization: any product splits at the top into a length-i and a
    length-(k-i) product, so dynamic programming over split sizes covers
    every binary tree."""
    n = algebra.dim
    f = algebra.field
    basis = {tuple(f.one() if t == i else f.zero() for t in range(n))
             for i in range(n)}
    values = {1: basis}
    for k in range(2, length + 1):
        vals = set()
        for i in range(1, k):
            for u in values[i]:
                for v in values[k - i]:
                    vals.add(mult_coords(algebra, u, v))
        values[k] = vals
    return values[length]


def brute_force_nilpotent(algebra: LeibnizAlgebra) -> bool:
    """Nilpotent iff every product of dim+1 basis elements vanishes."""
    return all(all(x == 0 for x in v)
               for v in products_of_length(algebra, algebra.dim + 1))


def min_vanishing_word_length(operators: list, cap: int) -> int | None:
    """Least k <= cap with every length-k word in the operators zero.

    Words are left-to-right products, enumerated exhaustively with value
    deduplication; any valid annihilator flag of length k forces all
    length-k words to vanish and conversely, so this is the minimal flag
    length when it exists.
    """
    if not operators:
        return 1
    field, size = operators[0].field, operators[0].rows

    def to_mat(entries):
        return Matrix(field, size, size, entries)

    words = {m.entries for m in operators}
    for k in range(1, cap + 1):
        if all(to_mat(e).is_zero() for e in words):
            return k
        words = {(g @ to_mat(e)).entries for g in operators for e in words}
    return None
