"""Gram matrices of Fock states and the permutation-group diagnostics.

Permutations are tuples in one-line notation over 1..N and are always
enumerated in lexicographic order (``itertools.permutations`` of a sorted
range).  Composition is ``(pi * mu)(k) = pi(mu(k))``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterable, Sequence

from .algebra import AlgebraSpec, GuardExceeded, _inner
from .linalg import RationalMatrix

ENTRY_GUARD = 10**6


class SymmetryViolation(ValueError):
    """The scalar product computed by the rewrite rule is not symmetric."""

    def __init__(self, u, v, uv, vu):
        self.pair = (tuple(u), tuple(v))
        self.values = (uv, vu)
        super().__init__(f"<{u}|{v}> = {uv} but <{v}|{u}> = {vu}")


@dataclass(frozen=True)
class RegularDecomposition:
    coefficients: dict  # permutation tuple -> Fraction
    residual: bool


def lex_permutations(N: int) -> list:
    return list(permutations(range(1, N + 1)))


def compose(pi: Sequence[int], mu: Sequence[int]) -> tuple:
    return tuple(pi[m - 1] for m in mu)


def inverse(pi: Sequence[int]) -> tuple:
    inv = [0] * len(pi)
    for k, v in enumerate(pi, start=1):
        inv[v - 1] = k
    return tuple(inv)


def gram_matrix(spec: AlgebraSpec, basis: Sequence[Sequence[int]], check_symmetry: bool = True) -> RationalMatrix:
    """Matrix of scalar products ``<basis[r] | basis[c]>``.

    Both triangles are computed independently; a mismatch raises
    :class:`SymmetryViolation`.
    """
    basis = [tuple(w) for w in basis]
    lengths = {len(w) for w in basis}
    if len(lengths) > 1:
        raise ValueError("basis words must share one particle number")
    if lengths and max(lengths) > spec.max_n:
        raise GuardExceeded(f"N={max(lengths)} exceeds max_n={spec.max_n}")
    if len(basis) ** 2 > ENTRY_GUARD:
        raise GuardExceeded(f"{len(basis)}x{len(basis)} Gram exceeds the entry guard")
    for w in basis:
        for k in w:
            spec.check_mode(k)
    n = len(basis)
    rows = [[_inner(spec, basis[r], basis[c]) for c in range(n)] for r in range(n)]
    if check_symmetry:
        for r in range(n):
            for c in range(r + 1, n):
                if rows[r][c] != rows[c][r]:
                    raise SymmetryViolation(basis[r], basis[c], rows[r][c], rows[c][r])
    return RationalMatrix(rows)


def generic_basis(indices: Sequence[int]) -> list:
    """Words ``(i_pi(1), ..., i_pi(N))`` for pi in lexicographic order."""
    idx = tuple(indices)
    return [tuple(idx[k - 1] for k in pi) for pi in lex_permutations(len(idx))]


def gram_generic(spec: AlgebraSpec, indices: Sequence[int], check_symmetry: bool = True) -> RationalMatrix:
    """The N! x N! matrix of all orderings of N distinct creation indices."""
    indices = tuple(indices)
    if len(set(indices)) != len(indices):
        raise ValueError(f"indices {indices} are not distinct")
    return gram_matrix(spec, generic_basis(indices), check_symmetry)


def left_invariance_check(A: RationalMatrix, N: int) -> bool:
    """``A[pi mu, pi nu] == A[mu, nu]`` for all adjacent transpositions pi."""
    if A.rows != factorial(N) or A.cols != A.rows:
        raise ValueError(f"matrix is not {factorial(N)}x{factorial(N)}")
    perms = lex_permutations(N)
    pos = {p: k for k, p in enumerate(perms)}
    for s in range(1, N):
        pi = list(range(1, N + 1))
        pi[s - 1], pi[s] = pi[s], pi[s - 1]
        moved = [pos[compose(pi, mu)] for mu in perms]
        for a in range(len(perms)):
            for b in range(len(perms)):
                if A[moved[a], moved[b]] != A[a, b]:
                    return False
    return True


def regular_decompose(A: RationalMatrix, N: int) -> RegularDecomposition:
    """Read ``c(pi)`` off the identity row and rebuild ``sum c(pi) R(pi)``.

    ``R(pi)[mu, nu] = 1`` iff ``nu = mu pi``, so the rebuilt entry at
    ``(mu, nu)`` is ``c(mu^-1 nu)``.
    """
    if A.rows != factorial(N) or A.cols != A.rows:
        raise ValueError(f"matrix is not {factorial(N)}x{factorial(N)}")
    perms = lex_permutations(N)
    coeffs = {pi: A[0, k] for k, pi in enumerate(perms)}
    residual = False
    for a, mu in enumerate(perms):
        mu_inv = inverse(mu)
        for b, nu in enumerate(perms):
            if coeffs[compose(mu_inv, nu)] != A[a, b]:
                residual = True
                break
        if residual:
            break
    return RegularDecomposition(coeffs, residual)


def multiplicities(word: Sequence[int], M: int) -> tuple:
    counts = Counter(word)
    return tuple(counts.get(k, 0) for k in range(1, M + 1))


def all_words(M: int, N: int) -> list:
    return [tuple(w) for w in product(range(1, M + 1), repeat=N)]


def multiset_orthogonality_check(spec: AlgebraSpec, N: int) -> bool:
    """True iff words with different occupation vectors are orthogonal."""
    if N > spec.max_n:
        raise GuardExceeded(f"N={N} exceeds max_n={spec.max_n}")
    words = all_words(spec.M, N)
    occ = [multiplicities(w, spec.M) for w in words]
    for a, u in enumerate(words):
        for b, v in enumerate(words):
            if occ[a] != occ[b] and _inner(spec, u, v) != 0:
                return False
    return True


def multiset_words(multiset: Iterable[int]) -> list:
    """Distinct orderings of a multiset of modes, lexicographically sorted."""
    return sorted(set(permutations(sorted(multiset))))
