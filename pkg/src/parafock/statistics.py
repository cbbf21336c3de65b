"""State counting: block ranks d_λ, Fock dimensions D(M, N), null states and
extended Haldane statistics parameters."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Iterator, Sequence

from .algebra import AlgebraSpec, FockState, GuardExceeded
from .gram import ENTRY_GUARD, all_words, gram_matrix, multiset_orthogonality_check, multiset_words
from .linalg import null_basis, rank

Partition = tuple  # weakly decreasing positive ints


def partitions(n: int, max_parts: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse-lexicographic order: (n), (n-1, 1), ..."""
    if max_parts is None:
        max_parts = n

    def gen(rest, largest, parts_left):
        if rest == 0:
            yield ()
            return
        if parts_left == 0:
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first, parts_left - 1):
                yield (first,) + tail

    yield from gen(n, n, max_parts)


def multiset_of(lam: Partition, modes: Sequence[int] | None = None) -> tuple:
    """Mode ``modes[k]`` repeated ``lam[k]`` times; modes default to 1..k."""
    if modes is None:
        modes = range(1, len(lam) + 1)
    out = []
    for m, part in zip(modes, lam):
        out.extend([m] * part)
    return tuple(out)


def assignment_count(lam: Partition, M: int) -> int:
    """m_λ(M): number of distinct occupation vectors of shape λ on M modes,
    i.e. the multinomial M! / ((M-k)! ∏ c_j!) over repeated part sizes."""
    k = len(lam)
    if k > M:
        return 0
    return factorial(M) // (factorial(M - k) * prod(factorial(c) for c in Counter(lam).values()))


def block_basis(lam: Partition, modes: Sequence[int] | None = None) -> list:
    return multiset_words(multiset_of(lam, modes))


def _check_width(spec: AlgebraSpec, lam: Partition) -> None:
    if len(lam) > spec.M:
        raise ValueError(f"partition {lam} has more parts than M={spec.M}")
    if sum(lam) > spec.max_n:
        raise GuardExceeded(f"|λ|={sum(lam)} exceeds max_n={spec.max_n}")


def d_lambda(spec: AlgebraSpec, lam: Partition, modes: Sequence[int] | None = None) -> int:
    """Rank of the Gram block over all orderings of the multiset of shape λ."""
    lam = tuple(lam)
    _check_width(spec, lam)
    if not lam:
        return 1
    return rank(gram_matrix(spec, block_basis(lam, modes)))


def null_states(spec: AlgebraSpec, lam: Partition) -> list:
    """Basis of null combinations inside the block of shape λ."""
    lam = tuple(lam)
    _check_width(spec, lam)
    basis = block_basis(lam)
    A = gram_matrix(spec, basis)
    return [FockState(zip(basis, v)) for v in null_basis(A)]


def _occupation_multisets(M: int, N: int) -> Iterator[tuple]:
    return combinations_with_replacement(range(1, M + 1), N)


@dataclass
class DimensionTable:
    M: int
    d: dict = field(default_factory=dict)  # (N, λ) -> d_λ
    m: dict = field(default_factory=dict)  # λ -> m_λ(M)
    D: dict = field(default_factory=dict)  # N -> D(M, N)
    mode: dict = field(default_factory=dict)  # N -> "partitions" | "multisets" | "full"


def sectors_orthogonal(spec: AlgebraSpec, N: int) -> bool:
    """Whether different occupation vectors are orthogonal at N.

    With z = 0 every a_i lowers the occupation vector by e_i, so the answer
    is yes without computing anything; otherwise run the exhaustive check,
    which is refused once the full M^N Gram would pass the entry guard.
    """
    if spec.is_number_conserving():
        return True
    if (spec.M ** N) ** 2 > ENTRY_GUARD:
        raise GuardExceeded(f"orthogonality check on {spec.M}^{N} words exceeds the entry guard")
    return multiset_orthogonality_check(spec, N)


def fock_dimension(spec: AlgebraSpec, N: int, orthogonal: bool | None = None) -> int:
    """Number of linearly independent N-particle states, D(M, N)."""
    if N == 0:
        return 1
    if N > spec.max_n:
        raise GuardExceeded(f"N={N} exceeds max_n={spec.max_n}")
    if orthogonal is None:
        orthogonal = sectors_orthogonal(spec, N)
    if not orthogonal:
        return rank(gram_matrix(spec, all_words(spec.M, N)))
    if spec.is_uniform():
        return sum(assignment_count(lam, spec.M) * d_lambda(spec, lam)
                   for lam in partitions(N, spec.M))
    return sum(rank(gram_matrix(spec, multiset_words(ms)))
               for ms in _occupation_multisets(spec.M, N))


def dimension_table(spec: AlgebraSpec, max_N: int | None = None) -> DimensionTable:
    max_N = spec.max_n if max_N is None else max_N
    table = DimensionTable(spec.M)
    table.D[0] = 1
    table.mode[0] = "partitions"
    for N in range(1, max_N + 1):
        orthogonal = sectors_orthogonal(spec, N)
        for lam in partitions(N, spec.M):
            table.d[(N, lam)] = d_lambda(spec, lam)
            table.m[lam] = assignment_count(lam, spec.M)
        if orthogonal and spec.is_uniform():
            table.mode[N] = "partitions"
            table.D[N] = sum(table.m[lam] * table.d[(N, lam)] for lam in partitions(N, spec.M))
        else:
            table.mode[N] = "multisets" if orthogonal else "full"
            table.D[N] = fock_dimension(spec, N, orthogonal)
    return table


def reference_word(n: int, modes: Sequence[int] | None = None) -> tuple:
    return tuple(range(1, n)) if modes is None else tuple(modes)


def available_dim(spec: AlgebraSpec, n: int, reference: Sequence[int] | None = None) -> int:
    """d_n: rank of the Gram of ``a†_k w |0>`` (k = 1..M) for a fixed
    reference word ``w`` of n-1 distinct modes (default 1..n-1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n - 1 > spec.M:
        raise ValueError(f"no reference word of {n - 1} distinct modes among M={spec.M}")
    w = reference_word(n, reference)
    if len(w) != n - 1 or len(set(w)) != len(w):
        raise ValueError("reference word must have n-1 distinct modes")
    return rank(gram_matrix(spec, [(k,) + w for k in spec.modes]))


@dataclass(frozen=True)
class HaldaneRecord:
    n: int
    k: int
    d_n: int
    d_nk: int
    g: Fraction


def haldane_g(spec: AlgebraSpec, n: int, k: int) -> HaldaneRecord:
    """g_{n -> n+k} = (d_n - d_{n+k}) / k."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if n + k > spec.max_n:
        raise GuardExceeded(f"n+k={n + k} exceeds max_n={spec.max_n}")
    dn = available_dim(spec, n)
    dnk = available_dim(spec, n + k)
    return HaldaneRecord(n, k, dn, dnk, Fraction(dn - dnk, k))
