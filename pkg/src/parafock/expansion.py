"""Normal-ordered operator expressions and checks of the published
transition-operator expansions and triple relations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import (AlgebraSpec, Affine, FockState, GuardExceeded, _accumulate,
                      _annihilate_word, annihilate, apply_creation, as_fraction,
                      state_inner, transition_apply)
from .gram import all_words
from .presets import PresetId, _order


class UndefinedExpansion(ValueError):
    """No published expansion, or a coefficient has a pole at these parameters."""


@dataclass(frozen=True)
class NormalOrderedOperator:
    """Sum of ``coeff * a†_{c_1}...a†_{c_r} a_{d_1}...a_{d_s}`` terms.

    ``terms`` holds ``(creation_word, annihilation_word, coeff)`` triples.
    """

    terms: tuple

    def __post_init__(self):
        merged: dict = {}
        for cw, aw, c in self.terms:
            _accumulate(merged, (tuple(cw), tuple(aw)), as_fraction(c))
        object.__setattr__(self, "terms", tuple(
            (cw, aw, c) for (cw, aw), c in sorted(merged.items())))

    def __add__(self, other):
        return NormalOrderedOperator(self.terms + other.terms)

    def scaled(self, s) -> "NormalOrderedOperator":
        s = as_fraction(s)
        return NormalOrderedOperator(tuple((cw, aw, s * c) for cw, aw, c in self.terms))

    def max_order(self) -> int:
        return max((len(aw) for _, aw, _ in self.terms), default=0)


def apply_operator(spec: AlgebraSpec, op: NormalOrderedOperator, state: FockState) -> FockState:
    acc: dict = {}
    for cw, aw, coeff in op.terms:
        for word, c in state.items():
            if len(aw) > len(word):
                continue
            part = {word: c}
            for i in reversed(aw):
                nxt: dict = {}
                for w, cc in part.items():
                    for w2, c2 in _annihilate_word(spec, i, w).items():
                        _accumulate(nxt, w2, cc * c2)
                part = nxt
                if not part:
                    break
            for w, cc in part.items():
                _accumulate(acc, tuple(cw) + w, coeff * cc)
    return FockState(acc)


def _yy(spec: AlgebraSpec, i: int, j: int, t: Fraction, coeff: Fraction) -> list:
    """coeff * sum_l (Y_jl)† Y_il with Y_il = a_i a_l + t a_l a_i."""
    terms = []
    for l in spec.modes:
        terms += [
            ((l, j), (i, l), coeff),
            ((l, j), (l, i), coeff * t),
            ((j, l), (i, l), coeff * t),
            ((j, l), (l, i), coeff * t * t),
        ]
    return terms


def _palev_terms(spec: AlgebraSpec, i: int, j: int, p: int) -> list:
    if p == 1:
        raise UndefinedExpansion("1/(p-1) has a pole at p=1")
    g = spec.grades
    sij = g[i - 1] + g[j - 1]
    terms = []
    c2 = Fraction(1, p - 1)
    for l in spec.modes:
        terms.append(((l, j), (i, l), c2 * (-1) ** (g[l - 1] * sij)))
    if p > 2:
        c3 = Fraction(2, (p - 1) * (p - 2))
        for l1, l2 in product(spec.modes, repeat=2):
            sign = (-1) ** ((g[l1 - 1] + g[l2 - 1]) * sij)
            terms.append(((l2, l1, j), (i, l1, l2), c3 * sign))
    return terms


def instantiate_expansion(kind: PresetId, spec: AlgebraSpec, i: int, j: int) -> NormalOrderedOperator:
    """The published low-order expansion of ``N_ij`` for ``kind`` on ``spec``'s modes."""
    spec.check_mode(i)
    spec.check_mode(j)
    name = kind.name.replace("_", "-")
    P = kind.params
    terms = [((j,), (i,), Fraction(1))]
    if name in ("green-parabose", "green-parafermi"):
        p = _order(P["p"])
        if p == 1:
            raise UndefinedExpansion("p^2/(4(p-1)) has a pole at p=1")
        # Y_il = a_i a_l - s (2/p - 1) a_l a_i with s = +1 for para-Bose, -1 for
        # para-Fermi: the negative of the exchange coefficient in the rewrite rule.
        s = 1 if name == "green-parabose" else -1
        terms += _yy(spec, i, j, -s * (Fraction(2, p) - 1), Fraction(p * p, 4 * (p - 1)))
    elif name == "govorkov":
        p = _order(P["p"])
        lam = int(P.get("sign", 1))
        if p * p == lam * lam:
            raise UndefinedExpansion("p^2/(p^2-λ^2) has a pole at p=1")
        terms += _yy(spec, i, j, Fraction(lam, p), Fraction(p * p, p * p - lam * lam))
    elif name == "quon":
        q = as_fraction(P["q"])
        if q * q == 1:
            raise UndefinedExpansion("1/(1-q^2) has a pole at |q|=1")
        terms += _yy(spec, i, j, -q, 1 / (1 - q * q))
    elif name in ("palev-fermi", "palev-bose", "palev-fermi-f", "palev-bose-f", "palev-super"):
        terms += _palev_terms(spec, i, j, _order(P["p"]))
    else:
        raise UndefinedExpansion(f"no published expansion for preset {kind.name!r}")
    return NormalOrderedOperator(tuple(terms))


def is_null(spec: AlgebraSpec, state: FockState) -> bool:
    """True iff ``state`` has zero overlap with every word of its particle numbers."""
    for N in state.particle_numbers():
        sector = FockState({w: c for w, c in state.items() if len(w) == N})
        for u in all_words(spec.M, N):
            if state_inner(spec, FockState.word(*u), sector) != 0:
                return False
    return True


def _equal_mod_null(spec: AlgebraSpec, a: FockState, b: FockState) -> bool:
    d = a - b
    return not d or is_null(spec, d)


def verify_transition(spec: AlgebraSpec, op: NormalOrderedOperator, i: int, j: int,
                      n_max: int = 2) -> bool:
    """Compare ``op`` with the substitution action of ``N_ij`` on every word
    with at most ``n_max`` particles.  Agreement is required in the Fock
    space proper, i.e. up to null states."""
    if n_max > spec.max_n:
        raise GuardExceeded(f"n_max={n_max} exceeds max_n={spec.max_n}")
    for N in range(n_max + 1):
        for w in all_words(spec.M, N):
            s = FockState.word(*w)
            if not _equal_mod_null(spec, apply_operator(spec, op, s), transition_apply(spec, i, j, s)):
                return False
    return True


def verify_expansion(kind: PresetId, spec: AlgebraSpec, n_max: int = 2) -> bool:
    """:func:`verify_transition` for the published expansion at every (i, j)."""
    return all(verify_transition(spec, instantiate_expansion(kind, spec, i, j), i, j, n_max)
               for i in spec.modes for j in spec.modes)


def _is_affine_family(spec: AlgebraSpec, x: Fraction) -> bool:
    ok_f = isinstance(spec.f, Affine) and spec.f.a == 1 and spec.f.b == x
    ok_h = all(spec.h(n) == 1 for n in range(spec.max_n + 1))
    return ok_f and ok_h


def verify_triple_relation(spec: AlgebraSpec, x, y, z, q, n_max: int = 2) -> bool:
    """``[[a_i, a†_j]_q, a†_k] = x δ_ij a†_k + y δ_ik a†_j + z δ_jk a†_i``
    as maps on every word with at most ``n_max`` particles."""
    x, y, z, q = (as_fraction(v) for v in (x, y, z, q))
    if not _is_affine_family(spec, x):
        raise ValueError("spec is not of the form f(n) = 1 + x n, h = 1")
    if n_max > spec.max_n - 2:
        raise GuardExceeded(f"n_max={n_max} needs max_n >= {n_max + 2}")
    M = spec.M
    cr = lambda k, s: apply_creation(s, k, M)
    an = lambda k, s: annihilate(spec, k, s)
    for N in range(n_max + 1):
        for w in all_words(M, N):
            s = FockState.word(*w)
            for i, j, k in product(spec.modes, repeat=3):
                def qcomm(t):
                    return an(i, cr(j, t)) - q * cr(j, an(i, t))
                lhs = qcomm(cr(k, s)) - cr(k, qcomm(s))
                rhs = FockState()
                if i == j:
                    rhs = rhs + x * cr(k, s)
                if i == k:
                    rhs = rhs + y * cr(j, s)
                if j == k:
                    rhs = rhs + z * cr(i, s)
                if lhs != rhs:
                    return False
    return True
