"""Algebras of creation/annihilation operators and their Fock-space action.

An algebra is fixed by a single normally ordered rewrite rule

    a_i a†_j = f(N) δ_ij + q_ij h(N) a†_j a_i + y_ij N_ij + z_ij N_ji

together with the vacuum condition ``a_i |0> = 0``.  States are finite
rational combinations of creation words ``a†_{k1} ... a†_{kN} |0>``, stored
as tuples of 1-based mode indices (leftmost letter applied last).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Monomial = tuple  # tuple[int, ...]; () is the vacuum
RationalLike = Union[int, Fraction, str]

DEFAULT_MAX_N = 6


class GuardExceeded(RuntimeError):
    """A computation would exceed the configured particle-number or size guard."""


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Serialize as ``"num/den"``; the denominator is always written."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# level functions f(N), h(N)
# ---------------------------------------------------------------------------


class LevelFn:
    """A rational-valued function of the total particle number."""

    def __call__(self, n: int) -> Fraction:
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    @staticmethod
    def from_json(obj) -> "LevelFn":
        if not isinstance(obj, dict) or len(obj) != 1:
            raise ValueError(f"malformed level function: {obj!r}")
        (kind, arg), = obj.items()
        if kind == "affine":
            a, b = arg
            return Affine(as_fraction(a), as_fraction(b))
        if kind == "step":
            return Step(int(arg))
        if kind == "product":
            return Product(tuple(LevelFn.from_json(x) for x in arg))
        raise ValueError(f"unknown level function kind {kind!r}")


@dataclass(frozen=True)
class Affine(LevelFn):
    """n -> a + b n"""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))

    def __call__(self, n: int) -> Fraction:
        return self.a + self.b * n

    def to_json(self):
        return {"affine": [format_rational(self.a), format_rational(self.b)]}


@dataclass(frozen=True)
class Step(LevelFn):
    """n -> Θ(p - n), with Θ(x) = 1 for x > 0 and 0 otherwise."""

    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("step threshold must be a positive integer")

    def __call__(self, n: int) -> Fraction:
        return Fraction(1) if self.p - n > 0 else Fraction(0)

    def to_json(self):
        return {"step": self.p}


@dataclass(frozen=True)
class Product(LevelFn):
    factors: tuple

    def __call__(self, n: int) -> Fraction:
        out = Fraction(1)
        for g in self.factors:
            out *= g(n)
        return out

    def to_json(self):
        return {"product": [g.to_json() for g in self.factors]}


ONE = Affine(1, 0)


# ---------------------------------------------------------------------------
# algebra definition
# ---------------------------------------------------------------------------


def _square(values, M: int, name: str) -> tuple:
    rows = tuple(tuple(as_fraction(v) for v in row) for row in values)
    if len(rows) != M or any(len(r) != M for r in rows):
        raise ValueError(f"{name} must be {M}x{M}")
    return rows


def constant_matrix(value: RationalLike, M: int) -> tuple:
    v = as_fraction(value)
    return tuple(tuple(v for _ in range(M)) for _ in range(M))


@dataclass(frozen=True)
class AlgebraSpec:
    """Parameters of the rewrite rule for ``a_i a†_j`` on ``M`` modes.

    ``q``, ``y`` and ``z`` are ``M x M`` rational matrices indexed from 0;
    the public API takes 1-based mode indices.  ``grades`` marks fermionic
    (1) and bosonic (0) modes of a graded algebra.
    """

    M: int
    f: LevelFn
    h: LevelFn
    q: tuple
    y: tuple
    z: tuple
    grades: tuple = None
    max_n: int = DEFAULT_MAX_N
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("need at least one mode")
        if self.max_n < 1:
            raise ValueError("max_n must be positive")
        object.__setattr__(self, "q", _square(self.q, self.M, "q"))
        object.__setattr__(self, "y", _square(self.y, self.M, "y"))
        object.__setattr__(self, "z", _square(self.z, self.M, "z"))
        grades = self.grades if self.grades is not None else (0,) * self.M
        grades = tuple(int(g) for g in grades)
        if len(grades) != self.M or any(g not in (0, 1) for g in grades):
            raise ValueError("grades must be M values in {0, 1}")
        object.__setattr__(self, "grades", grades)

    @classmethod
    def uniform(cls, M, f, q=0, y=0, z=0, h=ONE, max_n=DEFAULT_MAX_N):
        """Index-independent coefficients (no grading)."""
        return cls(M=M, f=f, h=h, q=constant_matrix(q, M), y=constant_matrix(y, M),
                   z=constant_matrix(z, M), max_n=max_n)

    def with_max_n(self, max_n: int) -> "AlgebraSpec":
        return AlgebraSpec(M=self.M, f=self.f, h=self.h, q=self.q, y=self.y, z=self.z,
                           grades=self.grades, max_n=max_n)

    @property
    def graded(self) -> bool:
        return any(self.grades)

    @property
    def modes(self) -> range:
        return range(1, self.M + 1)

    def check_mode(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.M:
            raise IndexError(f"mode index {i!r} outside 1..{self.M}")

    def coefficient(self, name: str, i: int, j: int) -> Fraction:
        return getattr(self, name)[i - 1][j - 1]

    def is_number_conserving(self) -> bool:
        return all(v == 0 for row in self.z for v in row)

    def is_uniform(self) -> bool:
        """True when every pairwise coefficient is index independent and the
        grading is trivial, so the algebra is permutation invariant."""
        if len(set(self.grades)) != 1:
            return False
        return all(len({v for row in m for v in row}) == 1 for m in (self.q, self.y, self.z))

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        mat = lambda m: [[format_rational(v) for v in row] for row in m]
        return {
            "modes": self.M,
            "grades": list(self.grades),
            "f": self.f.to_json(),
            "h": self.h.to_json(),
            "q": mat(self.q),
            "y": mat(self.y),
            "z": mat(self.z),
            "max_n": self.max_n,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "AlgebraSpec":
        return cls(
            M=int(d["modes"]),
            grades=tuple(d["grades"]),
            f=LevelFn.from_json(d["f"]),
            h=LevelFn.from_json(d["h"]),
            q=d["q"], y=d["y"], z=d["z"],
            max_n=int(d.get("max_n", DEFAULT_MAX_N)),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "AlgebraSpec":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# states
# ---------------------------------------------------------------------------


def _accumulate(target: dict, word: Monomial, coeff: Fraction) -> None:
    v = target.get(word, 0) + coeff
    if v:
        target[word] = v
    else:
        target.pop(word, None)


class FockState:
    """Finite rational combination of creation words acting on the vacuum.

    Treated as immutable; arithmetic returns new states.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, RationalLike] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for word, c in items:
            _accumulate(acc, tuple(word), as_fraction(c))
        self._terms = dict(sorted(acc.items()))

    @classmethod
    def vacuum(cls) -> "FockState":
        return cls({(): 1})

    @classmethod
    def word(cls, *modes: int, coeff: RationalLike = 1) -> "FockState":
        return cls({tuple(modes): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, FockState):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "FockState") -> "FockState":
        acc = dict(self._terms)
        for w, c in other.items():
            _accumulate(acc, w, c)
        return FockState(acc)

    def __neg__(self):
        return FockState({w: -c for w, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: RationalLike) -> "FockState":
        s = as_fraction(scalar)
        return FockState({w: s * c for w, c in self.items()})

    __rmul__ = __mul__

    def particle_numbers(self) -> set:
        return {len(w) for w in self._terms}

    def __repr__(self):
        if not self._terms:
            return "FockState(0)"
        parts = []
        for w, c in self.items():
            ops = "".join(f"a+{k}" for k in w) or "1"
            parts.append(f"{c}*{ops}")
        return "FockState(" + " + ".join(parts) + "|0>)"


# ---------------------------------------------------------------------------
# operator action
# ---------------------------------------------------------------------------


def apply_creation(state: FockState, i: int, M: int | None = None) -> FockState:
    """Prepend ``a†_i`` to every word."""
    if not isinstance(i, int) or i < 1 or (M is not None and i > M):
        raise IndexError(f"mode index {i!r} out of range")
    return FockState({(i,) + w: c for w, c in state.items()})


def _transition_word(spec: AlgebraSpec, i: int, j: int, word: Monomial) -> dict:
    """Graded substitution i -> j at every occurrence of i in ``word``."""
    key = ("N", i, j, word)
    cached = spec._cache.get(key)
    if cached is not None:
        return cached
    g = spec.grades
    odd = (g[i - 1] + g[j - 1]) % 2
    out: dict = {}
    sign = 1
    for m, k in enumerate(word):
        if k == i:
            _accumulate(out, word[:m] + (j,) + word[m + 1:], Fraction(sign))
        if odd and g[k - 1]:
            sign = -sign
    spec._cache[key] = out
    return out


def transition_apply(spec: AlgebraSpec, i: int, j: int, state: FockState) -> FockState:
    """Action of the transition number operator ``N_ij``."""
    spec.check_mode(i)
    spec.check_mode(j)
    acc: dict = {}
    for w, c in state.items():
        for w2, c2 in _transition_word(spec, i, j, w).items():
            _accumulate(acc, w2, c * c2)
    return FockState(acc)


def _annihilate_word(spec: AlgebraSpec, i: int, word: Monomial) -> dict:
    if not word:
        return {}
    key = ("a", i, word)
    cached = spec._cache.get(key)
    if cached is not None:
        return cached
    if len(word) > spec.max_n:
        raise GuardExceeded(f"{len(word)}-particle state exceeds max_n={spec.max_n}")
    j, rest = word[0], word[1:]
    n = len(rest)
    out: dict = {}
    if i == j:
        fn = spec.f(n)
        if fn:
            _accumulate(out, rest, fn)
    qij = spec.q[i - 1][j - 1]
    if qij:
        scale = qij * spec.h(n)
        if scale:
            for w, c in _annihilate_word(spec, i, rest).items():
                _accumulate(out, (j,) + w, scale * c)
    yij = spec.y[i - 1][j - 1]
    if yij:
        for w, c in _transition_word(spec, i, j, rest).items():
            _accumulate(out, w, yij * c)
    zij = spec.z[i - 1][j - 1]
    if zij:
        for w, c in _transition_word(spec, j, i, rest).items():
            _accumulate(out, w, zij * c)
    spec._cache[key] = out
    return out


def annihilate(spec: AlgebraSpec, i: int, state: FockState) -> FockState:
    """Action of ``a_i``, by recursion on the rewrite rule."""
    spec.check_mode(i)
    acc: dict = {}
    for w, c in state.items():
        for w2, c2 in _annihilate_word(spec, i, w).items():
            _accumulate(acc, w2, c * c2)
    return FockState(acc)


def inner_product(spec: AlgebraSpec, u: Sequence[int], v: Sequence[int]) -> Fraction:
    """``<0| a_{u_N} ... a_{u_1} a†_{v_1} ... a†_{v_K} |0>``."""
    u, v = tuple(u), tuple(v)
    for k in u + v:
        spec.check_mode(k)
    return _inner(spec, u, v)


def _inner(spec: AlgebraSpec, u: Monomial, v: Monomial) -> Fraction:
    if len(u) != len(v):
        return Fraction(0)
    if not u:
        return Fraction(1)
    key = ("ip", u, v)
    cached = spec._cache.get(key)
    if cached is not None:
        return cached
    total = Fraction(0)
    rest = u[1:]
    for w, c in _annihilate_word(spec, u[0], v).items():
        total += c * _inner(spec, rest, w)
    spec._cache[key] = total
    return total


def state_inner(spec: AlgebraSpec, bra: FockState, ket: FockState) -> Fraction:
    """Bilinear extension of :func:`inner_product` (coefficients are real)."""
    total = Fraction(0)
    for u, cu in bra.items():
        for v, cv in ket.items():
            if len(u) == len(v):
                total += cu * cv * _inner(spec, u, v)
    return total
