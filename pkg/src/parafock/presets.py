"""Named parastatistics algebras as :class:`AlgebraSpec` values.

All Palev-type algebras are stored after rescaling the operators by
``sqrt(p)``, so every preset obeys ``a_i a†_j |0> = δ_ij |0>``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (DEFAULT_MAX_N, ONE, Affine, AlgebraSpec, RationalLike, Step,
                      as_fraction)

NAMES = (
    "green-parabose", "green-parafermi", "govorkov", "quon", "palev-fermi",
    "palev-bose", "palev-fermi-f", "palev-bose-f", "klein-marshalek",
    "palev-super", "okubo", "affine",
)


@dataclass(frozen=True)
class PresetId:
    """Preset name plus its parameters, e.g. ``PresetId("quon", {"q": "1/2"})``."""

    name: str
    params: dict = field(default_factory=dict)

    def __hash__(self):
        return hash((self.name, tuple(sorted((k, str(v)) for k, v in self.params.items()))))

    def to_dict(self) -> dict:
        out = {"name": self.name}
        for k, v in sorted(self.params.items()):
            out[k] = str(v) if isinstance(v, Fraction) else v
        return out


def _order(p) -> int:
    if isinstance(p, bool) or int(p) != p or int(p) < 1:
        raise ValueError(f"order p must be a positive integer, got {p!r}")
    return int(p)


def green_parabose(M: int, p: int, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    p = _order(p)
    return AlgebraSpec.uniform(M, ONE, q=-1, y=Fraction(2, p), max_n=max_n)


def green_parafermi(M: int, p: int, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    p = _order(p)
    return AlgebraSpec.uniform(M, ONE, q=1, y=Fraction(-2, p), max_n=max_n)


def govorkov(M: int, p: int, sign: int = 1, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    p = _order(p)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return AlgebraSpec.uniform(M, ONE, q=0, y=Fraction(-sign, p), max_n=max_n)


def quon(M: int, q: RationalLike, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    return AlgebraSpec.uniform(M, ONE, q=as_fraction(q), max_n=max_n)


def palev_fermi(M: int, p: int, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    p = _order(p)
    return AlgebraSpec.uniform(M, Affine(1, Fraction(-1, p)), q=-1, y=Fraction(1, p), max_n=max_n)


def palev_bose(M: int, p: int, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    p = _order(p)
    return AlgebraSpec.uniform(M, Affine(1, Fraction(-1, p)), q=1, y=Fraction(-1, p), max_n=max_n)


def _level(p: int, variant: str):
    if variant == "affine":
        return Affine(1, Fraction(-1, p))
    if variant == "step":
        return Step(p)
    raise ValueError(f"variant must be 'affine' or 'step', got {variant!r}")


def palev_fermi_f(M: int, p: int, variant: str = "affine", max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    """``a_i a†_j = f(N)(δ_ij - a†_j a_i)``: same counting, different Grams."""
    p = _order(p)
    g = _level(p, variant)
    return AlgebraSpec.uniform(M, g, q=-1, h=g, max_n=max_n)


def palev_bose_f(M: int, p: int, variant: str = "affine", max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    p = _order(p)
    g = _level(p, variant)
    return AlgebraSpec.uniform(M, g, q=1, h=g, max_n=max_n)


def klein_marshalek(M: int, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    return AlgebraSpec.uniform(M, Affine(1, -1), max_n=max_n)


def palev_super(mb: int, mf: int, p: int, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    """Bosonic modes ``1..mb`` followed by fermionic modes ``mb+1..mb+mf``."""
    p = _order(p)
    if mb < 0 or mf < 0 or mb + mf < 1:
        raise ValueError("need mb, mf >= 0 with at least one mode")
    grades = (0,) * mb + (1,) * mf
    M = mb + mf
    sgn = [[(-1) ** (grades[a] * grades[b]) for b in range(M)] for a in range(M)]
    q = [[Fraction(s) for s in row] for row in sgn]
    y = [[Fraction(-s, p) for s in row] for row in sgn]
    z = [[Fraction(0)] * M for _ in range(M)]
    return AlgebraSpec(M=M, f=Affine(1, Fraction(-1, p)), h=ONE, q=q, y=y, z=z,
                       grades=grades, max_n=max_n)


def okubo(M: int, p: int, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    """Okubo's fermionic triple system; its Fock metric is indefinite."""
    p = _order(p)
    return AlgebraSpec.uniform(M, Affine(1, Fraction(-2, p)), q=-1, y=Fraction(2, p),
                               z=Fraction(-2, p), max_n=max_n)


def affine_family(M: int, x, y, z, q, max_n: int = DEFAULT_MAX_N) -> AlgebraSpec:
    """``a_i a†_j = (1 + xN)δ_ij + q a†_j a_i + y N_ij + z N_ji``."""
    return AlgebraSpec.uniform(M, Affine(1, as_fraction(x)), q=as_fraction(q),
                               y=as_fraction(y), z=as_fraction(z), max_n=max_n)


def build(preset: PresetId | str, M: int | None = None, max_n: int = DEFAULT_MAX_N, **params) -> AlgebraSpec:
    """Construct a preset by name.

    ``M`` is ignored for ``palev-super``, whose mode count is ``mb + mf``.
    """
    if isinstance(preset, PresetId):
        name, params = preset.name, {**preset.params, **params}
    else:
        name = preset
    name = name.replace("_", "-")
    if name != "palev-super" and (M is None or M < 1):
        raise ValueError("M must be a positive integer")
    try:
        if name == "green-parabose":
            return green_parabose(M, params["p"], max_n)
        if name == "green-parafermi":
            return green_parafermi(M, params["p"], max_n)
        if name == "govorkov":
            return govorkov(M, params["p"], int(params.get("sign", 1)), max_n)
        if name == "quon":
            return quon(M, params["q"], max_n)
        if name == "palev-fermi":
            return palev_fermi(M, params["p"], max_n)
        if name == "palev-bose":
            return palev_bose(M, params["p"], max_n)
        if name == "palev-fermi-f":
            return palev_fermi_f(M, params["p"], params.get("variant", "affine"), max_n)
        if name == "palev-bose-f":
            return palev_bose_f(M, params["p"], params.get("variant", "affine"), max_n)
        if name == "klein-marshalek":
            return klein_marshalek(M, max_n)
        if name == "palev-super":
            return palev_super(int(params["mb"]), int(params["mf"]), params["p"], max_n)
        if name == "okubo":
            return okubo(M, params["p"], max_n)
        if name == "affine":
            return affine_family(M, params["x"], params["y"], params["z"], params["q"], max_n)
    except KeyError as exc:
        raise ValueError(f"preset {name!r} needs parameter {exc.args[0]!r}") from None
    raise ValueError(f"unknown preset {name!r}")


def triple_parameters(preset: PresetId) -> tuple | None:
    """(x, y, z, q) of ``[[a_i, a†_j]_q, a†_k] = xδ_ij a†_k + yδ_ik a†_j + zδ_jk a†_i``
    for presets in the affine family, else None."""
    name, P = preset.name.replace("_", "-"), preset.params
    F = Fraction
    if name == "green-parabose":
        return F(0), F(2, _order(P["p"])), F(0), F(-1)
    if name == "green-parafermi":
        return F(0), F(-2, _order(P["p"])), F(0), F(1)
    if name == "govorkov":
        return F(0), F(-int(P.get("sign", 1)), _order(P["p"])), F(0), F(0)
    if name == "quon":
        return F(0), F(0), F(0), as_fraction(P["q"])
    if name == "palev-fermi":
        p = _order(P["p"])
        return F(-1, p), F(1, p), F(0), F(-1)
    if name == "palev-bose":
        p = _order(P["p"])
        return F(-1, p), F(-1, p), F(0), F(1)
    if name == "klein-marshalek":
        return F(-1), F(0), F(0), F(0)
    if name == "okubo":
        p = _order(P["p"])
        return F(-2, p), F(2, p), F(-2, p), F(-1)
    if name == "affine":
        return tuple(as_fraction(P[k]) for k in ("x", "y", "z", "q"))
    return None
