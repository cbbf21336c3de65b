"""Acceptance criteria, all checked exactly.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion, or directly with ``python3 tests/test_acceptance.py``.
"""
import random
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from parafock import presets as P
from parafock.algebra import FockState, transition_apply
from parafock.expansion import instantiate_expansion, verify_transition, verify_triple_relation
from parafock.gram import (all_words, gram_generic, gram_matrix, left_invariance_check,
                           multiset_orthogonality_check, multiset_words, regular_decompose)
from parafock.linalg import INDEFINITE, PSD, RationalMatrix, psd_check, rank
from parafock.presets import PresetId
from parafock.statistics import d_lambda, dimension_table, fock_dimension, haldane_g, partitions
from green_oracle import GreenAnsatz, words

CRITERIA = []


def criterion(number, title):
    def wrap(fn):
        CRITERIA.append((number, title, fn))
        return fn
    return wrap


@criterion(1, "Palev Fermi counting, M=4, p=2")
def palev_fermi_counting():
    spec = P.palev_fermi(4, 2, max_n=4)
    dims = [fock_dimension(spec, N) for N in range(5)]
    nulls = all(d_lambda(spec, lam) == 0 for lam in partitions(3, 4))
    return dims == [1, 4, 6, 0, 0] and nulls


@criterion(2, "Palev Bose counting, M=3, p=2")
def palev_bose_counting():
    spec = P.palev_bose(3, 2, max_n=3)
    return [fock_dimension(spec, N) for N in range(4)] == [1, 3, 6, 0]


@criterion(3, "order-1 Palev algebras are Klein-Marshalek")
def klein_marshalek():
    for M in range(1, 6):
        km = dimension_table(P.klein_marshalek(M, max_n=3))
        if [km.D[N] for N in range(4)] != [1, M, 0, 0]:
            return False
        for build in (P.palev_fermi, P.palev_bose):
            t = dimension_table(build(M, 1, max_n=3))
            if t.D != km.D or t.d != km.d:
                return False
    return True


@criterion(4, "extended Haldane parameters")
def haldane():
    M, p = 5, 3
    spec = P.palev_fermi(M, p)
    inside = all(haldane_g(spec, n, k).g == 1 for n in range(1, 3) for k in range(1, 4 - n))
    boundary = all(haldane_g(spec, n, p + 1 - n).g == F(M - n + 1, p - n + 1) for n in range(1, p + 1))
    fermi_ok = inside and boundary and haldane_g(spec, 2, 2).g == 2
    M, p = 4, 2
    spec = P.palev_bose(M, p)
    inside = haldane_g(spec, 1, 1).g == 0
    boundary = all(haldane_g(spec, n, p + 1 - n).g == F(M, p - n + 1) for n in range(1, p + 1))
    return fermi_ok and inside and boundary and haldane_g(spec, 1, 2).g == 2


@criterion(5, "Okubo negative norm, p=2")
def okubo():
    spec = P.okubo(2, 2)
    basis = all_words(2, 2)  # sectors mix, so the block is the whole N=2 space
    assert (1, 1) in basis
    v = psd_check(gram_matrix(spec, basis))
    return v.tag == INDEFINITE and v.value == -1 and not multiset_orthogonality_check(spec, 2)


@criterion(6, "quon positivity and the q=2 witness")
def quon():
    for q in (F(-3, 4), F(0), F(1, 2)):
        for N in range(1, 5):
            if psd_check(gram_generic(P.quon(N, q), range(1, N + 1))).tag != PSD:
                return False
    v = psd_check(gram_generic(P.quon(2, 2), [1, 2]))
    return v.tag == INDEFINITE and v.value == 2 * (1 - 2) == -2


@criterion(7, "three Palev Fermi realizations share their statistics")
def equivalence():
    variants = [P.palev_fermi(4, 2), P.palev_fermi_f(4, 2, "affine"), P.palev_fermi_f(4, 2, "step")]
    for N in range(1, 5):
        for lam in partitions(N, 4):
            if len({d_lambda(s, lam) for s in variants}) != 1:
                return False
    differs = False
    for N in range(1, 4):
        for lam in partitions(N, 4):
            basis = multiset_words(tuple(m for m, part in enumerate(lam, 1) for _ in range(part)))
            grams = [gram_matrix(s, basis) for s in variants]
            differs |= any(g != grams[0] for g in grams[1:])
    return differs


@criterion(8, "published transition-operator expansions")
def expansions():
    cases = [
        (PresetId("green-parabose", {"p": 2}), P.green_parabose(3, 2)),
        (PresetId("govorkov", {"p": 2, "sign": 1}), P.govorkov(3, 2, 1)),
        (PresetId("govorkov", {"p": 2, "sign": -1}), P.govorkov(3, 2, -1)),
        (PresetId("quon", {"q": "1/2"}), P.quon(3, F(1, 2))),
        (PresetId("palev-fermi", {"p": 3}), P.palev_fermi(3, 3)),
        (PresetId("palev-fermi", {"p": 2}), P.palev_fermi(3, 2)),
        (PresetId("palev-super", {"mb": 1, "mf": 1, "p": 2}), P.palev_super(1, 1, 2)),
    ]
    for kind, spec in cases:
        for i in spec.modes:
            for j in spec.modes:
                op = instantiate_expansion(kind, spec, i, j)
                if kind.params.get("p") == 3 and op.max_order() != 3:
                    return False
                if kind.name == "palev-fermi" and kind.params["p"] == 2 and op.max_order() != 2:
                    return False
                if not verify_transition(spec, op, i, j, n_max=2):
                    return False
    return True


@criterion(9, "triple relations")
def triple():
    kinds = [PresetId("palev-fermi", {"p": 2}), PresetId("palev-fermi", {"p": 3}),
             PresetId("palev-bose", {"p": 2}), PresetId("okubo", {"p": 2})]
    for kind in kinds:
        if not verify_triple_relation(P.build(kind, 3, max_n=4), *P.triple_parameters(kind), n_max=2):
            return False
    rng = random.Random(7)
    for _ in range(2):
        x, y, z, q = (F(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(4))
        if not verify_triple_relation(P.affine_family(3, x, y, z, q, max_n=4), x, y, z, q, n_max=2):
            return False
    return True


@criterion(10, "Green ansatz oracle, p=2, M=2")
def green():
    for statistics, build in (("bose", P.green_parabose), ("fermi", P.green_parafermi)):
        oracle = GreenAnsatz(2, 2, statistics)
        spec = build(2, 2)
        for N in range(1, 4):
            ws = words(2, N)
            expected = RationalMatrix(oracle.gram(ws))
            got = gram_matrix(spec, ws)
            if got != expected or rank(got) != rank(expected):
                return False
    return True


PRESETS = {
    "green-parabose": lambda M: P.green_parabose(M, 2),
    "green-parafermi": lambda M: P.green_parafermi(M, 3),
    "govorkov+": lambda M: P.govorkov(M, 2, 1),
    "govorkov-": lambda M: P.govorkov(M, 2, -1),
    "quon": lambda M: P.quon(M, F(1, 2)),
    "palev-fermi": lambda M: P.palev_fermi(M, 2),
    "palev-bose": lambda M: P.palev_bose(M, 3),
    "palev-fermi-f affine": lambda M: P.palev_fermi_f(M, 2, "affine"),
    "palev-fermi-f step": lambda M: P.palev_fermi_f(M, 2, "step"),
    "palev-bose-f affine": lambda M: P.palev_bose_f(M, 2, "affine"),
    "palev-bose-f step": lambda M: P.palev_bose_f(M, 2, "step"),
    "klein-marshalek": P.klein_marshalek,
    "okubo": lambda M: P.okubo(M, 2),
}


@criterion(11, "structural diagnostics")
def diagnostics():
    every = [build(3) for build in PRESETS.values()] + [P.palev_super(2, 1, 2)]
    for spec in every:
        for N in range(1, 4):
            gram_matrix(spec, all_words(spec.M, N))  # raises on asymmetry
        if spec.is_number_conserving():
            if not all(multiset_orthogonality_check(spec, N) for N in range(1, 4)):
                return False
    for build in PRESETS.values():
        spec = build(4)
        for N in range(1, 5):
            A = gram_generic(spec, range(1, N + 1))
            if not left_invariance_check(A, N) or regular_decompose(A, N).residual:
                return False
            for lam in partitions(N, 4):
                other = list(range(4, 4 - len(lam), -1))
                if d_lambda(spec, lam) != d_lambda(spec, lam, other):
                    return False
    return True


@criterion(12, "supersymmetric charge squares to zero")
def supercharge():
    spec = P.palev_super(1, 1, 2)
    for N in range(4):
        for w in all_words(2, N):
            s = transition_apply(spec, 1, 2, FockState.word(*w))
            if transition_apply(spec, 1, 2, s) != 0:
                return False
    return True


def _run(number, title, fn):
    try:
        ok = bool(fn())
    except Exception as exc:  # a crash is a failure, reported on the same line
        ok, title = False, f"{title} ({type(exc).__name__}: {exc})"
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}")
    return ok


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    assert _run(number, title, fn)


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
