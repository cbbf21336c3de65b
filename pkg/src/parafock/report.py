"""Machine-readable statistics reports.

A report is a plain JSON-compatible dict: rationals are ``"num/den"``
strings, matrices are row-major lists, and keys are emitted sorted, so the
same inputs always produce byte-identical output.
"""
from __future__ import annotations

import csv
import json
import time
from itertools import combinations_with_replacement
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import AlgebraSpec, FockState, GuardExceeded, format_rational
from .expansion import UndefinedExpansion, verify_expansion, verify_triple_relation
from .gram import (ENTRY_GUARD, SymmetryViolation, all_words, gram_generic, gram_matrix,
                   left_invariance_check, multiset_orthogonality_check, multiset_words,
                   regular_decompose)
from .linalg import psd_check, rank
from .presets import PresetId, triple_parameters
from .statistics import (assignment_count, block_basis, d_lambda, dimension_table,
                         haldane_g, partitions, sectors_orthogonal)

SCHEMA_VERSION = 1
SECTIONS = ("dimensions", "haldane", "positivity", "diagnostics", "verify")
INDEFINITE_BY_DESIGN = {"okubo"}


def perm_label(pi) -> str:
    return ",".join(str(k) for k in pi)


def word_label(word) -> str:
    return ",".join(str(k) for k in word)


def rat(x) -> str:
    return format_rational(Fraction(x))


def state_dict(state: FockState) -> dict:
    return {word_label(w): rat(c) for w, c in state.items()}


def skipped(reason: str) -> dict:
    return {"status": "skipped", "reason": reason}


def _full_gram_fits(spec: AlgebraSpec, N: int) -> bool:
    return (spec.M ** N) ** 2 <= ENTRY_GUARD


def gram_blocks(spec: AlgebraSpec, N: int, orthogonal: bool) -> list:
    """(label, basis, multiplicity) for the independent Gram blocks at N."""
    if not orthogonal:
        if not _full_gram_fits(spec, N):
            raise GuardExceeded(f"full {spec.M}^{N} Gram exceeds the entry guard")
        return [({"full": True}, all_words(spec.M, N), 1)]
    if spec.is_uniform():
        return [({"lambda": list(lam)}, block_basis(lam), assignment_count(lam, spec.M))
                for lam in partitions(N, spec.M)]
    out = []
    for ms in combinations_with_replacement(spec.modes, N):
        out.append(({"multiset": list(ms)}, multiset_words(ms), 1))
    return out


def _orthogonality(spec: AlgebraSpec, N: int):
    """Exhaustive check, or None when it would exceed the entry guard."""
    if not _full_gram_fits(spec, N):
        return None
    return multiset_orthogonality_check(spec, N)


def dimensions_section(spec: AlgebraSpec, max_N: int) -> dict:
    table = dimension_table(spec, max_N)
    rows = [{"N": N, "lambda": list(lam), "d": d, "m": table.m[lam]}
            for (N, lam), d in table.d.items()]
    return {
        "status": "ok",
        "N": list(range(max_N + 1)),
        "D": [table.D[N] for N in range(max_N + 1)],
        "mode": {str(N): table.mode[N] for N in range(max_N + 1)},
        "blocks": rows,
    }


def haldane_section(spec: AlgebraSpec, max_N: int) -> dict:
    records = []
    for n in range(1, max_N + 1):
        for k in range(1, max_N - n + 1):
            if n + k - 1 > spec.M:
                continue
            r = haldane_g(spec, n, k)
            records.append({"n": r.n, "k": r.k, "d_n": r.d_n, "d_n_plus_k": r.d_nk, "g": rat(r.g)})
    return {"status": "ok", "records": records}


def positivity_section(spec: AlgebraSpec, max_N: int, preset: PresetId | None) -> dict:
    blocks = []
    all_psd = True
    for N in range(1, max_N + 1):
        for label, basis, _ in gram_blocks(spec, N, sectors_orthogonal(spec, N)):
            A = gram_matrix(spec, basis)
            v = psd_check(A)
            entry = {"N": N, **label, "size": len(basis), "rank": rank(A), "verdict": v.tag}
            if not v.is_psd:
                all_psd = False
                entry["witness"] = [rat(x) for x in v.witness]
                entry["witness_value"] = rat(v.value)
                entry["witness_state"] = state_dict(FockState(zip(basis, v.witness)))
            blocks.append(entry)
    out = {"status": "ok", "all_psd": all_psd, "blocks": blocks}
    if preset is not None and preset.name in INDEFINITE_BY_DESIGN:
        out["note"] = "indefinite by design"
    return out


def diagnostics_section(spec: AlgebraSpec, max_N: int) -> dict:
    per_n = []
    for N in range(1, max_N + 1):
        row = {"N": N}
        orth = _orthogonality(spec, N)
        row["multiset_orthogonality"] = "skipped: entry guard" if orth is None else orth
        if N <= spec.M:
            A = gram_generic(spec, range(1, N + 1))
            row["left_invariance"] = left_invariance_check(A, N)
            dec = regular_decompose(A, N)
            row["regular_residual"] = dec.residual
            row["c"] = {perm_label(pi): rat(c) for pi, c in dec.coefficients.items()}
        else:
            row["left_invariance"] = "skipped: N > M"
        agree = True
        for lam in partitions(N, spec.M):
            k = len(lam)
            alt = list(range(spec.M, spec.M - k, -1))
            if d_lambda(spec, lam) != d_lambda(spec, lam, alt):
                agree = False
        row["index_independence"] = agree
        per_n.append(row)
    return {"status": "ok", "symmetry": True, "per_N": per_n}


def verify_section(spec: AlgebraSpec, preset: PresetId | None) -> dict:
    out = {"status": "ok"}
    vspec = spec.with_max_n(max(spec.max_n, 4))
    params = triple_parameters(preset) if preset is not None else None
    if params is None:
        out["triple_relation"] = skipped("no (x, y, z, q) form for this algebra")
    else:
        x, y, z, q = params
        out["triple_relation"] = {
            "x": rat(x), "y": rat(y), "z": rat(z), "q": rat(q), "n_max": 2,
            "holds": verify_triple_relation(vspec, x, y, z, q, 2),
        }
    if preset is None:
        out["transition_expansion"] = skipped("no preset given")
    else:
        try:
            out["transition_expansion"] = {"n_max": 2, "holds": verify_expansion(preset, vspec, 2)}
        except UndefinedExpansion as exc:
            out["transition_expansion"] = skipped(str(exc))
    return out


def build_report(spec: AlgebraSpec, preset: PresetId | None = None, sections=SECTIONS,
                 max_N: int | None = None, timing: bool = False) -> tuple:
    """Compute the requested sections.  Returns ``(report, exit_code)``.

    Guard failures mark a section skipped (exit code 3); a symmetry violation
    is recorded in the diagnostics and yields exit code 4.
    """
    max_N = spec.max_n if max_N is None else max_N
    report = {
        "schema_version": SCHEMA_VERSION,
        "engine_version": __version__,
        "preset": preset.to_dict() if preset is not None else None,
        "spec": spec.to_dict(),
        "conventions": {
            "permutations": "one-line notation, lexicographic order",
            "multiplicity": "m_lambda(M) = M! / ((M - k)! * prod_j c_j!)",
            "rationals": "num/den strings",
        },
        "sections": {},
    }
    code = 0
    symmetry_failure = None
    for name in SECTIONS:
        if name not in sections:
            continue
        start = time.perf_counter()
        try:
            if name == "dimensions":
                body = dimensions_section(spec, max_N)
            elif name == "haldane":
                body = haldane_section(spec, max_N)
            elif name == "positivity":
                body = positivity_section(spec, max_N, preset)
            elif name == "diagnostics":
                body = diagnostics_section(spec, max_N)
            else:
                body = verify_section(spec, preset)
        except GuardExceeded as exc:
            body = skipped(f"guard: {exc}")
            code = max(code, 3)
        except SymmetryViolation as exc:
            body = skipped(f"symmetry violation: {exc}")
            symmetry_failure = exc
            code = 4
        if timing:
            body["seconds"] = round(time.perf_counter() - start, 3)
        report["sections"][name] = body
    if symmetry_failure is not None:
        diag = report["sections"].setdefault("diagnostics", {"status": "ok"})
        diag["symmetry"] = False
        diag["symmetry_violation"] = {
            "pair": [word_label(w) for w in symmetry_failure.pair],
            "values": [rat(v) for v in symmetry_failure.values],
        }
    return report, code


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _csv_tables(report: dict) -> dict:
    S = report.get("sections", {})
    tables = {}
    dims = S.get("dimensions", {})
    if dims.get("status") == "ok":
        tables["dimensions"] = (["N", "lambda", "d", "m"],
                                [[b["N"], " ".join(map(str, b["lambda"])), b["d"], b["m"]] for b in dims["blocks"]])
        tables["totals"] = (["N", "D", "mode"],
                            [[N, D, dims["mode"][str(N)]] for N, D in zip(dims["N"], dims["D"])])
    hal = S.get("haldane", {})
    if hal.get("status") == "ok":
        tables["haldane"] = (["n", "k", "d_n", "d_n_plus_k", "g"],
                             [[r["n"], r["k"], r["d_n"], r["d_n_plus_k"], r["g"]] for r in hal["records"]])
    pos = S.get("positivity", {})
    if pos.get("status") == "ok":
        rows = []
        for b in pos["blocks"]:
            label = " ".join(map(str, b.get("lambda", b.get("multiset", [])))) or "full"
            rows.append([b["N"], label, b["size"], b["rank"], b["verdict"],
                         " ".join(b.get("witness", [])), b.get("witness_value", "")])
        tables["positivity"] = (["N", "block", "size", "rank", "verdict", "witness", "witness_value"], rows)
    diag = S.get("diagnostics", {})
    if diag.get("status") == "ok":
        tables["diagnostics"] = (
            ["N", "multiset_orthogonality", "left_invariance", "regular_residual", "index_independence"],
            [[r["N"], r["multiset_orthogonality"], r["left_invariance"], r.get("regular_residual", ""),
              r["index_independence"]] for r in diag["per_N"]])
    ver = S.get("verify", {})
    if ver.get("status") == "ok":
        rows = []
        for key in ("triple_relation", "transition_expansion"):
            v = ver[key]
            rows.append([key, v.get("holds", ""), v.get("reason", "")])
        tables["verify"] = (["check", "holds", "skipped_reason"], rows)
    return tables


def emit(report: dict, fmt: str, path) -> list:
    """Write ``report`` as JSON (one file) or CSV (a directory of tables plus
    ``manifest.csv`` and ``report.json``).  Returns the written paths."""
    path = Path(path)
    if fmt == "json":
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(report), encoding="utf-8")
        return [path]
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    path.mkdir(parents=True, exist_ok=True)
    written = []
    manifest = []
    for name, (header, rows) in sorted(_csv_tables(report).items()):
        target = path / f"{name}.csv"
        with target.open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
        manifest.append([target.name, name, len(rows)])
        written.append(target)
    meta = {k: v for k, v in report.items() if k != "sections"}
    meta["section_status"] = {k: v.get("status") for k, v in sorted(report.get("sections", {}).items())}
    (path / "report.json").write_text(dumps(meta), encoding="utf-8")
    written.append(path / "report.json")
    with (path / "manifest.csv").open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["file", "table", "rows"])
        w.writerows(manifest + [["report.json", "metadata", ""]])
    written.append(path / "manifest.csv")
    return written


def load(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def gram_document(spec: AlgebraSpec, indices, preset: PresetId | None = None) -> dict:
    from .gram import lex_permutations
    indices = list(indices)
    A = gram_generic(spec, indices)
    N = len(indices)
    dec = regular_decompose(A, N)
    v = psd_check(A)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "engine_version": __version__,
        "preset": preset.to_dict() if preset is not None else None,
        "spec": spec.to_dict(),
        "indices": indices,
        "permutations": [perm_label(pi) for pi in lex_permutations(N)],
        "matrix": [[rat(x) for x in row] for row in A.tolist()],
        "rank": rank(A),
        "decomposition": {"c": {perm_label(pi): rat(c) for pi, c in dec.coefficients.items()},
                          "residual": dec.residual},
        "left_invariance": left_invariance_check(A, N),
        "verdict": v.tag,
    }
    if not v.is_psd:
        doc["witness"] = [rat(x) for x in v.witness]
        doc["witness_value"] = rat(v.value)
    return doc
