"""Command-line interface: decompose, rep, wigner and verify subcommands.

All output is deterministic: identical inputs produce byte-identical output.
JSON goes to stdout with full round-trip float formatting; Wigner tables are
CSV with comment-style header and sum lines. Exit codes: 0 success, 1 failed
verification checks, 2 invalid input or flags, 3 decomposition failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .metaplectic import (
    covariance_residual,
    phase_defect,
    u_of,
)
from .oracle import verify_sw_kernel, verify_uniqueness
from .qops import (
    EVEN,
    ODD,
    ParityError,
    check_parity,
    delta_cohendet,
    lattice_modulus,
    weyl_symmetric,
)
from .symplectic import (
    ENUMERATION_BOUND,
    DecompositionFailed,
    DepthExceeded,
    GenWord,
    NotSymplectic,
    SympMat,
    decompose,
    enumerate_group,
    generator,
    h_t,
)
from .wigner import NotNormalized, QuantumState, wigner_of

PROJECTIVITY_PAIRS = 200
PROJECTIVITY_SEED = 20240
WORD_SAMPLE_LENGTH = 6


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _parse_matrix(text: str, modulus: int) -> SympMat:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"--matrix expects 4 comma-separated integers, got {text!r}")
    a, b, c, d = (int(p) for p in parts)
    return SympMat(a, b, c, d, modulus)


def _symmetric_order(modulus: int) -> list[int]:
    # Canonical indices reordered by their symmetric representative.
    return sorted(range(modulus), key=lambda v: v - modulus if v > modulus // 2 else v)


def _reorder(matrix: np.ndarray, order: list[int]) -> np.ndarray:
    return matrix[np.ix_(order, order)]


def _complex_rows(matrix: np.ndarray) -> list[list[list[float]]]:
    return [[[0.0 + z.real, 0.0 + z.imag] for z in row] for row in matrix]


def _float(value: float) -> float:
    # Collapses -0.0 so formatting is stable across code paths.
    return 0.0 + float(value)


def cmd_decompose(args: argparse.Namespace) -> int:
    if args.modulus < 2:
        return _fail(f"modulus must be >= 2, got {args.modulus}", 2)
    try:
        mat = _parse_matrix(args.matrix, args.modulus)
    except NotSymplectic as exc:
        return _fail(str(exc), 2)
    except ValueError as exc:
        return _fail(str(exc), 2)
    try:
        word = decompose(mat, method=args.method)
    except (DecompositionFailed, DepthExceeded) as exc:
        return _fail(str(exc), 3)
    verified = word.evaluate() == mat
    if not verified:
        return _fail("decomposition produced a word that does not verify", 3)
    payload = {
        "modulus": args.modulus,
        "matrix": list(mat.entries),
        "word": [{"gen": sign, "exp": exp} for sign, exp in word.factors],
        "verified": True,
    }
    print(json.dumps(payload))
    return 0


def cmd_rep(args: argparse.Namespace) -> int:
    try:
        check_parity(args.dim, args.parity)
    except ParityError as exc:
        return _fail(str(exc), 2)
    modulus = lattice_modulus(args.dim, args.parity)
    try:
        mat = _parse_matrix(args.matrix, modulus)
    except (NotSymplectic, ValueError) as exc:
        return _fail(str(exc), 2)
    try:
        unitary = u_of(mat, args.parity)
    except (DecompositionFailed, DepthExceeded) as exc:
        return _fail(str(exc), 3)
    residual = covariance_residual(unitary.matrix, mat, args.parity)
    display = unitary.matrix
    if args.index_style == "symmetric":
        display = _reorder(display, _symmetric_order(args.dim))
    payload = {
        "dim": args.dim,
        "parity": args.parity,
        "modulus": modulus,
        "matrix": list(mat.entries),
        "unitary": _complex_rows(display),
        "covariance_residual": _float(residual),
    }
    print(json.dumps(payload))
    return 0


def _load_state(path: str) -> QuantumState:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    dim = int(data["dim"])
    amplitudes = data["amplitudes"]
    if len(amplitudes) != dim:
        raise ValueError(f"state file declares dim {dim} but has {len(amplitudes)} amplitudes")
    vec = np.array([complex(re, im) for re, im in amplitudes])
    return QuantumState(vec)


def cmd_wigner(args: argparse.Namespace) -> int:
    try:
        state = _load_state(args.state)
    except NotNormalized as exc:
        return _fail(str(exc), 2)
    except (OSError, KeyError, TypeError, ValueError) as exc:
        return _fail(f"cannot read state file: {exc}", 2)
    try:
        table = wigner_of(state, args.parity)
    except ParityError as exc:
        return _fail(str(exc), 2)
    values = table.values
    header = f"# parity={args.parity}, modulus={table.modulus}"
    if args.index_style == "symmetric":
        order = _symmetric_order(table.modulus)
        values = values[np.ix_(order, order)]
        header += ", index-style=symmetric"
    lines = [header]
    for row in values:
        lines.append(",".join(repr(_float(v)) for v in row))
    lines.append(f"# sum={repr(_float(values.sum()))}")
    print("\n".join(lines))
    return 0


def _sampled_elements(modulus: int, count: int, rng) -> list[SympMat]:
    samples = []
    for _ in range(count):
        factors = tuple(
            ("+" if rng.integers(2) else "-", int(rng.integers(1, modulus)))
            for _ in range(WORD_SAMPLE_LENGTH)
        )
        samples.append(GenWord(factors, modulus).evaluate())
    return samples


def _verify_checks(n: int, parity: str, suite: str, tol: float | None):
    modulus = lattice_modulus(n, parity)

    def pick(default: float) -> float:
        return default if tol is None else tol

    checks: list[tuple[str, float, float]] = []
    if suite in ("sw", "all"):
        report = verify_sw_kernel(parity, n)
        for name, residual in report.checks():
            checks.append((f"sw_{name}", residual, pick(1e-12)))
    if suite in ("translation", "all") and parity == ODD:
        base = delta_cohendet(n, 0, 0)
        worst = 0.0
        for m in range(n):
            for nn in range(n):
                weyl = weyl_symmetric(n, m, nn)
                moved = weyl @ base @ weyl.conj().T
                worst = max(worst, float(np.abs(moved - delta_cohendet(n, m, nn)).max()))
        checks.append(("translation_weyl", worst, pick(1e-12)))
    generators = [
        ("hplus", generator("+", modulus)),
        ("hminus", generator("-", modulus)),
        ("ht", h_t(modulus)),
    ]
    if suite in ("covariance", "all"):
        for name, mat in generators:
            unitary = u_of(mat, parity)
            checks.append(
                (
                    f"covariance_{name}",
                    covariance_residual(unitary.matrix, mat, parity),
                    pick(1e-10),
                )
            )
        if modulus <= ENUMERATION_BOUND:
            worst = 0.0
            for mat in enumerate_group(modulus):
                unitary = u_of(mat, parity)
                worst = max(worst, covariance_residual(unitary.matrix, mat, parity))
            checks.append(("covariance_group", worst, pick(1e-9)))
    if suite in ("projectivity", "all"):
        rng = np.random.default_rng(PROJECTIVITY_SEED)
        worst = 0.0
        cache: dict[SympMat, np.ndarray] = {}

        def rep_of(mat: SympMat) -> np.ndarray:
            if mat not in cache:
                cache[mat] = u_of(mat, parity).matrix
            return cache[mat]

        left = _sampled_elements(modulus, PROJECTIVITY_PAIRS, rng)
        right = _sampled_elements(modulus, PROJECTIVITY_PAIRS, rng)
        for s1, s2 in zip(left, right):
            product = rep_of(s1 @ s2)
            factored = rep_of(s1) @ rep_of(s2)
            worst = max(worst, phase_defect(product, factored))
        checks.append(("projectivity", worst, pick(1e-9)))
    if suite in ("uniqueness", "all"):
        for name, mat in generators:
            report = verify_uniqueness(mat, parity)
            checks.append(
                (f"uniqueness_nullity_{name}", float(abs(report.nullity - 1)), 0.5)
            )
            residual = (
                report.closed_form_residual
                if report.closed_form_residual is not None
                else float("inf")
            )
            checks.append((f"uniqueness_phase_{name}", residual, pick(1e-9)))
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        check_parity(args.dim, args.parity)
    except ParityError as exc:
        return _fail(str(exc), 2)
    if args.suite == "translation" and args.parity == EVEN:
        return _fail("translation suite is defined for odd parity only", 2)
    checks = _verify_checks(args.dim, args.parity, args.suite, args.tol)
    results = [
        {
            "name": name,
            "max_residual": _float(residual),
            "pass": bool(residual < tolerance),
        }
        for name, residual, tolerance in sorted(checks)
    ]
    all_pass = all(entry["pass"] for entry in results)
    payload = {
        "suite": args.suite,
        "dim": args.dim,
        "parity": args.parity,
        "checks": results,
        "pass": all_pass,
    }
    print(json.dumps(payload))
    return 0 if all_pass else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasepoint",
        description="Discrete phase space toolkit: symplectic words, "
        "covariant unitaries, Wigner tables and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="factor a symplectic matrix into generator powers")
    p_dec.add_argument("--modulus", type=int, required=True, help="ring modulus M")
    p_dec.add_argument("--matrix", required=True, help="entries a,b,c,d")
    p_dec.add_argument(
        "--method", choices=["euclid", "bfs"], default="euclid",
        help="Euclidean fast path (default) or breadth-first search",
    )
    p_dec.set_defaults(func=cmd_decompose)

    p_rep = sub.add_parser("rep", help="emit the covariant unitary for a symplectic matrix")
    p_rep.add_argument("--dim", type=int, required=True, help="Hilbert-space dimension N")
    p_rep.add_argument("--parity", choices=[ODD, EVEN], required=True)
    p_rep.add_argument("--matrix", required=True, help="entries a,b,c,d (modulus N or 2N)")
    p_rep.add_argument("--index-style", choices=["canonical", "symmetric"], default="canonical")
    p_rep.set_defaults(func=cmd_rep)

    p_wig = sub.add_parser("wigner", help="compute the Wigner table of a state file")
    p_wig.add_argument("--state", required=True, help="JSON file with dim and amplitudes")
    p_wig.add_argument("--parity", choices=[ODD, EVEN], required=True)
    p_wig.add_argument("--index-style", choices=["canonical", "symmetric"], default="canonical")
    p_wig.set_defaults(func=cmd_wigner)

    p_ver = sub.add_parser("verify", help="run a verification suite and report residuals")
    p_ver.add_argument("--dim", type=int, required=True)
    p_ver.add_argument("--parity", choices=[ODD, EVEN], required=True)
    p_ver.add_argument(
        "--suite",
        choices=["sw", "translation", "covariance", "projectivity", "uniqueness", "all"],
        default="all",
    )
    p_ver.add_argument("--tol", type=float, default=None, help="override all check tolerances")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
