"""Command-line front end: tabulates dimensions and Kostka numbers, emits
the Schur and Clebsch-Gordan matrices as JSON documents, and drives the
verification and application routines.

Output is deterministic for identical argv (and --seed); every JSON document
conforms to schemas/document.schema.json shipped with the package.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from .channels import channel_normal_form, kronecker
from .combinatorics import (
    dim_p,
    dim_q,
    enumerate_partitions,
    kostka,
    parse_partition,
    partition_str,
    weights_of_size,
)
from .duality_checks import verify_block_diagonal
from .qtypes import (
    compress_rate,
    sector_distribution,
    spectrum_estimate,
    concentrate,
    trace_bound_check,
    typical_mass,
)
from .schur_transform import schur_unitary
from .sn_fourier import gpe_measure, sn_qft_from_schur
from .wigner import cg_block

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BOUND = 2
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that signals usage errors instead of exiting with code 2."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


# ---------------------------------------------------------------------------
# documents


def _num(x) -> str:
    """Deterministic decimal form (repr round-trips floats exactly)."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def matrix_document(matrix, row_labels, col_labels) -> dict:
    matrix = np.asarray(matrix, dtype=complex)
    r, c = matrix.shape
    return {
        "kind": "matrix",
        "rows": r,
        "cols": c,
        "data": [[float(v.real), float(v.imag)] for v in matrix.reshape(-1)],
        "row_labels": [str(l) for l in row_labels],
        "col_labels": [str(l) for l in col_labels],
    }


def table_document(columns, rows, scalars=None) -> dict:
    return {
        "kind": "table",
        "columns": list(columns),
        "rows": [[cell for cell in row] for row in rows],
        "scalars": dict(scalars or {}),
    }


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        text = json.dumps(doc, indent=2) + "\n"
    elif fmt == "csv":
        text = _to_csv(doc)
    else:
        text = _to_text(doc)
    if out:
        directory = os.path.dirname(os.path.abspath(out))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".schurkit-")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    else:
        sys.stdout.write(text)


def _cell(v) -> str:
    if isinstance(v, (bool, int, float)):
        return _num(v)
    return str(v)


def _to_csv(doc: dict) -> str:
    lines = []
    if doc["kind"] == "matrix":
        lines.append("row,col,re,im")
        cols = doc["cols"]
        for k, (re, im) in enumerate(doc["data"]):
            lines.append(f"{k // cols},{k % cols},{_num(re)},{_num(im)}")
    else:
        for name, value in doc["scalars"].items():
            lines.append(f"# {name}={_cell(value)}")
        lines.append(",".join(doc["columns"]))
        for row in doc["rows"]:
            lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _to_text(doc: dict) -> str:
    if doc["kind"] == "matrix":
        lines = [f"matrix {doc['rows']} x {doc['cols']}"]
        cols = doc["cols"]
        for i in range(doc["rows"]):
            cells = []
            for j in range(cols):
                re, im = doc["data"][i * cols + j]
                cells.append(f"{re:+.6f}{im:+.6f}j" if im else f"{re:+.6f}")
            lines.append(f"{doc['row_labels'][i]:>24} | " + " ".join(cells))
        return "\n".join(lines) + "\n"
    widths = [len(c) for c in doc["columns"]]
    rows = [[_cell(v) for v in row] for row in doc["rows"]]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(doc["columns"], widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    for name, value in doc["scalars"].items():
        lines.append(f"{name} = {_cell(value)}")
    return "\n".join(lines) + "\n"


def _read_state(path: str) -> np.ndarray:
    """Column vector from a JSON matrix document."""
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("cols") != 1 or len(doc.get("data", [])) != doc.get("rows"):
        raise ValueError("state file must be a matrix document with cols = 1")
    return np.array([complex(re, im) for re, im in doc["data"]])


def _parse_probs(text: str) -> tuple:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse probability vector: {text!r}")


# ---------------------------------------------------------------------------
# subcommands (each returns (document, exit code))


def _cmd_dims(args):
    rows = []
    total = 0
    for lam in enumerate_partitions(args.d, args.n):
        nq, np_ = dim_q(lam, args.d), dim_p(lam)
        total += nq * np_
        rows.append([partition_str(lam), nq, np_, nq * np_])
    doc = table_document(
        ["lambda", "dim_q", "dim_p", "dim_q*dim_p"],
        rows,
        {"total": total, "d^n": args.d**args.n},
    )
    return doc, EXIT_OK


def _cmd_kostka(args):
    weights = weights_of_size(args.d, args.n)
    lams = (
        [parse_partition(args.lam)]
        if args.lam
        else enumerate_partitions(args.d, args.n)
    )
    rows = [
        [partition_str(lam)] + [kostka(lam, mu) for mu in weights] for lam in lams
    ]
    columns = ["lambda"] + [",".join(str(x) for x in mu) for mu in weights]
    return table_document(columns, rows), EXIT_OK


def _cmd_schur(args):
    su, codec = schur_unitary(args.d, args.n)
    col_labels = [
        "|" + "".join(str(x) for x in np.unravel_index(k, (args.d,) * args.n)) + ">"
        for k in range(args.d**args.n)
    ]
    return matrix_document(su.matrix, codec.row_strings(), col_labels), EXIT_OK


def _cmd_cg(args):
    lam = parse_partition(args.lam) if args.lam else ()
    block = cg_block(lam, args.d)
    rows = [f"lam'={partition_str(lp)} q={g}" for lp, g in block.row_labels]
    cols = [f"q={g} i={i}" for g, i in block.col_labels]
    return matrix_document(block.matrix, rows, cols), EXIT_OK


def _haar(rng, d: int) -> np.ndarray:
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _cmd_verify(args):
    rng = np.random.default_rng(args.seed)
    perms = None
    rows = []
    worst_leak = worst_res = 0.0
    for t in range(args.trials):
        u = _haar(rng, args.d)
        s = tuple(int(x) + 1 for x in rng.permutation(args.n))
        report = verify_block_diagonal(u, s, args.d, args.n, tol=args.tol)
        worst_leak = max(worst_leak, report.leakage)
        worst_res = max(worst_res, report.worst_factor_residual)
        rows.append([t, report.leakage, report.worst_factor_residual])
    ok = worst_leak < args.tol and worst_res < 10 * args.tol
    doc = table_document(
        ["trial", "leakage", "factor_residual"],
        rows,
        {
            "max_leakage": worst_leak,
            "max_factor_residual": worst_res,
            "tolerance": args.tol,
            "passed": ok,
        },
    )
    return doc, EXIT_OK if ok else EXIT_BOUND


def _cmd_rho(args):
    r = _parse_probs(args.r)
    dist = sector_distribution(r, args.n)
    rows = [
        [partition_str(lam), dim_q(lam, len(r)), dim_p(lam), w]
        for lam, w in dist.items()
    ]
    doc = table_document(
        ["lambda", "dim_q", "dim_p", "probability"],
        rows,
        {"total": math.fsum(w for _, _, _, w in rows)},
    )
    return doc, EXIT_OK


def _cmd_spectrum(args):
    r = _parse_probs(args.r)
    report = spectrum_estimate(r, args.n, args.trials, seed=args.seed)
    rows = [[delta, rate] for delta, rate in report.failure_rates.items()]
    doc = table_document(
        ["delta", "failure_rate"],
        rows,
        {"n": args.n, "trials": args.trials, "seed": args.seed},
    )
    return doc, EXIT_OK


def _cmd_concentrate(args):
    psi = _read_state(args.state)
    report = concentrate(psi, args.n)
    rows = []
    for lam, w in report.outcome_weights.items():
        sv = report.schmidt_values[lam]
        spread = float(sv.max() - sv.min()) if len(sv) else 0.0
        rows.append([partition_str(lam), dim_p(lam), w, spread])
    doc = table_document(
        ["lambda", "dim_p", "probability", "schmidt_spread"],
        rows,
        {
            "off_diagonal_mass": report.off_diagonal_mass,
            "distortion_free_residual": report.distortion_free_residual,
        },
    )
    ok = report.distortion_free_residual < args.tol and report.off_diagonal_mass < args.tol
    return doc, EXIT_OK if ok else EXIT_BOUND


def _cmd_compress(args):
    r = _parse_probs(args.r)
    record = compress_rate(r, args.n, args.rate)
    rows = [[partition_str(lam)] for lam in record.kept]
    doc = table_document(
        ["kept_lambda"],
        rows,
        {
            "rate": record.rate,
            "effective_rate": record.effective_rate,
            "kept_mass": record.kept_mass,
            "error_mass": record.error_mass,
            "kept_dimension": record.kept_dimension,
            "dimension_ok": record.dimension_ok,
            "error_exponent_bound": record.error_exponent_bound,
        },
    )
    return doc, EXIT_OK if record.dimension_ok else EXIT_BOUND


def _cmd_typebounds(args):
    r = _parse_probs(args.r)
    rows = []
    ok = True
    for lam in enumerate_partitions(len(r), args.n):
        rec = trace_bound_check(lam, r, args.n)
        ok = ok and rec.bounds_hold
        rows.append(
            [partition_str(lam), rec.value, rec.lower, rec.upper, rec.bounds_hold]
        )
    mass = typical_mass(r, args.n, args.delta)
    ok = ok and mass.bound_holds
    doc = table_document(
        ["lambda", "mass", "lower", "upper", "holds"],
        rows,
        {
            "delta": args.delta,
            "typical_mass": mass.mass,
            "typical_lower_bound": mass.lower_bound,
            "trivially_satisfied": mass.trivially_satisfied,
            "all_bounds_hold": ok,
        },
    )
    return doc, EXIT_OK if ok else EXIT_BOUND


def _cmd_qft(args):
    f, layout = sn_qft_from_schur(args.n)
    rows = [f"lam={partition_str(l)} a={a} b={b}" for l, a, b in _qft_rows(layout)]
    cols = ["|" + "".join(str(v) for v in s) + ">" for s in f.col_labels]
    doc = matrix_document(f.matrix, rows, cols)
    residual = f.unitarity_residual()
    return doc, EXIT_OK if residual < args.tol else EXIT_BOUND


def _qft_rows(layout):
    out = []
    for lam, sl in layout.blocks:
        k = dim_p(lam)
        for a in range(1, k + 1):
            for b in range(1, k + 1):
                out.append((lam, a, b))
    return out


def _cmd_gpe(args):
    state = _read_state(args.state)
    result = gpe_measure(state, args.d, args.n)
    rows = [
        [partition_str(lam), p, result.ancilla_fidelity.get(lam, "")]
        for lam, p in result.distribution.items()
    ]
    doc = table_document(["lambda", "probability", "ancilla_fidelity"], rows)
    return doc, EXIT_OK


_BUILTIN_CHANNELS = {
    # isometric extensions |i> -> |i>_B |e(i)>_E for two-dimensional input
    "identity": [[1, 0], [0, 0], [0, 1], [0, 0]],
    "dephasing": [[1, 0], [0, 0], [0, 0], [0, 1]],
}


def _read_channel(path: str) -> np.ndarray:
    if path in _BUILTIN_CHANNELS:
        return np.array(_BUILTIN_CHANNELS[path], dtype=complex)
    with open(path) as fh:
        doc = json.load(fh)
    if len(doc.get("data", [])) != doc.get("rows", 0) * doc.get("cols", 0):
        raise ValueError("channel file must be a matrix document")
    return np.array([complex(re, im) for re, im in doc["data"]]).reshape(
        doc["rows"], doc["cols"]
    )


def _cmd_channel(args):
    u_n = _read_channel(args.spec)
    nf = channel_normal_form(u_n, args.n)
    rows = []
    for key in sorted(nf.coefficients, key=str):
        lam_a, qa, lam_b, lam_e, qb, qe, alpha = key
        c = nf.coefficients[key]
        rows.append(
            [
                partition_str(lam_a),
                qa,
                partition_str(lam_b),
                partition_str(lam_e),
                qb,
                qe,
                alpha,
                kronecker(lam_a, lam_b, lam_e),
                c.real,
                c.imag,
            ]
        )
    doc = table_document(
        ["lamA", "qA", "lamB", "lamE", "qB", "qE", "alpha", "g", "re", "im"],
        rows,
        {
            "reconstruction_residual": nf.reconstruction_residual,
            "isometry_residual": nf.isometry_residual,
        },
    )
    ok = nf.reconstruction_residual < args.tol and nf.isometry_residual < args.tol
    return doc, EXIT_OK if ok else EXIT_BOUND


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> _Parser:
    parser = _Parser(prog="schurkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, **flags):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if flags.pop("d", False):
            p.add_argument("--d", type=int, required=True, help="local dimension")
        if flags.pop("n", False):
            p.add_argument("--n", type=int, required=True, help="number of systems")
        if flags.pop("lam", False):
            p.add_argument(
                "--lambda", dest="lam", default=None, help="partition, comma syntax"
            )
        if flags.pop("r", False):
            p.add_argument("--r", required=True, help="probabilities, comma syntax")
        if flags.pop("state", False):
            p.add_argument(
                "--state", required=True, help="JSON matrix document, column vector"
            )
        for flag, (kind, default, help_text2) in flags.items():
            p.add_argument(f"--{flag}", type=kind, default=default, help=help_text2)
        p.add_argument(
            "--format",
            choices=("table", "json", "csv"),
            default="table",
            help="output format",
        )
        p.add_argument("--out", default=None, help="write output to a file atomically")
        return p

    tol = ("tol", (float, 1e-10, "numerical tolerance"))
    add("dims", _cmd_dims, "sector dimension table", d=True, n=True)
    add("kostka", _cmd_kostka, "Kostka numbers by weight", d=True, n=True, lam=True)
    add("schur", _cmd_schur, "the Schur transform matrix", d=True, n=True)
    add("cg", _cmd_cg, "one Clebsch-Gordan coupling block", d=True, lam=True)
    add(
        "verify",
        _cmd_verify,
        "randomized duality verification",
        d=True,
        n=True,
        seed=(int, 0, "RNG seed"),
        trials=(int, 20, "random (U, s) pairs"),
        **dict([tol]),
    )
    add("rho", _cmd_rho, "sector distribution of a product state", n=True, r=True)
    add(
        "spectrum",
        _cmd_spectrum,
        "Monte Carlo spectrum estimation",
        n=True,
        r=True,
        seed=(int, 0, "RNG seed"),
        trials=(int, 10000, "samples"),
    )
    add(
        "concentrate",
        _cmd_concentrate,
        "entanglement concentration report",
        n=True,
        state=True,
        **dict([tol]),
    )
    add(
        "compress",
        _cmd_compress,
        "universal compression at a fixed rate",
        n=True,
        r=True,
        rate=(float, 1.0, "qubits per symbol"),
    )
    add(
        "typebounds",
        _cmd_typebounds,
        "sector-mass sandwich and typicality bounds",
        n=True,
        r=True,
        delta=(float, 0.1, "typicality radius"),
    )
    add("qft", _cmd_qft, "symmetric-group Fourier transform", n=True, **dict([tol]))
    add(
        "gpe",
        _cmd_gpe,
        "generalized phase estimation marginals",
        d=True,
        n=True,
        state=True,
    )
    add(
        "channel",
        _cmd_channel,
        "normal form of n channel copies",
        n=True,
        spec=(str, "dephasing", "isometry file or builtin name"),
        **dict([tol]),
    )
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(str(exc))
        return EXIT_USAGE
    try:
        doc, code = args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    _emit(doc, args.format, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
