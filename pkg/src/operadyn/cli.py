"""Command-line interface for the tables, verification suites, and traces.

Subcommands:

    tables   render the class table, its deformation, or the operator form
    verify   run exact invariant suites and report pass/fail
    trace    sample a deformation along the oscillator flow as CSV

Rational flags accept fractions ("1/2") or decimal strings ("0.5").  The
randomized verify suites draw their points from a deterministic generator
seeded by the OPERADIC_BIANCHI_SEED environment variable (integer).

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import bianchi, poly, quantum
from .bianchi import BianchiType, TAGS
from .lax import LaxFamilyParams, matrix_lax_residual, operadic_lax_residual
from .oscillator import BranchError
from .structure import PAIRS

SEED_ENV = "OPERADIC_BIANCHI_SEED"
DEFAULT_SEED = 8231

# nine independent components in column order
COLUMNS = [f"mu{i}_{j}{k}" for (j, k) in PAIRS for i in (1, 2, 3)]

_EXPECTED_KIND = {
    "I": quantum.RIGID, "VII": quantum.RIGID, "VIII": quantum.RIGID,
    "IX": quantum.RIGID,
    "II": quantum.QUANTUM_LIE, "VI": quantum.QUANTUM_LIE,
    "IV": quantum.ANOMALOUS_I, "V": quantum.ANOMALOUS_I,
    "VIIa": quantum.ANOMALOUS_II, "IIIa1": quantum.ANOMALOUS_II,
    "VIa": quantum.ANOMALOUS_II,
}


def _fraction(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    return value


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="operadyn",
        description="Exact tables, verifications, and traces for dynamically"
                    " deformed 3d Lie brackets driven by the harmonic oscillator.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--omega", type=_fraction, default=Fraction(1),
                       help="oscillator frequency, positive rational (default 1)")
        p.add_argument("--p0", type=_fraction, default=Fraction(2),
                       help="initial momentum; sqrt(2*p0) must be rational (default 2)")
        p.add_argument("--a", type=_fraction, default=Fraction(1, 2),
                       help="modulus for the parametric classes (default 1/2)")
        p.add_argument("--out", type=Path, default=None,
                       help="write output to this file instead of stdout")

    t = sub.add_parser("tables", help="render one of the three tables")
    t.add_argument("which", choices=("bianchi", "deformed", "quantum"),
                   help="bianchi: constant tensors; deformed: phase-space"
                        " entries; quantum: operator entries")
    t.add_argument("--type", dest="type_tag", default=None,
                   help="restrict to a single class tag, e.g. II or VIIa")
    t.add_argument("--format", choices=("text", "json", "csv"), default="text")
    add_common(t)

    v = sub.add_parser("verify", help="run an exact invariant suite")
    v.add_argument("which", choices=("matrix-lax", "operadic-lax",
                                     "jacobi-classical", "jacobi-quantum", "all"))
    add_common(v)

    r = sub.add_parser("trace", help="sample a deformation along the flow (CSV)")
    r.add_argument("type_tag", metavar="TYPE",
                   help="class tag, e.g. II or VIIa")
    r.add_argument("--t-samples", type=int, default=100, dest="t_samples",
                   help="number of sample times on [0, pi/omega) (default 100)")
    add_common(r)
    return parser


@dataclass(frozen=True)
class RunConfig:
    omega: Fraction
    p0: Fraction
    a: Fraction

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if not self.p0 > 0:
            raise ValueError(f"p0 must be positive, got {self.p0}")
        if not self.a > 0:
            raise ValueError(f"a must be positive, got {self.a}")


def _config(args):
    return RunConfig(omega=args.omega, p0=args.p0, a=args.a)


def _selected_types(cfg, tag):
    if tag is not None:
        if tag not in TAGS:
            raise ValueError(f"unknown type tag {tag!r}, expected one of {TAGS}")
        modulus = cfg.a if tag in ("VIIa", "VIa") else None
        return [BianchiType(tag, modulus)]
    if cfg.a == 1:
        raise ValueError("--a 1 is not valid when listing all classes:"
                         " type VIa requires a != 1")
    return bianchi.all_types(cfg.a)


# ---------------------------------------------------------------------------
# tables


def _table_rows(which, cfg, tag):
    rows = []
    for t in _selected_types(cfg, tag):
        if which == "bianchi":
            tensor = bianchi.structure_constants(t)
            text = str
        elif which == "deformed":
            tensor = bianchi.deform(t, cfg.omega, cfg.p0)
            # constant entries come back as bare numbers; promote so every
            # value parses back through Poly.from_text
            text = lambda v: str(poly.as_poly(v))
        else:
            tensor = quantum.quantize(t, cfg.omega, cfg.p0)
            text = str
        entries = [((i, j, k), text(v)) for (i, j, k), v in tensor.independent_entries()]
        rows.append((t, entries))
    return rows


def _render_tables(which, cfg, tag, fmt):
    rows = _table_rows(which, cfg, tag)
    if fmt == "json":
        doc = {
            "table": which,
            "omega": str(cfg.omega),
            "p0": str(cfg.p0),
            "a": str(cfg.a),
            "types": [
                {
                    "type": t.tag,
                    "label": t.label,
                    "a": str(t.a) if t.a is not None else None,
                    "entries": [
                        {"i": i, "j": j, "k": k, "value": value}
                        for (i, j, k), value in entries
                    ],
                }
                for t, entries in rows
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["type", "a"] + COLUMNS)
        for t, entries in rows:
            writer.writerow([t.tag, str(t.a) if t.a is not None else ""]
                            + [value for _, value in entries])
        return buf.getvalue()
    lines = [f"table {which}  omega={cfg.omega}  p0={cfg.p0}  a={cfg.a}"]
    for t, entries in rows:
        nonzero = [(idx, value) for idx, value in entries if value not in ("0", "(0)")]
        lines.append(f"{t.label}:")
        if not nonzero:
            lines.append("  (all entries zero)")
        for (i, j, k), value in nonzero:
            lines.append(f"  mu{i}_{j}{k} = {value}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verify


def _seeded_rng():
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return random.Random(DEFAULT_SEED)
    try:
        return random.Random(int(raw))
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _check_matrix_lax(cfg, rng):
    for _ in range(1000):
        qv = Fraction(rng.randint(-60, 60), rng.randint(1, 20))
        pv = Fraction(rng.randint(-60, 60), rng.randint(1, 20))
        wv = Fraction(rng.randint(1, 40), rng.randint(1, 10))
        residual = matrix_lax_residual(qv, pv, wv)
        if not all(v == 0 for v in residual.flat):
            return False, f"nonzero residual at q={qv}, p={pv}, omega={wv}"
    return True, "1000 random rational points, residual exactly zero"


def _check_operadic_lax(cfg, rng):
    vectors = []
    for probe in range(9):
        c = [Fraction(0)] * 9
        c[probe] = Fraction(1)
        vectors.append(LaxFamilyParams(tuple(c)))
    for _ in range(100):
        vectors.append(LaxFamilyParams(tuple(
            Fraction(rng.randint(-20, 20), rng.randint(1, 10)) for _ in range(9))))
    for params in vectors:
        if not operadic_lax_residual(params, cfg.omega, cfg.p0).is_zero:
            return False, f"nonzero residual for C = {params.c}"
    return True, ("nine single-parameter probes and 100 random parameter"
                  " vectors, residual identically zero")


def _check_jacobi_classical(cfg, rng):
    worst = 0.0
    for t in _selected_types(cfg, None):
        mu = bianchi.deform(t, cfg.omega, cfg.p0)
        reduced = bianchi.classical_jacobian(mu, cfg.omega, cfg.p0)
        if any(not c.is_zero for c in reduced):
            return False, f"on-shell defect of {t.label} is not zero: {reduced}"
        raw = bianchi.raw_jacobian(mu)
        w = float(cfg.omega)
        p0 = float(cfg.p0)
        for n in range(25):
            tm = (n / 25.0) * (math.pi / w) * 0.99
            state = bianchi.exact_flow(w, p0, tm)
            coords = bianchi.quasi_coords(state)
            for component in raw:
                value = component.evaluate(state.q, state.p,
                                           coords.a_plus, coords.a_minus)
                worst = max(worst, abs(value))
        if worst > 1e-10:
            return False, f"numeric defect of {t.label} reached {worst:.3e}"
    return True, (f"all classes reduce to zero on shell; numeric defect along"
                  f" the flow at most {worst:.3e}")


def _check_jacobi_quantum(cfg, rng):
    lines = []
    for t in _selected_types(cfg, None):
        cert = quantum.classify(t, cfg.omega, cfg.p0)
        expected = _EXPECTED_KIND[t.tag]
        if cert.kind != expected:
            return False, f"{t.label} classified {cert.kind}, expected {expected}"
        if expected == quantum.ANOMALOUS_II and cert.tau != -1:
            return False, f"{t.label} has tau={cert.tau}, expected -1"
        tau = f" tau={cert.tau}" if cert.tau is not None else ""
        lines.append(f"{t.label}={cert.kind}{tau}")
    return True, "; ".join(lines)


_VERIFY_CHECKS = (
    ("matrix-lax", _check_matrix_lax),
    ("operadic-lax", _check_operadic_lax),
    ("jacobi-classical", _check_jacobi_classical),
    ("jacobi-quantum", _check_jacobi_quantum),
)


def _run_verify(which, cfg):
    rng = _seeded_rng()
    lines = [f"verify  omega={cfg.omega}  p0={cfg.p0}  a={cfg.a}"]
    overall = True
    for name, check in _VERIFY_CHECKS:
        if which not in (name, "all"):
            continue
        ok, detail = check(cfg, rng)
        overall = overall and ok
        lines.append(f"{name}: {'PASS' if ok else 'FAIL'}  ({detail})")
    lines.append(f"overall: {'PASS' if overall else 'FAIL'}")
    return "\n".join(lines) + "\n", (0 if overall else 1)


# ---------------------------------------------------------------------------
# trace


def _run_trace(cfg, tag, samples):
    if tag not in TAGS:
        raise ValueError(f"unknown type tag {tag!r}, expected one of {TAGS}")
    if samples < 1:
        raise ValueError(f"--t-samples must be at least 1, got {samples}")
    t = BianchiType(tag, cfg.a if tag in ("VIIa", "VIa") else None)
    w = float(cfg.omega)
    times = [(n * math.pi / w) / samples for n in range(samples)]
    rows = bianchi.deformation_trace(t, cfg.omega, cfg.p0, times)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "q", "p", "Ap", "Am"] + COLUMNS)
    for row in rows:
        writer.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# entry point


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "tables":
            text = _render_tables(args.which, cfg, args.type_tag, args.format)
            code = 0
        elif args.command == "verify":
            text, code = _run_verify(args.which, cfg)
        else:
            text = _run_trace(cfg, args.type_tag, args.t_samples)
            code = 0
    except (ValueError, BranchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
