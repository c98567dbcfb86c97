"""``frameduals`` command line.

Subcommands: ``analyze``, ``optimize``, ``construct``, ``verify``,
``simulate`` and ``examples``.  Reports are ``key: value`` lines with 6
significant digits, or a single JSON document with ``--json``.  Exit
status is 0 on success, 1 for invalid input and 2 for numerical failures
(including failed property checks in ``verify``).
"""

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from . import construct, optimal
from .erasure import (
    MeasureSpec,
    ProbabilitySequence,
    WeightSequence,
    lipschitz_bound,
    max_measure,
    measure_for_set,
    weights_from_probabilities,
)
from .errors import FrameDualsError, NumericalError, ValidationError
from .frameio import format_frame, load_frame_file, parse_frame_text
from .frames import Frame, apply_unitary, canonical_dual, frame_bounds, frame_distance
from .simulate import SimConfig, run_simulation


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


def parse_list(text, name="list"):
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ValidationError(f"{name} must be comma-separated decimals, got {text!r}") from None
    if not vals:
        raise ValidationError(f"{name} is empty")
    return vals


def parse_lambdas(text):
    lams = parse_list(text, "--lambda")
    for lam in lams:
        if not 0.0 <= lam <= 1.0:
            raise ValidationError(f"lambda values must lie in [0, 1], got {lam}")
    return lams


def bundled_text(name):
    stem = name[:-6] if name.endswith(".frame") else name
    if stem not in construct.EXAMPLE_IDS:
        raise ValidationError(f"unknown example {name!r}; known: {', '.join(construct.EXAMPLE_IDS)}")
    return resources.files("frameduals").joinpath("data", f"{stem}.frame").read_text("utf-8")


def resolve_frame(path):
    """Load a frame file, falling back to the bundled examples by name."""
    if Path(path).exists():
        return load_frame_file(path)
    stem = Path(path).name
    stem = stem[:-6] if stem.endswith(".frame") else stem
    if stem in construct.EXAMPLE_IDS:
        return parse_frame_text(bundled_text(stem))
    raise ValidationError(f"no such frame file: {path}")


def _weights(args, F, q_file, p_file):
    if getattr(args, "weights", None):
        return WeightSequence.auto(parse_list(args.weights, "--weights"), F.n)
    if getattr(args, "probs", None):
        return weights_from_probabilities(parse_list(args.probs, "--probs"), F.n)
    if q_file is not None:
        return q_file
    if p_file is not None:
        return weights_from_probabilities(p_file, F.n)
    raise ValidationError("no weights: pass --weights or --probs, or add them to the frame file")


# ---------------------------------------------------------------------------
# output


def _cplx(z):
    z = complex(z)
    return [z.real, z.imag]


def frame_json(F):
    return {"n": F.n, "N": F.N, "vectors": [[_cplx(z) for z in v] for v in F.vectors]}


def matrix_json(M):
    return [[_cplx(z) for z in row] for row in np.asarray(M)]


def _num(x):
    z = complex(x)
    if z.imag == 0:
        return format(z.real, ".6g")
    return f"{z.real:.6g}{z.imag:+.6g}j"


class Report:
    """Collects key/value output; renders as text or JSON."""

    def __init__(self):
        self.data = {}
        self.lines = []

    def put(self, key, value, text=None):
        self.data[key] = value
        self.lines.append(f"{key}: {text if text is not None else self._text(value)}")

    def block(self, key, value, rows):
        self.data[key] = value
        self.lines.append(f"{key}:")
        self.lines.extend("  " + r for r in rows)

    @staticmethod
    def _text(v):
        if isinstance(v, bool):
            return "yes" if v else "no"
        if isinstance(v, (int, np.integer)):
            return str(v)
        if isinstance(v, float):
            return _num(v)
        if isinstance(v, (list, tuple)):
            return "[" + ", ".join(Report._text(x) for x in v) + "]"
        if v is None:
            return "-"
        return str(v)

    def render(self, as_json):
        if as_json:
            return json.dumps(self.data, indent=2, allow_nan=False)
        return "\n".join(self.lines)


def _rows(M):
    return ["  ".join(f"{_num(z):>12}" for z in row) for row in np.asarray(M)]


def _frame_block(rep, key, F):
    rep.block(key, frame_json(F), _rows(F.vectors))


def _measure_json(r):
    return {"value": r.value, "argmax": list(r.argmax), "per_location": r.per_location.tolist()}


def _cert_json(c):
    return {
        "lambda": c.lam,
        "L_lambda": c.L_lambda,
        "Lambda1": list(c.Lambda1),
        "Lambda2": list(c.Lambda2),
        "H1_cap_H2_trivial": c.H1_cap_H2_trivial,
        "Lambda1_independent": c.Lambda1_independent,
        "M": c.M,
        "Gamma1": list(c.Gamma1),
        "Gamma2": list(c.Gamma2),
        "E1_cap_E2_trivial": c.E1_cap_E2_trivial,
        "Gamma2_independent": c.Gamma2_independent,
        "tight": c.tight,
        "equal_weighted_norms": c.equal_weighted_norms,
        "verdicts": {
            k: {"applies": v.applies, "conclusion": v.conclusion, "reason": v.reason}
            for k, v in c.verdicts.items()
        },
    }


def _result_json(r):
    return {
        "best_value": r.best_value,
        "canonical_value": r.canonical_value,
        "improved_over_canonical": r.improved_over_canonical,
        "converged": r.converged,
        "iterations": r.iterations,
        "best_dual": frame_json(r.best_dual),
        "value_trace": r.value_trace.tolist(),
    }


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args, rep):
    F, qf, pf = resolve_frame(args.frame)
    q = _weights(args, F, qf, pf)
    b = frame_bounds(F)
    C = canonical_dual(F)
    rep.put("n", F.n)
    rep.put("N", F.N)
    rep.put("lower_bound", b.lower)
    rep.put("upper_bound", b.upper)
    rep.put("tight", b.tight)
    rep.put("weights", q.q.tolist())
    rep.put("weights_strict", q.strict)
    rep.block("frame_operator", matrix_json(F.frame_operator()), _rows(F.frame_operator()))
    _frame_block(rep, "canonical_dual", C)
    measures = []
    for lam in parse_lambdas(args.__dict__["lambda"]):
        r = max_measure(F, C, q, MeasureSpec(lam, args.erasures))
        measures.append({"lambda": lam, "erasures": args.erasures, **_measure_json(r)})
        rep.lines.append(
            f"measure(lambda={_num(lam)}, m={args.erasures}): {_num(r.value)}  argmax {list(r.argmax)}"
        )
    rep.data["measures"] = measures


def _config(args):
    return optimal.OptimizationConfig(seed=args.seed, tolerance=args.tolerance)


def cmd_optimize(args, rep):
    F, qf, pf = resolve_frame(args.frame)
    q = _weights(args, F, qf, pf)
    runs = []
    for lam in parse_lambdas(args.__dict__["lambda"]):
        res = optimal.optimize_dual(F, q, lam, _config(args))
        cert = optimal.certify_canonical(F, q, lam)
        flags = optimal.disagreements(cert, res)
        run = {"lambda": lam, "result": _result_json(res), "certificate": _cert_json(cert),
               "canonical_optimal": optimal.canonical_is_optimal(res), "flags": flags}
        runs.append(run)
        rep.lines.append(f"lambda: {_num(lam)}")
        rep.lines.append(f"  best_value: {_num(res.best_value)}")
        rep.lines.append(f"  canonical_value: {_num(res.canonical_value)}")
        rep.lines.append(f"  improved_over_canonical: {Report._text(res.improved_over_canonical)}")
        rep.lines.append(f"  distance_to_canonical: {_num(frame_distance(res.best_dual, canonical_dual(F)))}")
        rep.lines.append("  best_dual:")
        rep.lines.extend("    " + r for r in _rows(res.best_dual.vectors))
        rep.lines.append(f"  L_lambda: {_num(cert.L_lambda)}  Lambda1: {list(cert.Lambda1)}")
        for k, v in cert.verdicts.items():
            extra = f" ({v.reason})" if v.reason else ""
            rep.lines.append(f"  {k}: {'applies' if v.applies else 'n/a'}, {v.conclusion}{extra}")
        rep.lines.append(f"  agreement: {'flagged: ' + '; '.join(flags) if flags else 'ok'}")
    rep.data["runs"] = runs


def cmd_construct(args, rep):
    if not args.weights:
        raise ValidationError("construct needs --weights")
    if args.dim is None:
        raise ValidationError("construct needs --dim")
    q = WeightSequence(parse_list(args.weights, "--weights"), args.dim)
    out = construct.prob_equal_norm_parseval(q)
    rep.put("parseval_residual", out.parseval_residual)
    rep.put("norm_residual", out.norm_residual)
    rep.put("ok", out.parseval_residual <= 1e-10 and out.norm_residual <= 1e-10)
    _frame_block(rep, "frame", out.frame)
    if args.out:
        Path(args.out).write_text(format_frame(out.frame, q), encoding="utf-8")
        rep.put("written", str(args.out))


def _check(rep, results, name, ok, detail=""):
    results.append({"check": name, "passed": bool(ok), "detail": detail})
    rep.lines.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))


def cmd_verify(args, rep):
    F, qf, pf = resolve_frame(args.frame)
    q = _weights(args, F, qf, pf)
    lams = parse_lambdas(args.__dict__["lambda"])
    trials = args.trials or 50
    cfg = _config(args)
    C = canonical_dual(F)
    duals = [C] + [construct.random_dual(F, [args.seed, k]) for k in range(trials)]
    results = []

    if q.strict:
        worst = min(max_measure(F, G, q, MeasureSpec(l)).value for G in duals for l in lams)
        _check(rep, results, "dual-pair floor A >= 1", worst >= 1 - 1e-9, f"min {_num(worst)}")
    dev = 0.0
    for G in duals[:10]:
        for l in lams:
            fast = max_measure(F, G, q, MeasureSpec(l))
            for i in range(F.N):
                slow = measure_for_set(F, G, q, l, (i,), exact_rank_one=False, check=False)
                dev = max(dev, abs(slow - fast.per_location[i]))
    _check(rep, results, "closed form matches eigen/SVD route", dev <= 1e-8, f"max dev {dev:.2e}")

    L = lipschitz_bound(F, q)
    excess = -np.inf
    for a, b in zip(duals[:-1], duals[1:]):
        for l in lams:
            d = abs(max_measure(F, a, q, MeasureSpec(l)).value - max_measure(F, b, q, MeasureSpec(l)).value)
            excess = max(excess, d - L * frame_distance(a, b))
    _check(rep, results, "Lipschitz bound", excess <= 1e-12, f"max excess {excess:.2e}")

    excess = -np.inf
    for a, b in zip(duals[:-1], duals[1:]):
        for l in lams:
            va = max_measure(F, a, q, MeasureSpec(l)).value
            vb = max_measure(F, b, q, MeasureSpec(l)).value
            for t in np.linspace(0, 1, 11):
                G = Frame(t * a.synthesis + (1 - t) * b.synthesis, check=False)
                v = max_measure(F, G, q, MeasureSpec(l)).value
                excess = max(excess, v - (t * va + (1 - t) * vb))
    _check(rep, results, "convexity along segments", excess <= 1e-10, f"max excess {excess:.2e}")

    U = construct.random_unitary(F.n, [args.seed, 99])
    UF = apply_unitary(U, F)
    dev = 0.0
    for l in lams:
        a = max_measure(F, C, q, MeasureSpec(l)).value
        b = max_measure(UF, apply_unitary(U, C), q, MeasureSpec(l)).value
        dev = max(dev, abs(a - b))
    _check(rep, results, "unitary invariance of the measure", dev <= 1e-9, f"max dev {dev:.2e}")

    for l in lams:
        res = optimal.optimize_dual(F, q, l, cfg)
        cert = optimal.certify_canonical(F, q, l)
        flags = optimal.disagreements(cert, res)
        _check(rep, results, f"certificate agrees with optimizer (lambda={_num(l)})", not flags,
               "; ".join(flags) or f"best {_num(res.best_value)}, canonical {_num(res.canonical_value)}")
        ok = res.best_value <= res.canonical_value + cfg.tolerance
        _check(rep, results, f"optimizer never worse than canonical (lambda={_num(l)})", ok)
        if q.strict and optimal.pair_optimality(F, C, q, l).optimal:
            v = max_measure(F, C, q, MeasureSpec(l)).value
            _check(rep, results, f"optimal pair has value 1 (lambda={_num(l)})", abs(v - 1) <= 1e-9)

    if frame_bounds(F).tight:
        for l in lams:
            if l < 1:
                r = optimal.cross_measure_report(F, q, l, cfg)
                _check(rep, results, f"tight-frame measures agree (lambda={_num(l)})", r.agree(),
                       f"norm {r.operator_norm}, radius {r.spectral}, averaged {r.averaged}")
    rep.data["checks"] = results
    failed = [r["check"] for r in results if not r["passed"]]
    rep.put("passed", not failed)
    if failed:
        raise _VerifyFailed(rep)


class _VerifyFailed(NumericalError):
    def __init__(self, rep):
        super().__init__("property checks failed")
        self.report = rep


def cmd_simulate(args, rep):
    F, qf, pf = resolve_frame(args.frame)
    if args.probs:
        p = ProbabilitySequence(parse_list(args.probs, "--probs"))
    elif pf is not None:
        p = pf
    else:
        raise ValidationError("simulate needs erasure probabilities (--probs or a probs line)")
    q = weights_from_probabilities(p, F.n)
    C = canonical_dual(F)
    report = run_simulation(F, C, p, q, SimConfig(trials=args.trials or 100_000, seed=args.seed))
    bound = max_measure(F, C, q, MeasureSpec(0.0)).value
    rep.put("trials", report.trials)
    rep.put("location_counts", report.location_counts.tolist())
    rep.put("frequencies", report.frequencies.tolist())
    rep.put("probabilities", p.p.tolist())
    rep.put("mean_error", report.mean_error)
    rep.put("max_error", report.max_error)
    rep.put("per_location_mean", report.per_location_mean.tolist())
    rep.put("operator_norm_bound", bound)
    rep.put("within_bound", report.max_error <= bound + 1e-9)


def cmd_examples(args, rep):
    names = [args.name] if args.name else list(construct.EXAMPLE_IDS)
    texts = {}
    for name in names:
        stem = name[:-6] if name.endswith(".frame") else name
        texts[stem] = bundled_text(stem)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for stem, t in texts.items():
            (out / f"{stem}.frame").write_text(t, encoding="utf-8")
            rep.put(stem, str(out / f"{stem}.frame"))
    else:
        rep.data.update(texts)
        rep.lines.append("".join(texts.values()).rstrip("\n"))


COMMANDS = {
    "analyze": cmd_analyze,
    "optimize": cmd_optimize,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
    "examples": cmd_examples,
}


def build_parser():
    p = _Parser(prog="frameduals", description="Optimal dual frames under probabilistic erasures.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, frame=True, lam=None):
        if frame:
            sp.add_argument("--frame", required=True, metavar="PATH",
                            help="frame file, or the name of a bundled example")
        sp.add_argument("--weights", metavar="LIST", help="comma-separated weights q_i")
        sp.add_argument("--probs", metavar="LIST", help="comma-separated erasure probabilities p_i")
        if lam is not None:
            sp.add_argument("--lambda", default=lam, metavar="LIST",
                            help=f"comma-separated lambda values in [0, 1] (default {lam})")
        sp.add_argument("--seed", type=int, default=0, metavar="U64")
        sp.add_argument("--json", action="store_true", help="emit one JSON document")

    sp = sub.add_parser("analyze", help="bounds, frame operator, canonical dual, measures")
    common(sp, lam="0,1")
    sp.add_argument("--erasures", type=int, default=1, metavar="M")

    sp = sub.add_parser("optimize", help="optimal dual search and certificates")
    common(sp, lam="0.5")
    sp.add_argument("--tolerance", type=float, default=1e-10, metavar="X")

    sp = sub.add_parser("construct", help="equal-norm Parseval frame for given weights")
    common(sp, frame=False)
    sp.add_argument("--dim", type=int, metavar="N")
    sp.add_argument("--out", metavar="PATH", help="also write the frame file")

    sp = sub.add_parser("verify", help="run the property checks on an instance")
    common(sp, lam="0,0.5,1")
    sp.add_argument("--trials", type=int, metavar="K", help="random duals to test (default 50)")
    sp.add_argument("--tolerance", type=float, default=1e-10, metavar="X")

    sp = sub.add_parser("simulate", help="Monte-Carlo single-erasure transmission")
    common(sp)
    sp.add_argument("--trials", type=int, metavar="K", help="default 100000")

    sp = sub.add_parser("examples", help="print or write the bundled example files")
    sp.add_argument("--name", help=", ".join(construct.EXAMPLE_IDS))
    sp.add_argument("--out", metavar="DIR")
    sp.add_argument("--json", action="store_true")
    return p


def run_command(argv=None, stdout=None, stderr=None):
    """Run one command line; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    rep = Report()
    try:
        COMMANDS[args.command](args, rep)
    except _VerifyFailed as exc:
        print(exc.report.render(args.json), file=stdout)
        print(f"error: {exc}", file=stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return 2
    print(rep.render(args.json), file=stdout)
    return 0


def main():
    sys.exit(run_command(sys.argv[1:]))
