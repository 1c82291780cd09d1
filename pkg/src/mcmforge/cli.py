"""Command line front end: ``mcmforge <command> <ring file> [options]``."""
import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .errors import (HypothesisFailure, InvariantViolation, MalformedExpression, MCMForgeError,
                     Mismatch, ParameterRange, ParseError, UnknownVariable)
from .frobenius import PROBE_BOUND, frobenius_pushforward, veronese_submodule
from .groebner import fedder_test
from .hilbert import HilbertSeries
from .mcm import (certify_mcm, find_cm_veronese, is_quasi_buchsbaum, is_quasi_gorenstein,
                  splitting_complement_mcm, theorem_A_hypotheses, theorem_A_pipeline)
from .resolutions import depth_auslander_buchsbaum
from .ringfile import load_ring_file, parse_sequence

EXIT_OK, EXIT_MATH, EXIT_PARSE, EXIT_PARAM, EXIT_INVARIANT = 0, 1, 2, 3, 4


def series_dict(H):
    r = H.reduced()
    lo, coeffs = r.numerator_list()
    return {"text": str(r), "numerator_low_degree": lo, "numerator": coeffs,
            "denominator_weights": list(r.weights)}


def betti_dict(F):
    return {f"{i},{j}": b for (i, j), b in sorted(F.betti_table().items())}


def cmd_analyze(R, args):
    M = R.module
    F = R.resolution
    t = R.lc_table
    out = {
        "ring": R.name, "characteristic": R.p, "variables": list(R.S.names),
        "weights": list(R.weights),
        "ideal": [str(g) for g in R.ideal.generators],
        "dim": R.dimension, "depth": R.depth,
        "depth_auslander_buchsbaum": depth_auslander_buchsbaum(M),
        "hilbert_series": series_dict(R.hilbert_series()),
        "hilbert_function": R.hilbert_series().coefficients(0, args.probe_bound),
        "betti": betti_dict(F), "betti_numbers": F.betti_numbers(),
        "lc_lengths": t.as_list(),
        "cohen_macaulay": R.is_cohen_macaulay(),
        "generalized_cm": t.is_finite(),
        "quasi_gorenstein": is_quasi_gorenstein(R, args.probe_bound),
        "quasi_buchsbaum": is_quasi_buchsbaum(R),
    }
    if args.golden_dir:
        out["golden"] = check_golden(R, Path(args.golden_dir), args.probe_bound)
    return out


def check_golden(R, folder, bound):
    from .oracle import brute_hilbert_function, read_golden, write_golden
    path = folder / f"{R.name}_hilbert.tsv"
    engine = R.hilbert_series().coefficients(0, bound)
    if path.exists():
        gold = read_golden(path)
        for d, v in enumerate(engine):
            if d in gold and gold[d] != v:
                raise Mismatch(f"{R.name} golden Hilbert function", d)
        return {"file": path.name, "status": "match"}
    folder.mkdir(parents=True, exist_ok=True)
    write_golden(path, brute_hilbert_function(R.module, bound))
    return {"file": path.name, "status": "written"}


def _check_e(args):
    if args.e < 1:
        raise ParameterRange("--e must be at least 1")


def _class_row(R, e, i, probe):
    V = veronese_submodule(R.module, e, i, probe)
    row = {"class": i, "nonzero": V.nonzero}
    if V.nonzero:
        P = V.presentation.minimal()
        cert = certify_mcm(P, R)
        row.update({"hilbert_series": series_dict(P.hilbert_series()), "depth": cert.depth,
                    "mcm": cert.success, "rank": str(cert.rank), "generators": list(P.twists),
                    "relations": len(P.relations)})
    return row


def cmd_veronese(R, args):
    _check_e(args)
    q = R.p ** args.e
    if args.i is None or not 0 <= args.i < q:
        raise ParameterRange(f"--i must lie in [0, {q})")
    row = _class_row(R, args.e, args.i, args.probe_bound)
    return {"ring": R.name, "e": args.e, "q": q, "summand": row}


def cmd_decompose(R, args):
    _check_e(args)
    q = R.p ** args.e
    rows = [_class_row(R, args.e, i, args.probe_bound) for i in range(q)]
    total = frobenius_pushforward(R.module, args.e).hilbert_series()
    acc = HilbertSeries.zero(total.weights)
    for i in range(q):
        acc = acc + veronese_submodule(R.module, args.e, i).hilbert_series()
    return {"ring": R.name, "e": args.e, "q": q, "classes": rows,
            "nonzero_count": sum(r["nonzero"] for r in rows),
            "series_identity": acc == total}


def cmd_mcm_search(R, args):
    if args.e_max < 1:
        raise ParameterRange("--e-max must be at least 1")
    cert = find_cm_veronese(R.module, R, args.e_max, args.probe_bound)
    return {"ring": R.name, "certificate": cert.as_dict()}


def cmd_theorem_a(R, args):
    y = parse_sequence(args.y, R)
    report = theorem_A_hypotheses(R, y)
    out = {"ring": R.name, "y": [str(f) for f in y], "hypotheses": report.as_dict()}
    try:
        cert = theorem_A_pipeline(R, y)
    except HypothesisFailure as ex:
        out["error"] = {"type": "HypothesisFailure", "failed": list(ex.failed)}
        raise _Partial(out, EXIT_MATH) from ex
    out["certificate"] = cert.as_dict()
    return out


def cmd_fedder(R, args):
    _check_e(args)
    return {"ring": R.name, "e": args.e, "f_split": fedder_test(R.ideal, args.e)}


def cmd_split(R, args):
    cert = splitting_complement_mcm(R)
    return {"ring": R.name, "certificate": cert.as_dict()}


COMMANDS = {
    "analyze": cmd_analyze, "veronese": cmd_veronese, "decompose": cmd_decompose,
    "mcm-search": cmd_mcm_search, "theorem-a": cmd_theorem_a, "fedder": cmd_fedder,
    "split": cmd_split,
}


class _Partial(Exception):
    def __init__(self, result, code):
        super().__init__("partial result")
        self.result = result
        self.code = code


def exit_code_for(ex):
    if isinstance(ex, (ParseError, MalformedExpression, UnknownVariable)):
        return EXIT_PARSE
    if isinstance(ex, ParameterRange):
        return EXIT_PARAM
    if isinstance(ex, (InvariantViolation, Mismatch)):
        return EXIT_INVARIANT
    return EXIT_MATH


def build_parser():
    ap = argparse.ArgumentParser(prog="mcmforge", description=__doc__)
    ap.add_argument("--version", action="version", version=f"mcmforge {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("file", help="ring definition file")
        sp.add_argument("--e", type=int, default=1, help="Frobenius exponent (default 1)")
        sp.add_argument("--i", type=int, default=None, help="residue class for 'veronese'")
        sp.add_argument("--e-max", type=int, default=3, help="largest e for 'mcm-search'")
        sp.add_argument("--y", default="", help="regular sequence 'g1;g2;...' for 'theorem-a'")
        sp.add_argument("--probe-bound", type=int, default=PROBE_BOUND)
        sp.add_argument("--json", default=None, help="write the JSON report here ('-' for stdout)")
        sp.add_argument("--golden-dir", default=None, help="golden Hilbert-function folder")
        sp.add_argument("--timing", action="store_true", help="print wall time to stderr")
    return ap


def _threads():
    raw = os.environ.get("MCMFORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    report = {"tool": "mcmforge", "version": __version__, "command": args.command,
              "parameters": {"e": args.e, "i": args.i, "e_max": args.e_max, "y": args.y,
                             "probe_bound": args.probe_bound, "threads": _threads()}}
    code = EXIT_OK
    try:
        rf = load_ring_file(args.file)
        report["input_digest"] = rf.digest
        R = rf.to_ring()
        report["result"] = COMMANDS[args.command](R, args)
    except _Partial as ex:
        report["result"] = ex.result
        code = ex.code
    except OSError as ex:
        report["error"] = {"type": "ParseError", "message": str(ex)}
        code = EXIT_PARSE
    except MCMForgeError as ex:
        report["error"] = {"type": type(ex).__name__, "message": str(ex)}
        if isinstance(ex, ParseError):
            report["error"].update({"line": ex.line, "column": ex.column})
        if isinstance(ex, InvariantViolation):
            report["error"]["unchecked"] = list(ex.unchecked)
        code = exit_code_for(ex)
    report["exit_code"] = code
    text = json.dumps(report, sort_keys=True, indent=2)
    if args.json == "-":
        print(text)
    else:
        print(render(report))
        if args.json:
            Path(args.json).write_text(text + "\n")
    if args.timing:
        print(f"time: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


def render(report):
    """Human-readable summary of a report."""
    lines = [f"mcmforge {report['version']} {report['command']}"]
    if "error" in report:
        lines.append(f"error: {report['error']['type']}: {report['error']['message']}")
    res = report.get("result") or {}
    for key in sorted(res):
        val = res[key]
        if isinstance(val, dict) and "text" in val:
            val = val["text"]
        lines.append(f"  {key}: {json.dumps(val, sort_keys=True) if isinstance(val, (dict, list)) else val}")
    lines.append(f"exit code {report['exit_code']}")
    return "\n".join(lines)


if __name__ == "__main__":
    sys.exit(main())
