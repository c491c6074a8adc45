"""Command-line surface: verification suites, word transforms, matrix dumps.

Exit codes: 0 when nothing failed (documented discrepancies do not
fail a run), 1 when at least one check failed, 2 for usage errors.
The json format is deterministic: the same configuration produces
byte-identical output.
"""

import argparse
import csv
import json
import os
import sys

from .algebra import BASIS
from .clifford import COORDS, Vector6, sigma, gamma, verify_clifford
from .conformal import (
    AT_INFINITY,
    MinkowskiPoint,
    POINT_COORDS,
    embed_point,
    q_or_infinity,
    step_vector,
    verify_conformal,
)
from .group import (
    PLANES,
    TRANSLATION_NAMES,
    appendix_check,
    canonical_plane,
    generator,
    verify_group,
    verify_properties,
)
from .realrep import real_gamma, exp_real_generator, verify_realrep
from .report import Report

__all__ = ["Report", "RunConfig", "SUITES", "main"]

FORMATS = ("json", "text", "csv")

SUITES = (
    ("clifford", verify_clifford),
    ("properties", verify_properties),
    ("group", verify_group),
    ("conformal", verify_conformal),
    ("realrep", verify_realrep),
    ("appendix", appendix_check),
)


class UsageError(ValueError):
    pass


class RunConfig:
    def __init__(self, tolerance=1e-12, seed=42, samples=1000, fmt="text"):
        if not tolerance > 0:
            raise UsageError("tolerance must be positive")
        if samples < 1:
            raise UsageError("samples must be at least 1")
        if fmt not in FORMATS:
            raise UsageError("unknown format %r" % (fmt,))
        self.tolerance = tolerance
        self.seed = seed
        self.samples = samples
        self.fmt = fmt

    def suite_config(self):
        return {
            "tolerance": self.tolerance,
            "seed": self.seed,
            "samples": self.samples,
        }


def _num(value):
    return "%.12g" % value


def _render_reports_text(reports, out):
    total = {"pass": 0, "fail": 0, "discrepancy-documented": 0}
    for rep in reports:
        cfg = " ".join("%s=%s" % (k, rep.config[k]) for k in sorted(rep.config))
        out.write("suite %s%s\n" % (rep.suite, " (%s)" % cfg if cfg else ""))
        for c in rep.sorted_checks():
            line = "  [%s] %s: expected %s; actual %s" % (
                c.status,
                c.check_id,
                c.expected,
                c.actual,
            )
            if c.context:
                line += "; %s" % c.context
            out.write(line + "\n")
        counts = rep.counts()
        for k in total:
            total[k] += counts[k]
        out.write(
            "  %d pass, %d fail, %d discrepancy-documented\n"
            % (counts["pass"], counts["fail"], counts["discrepancy-documented"])
        )
    out.write(
        "overall: %d pass, %d fail, %d discrepancy-documented\n"
        % (total["pass"], total["fail"], total["discrepancy-documented"])
    )


def _render_reports_json(reports, out):
    doc = {"reports": [rep.to_dict() for rep in reports]}
    out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _render_reports_csv(reports, out):
    writer = csv.writer(out)
    writer.writerow(["suite", "check_id", "status", "expected", "actual", "context"])
    for rep in reports:
        for c in rep.sorted_checks():
            writer.writerow(
                [rep.suite, c.check_id, c.status, c.expected, c.actual, c.context]
            )


def cmd_verify(args, config, out):
    if args.suites in (None, "", "all"):
        wanted = [name for name, _ in SUITES]
    else:
        wanted = [s.strip() for s in args.suites.split(",") if s.strip()]
        known = {name for name, _ in SUITES}
        for s in wanted:
            if s not in known:
                raise UsageError(
                    "unknown suite %r (choose from %s)"
                    % (s, ", ".join(sorted(known)))
                )
    chosen = set(wanted)
    reports = [
        fn(config.suite_config()) for name, fn in SUITES if name in chosen
    ]
    render = {
        "text": _render_reports_text,
        "json": _render_reports_json,
        "csv": _render_reports_csv,
    }[config.fmt]
    render(reports, out)
    return 0 if all(rep.passed for rep in reports) else 1


_WORD_NAMES = set(PLANES) | {p[::-1] for p in PLANES} | set(TRANSLATION_NAMES)


def _parse_word(text):
    word = []
    text = (text or "").strip()
    if not text:
        return word
    for item in text.split(","):
        item = item.strip()
        parts = item.split(":")
        if len(parts) != 2:
            raise UsageError("bad word entry %r (want name:angle)" % (item,))
        name = parts[0].strip()
        if name not in _WORD_NAMES:
            raise UsageError("unknown transformation name %r" % (name,))
        try:
            angle = float(parts[1])
        except ValueError:
            raise UsageError("bad angle in %r" % (item,))
        word.append((name, angle))
    return word


def _parse_point(text):
    try:
        comps = [float(c) for c in text.split(",")]
    except ValueError:
        raise UsageError("point components must be numbers")
    if len(comps) == 4:
        return MinkowskiPoint(*comps)
    if len(comps) == 6:
        return Vector6(*comps)
    raise UsageError("--point takes 4 components (t,x,y,z) or 6 (x,y,z,t,p,q)")


def _encode_state(vec, as_point):
    if not as_point:
        return {
            "kind": "vector",
            **{m: float(vec.component(m)) for m in COORDS},
        }
    pt = q_or_infinity(vec)
    if pt is AT_INFINITY:
        return {"kind": "at-infinity"}
    return {
        "kind": "point",
        **{m: float(pt.component(m)) for m in POINT_COORDS},
    }


def _state_text(state):
    if state["kind"] == "at-infinity":
        return "at-infinity"
    if state["kind"] == "point":
        coords = ", ".join(_num(state[m]) for m in POINT_COORDS)
        return "point (t, x, y, z) = (%s)" % coords
    coords = ", ".join(_num(state[m]) for m in COORDS)
    return "vector (x, y, z, t, p, q) = (%s)" % coords


def cmd_transform(args, config, out):
    word = _parse_word(args.word)
    parsed = _parse_point(args.point)
    as_point = isinstance(parsed, MinkowskiPoint)
    vec = embed_point(parsed).v if as_point else parsed

    states = [_encode_state(vec, as_point)]
    for name, angle in word:
        vec = step_vector(name, angle, vec)
        states.append(_encode_state(vec, as_point))

    if config.fmt == "json":
        doc = {
            "input": states[0],
            "steps": [
                {"name": name, "angle": angle, "image": state}
                for (name, angle), state in zip(word, states[1:])
            ],
            "final": states[-1],
        }
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    elif config.fmt == "csv":
        writer = csv.writer(out)
        cols = ["step", "name", "angle", "kind", "t", "x", "y", "z", "p", "q"]
        writer.writerow(cols)
        names = [("", "")] + list(word)
        for i, state in enumerate(states):
            name, angle = names[i]
            row = [i, name, angle, state["kind"]]
            for m in ("t", "x", "y", "z", "p", "q"):
                row.append(state.get(m, ""))
            writer.writerow(row)
    else:
        out.write("input:  %s\n" % _state_text(states[0]))
        for i, ((name, angle), state) in enumerate(zip(word, states[1:]), 1):
            out.write(
                "step %d  %s:%s -> %s\n" % (i, name, _num(angle), _state_text(state))
            )
        out.write("final:  %s\n" % _state_text(states[-1]))
    return 0


def _scalar_json(s):
    return {name: float(c) for name, c in zip(BASIS, s.coeffs)}


def _show_tensor(mat, config, out):
    if config.fmt == "json":
        doc = [[_scalar_json(e) for e in row] for row in mat.rows]
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    elif config.fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["i", "j"] + list(BASIS))
        for i, row in enumerate(mat.rows):
            for j, e in enumerate(row):
                writer.writerow([i, j] + [float(c) for c in e.coeffs])
    else:
        out.write(str(mat) + "\n")


def _show_real(arr, config, out):
    if config.fmt == "json":
        out.write(json.dumps(arr.tolist(), indent=2) + "\n")
    elif config.fmt == "csv":
        writer = csv.writer(out)
        for row in arr.tolist():
            writer.writerow(row)
    else:
        for row in arr.tolist():
            out.write(" ".join("%6s" % _num(v) for v in row) + "\n")


def cmd_show(args, config, out):
    kind, ident = args.object, args.id
    if kind in ("sigma", "gamma", "real-gamma"):
        if ident not in COORDS:
            raise UsageError("unknown coordinate %r" % (ident,))
        if kind == "sigma":
            _show_tensor(sigma(ident), config, out)
        elif kind == "gamma":
            _show_tensor(gamma(ident), config, out)
        else:
            _show_real(real_gamma(ident), config, out)
        return 0
    if kind in ("generator", "real-generator"):
        try:
            canonical_plane(ident)
        except ValueError:
            raise UsageError("unknown plane %r" % (ident,))
        if kind == "generator":
            _show_tensor(generator(ident, args.angle), config, out)
        else:
            _show_real(exp_real_generator(ident, args.angle), config, out)
        return 0
    raise UsageError("unknown object %r" % (kind,))


def _add_common(p):
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=1000)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="splitconf",
        description="Verify and explore the bundled matrix structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument(
        "--suites",
        default="all",
        help="comma-separated subset of: %s (default all)"
        % ", ".join(name for name, _ in SUITES),
    )
    _add_common(p_verify)

    p_transform = sub.add_parser("transform", help="apply a generator word")
    p_transform.add_argument(
        "--word",
        default="",
        help="comma-separated name:angle steps; names are the fifteen "
        "planes plus ax..at (translations) and bx..bt (conformal)",
    )
    p_transform.add_argument(
        "--point",
        required=True,
        help="4 components t,x,y,z (embedded automatically) or "
        "6 components x,y,z,t,p,q",
    )
    _add_common(p_transform)

    p_show = sub.add_parser("show", help="print one matrix")
    p_show.add_argument(
        "object",
        choices=("sigma", "gamma", "generator", "real-gamma", "real-generator"),
    )
    p_show.add_argument("id")
    p_show.add_argument("--angle", type=float, default=1.0)
    _add_common(p_show)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    fmt = args.format
    if fmt is None:
        fmt = os.environ.get("SPLITCONF_FORMAT") or "text"
    try:
        config = RunConfig(
            tolerance=args.tolerance,
            seed=args.seed,
            samples=args.samples,
            fmt=fmt,
        )
        handler = {
            "verify": cmd_verify,
            "transform": cmd_transform,
            "show": cmd_show,
        }[args.command]
        return handler(args, config, sys.stdout)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
