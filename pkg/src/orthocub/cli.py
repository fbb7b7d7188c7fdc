"""Command-line surface producing rules, moments, weights and demo data.

Structured objects go out as JSON, tabular data as CSV, both at full
double precision and written atomically.  Exit codes: 0 success, 1 usage
error, 2 numerical or configuration failure.
"""

import argparse
import json
import sys

import numpy as np

from . import _io, demos
from .diagnostics import (growth_fit, lebesgue_constant_estimate,
                          random_poly_trial, stability_ratio)
from .errors import OrthocubError
from .functional import (BoundingBox, cubature_to_dict, moment_from_dict,
                         moment_to_dict, orthocub_weights)
from .geometry import (balls_from_config, bounding_box, halton_box,
                       indomain_balls, spline_from_config)
from .moments import DiscreteMeasure, diff_weights, discrete_moments, spline_cheb_moments
from .rules import bundle_from_rule, rule_from_dict, rule_to_dict, startup

_DERIVATIVE_ALPHAS = {
    2: ((1, 0), (0, 1), (2, 0), (0, 2), (1, 1)),
    3: ((1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0), (0, 2, 0), (0, 0, 2),
        (1, 1, 0), (1, 0, 1), (0, 1, 1)),
}


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; numerical/config problems exit 2 from main
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_degrees(text):
    text = text.strip()
    if ":" in text:
        parts = [int(p) for p in text.split(":")]
        if len(parts) != 3 or parts[1] <= 0:
            raise OrthocubError(f"degree ranges are start:step:stop, got {text!r}")
        return list(range(parts[0], parts[2] + 1, parts[1]))
    return [int(p) for p in text.split(",")]


def _parse_dims(text):
    dims = [int(p) for p in str(text).split(",")]
    if any(d not in (2, 3) for d in dims):
        raise OrthocubError(f"dimensions must be 2 or 3, got {text!r}")
    return dims


def _parse_alpha(text):
    return tuple(int(p) for p in text.split(","))


def _parse_point(text):
    return [float(p) for p in text.split(",")]


def _parse_box(text):
    arr = np.asarray(json.loads(text), dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise OrthocubError("box must be given as [[lo, hi], ...] per axis")
    return BoundingBox(tuple(arr[:, 0]), tuple(arr[:, 1]))


def _load_bundle(path):
    return bundle_from_rule(rule_from_dict(_io.load_json(path)))


def _spline_domain(path):
    if path is None:
        return demos.demo_spline_element()
    return spline_from_config(_io.load_json(path))


def _ball_domain(path):
    if path is None:
        return demos.demo_ball_union()
    return balls_from_config(_io.load_json(path))


def _alpha_label(alpha):
    return ";".join(str(a) for a in alpha) if alpha else ""


def _cmd_startup(args):
    bundle = startup(args.dim, args.ade, args.rule)
    _io.dump_json(rule_to_dict(bundle.rule), args.out)
    return 0


def _cmd_rule(args):
    bundle = _load_bundle(args.bundle)
    m = moment_from_dict(_io.load_json(args.moments))
    box = _parse_box(args.box) if args.box else m.box
    rule = orthocub_weights(bundle, box, m)
    payload = cubature_to_dict(rule)
    payload["rule_kind"] = bundle.rule.rule_kind
    _io.dump_json(payload, args.out)
    return 0


def _cmd_moments_spline(args):
    boundary = _spline_domain(args.domain)
    box = bounding_box(boundary)
    bundle = startup(2, args.ade, "near-minimal")
    m = spline_cheb_moments(boundary, box, bundle.basis)
    _io.dump_json(moment_to_dict(m), args.out)
    return 0


def _cmd_moments_qmc(args):
    balls = _ball_domain(args.domain)
    box = bounding_box(balls)
    pts = halton_box(box, args.halton_count)
    kept = pts[indomain_balls(pts, balls)]
    measure = DiscreteMeasure(kept, box.volume / args.halton_count)
    bundle = startup(balls.dim, args.ade, "near-minimal")
    m = discrete_moments(measure, box, bundle.basis, "qmc")
    payload = moment_to_dict(m)
    payload["points_total"] = int(args.halton_count)
    payload["points_retained"] = int(kept.shape[0])
    _io.dump_json(payload, args.out)
    return 0


def _cmd_diff_weights(args):
    bundle = _load_bundle(args.bundle)
    box = _parse_box(args.box)
    point = _parse_point(args.point)
    alpha = _parse_alpha(args.alpha)
    w = diff_weights(bundle, box, point, alpha)
    nodes = box.from_reference(bundle.rule.nodes)
    payload = {
        "dim": bundle.dim,
        "degree": bundle.degree,
        "point": list(map(float, point)),
        "alpha": list(alpha),
        "box": {"lo": list(box.lo), "hi": list(box.hi)},
        "nodes": nodes.tolist(),
        "weights": w.tolist(),
    }
    _io.dump_json(payload, args.out)
    return 0


def _trial_rows(kind, dim, result):
    label = _alpha_label(result.alpha)
    rows = [(kind, dim, result.degree, label, str(t), float(result.errors[t]))
            for t in range(result.errors.shape[0])]
    rows.append((kind, dim, result.degree, label, "geomean", result.geometric_mean))
    return rows


def _cmd_demo_ade(args):
    degrees = _parse_degrees(args.degrees)
    dims = _parse_dims(args.dims)
    rows = []
    if args.demo == "ade-spline":
        if dims != [2]:
            raise OrthocubError("the spline integration demo is 2D")
        for n in degrees:
            res = random_poly_trial("integrate-spline", n, args.trials, args.seed)
            rows.extend(_trial_rows("integrate-spline", 2, res))
    elif args.demo == "ade-qmc":
        if dims != [3]:
            raise OrthocubError("the QMC ball-union demo is 3D")
        for n in degrees:
            res = random_poly_trial("integrate-qmc", n, args.trials, args.seed,
                                    oracle=args.oracle)
            rows.extend(_trial_rows("integrate-qmc", 3, res))
    else:
        for d in dims:
            for alpha in _DERIVATIVE_ALPHAS[d]:
                for n in degrees:
                    res = random_poly_trial("differentiate", n, args.trials,
                                            args.seed, alpha=alpha)
                    rows.extend(_trial_rows("differentiate", d, res))
    text = _io.format_csv(("kind", "dim", "degree", "alpha", "trial", "error"), rows)
    _io.write_text(args.out, text)
    return 0


def _demo_rule(kind, n, halton_count=100000):
    """Synthesized integration rule on the shipped geometry of the kind."""
    if kind == "spline":
        boundary = demos.demo_spline_element()
        box = bounding_box(boundary)
        bundle = startup(2, n, "near-minimal")
        m = spline_cheb_moments(boundary, box, bundle.basis)
    else:
        balls = demos.demo_ball_union()
        box = bounding_box(balls)
        pts = halton_box(box, halton_count)
        kept = pts[indomain_balls(pts, balls)]
        bundle = startup(balls.dim, n, "near-minimal")
        m = discrete_moments(DiscreteMeasure(kept, box.volume / halton_count),
                             box, bundle.basis, "qmc")
    return orthocub_weights(bundle, box, m)


def _cmd_demo_weights(args):
    rule = _demo_rule(args.kind, args.ade)
    order = np.argsort(rule.weights)[::-1]
    rows = [(str(rank), float(rule.weights[i])) for rank, i in enumerate(order)]
    _io.write_text(args.out, _io.format_csv(("rank", "weight"), rows))
    return 0


def _cmd_demo_sumweights(args):
    degrees = _parse_degrees(args.degrees)
    dim = 2 if args.kind == "spline" else 3
    rows = []
    for n in degrees:
        rule = _demo_rule(args.kind, n)
        rows.append((args.kind, dim, n, stability_ratio(rule)))
    _io.write_text(args.out, _io.format_csv(("kind", "dim", "degree", "ratio"), rows))
    return 0


def _cmd_demo_lebesgue(args):
    alpha = _parse_alpha(args.alpha)
    if len(alpha) != args.dim:
        raise OrthocubError(f"alpha {alpha} does not match --dim {args.dim}")
    degrees = _parse_degrees(args.degrees)
    box = BoundingBox((-1.0,) * args.dim, (1.0,) * args.dim)
    probes = halton_box(box, args.probes)
    values = [lebesgue_constant_estimate(startup(args.dim, n), box, alpha, probes)
              for n in degrees]
    total = sum(alpha)
    if total > 0:
        coeffs, _ = growth_fit(degrees, values, 2 * total)
        fits = np.polynomial.polynomial.polyval(np.asarray(degrees, float), coeffs)
        rows = [(n, float(v), float(f)) for n, v, f in zip(degrees, values, fits)]
    else:
        rows = [(n, float(v), "") for n, v in zip(degrees, values)]
    _io.write_text(args.out, _io.format_csv(("degree", "value", "fit"), rows))
    return 0


def _build_parser():
    parser = _Parser(prog="orthocub",
                     description="Cubature representation of linear functionals "
                                 "on total-degree polynomial spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("startup", help="build and save a startup bundle")
    p.add_argument("--dim", type=int, required=True, choices=(2, 3))
    p.add_argument("--ade", type=int, required=True, metavar="N",
                   help="polynomial exactness degree n of the synthesized rules")
    p.add_argument("--rule", choices=("mpx", "tensor"), default="mpx")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_startup)

    p = sub.add_parser("rule", help="synthesize cubature weights from moments")
    p.add_argument("--bundle", required=True)
    p.add_argument("--moments", required=True)
    p.add_argument("--box", default=None,
                   help='JSON [[lo, hi], ...]; defaults to the moment file box')
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_rule)

    p = sub.add_parser("moments", help="compute moment vectors")
    msub = p.add_subparsers(dest="moments_kind", required=True)
    ps = msub.add_parser("spline", help="area-integration moments over a spline domain")
    ps.add_argument("--domain", default=None, help="JSON domain file (default: shipped element)")
    ps.add_argument("--ade", type=int, required=True, metavar="N")
    ps.add_argument("--out", default=None)
    ps.set_defaults(func=_cmd_moments_spline)
    pq = msub.add_parser("qmc", help="QMC summation moments over a ball union")
    pq.add_argument("--domain", default=None, help="JSON domain file (default: shipped union)")
    pq.add_argument("--halton-count", type=int, default=100000)
    pq.add_argument("--ade", type=int, required=True, metavar="N")
    pq.add_argument("--out", default=None)
    pq.set_defaults(func=_cmd_moments_qmc)

    p = sub.add_parser("diff-weights", help="derivative weights at a point")
    p.add_argument("--bundle", required=True)
    p.add_argument("--box", required=True, help="JSON [[lo, hi], ...]")
    p.add_argument("--point", required=True, help="comma-separated coordinates")
    p.add_argument("--alpha", required=True, help="comma-separated orders, e.g. 1,0")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_diff_weights)

    p = sub.add_parser("demo", help="reproduce the accuracy and stability experiments")
    dsub = p.add_subparsers(dest="demo", required=True)
    for name, dims in (("ade-spline", "2"), ("ade-qmc", "3"), ("ade-derivative", "2,3")):
        pd = dsub.add_parser(name)
        pd.add_argument("--dims", default=dims)
        pd.add_argument("--degrees", default="2:2:16")
        pd.add_argument("--trials", type=int, default=100)
        pd.add_argument("--seed", type=int, default=0)
        pd.add_argument("--out", default=None)
        if name == "ade-qmc":
            pd.add_argument("--oracle", choices=("sl", "sh"), default="sl",
                            help="sl: the compressed 100k-point sum itself; "
                                 "sh: a 100x denser reference sum")
        pd.set_defaults(func=_cmd_demo_ade)
    pd = dsub.add_parser("weights-distribution")
    pd.add_argument("--kind", choices=("spline", "qmc"), required=True)
    pd.add_argument("--ade", type=int, default=10, metavar="N")
    pd.add_argument("--out", default=None)
    pd.set_defaults(func=_cmd_demo_weights)
    pd = dsub.add_parser("sumweights")
    pd.add_argument("--kind", choices=("spline", "qmc"), required=True)
    pd.add_argument("--degrees", default="2:2:16")
    pd.add_argument("--out", default=None)
    pd.set_defaults(func=_cmd_demo_sumweights)
    pd = dsub.add_parser("lebesgue")
    pd.add_argument("--dim", type=int, choices=(2, 3), default=2)
    pd.add_argument("--alpha", default="0,0", help="comma-separated orders")
    pd.add_argument("--probes", type=int, default=10000)
    pd.add_argument("--degrees", default="2:2:16")
    pd.add_argument("--out", default=None)
    pd.set_defaults(func=_cmd_demo_lebesgue)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args) or 0
    except OrthocubError as exc:
        print(f"orthocub: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"orthocub: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
