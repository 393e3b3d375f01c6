"""Command-line interface.

Fans come from FanFile JSON paths or `catalog:NAME` sources (with repeatable
`--param k=v`).  Predicates print true/false and exit 0; with `--assert` a
false result exits 2.  Malformed input exits 1 with a diagnostic.  Every
subcommand takes `--json` for machine-readable output with a schema field.
"""

import argparse
import json
import sys

from . import catalog, report
from .divisor import (
    divisor_to_json,
    is_nef,
    is_projective,
    nef_cone,
    parse_divisor,
    polytope,
)
from .divisor import has_no_nontrivial_nef as _nef_trivial
from .fan import (
    FanValidationError,
    fan_from_dict,
    fan_to_dict,
    is_complete,
    is_smooth,
    picard_rank,
    star_subdivision,
    walls,
)
from .fanmap import fan_map, is_fan_map, is_refinement, pullback
from .polyhedra import vertices

SCHEMA = 1

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ASSERT = 2


class CliError(Exception):
    pass


def _reject_float(text):
    raise CliError(f"exact integers or p/q strings required, got {text}")


def _loads(text, what):
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON in {what}: {exc}") from exc


def _parse_params(pairs):
    params = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise CliError(f"parameter {pair!r} is not of the form name=value")
        key, _, value = pair.partition("=")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise CliError(f"parameter {key} must be an integer, got {value!r}") from None
    return params


def load_source(source, params=None):
    """Fan from a path or catalog:NAME source."""
    params = params or {}
    if source.startswith("catalog:"):
        name = source[len("catalog:"):]
        try:
            return catalog.get(name, **params)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    if params:
        raise CliError("--param is only valid with catalog: sources")
    try:
        with open(source, "r", encoding="utf-8") as fh:
            obj = json.load(fh, parse_float=_reject_float)
    except OSError as exc:
        raise CliError(f"cannot read fan file {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON in {source}: {exc}") from exc
    try:
        return fan_from_dict(obj)
    except (ValueError, FanValidationError) as exc:
        raise CliError(f"{source}: {exc}") from exc


def _sweep_grid(ranges):
    grid = [{}]
    for item in ranges or ():
        if "=" not in item or ".." not in item:
            raise CliError(f"sweep {item!r} is not of the form name=lo..hi")
        name, _, rng = item.partition("=")
        lo_s, _, hi_s = rng.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise CliError(f"sweep bounds in {item!r} must be integers") from None
        if hi < lo:
            raise CliError(f"sweep {item!r} has an empty range")
        grid = [{**d, name.strip(): v} for d in grid for v in range(lo, hi + 1)]
    return grid


def _emit(args, text_lines, json_obj):
    if args.json:
        json_obj = {"schema": SCHEMA, "command": args.command, **json_obj}
        print(json.dumps(json_obj, indent=2))
    else:
        for line in text_lines:
            print(line)


def _predicate_exit(args, values):
    if getattr(args, "assert_", False) and not all(values):
        return EXIT_ASSERT
    return EXIT_OK


def _run_predicate(args, fn):
    """Evaluate a one-fan predicate, honoring --param and --sweep."""
    params = _parse_params(args.param)
    sweeps = getattr(args, "sweep", None)
    if sweeps:
        if not args.fan.startswith("catalog:"):
            raise CliError("--sweep is only valid with catalog: sources")
        results = []
        for extra in _sweep_grid(sweeps):
            value = fn(load_source(args.fan, {**params, **extra}))
            results.append((extra, value))
        results.sort(key=lambda kv: sorted(kv[0].items()))
        lines = [
            "%s: %s" % (" ".join(f"{k}={v}" for k, v in sorted(extra.items())), str(val).lower())
            for extra, val in results
        ]
        obj = {"results": [{"params": extra, "value": val} for extra, val in results]}
        _emit(args, lines, obj)
        return _predicate_exit(args, [val for _, val in results])
    value = fn(load_source(args.fan, params))
    _emit(args, [str(value).lower()], {"value": value})
    return _predicate_exit(args, [value])


def cmd_validate(args):
    params = _parse_params(args.param)
    load_source(args.fan, params)
    _emit(args, ["true"], {"value": True})
    return EXIT_OK


def cmd_smooth(args):
    return _run_predicate(args, is_smooth)


def cmd_complete(args):
    return _run_predicate(args, is_complete)


def cmd_nef_trivial(args):
    return _run_predicate(args, _nef_trivial)


def cmd_projective(args):
    return _run_predicate(args, is_projective)


def cmd_picard(args):
    fan = load_source(args.fan, _parse_params(args.param))
    value = picard_rank(fan)
    _emit(args, [str(value)], {"value": value})
    return EXIT_OK


def cmd_walls(args):
    fan = load_source(args.fan, _parse_params(args.param))
    ws = walls(fan)
    lines = [
        "shared=%s opposite=(%d,%d) relation=%s"
        % (list(w.shared), w.left, w.right, list(w.relation))
        for w in ws
    ]
    obj = {
        "walls": [
            {
                "shared": list(w.shared),
                "opposite": [w.left, w.right],
                "relation": list(w.relation),
            }
            for w in ws
        ]
    }
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_nef_check(args):
    fan = load_source(args.fan, _parse_params(args.param))
    d = parse_divisor(args.divisor, fan)
    value = is_nef(fan, d)
    _emit(args, [str(value).lower()], {"value": value})
    return _predicate_exit(args, [value])


def cmd_nef_cone(args):
    fan = load_source(args.fan, _parse_params(args.param))
    vc = nef_cone(fan)
    lines = [f"class_rank: {vc.dim}"]
    if vc.rays:
        lines += ["ray: " + ",".join(str(x) for x in r) for r in vc.rays]
    else:
        lines.append("rays: none")
    _emit(args, lines, {"class_rank": vc.dim, "rays": [list(r) for r in vc.rays]})
    return EXIT_OK


def cmd_polytope(args):
    fan = load_source(args.fan, _parse_params(args.param))
    d = parse_divisor(args.divisor, fan)
    verts = vertices(polytope(fan, d))
    lines = ["vertex: " + ",".join(str(x) for x in v) for v in verts]
    if not verts:
        lines = ["empty"]
    obj = {"vertices": [[str(x) for x in v] for v in verts]}
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_subdivide(args):
    fan = load_source(args.fan, _parse_params(args.param))
    try:
        w = tuple(int(x) for x in args.ray.split(","))
    except ValueError:
        raise CliError(f"subdivision ray {args.ray!r} must be comma-separated integers") from None
    result = star_subdivision(fan, w)
    obj = fan_to_dict(result)
    if args.json:
        _emit(args, [], {"fan": obj})
    else:
        print(json.dumps(obj, indent=2))
    return EXIT_OK


def _parse_matrix(text):
    obj = _loads(text, "matrix")
    if not isinstance(obj, list) or not all(isinstance(row, list) for row in obj):
        raise CliError("matrix must be a JSON array of integer rows")
    for row in obj:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise CliError(f"matrix entries must be integers, got {x!r}")
    return tuple(tuple(row) for row in obj)


def cmd_map_check(args):
    src = load_source(args.src)
    dst = load_source(args.dst)
    value = is_fan_map(_parse_matrix(args.matrix), src, dst)
    _emit(args, [str(value).lower()], {"value": value})
    return _predicate_exit(args, [value])


def cmd_refines(args):
    src = load_source(args.src)
    dst = load_source(args.dst)
    value = is_refinement(src, dst)
    _emit(args, [str(value).lower()], {"value": value})
    return _predicate_exit(args, [value])


def cmd_pullback(args):
    src = load_source(args.src)
    dst = load_source(args.dst)
    fm = fan_map(_parse_matrix(args.matrix), src, dst)
    d = parse_divisor(args.divisor, dst)
    result = pullback(fm, d)
    payload = divisor_to_json(result)
    if args.json:
        _emit(args, [], {"divisor": payload})
    else:
        print(json.dumps(payload))
    return EXIT_OK


def cmd_catalog(args):
    if args.action == "list":
        entries = [catalog.ENTRIES[name] for name in catalog.names()]
        lines = [
            name if not e.param_names else f"{name} [{', '.join(e.param_names)}]"
            for name, e in zip(catalog.names(), entries)
        ]
        obj = {"entries": [{"name": e.name, "params": list(e.param_names)} for e in entries]}
        _emit(args, lines, obj)
        return EXIT_OK
    if not args.name:
        raise CliError("catalog get requires an entry name")
    fan = catalog.get(args.name, **_parse_params(args.param))
    obj = fan_to_dict(fan)
    if args.json:
        _emit(args, [], {"fan": obj})
    else:
        print(json.dumps(obj, indent=2))
    return EXIT_OK


def cmd_report(args):
    if args.topic != "paper":
        raise CliError(f"unknown report topic {args.topic!r}")
    results = report.run_all()
    obj = {
        "checks": [
            {"id": r.ident, "title": r.title, "passed": r.passed, "details": r.details}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    _emit(args, report.render_table(results).splitlines(), obj)
    return EXIT_OK if all(r.passed for r in results) else EXIT_ASSERT


def _merge_flag_values(argv, flags):
    """Join "-d -K"-style pairs so argparse does not eat leading dashes."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in flags and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            nxt = argv[i + 1]
            out.append(tok + nxt if not tok.startswith("--") else f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="toricnef",
        description="Exact computations on complete simplicial fans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fan_arg=True, sweep=False):
        if fan_arg:
            p.add_argument("fan", help="fan source: a FanFile path or catalog:NAME")
            p.add_argument("--param", action="append", metavar="K=V",
                           help="catalog entry parameter (repeatable)")
            if sweep:
                p.add_argument("--sweep", action="append", metavar="K=LO..HI",
                               help="run over a parameter range (repeatable)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--assert", dest="assert_", action="store_true",
                       help="exit 2 when a predicate is false")

    p = sub.add_parser("validate", help="check fan axioms")
    common(p)
    p.set_defaults(fn=cmd_validate)

    for name, fn, help_ in (
        ("smooth", cmd_smooth, "every maximal cone is a lattice basis"),
        ("complete", cmd_complete, "the support is the whole space"),
        ("nef-trivial", cmd_nef_trivial, "the nef cone is zero"),
        ("projective", cmd_projective, "an ample divisor exists"),
    ):
        p = sub.add_parser(name, help=help_)
        common(p, sweep=True)
        p.set_defaults(fn=fn)

    p = sub.add_parser("picard", help="divisor class rank of a smooth complete fan")
    common(p)
    p.set_defaults(fn=cmd_picard)

    p = sub.add_parser("walls", help="list walls with their relations")
    common(p)
    p.set_defaults(fn=cmd_walls)

    p = sub.add_parser("nef-check", help="is the divisor nef")
    common(p)
    p.add_argument("-d", "--divisor", required=True,
                   help='comma-separated coefficients or "-K"')
    p.set_defaults(fn=cmd_nef_check)

    p = sub.add_parser("nef-cone", help="extreme rays of the nef cone in class coordinates")
    common(p)
    p.set_defaults(fn=cmd_nef_cone)

    p = sub.add_parser("polytope", help="vertices of the divisor polytope")
    common(p)
    p.add_argument("-d", "--divisor", required=True)
    p.set_defaults(fn=cmd_polytope)

    p = sub.add_parser("subdivide", help="star subdivision at a new ray")
    common(p)
    p.add_argument("-w", "--ray", required=True, metavar="X,Y,Z")
    p.set_defaults(fn=cmd_subdivide)

    p = sub.add_parser("map-check", help="is the matrix a map of fans")
    p.add_argument("-m", "--matrix", required=True, help="JSON array of integer rows")
    p.add_argument("src")
    p.add_argument("dst")
    common(p, fan_arg=False)
    p.set_defaults(fn=cmd_map_check)

    p = sub.add_parser("refines", help="does SRC refine DST")
    p.add_argument("src")
    p.add_argument("dst")
    common(p, fan_arg=False)
    p.set_defaults(fn=cmd_refines)

    p = sub.add_parser("pullback", help="pull a divisor back along a map of fans")
    p.add_argument("-m", "--matrix", required=True)
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("-d", "--divisor", required=True)
    common(p, fan_arg=False)
    p.set_defaults(fn=cmd_pullback)

    p = sub.add_parser("catalog", help="list entries or emit one as FanFile JSON")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", metavar="K=V")
    common(p, fan_arg=False)
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("report", help="run the verification suite")
    p.add_argument("topic", choices=["paper"])
    common(p, fan_arg=False)
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = _merge_flag_values(argv, {"-d", "--divisor", "-w", "--ray", "-m", "--matrix"})
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (FanValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
