"""Command-line front end.

Every subcommand reads a system description (``--system FILE``, ``-`` for
stdin) and writes JSON to stdout.  Exit codes: 0 success, 2 bad input,
3 inconclusive (raise the budget), 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys as _sys
from typing import Any, Sequence

from . import imagcone as zc
from . import limitrays as lr
from . import rootsys as rs
from . import titschamber as tc
from . import universal as uv
from .exactfield import FieldError, FieldSpec, Scalar, Vec
from .jsonio import scalar_from_json, scalar_to_json, vec_from_json
from .polycone import ConeError, PolyCone

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE, EXIT_INTERNAL = 0, 2, 3, 4


class InputError(ValueError):
    pass


# --------------------------------------------------------------------------
# system specs


def system_from_json(data: dict) -> rs.BasedRootSystem:
    """Build a system from ``gram``, ``form`` + ``simples`` or ``coxeter_labels``."""
    if not isinstance(data, dict):
        raise InputError("system spec must be a JSON object")
    modes = [k for k in ("gram", "form", "coxeter_labels") if k in data]
    if len(modes) != 1 or ("simples" in data) != ("form" in data):
        raise InputError("give exactly one of gram, form + simples, coxeter_labels")
    names = tuple(data.get("names", ()))
    field = FieldSpec.from_json(data["field"]) if "field" in data else None
    if modes == ["gram"]:
        G = [[scalar_from_json(x) for x in row] for row in data["gram"]]
        if field is None:
            field = _field_of(x for row in G for x in row)
        return rs.build_from_gram(field, G, names)
    if modes == ["form"]:
        form = [[scalar_from_json(x) for x in row] for row in data["form"]]
        simples = [vec_from_json(v) for v in data["simples"]]
        if field is None:
            field = _field_of([x for row in form for x in row] + [x for v in simples for x in v])
        return rs.build_from_vectors(field, form, simples, names)
    return rs.build_from_labels(data["coxeter_labels"], field, names)


def _field_of(xs) -> FieldSpec:
    from .exactfield import prime_factors

    primes: set[int] = set()
    for x in xs:
        for n in x.radicands():
            primes |= set(prime_factors(n))
    return FieldSpec(sorted(primes))


def system_to_json(sys: rs.BasedRootSystem) -> dict:
    out = {
        "field": sys.field.to_json(),
        "form": [list(r) for r in sys.form],
        "simples": [list(v) for v in sys.simples],
    }
    if sys.names:
        out["names"] = list(sys.names)
    return out


# --------------------------------------------------------------------------
# rendering


def _is_scalar_seq(x: Any) -> bool:
    return isinstance(x, (list, tuple)) and bool(x) and all(isinstance(y, Scalar) for y in x)


def _has_scalar(x: Any) -> bool:
    if isinstance(x, Scalar):
        return True
    if isinstance(x, (list, tuple)):
        return any(_has_scalar(y) for y in x)
    if isinstance(x, dict):
        return any(_has_scalar(y) for y in x.values())
    return False


def _floatify(x: Any) -> Any:
    if isinstance(x, Scalar):
        return float(x)
    if isinstance(x, (list, tuple)):
        return [_floatify(y) for y in x]
    if isinstance(x, dict):
        return {k: _floatify(v) for k, v in x.items()}
    return x


def render(x: Any, with_float: bool = False) -> Any:
    """Exact JSON form; with ``with_float`` every scalar-bearing key ``k`` gains ``k_float``."""
    if isinstance(x, Scalar):
        return scalar_to_json(x)
    if isinstance(x, (list, tuple)):
        return [render(y, with_float) for y in x]
    if isinstance(x, dict):
        out = {}
        for k, v in x.items():
            out[k] = render(v, with_float)
            if with_float and _has_scalar(v) and not isinstance(v, dict):
                out[f"{k}_float"] = _floatify(v)
        return out
    return x


def root_json(r: rs.Root) -> dict:
    return {"coeffs": r.coeffs, "vector": r.vector, "depth": r.depth, "word": list(r.word), "height": r.height}


def cone_json(c: PolyCone) -> dict:
    return {
        "generators": [list(v) for v in c.generators],
        "lineality": [list(v) for v in c.lineality],
        "inequalities": [list(v) for v in c.inequalities],
        "equations": [list(v) for v in c.equations],
    }


# --------------------------------------------------------------------------
# argument helpers


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("IMAGCONE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError("IMAGCONE_BUDGET must be an integer") from None
    return zc.DEFAULT_BUDGET


def _parse_json_arg(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return [t.strip() for t in text.split(",")]


def parse_vector(sys: rs.BasedRootSystem, text: str) -> Vec:
    """A vector in ambient coordinates, or (if its length is the rank) over the simple roots."""
    data = _parse_json_arg(text)
    if not isinstance(data, list):
        raise InputError("vector must be a JSON list or comma-separated scalars")
    v = vec_from_json(data)
    if len(v) == sys.dim:
        return v
    if len(v) == sys.rank:
        return sys.combine(v)
    raise InputError(f"vector has length {len(v)}; expected {sys.dim} or {sys.rank}")


def parse_vectors(sys: rs.BasedRootSystem, text: str) -> list[Vec]:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(v, list) for v in data):
        raise InputError("expected a JSON list of vectors")
    return [parse_vector(sys, json.dumps(v)) for v in data]


def _load_system(path: str) -> rs.BasedRootSystem:
    try:
        if path == "-":
            data = json.load(_sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read system spec: {e}") from None
    return system_from_json(data)


# --------------------------------------------------------------------------
# subcommands


def cmd_validate(sys, args):
    return {"valid": True, "rank": sys.rank, "dim": sys.dim, "gram": sys.gram, "rho": sys.rho, **system_to_json(sys)}, EXIT_OK


def cmd_roots(sys, args):
    roots = rs.positive_roots_up_to_height(sys, scalar_from_json(_parse_json_arg(args.height)))
    return {"count": len(roots), "roots": [root_json(r) for r in roots]}, EXIT_OK


def cmd_type(sys, args):
    comps = []
    for c in rs.classify(sys):
        entry: dict = {"indices": list(c.indices), "type": c.kind}
        if c.delta is not None:
            entry["delta"] = list(c.delta)
        comps.append(entry)
    return {"components": comps}, EXIT_OK


def cmd_facial_subsets(sys, args):
    out = [{"indices": list(f.indices), "witness": f.witness, "special": f.special} for f in tc.facial_subsets(sys)]
    return {"count": len(out), "facial_subsets": out}, EXIT_OK


def cmd_kcone(sys, args):
    cone = zc.k_cone_via_facials(sys) if args.via_facials else zc.k_cone(sys)
    return cone_json(cone), EXIT_OK


def cmd_zmember(sys, args):
    m = zc.z_membership(sys, parse_vector(sys, args.vector), _budget(args))
    out: dict = {"status": m.status}
    if m.status == "in_z":
        out.update(word=list(m.word), k=m.k)
    elif m.status == "not_in_z":
        out["certificate"] = m.certificate
        if m.word:
            out["word"] = list(m.word)
    else:
        out["steps"] = m.steps
    return out, EXIT_INCONCLUSIVE if m.status == "inconclusive" else EXIT_OK


def cmd_zface(sys, args):
    v = parse_vector(sys, args.vector)
    m = zc.z_membership(sys, v, _budget(args))
    if m.status == "inconclusive":
        return {"status": "inconclusive", "steps": m.steps}, EXIT_INCONCLUSIVE
    if m.status != "in_z":
        return {"status": "not_in_z", "certificate": m.certificate}, EXIT_OK
    f = zc.z_face_minimal(sys, v, _budget(args))
    return {"status": "in_z", "word": list(f.word), "indices": list(f.indices)}, EXIT_OK


def cmd_zface_lattice(sys, args):
    lat = zc.z_face_lattice_standard(sys)
    nodes = lat.nodes
    meets = [[list(a), list(b), list(lat.meet(a, b))] for i, a in enumerate(nodes) for b in nodes[i + 1:]]
    joins = [[list(a), list(b), list(lat.join(a, b))] for i, a in enumerate(nodes) for b in nodes[i + 1:]]
    return {"nodes": [list(n) for n in nodes], "bottom": list(lat.bottom), "top": list(lat.top),
            "meets": meets, "joins": joins}, EXIT_OK


def cmd_facial_closure(sys, args):
    gens = [rs.as_root(sys, v) for v in parse_vectors(sys, args.generators)]
    fc = zc.facial_closure(sys, gens, _budget(args))
    if fc.status == "inconclusive":
        return {"status": "inconclusive"}, EXIT_INCONCLUSIVE
    return {"status": "ok", "word": list(fc.word), "indices": list(fc.indices),
            "descent_word": list(fc.descent_word), "infinite_part": list(fc.infinite_part),
            "finite_part": list(fc.finite_part)}, EXIT_OK


def cmd_limit_rays(sys, args):
    height = scalar_from_json(_parse_json_arg(args.height))
    if args.csv:
        return ("csv", lr.csv_rows(sys, height)), EXIT_OK
    if args.mode == "exact":
        rays = lr.dihedral_ray_union(sys, height)
    else:
        rays = lr.approx_limit_rays(sys, float(height), args.eps)
    return {"exact": rays.exact, "rays": [list(v) for v in rays.rays],
            "approx": [{"direction": list(p), "count": c} for p, c in rays.approx]}, EXIT_OK


def cmd_universal_locate(sys, args):
    r = uv.locate(sys, parse_vector(sys, args.vector), _budget(args))
    out: dict = {"status": r.status}
    if r.alpha is not None:
        out["alpha"] = r.alpha
    if r.status == "in_z":
        out["word"] = list(r.word)
    if r.status == "inconclusive":
        out["steps"] = r.steps
    return out, EXIT_INCONCLUSIVE if r.status == "inconclusive" else EXIT_OK


def cmd_universal_itinerary(sys, args):
    it = uv.itinerary(sys, parse_vector(sys, args.vector), args.steps)
    return {"prefix": list(it.prefix), "terminated": it.terminated, "steps": it.steps, "exited": it.exited}, EXIT_OK


def cmd_dominance(sys, args):
    a = rs.as_root(sys, parse_vector(sys, args.a))
    b = rs.as_root(sys, parse_vector(sys, args.b))
    return {"dominates": rs.dominates(sys, a, b), "pairing": sys.pair(a.vector, b.vector),
            "lengths": [a.length, b.length]}, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="imagcone", description="Exact computations with based root systems and imaginary cones.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", required=True, help="system spec JSON file ('-' for stdin)")
    common.add_argument("--float", action="store_true", help="add decimal approximations next to exact values")
    common.add_argument("--budget", type=int, default=None, help="step budget (default: $IMAGCONE_BUDGET or 10000)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "check and echo the system")
    add("roots", cmd_roots, "positive roots up to a height").add_argument("--height", required=True)
    add("type", cmd_type, "finite/affine/indefinite type of each component")
    add("facial-subsets", cmd_facial_subsets, "facial subsets with witnesses")
    add("kcone", cmd_kcone, "the cone K").add_argument("--via-facials", action="store_true")
    add("zmember", cmd_zmember, "semi-decide membership in Z").add_argument("--vector", required=True)
    add("zface", cmd_zface, "smallest face of Z containing a point").add_argument("--vector", required=True)
    add("zface-lattice", cmd_zface_lattice, "lattice of standard faces of Z")
    add("facial-closure", cmd_facial_closure, "facial closure of a reflection subgroup").add_argument(
        "--generators", required=True, help="JSON list of root vectors")
    lim = add("limit-rays", cmd_limit_rays, "limit rays of root rays")
    lim.add_argument("--mode", choices=("exact", "numeric"), default="exact")
    lim.add_argument("--height", required=True)
    lim.add_argument("--eps", type=float, default=1e-4)
    lim.add_argument("--csv", action="store_true", help="emit the normalized root cloud as CSV")
    loc = add("universal-locate", cmd_universal_locate, "Z or D_alpha for a point (generic universal)")
    loc.add_argument("--vector", required=True)
    it = add("universal-itinerary", cmd_universal_itinerary, "forced itinerary of a point")
    it.add_argument("--vector", required=True)
    it.add_argument("--steps", type=int, default=20)
    dom = add("dominance", cmd_dominance, "dominance between two positive roots")
    dom.add_argument("--a", required=True)
    dom.add_argument("--b", required=True)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or _sys.stdout
    err = err or _sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        sys = _load_system(args.system)
        if args.command in ("universal-locate", "universal-itinerary") and not uv.validate_generic_universal(sys):
            raise InputError("system is not generic universal")
        result, code = args.func(sys, args)
    except rs.AlgorithmInvariantViolated as e:
        print(json.dumps({"error": "internal", "message": str(e)}), file=err)
        return EXIT_INTERNAL
    except (InputError, rs.RootSystemError, FieldError, ConeError, ValueError, KeyError, TypeError) as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=err)
        return EXIT_INPUT
    if isinstance(result, tuple) and result[0] == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerows(result[1])
    else:
        out.write(json.dumps(render(result, args.float)) + "\n")
    return code


def main() -> None:
    _sys.exit(run())


if __name__ == "__main__":
    main()
