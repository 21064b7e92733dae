"""Command-line front end.

    hkcones <verb> [--fixture NAME|PATH] [--class a,b,...] [options]

Every verb writes one JSON document (``fan-svg`` writes SVG) to stdout or
``--out``.  Exit status is 0 on success, 1 when the answer is a domain error
(the class is not big, the fan is truncated, ...), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from hkcones import chambers, cones, walk, zariski
from hkcones.errors import DimensionMismatch, DomainError, FixtureError, ScalarParseError, UnknownFixture
from hkcones.fixtures import BUILTINS, builtin
from hkcones.lattice import DivisorClass
from hkcones.model import load_model, model_to_dict, validate
from hkcones.scalar import parse_scalar
from hkcones.serialize import SCHEMA, dumps, to_json, vec_to_json
from hkcones.svg import fan_svg

VERBS = (
    "validate",
    "zariski",
    "membership",
    "dual",
    "ampk",
    "chambers",
    "mori",
    "destab",
    "walk",
    "loci",
    "fan-svg",
    "fixtures",
)
VALUE_FLAGS = ("--class", "--ample", "--cone", "--fixture", "--k", "--pairing", "--out")
FIXTURE_DIR_ENV = "HKCONES_FIXTURE_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="hkcones", description="Exact cone and base-locus computations on hyper-Kaehler models.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--fixture", help="built-in fixture name or path to a fixture JSON file")
    p.add_argument("--class", dest="cls", help="divisor class as comma-separated p/q coordinates")
    p.add_argument("--ample", help="ample class for destab (default: the fixture's ample class)")
    p.add_argument("--k", type=int, help="index for ampk (default: every k)")
    p.add_argument("--pairing", choices=("bbf", "curve"), default="bbf")
    p.add_argument("--cone", default="movable", help="positive|effective|movable|nef or explicit rays a,b;c,d")
    p.add_argument("--out", help="write the output here instead of stdout")
    p.add_argument("--all-fixtures", action="store_true", help="run the verb on every known fixture")
    return p


def _join_values(argv):
    """Glue ``--class -1,0`` into ``--class=-1,0`` so negative vectors are not read as flags."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def parse_vector(text, flag, rank=None):
    try:
        vec = DivisorClass(tuple(parse_scalar(part) for part in text.split(",")))
    except ScalarParseError as exc:
        raise UsageError(f"{flag}: {exc}") from None
    if rank is not None and len(vec) != rank:
        raise UsageError(f"{flag}: expected {rank} coordinates, got {len(vec)}")
    return vec


# -- fixtures -----------------------------------------------------------------


def _fixture_dirs():
    raw = os.environ.get(FIXTURE_DIR_ENV, "")
    return [Path(p) for p in raw.split(os.pathsep) if p]


def _dir_fixtures():
    found = {}
    for d in _fixture_dirs():
        if d.is_dir():
            for f in sorted(d.glob("*.json")):
                found.setdefault(f.stem, f)
    return found


def resolve_fixture(source, check=True):
    """Load a model from a built-in name, a file path, or the fixture search path."""
    if source in BUILTINS:
        model = builtin(source)
    elif Path(source).is_file():
        model = load_model(source)
    elif source in _dir_fixtures():
        model = load_model(_dir_fixtures()[source])
    else:
        raise UnknownFixture(f"no fixture named {source!r}")
    if check:
        validate(model).raise_if_invalid(model.name)
    return model


def all_fixture_names():
    return sorted(set(BUILTINS) | set(_dir_fixtures()))


# -- verbs -------------------------------------------------------------------


def _need_class(args, model):
    if args.cls is None:
        raise UsageError(f"--class is required for {args.verb}")
    return parse_vector(args.cls, "--class", model.rank)


def _named_cone(model, name):
    table = {
        "positive": cones.positive_cone_rank2,
        "effective": cones.effective_cone_rank2,
        "movable": cones.movable_cone_rank2,
        "nef": cones.nef_cone_rank2,
    }
    if name in table:
        return table[name](model)
    parts = name.split(";")
    if len(parts) != 2:
        raise UsageError(f"--cone: expected one of {', '.join(table)} or two rays a,b;c,d")
    u, v = (parse_vector(p, "--cone", model.rank) for p in parts)
    return cones.Cone2D.spanned(u, v)


def run_verb(args, model):
    """Report dict (or SVG text) for one verb on one model."""
    verb = args.verb
    if verb == "validate":
        return to_json(validate(model), model)
    if verb == "fixtures":
        out = {"schema": SCHEMA, "kind": "fixture"}
        out.update(model_to_dict(model))
        return out
    if verb == "zariski":
        return to_json(zariski.decompose(model, _need_class(args, model)), model)
    if verb == "membership":
        d = _need_class(args, model)
        return to_json(cones.membership(model, d), model, **{"class": vec_to_json(d)})
    if verb == "dual":
        cone = _named_cone(model, args.cone)
        dual = cones.dual_cone_rank2(model, cone, args.pairing)
        return to_json(dual, model, source={"rays": [vec_to_json(r.direction) for r in cone.rays()]}, pairing=args.pairing)
    if verb == "ampk":
        ks = [args.k] if args.k is not None else list(range(1, model.dim + 1))
        for k in ks:
            if not 1 <= k <= model.dim:
                raise UsageError(f"--k: must lie in 1..{model.dim}")
        ladder = []
        for k in ks:
            c, dual = cones.amp_k(model, k), cones.amp_k_dual(model, k)
            ladder.append({"k": k, "rays": to_json(c)["rays"], "dual_rays": to_json(dual)["rays"], "agree": c == dual})
        return {"schema": SCHEMA, "kind": "ampk", "fixture": model.name, "dim": model.dim, "ladder": ladder}
    if verb == "chambers":
        return to_json(chambers.stability_chambers_rank2(model), model)
    if verb == "mori":
        return to_json(chambers.mori_chamber(model, _need_class(args, model)), model)
    if verb == "destab":
        d = _need_class(args, model)
        a = parse_vector(args.ample, "--ample", model.rank) if args.ample else model.ample
        return to_json(chambers.destabilizing_numbers(model, d, a), model)
    if verb == "walk":
        return to_json(walk.walk_rank2(model, _need_class(args, model)), model)
    if verb == "loci":
        return to_json(walk.base_loci(model, _need_class(args, model)), model)
    if verb == "fan-svg":
        return fan_svg(model, chambers.stability_chambers_rank2(model))
    raise UsageError(f"unknown verb {verb}")  # pragma: no cover - argparse guards this


def _error_doc(exc):
    out = {"schema": SCHEMA, "kind": "error", "error": type(exc).__name__, "message": str(exc)}
    violations = getattr(exc, "violations", None)
    if violations:
        out["violations"] = [v.as_dict() for v in violations]
    return out


def _emit(text, out_path, stdout):
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)


def run(argv, stdout=None, stderr=None):
    """Run one command line; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(_join_values(list(argv)))
        if args.verb == "fixtures" and args.fixture is None and not args.all_fixtures:
            doc = {"schema": SCHEMA, "kind": "fixtures", "fixtures": all_fixture_names()}
            _emit(dumps(doc), args.out, stdout)
            return 0
        if args.all_fixtures:
            return _run_batch(args, stdout, stderr)
        if args.fixture is None:
            raise UsageError(f"--fixture is required for {args.verb}")
        try:
            model = resolve_fixture(args.fixture, check=args.verb != "validate")
            result = run_verb(args, model)
        except (DomainError, FixtureError) as exc:
            _emit(dumps(_error_doc(exc)), args.out, stdout)
            print(f"hkcones: {type(exc).__name__}: {exc}", file=stderr)
            return 1
        except DimensionMismatch as exc:
            raise UsageError(str(exc)) from None
    except UsageError as exc:
        print(f"hkcones: usage error: {exc}", file=stderr)
        return 2
    if isinstance(result, str):
        _emit(result, args.out, stdout)
        return 0
    _emit(dumps(result), args.out, stdout)
    if args.verb == "validate" and not result["valid"]:
        return 1
    return 0


def _run_batch(args, stdout, stderr):
    if args.verb == "fan-svg":
        raise UsageError("--all-fixtures cannot be combined with fan-svg")
    results = {}
    failed = False
    for name in all_fixture_names():
        try:
            model = resolve_fixture(name, check=args.verb != "validate")
            results[name] = run_verb(args, model)
        except (DomainError, FixtureError) as exc:
            results[name] = _error_doc(exc)
            failed = True
        except DimensionMismatch as exc:
            results[name] = _error_doc(exc)
            failed = True
        except UsageError as exc:
            # a class of the wrong rank for this fixture, say
            results[name] = {"schema": SCHEMA, "kind": "error", "error": "UsageError", "message": str(exc)}
            failed = True
    doc = {"schema": SCHEMA, "kind": "batch", "verb": args.verb, "results": results}
    _emit(dumps(doc), args.out, stdout)
    if failed:
        print("hkcones: some fixtures reported errors", file=stderr)
    return 1 if failed else 0


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
