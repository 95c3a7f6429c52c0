"""Command-line entry point.

Exit codes: 0 = pass/success, 1 = counterexample/failure/inconclusive
(the check did not hold), 2 = usage or parse error.  `-` as a file name
reads standard input.  `--json` emits one object with fields
{command, verdict, certificates, bounds, timings}; everything except the
timings is deterministic for identical inputs and flags.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import analysis, catalog, dsl, morphisms
from .algebra import Presentation, PresentationError
from .analysis import Bounds


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str, env=None, target_env=None):
    return dsl.parse(_read(path), env=env, target_env=target_env)


def _bounds(args) -> Bounds:
    default_len = int(os.environ.get("CEDGA_MAX_LEN", 6))
    return Bounds(
        max_word_length=(args.max_len if args.max_len is not None
                         else default_len),
        max_level=args.max_level if args.max_level is not None else 2,
        degree_bound=(args.degree_bound
                      if getattr(args, "degree_bound", None) is not None
                      else 8),
    )


def _emit(args, command, verdict, certificates, bounds, t0):
    ms = int((time.monotonic() - t0) * 1000)
    if args.json:
        obj = {"command": command, "verdict": verdict,
               "certificates": certificates,
               "bounds": bounds.to_json_dict() if bounds else None,
               "timings": {"total_ms": ms}}
        print(json.dumps(obj, sort_keys=True))
    else:
        print(f"{command}: {verdict}")
        for key in sorted(certificates):
            print(f"  {key}: {json.dumps(certificates[key], sort_keys=True)}")


def _presentations(bundle, args):
    if getattr(args, "pres", None):
        if args.pres not in bundle.presentations:
            raise KeyError(f"no presentation named {args.pres!r}")
        return {args.pres: bundle.presentations[args.pres]}
    return bundle.presentations


def _single(bundle, args) -> Presentation:
    name = getattr(args, "pres", None) or "main"
    if name not in bundle.presentations:
        raise KeyError(f"no presentation named {name!r}")
    return bundle.presentations[name]


def cmd_catalog(args):
    if not args.name:
        for name in catalog.catalog_names():
            print(name)
        return 0
    bundle = catalog.example(args.name, p_max=args.p_max)
    if args.map:
        if args.map not in bundle.maps:
            raise KeyError(f"no map named {args.map!r}")
        sub = catalog.CatalogBundle(bundle.name, {},
                                    {args.map: bundle.maps[args.map]}, {}, [])
        sys.stdout.write(dsl.serialize(sub))
        return 0
    if args.pres:
        if args.pres not in bundle.presentations:
            raise KeyError(f"no presentation named {args.pres!r}")
        # single-presentation files are canonically named "main" so the
        # multi-file obstruct workflow can reference them uniformly
        sub = catalog.CatalogBundle(
            bundle.name, {"main": bundle.presentations[args.pres]}, {}, {}, [])
        sys.stdout.write(dsl.serialize(sub))
        return 0
    if args.emit:
        sys.stdout.write(dsl.serialize(bundle))
        return 0
    for kind, names in (("presentations", bundle.presentations),
                        ("maps", bundle.maps),
                        ("augmentations", bundle.augmentations)):
        if names:
            print(f"{kind}: {' '.join(names)}")
    for note in bundle.notes:
        print(f"note: {note}")
    return 0


def cmd_check_d2(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    certs, ok = {}, True
    for name, P in _presentations(bundle, args).items():
        rep = analysis.check_d_squared(P)
        certs[name] = rep.to_json_dict()
        ok = ok and rep.ok
    _emit(args, "check-d2", "pass" if ok else "counterexample", certs,
          None, t0)
    return 0 if ok else 1


def cmd_grade(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    certs, ok = {}, True
    for name, P in _presentations(bundle, args).items():
        val = P.validate()
        deg = analysis.check_degree(P)
        certs[name] = {"validation": val.to_json_dict(),
                       "degree": deg.to_json_dict()}
        ok = ok and val.ok and deg.ok
    _emit(args, "grade", "pass" if ok else "violation", certs, None, t0)
    return 0 if ok else 1


def cmd_parity(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    certs, ok = {}, True
    for name, P in _presentations(bundle, args).items():
        rep = analysis.check_parity_flip(P)
        certs[name] = rep.to_json_dict()
        ok = ok and rep.ok
    _emit(args, "parity", "pass" if ok else "counterexample", certs, None, t0)
    return 0 if ok else 1


def cmd_h0(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    P = _single(bundle, args)
    bounds = _bounds(args)
    rep = analysis.h0(P, degree_bound=bounds.degree_bound)
    verdict = "ground-ring" if rep.is_ground_ring else "basis"
    _emit(args, "h0", verdict, {"h0": rep.to_json_dict()}, bounds, t0)
    return 0


def cmd_exact(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    P = _single(bundle, args)
    target = dsl.parse_element(args.target, P)
    bounds = _bounds(args)
    res = analysis.exactness_search(P, target, bounds, parity=args.parity)
    _emit(args, "exact", res.status, {"search": res.to_json_dict(P)},
          bounds, t0)
    return 0 if res.found else 1


def cmd_trivial(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    P = _single(bundle, args)
    bounds = _bounds(args)
    res = analysis.is_trivial(P, bounds, parity=args.parity)
    verdict = ("certified_trivial" if res.certified_trivial
               else "not_within_bounds")
    _emit(args, "trivial", verdict, {"search": res.search.to_json_dict(P)},
          bounds, t0)
    return 0 if res.certified_trivial else 1


def cmd_verify_map(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    maps = bundle.maps
    if args.map:
        if args.map not in maps:
            raise KeyError(f"no map named {args.map!r}")
        maps = {args.map: maps[args.map]}
    if not maps:
        raise KeyError("file contains no map blocks")
    certs, ok = {}, True
    for name, phi in maps.items():
        try:
            rep = morphisms.verify_chain_map(phi)
            certs[name] = rep.to_json_dict()
            ok = ok and rep.ok
        except morphisms.MapError as exc:
            certs[name] = {"ok": False, "error": str(exc)}
            ok = False
    _emit(args, "verify-map", "pass" if ok else "failure", certs, None, t0)
    return 0 if ok else 1


def cmd_verify_aug(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    augs = bundle.augmentations
    if args.aug:
        if args.aug not in augs:
            raise KeyError(f"no augmentation named {args.aug!r}")
        augs = {args.aug: augs[args.aug]}
    if not augs:
        raise KeyError("file contains no aug blocks")
    certs, ok = {}, True
    for name, eps in augs.items():
        rep = morphisms.verify_augmentation(eps)
        certs[name] = rep.to_json_dict()
        ok = ok and rep.ok
    _emit(args, "verify-aug", "pass" if ok else "failure", certs, None, t0)
    return 0 if ok else 1


def cmd_linearize(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    env = dict(bundle.presentations)
    aug_bundle = bundle if args.augfile == args.file else _load(
        args.augfile, env=env)
    augs = aug_bundle.augmentations
    if args.aug:
        augs = {args.aug: augs[args.aug]}
    if len(augs) != 1:
        raise KeyError("choose one augmentation with --aug")
    ((name, eps),) = augs.items()
    lin = morphisms.partial_linearize(eps.presentation, eps)
    out_bundle = catalog.CatalogBundle("linearized", {"main": lin}, {}, {}, [])
    text = dsl.serialize(out_bundle)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    _emit(args, "linearize", "ok",
          {"augmentation": name,
           "generators": [g.name for g in lin.generators]}, None, t0)
    return 0


def cmd_obstruct(args):
    t0 = time.monotonic()
    bundle = _load(args.file)
    if args.codomain:
        cod_bundle = _load(args.codomain)
        lm_bundle = _load(args.link_map, env=bundle.presentations,
                          target_env=cod_bundle.presentations)
        maps = lm_bundle.maps
    else:
        maps = bundle.maps
    if args.map:
        maps = {args.map: maps[args.map]}
    if len(maps) != 1:
        raise KeyError("choose one link map with --map")
    ((name, link_map),) = maps.items()
    bounds = _bounds(args)
    rep = morphisms.obstruct_y_filling(link_map.source, link_map.target,
                                       link_map, bounds)
    _emit(args, "obstruct", rep.status,
          {"report": rep.to_json_dict(link_map.target), "map": name},
          bounds, t0)
    return 0 if rep.obstructed else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cedga",
        description="Chekanov-Eliashberg dg-algebra engine for singular "
                    "Legendrians")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, pres_default=False, bounds=False, parity=False):
        p.add_argument("--json", action="store_true")
        p.add_argument("--pres", help="presentation name"
                       + (" (default: main)" if pres_default else ""))
        if bounds:
            p.add_argument("--max-len", type=int, default=None)
            p.add_argument("--max-level", type=int, default=None)
            p.add_argument("--degree-bound", type=int, default=None)
        if parity:
            p.add_argument("--parity", choices=("odd", "even"), default=None)

    p = sub.add_parser("catalog", help="list or emit worked examples")
    p.add_argument("name", nargs="?")
    p.add_argument("--emit", action="store_true")
    p.add_argument("--p-max", type=int, default=2)
    p.add_argument("--pres")
    p.add_argument("--map")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    for cmd, fn, help_ in (("check-d2", cmd_check_d2, "d squared vanishes"),
                           ("grade", cmd_grade, "degree homogeneity"),
                           ("parity", cmd_parity, "word-length parity flip")):
        p = sub.add_parser(cmd, help=help_)
        p.add_argument("file")
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("h0", help="degree-0 homology by rewriting")
    p.add_argument("file")
    common(p, pres_default=True, bounds=True)
    p.set_defaults(func=cmd_h0)

    p = sub.add_parser("exact", help="bounded exactness search")
    p.add_argument("file")
    p.add_argument("--target", required=True, help="element expression")
    common(p, pres_default=True, bounds=True, parity=True)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("trivial", help="search for d(x) = 1")
    p.add_argument("file")
    common(p, pres_default=True, bounds=True, parity=True)
    p.set_defaults(func=cmd_trivial)

    p = sub.add_parser("verify-map", help="chain-map check")
    p.add_argument("file")
    p.add_argument("--map")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_map)

    p = sub.add_parser("verify-aug", help="augmentation check")
    p.add_argument("file")
    p.add_argument("--aug")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_aug)

    p = sub.add_parser("linearize", help="partial linearization")
    p.add_argument("file")
    p.add_argument("augfile")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--aug")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_linearize)

    p = sub.add_parser("obstruct", help="Y-singularity filling obstruction")
    p.add_argument("file")
    p.add_argument("--codomain")
    p.add_argument("--link-map")
    p.add_argument("--map")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--degree-bound", type=int, default=None)
    p.set_defaults(func=cmd_obstruct)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (dsl.ParseError, FileNotFoundError, KeyError, PresentationError,
            analysis.NonHomogeneousTargetError,
            analysis.UnsupportedPresentationError,
            morphisms.UnsupportedCodomainError,
            morphisms.ScopeError, morphisms.UnverifiedAugmentationError,
            morphisms.MapError, ValueError) as exc:
        print(f"cedga: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
