"""Batch command-line front end.

Exit codes: 0 success/certified, 2 a checked condition fails, 1 invalid
input.  All commands are deterministic; NERVELAB_THREADS caps the horn
checker's parallelism.  Randomized property tests live in the test suite,
never here.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .glenn import glenn_table_markers_note, universal_glenn_table
from .inverses.bic import AlgebraicPresheaf, ConstructionFailure, bic_from, roundtrip_U_delta, roundtrip_u_delta
from .inverses.fbic import fbic_from, roundtrip_U_theta2, roundtrip_u_theta2
from .inverses.sym import first_fillers_gamma, gamma_chi_as_simplicial, roundtrip_U_gamma, roundtrip_u_gamma, sym_from
from .inverses.vdc import roundtrip_U_delta2, roundtrip_u_delta2, vdc_from
from .kancheck import check_gamma_kan, check_inner_kan, check_n_reduced
from .nerves.duskin import duskin_nerve
from .nerves.flatten import fl2
from .nerves.gamma import gamma_nerve
from .nerves.theta2 import theta2_nerve
from .nerves.vdc import vdc_nerve
from .presheaf import TruncatedPresheaf
from .shapes import SHAPES
from .shapes.gamma import GammaMap, coface_display_name, four_way_factor, generator_word
from .structures import (
    FancyBicategory,
    FinBicategory,
    SymMonGroupoid,
    VerityDoubleCategory,
    check_bicategory,
    check_fancy,
    check_sym_mon,
    check_vdc,
    structure_from_json,
    structure_to_json,
)

OK, FAILED, INVALID = 0, 2, 1


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SystemExit(_invalid(f"cannot read {path}: {exc}"))


def _invalid(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return INVALID


def _emit(doc, args, text: str | None = None) -> None:
    body = json.dumps(doc, indent=1, sort_keys=True) if args.format == "json" or text is None else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _load_presheaf(path: str) -> tuple[TruncatedPresheaf, dict]:
    doc = _load_json(path)
    required = {"shape", "truncation_dim", "cells", "action"}
    missing = required - set(doc)
    if missing:
        raise SystemExit(_invalid(f"{path}: missing fields {sorted(missing)}"))
    try:
        return TruncatedPresheaf.from_json(doc), doc
    except (KeyError, ValueError, AssertionError) as exc:
        raise SystemExit(_invalid(f"{path}: {exc}"))


def _load_structure(path: str):
    doc = _load_json(path)
    if "kind" not in doc:
        raise SystemExit(_invalid(f"{path}: missing field kind"))
    try:
        return structure_from_json(doc)
    except (KeyError, ValueError) as exc:
        raise SystemExit(_invalid(f"{path}: field {exc}"))


def cmd_validate(args) -> int:
    p, _ = _load_presheaf(args.input)
    errs = p.validate()
    doc = {"valid": not errs, "violations": [str(e) for e in errs]}
    _emit(doc, args, "valid" if not errs else "\n".join(str(e) for e in errs))
    return OK if not errs else FAILED


def cmd_check(args) -> int:
    s = _load_structure(args.input)
    if isinstance(s, SymMonGroupoid):
        rep = check_sym_mon(s)
    elif isinstance(s, FancyBicategory):
        rep = check_fancy(s)
    elif isinstance(s, VerityDoubleCategory):
        rep = check_vdc(s)
    elif isinstance(s, FinBicategory):
        rep = check_bicategory(s, "(2,1)" if s.inv is not None else "bicategory")
    else:
        return _invalid("unknown structure kind")
    _emit(rep.to_json(), args, "\n".join(str(c) for c in rep.checks))
    return OK if rep.ok else FAILED


def _structure_hash(doc: dict) -> str:
    return hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()[:16]


def cmd_nerve(args) -> int:
    doc = _load_json(args.input)
    s = _load_structure(args.input)
    try:
        if args.kind == "duskin":
            assert isinstance(s, FinBicategory)
            built = duskin_nerve(s)
            chi = {f"{g}|{f}": cell for (g, f), cell in built.chi.items()}
        elif args.kind == "gamma":
            assert isinstance(s, SymMonGroupoid)
            built = gamma_nerve(s)
            chi = {f"{a}|{b}": cell for (a, b), cell in built.chi.items()}
        elif args.kind == "vdc":
            assert isinstance(s, VerityDoubleCategory)
            built = vdc_nerve(s)
            chi = {
                "h": {f"{g}|{f}": cell for (g, f), cell in built.chi_h.items()},
                "v": {f"{g}|{f}": cell for (g, f), cell in built.chi_v.items()},
            }
        elif args.kind == "theta2":
            assert isinstance(s, FancyBicategory)
            built = theta2_nerve(s)
            chi = {f"{g}|{f}": cell for (g, f), cell in built.chi.items()}
        else:
            return _invalid(f"unknown nerve kind {args.kind}")
    except (AssertionError, ValueError) as exc:
        return _invalid(f"structure does not fit the construction: {exc}")
    p = built.presheaf
    errs = p.validate()
    out = p.to_json()
    out["chi"] = chi
    out["provenance"] = {"construction": args.kind, "source_hash": _structure_hash(doc)}
    _emit(out, args)
    print(
        f"nerve: shape={p.shape.name} cells="
        + ",".join(f"{p.shape.format_obj(o)}:{len(p.cells_at(o))}" for o in p.objects())
        + f" validation={'ok' if not errs else 'FAILED'}",
        file=sys.stderr,
    )
    return OK if not errs else FAILED


def cmd_check_kan(args) -> int:
    p, _ = _load_presheaf(args.input)
    errs = p.validate()
    if errs:
        return _invalid(f"presheaf invalid: {errs[0]}")
    rep = check_inner_kan(p, args.max_dim)
    certified = rep.inner_kan
    if args.reduced is not None:
        certified &= check_n_reduced(p, args.reduced, args.max_dim, rep)
    if p.shape.name == "gamma":
        check_gamma_kan(p, rep)
    _emit(
        rep.to_json(),
        args,
        "\n".join(f"{k}: {v}" for k, v in rep.flags.items())
        + f"\nhorns checked: {len(rep.records)}",
    )
    return OK if certified else FAILED


def _chi_from_doc(doc: dict, p: TruncatedPresheaf, mode: str):
    if mode == "canonical":
        if "chi" not in doc:
            raise SystemExit(_invalid("--chi canonical needs a nerve file with a chi field"))
        raw = doc["chi"]
        unpack = lambda table: {tuple(k.split("|")): v for k, v in table.items()}
        if p.shape.name == "delta2":
            return unpack(raw["h"]), unpack(raw["v"])
        return unpack(raw)
    if p.shape.name == "delta2":
        from .inverses.vdc import column_presheaf, row_presheaf

        return (
            AlgebraicPresheaf.with_first_fillers(row_presheaf(p)).chi,
            AlgebraicPresheaf.with_first_fillers(column_presheaf(p)).chi,
        )
    if p.shape.name == "gamma":
        return first_fillers_gamma(p)
    if p.shape.name == "theta2":
        from .nerves.theta2 import psi_pullback

        return AlgebraicPresheaf.with_first_fillers(psi_pullback(p)).chi
    return AlgebraicPresheaf.with_first_fillers(p).chi


def cmd_reconstruct(args) -> int:
    p, doc = _load_presheaf(args.input)
    errs = p.validate()
    if errs:
        return _invalid(f"presheaf invalid: {errs[0]}")
    try:
        if args.kind == "bic":
            chi = _chi_from_doc(doc, p, args.chi)
            out = structure_to_json(bic_from(AlgebraicPresheaf(p, chi)).bic)
        elif args.kind == "sym":
            chi = _chi_from_doc(doc, p, args.chi)
            smg, _ = sym_from(fl2(p), chi)
            out = structure_to_json(smg)
        elif args.kind == "vdc":
            chi_h, chi_v = _chi_from_doc(doc, p, args.chi)
            out = structure_to_json(vdc_from(p, chi_h, chi_v).vdc)
        elif args.kind == "fbic":
            chi = _chi_from_doc(doc, p, args.chi)
            out = structure_to_json(fbic_from(p, chi).fancy)
        else:
            return _invalid(f"unknown reconstruction kind {args.kind}")
    except ConstructionFailure as exc:
        print(f"construction failure: {exc}", file=sys.stderr)
        return FAILED
    _emit(out, args)
    return OK


def cmd_roundtrip(args) -> int:
    doc = _load_json(args.input)
    if "kind" in doc:  # a structure: run the U direction
        s = _load_structure(args.input)
        if isinstance(s, SymMonGroupoid):
            rep, _, _ = roundtrip_U_gamma(s)
        elif isinstance(s, FancyBicategory):
            rep, _, _ = roundtrip_U_theta2(s)
        elif isinstance(s, VerityDoubleCategory):
            rep, _, _ = roundtrip_U_delta2(s)
        elif isinstance(s, FinBicategory):
            rep, _, _ = roundtrip_U_delta(s)
        else:
            return _invalid("unknown structure kind")
    else:  # a presheaf: run the u direction
        p, pdoc = _load_presheaf(args.input)
        errs = p.validate()
        if errs:
            return _invalid(f"presheaf invalid: {errs[0]}")
        chi = _chi_from_doc(pdoc, p, args.chi)
        if p.shape.name == "delta":
            rep, _, _ = roundtrip_u_delta(AlgebraicPresheaf(p, chi))
        elif p.shape.name == "gamma":
            rep, _ = roundtrip_u_gamma(p, chi)
        elif p.shape.name == "delta2":
            rep, _ = roundtrip_u_delta2(p, chi[0], chi[1])
        elif p.shape.name == "theta2":
            rep, _ = roundtrip_u_theta2(p, chi)
        else:
            return _invalid(f"no roundtrip for shape {p.shape.name}")
    _emit(rep.to_json(), args)
    return OK if rep.ok else FAILED


def cmd_glenn_table(args) -> int:
    shape = args.shape
    if shape not in SHAPES:
        return _invalid(f"unknown shape {shape}")
    sh = SHAPES[shape]
    try:
        if shape in ("delta", "delta2"):
            obj = sh.parse_obj(args.object if args.object.startswith("[") else f"[{args.object}]")
        elif shape == "gamma":
            obj = int(args.object)
        else:
            obj = sh.parse_obj(args.object)
    except ValueError:
        return _invalid(f"cannot parse object {args.object}")
    try:
        table = universal_glenn_table(shape, obj, zero_based=(shape == "gamma" and obj == 4))
    except ValueError as exc:
        return _invalid(str(exc))
    print(table.render())
    print(f"# {glenn_table_markers_note()}")
    return OK


def cmd_gamma_factor(args) -> int:
    try:
        f = GammaMap.parse(args.map, target=args.target)
    except (AssertionError, ValueError) as exc:
        return _invalid(f"cannot parse Gamma map {args.map}: {exc}")
    fw = four_way_factor(f)
    word = generator_word(f)
    lines = [
        f"map   : {f} : {f.source} -> {f.target}",
        f"K     : {fw.K} : {fw.K.source} -> {fw.K.target}   (strictly coincreasing)",
        f"W     : {fw.W} : permutation {fw.W.permutation()}",
        f"M     : {fw.M} : {fw.M.source} -> {fw.M.target}   (coincreasing cofull monic)",
        f"S     : {fw.S} : {fw.S.source} -> {fw.S.target}   (coincreasing cofull epic)",
        "word  : " + (" ".join(f"{letter}{index}" for letter, index in word) or "(empty)"),
        f"name  : {coface_display_name(f)}",
    ]
    doc = {
        "map": str(f),
        "K": str(fw.K),
        "W": str(fw.W),
        "M": str(fw.M),
        "S": str(fw.S),
        "word": [[letter, index] for letter, index in word],
    }
    _emit(doc, args, "\n".join(lines))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nervelab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_chi=False):
        p.add_argument("--out", default=None, help="write the report/output here")
        p.add_argument("--format", choices=("json", "text"), default="text")
        if with_chi:
            p.add_argument("--chi", choices=("canonical", "first"), default="first")

    p = sub.add_parser("validate", help="validate a presheaf file")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", help="check the axioms of a structure file")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("nerve", help="build a nerve from a structure file")
    p.add_argument("--kind", choices=("duskin", "gamma", "vdc", "theta2"), required=True)
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_nerve, format="json")

    p = sub.add_parser("check-kan", help="enumerate inner horns and certify")
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--reduced", type=int, default=None)
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_check_kan)

    p = sub.add_parser("reconstruct", help="rebuild the algebraic structure")
    p.add_argument("--kind", choices=("bic", "sym", "vdc", "fbic"), required=True)
    p.add_argument("input")
    common(p, with_chi=True)
    p.set_defaults(func=cmd_reconstruct, format="json")

    p = sub.add_parser("roundtrip", help="verify u/U on a structure or presheaf file")
    p.add_argument("input")
    common(p, with_chi=True)
    p.set_defaults(func=cmd_roundtrip, format="json")

    p = sub.add_parser("glenn-table", help="print a universal Glenn table")
    p.add_argument("shape", choices=("delta", "delta2", "gamma", "theta2"))
    p.add_argument("object", help="e.g. 3 (delta/gamma), [2,1] (delta2), <1,1> (theta2)")
    p.set_defaults(func=cmd_glenn_table)

    p = sub.add_parser("gamma-factor", help="four-way factorization of a Gamma map")
    p.add_argument("map", help='bracket notation, e.g. "[13,-,2]"')
    p.add_argument("--target", type=int, default=None, help="target rank (default: max element)")
    common(p)
    p.set_defaults(func=cmd_gamma_factor)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else INVALID


if __name__ == "__main__":
    sys.exit(main())
