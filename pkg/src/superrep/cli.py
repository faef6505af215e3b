"""Command-line driver: validate, classify, kgroups, exactseq, abs-table."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

from .algebra import RelationError
from .classify import DEFAULT_SEED, NotRealIrreducible, classify_irreducible, composition_factors
from .exactnum import FieldTag, format_scalar
from .kring import (ClassificationError, RegistryError, RegistryProvider, abs_table, build_sequence,
                    build_six_real, check_exactness, cokernel, kgroups, r_plus, restriction_cokernel,
                    wrap_restrict_map)
from .specfile import SpecError, SpecFile, builtin_spec, parse_spec
from .supermodule import forget_grading

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class Report:
    command: str
    lines: list = dc_field(default_factory=list)
    data: dict = dc_field(default_factory=dict)
    exit_code: int = EXIT_OK
    format: str = "text"

    def render(self) -> str:
        return self.json() if self.format == "json" else self.text()

    def text(self) -> str:
        return "\n".join(self.lines)

    def json(self) -> str:
        doc = dict(self.data)
        doc["command"] = self.command
        doc["exit_code"] = self.exit_code
        return json.dumps(doc, indent=2, ensure_ascii=False)


class InputError(ValueError):
    pass


def parse_degrees(text: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise InputError(f"bad degree range {text!r} (use a..b)") from None
    if lo < 0 or hi < lo:
        raise InputError(f"bad degree range {text!r}")
    return list(range(lo, hi + 1))


def _load(args) -> SpecFile:
    field = FieldTag.parse(args.field) if args.field else None
    samples = args.samples.split(",") if getattr(args, "samples", None) else None
    if args.spec and args.builtin:
        raise InputError("give either a spec file or --builtin, not both")
    if args.spec:
        spec = parse_spec(args.spec)
        if field is not None and field is not spec.field:
            raise InputError(f"--field {field.short} disagrees with the file's field {spec.field.short}")
        return spec
    if not args.builtin:
        raise InputError("a spec file or --builtin is required")
    return builtin_spec(args.builtin, field or FieldTag.COMPLEX, samples)


def provider_for(spec: SpecFile, seed: int = DEFAULT_SEED) -> RegistryProvider:
    """Registries seeded with the composition factors of the file's modules."""
    if spec.algebra.dim == 0:
        return RegistryProvider(spec.algebra, spec.signature, seed=seed)
    graded, ungraded = [], []
    for m in spec.modules:
        if m.signature != spec.signature:
            continue
        rep = composition_factors(m, seed)
        (graded if m.graded else ungraded).extend(rep.factors)
    if not ungraded:
        for m in graded:
            ungraded.extend(composition_factors(forget_grading(m), seed).factors)
    return RegistryProvider(spec.algebra, spec.signature, graded, ungraded, seed)


# --- subcommands -----------------------------------------------------------------


def cmd_validate(args) -> Report:
    rep = Report("validate")
    try:
        spec = _load(args)
    except SpecError as exc:
        if exc.kind != "relation":
            raise
        rep.lines.append(f"FAIL {exc}")
        rep.data = {"valid": False, "error": str(exc), "where": exc.where}
        rep.exit_code = EXIT_FAIL
        return rep
    alg = spec.algebra
    rep.lines.append(f"algebra {alg.name} over {spec.field.value}: {alg.dim} generators, Jacobi identity holds")
    mods = []
    for m in spec.modules:
        kind = f"({m.dim_even}|{m.dim_odd})" if m.graded else f"ungraded dim {m.dim}"
        rep.lines.append(f"  module {m.name}: {kind} over {m.signature}: relations hold")
        mods.append({"name": m.name, "graded": m.graded, "dims": [m.dim_even, m.dim_odd],
                     "signature": [m.signature.p, m.signature.q], "valid": True})
    rep.data = {"valid": True, "field": spec.field.value, "algebra": alg.name, "modules": mods}
    return rep


def _tag_dict(tag):
    return {"type": tag.type, "real_division": tag.real_division, "self_dual": tag.self_dual,
            "involution": tag.involution}


def cmd_classify(args) -> Report:
    spec = _load(args)
    rep = Report("classify")
    out = []
    for m in spec.modules:
        report = composition_factors(m, args.seed)
        entry = {"name": m.name, "dims": [m.dim_even, m.dim_odd], "graded": m.graded, "factors": []}
        rep.lines.append(f"{m.name}: {'graded' if m.graded else 'ungraded'} dim {m.dim}, "
                         f"{sum(report.multiplicities)} composition factor(s)")
        for f, mult, cert in zip(report.factors, report.multiplicities, report.certified):
            try:
                tag = classify_irreducible(f)
            except NotRealIrreducible as exc:
                rep.lines.append(f"  factor dim {f.dim} x{mult}: {exc}")
                entry["factors"].append({"dims": [f.dim_even, f.dim_odd], "multiplicity": mult, "error": str(exc)})
                rep.exit_code = EXIT_FAIL
                continue
            status = "certified" if cert else "presumed irreducible (budget exhausted)"
            rep.lines.append(f"  factor ({f.dim_even}|{f.dim_odd}) x{mult}: type {tag.type}, division "
                             f"{tag.real_division}, self-dual {'yes' if tag.self_dual else 'no'}, "
                             f"involution {tag.involution}, {status}")
            entry["factors"].append({"dims": [f.dim_even, f.dim_odd], "multiplicity": mult, "certified": cert,
                                     "tag": _tag_dict(tag)})
        out.append(entry)
    rep.data = {"field": spec.field.value, "modules": out}
    return rep


def cmd_kgroups(args) -> Report:
    spec = _load(args)
    prov = provider_for(spec, args.seed)
    degrees = parse_degrees(args.degrees or "0..1")
    rep = Report("kgroups")
    rows = []
    rep.lines.append(f"{spec.name} over {spec.field.value}")
    rep.lines.append(f"{'n':>3}  {'R_Z2':<12} {'R+':<12} {'R-':<12} {'SR':<12} generators")
    for n in degrees:
        k = kgroups(prov, n)
        groups = {key: k[key] for key in ("R_Z2", "R+", "R-", "SR")}
        rep.lines.append(f"{n:>3}  " + " ".join(f"{g.text():<12}" for g in groups.values())
                         + " " + ", ".join(k["generators"]))
        rows.append({"degree": n, "generators": k["generators"],
                     **{key: g.as_dict() for key, g in groups.items()}})
    rep.data = {"field": spec.field.value, "algebra": spec.name, "degrees": rows}
    return rep


def _sequence_block(seq, rep: Report) -> dict:
    verdicts = check_exactness(seq)
    nodes = []
    for node, v, arrow in zip(seq.nodes, verdicts, seq.arrows):
        if v.exact:
            state = "exact"
        elif not v.well_defined:
            state = "NOT exact (outgoing arrow ignores the relations)"
        else:
            state = f"NOT exact ({v.relation.value}, composite zero: {v.composite_zero})"
        rep.lines.append(f"  {node.name:<12} {node.group.text():<10} {state}   --{arrow.name}-->")
        nodes.append({"node": node.name, "group": node.group.as_dict(), "arrow_out": arrow.name, **v.as_dict()})
    exact = sum(v.exact for v in verdicts)
    rep.lines.append(f"  {exact}/{len(verdicts)} nodes exact")
    if exact < len(verdicts):
        rep.exit_code = EXIT_FAIL
    return {"variant": seq.variant, "nodes": nodes, "exact_nodes": exact, "total_nodes": len(verdicts)}


def cmd_exactseq(args) -> Report:
    spec = _load(args)
    prov = provider_for(spec, args.seed)
    variant = (args.variant or ("six-complex" if spec.field is FieldTag.COMPLEX else "twentyfour")).replace("_", "-")
    rep = Report("exactseq")
    rep.lines.append(f"{spec.name} over {spec.field.value}, variant {variant}")
    data = {"field": spec.field.value, "algebra": spec.name, "variant": variant, "sequences": []}
    if variant == "six-real":
        if spec.field is not FieldTag.REAL:
            raise InputError("six-real needs --field R")
        for n in parse_degrees(args.degrees or "0..7"):
            rep.lines.append(f"six-term sequence at n = {n}")
            data["sequences"].append(_sequence_block(build_six_real(prov, n), rep))
    elif variant in ("six-complex", "twentyfour"):
        seq = build_sequence(prov, variant)
        data["sequences"].append(_sequence_block(seq, rep))
        if variant == "six-complex":
            c0 = restriction_cokernel(prov, 0)
            c1 = cokernel("coker i*^-1", wrap_restrict_map(prov).matrix, r_plus(prov, 1))
            split = not c0.free_rank and not c0.torsion and not c1.free_rank and not c1.torsion
            rep.lines.append(f"  i* onto R+^0: {c0.text() == '0'}, onto R+^-1: {c1.text() == '0'}; "
                             f"splits into short exact sequences: {split}")
            data["split"] = {"coker_R+0": c0.as_dict(), "coker_R+1": c1.as_dict(), "split": split}
            if not split:
                rep.exit_code = EXIT_FAIL
        else:
            arrows = []
            for n in range(8):
                c = restriction_cokernel(prov, n) if n < 7 else cokernel(
                    "coker i*^-7", wrap_restrict_map(prov).matrix, r_plus(prov, 7))
                arrows.append({"target_degree": n, "cokernel": c.as_dict()})
            rep.lines.append("  coker(i*: R_Z2^-(n+1) -> R+^-n) for n = 0..7: "
                             + ", ".join(a["cokernel"]["text"] for a in arrows))
            data["restriction_cokernels"] = arrows
    else:
        raise InputError(f"unknown variant {variant!r}")
    rep.data = data
    return rep


def cmd_abs_table(args) -> Report:
    field = FieldTag.parse(args.field or "C")
    degrees = parse_degrees(args.degrees or "0..7")
    rep = Report("abs-table")
    rows = []
    rep.lines.append(f"SR^-n of a point over {field.value}")
    for n, g in zip(degrees, abs_table(field, degrees)):
        rep.lines.append(f"{n:>3}  {g.text()}")
        rows.append({"n": n, **g.as_dict()})
    rep.data = {"field": field.value, "rows": rows}
    return rep


COMMANDS = {"validate": cmd_validate, "classify": cmd_classify, "kgroups": cmd_kgroups,
            "exactseq": cmd_exactseq, "abs-table": cmd_abs_table}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superrep", description="Representation groups of Lie superalgebras "
                                "with Clifford degree shifts, over exact rationals.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        if name != "abs-table":
            s.add_argument("spec", nargs="?", help="JSON input file")
            s.add_argument("--builtin", help="trivial | q1 | clifford:p,q")
            s.add_argument("--samples", help="comma-separated H-eigenvalue samples for q1 (default 4,-4)")
        s.add_argument("--field", choices=["R", "C"])
        s.add_argument("--degrees", help="a..b (inclusive)")
        if name == "exactseq":
            s.add_argument("--variant", choices=["six-complex", "six-real", "twentyfour"])
        s.add_argument("--format", choices=["text", "json"], default="text")
        s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return p


def run_command(argv) -> Report:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        rep = Report("usage", exit_code=EXIT_INPUT if exc.code else EXIT_OK)
        return rep
    try:
        rep = COMMANDS[args.command](args)
    except (SpecError, InputError, RegistryError, FileNotFoundError) as exc:
        rep = Report(args.command, [f"error: {exc}"], {"error": str(exc)}, EXIT_INPUT)
    except (ClassificationError, RelationError, NotRealIrreducible) as exc:
        rep = Report(args.command, [f"failure: {exc}"], {"error": str(exc)}, EXIT_FAIL)
    rep.format = args.format
    return rep


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    rep = run_command(argv)
    if rep.command != "usage":
        print(rep.render())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
