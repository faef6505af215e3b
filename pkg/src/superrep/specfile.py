"""JSON input files: algebras by sparse bracket triples, modules by action
matrices, parameterized module templates with sample values."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

import jsonschema

from .algebra import (CliffordSignature, LieSuperAlgebra, RelationError, ShiftedContext, check_jacobi,
                      trivial_algebra)
from .exactnum import ExactMatrix, FieldTag, format_scalar, parse_scalar, scalar_sqrt
from .superspace import EVEN, ODD, koszul_sign
from .supermodule import SuperModule, trivial_module, validate_module


class SpecError(ValueError):
    """Input rejected; `where` locates the offending part of the file."""

    def __init__(self, message: str, where: str = "", kind: str = "input"):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where
        self.kind = kind  # syntax | schema | relation | input


@dataclass
class SpecFile:
    field: FieldTag
    algebra: LieSuperAlgebra
    modules: list = dc_field(default_factory=list)
    sample: dict = dc_field(default_factory=dict)
    signature: CliffordSignature = CliffordSignature()
    name: str = ""

    @property
    def context(self) -> ShiftedContext:
        return ShiftedContext(self.algebra, self.signature)

    def graded_modules(self):
        return [m for m in self.modules if m.graded]

    def ungraded_modules(self):
        return [m for m in self.modules if not m.graded]


def _schema():
    return json.loads(resources.files("superrep.data").joinpath("spec.schema.json").read_text())


def bundled_path(name: str) -> Path:
    return Path(str(resources.files("superrep.data").joinpath(name)))


def _path_text(path) -> str:
    out = ""
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "<root>"


def _scalar(text, fld: FieldTag, where: str):
    try:
        return parse_scalar(str(text), fld)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(str(exc), where) from None


_PARAM_EXPR = re.compile(r"^(?P<neg>-)?(?:(?P<sqrt>sqrt\()?(?P<name>[A-Za-z_]\w*)\)?(?P<sq>\^2)?)$")


def _template_scalar(text, fld: FieldTag, param: str, value, where: str):
    s = str(text).replace(" ", "")
    m = _PARAM_EXPR.match(s)
    if m and m.group("name") == param:
        v = value
        if m.group("sqrt"):
            v = scalar_sqrt(value, fld)
            if v is None:
                raise SpecError(f"sample {format_scalar(value)} has no square root over {fld.value}", where)
        if m.group("sq"):
            v = v * v
        return -v if m.group("neg") else v
    return _scalar(s, fld, where)


def _matrix(rows, n: int, fld: FieldTag, where: str, conv=None) -> ExactMatrix:
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SpecError(f"expected a {n}x{n} matrix", where)
    conv = conv or (lambda t, w: _scalar(t, fld, w))
    return ExactMatrix([[conv(x, f"{where}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)],
                       fld)


def _parse_algebra(doc: dict, fld: FieldTag) -> LieSuperAlgebra:
    block = doc.get("algebra")
    if not block or not block.get("generators"):
        return trivial_algebra(fld)
    names, parities = [], []
    for k, g in enumerate(block["generators"]):
        if g["name"] in names:
            raise SpecError(f"duplicate generator {g['name']!r}", f"algebra.generators[{k}]")
        names.append(g["name"])
        parities.append(ODD if g["parity"] in ("odd", 1) else EVEN)
    index = {n: k for k, n in enumerate(names)}
    given: dict = {}
    for k, triple in enumerate(block.get("brackets", [])):
        where = f"algebra.brackets[{k}]"
        a, b, c, coef = triple
        for name in (a, b, c):
            if name not in index:
                raise SpecError(f"unknown generator {name!r}", where)
        key = (index[a], index[b])
        row = given.setdefault(key, {})
        row[index[c]] = row.get(index[c], fld.zero) + _scalar(coef, fld, where)
    brackets = {key: dict(row) for key, row in given.items()}
    for (i, j), row in given.items():
        if (j, i) not in given:
            s = -koszul_sign(parities[i], parities[j])
            brackets[(j, i)] = {k: s * c for k, c in row.items()}
    alg = LieSuperAlgebra(fld, tuple(names), tuple(parities), brackets, name=block.get("name", "custom"))
    try:
        check_jacobi(alg)
    except RelationError as exc:
        raise SpecError(str(exc), "algebra", "relation") from None
    return alg


def _parse_module(entry: dict, alg: LieSuperAlgebra, fld: FieldTag, where: str, conv=None, name=None):
    d0, d1 = entry["dims"]
    graded = entry.get("graded", True)
    if not graded and d1:
        raise SpecError("ungraded modules give dims [n, 0]", where)
    sig = CliffordSignature(*entry.get("signature", (0, 0)))
    n = d0 + d1
    acts = entry.get("actions", {})
    for key in acts:
        if key not in alg.names:
            raise SpecError(f"action for unknown generator {key!r}", f"{where}.actions")
    g = [(_matrix(acts[nm], n, fld, f"{where}.actions.{nm}", conv) if nm in acts else ExactMatrix.zeros(n, n, fld))
         for nm in alg.names]
    cl_block = entry.get("clifford", {})
    for key in cl_block:
        if key not in sig.names():
            raise SpecError(f"Clifford generator {key!r} not in {sig}", f"{where}.clifford")
    cl = []
    for nm in sig.names():
        if nm not in cl_block:
            raise SpecError(f"missing action of Clifford generator {nm}", f"{where}.clifford")
        cl.append(_matrix(cl_block[nm], n, fld, f"{where}.clifford.{nm}", conv))
    m = SuperModule(ShiftedContext(alg, sig), d0, d1, g, cl, graded, name or entry["name"])
    try:
        validate_module(m)
    except (RelationError, ValueError) as exc:
        raise SpecError(f"module {m.name!r} invalid: {exc}", where, "relation") from None
    return m


def load_spec(doc: dict, source: str = "") -> SpecFile:
    """Build a SpecFile from an already-decoded JSON document."""
    validator = jsonschema.Draft202012Validator(_schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise SpecError(e.message, _path_text(e.absolute_path), "schema")
    fld = FieldTag.parse(doc.get("field", "C"))
    alg = _parse_algebra(doc, fld)
    sample = {k: [_scalar(v, fld, f"sample.{k}[{i}]") for i, v in enumerate(vals)]
              for k, vals in doc.get("sample", {}).items()}
    modules = [_parse_module(e, alg, fld, f"modules[{k}]") for k, e in enumerate(doc.get("modules", []))]
    for k, t in enumerate(doc.get("templates", [])):
        param = t["parameter"]
        if param not in sample:
            raise SpecError(f"no sample values for parameter {param!r}", f"templates[{k}]")
        for v in sample[param]:
            def conv(text, where, _p=param, _v=v):
                return _template_scalar(text, fld, _p, _v, where)
            label = t["name"].replace("{" + param + "}", format_scalar(v))
            modules.append(_parse_module(t, alg, fld, f"templates[{k}]<{param}={format_scalar(v)}>", conv, label))
    sigs = {m.signature for m in modules}
    sig = sigs.pop() if len(sigs) == 1 else CliffordSignature()
    return SpecFile(fld, alg, modules, sample, sig, name=source or alg.name)


def parse_spec(path) -> SpecFile:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"syntax error: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}", "syntax") from None
    if doc == {} or doc is None:
        doc = {}
    return load_spec(doc, str(path))


def _matrix_text(m: ExactMatrix):
    return [[format_scalar(x) for x in row] for row in m.data]


def serialize_spec(spec: SpecFile) -> dict:
    """JSON document that parses back to the same algebra and modules (templates expanded)."""
    alg = spec.algebra
    doc = {"field": spec.field.short}
    if alg.dim:
        doc["algebra"] = {
            "name": alg.name,
            "generators": [{"name": n, "parity": "odd" if p else "even"} for n, p in zip(alg.names, alg.parities)],
            "brackets": [[alg.names[i], alg.names[j], alg.names[k], format_scalar(c)]
                         for (i, j), row in sorted(alg.brackets.items()) for k, c in sorted(row.items())],
        }
    mods = []
    for m in spec.modules:
        entry = {"name": m.name, "graded": m.graded, "dims": [m.dim_even, m.dim_odd]}
        if m.signature.n:
            entry["signature"] = [m.signature.p, m.signature.q]
            entry["clifford"] = {nm: _matrix_text(c) for nm, c in zip(m.signature.names(), m.cliff_action)}
        if alg.dim:
            entry["actions"] = {nm: _matrix_text(a) for nm, a in zip(alg.names, m.g_action)}
        mods.append(entry)
    doc["modules"] = mods
    if spec.sample:
        doc["sample"] = {k: [format_scalar(v) for v in vals] for k, vals in spec.sample.items()}
    return doc


def builtin_spec(name: str, field: FieldTag = FieldTag.COMPLEX, samples=None) -> SpecFile:
    """trivial, q1 (from the bundled file) or clifford:p,q (its graded and ungraded irreducibles)."""
    from .classify import clifford_irreducibles
    key = name.strip().lower()
    if key == "trivial":
        alg = trivial_algebra(field)
        ctx = ShiftedContext(alg)
        return SpecFile(field, alg, [trivial_module(ctx), trivial_module(ctx, odd=True)], name="trivial")
    if key in ("q1", "q(1)"):
        doc = json.loads(bundled_path("q1.json").read_text())
        doc["field"] = field.short
        if samples is None and field is FieldTag.REAL:
            samples = ["4"]
        if samples is not None:
            lams = [parse_scalar(str(s), field) for s in samples]
            mus = [field.zero]
            for lam in lams:
                r = scalar_sqrt(lam, field)
                if r is None:
                    raise SpecError(f"sample {format_scalar(lam)} has no square root over {field.value}", "--samples")
                mus += [r, -r]
            doc["sample"] = {"lambda": [format_scalar(x) for x in lams], "mu": [format_scalar(x) for x in mus]}
        spec = load_spec(doc, "q1")
        spec.name = "q1"
        return spec
    m = re.fullmatch(r"clifford:(\d+),(\d+)", key)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        mods = clifford_irreducibles(p, q, field, True) + clifford_irreducibles(p, q, field, False)
        return SpecFile(field, trivial_algebra(field), mods, signature=CliffordSignature(p, q), name=key)
    raise SpecError(f"unknown builtin {name!r} (trivial, q1, clifford:p,q)", "--builtin")
