"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line; run this file
directly (python3 tests/test_acceptance.py) for the summary without pytest."""

from __future__ import annotations

import json
import random
from functools import lru_cache

import pytest

from superrep.classify import clifford_irreducibles, random_module
from superrep.cli import run_command
from superrep.exactnum import (FieldTag, IntegerMatrix, LatticeRelation, integer_kernel, invariant_factors,
                               lattice_compare, lattice_contains, minor_gcd_invariants)
from superrep.kring import (class_of, dag_matrix, delta_map, eigenlattice, forget_map, kgroups, point_provider,
                            q1_provider, r_minus, r_plus, restriction_cokernel, sr_group)
from superrep.specfile import bundled_path, builtin_spec
from superrep.supermodule import (conjugate, delta, diag_lift, direct_sum, forget_grading, isomorphic,
                                  parity_reverse, project_even, tensor_mixed, tensor_modules)

C, R = FieldTag.COMPLEX, FieldTag.REAL


def _golden(name):
    return json.loads(bundled_path(f"golden/{name}").read_text())


SUMMARY: dict[int, str] = {}  # shown by the terminal-summary hook in conftest.py


def _report(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    SUMMARY[number] = line
    print(line)
    return ok


def _table(field, degrees):
    rep = run_command(["abs-table", "--field", field, "--degrees", degrees, "--format", "json"])
    return [row["text"] for row in json.loads(rep.render())["rows"]]


# --- individual criteria ------------------------------------------------------


def criterion_1():
    got = _table("C", "0..5")
    want = ["Z", "0", "Z", "0", "Z", "0"]
    return got == want, f"complex point table {', '.join(got)}"


def criterion_2():
    got = _table("R", "0..8")
    want = ["Z", "Z₂", "Z₂", "0", "Z", "0", "0", "0", "Z"]
    return got == want, f"real point table {', '.join(got)}"


def criterion_3():
    rows = _golden("figure1_real_point.json")["rows"]
    prov = point_provider(R)
    bad = []
    for row in rows:
        n = row["n"]
        k = kgroups(prov, n)
        got = {"R+": k["R+"].text(), "SR": k["SR"].text(), "R_Z2": k["R_Z2"].text(),
               "coker_i_star_into_R+": restriction_cokernel(prov, n).text()}
        for key, val in got.items():
            if row[key] != val:
                bad.append(f"n={n} {key}: {val} != {row[key]}")
    doubled = [r["n"] for r in rows if restriction_cokernel(prov, r["n"]).torsion == (2,)]
    ok = not bad and doubled == [1, 2]
    return ok, f"i* is x2 into R+^-n exactly for n in {doubled}" + (f"; mismatches {bad}" if bad else "")


def criterion_4():
    rep = run_command(["exactseq", "--builtin", "trivial", "--field", "R", "--variant", "twentyfour",
                       "--format", "json"])
    seq = json.loads(rep.render())["sequences"][0]
    ok = seq["total_nodes"] == 24 and seq["exact_nodes"] == 24 and rep.exit_code == 0
    return ok, f"{seq['exact_nodes']}/{seq['total_nodes']} nodes exact"


def criterion_5():
    out = []
    ok = True
    for builtin in ("trivial", "q1"):
        rep = run_command(["exactseq", "--builtin", builtin, "--field", "C", "--variant", "six-complex",
                           "--samples", "4,-4", "--format", "json"])
        doc = json.loads(rep.render())
        seq = doc["sequences"][0]
        good = seq["exact_nodes"] == seq["total_nodes"] == 6 and doc["split"]["split"]
        ok &= good
        out.append(f"{builtin} {seq['exact_nodes']}/6 exact, split {doc['split']['split']}")
    return ok, "; ".join(out)


def _vector(reg, named: dict):
    names = reg.names()
    v = [0] * len(reg)
    for name, mult in named.items():
        v[names.index(name)] += mult
    return v


def criterion_6():
    gold = _golden("q1_complex.json")
    prov = q1_provider(tuple(int(s) for s in gold["samples"]))
    gr0, un0 = prov.graded(0), prov.ungraded(0)
    fails = []
    dm = delta_map(prov, 0).matrix
    for src, want in gold["delta"].items():
        if list(dm.columns()[un0.names().index(src)]) != _vector(gr0, want):
            fails.append(f"Delta[{src}]")
    fm = forget_map(prov, 0).matrix
    for src, want in gold["forget"].items():
        if list(fm.columns()[gr0.names().index(src)]) != _vector(un0, want):
            fails.append(f"f[{src}]")
    sr0 = sr_group(prov, 0)
    if sr0.text() != gold["SR0"]:
        fails.append(f"SR0 = {sr0.text()}")
    for cls in gold["SR0_zero_classes"]:
        if not sr0.contains_relation(_vector(gr0, cls)):
            fails.append(f"SR0 relation {cls}")
    if sr0.order_of(_vector(gr0, {"I": 1})) is not None:
        fails.append("[I] not of infinite order")
    sr1 = sr_group(prov, 1)
    for cls in gold["SR1_zero_classes"]:
        if not sr1.contains_relation(_vector(prov.graded(1), cls)):
            fails.append(f"SR1 relation {cls}")
    if sr1.order_of(_vector(prov.graded(1), {"L[4]+": 1})) is not None:
        fails.append("[Q+] vanishes")
    return not fails, "Delta, f, SR0 and SR1 golden values" + (f" failed: {fails}" if fails else " match")


# property suite -------------------------------------------------------------


@lru_cache(maxsize=None)
def _contexts():
    """(label, graded irreducibles, ungraded irreducibles) over q(1) and Clifford contexts."""
    prov = q1_provider()
    out = [(f"q1 degree {n}", tuple(prov.graded(n).modules), tuple(prov.ungraded(n).modules)) for n in (0, 1)]
    for fld in (C, R):
        spec = builtin_spec("trivial", fld)
        ungraded = tuple(clifford_irreducibles(0, 0, fld, False))
        out.append((f"builtin trivial over {fld.value}", tuple(spec.graded_modules()), ungraded))
    for fld in (C, R):
        for p, q in ((0, 0), (1, 0), (0, 1), (1, 1), (2, 0)):
            out.append((f"Cl({p},{q}) over {fld.value}", tuple(clifford_irreducibles(p, q, fld, True)),
                        tuple(clifford_irreducibles(p, q, fld, False))))
    return out


def _graded_props(v, fails, label):
    if not isomorphic(delta(forget_grading(v)), direct_sum(v, parity_reverse(v))):
        fails.append(f"{label}: Delta(f V) != V + V^Pi")
    if v.signature.p:
        if not isomorphic(diag_lift(project_even(v)), v):
            fails.append(f"{label}: lift(p0 V) != V")
        if not isomorphic(project_even(parity_reverse(v)), conjugate(project_even(v))):
            fails.append(f"{label}: p0(V^Pi) != (p0 V)^dag")


def _ungraded_props(u, fails, label):
    if not isomorphic(forget_grading(delta(u)), direct_sum(u, conjugate(u))):
        fails.append(f"{label}: f(Delta U) != U + U^dag")
    back = project_even(diag_lift(u))
    if back.g_action != u.g_action or back.cliff_action != u.cliff_action:
        fails.append(f"{label}: p0(lift U) != U")


def _pair_props(v, w, u, fails, label):
    if not isomorphic(parity_reverse(tensor_modules(v, w)), tensor_modules(parity_reverse(v), w)):
        fails.append(f"{label}: (V(x)W)^Pi != V^Pi(x)W")
    if not isomorphic(delta(tensor_mixed(v, u)), tensor_modules(v, delta(u))):
        fails.append(f"{label}: Delta(V(x)U) != V(x)Delta U")


def _lattice_props(fails):
    checks = [(q1_provider(), (0, 1)), (point_provider(C), (0, 1, 2, 3)), (point_provider(R), range(8))]
    for prov, degrees in checks:
        for n in degrees:
            tag = f"{prov.algebra.name} {prov.field.value} degree {n}"
            fm, dm = forget_map(prov, n).matrix, delta_map(prov, n).matrix
            if lattice_compare(integer_kernel(fm), r_minus(prov, n)) is not LatticeRelation.EQUAL:
                fails.append(f"{tag}: Ker f != R-")
            if lattice_compare(integer_kernel(dm), eigenlattice(dag_matrix(prov, n), -1)) is not LatticeRelation.EQUAL:
                fails.append(f"{tag}: Ker Delta != R_ac")
            if not lattice_contains(r_plus(prov, n), dm):
                fails.append(f"{tag}: Im Delta not in R+")


def criterion_7(count=50, seed=7):
    fails = []
    rng = random.Random(seed)
    ctxs = _contexts()
    builtins = 0
    for label, gm, um in ctxs:
        for v in gm:
            _graded_props(v, fails, label)
            builtins += 1
        for u in um:
            _ungraded_props(u, fails, label)
            builtins += 1
    for k in range(count):
        label, gm, um = ctxs[k % len(ctxs)]
        v = random_module(gm[0].context, gm, rng, 6)
        u = random_module(um[0].context, um, rng, 6, graded=False)
        _graded_props(v, fails, f"{label} random #{k}")
        _ungraded_props(u, fails, f"{label} random #{k}")
        # keep the tensor products small: the left factor of dim <= 4, U of dim <= 3
        w = random_module(gm[0].context, gm, rng, max(3, min(m.dim for m in gm)))
        vv = v if v.dim <= 4 else min(gm, key=lambda m: m.dim)
        uu = u if u.dim <= 3 else min(um, key=lambda m: m.dim)
        _pair_props(vv, w, uu, fails, f"{label} random #{k}")
    _lattice_props(fails)
    detail = f"{builtins} builtin irreducibles, {count} random modules, lattice identities"
    return not fails, detail + (f"; failures: {fails[:5]}" if fails else ", zero failures")


def criterion_8():
    prov = point_provider(R)
    v = clifford_irreducibles(1, 0, R, True)[0]
    cls = class_of(v, prov.graded(1))
    order = sr_group(prov, 1).order_of(cls.padded())
    return order == 2, f"class of the graded Cl(1,0) irreducible in SR^-1 has order {order}"


def _h_eigen(m):
    return 0 if m.name.startswith("I") else (4 if "L[4]" in m.name else -4)


def criterion_9():
    """q(1) registries only cover H-eigenvalues {0, 4, -4}; pairs whose product leaves
    that range are skipped.  Real point: S1 (x) S1 is a nonzero class of order 2."""
    prov = q1_provider()
    fails = []
    checked = 0
    for dv, dw in ((1, 1), (0, 1), (1, 0), (0, 0)):
        target = dv + dw
        reg = prov.graded(target)
        size = len(reg)
        group = sr_group(prov, target)
        sign = -1 if dv % 2 and dw % 2 else 1
        for a in prov.graded(dv).modules:
            for b in prov.graded(dw).modules:
                if abs(_h_eigen(a) + _h_eigen(b)) > 4:
                    continue
                x = class_of(tensor_modules(a, b), reg).padded()
                y = class_of(tensor_modules(b, a), reg).padded()
                if len(reg) != size:
                    fails.append(f"registry at degree {target} incomplete for {a.name}, {b.name}")
                    break
                checked += 1
                if not group.contains_relation([p - sign * q for p, q in zip(x, y)]):
                    fails.append(f"[{a.name}][{b.name}] != {sign:+d}[{b.name}][{a.name}]")
    rp = point_provider(R)
    s1 = rp.graded(1).modules[0]
    prod = class_of(tensor_modules(s1, s1), rp.graded(2)).padded()
    order = sr_group(rp, 2).order_of(prod)
    if order != 2:
        fails.append(f"real S1(x)S1 has order {order} in SR^-2")
    return not fails, f"{checked} q(1) pairs; real S1(x)S1 order {order}" + (f"; {fails[:4]}" if fails else "")


def criterion_10(trials=200, seed=10):
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = IntegerMatrix([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)], r, c)
        if invariant_factors(m) != minor_gcd_invariants(m):
            bad += 1
    return bad == 0, f"{trials} random matrices, {bad} mismatches against the minor-gcd oracle"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number):
    try:
        ok, detail = CRITERIA[number - 1]()
    except Exception as exc:  # still leave a FAIL line in the summary
        _report(number, False, f"raised {type(exc).__name__}: {exc}")
        raise
    assert _report(number, ok, detail), detail


if __name__ == "__main__":
    results = [_report(k, *fn()) for k, fn in enumerate(CRITERIA, start=1)]
    print(f"{sum(results)}/{len(results)} criteria pass")
