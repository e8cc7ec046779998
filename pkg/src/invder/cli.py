"""Command-line front end.

Exit status: 0 when every check passes, 1 on a mathematical failure, 2 on
malformed input.
"""
from __future__ import annotations

import argparse
import sys

from . import io
from . import qlinalg as ql
from .cohomology import d1, h1, h2, is_coboundary
from .deformation import apply_order1_equivalence, check_deformation, infinitesimal
from .errors import CheckFailed, InputError, InvDerError, SingularMatrixError
from .extension import (CentralExtension, build_extension, canonical_section,
                        check_central_extension, check_extension_cocycle, extension_isomorphism,
                        extract_cocycle, same_class)
from .lie import (InvDerStructure, check_cyclic_identity, delta_derivation_space,
                  derivation_space, inverse_is_derivation, is_invder, lie_check,
                  twist)
from .representation import (adjoint_rep, check_gl_derivation_criteria, check_lie_action,
                             check_representation, semidirect, trivial_rep)

COMMANDS = ("validate", "derivations", "delta-derivations", "twist", "check-rep", "semidirect",
            "cohomology", "deform-check", "deform-equiv", "ext-check", "ext-build",
            "ext-extract", "ext-classify")

FLAT_ORDER = ("f block: pairs i<j lexicographic, then target coordinate; "
              "g block: basis index, then target coordinate; h block: same as g")


class Result:
    def __init__(self, payload: dict, ok: bool = True, text: str | None = None):
        self.payload, self.ok, self.text = payload, ok, text


def _rep(S: InvDerStructure, choice: str, vdim: int):
    if choice == "adjoint":
        return adjoint_rep(S)
    if choice == "trivial":
        return trivial_rep(S, vdim)
    if choice.startswith("file:"):
        path = choice[len("file:"):]
        return io.parse_representation(io.load_json(path), S, path)
    raise InputError(f"unknown representation {choice!r}; use adjoint, trivial or file:<path>")


def _checks_payload(command: str, checks) -> Result:
    ok = all(checks)
    return Result({"command": command, "ok": ok, "checks": [c.to_json() for c in checks]}, ok,
                  "\n".join(str(c) for c in checks))


def cmd_validate(args) -> Result:
    L, delta = io.parse_algebra_data(io.load_json(args.algebra), args.algebra)
    checks = [lie_check(L.c)]
    if delta is not None and checks[0]:
        checks.append(is_invder(L, delta))
        if ql.det(delta) != 0:
            checks.append(inverse_is_derivation(L, delta))
        if checks[1]:
            checks.append(check_cyclic_identity(InvDerStructure(L, delta)))
    return _checks_payload("validate", checks)


def _maps_result(command: str, maps) -> Result:
    payload = {"command": command, "ok": True, "dim": len(maps),
               "basis": [io.matrix_to_json(m) for m in maps]}
    return Result(payload, True, f"{command}: dimension {len(maps)}")


def cmd_derivations(args) -> Result:
    return _maps_result("derivations", derivation_space(io.parse_lie(args.algebra)))


def cmd_delta_derivations(args) -> Result:
    return _maps_result("delta-derivations", delta_derivation_space(io.parse_algebra(args.algebra)))


def cmd_twist(args) -> Result:
    S = io.parse_algebra(args.algebra)
    T = InvDerStructure.checked(twist(S), S.delta)
    return Result(io.algebra_to_json(T))


def cmd_check_rep(args) -> Result:
    S = io.parse_algebra(args.algebra)
    r = _rep(S, args.rep, args.vdim)
    rep = check_representation(r)
    res = _checks_payload("check-rep", [rep])
    if rep:
        crit = check_gl_derivation_criteria(r)
        res.payload["gl_criteria"] = {"derivation": crit.derivation,
                                      "inv_derivation": crit.inv_derivation}
        res.payload["lie_action"] = check_lie_action(r).ok
    return res


def cmd_semidirect(args) -> Result:
    S = io.parse_algebra(args.algebra)
    return Result(io.algebra_to_json(semidirect(_rep(S, args.rep, args.vdim))))


def cmd_cohomology(args) -> Result:
    S = io.parse_algebra(args.algebra)
    r = _rep(S, args.rep, args.vdim)
    rep = check_representation(r)
    if not rep:
        raise CheckFailed(f"not a representation: {rep.first}", rep)
    if args.degree == 1:
        dim, basis = h1(r)
        payload = {"command": "cohomology", "ok": True, "degree": 1, "h1_dim": dim,
                   "h1_basis": [io.matrix_to_json(b) for b in basis]}
        return Result(payload, True, f"dim H^1 = {dim}")
    H = h2(r)
    payload = {"command": "cohomology", "ok": True, "degree": 2,
               "z2_dim": H.z2_dim, "b2_dim": H.b2_dim, "h2_dim": H.dim,
               "coordinate_order": FLAT_ORDER,
               "h2_basis": [io.vector_to_json(w.flatten()) for w in H.representatives]}
    return Result(payload, True, f"dim Z^2 = {H.z2_dim}, dim B^2 = {H.b2_dim}, dim H^2 = {H.dim}")


def cmd_deform_check(args) -> Result:
    S = io.parse_algebra(args.algebra)
    d = io.parse_deformation(io.load_json(args.deformation), S, args.deformation)
    top = d.order if args.order is None else args.order
    report = check_deformation(d, top)
    payload = {"command": "deform-check", "ok": report.ok, "order": top,
               "failures": [f.to_json() for f in report.failures]}
    if report.ok and top >= 1:
        payload["infinitesimal"] = io.vector_to_json(infinitesimal(d).flatten())
    return Result(payload, report.ok, str(report))


def cmd_deform_equiv(args) -> Result:
    S = io.parse_algebra(args.algebra)
    d = io.parse_deformation(io.load_json(args.deformation), S, args.deformation)
    psi = io.parse_matrix(io.load_json(args.psi), S.dim, S.dim, args.psi)
    out = apply_order1_equivalence(d, psi)
    diff = infinitesimal(out) - infinitesimal(d)
    coboundary = d1(adjoint_rep(S), psi)
    ok = diff.equals(coboundary) and is_coboundary(adjoint_rep(S), diff)
    payload = {"command": "deform-equiv", "ok": ok,
               "deformation": io.deformation_to_json(out),
               "difference": io.vector_to_json(diff.flatten())}
    return Result(payload, ok, "infinitesimal changed by d1(psi_1)" if ok else "mismatch")


def cmd_ext_check(args) -> Result:
    S = io.parse_algebra(args.algebra)
    e = io.parse_cocycle(io.load_json(args.cocycle), S, args.cocycle)
    return _checks_payload("ext-check", [check_extension_cocycle(S, e)])


def cmd_ext_build(args) -> Result:
    S = io.parse_algebra(args.algebra)
    e = io.parse_cocycle(io.load_json(args.cocycle), S, args.cocycle)
    return Result(io.algebra_to_json(build_extension(S, e).total))


def cmd_ext_extract(args) -> Result:
    base = io.parse_algebra(args.base)
    total = io.parse_algebra(args.algebra)
    m = total.dim - base.dim
    if m < 0:
        raise InputError("total algebra is smaller than the base")
    ext = CentralExtension(base, total, m)
    check = check_central_extension(ext)
    if not check:
        raise CheckFailed(f"not a central extension: {check.first}", check)
    if args.section:
        s = io.parse_matrix(io.load_json(args.section), total.dim, base.dim, args.section)
    else:
        s = canonical_section(ext)
    return Result(io.cocycle_to_json(extract_cocycle(ext, s)))


def cmd_ext_classify(args) -> Result:
    S = io.parse_algebra(args.algebra)
    if len(args.cocycle) != 2:
        raise InputError("ext-classify needs exactly two --cocycle files")
    e1, e2 = (io.parse_cocycle(io.load_json(p), S, p) for p in args.cocycle)
    for e in (e1, e2):
        rep = check_extension_cocycle(S, e)
        if not rep:
            raise CheckFailed(f"not a cocycle: {rep.first}", rep)
    phi = same_class(S, e1, e2)
    payload = {"command": "ext-classify", "ok": True, "same_class": phi is not None,
               "phi": None, "xi": None}
    if phi is not None:
        payload["phi"] = io.matrix_to_json(phi)
        payload["xi"] = io.matrix_to_json(extension_isomorphism(S, e1, e2, phi))
    return Result(payload, True, "same class" if phi is not None else "different classes")


HANDLERS = {
    "validate": cmd_validate, "derivations": cmd_derivations,
    "delta-derivations": cmd_delta_derivations, "twist": cmd_twist,
    "check-rep": cmd_check_rep, "semidirect": cmd_semidirect, "cohomology": cmd_cohomology,
    "deform-check": cmd_deform_check, "deform-equiv": cmd_deform_equiv,
    "ext-check": cmd_ext_check, "ext-build": cmd_ext_build, "ext-extract": cmd_ext_extract,
    "ext-classify": cmd_ext_classify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="invder", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("algebra")
        if name in ("check-rep", "semidirect", "cohomology"):
            sp.add_argument("--rep", default="adjoint")
            sp.add_argument("--vdim", type=int, default=1)
        if name == "cohomology":
            sp.add_argument("--degree", type=int, choices=(1, 2), default=2)
        if name in ("deform-check", "deform-equiv"):
            sp.add_argument("--deformation", required=True)
        if name == "deform-check":
            sp.add_argument("--order", type=int)
        if name == "deform-equiv":
            sp.add_argument("--psi", required=True)
        if name in ("ext-check", "ext-build"):
            sp.add_argument("--cocycle", required=True)
        if name == "ext-classify":
            sp.add_argument("--cocycle", action="append", default=[])
        if name == "ext-extract":
            sp.add_argument("--base", required=True)
            sp.add_argument("--section")
    return p


def run(argv) -> tuple[int, str]:
    """Execute one command; returns ``(exit_status, output)``."""
    fmt = "text" if "--format=text" in argv or _pair(argv, "--format") == "text" else "json"
    try:
        args = build_parser().parse_args(argv)
        res = HANDLERS[args.command](args)
    except InputError as exc:
        return 2, _error("input error", exc, fmt)
    except (CheckFailed, SingularMatrixError) as exc:
        return 1, _error("check failed", exc, fmt, getattr(exc, "check", None))
    except InvDerError as exc:
        return 1, _error("error", exc, fmt)
    if fmt == "text":
        text = res.text if res.text is not None else io.dumps(res.payload).rstrip()
        return (0 if res.ok else 1), text + "\n"
    return (0 if res.ok else 1), io.dumps(res.payload)


def _pair(argv, flag):
    argv = list(argv)
    return argv[argv.index(flag) + 1] if flag in argv[:-1] else None


def _error(kind, exc, fmt, check=None) -> str:
    if fmt == "text":
        return f"{kind}: {exc}\n" + (f"{check}\n" if check is not None else "")
    payload = {"ok": False, "error": kind, "message": str(exc)}
    if check is not None:
        payload["detail"] = check.to_json()
    return io.dumps(payload)


def main(argv=None) -> int:
    status, out = run(sys.argv[1:] if argv is None else argv)
    (sys.stdout if status == 0 else sys.stderr if status == 2 else sys.stdout).write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
