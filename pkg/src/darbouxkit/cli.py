"""``dbx``: command-line front end.

Problem files are line-oriented with ``[section]`` headers::

    [vector_field]
    a = 2 - 2*x^2
    b = 1 - 4*x*y
    [curves]
    f1 = x
    [exponential]
    e1.num = 2
    e1.den = x
    [points]
    p1 = (0, -1/2)
    [family]
    param = t
    order = 16
    a = 2*t^2 - 2*x^2
    b = 4 - 4*x*y - 2*t^3*y^2
    l1 = x - t
    l3 = x + t^3*y - t*sqrt(1 + 2*t)

``#`` starts a comment.  Exit codes: 0 success, 1 input error, 2 failed
verification, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .cofactorspace import (
    NotSingularError,
    independent_points_check,
    is_singular,
    rational_singular_points,
    restricted_cofactor_space,
)
from .darboux import CertificateKind, integrability_class, solve_darboux
from .deform import (
    IdenticalFamiliesError,
    ParamPoly,
    ParamVectorField,
    christopher_field,
    cofactor_expansion_check,
    curve_derivative,
    derivative_to_exponential,
    geometric_lower_bound_witness,
    parse_param_poly,
)
from .extactic import (
    budget,
    budget_for_degree,
    extactic_curve,
    extactic_ideal_generator,
    rational_first_integral_degree,
)
from .invariants import (
    NotInvariantError,
    RationalFirstIntegralRegime,
    algebraic_multiplicity,
    cofactor,
    exponential_cofactor,
    exponential_factor,
    invariant_curve,
    strong_multiplicity_certify,
)
from .parsing import ParseError, parse_polynomial
from .polyring import Point, Poly, as_rational, canonical_form, format_rational
from .series import DEFAULT_ORDER, InconclusiveTruncation
from .vfield import VectorField

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class InputError(ValueError):
    pass


class VerificationError(ValueError):
    pass


# -- problem files ----------------------------------------------------------------


@dataclass
class Problem:
    field: Optional[VectorField] = None
    curves: Dict[str, Poly] = dc_field(default_factory=dict)
    exponentials: Dict[str, Tuple[Poly, Poly]] = dc_field(default_factory=dict)
    points: Dict[str, Point] = dc_field(default_factory=dict)
    param: str = "t"
    order: int = DEFAULT_ORDER
    family_field: Optional[ParamVectorField] = None
    families: Dict[str, ParamPoly] = dc_field(default_factory=dict)

    def require_field(self) -> VectorField:
        if self.field is None:
            if self.family_field is not None:
                return self.family_field.at_zero()
            raise InputError("the problem file has no [vector_field] section")
        return self.field


_SECTIONS = ("vector_field", "curves", "exponential", "points", "family")


def _located(err: ParseError, where: str) -> InputError:
    return InputError(f"{where}: {err}")


def parse_point(text: str) -> Point:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise InputError(f"point {text!r} must look like (x0, y0)")
    parts = s[1:-1].split(",")
    if len(parts) != 2:
        raise InputError(f"point {text!r} must have two coordinates")
    coords = []
    for part in parts:
        p = parse_polynomial(part)
        if not p.is_constant():
            raise InputError(f"coordinate {part.strip()!r} is not a number")
        coords.append(p.constant_term())
    return (coords[0], coords[1])


def parse_problem(text: str, source: str = "<input>") -> Problem:
    sections: Dict[str, List[Tuple[int, str, str]]] = {s: [] for s in _SECTIONS}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if current not in sections:
                raise InputError(f"{source}:{lineno}: unknown section [{current}]")
            continue
        if current is None:
            raise InputError(f"{source}:{lineno}: entry outside of any section")
        if "=" not in line:
            raise InputError(f"{source}:{lineno}: expected 'name = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        sections[current].append((lineno, key, value))

    prob = Problem()

    def poly(lineno: int, value: str) -> Poly:
        try:
            return parse_polynomial(value)
        except ParseError as err:
            raise _located(err, f"{source}:{lineno}") from None

    vf = {k: (n, v) for n, k, v in sections["vector_field"]}
    if vf:
        if set(vf) != {"a", "b"}:
            raise InputError(f"{source}: [vector_field] needs exactly the entries a and b")
        a, b = poly(*vf["a"]), poly(*vf["b"])
        try:
            prob.field = VectorField(a, b)
        except ValueError as err:
            raise InputError(f"{source}: {err}") from None
    for n, k, v in sections["curves"]:
        prob.curves[k] = poly(n, v)
    exps: Dict[str, Dict[str, Poly]] = {}
    for n, k, v in sections["exponential"]:
        name, _, part = k.rpartition(".")
        if part not in ("num", "den") or not name:
            raise InputError(f"{source}:{n}: exponential entries are NAME.num or NAME.den")
        exps.setdefault(name, {})[part] = poly(n, v)
    for name, parts in exps.items():
        if set(parts) != {"num", "den"}:
            raise InputError(f"{source}: exponential {name} needs both num and den")
        prob.exponentials[name] = (parts["num"], parts["den"])
    for n, k, v in sections["points"]:
        try:
            prob.points[k] = parse_point(v)
        except ParseError as err:
            raise _located(err, f"{source}:{n}") from None
    fam = sections["family"]
    for n, k, v in fam:
        if k == "param":
            prob.param = v
        elif k == "order":
            try:
                prob.order = int(v)
            except ValueError:
                raise InputError(f"{source}:{n}: order must be an integer") from None
    fam_entries = {}
    for n, k, v in fam:
        if k in ("param", "order"):
            continue
        try:
            fam_entries[k] = parse_param_poly(v, prob.param, prob.order)
        except ParseError as err:
            raise _located(err, f"{source}:{n}") from None
        except (ValueError, ArithmeticError) as err:
            raise InputError(f"{source}:{n}: {err}") from None
    if "a" in fam_entries or "b" in fam_entries:
        if not ("a" in fam_entries and "b" in fam_entries):
            raise InputError(f"{source}: [family] needs both a and b")
        prob.family_field = ParamVectorField(fam_entries.pop("a"), fam_entries.pop("b"))
    prob.families = fam_entries
    if prob.field is not None:
        for name, p in prob.points.items():
            if not is_singular(prob.field, p):
                raise VerificationError(f"point {name} = {_point_text(p)} is not singular")
    return prob


def load_problem(path: str) -> Problem:
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror}") from None
    return parse_problem(text, path)


# -- reports ----------------------------------------------------------------------


@dataclass
class Report:
    op: str
    data: Dict[str, object]
    lines: List[str]
    warnings: List[str] = dc_field(default_factory=list)
    exit_code: int = EXIT_OK


def _q(c) -> str:
    return format_rational(as_rational(c))


def _point_text(p: Point) -> str:
    return f"({_q(p[0])}, {_q(p[1])})"


def emit(report: Report, fmt: str = "human") -> str:
    if fmt == "json":
        body = {"op": report.op, **report.data}
        if report.warnings:
            body["warnings"] = report.warnings
        return json.dumps(body, separators=(",", ":"))
    return "\n".join(report.lines + [f"warning: {w}" for w in report.warnings])


def _poly_arg(text: str, prob: Optional[Problem] = None) -> Poly:
    if prob is not None and text in prob.curves:
        return prob.curves[text]
    return parse_polynomial(text)


def _family_arg(text: str, prob: Problem) -> ParamPoly:
    if text in prob.families:
        return prob.families[text]
    return parse_param_poly(text, prob.param, prob.order)


def _require_family_field(prob: Problem) -> ParamVectorField:
    if prob.family_field is None:
        if prob.field is None:
            raise InputError("no [family] a/b entries and no [vector_field]")
        return ParamVectorField(ParamPoly.from_poly(prob.field.a, prob.order),
                                ParamPoly.from_poly(prob.field.b, prob.order))
    return prob.family_field


def _indices(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.replace(" ", "").split(",") if s)
    except ValueError:
        raise InputError(f"bad index list {text!r}") from None


# -- commands ---------------------------------------------------------------------


def cmd_extactic(args, prob: Problem) -> Report:
    e = extactic_curve(prob.require_field(), args.order)
    data = {"order": args.order, "value": str(e)}
    lines = [f"E_{args.order} = {e}"]
    if not e.is_zero():
        c, u = canonical_form(e)
        data.update(canonical=str(c), scale=_q(u))
        lines.append(f"canonical: {c}  (scale {_q(u)})")
    else:
        lines.append("E vanishes identically: rational first integral regime")
    return Report("extactic", data, lines)


def cmd_sigma_gen(args, prob: Problem) -> Report:
    ks = _indices(args.rows)
    s = extactic_ideal_generator(prob.require_field(), args.order, ks)
    return Report("sigma-gen", {"order": args.order, "rows": list(ks), "value": str(s)},
                  [f"sigma_{ks} = {s}"])


def _curves_from(args, prob: Problem) -> List[Tuple[str, Poly]]:
    if getattr(args, "curve", None):
        return [(args.curve, _poly_arg(args.curve, prob))]
    if not prob.curves:
        raise InputError("no curve given and the file has no [curves] section")
    return list(prob.curves.items())


def cmd_cofactor(args, prob: Problem) -> Report:
    field = prob.require_field()
    results, lines, failed = [], [], []
    for name, f in _curves_from(args, prob):
        lf = cofactor(field, f)
        if lf is None:
            failed.append(name)
            lines.append(f"{name}: {f} is NOT invariant")
            results.append({"curve": str(f), "invariant": False})
        else:
            lines.append(f"L({f}) = {lf}")
            results.append({"curve": str(f), "invariant": True, "cofactor": str(lf)})
    return Report("cofactor", {"results": results}, lines,
                  exit_code=EXIT_VERIFY if failed else EXIT_OK)


def _exps_from(args, prob: Problem) -> List[Tuple[str, Poly, Poly]]:
    if args.num is not None or args.den is not None:
        if args.num is None or args.den is None:
            raise InputError("--num and --den go together")
        return [("cli", _poly_arg(args.num, prob), _poly_arg(args.den, prob))]
    if not prob.exponentials:
        raise InputError("no exponential factor given and the file has no [exponential] section")
    return [(k, g, f) for k, (g, f) in prob.exponentials.items()]


def cmd_expfactor(args, prob: Problem) -> Report:
    field = prob.require_field()
    results, lines, bad = [], [], False
    for name, g, f in _exps_from(args, prob):
        le = exponential_cofactor(field, f, g)
        if le is None:
            bad = True
            lines.append(f"exp(({g})/({f})) is NOT an exponential factor")
            results.append({"num": str(g), "den": str(f), "exponential": False})
        else:
            lines.append(f"L(exp(({g})/({f}))) = {le}")
            results.append({"num": str(g), "den": str(f), "exponential": True, "cofactor": str(le)})
    return Report("expfactor", {"results": results}, lines,
                  exit_code=EXIT_VERIFY if bad else EXIT_OK)


def cmd_mult(args, prob: Problem) -> Report:
    field = prob.require_field()
    f = _poly_arg(args.curve, prob)
    if cofactor(field, f) is None:
        raise VerificationError(f"{f} is not invariant")
    if not args.strong:
        m = algebraic_multiplicity(field, f, args.order)
        return Report("mult", {"curve": str(f), "order": args.order, "value": m},
                      [f"mu_a,{args.order}({f}) = {m}"])
    gens = [_indices(g) for g in args.gens.split(";")] if args.gens else None
    rep = strong_multiplicity_certify(field, f, args.order, args.max_m, cap=args.cap, generators=gens)
    data: Dict[str, object] = {"curve": str(f), "order": args.order, "strong": True}
    lines = list(rep.lines)
    if rep.certificate is None:
        data["value"] = None
        data["log"] = rep.lines
        return Report("mult", data, lines, exit_code=EXIT_INCONCLUSIVE)
    cert = rep.certificate
    data.update(value=cert.m, unit=str(cert.unit),
                combiners=[{"rows": list(idx), "h": str(h)} for idx, h in cert.combiners],
                cap=cert.cap)
    lines.insert(0, f"mu_sa,{args.order}({f}) <= {cert.m}")
    return Report("mult", data, lines)


def _points(prob: Problem, field: VectorField, all_rational: bool) -> List[Point]:
    if all_rational:
        return rational_singular_points(field)
    return list(prob.points.values())


def cmd_sigma(args, prob: Problem) -> Report:
    field = prob.require_field()
    pts = _points(prob, field, args.all_rational)
    space = restricted_cofactor_space(field, pts)
    indep = independent_points_check(pts, field.d) if pts else True
    data = {"points": [_point_text(p) for p in pts], "dim": space.dim,
            "basis": [str(b) for b in space.basis], "independent": indep}
    lines = [f"points: {', '.join(data['points']) or '(none)'}",
             f"dim Sigma_S = {space.dim}"] + [f"  {b}" for b in space.basis]
    if not indep:
        lines.append("points are not independent for degree d-1")
    return Report("sigma", data, lines)


def cmd_indep(args, prob: Problem) -> Report:
    field = prob.require_field()
    pts = _points(prob, field, args.all_rational)
    ok = independent_points_check(pts, field.d)
    return Report("indep", {"points": [_point_text(p) for p in pts], "d": field.d, "independent": ok},
                  [f"independent: {'yes' if ok else 'no'}"])


_KINDS = {"first-integral": CertificateKind.FIRST_INTEGRAL,
          "integrating-factor": CertificateKind.INTEGRATING_FACTOR}


def cmd_darboux(args, prob: Problem) -> Report:
    field = prob.require_field()
    try:
        curves = [invariant_curve(field, f) for f in prob.curves.values()]
        exps = [exponential_factor(field, f, g) for g, f in prob.exponentials.values()]
    except NotInvariantError as err:
        raise VerificationError(str(err)) from None
    cert = solve_darboux(field, curves, exps, kind=_KINDS.get(args.kind))
    if cert is None:
        return Report("darboux", {"certificate": None}, ["no Darboux certificate from the given curves"],
                      exit_code=EXIT_INCONCLUSIVE)
    if not cert.verify(field, curves, exps):
        raise VerificationError("certificate failed re-verification")
    data = {"kind": cert.kind.value, "lambdas": [_q(v) for v in cert.lambdas],
            "rhos": [_q(v) for v in cert.rhos], "expression": cert.expression}
    lines = [f"kind: {cert.kind.value}", f"expression: {cert.expression}",
             f"lambda = ({', '.join(data['lambdas'])})"]
    if cert.rhos:
        lines.append(f"rho = ({', '.join(data['rhos'])})")
    return Report("darboux", data, lines)


def cmd_classify(args, prob: Optional[Problem]) -> Report:
    sigma = args.sigma
    if sigma is None:
        if prob is None:
            raise InputError("give --sigma or a problem file with points")
        field = prob.require_field()
        sigma = restricted_cofactor_space(field, _points(prob, field, args.all_rational)).dim
    cls = integrability_class(args.mu, sigma)
    return Report("classify", {"mu": args.mu, "sigma": sigma, "class": cls.value},
                  [f"class: {cls.value}  (mu = {args.mu}, sigma = {sigma})",
                   "holds if the counted exponential coefficients are independent and exhaustive"])


def cmd_budget(args, prob: Optional[Problem]) -> Report:
    if prob is not None:
        field = prob.require_field()
        value = budget(field, args.order)
        d = field.d
    else:
        if args.degree is None or args.infinity is None:
            raise InputError("give a problem file, or --degree and --infinity")
        d = args.degree
        value = budget_for_degree(d, args.order, args.infinity == "invariant")
    return Report("budget", {"d": d, "order": args.order, "value": value},
                  [f"n_{args.order} = {value}  (d = {d})"])


def cmd_rfi(args, prob: Problem) -> Report:
    n = rational_first_integral_degree(prob.require_field(), args.max_order)
    if n is None:
        return Report("rfi", {"max_order": args.max_order, "value": None},
                      [f"no E_n vanishes for n <= {args.max_order}"])
    return Report("rfi", {"max_order": args.max_order, "value": n},
                  [f"rational first integral of degree {n}"])


# -- deform subcommands -------------------------------------------------------------


def cmd_deform_limit(args, prob: Problem) -> Report:
    f = _family_arg(args.curve, prob)
    lim = f.limit()
    return Report("deform-limit", {"curve": args.curve, "value": str(lim)}, [f"limit = {lim}"])


def _derivative(args, prob: Problem):
    f1, f2 = _family_arg(args.f1, prob), _family_arg(args.f2, prob)
    return f1, f2, curve_derivative(f1, f2)


def cmd_deform_derivative(args, prob: Problem) -> Report:
    f1, f2, dv = _derivative(args, prob)
    data = {"r": dv.r, "g": str(dv.g), "margin": dv.margin, "scale": _q(dv.scale)}
    lines = [f"r = {dv.r}", f"g = {dv.g}", f"margin = {dv.margin}"]
    if dv.scale != 1:
        lines.append(f"second family multiplied by {_q(1 / dv.scale)}")
    if args.verify:
        field = prob.require_field()
        e = derivative_to_exponential(field, f1.limit(), dv)
        data["exp_cofactor"] = str(e.cofactor)
        lines.append(f"exp(g/f) verified, cofactor {e.cofactor}")
    return Report("deform-derivative", data, lines)


def cmd_deform_expansion(args, prob: Problem) -> Report:
    f1, f2, dv = _derivative(args, prob)
    L, ok = cofactor_expansion_check(_require_family_field(prob), f1, f2, dv.r)
    return Report("deform-lemma-check", {"r": dv.r, "L": str(L), "ok": ok},
                  [f"r = {dv.r}", f"L = {L}", f"ok: {'yes' if ok else 'no'}"],
                  exit_code=EXIT_OK if ok else EXIT_VERIFY)


def cmd_deform_christopher(args, prob: Optional[Problem]) -> Report:
    ps = [parse_polynomial(s) for s in (args.f, args.g, args.a0, args.a1, args.a2, args.a3)]
    field = christopher_field(*ps)
    data = {"a": str(field.a), "b": str(field.b)}
    lines = [f"a = {field.a}", f"b = {field.b}"]
    le = exponential_cofactor(field, ps[0], ps[1])
    if le is not None:
        data["exp_cofactor"] = str(le)
        lines.append(f"L(exp(g/f)) = {le}")
    return Report("deform-christopher", data, lines)


def cmd_deform_witness(args, prob: Problem) -> Report:
    names = args.families.split(",") if args.families else list(prob.families)
    fams = [_family_arg(n.strip(), prob) for n in names]
    target = _poly_arg(args.target, prob) if args.target else None
    res = geometric_lower_bound_witness(_require_family_field(prob), fams, args.order, target)
    data = {"order": args.order, "value": res.count,
            "accepted": [names[i] for i in res.accepted],
            "excluded": [{"family": names[i], "reason": why} for i, why in res.excluded]}
    lines = [f"mu_g,{args.order} >= {res.count}"]
    lines += [f"excluded {names[i]}: {why}" for i, why in res.excluded]
    return Report("deform-witness", data, lines)


# -- argument parsing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dbx", description="Invariant curves and Darboux integrability.")
    p.add_argument("--format", choices=("human", "json"), default="human")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, func, needs_file=True, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(func=func, needs_file=needs_file)
        if needs_file is True:
            sp.add_argument("file")
        elif needs_file == "optional":
            sp.add_argument("file", nargs="?")
        return sp

    sp = cmd("extactic", cmd_extactic, help="extactic curve E_n")
    sp.add_argument("--order", type=int, required=True)
    sp = cmd("sigma-gen", cmd_sigma_gen, help="extactic ideal generator")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--rows", required=True, help="comma-separated derivative orders")
    sp = cmd("cofactor", cmd_cofactor, help="cofactors of invariant curves")
    sp.add_argument("--curve")
    sp = cmd("expfactor", cmd_expfactor, help="exponential factor cofactors")
    sp.add_argument("--num")
    sp.add_argument("--den")
    sp = cmd("mult", cmd_mult, help="algebraic or strong algebraic multiplicity")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--strong", action="store_true")
    sp.add_argument("--cap", type=int)
    sp.add_argument("--max-m", type=int, default=4)
    sp.add_argument("--gens", help="generator row lists separated by ';'")
    for name, func, text in (("sigma", cmd_sigma, "restricted cofactor space"),
                             ("indep", cmd_indep, "independence of singular points")):
        sp = cmd(name, func, help=text)
        sp.add_argument("--all-rational", action="store_true",
                        help="use every rational singular point instead of [points]")
    sp = cmd("darboux", cmd_darboux, help="Darboux first integral or integrating factor")
    sp.add_argument("--kind", choices=sorted(_KINDS))
    sp = cmd("classify", cmd_classify, needs_file="optional", help="integrability class from mu and sigma")
    sp.add_argument("--mu", type=int, required=True)
    sp.add_argument("--sigma", type=int)
    sp.add_argument("--all-rational", action="store_true")
    sp = cmd("budget", cmd_budget, needs_file="optional", help="curve-count threshold n_l")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--degree", type=int)
    sp.add_argument("--infinity", choices=("invariant", "non-invariant"))
    sp = cmd("rfi", cmd_rfi, help="scan for a rational first integral")
    sp.add_argument("--max-order", type=int, required=True)

    dp = sub.add_parser("deform", help="one-parameter deformations")
    dsub = dp.add_subparsers(dest="subcommand", required=True)

    def dcmd(name, func, needs_file=True, **kw):
        sp = dsub.add_parser(name, **kw)
        sp.set_defaults(func=func, needs_file=needs_file)
        if needs_file:
            sp.add_argument("file")
        return sp

    sp = dcmd("limit", cmd_deform_limit, help="limit of a family at t = 0")
    sp.add_argument("--curve", required=True)
    for name, func, text in (("derivative", cmd_deform_derivative, "derivative of an invariant curve"),
                             ("lemma-check", cmd_deform_expansion, "cofactor expansion at order r")):
        sp = dcmd(name, func, help=text)
        sp.add_argument("--f1", required=True)
        sp.add_argument("--f2", required=True)
        if name == "derivative":
            sp.add_argument("--verify", action="store_true",
                            help="check that g over the limit is an exponential coefficient")
    sp = dcmd("christopher", cmd_deform_christopher, needs_file=False,
              help="field with f and exp(g/f) invariant, and its family")
    for name in ("f", "g", "a0", "a1", "a2", "a3"):
        sp.add_argument(f"--{name}", default="0" if name.startswith("a") else None,
                        required=not name.startswith("a"))
    sp = dcmd("witness", cmd_deform_witness, help="lower bound on geometric multiplicity")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--families", help="comma-separated family names (default: all)")
    sp.add_argument("--target")
    return p


def run(argv: Optional[Sequence[str]] = None) -> Tuple[int, str, str]:
    """Execute a command; returns ``(exit_code, stdout_text, stderr_text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_INPUT if exc.code else EXIT_OK), "", ""
    try:
        prob = load_problem(args.file) if getattr(args, "file", None) else None
        if args.needs_file is True and prob is None:
            raise InputError("a problem file is required")
        report = args.func(args, prob)
    except (InputError, ParseError) as err:
        return EXIT_INPUT, "", f"error: {err}"
    except (VerificationError, NotInvariantError, NotSingularError) as err:
        return EXIT_VERIFY, "", f"verification failed: {err}"
    except (InconclusiveTruncation, RationalFirstIntegralRegime) as err:
        return EXIT_INCONCLUSIVE, "", f"inconclusive: {err}"
    except IdenticalFamiliesError as err:
        return EXIT_INPUT, "", f"error: {err}"
    except (ValueError, ZeroDivisionError) as err:
        return EXIT_INPUT, "", f"error: {err}"
    out = emit(report, args.format)
    err_text = ""
    if report.exit_code == EXIT_INCONCLUSIVE and args.format == "json":
        err_text = "\n".join(report.lines)
    return report.exit_code, out, err_text


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, err = run(argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
