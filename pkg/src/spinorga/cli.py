"""Command-line interface.

Exit status: 0 on success, 1 on a domain error, 2 on a parse or usage error.
Expressions that start with ``-`` must follow ``--`` so argparse does not
read them as options.
"""

import argparse
import json
import sys

import numpy as np

from . import dirac, matrep, pauli, spin, twospinor, wick
from .algebra import (
    Signature,
    Tolerance,
    clifford_conjugate,
    exp_bivector,
    grade_involution,
    inverse,
    reverse,
    versor_inverse,
)
from .errors import GAError, NonInvertibleVersorError, ParseError
from .textio import parse, serialize

CL13 = "1,3"
CL3 = "3,0"


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--sig", default=argparse.SUPPRESS, help="signature 'p,q'")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    p.add_argument("--eps", type=float, default=argparse.SUPPRESS, help="absolute and relative tolerance")
    return p


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------

class Ctx:
    def __init__(self, args, default_sig=None, fixed_sig=None):
        text = getattr(args, "sig", None)
        if text is None:
            text = fixed_sig or default_sig
        if text is None:
            raise _UsageError("this command needs --sig p,q")
        try:
            self.sig = Signature.parse(text)
        except GAError as exc:
            raise _UsageError(str(exc)) from None
        if fixed_sig is not None and self.sig != Signature.parse(fixed_sig):
            raise GAError(f"this command works in Cl({fixed_sig}), got {self.sig}")
        eps = getattr(args, "eps", None)
        try:
            self.tol = Tolerance(eps, eps) if eps is not None else Tolerance()
        except GAError as exc:
            raise _UsageError(str(exc)) from None
        self.json = bool(getattr(args, "json", False))

    def mv(self, text):
        return parse(text, self.sig)


def _vec(a):
    return [float(x) for x in a.vector_components()]


def _emit(ctx, payload, text=None):
    if ctx.json:
        print(json.dumps(payload, sort_keys=False))
    elif text is not None:
        print(text)
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")


# --------------------------------------------------------------------------
# mv
# --------------------------------------------------------------------------

def _mv_result(ctx, value):
    s = serialize(value)
    _emit(ctx, {"sig": f"{ctx.sig.p},{ctx.sig.q}", "result": s}, s)


def cmd_mv_eval(args):
    ctx = Ctx(args)
    _mv_result(ctx, ctx.mv(args.expr))


def cmd_mv_grade(args):
    ctx = Ctx(args)
    _mv_result(ctx, ctx.mv(args.expr).grade(args.k))


def cmd_mv_rev(args):
    ctx = Ctx(args)
    _mv_result(ctx, reverse(ctx.mv(args.expr)))


def cmd_mv_involute(args):
    ctx = Ctx(args)
    _mv_result(ctx, grade_involution(ctx.mv(args.expr)))


def cmd_mv_conj(args):
    ctx = Ctx(args)
    _mv_result(ctx, clifford_conjugate(ctx.mv(args.expr)))


def cmd_mv_inv(args):
    ctx = Ctx(args)
    a = ctx.mv(args.expr)
    try:
        out = versor_inverse(a, ctx.tol)
    except NonInvertibleVersorError:
        out = inverse(a, ctx.tol)
    _mv_result(ctx, out)


def cmd_mv_exp(args):
    ctx = Ctx(args)
    _mv_result(ctx, exp_bivector(ctx.mv(args.expr), args.sign, ctx.tol))


# --------------------------------------------------------------------------
# spin
# --------------------------------------------------------------------------

def cmd_spin_check(args):
    ctx = Ctx(args)
    c = spin.classify_versor(ctx.mv(args.expr), ctx.tol)
    _emit(
        ctx,
        {
            "class": c.tag,
            "norm": c.norm_value,
            "pin": c.is_pin,
            "spin": c.is_spin,
            "spin_plus": c.is_spin_plus,
        },
    )


def cmd_spin_rotate(args):
    ctx = Ctx(args)
    _mv_result(ctx, spin.adjoint_act(ctx.mv(args.versor), ctx.mv(args.expr), args.sign, ctx.tol))


# --------------------------------------------------------------------------
# pauli
# --------------------------------------------------------------------------

def _pauli_axis(ctx, args):
    return pauli.sigma(3) if args.axis is None else ctx.mv(args.axis)


def cmd_pauli_observables(args):
    ctx = Ctx(args, fixed_sig=CL3)
    psi = pauli.PauliSpinor(ctx.mv(args.expr), _pauli_axis(ctx, args))
    obs = pauli.observables(psi)
    _emit(ctx, obs.as_dict())


def cmd_pauli_reconstruct(args):
    ctx = Ctx(args, fixed_sig=CL3)
    obs = pauli.PauliObservables(args.rho, ctx.mv(args.spin).grade(1))
    psi = pauli.reconstruct(obs, args.alpha, _pauli_axis(ctx, args), ctx.tol)
    check = pauli.observables(psi)
    s = serialize(psi.value)
    _emit(ctx, {"spinor": s, **check.as_dict()}, s)


# --------------------------------------------------------------------------
# dirac
# --------------------------------------------------------------------------

def _dirac_spinor(ctx, text):
    return dirac.DiracSpinor(ctx.mv(text))


def cmd_dirac_bilinears(args):
    ctx = Ctx(args, fixed_sig=CL13)
    b = dirac.bilinears(_dirac_spinor(ctx, args.expr))
    out = b.as_dict()
    out["fierz_max_residual"] = dirac.fierz_residuals(b).max_residual
    _emit(ctx, out)


def cmd_dirac_fierz(args):
    ctx = Ctx(args, fixed_sig=CL13)
    rep = dirac.fierz_residuals(dirac.bilinears(_dirac_spinor(ctx, args.expr)))
    if ctx.json:
        out = {"residuals": dict(rep.residuals), "max": rep.max_residual}
    else:
        out = dict(rep.residuals, max=rep.max_residual)
    _emit(ctx, out)


def cmd_dirac_classify(args):
    ctx = Ctx(args, fixed_sig=CL13)
    psi = _dirac_spinor(ctx, args.expr)
    c = dirac.lounesto_classify(psi, ctx.tol)
    _emit(
        ctx,
        {
            "class": c.tag,
            "h": c.h,
            "s": None if c.s is None else _vec(c.s),
            "majorana": dirac.is_majorana(psi, ctx.tol),
        },
    )


def _read_json(source):
    if source == "-":
        return json.load(sys.stdin)
    if source.startswith("@"):
        with open(source[1:], encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(source)


def cmd_dirac_reconstruct(args):
    ctx = Ctx(args, fixed_sig=CL13)
    try:
        data = _read_json(args.bilinears)
        b = dirac.BilinearSet.from_dict(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise GAError(f"bad bilinear JSON: {exc}") from None
    psi = dirac.reconstruct(b, args.alpha, tol=ctx.tol)
    s = serialize(psi.value)
    _emit(ctx, {"spinor": s, **dirac.bilinears(psi).as_dict()}, s)


# --------------------------------------------------------------------------
# twospinor
# --------------------------------------------------------------------------

def _projector(ctx, args):
    if getattr(args, "frame", None) is None:
        return twospinor.default_projector()
    return twospinor.projector_from_bivector(ctx.mv(args.frame), ctx.tol)


def cmd_twospinor_split(args):
    ctx = Ctx(args, fixed_sig=CL13)
    l = _projector(ctx, args)
    plus, minus = twospinor.split(ctx.mv(args.expr), l)
    _emit(ctx, {"eta_plus": serialize(plus.value), "eta_minus": serialize(minus.value)})


def cmd_twospinor_classify(args):
    ctx = Ctx(args, fixed_sig=CL13)
    rep = twospinor.classify(ctx.mv(args.expr), ctx.tol)
    _emit(ctx, rep.as_dict())


def cmd_tetrad(args):
    ctx = Ctx(args, fixed_sig=CL13)
    t = twospinor.null_tetrad(_projector(ctx, args))
    metric = t.metric_matrix()
    out = {
        "l": serialize(t.l),
        "n": serialize(t.n),
        "m": serialize(t.m),
        "m_dagger": serialize(t.m_dagger),
        "metric": metric.tolist(),
        "metric_residual": t.metric_residual(),
        "np_metric_ok": bool(t.metric_residual() <= ctx.tol.abs_eps),
        "span_rank": t.span_rank(),
    }
    _emit(ctx, out)


def cmd_twospinor_flag(args):
    ctx = Ctx(args, fixed_sig=CL13)
    l = _projector(ctx, args)
    eta = twospinor.two_spinor(ctx.mv(args.eta), l)
    chi = twospinor.two_spinor(ctx.mv(args.chi), l)
    J = twospinor.flagpole(eta, ctx.tol).value
    F = twospinor.flag(eta, chi, ctx.tol)
    bracket = twospinor.inner_product(eta, chi)
    _emit(
        ctx,
        {
            "flagpole": serialize(J),
            "flag": serialize(F),
            "bracket": [bracket.real, bracket.imag],
            "flagpole_nullity": float(np.max(np.abs((J * reverse(J)).coeffs))),
            "flag_nullity": float(np.max(np.abs((F * F).coeffs))),
        },
    )


# --------------------------------------------------------------------------
# rep, wick
# --------------------------------------------------------------------------

def cmd_rep_lookup(args):
    ctx = Ctx(args)
    tag = matrep.rep_lookup(ctx.sig)
    _emit(
        ctx,
        {"tag": str(tag), "ring": tag.ring, "size": tag.size, "doubling": tag.doubling, "real_dim": tag.real_dim},
        str(tag),
    )


def cmd_rep_verify(args):
    ctx = Ctx(args)
    rep = matrep.build_rep(ctx.sig)
    report = matrep.verify_rep(rep, samples=args.samples, seed=args.seed)
    out = {"tag": str(rep.tag), "blocks": rep.blocks, **report.as_dict()}
    if not ctx.json:
        out.pop("relations")
    _emit(ctx, out)
    return 0 if report.ok else 1


def cmd_wick(args):
    if args.target == "bridge":
        ctx = Ctx(args, default_sig=CL13)
        report = wick.signature_bridge_check()
        _emit(ctx, report.as_dict())
        return 0 if report.ok else 1
    ctx = Ctx(args, fixed_sig=CL13)
    img = wick.wick_rotate(ctx.mv(args.target), ctx.tol)
    s = serialize(img.value)
    _emit(ctx, {"sig": "4,0", "result": s, "components": _vec(img.value)}, s)


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser():
    common = _common()
    top = _ArgParser(prog="spinorga", description="Geometric algebra spinor toolkit", parents=[common])
    groups = top.add_subparsers(dest="group", metavar="command", parser_class=_ArgParser)
    groups.required = True

    def leaf(sub, name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def group(name, help_text):
        g = groups.add_parser(name, help=help_text)
        sub = g.add_subparsers(dest="cmd", metavar="subcommand", parser_class=_ArgParser)
        sub.required = True
        return sub

    mv = group("mv", "evaluate and transform multivector expressions")
    leaf(mv, "eval", cmd_mv_eval, "evaluate an expression").add_argument("expr")
    p = leaf(mv, "grade", cmd_mv_grade, "grade projection")
    p.add_argument("expr")
    p.add_argument("k", type=int)
    leaf(mv, "rev", cmd_mv_rev, "reverse").add_argument("expr")
    leaf(mv, "inv", cmd_mv_inv, "inverse").add_argument("expr")
    leaf(mv, "involute", cmd_mv_involute, "grade involution").add_argument("expr")
    leaf(mv, "conj", cmd_mv_conj, "Clifford conjugate").add_argument("expr")
    p = leaf(mv, "exp", cmd_mv_exp, "exponential of a bivector")
    p.add_argument("expr")
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)

    sp = group("spin", "Pin/Spin membership and adjoint action")
    leaf(sp, "check", cmd_spin_check, "classify a versor").add_argument("expr")
    p = leaf(sp, "rotate", cmd_spin_rotate, "sign * U A reverse(U)")
    p.add_argument("versor")
    p.add_argument("expr")
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)

    pa = group("pauli", "Pauli spinors in Cl(3,0)")
    p = leaf(pa, "observables", cmd_pauli_observables, "density and spin vector")
    p.add_argument("expr")
    p.add_argument("--axis", default=None)
    p = leaf(pa, "reconstruct", cmd_pauli_reconstruct, "spinor from density and spin")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--spin", required=True, help="vector expression")
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--axis", default=None)

    di = group("dirac", "Dirac spinors in Cl(1,3)")
    leaf(di, "bilinears", cmd_dirac_bilinears, "bilinear covariants").add_argument("expr")
    leaf(di, "classify", cmd_dirac_classify, "Lounesto class").add_argument("expr")
    leaf(di, "fierz", cmd_dirac_fierz, "Fierz identity residuals").add_argument("expr")
    p = leaf(di, "reconstruct", cmd_dirac_reconstruct, "spinor from bilinears JSON")
    p.add_argument("bilinears", help="JSON text, @file or - for stdin")
    p.add_argument("--alpha", type=float, nargs=3, default=(0.0, 0.0, 0.0))

    ts = group("twospinor", "Lorentz 2-spinors")
    p = leaf(ts, "split", cmd_twospinor_split, "split into the two ideals")
    p.add_argument("expr")
    p.add_argument("--frame", default=None)
    leaf(ts, "classify", cmd_twospinor_classify, "Weyl/Majorana/flag classification").add_argument("expr")
    leaf(ts, "tetrad", cmd_tetrad, "null tetrad and NP metric").add_argument("--frame", default=None)
    p = leaf(ts, "flag", cmd_twospinor_flag, "flagpole and flag")
    p.add_argument("eta")
    p.add_argument("chi")
    p.add_argument("--frame", default=None)

    p = groups.add_parser("tetrad", parents=[common], help="null tetrad and NP metric")
    p.add_argument("--frame", default=None)
    p.set_defaults(func=cmd_tetrad)

    rp = group("rep", "matrix representations")
    leaf(rp, "lookup", cmd_rep_lookup, "classification tag")
    p = leaf(rp, "verify", cmd_rep_verify, "build and verify a representation")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = groups.add_parser("wick", parents=[common], help="Wick rotation or 'bridge' check")
    p.add_argument("target", help="vector expression, or 'bridge'")
    p.set_defaults(func=cmd_wick)
    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"spinorga: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        code = args.func(args)
    except _UsageError as exc:
        print(f"spinorga: error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"spinorga: parse error: {exc}", file=sys.stderr)
        return 2
    except GAError as exc:
        print(f"spinorga: error: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
