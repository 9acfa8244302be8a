"""Command-line front end.

A script is a sequence of statements separated by ``;`` or newlines::

    vars x:1 y:1 z:1;
    F = X^2*Y; G = Y^2*Z; tau = x^2 + y*z;
    cs-check F G tau;
    algebra A(x:1, y:1) = X*Y^3;
    map pA: A -> T (x -> z, y -> 0);
    family nonslp 5 2; wlp; slp;

Commands act on named polynomials, named algebras/maps, or on the current
algebra (the last one built).
"""

from __future__ import annotations

import argparse
import json
import re
import shlex
import sys

from . import __version__
from .algebra import GradedAlgebra, HilbertFunction, InternalConsistencyError
from .connected_sum import (
    AlgebraMap,
    GradedSubquotient,
    OrientedSurjection,
    check_connected_sum,
    connected_sum_dual,
    connected_sum_structural,
    diagonalize_quadratic,
    fibered_product_dual,
    fibered_product_structural,
    monomial_cs_criterion,
    probe_decomposability,
    thom_class,
)
from .graded_poly import Grading, Poly, PolyParseError, format_poly, parse_poly
from .inverse_system import InverseSystem
from .lefschetz import (
    closure_add,
    generic_lefschetz,
    heightthree_family,
    jordan_type,
    nonslp_family,
    slp_check,
    two_block_classify,
    wlp_check,
    wlp_middle_check,
)
from .scalars import field_from_spec

SCHEMA_VERSION = 1


class ScriptError(Exception):
    """Bad input: parse errors, unknown names, wrong arity."""


def _yn(b):
    return "yes" if b else "no"


def _hf(h):
    return list(HilbertFunction(h).trimmed())


def _parse_vars(spec: str) -> Grading:
    names, weights = [], []
    for tok in spec.replace(",", " ").split():
        if ":" in tok:
            n, w = tok.split(":", 1)
            try:
                w = int(w)
            except ValueError:
                raise ScriptError(f"bad weight in '{tok}'") from None
        else:
            n, w = tok, 1
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
            raise ScriptError(f"bad variable name '{n}'")
        names.append(n)
        weights.append(w)
    try:
        return Grading(tuple(weights), tuple(names))
    except ValueError as e:
        raise ScriptError(str(e)) from None


class Session:
    def __init__(self, field, trials=5, seed=0, max_degree=None):
        self.field = field
        self.trials, self.seed, self.max_degree = trials, seed, max_degree
        self.grading = None
        self.polys = {}
        self.algebras = {}
        self.maps = {}
        self.current = None
        self.current_name = None
        self.results = []
        self.emit = None

    # parsing helpers

    def poly(self, text, side="R", grading=None, homogeneous=True) -> Poly:
        grading = grading or self.grading
        if text in self.polys and grading is self.grading:
            p = self.polys[text].on_side(side)
        else:
            if grading is None:
                raise ScriptError("declare variables with 'vars' first")
            try:
                p = parse_poly(text, grading, self.field, side)
            except PolyParseError as e:
                raise ScriptError(f"cannot parse '{text}': {e}") from None
        if homogeneous and not p.is_zero() and not p.is_homogeneous():
            raise ScriptError(f"polynomial '{text}' is not homogeneous")
        return p

    def target(self, args) -> GradedAlgebra:
        if not args:
            if self.current is None:
                raise ScriptError("no current algebra; build one or name dual generators")
            return self.current
        if len(args) == 1 and args[0] in self.algebras:
            return self.algebras[args[0]]
        duals = [self.poly(a, "R") for a in args]
        try:
            A = InverseSystem(self.grading, duals, self.field)
        except ValueError as e:
            raise ScriptError(str(e)) from None
        return A

    def set_current(self, A, name=None):
        self.current, self.current_name = A, name

    def map_(self, name) -> AlgebraMap:
        if name not in self.maps:
            raise ScriptError(f"unknown map '{name}'")
        return self.maps[name]

    # statements

    def _declare(self, name):
        if name in self.polys or name in self.algebras or name in self.maps:
            raise ScriptError(f"duplicate name '{name}'")

    def run(self, script: str):
        for stmt in _split(script):
            self.statement(stmt)

    def statement(self, stmt: str):
        m = re.fullmatch(r"vars\s+(.*)", stmt, re.S)
        if m:
            self.grading = _parse_vars(m.group(1))
            return
        m = re.fullmatch(r"algebra\s+(\w+)\s*\(([^)]*)\)\s*=\s*(.+)", stmt, re.S)
        if m:
            self._declare(m.group(1))
            g = _parse_vars(m.group(2))
            duals = [self.poly(t.strip(), "R", g) for t in m.group(3).split(",")]
            try:
                self.algebras[m.group(1)] = InverseSystem(g, duals, self.field)
            except ValueError as e:
                raise ScriptError(str(e)) from None
            return
        m = re.fullmatch(r"map\s+(\w+)\s*:\s*(\w+)\s*->\s*(\w+)\s*\(([^)]*)\)", stmt, re.S)
        if m:
            self._define_map(*m.groups())
            return
        m = re.fullmatch(r"([A-Za-z_]\w*)\s*=\s*(.+)", stmt, re.S)
        if m:
            if self.grading is None:
                raise ScriptError("declare variables with 'vars' first")
            self._declare(m.group(1))
            self.polys[m.group(1)] = self.poly(m.group(2).strip(), "R")
            return
        try:
            words = shlex.split(stmt)
        except ValueError as e:
            raise ScriptError(f"cannot split '{stmt}': {e}") from None
        cmd, rest = words[0], words[1:]
        args, opts = _options(rest)
        handler = COMMANDS.get(cmd)
        if handler is None:
            raise ScriptError(f"unknown command '{cmd}'")
        out = handler(self, args, opts)
        out = {"command": cmd, **out}
        self.results.append(out)
        if self.emit:
            self.emit(out)

    def _define_map(self, name, src, dst, body):
        self._declare(name)
        for n in (src, dst):
            if n not in self.algebras:
                raise ScriptError(f"unknown algebra '{n}'")
        S, T = self.algebras[src], self.algebras[dst]
        images = {}
        for part in body.split(","):
            part = part.strip()
            if not part:
                continue
            if "->" not in part:
                raise ScriptError(f"bad map entry '{part}', expected 'x -> poly'")
            v, img = (s.strip() for s in part.split("->", 1))
            if v.lower() not in S.grading.names:
                raise ScriptError(f"'{v}' is not a variable of {src}")
            images[v.lower()] = self.poly(img, "Q", T.grading)
        imgs = [images.get(n, Poly.zero(T.grading, self.field, "Q")) for n in S.grading.names]
        try:
            if len(S.duals) == 1 and len(T.duals) == 1:
                self.maps[name] = OrientedSurjection(S, T, imgs, name)
            else:
                self.maps[name] = AlgebraMap(S, T, imgs, name)
        except ValueError as e:
            raise ScriptError(str(e)) from None


def _split(script: str):
    out = []
    for chunk in re.split(r"[;\n]", script):
        chunk = chunk.split("#", 1)[0].strip()
        if chunk:
            out.append(chunk)
    return out


def _options(words):
    args, opts = [], {}
    i = 0
    while i < len(words):
        w = words[i]
        if w.startswith("--"):
            key = w[2:]
            if key in ("generic",):
                opts[key] = True
            else:
                if i + 1 >= len(words):
                    raise ScriptError(f"option {w} needs a value")
                opts[key] = words[i + 1]
                i += 1
        else:
            args.append(w)
        i += 1
    return args, opts


def _int(x, what):
    try:
        return int(x)
    except (TypeError, ValueError):
        raise ScriptError(f"{what} must be an integer, got {x!r}") from None


# commands


def _alg_summary(A):
    out = {"hilbert": _hf(A.hilbert())}
    if isinstance(A, InverseSystem):
        out["vars"] = {n: w for n, w in zip(A.grading.names, A.grading.weights)}
        out["dual_generators"] = [format_poly(G) for G in A.duals]
    return out


def cmd_hilbert(s, args, opts):
    A = s.target(args)
    s.set_current(A)
    return {**_alg_summary(A), "text": str(A.hilbert())}


def cmd_ann(s, args, opts):
    A = s.target(args)
    if not isinstance(A, InverseSystem):
        raise ScriptError("ann needs an algebra given by dual generators")
    s.set_current(A)
    gens = A.min_generators()
    if s.max_degree is not None:
        gens = {j: g for j, g in gens.items() if j <= s.max_degree}
    flat = [str(g) for j in sorted(gens) for g in gens[j]]
    text = "Ann = (" + ", ".join(flat) + ")\nH = " + str(A.hilbert())
    return {**_alg_summary(A), "generators": {str(j): [str(g) for g in v] for j, v in gens.items()}, "text": text}


def cmd_socle(s, args, opts):
    A = s.target(args)
    soc = A.socle()
    lines = [f"degree {i}: " + ", ".join(A.describe(e) for e in v) for i, v in soc.items()]
    return {
        "socle_hilbert": _hf(A.socle_hilbert()),
        "socle": {str(i): [A.describe(e) for e in v] for i, v in soc.items()},
        "gorenstein": A.is_gorenstein(),
        "text": "\n".join(lines) + f"\nGorenstein: {_yn(A.is_gorenstein())}",
    }


def cmd_thom(s, args, opts):
    if len(args) == 1:
        pi = s.map_(args[0])
        if not isinstance(pi, OrientedSurjection):
            raise ScriptError("thom needs a surjection of Gorenstein algebras")
        tau = pi.source.describe(pi.thom())
        return {"tau": tau, "text": f"tau = {tau}"}
    if len(args) != 2:
        raise ScriptError("usage: thom F H  or  thom MAP")
    F, H = s.poly(args[0]), s.poly(args[1])
    sol = thom_class(F, H)
    if sol is None:
        return {"tau": None, "text": "no Thom class: H is not a contraction of F"}
    coset = [str(p) for p in sol.coset_basis]
    return {"tau": str(sol.tau), "k": sol.k, "coset": coset,
            "text": f"tau = {sol.tau}  (mod Ann(F)_{F.degree() - sol.k}: {', '.join(coset) or '0'})"}


def cmd_cs_check(s, args, opts):
    if len(args) != 3:
        raise ScriptError("usage: cs-check F G tau")
    F, G, tau = s.poly(args[0]), s.poly(args[1]), s.poly(args[2], "Q")
    try:
        c = check_connected_sum(F, G, tau)
    except ValueError as e:
        raise ScriptError(str(e)) from None
    text = c.message
    if c.predicted_hilbert is not None:
        text += f"\npredicted H = {c.predicted_hilbert}, actual H(Q/Ann(F-G)) = {c.actual_hilbert}"
    return {"verdict": c.verdict, "condition_a": c.condition_a, "condition_b": c.condition_b,
            "failing_degree": c.failing_degree, "k": c.k, "H": str(c.H),
            "predicted_hilbert": _hf(c.predicted_hilbert) if c.predicted_hilbert is not None else None,
            "actual_hilbert": _hf(c.actual_hilbert), "text": text}


def cmd_cs_build(s, args, opts):
    if len(args) != 3:
        raise ScriptError("usage: cs-build F G tau")
    C = connected_sum_dual(s.poly(args[0]), s.poly(args[1]), s.poly(args[2], "Q"))
    s.set_current(C)
    return {**_alg_summary(C), "text": str(C.hilbert())}


def cmd_fiber_build(s, args, opts):
    if len(args) == 2 and args[0] in s.maps:
        D = fibered_product_structural(s.map_(args[0]), s.map_(args[1]))
        s.set_current(D)
        return {"hilbert": _hf(D.hilbert()), "text": str(D.hilbert())}
    if len(args) != 2:
        raise ScriptError("usage: fiber-build F G  or  fiber-build MAP_A MAP_B")
    D = fibered_product_dual(s.poly(args[0]), s.poly(args[1]))
    s.set_current(D)
    return {**_alg_summary(D), "text": str(D.hilbert())}


def cmd_cs_structural(s, args, opts):
    if len(args) != 2:
        raise ScriptError("usage: cs-structural MAP_A MAP_B")
    C = connected_sum_structural(s.map_(args[0]), s.map_(args[1]))
    s.set_current(C)
    return {"hilbert": _hf(C.hilbert()), "text": str(C.hilbert())}


def cmd_monomial_cs(s, args, opts):
    if len(args) != 2:
        raise ScriptError("usage: monomial-cs F G")
    F, G = s.poly(args[0]), s.poly(args[1])
    try:
        w = monomial_cs_criterion(F, G)
    except ValueError as e:
        raise ScriptError(str(e)) from None
    if w is None:
        return {"witness": None, "text": "no monomial connected-sum decomposition"}
    g = F.grading
    m0 = format_poly(Poly.monomial(g, w.M0, 1, s.field, "R"))
    return {"witness": {"M0": m0, "tau": str(w.tau), "k": w.k},
            "text": f"M0 = {m0}, tau = {w.tau}, k = {w.k}"}


def cmd_probe(s, args, opts):
    if len(args) != 1:
        raise ScriptError("usage: probe F")
    r = probe_decomposability(s.poly(args[0]))
    lines = [f"generator degrees: {dict(r.generator_degrees)}", f"candidate k: {r.candidates}"]
    lines += [f"k = {k} ruled out: {why}" for k, why in r.ruled_out.items()]
    lines += r.notes
    return {"generator_degrees": {str(j): c for j, c in r.generator_degrees.items()}, "candidates": r.candidates,
            "totally_indecomposable": r.totally_indecomposable, "notes": r.notes, "text": "\n".join(lines)}


def cmd_diag(s, args, opts):
    if len(args) != 1:
        raise ScriptError("usage: diag-quadratic F")
    try:
        r = diagonalize_quadratic(s.poly(args[0]))
    except ValueError as e:
        raise ScriptError(str(e)) from None
    forms = [str(f) for f in r.forms]
    diag = [str(a) for a in r.diagonal]
    text = "\n".join(f"{f}: {a}" for f, a in zip(forms, diag)) + f"\nsummands: {r.summands}"
    return {"forms": forms, "diagonal": diag, "summands": r.summands, "text": text}


def _ell(s, A, opts):
    if "ell" not in opts:
        return None
    text = opts["ell"]
    if isinstance(A, InverseSystem):
        return A.reduce(s.poly(text, "Q", A.grading))
    if isinstance(A, GradedSubquotient):
        parts = text.split(",")
        if len(parts) != 2:
            raise ScriptError("--ell for a fibered product or connected sum is 'a_form, b_form'")
        a = A.A.reduce(s.poly(parts[0].strip(), "Q", A.A.grading))
        b = A.B.reduce(s.poly(parts[1].strip(), "Q", A.B.grading))
        return A.from_pair(a, b)
    raise ScriptError("--ell is not supported for this algebra")


def _lefschetz(s, args, opts):
    A = s.target(args)
    trials = _int(opts.get("trials", s.trials), "--trials")
    seed = _int(opts.get("seed", s.seed), "--seed")
    ell = _ell(s, A, opts)
    if ell is not None:
        r = slp_check(A, ell)
        return A, {"wlp": r.wlp, "slp": r.slp, "jordan": list(r.jordan), "diagnostic": r.diagnostic,
                   "char_sensitive": r.char_sensitive}, ""
    g = generic_lefschetz(A, trials, seed)
    info = {"wlp": g.wlp, "slp": g.slp, "jordan": list(g.jordan), "label": g.label, "seed": seed,
            "trials": trials, "diagnostic": g.diagnostic, "char_sensitive": g.char_sensitive}
    return A, info, f" ({g.label}, seed={seed}, trials={trials})"


def cmd_wlp(s, args, opts):
    A, info, tag = _lefschetz(s, args, opts)
    return {**info, "text": f"WLP={_yn(info['wlp'])}{tag}"}


def cmd_slp(s, args, opts):
    A, info, tag = _lefschetz(s, args, opts)
    return {**info, "text": f"SLP={_yn(info['slp'])}{tag}"}


def cmd_jordan(s, args, opts):
    A, info, tag = _lefschetz(s, args, opts)
    return {**info, "text": "Jordan type (" + ", ".join(map(str, info["jordan"])) + ")" + tag}


def cmd_wlp_middle(s, args, opts):
    A = s.target(args)
    if not isinstance(A, GradedSubquotient):
        raise ScriptError("wlp-middle needs a fibered product or connected sum built from maps")
    ell = _ell(s, A, opts)
    if ell is None:
        seed = _int(opts.get("seed", s.seed), "--seed")
        ell = generic_lefschetz(A, 1, seed).ell
    r = wlp_middle_check(A, ell)
    return {"ok": r.ok, "injective": r.injective, "surjective": r.surjective, "u": r.u, "v": r.v,
            "full_wlp": r.full_wlp, "text": f"middle check: {_yn(r.ok)} (u={r.u}, v={r.v}); full WLP: {_yn(r.full_wlp)}"}


def cmd_family(s, args, opts):
    if not args:
        raise ScriptError("usage: family h3 a d k | family nonslp m t | family closure k")
    kind, nums = args[0], args[1:]
    if kind == "h3":
        if len(nums) != 3:
            raise ScriptError("usage: family h3 a d k")
        A = heightthree_family(*(_int(x, "argument") for x in nums), field=s.field)
    elif kind == "nonslp":
        if len(nums) != 2:
            raise ScriptError("usage: family nonslp m t")
        _, A = nonslp_family(*(_int(x, "argument") for x in nums), field=s.field)
    elif kind == "closure":
        if not isinstance(s.current, InverseSystem) or len(nums) < 1:
            raise ScriptError("usage: family closure k  (applies to the current Gorenstein algebra)")
        point = [_int(x, "point coordinate") for x in nums[1:]] or None
        trials = _int(opts.get("trials", s.trials), "--trials")
        seed = _int(opts.get("seed", s.seed), "--seed")
        A = closure_add(s.current, _int(nums[0], "k"), point, trials, seed).C
    else:
        raise ScriptError(f"unknown family '{kind}'")
    s.set_current(A)
    return {**_alg_summary(A), "text": str(A.hilbert())}


def cmd_two_block(s, args, opts):
    A = s.target(args)
    r = two_block_classify(A, _int(opts.get("trials", s.trials), "--trials"), _int(opts.get("seed", s.seed), "--seed"))
    return {"a": r.a, "t": r.t, "type": r.kind, "slp": r.slp, "standard_graded": r.standard_graded,
            "text": f"type ({r.kind}), a = {r.a}, t = {r.t}; SLP={_yn(r.slp)}, standard graded: {_yn(r.standard_graded)}"}


COMMANDS = {
    "ann": cmd_ann,
    "hilbert": cmd_hilbert,
    "socle": cmd_socle,
    "thom": cmd_thom,
    "cs-check": cmd_cs_check,
    "cs-build": cmd_cs_build,
    "fiber-build": cmd_fiber_build,
    "cs-structural": cmd_cs_structural,
    "monomial-cs": cmd_monomial_cs,
    "probe": cmd_probe,
    "diag-quadratic": cmd_diag,
    "wlp": cmd_wlp,
    "slp": cmd_slp,
    "jordan": cmd_jordan,
    "wlp-middle": cmd_wlp_middle,
    "family": cmd_family,
    "two-block": cmd_two_block,
}


def build_parser():
    p = argparse.ArgumentParser(prog="gorsum", description="Connected sums of graded Artinian Gorenstein algebras.")
    p.add_argument("script", nargs="?", help="script file, or '-' for stdin")
    p.add_argument("-e", "--exec", dest="text", help="script text")
    p.add_argument("--field", default="rat", help="rat or fp:<p>")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--version", action="version", version=__version__)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    s = None
    try:
        field = field_from_spec(args.field)
        if args.text is not None:
            script = args.text
        elif args.script == "-" or args.script is None:
            script = sys.stdin.read()
        else:
            with open(args.script) as fh:
                script = fh.read()
        s = Session(field, args.trials, args.seed, args.max_degree)
        if not args.json:
            s.emit = lambda r: print(r["text"], flush=True)
        s.run(script)
    except (ScriptError, ValueError, OSError, ArithmeticError, InternalConsistencyError) as e:
        msg = str(e).splitlines()[0] if str(e) else type(e).__name__
        code = 2 if isinstance(e, (ScriptError, OSError)) else 3 if isinstance(e, InternalConsistencyError) else 1
        print(f"error: {msg}", file=sys.stderr)
        if args.json:
            doc = {"schema_version": SCHEMA_VERSION, "field": args.field,
                   "results": s.results if s else [], "error": {"message": msg, "exit_status": code}}
            print(json.dumps(doc, indent=2))
        return code
    if args.json:
        doc = {"schema_version": SCHEMA_VERSION, "field": field.spec(), "results": s.results}
        print(json.dumps(doc, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
