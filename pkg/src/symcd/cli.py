"""Command-line front end.

Subcommands
-----------
* ``class``     -- print a named divisor/cycle class from the catalog
* ``intersect`` -- evaluate a product expression of classes in top degree
* ``cone``      -- effective-cone rays (or nef facts with ``--kind nef``)
* ``volume``    -- exact volume of theta - t*x on the proven interval
* ``verify``    -- run the exact identity suite

All rationals are printed as "p/q" strings (plain decimal strings for
integers); JSON output is deterministic, uses sorted keys, and never contains
a floating-point literal.  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 violated precondition, 4 out of the proven domain.

The default output format is text; set SYMCD_FORMAT=json (or pass --format)
to switch.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Callable

from .catalog import (
    bipartition_diagonal_class,
    hyperelliptic_pencil_locus_class,
    pencil_residual_divisor_class,
    ramification_divisor_class,
    small_diagonal_class,
    subordinate_class,
)
from .cones import (
    CurveContext,
    CurveType,
    Ray,
    effective_cone,
    nef_facts,
    volume_general,
    volume_hyperelliptic,
)
from .cycles import CycleClass, evaluate_top, theta_class, x_class
from .errors import OutOfProvenDomainError, PreconditionError
from .verify import (
    CheckLimits,
    CheckReport,
    CheckStatus,
    all_passed,
    check_combsum,
    check_diagonal_agreement,
    check_dd_system,
    check_orth,
    check_pencil_residual_link,
    check_volume_identity,
    diagonal_statement_discrepancy,
    run_all,
)

FORMAT_ENV_VAR = "SYMCD_FORMAT"

_PROVENANCE = {
    "poincare": "Poincare formula: x^k * theta^(d-k) = g!/(g-d+k)! on C_d",
    "subordinate": (
        "degeneracy-locus formula for loci subordinate to a linear series "
        "(Arbarello-Cornalba-Griffiths-Harris)"
    ),
    "small-diagonal": "pushforward of the curve under p |-> d*p",
    "bipartition-diagonal": (
        "pushforward of C x C under (p, q) |-> (g-d+1)p + d*q, by coefficient extraction"
    ),
    "ramification": (
        "Gauss-map ramification divisor, solved from small-diagonal and moving-point test curves"
    ),
    "e-k": "pushforward to C_k of the pencil locus C^(k-2)_(3k-5) in genus 2k-1",
    "hyperelliptic-c1d": (
        "C^1_d equals the locus subordinate to the (d-1)-st power of the hyperelliptic pencil"
    ),
    "volume-general": (
        "volume of theta - t*x on C_(g-1): residuation onto the nef subcone, then top self-intersection"
    ),
    "volume-hyperelliptic": "Zariski decomposition with positive part proportional to theta",
    "verify": "exact re-derivation of the identity catalog; no tolerances",
}


class UsageError(Exception):
    """Bad command usage that argparse itself cannot detect."""


def _rat(value: Fraction | int) -> str:
    return str(value)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r} ({exc})")


def _require(args: argparse.Namespace, flag: str, why: str) -> int:
    value = getattr(args, flag)
    if value is None:
        raise UsageError(f"--{flag} is required for {why}")
    return value


def _class_document(cls: CycleClass) -> dict:
    codim = cls.codim
    monomials = []
    for k in range(codim + 1):
        x_part = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        theta_part = "" if codim - k == 0 else ("theta" if codim - k == 1 else f"theta^{codim - k}")
        monomials.append("*".join(part for part in (x_part, theta_part) if part) or "1")
    result = {
        "genus": cls.genus,
        "symmetric_power": cls.d,
        "codimension": codim,
        "monomials": monomials,
        "coefficients": [_rat(c) for c in cls.coeffs],
        "pretty": str(cls),
    }
    if codim == 1:
        # a*theta - b*x convention
        result["a"] = _rat(cls.coeffs[0])
        result["b"] = _rat(-cls.coeffs[1])
    return result


def _ray_document(ray: Ray) -> dict:
    return {"theta": ray.theta, "x": ray.x, "pretty": str(ray)}


# --------------------------------------------------------------------------
# intersect expression parsing

_TOKEN_RE = re.compile(r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*^()]))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            remainder = text[pos:].strip()
            if not remainder:
                break
            raise UsageError(f"cannot tokenize expression at: {remainder!r}")
        tokens.append(match.group("number") or match.group("name") or match.group("op"))
        pos = match.end()
    return tokens


class _ExpressionParser:
    """Recursive-descent parser for products of named classes.

    Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := atom (('^'|'**') INT)?; atom := NUMBER | NAME | '(' expr ')' |
    '-' atom.  Values are exact rationals or cycle classes.
    """

    def __init__(self, text: str, env: dict[str, Callable[[], CycleClass]]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.env = env

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> str:
        token = self.peek()
        if token is None:
            raise UsageError("unexpected end of expression")
        self.pos += 1
        return token

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise UsageError(f"trailing input in expression: {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.advance()
            right = self.term()
            value = _add(value, right) if op == "+" else _add(value, _negate(right))
        return value

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.advance()
            value = _multiply(value, self.factor())
        return value

    def factor(self):
        value = self.atom()
        if self.peek() in ("^", "**"):
            self.advance()
            exponent_token = self.advance()
            if not exponent_token.isdigit():
                raise UsageError(f"exponent must be a non-negative integer (got {exponent_token!r})")
            value = _power(value, int(exponent_token))
        return value

    def atom(self):
        token = self.advance()
        if token == "(":
            value = self.expr()
            if self.advance() != ")":
                raise UsageError("unbalanced parentheses in expression")
            return value
        if token == "-":
            return _negate(self.atom())
        if re.fullmatch(r"\d+(/\d+)?", token):
            return Fraction(token)
        if token in self.env:
            return self.env[token]()
        raise UsageError(f"unknown name in expression: {token!r}")


def _negate(value):
    return -value


def _add(left, right):
    if isinstance(left, CycleClass) != isinstance(right, CycleClass):
        raise PreconditionError("cannot add a scalar to a class")
    return left + right


def _multiply(left, right):
    if isinstance(left, CycleClass) and isinstance(right, CycleClass):
        return left * right
    if isinstance(left, CycleClass):
        return left.scale(right)
    if isinstance(right, CycleClass):
        return right.scale(left)
    return left * right


def _power(value, exponent: int):
    return value**exponent


# --------------------------------------------------------------------------
# subcommand handlers; each returns (document, exit_code)


def _cmd_class(args) -> tuple[dict, int]:
    name = args.name
    inputs: dict = {"name": name}
    if name == "subordinate":
        g = _require(args, "g", name)
        d = _require(args, "d", name)
        n = _require(args, "n", name)
        r = _require(args, "r", name)
        inputs.update(g=g, d=d, n=n, r=r)
        cls = subordinate_class(g, d, n, r)
        provenance = [_PROVENANCE["subordinate"]]
    elif name == "small-diagonal":
        g = _require(args, "g", name)
        d = _require(args, "d", name)
        inputs.update(g=g, d=d)
        cls = small_diagonal_class(g, d)
        provenance = [_PROVENANCE["small-diagonal"]]
    elif name == "bipartition-diagonal":
        g = _require(args, "g", name)
        d = _require(args, "d", name)
        variant = "statement" if args.statement_variant else "proof"
        inputs.update(g=g, d=d, variant=variant)
        cls = bipartition_diagonal_class(g, d, variant)
        provenance = [_PROVENANCE["bipartition-diagonal"]]
        if variant == "statement":
            provenance.append(
                "statement variant: x*theta coefficient known to disagree with the extraction oracle"
            )
    elif name == "ramification":
        g = _require(args, "g", name)
        d = _require(args, "d", name)
        inputs.update(g=g, d=d)
        cls = ramification_divisor_class(g, d)
        provenance = [_PROVENANCE["ramification"]]
    elif name == "e-k":
        k = _require(args, "k", name)
        inputs.update(k=k)
        cls = pencil_residual_divisor_class(k)
        provenance = [_PROVENANCE["e-k"]]
    else:  # hyperelliptic-c1d; argparse restricts the choices
        g = _require(args, "g", name)
        d = _require(args, "d", name)
        inputs.update(g=g, d=d)
        cls = hyperelliptic_pencil_locus_class(g, d)
        provenance = [_PROVENANCE["hyperelliptic-c1d"]]
    document = {
        "command": "class",
        "inputs": inputs,
        "result": _class_document(cls),
        "provenance": provenance,
    }
    return document, 0


def _intersect_env(args, g: int, d: int) -> dict[str, Callable[[], CycleClass]]:
    def subordinate():
        n = _require(args, "n", "the 'subordinate' name")
        r = _require(args, "r", "the 'subordinate' name")
        return subordinate_class(g, d, n, r)

    def ek():
        k = _require(args, "k", "the 'ek' name")
        if g != 2 * k - 1 or d != k:
            raise PreconditionError(
                f"ek lives on C_k in genus 2k-1; got k={k} with g={g}, d={d}"
            )
        return pencil_residual_divisor_class(k)

    return {
        "theta": lambda: theta_class(g, d),
        "x": lambda: x_class(g, d),
        "smalldiag": lambda: small_diagonal_class(g, d),
        "ramification": lambda: ramification_divisor_class(g, d),
        "c1d": lambda: hyperelliptic_pencil_locus_class(g, d),
        "subordinate": subordinate,
        "ek": ek,
    }


def _cmd_intersect(args) -> tuple[dict, int]:
    g = _require(args, "g", "intersect")
    d = _require(args, "d", "intersect")
    value = _ExpressionParser(args.expression, _intersect_env(args, g, d)).parse()
    if not isinstance(value, CycleClass):
        raise PreconditionError("expression evaluates to a scalar, not a class")
    if value.codim != d:
        raise PreconditionError(
            f"expression has codimension {value.codim}; top-degree evaluation on C_{d} needs {d}"
        )
    number = evaluate_top(value)
    document = {
        "command": "intersect",
        "inputs": {"expression": args.expression, "g": g, "d": d},
        "result": {"value": _rat(number), "codimension": value.codim},
        "provenance": [_PROVENANCE["poincare"]],
    }
    return document, 0


def _cmd_cone(args) -> tuple[dict, int]:
    g = _require(args, "g", "cone")
    d = _require(args, "d", "cone")
    ctx = CurveContext(g, d, CurveType(args.curve))
    inputs = {"g": g, "d": d, "curve": args.curve, "kind": args.kind}
    if args.kind == "effective":
        cone = effective_cone(ctx)
        result = {
            "status": cone.status.value,
            "upper_ray": _ray_document(cone.upper),
            "lower_ray": _ray_document(cone.lower),
        }
        if cone.lower_outer is not None:
            result["lower_outer_ray"] = _ray_document(cone.lower_outer)
        provenance = list(cone.provenance)
    else:
        facts = nef_facts(ctx)
        result = {
            "diagonal_nef_ray": None if facts.diagonal_nef_ray is None else _ray_document(facts.diagonal_nef_ray),
            "theta_boundary_ray": None if facts.theta_boundary_ray is None else _ray_document(facts.theta_boundary_ray),
            "gonality": facts.gonality,
            "theta_minus_x_ample": facts.theta_minus_x_ample,
        }
        provenance = list(facts.provenance)
    document = {"command": "cone", "inputs": inputs, "result": result, "provenance": provenance}
    return document, 0


def _cmd_volume(args) -> tuple[dict, int]:
    g = _require(args, "g", "volume")
    d = _require(args, "d", "volume")
    if args.t is None:
        raise UsageError("--t is required for volume")
    t = args.t
    inputs = {"g": g, "d": d, "curve": args.curve, "t": _rat(t)}
    if args.curve == "general":
        if d != g - 1:
            raise PreconditionError(
                f"the general-curve volume formula applies on C_(g-1); got d={d} with g={g}"
            )
        value = volume_general(g, t)
        interval = f"[0, {Fraction(1) + Fraction(1, g * g - g - 1)}]"
        provenance = [_PROVENANCE["volume-general"]]
    else:
        value = volume_hyperelliptic(g, d, t)
        interval = f"[0, {g - d + 1}]"
        provenance = [_PROVENANCE["volume-hyperelliptic"]]
    document = {
        "command": "volume",
        "inputs": inputs,
        "result": {"value": _rat(value), "proven_interval": interval},
        "provenance": provenance,
    }
    return document, 0


_SUITES = ("all", "combsum", "pencil-link", "orth", "diagonal", "dd-system", "volume")


def _run_suite(suite: str, bound: int | None) -> list[CheckReport]:
    if suite == "all":
        if bound is None:
            return run_all()
        if bound < 4:
            raise PreconditionError(f"--max must be at least 4 for the full suite (got {bound})")
        limits = CheckLimits(
            g_max=bound,
            diagonal_g_max=min(bound, 12),
            k_max=bound,
            m_max=bound,
            link_k_max=min(bound, 50),
        )
        return run_all(limits)
    if suite == "combsum":
        return [check_combsum(bound or 200)]
    if suite == "pencil-link":
        return [check_pencil_residual_link(bound or 50)]
    if suite == "orth":
        return [check_orth(bound or 100)]
    if suite == "diagonal":
        return [check_diagonal_agreement(bound or 12), diagonal_statement_discrepancy()]
    if suite == "dd-system":
        return [check_dd_system(bound or 20)]
    return [check_volume_identity(bound or 20)]


def _report_document(report: CheckReport) -> dict:
    entry: dict = {
        "name": report.name,
        "parameter_range": report.parameter_range,
        "status": report.status.value,
    }
    if report.note:
        entry["note"] = report.note
    if report.counterexample is not None:
        entry["counterexample"] = {
            "parameters": list(report.counterexample.parameters),
            "lhs": report.counterexample.lhs,
            "rhs": report.counterexample.rhs,
        }
    return entry


def _cmd_verify(args) -> tuple[dict, int]:
    reports = _run_suite(args.suite, args.max)
    ok = all_passed(reports)
    failures = sum(1 for report in reports if report.status is CheckStatus.FAIL)
    document = {
        "command": "verify",
        "inputs": {"suite": args.suite, "max": args.max},
        "result": {
            "reports": [_report_document(report) for report in reports],
            "failures": failures,
            "all_passed": ok,
        },
        "provenance": [_PROVENANCE["verify"]],
    }
    return document, 0 if ok else 1


# --------------------------------------------------------------------------
# rendering


def _render_text_value(value, indent: str, lines: list[str]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            inner = value[key]
            if isinstance(inner, (dict, list)):
                lines.append(f"{indent}{key}:")
                _render_text_value(inner, indent + "  ", lines)
            else:
                lines.append(f"{indent}{key}: {inner}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{indent}-")
                _render_text_value(item, indent + "  ", lines)
            else:
                lines.append(f"{indent}- {item}")
    else:
        lines.append(f"{indent}{value}")


def render(document: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(document, sort_keys=True, indent=2)
    lines: list[str] = [f"command: {document['command']}"]
    inputs = document.get("inputs") or {}
    if inputs:
        rendered = ", ".join(f"{key}={inputs[key]}" for key in sorted(inputs) if inputs[key] is not None)
        lines.append(f"inputs: {rendered}")
    result = document.get("result", {})
    if document["command"] == "verify":
        for entry in result["reports"]:
            status = entry["status"].upper()
            line = f"{status:24s} {entry['name']}  ({entry['parameter_range']})"
            if "counterexample" in entry:
                ce = entry["counterexample"]
                line += f"  at {tuple(ce['parameters'])}: {ce['lhs']} != {ce['rhs']}"
            lines.append(line)
        lines.append(f"failures: {result['failures']}")
        lines.append(f"all passed: {result['all_passed']}")
    else:
        _render_text_value(result, "", lines)
    for citation in document.get("provenance", []):
        lines.append(f"provenance: {citation}")
    return "\n".join(lines)


# --------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcd",
        description="Exact divisor classes, intersection numbers, cones, and volumes on symmetric powers of curves.",
    )
    parser.add_argument(
        "--format",
        choices=("json", "text"),
        default=None,
        help=f"output format (default: ${FORMAT_ENV_VAR} or text)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_common(sub, *, t_flag=False, curve_flag=False):
        # Also accepted after the subcommand; SUPPRESS keeps a root-level
        # --format from being clobbered by the subparser default.
        sub.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
        sub.add_argument("--g", type=int, default=None, help="genus")
        sub.add_argument("--d", type=int, default=None, help="symmetric power index")
        sub.add_argument("--n", type=int, default=None, help="degree of the linear series")
        sub.add_argument("--r", type=int, default=None, help="dimension of the linear series")
        sub.add_argument("--k", type=int, default=None, help="pencil parameter")
        if t_flag:
            sub.add_argument("--t", type=_parse_fraction, default=None, help="rational 'p/q' literal")
        if curve_flag:
            sub.add_argument(
                "--curve", choices=("general", "hyperelliptic"), default="general", help="curve type"
            )

    class_parser = subparsers.add_parser("class", help="print a named class from the catalog")
    class_parser.add_argument(
        "name",
        choices=(
            "subordinate",
            "small-diagonal",
            "bipartition-diagonal",
            "ramification",
            "e-k",
            "hyperelliptic-c1d",
        ),
    )
    add_common(class_parser)
    class_parser.add_argument(
        "--statement-variant",
        action="store_true",
        help="build the statement variant of the bipartition diagonal (documented discrepancy)",
    )
    class_parser.set_defaults(handler=_cmd_class)

    intersect_parser = subparsers.add_parser("intersect", help="evaluate a top-degree product expression")
    intersect_parser.add_argument("expression")
    add_common(intersect_parser)
    intersect_parser.set_defaults(handler=_cmd_intersect)

    cone_parser = subparsers.add_parser("cone", help="cone boundary data")
    add_common(cone_parser, curve_flag=True)
    cone_parser.add_argument("--kind", choices=("effective", "nef"), default="effective")
    cone_parser.set_defaults(handler=_cmd_cone)

    volume_parser = subparsers.add_parser("volume", help="exact volume of theta - t*x")
    add_common(volume_parser, t_flag=True, curve_flag=True)
    volume_parser.set_defaults(handler=_cmd_volume)

    verify_parser = subparsers.add_parser("verify", help="run the exact identity suite")
    verify_parser.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    verify_parser.add_argument("--suite", choices=_SUITES, default="all")
    verify_parser.add_argument("--max", type=int, default=None, help="sweep bound override")
    verify_parser.set_defaults(handler=_cmd_verify)

    return parser


def _resolve_format(explicit: str | None) -> str:
    if explicit in ("json", "text"):
        return explicit
    env = os.environ.get(FORMAT_ENV_VAR, "")
    return env if env in ("json", "text") else "text"


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fmt = _resolve_format(getattr(args, "format", None))
    try:
        document, code = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OutOfProvenDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(render(document, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
