"""Command-line front end.

Subcommands: ``compute`` (multiply / coproduct / antipode on JSON
elements), ``verify`` (the exhaustive suites), ``enumerate``
(compositions, toggle-free set compositions, descent classes), and
``characters`` (check / convolve / invert constant characters given as
expressions).  Exit codes: 0 success, 1 verification or morphism
failure, 2 usage or parse error, 3 invalid insertion/pairing triple.
"""

from __future__ import annotations

import argparse
import json
import sys

from .antipode import (antipode_all_setcomps, antipode_closed,
                       antipode_oracle, antipode_toggle_free)
from .characters import (NotAMorphism, check_morphism, constant_character,
                         convolve, inverse)
from .combinatorics import compositions, toggle_free
from .hopf import HopfContext, PairingNotOne
from .nsym import InconsistentTag, descent_embedding, verify_nsym_rules
from .serialize import (ParseError, character_to_dict, element_from_dict,
                        element_to_dict, fraction_to_str, jsonable,
                        parse_expression, square_to_dict, theory_from_dict)
from .theory import TheoryError, cyclic4, two_dim
from .verify import (verify_all, verify_antipode_equivalence, verify_axioms,
                     verify_characters)

_BOUNDS = {"compositions": 16, "toggle_free": 8, "descent_class": 7}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", choices=("twodim", "cyclic4"),
                        default="twodim", help="built-in character table")
    common.add_argument("--q", type=int, default=2,
                        help="group order for --base twodim")
    common.add_argument("--theory-file",
                        help="JSON character table (overrides --base)")
    common.add_argument("--iota", default="one",
                        help="insertion element expression")
    common.add_argument("--alpha", default="one",
                        help="left pairing element expression")
    common.add_argument("--beta", default="one",
                        help="right pairing element expression")
    common.add_argument("--max-degree", type=int, default=4)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int,
                        help="enable randomized spot checks with this seed")
    common.add_argument("--out", help="write output to this file")

    parser = argparse.ArgumentParser(
        prog="hopftower",
        description="Exact graded Hopf structures on words over a "
                    "character basis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common])
    p.add_argument("action", choices=("multiply", "coproduct", "antipode"))
    p.add_argument("--x", required=True,
                   help="element JSON (inline, or @path)")
    p.add_argument("--y", help="second element for multiply")
    p.add_argument("--cross-check", action="store_true",
                   help="antipode only: recompute via all four routes")

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--suite", required=True,
                   choices=("axioms", "antipode_equiv", "nsym",
                            "characters", "all"))

    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("what",
                   choices=("compositions", "toggle_free", "descent_class"))
    p.add_argument("--n", type=int, help="degree to enumerate")
    p.add_argument("--mu", help="comma-separated composition parts")

    p = sub.add_parser("characters", parents=[common])
    p.add_argument("action", choices=("check", "convolve", "invert"))
    p.add_argument("--psi", required=True,
                   help="expression for the first constant character")
    p.add_argument("--gamma",
                   help="expression for the second constant character")
    return parser


def _err(message):
    print(message, file=sys.stderr)


def _build_basis(args):
    if args.theory_file:
        try:
            with open(args.theory_file, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read theory file: {exc}") from exc
        return theory_from_dict(data), {"base": "custom"}
    if args.base == "cyclic4":
        return cyclic4(), {"base": "cyclic4"}
    return two_dim(args.q), {"base": "twodim", "q": args.q}


def _names(args, basis):
    aliases = {"reg": basis.reg}
    if "one" not in basis.labels:
        aliases["one"] = basis.one
    scalars = {}
    if not args.theory_file and args.base == "twodim":
        scalars["q"] = args.q
        aliases["beta_star"] = (basis.reg - basis.one) / (args.q - 1)
    return scalars, aliases


def _build_context(args, basis):
    scalars, aliases = _names(args, basis)
    iota = parse_expression(args.iota, basis, scalars, aliases)
    alpha = parse_expression(args.alpha, basis, scalars, aliases)
    beta = parse_expression(args.beta, basis, scalars, aliases)
    return HopfContext(basis, iota, alpha, beta)


def _load_element(arg, basis, tag):
    if arg.startswith("@"):
        try:
            with open(arg[1:], encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read element file: {exc}") from exc
    else:
        text = arg
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad element JSON: {exc}") from exc
    if isinstance(data, dict):
        if "base" in data and data["base"] != tag["base"]:
            raise ParseError(
                f"element base {data['base']!r} does not match the "
                f"configured base {tag['base']!r}")
        if "q" in data and "q" in tag and data["q"] != tag["q"]:
            raise ParseError(
                f"element q {data['q']!r} does not match --q {tag['q']!r}")
    return element_from_dict(data, basis)


def _cmd_compute(args, basis, tag):
    ctx = _build_context(args, basis)
    x = _load_element(args.x, basis, tag)
    if args.action == "multiply":
        if args.y is None:
            raise ParseError("multiply needs --y")
        y = _load_element(args.y, basis, tag)
        return 0, element_to_dict(ctx.product(x, y), basis, tag)
    if args.action == "coproduct":
        return 0, square_to_dict(ctx.coproduct(x), basis, tag)
    result = antipode_closed(ctx, x)
    if args.cross_check:
        for name, route in (("all_setcomps", antipode_all_setcomps),
                            ("toggle_free", antipode_toggle_free),
                            ("oracle", antipode_oracle)):
            other = route(ctx, x)
            if other != result:
                return 1, {
                    "agreed": False,
                    "variant": name,
                    "closed": element_to_dict(result, basis, tag),
                    "other": element_to_dict(other, basis, tag),
                }
    payload = element_to_dict(result, basis, tag)
    if args.cross_check:
        payload["cross_checked"] = True
    return 0, payload


def _has_failure(report):
    if isinstance(report, dict):
        if report.get("first_failure") is not None:
            return True
        return any(_has_failure(v) for v in report.values()
                   if isinstance(v, dict))
    return False


def _cmd_verify(args, basis, tag):
    ctx = _build_context(args, basis)
    n = args.max_degree
    spots = 8 if args.seed is not None else 0
    if args.suite == "axioms":
        report = verify_axioms(ctx, n, seed=args.seed, spot_checks=spots)
    elif args.suite == "antipode_equiv":
        report = verify_antipode_equivalence(ctx, n)
    elif args.suite == "nsym":
        report = verify_nsym_rules(ctx, n)
    elif args.suite == "characters":
        report = verify_characters(ctx, n)
    else:
        report = verify_all(ctx, n)
    return (1 if _has_failure(report) else 0), report


def _parse_mu(text):
    if not text:
        raise ParseError("descent_class needs --mu, e.g. --mu 2,1")
    try:
        mu = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad composition {text!r}") from exc
    if not mu or any(p < 1 for p in mu):
        raise ParseError(f"bad composition {text!r}")
    return mu


def _cmd_enumerate(args):
    what = args.what
    bound = _BOUNDS[what]
    if what == "descent_class":
        mu = _parse_mu(args.mu)
        if sum(mu) > bound:
            raise ParseError(
                f"sum(mu) = {sum(mu)} exceeds the bound {bound}")
        image = descent_embedding(mu, bound=bound)
        return 0, [{"perm": list(w), "coeff": "1"} for w in image]
    if args.n is None:
        raise ParseError(f"{what} needs --n")
    if not 1 <= args.n <= bound:
        raise ParseError(f"--n must be between 1 and {bound}")
    if what == "compositions":
        return 0, [list(mu) for mu in compositions(args.n)]
    return 0, [[list(block) for block in A] for A in toggle_free(args.n)]


def _cmd_characters(args, basis, tag):
    ctx = _build_context(args, basis)
    scalars, aliases = _names(args, basis)
    n = args.max_degree
    psi = constant_character(
        ctx, parse_expression(args.psi, basis, scalars, aliases), n)
    if args.action == "check":
        bad = check_morphism(psi)
        if bad is None:
            return 0, {"multiplicative": True}
        return 1, {"multiplicative": False,
                   "degree": bad[0], "split": bad[1],
                   "lhs": bad[2], "rhs": bad[3]}
    if args.action == "convolve":
        if args.gamma is None:
            raise ParseError("convolve needs --gamma")
        gamma = constant_character(
            ctx, parse_expression(args.gamma, basis, scalars, aliases), n)
        return 0, character_to_dict(convolve(psi, gamma), basis, tag)
    return 0, character_to_dict(inverse(psi), basis, tag)


def _render_text(data, indent=0):
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for key in data:
            value = data[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
        return "\n".join(lines)
    if isinstance(data, list):
        lines = []
        for value in data:
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}- {value}")
        return "\n".join(lines) if lines else f"{pad}(empty)"
    return f"{pad}{data}"


def _emit(payload, args):
    data = jsonable(payload)
    if args.format == "json":
        text = json.dumps(data, indent=2, sort_keys=True)
    else:
        text = _render_text(data)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "enumerate":
            code, payload = _cmd_enumerate(args)
        else:
            basis, tag = _build_basis(args)
            if args.command == "compute":
                code, payload = _cmd_compute(args, basis, tag)
            elif args.command == "verify":
                code, payload = _cmd_verify(args, basis, tag)
            else:
                code, payload = _cmd_characters(args, basis, tag)
    except ParseError as exc:
        _err(f"error: {exc}")
        return 2
    except PairingNotOne as exc:
        _err(f"error: {exc}")
        return 3
    except NotAMorphism as exc:
        _err(f"error: {exc}")
        return 1
    except InconsistentTag as exc:
        _err(f"error: {exc}")
        return 2
    except TheoryError as exc:
        _err(f"error: {exc}")
        return 2
    except ValueError as exc:
        _err(f"error: {exc}")
        return 2
    _emit(payload, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
