"""Command-line front end.

Subcommands
-----------
  roots      --type E6            dump a root system
  selftest   [--jobs N]           certification run: Jacobi, Killing, laws
  fixed      --chars SPEC...      fixed subalgebra of the given characters
  classify   --char SPEC          involution class and mu value
  realform   --gamma L1 L2 --theta L [--group G]
  theorem24  [--format F]         one-shot classification, verified
  survey     --theta L            real forms g^sigma for all builtin sigma

Character grammar (one shell argument per character):

  chi [m=M] [e1,e3,e4,e5,e6,e2]
      exponents mod M on the simple roots IN CHAIN ORDER
      alpha1, alpha3, alpha4, alpha5, alpha6 and then alpha2 last.
  su6sp1 [m=M] d=[d1,d2,d3,d4,d5,d6] y=Y
      diagonal special-unitary exponents plus the sp(1) exponent.

M defaults to the configured modulus (4, overridable through the
K4HOLO_MODULUS environment variable; builtin groups need 4 | M).
Element labels (x1, x2, x4, x5, y1, y3, y4, y5 and their products) resolve
inside the first builtin group containing them unless qualified as
"group:label" or pinned with --group.

Exit codes: 0 success/verified, 1 verification mismatch, 2 usage error.
stdout carries pure data; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys as _sys

from . import chevalley, pipeline
from .errors import EngineError, UsageError, VerificationError
from .realform import center_of_fixed, identify_real_form
from .reductive import classify_involution, fixed_subalgebra, mu
from .rootsys import build_root_system
from .toral import TorusCharacter, UnitaryPairData, character_from_simple_values, embed_su6_sp1

_FORMATS = ("json", "markdown", "plain")


def _configured_modulus() -> int:
    raw = os.environ.get("K4HOLO_MODULUS", "")
    if not raw:
        return pipeline.DEFAULT_MODULUS
    try:
        m = int(raw)
    except ValueError:
        raise UsageError(f"K4HOLO_MODULUS={raw!r} is not an integer")
    if m < 1:
        raise UsageError(f"K4HOLO_MODULUS must be >= 1, got {m}")
    return m


def _parse_vector(token: str, expect: int) -> tuple[int, ...]:
    if not (token.startswith("[") and token.endswith("]")):
        raise UsageError(f"expected a bracketed vector, got {token!r}")
    body = token[1:-1].strip()
    parts = [p.strip() for p in body.split(",")] if body else []
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"non-integer entry in vector {token!r}")
    if len(values) != expect:
        raise UsageError(f"expected {expect} entries in {token!r}, got {len(values)}")
    return values


def parse_char_spec(spec: str, default_modulus: int) -> TorusCharacter:
    """Parse one character spec; see the module docstring for the grammar."""
    tokens = spec.split()
    if not tokens:
        raise UsageError("empty character spec")
    kind, rest = tokens[0], tokens[1:]
    fields: dict[str, str] = {}
    positional: list[str] = []
    for tok in rest:
        if "=" in tok and not tok.startswith("["):
            key, _, val = tok.partition("=")
            if key in fields:
                raise UsageError(f"duplicate field {tok!r} in character spec")
            fields[key] = val
        else:
            positional.append(tok)

    def modulus() -> int:
        if "m" not in fields:
            return default_modulus
        try:
            m = int(fields["m"])
        except ValueError:
            raise UsageError(f"bad modulus token m={fields['m']!r}")
        if m < 1:
            raise UsageError(f"modulus must be >= 1, got m={m}")
        return m

    if kind == "chi":
        if len(positional) != 1 or set(fields) - {"m"}:
            raise UsageError(f"malformed chi spec {spec!r}")
        chain = _parse_vector(positional[0], 6)
        # chain order alpha1,alpha3,alpha4,alpha5,alpha6,alpha2 -> internal order
        exps = (chain[0], chain[5], chain[1], chain[2], chain[3], chain[4])
        return character_from_simple_values(exps, modulus())
    if kind == "su6sp1":
        if positional or set(fields) - {"m", "d", "y"}:
            raise UsageError(f"malformed su6sp1 spec {spec!r}")
        if "d" not in fields or "y" not in fields:
            raise UsageError(f"su6sp1 spec {spec!r} needs d=[...] and y=N")
        m = modulus()
        diag = _parse_vector(fields["d"], 6)
        try:
            y = int(fields["y"])
        except ValueError:
            raise UsageError(f"bad sp(1) token y={fields['y']!r}")
        return embed_su6_sp1(UnitaryPairData(m, diag, y))
    raise UsageError(f"unknown character kind {kind!r} (want chi or su6sp1)")


def _char_view(char: TorusCharacter) -> dict:
    return {"modulus": char.modulus, "exps": list(char.exps), "order": char.order}


def _emit(doc, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


def _resolve_group_element(label: str, groups, group_hint: str | None):
    gname = None
    elem = label
    if ":" in label:
        gname, elem = label.split(":", 1)
    if group_hint:
        if gname and gname != group_hint:
            raise UsageError(f"label {label!r} conflicts with --group {group_hint}")
        gname = group_hint
    if gname:
        if gname not in groups:
            raise UsageError(f"unknown builtin group {gname!r}")
        if elem not in groups[gname].labels:
            raise UsageError(f"group {gname} has no element {elem!r}")
        return gname, elem
    for name in pipeline.GROUP_NAMES:
        if elem in groups[name].labels:
            return name, elem
    raise UsageError(f"no builtin group has an element labelled {elem!r}")


def _cmd_roots(args) -> int:
    token = args.type.upper()
    if len(token) < 2 or token[0] not in "ADE" or not token[1:].isdigit():
        raise UsageError(f"bad type token {args.type!r} (want e.g. E6, A5, D4)")
    sys = build_root_system(token[0], int(token[1:]))
    doc = {
        "type": sys.label,
        "rank": sys.rank,
        "root_count": len(sys.roots),
        "cartan": [list(row) for row in sys.cartan],
        "simple_roots": [list(r) for r in sys.simple_roots],
        "highest_root": list(sys.highest_root),
        "roots": [list(r) for r in sorted(sys.roots)],
    }
    lines = [f"type: {sys.label}", f"rank: {sys.rank}",
             f"roots: {len(sys.roots)}",
             f"highest root: {list(sys.highest_root)}"]
    if args.verbose:
        lines += [str(list(r)) for r in sorted(sys.roots)]
    _emit(doc, args.format, lines)
    return 0


def _cmd_selftest(args) -> int:
    sys = build_root_system("E", 6)
    results: list[tuple[str, bool, str]] = []

    sc = chevalley.build_chevalley_basis(sys)
    results.append(("root_system", len(sys.roots) == 72,
                    f"{len(sys.roots)} roots, highest {list(sys.highest_root)}"))

    anti_ok = all(sc.n_table[(b, a)] == -v for (a, b), v in sc.n_table.items())
    results.append(("antisymmetry", anti_ok, f"{len(sc.n_table)} ordered pairs"))

    jac = chevalley.check_jacobi(sc, jobs=args.jobs)
    results.append(("jacobi", jac.ok,
                    f"{jac.triples_checked} triples, first violation {jac.first_violation}"))

    kappa = chevalley.killing_form(sc, ("h", 0), ("h", 0))
    direct = sum(sys.pairing(r, sys.simple_roots[0]) ** 2 for r in sys.roots)
    results.append(("killing_cartan", kappa == 48 and direct == kappa,
                    f"adjoint trace {kappa}, root-sum {direct}"))

    alpha1 = sys.simple_roots[0]
    neg = tuple(-c for c in alpha1)
    xpair = chevalley.killing_form(sc, ("x", alpha1), ("x", neg))
    results.append(("killing_root_pair", xpair == 24, f"kappa(X,X-) = {xpair}"))

    import random
    rng = random.Random(0)
    hom_ok = True
    for _ in range(20):
        chi = character_from_simple_values(tuple(rng.randrange(12) for _ in range(6)), 12)
        for a in sys.roots:
            for b in sys.roots:
                s = tuple(x + y for x, y in zip(a, b))
                if s in sys.roots:
                    if chi.evaluate(s) != (chi.evaluate(a) + chi.evaluate(b)) % chi.modulus:
                        hom_ok = False
    results.append(("character_homomorphism", hom_ok, "20 sampled characters"))

    groups = pipeline.builtin_groups(args.modulus)
    census = tuple(len(pipeline.sigma2_elements(groups[n], sys))
                   for n in pipeline.GROUP_NAMES)
    results.append(("involution_census", census == (1, 3, 3, 5), str(census)))

    if args.ntable_out:
        with open(args.ntable_out, "w") as fh:
            fh.write(chevalley.export_n_table(sc))
        print(f"wrote N table to {args.ntable_out}", file=_sys.stderr)

    ok = True
    for name, passed, detail in results:
        ok = ok and passed
        print(f"check {name}: {'PASS' if passed else 'FAIL'} ({detail})")
    return 0 if ok else 1


def _cmd_fixed(args) -> int:
    sys = build_root_system("E", 6)
    chars = [parse_char_spec(s, args.modulus) for s in args.chars]
    fs = fixed_subalgebra(chars, sys)
    doc = {
        "chars": [_char_view(c) for c in chars],
        "fixed_root_count": len(fs.fixed_roots),
        "type": fs.rtype.render(),
        "dim": fs.dim,
    }
    _emit(doc, args.format,
          [f"type: {fs.rtype.render()}", f"dim: {fs.dim}",
           f"fixed roots: {len(fs.fixed_roots)}"])
    return 0


def _cmd_classify(args) -> int:
    sys = build_root_system("E", 6)
    char = parse_char_spec(args.char, args.modulus)
    cls = classify_involution(char, sys)
    fs = fixed_subalgebra([char], sys)
    doc = {
        "char": _char_view(char),
        "class": cls.label,
        "mu": mu(char, sys),
        "fixed_dim": fs.dim,
        "fixed_type": fs.rtype.render(),
    }
    _emit(doc, args.format, [cls.label])
    return 0


def _cmd_realform(args) -> int:
    sys = build_root_system("E", 6)
    groups = pipeline.builtin_groups(args.modulus)
    g1name, g1 = _resolve_group_element(args.gamma[0], groups, args.group)
    g2name, g2 = _resolve_group_element(args.gamma[1], groups, g1name)
    tname, t = _resolve_group_element(args.theta, groups, g2name)
    group = groups[tname]
    theta = group.element(t)
    gamma = [group.element(g1), group.element(g2)]
    fs = fixed_subalgebra(gamma, sys)
    form = identify_real_form(fs, theta, sys)
    doc = {
        "group": tname,
        "gamma": [g1, g2],
        "theta": t,
        "compact_dual": fs.rtype.render(),
        "real_form": form.render(),
    }
    _emit(doc, args.format, [form.render()])
    return 0


def _cmd_theorem24(args) -> int:
    sys = build_root_system("E", 6)
    report = pipeline.classify_all(sys, args.modulus)
    if args.format == "markdown":
        print(pipeline.report_to_markdown(report), end="")
    else:
        doc = pipeline.report_to_dict(report, sys, args.modulus)
        if args.format == "json":
            print(json.dumps(doc, indent=2))
        else:
            for pair in report.distinct_pairs:
                print(pair)
            print(f"distinct pairs: {len(report.distinct_pairs)}")
            print(f"verified: {str(report.verified).lower()}")
    if not report.verified:
        print(f"MISMATCH missing={list(report.missing)} "
              f"unexpected={list(report.unexpected)}", file=_sys.stderr)
        return 1
    return 0


def _cmd_survey(args) -> int:
    sys = build_root_system("E", 6)
    result = pipeline.symmetric_pair_survey(args.theta, sys, args.modulus)
    doc = {
        "theta_group": result.theta_group,
        "theta": result.theta_label,
        "values": {g: {l: f.render("survey") for l, f in per.items()}
                   for g, per in result.values.items()},
    }
    lines = [f"theta: {result.theta_group}:{result.theta_label}"]
    for g, per in result.values.items():
        for l, f in per.items():
            lines.append(f"{g}:{l} -> {f.render('survey')}")
    _emit(doc, args.format, lines)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k4holo",
        description="Exact classification engine for Klein four symmetric "
                    "pairs of holomorphic type on e6(-14).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=_FORMATS, default="plain")
        p.add_argument("-v", "--verbose", action="count", default=0)

    p = sub.add_parser("roots", help="dump a root system")
    p.add_argument("--type", required=True, help="e.g. E6, A5, D4")
    common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("selftest", help="structure-constant certification")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ntable-out", default=None,
                   help="write the deterministic N-table dump here")
    common(p)
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("fixed", help="fixed subalgebra of characters")
    p.add_argument("--chars", nargs="*", default=[], metavar="SPEC")
    common(p)
    p.set_defaults(func=_cmd_fixed)

    p = sub.add_parser("classify", help="involution class of a character")
    p.add_argument("--char", required=True, metavar="SPEC")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("realform", help="real form of a Klein four fixed algebra")
    p.add_argument("--gamma", nargs=2, required=True, metavar="LABEL")
    p.add_argument("--theta", required=True, metavar="LABEL")
    p.add_argument("--group", default=None, choices=pipeline.GROUP_NAMES)
    common(p)
    p.set_defaults(func=_cmd_realform)

    p = sub.add_parser("theorem24", help="full classification run, verified")
    common(p)
    p.set_defaults(func=_cmd_theorem24)

    p = sub.add_parser("survey", help="symmetric-pair survey under one theta")
    p.add_argument("--theta", required=True, metavar="LABEL")
    common(p)
    p.set_defaults(func=_cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        args.modulus = _configured_modulus()
        if args.command in ("selftest",) and args.jobs < 1:
            raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=_sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=_sys.stderr)
        return 1
    except EngineError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
