"""End-to-end classification of Klein four symmetric pairs of holomorphic type.

The four builtin rank-3 groups of commuting toral involutions are realised
through the su(6)+sp(1) embedding from explicit diagonal data; composite
names are resolved multiplicatively (in x1x4x5 the datum given is x1*x4, so
x4 = x1*(x1*x4); in y1y3y4 the data are y1*y3, y1*y4 and y4; in y3y4y5 they
are y3*y4, y5 and y3).  Candidate pairs (theta, Gamma) with theta a
Cartan-involution representative outside the Klein four subgroup Gamma are
enumerated exhaustively, their fixed subalgebras and real forms computed,
and the deduplicated result checked verbatim against the embedded golden
list of eight pairs.  Deduplication is by real-form type equality, not by
conjugacy: all raw candidates stay inspectable in the report.  Two of the
candidate pairs in y3y4y5 yield the same type; whether they are actually
conjugate is not decided here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigurationError, PreconditionError, ValidationError, VerificationError
from .realform import RealFormType, holomorphic_type_check, identify_real_form
from .reductive import ConjClass, classify_involution, fixed_subalgebra
from .rootsys import ReductiveType, RootSystem, build_root_system
from .toral import CharacterGroup, TorusCharacter, UnitaryPairData, embed_su6_sp1, generate_group

DEFAULT_MODULUS = 4

GROUP_NAMES = ("x1x2x4", "x1x4x5", "y1y3y4", "y3y4y5")

# Golden list of the eight pairs; the exact spelling is part of the contract.
GOLDEN_PAIRS = (
    "2su(2,1)+2c",
    "su(2,2)+2su(2)+c",
    "su(3,1)+su(1,1)+su(2)+c",
    "su(3,2)+2c",
    "su(2,1)+su(3)+2c",
    "su(4,1)+2c",
    "so(6,2)+2c",
    "2su(1,1)+su(4)+c",
)

# Real forms a single commuting involution can cut out of e6(-14).
SURVEY_FORMS = (
    "su(4,2)+su(2)",
    "su(5,1)+sl(2,R)",
    "so(8,2)+so(2)",
    "so*(10)+so(2)",
    "so(10)+so(2)",
)


def builtin_groups(modulus: int = DEFAULT_MODULUS) -> dict[str, CharacterGroup]:
    """The four rank-3 groups of commuting involutions, with element labels."""
    m = modulus
    if m % 4 != 0:
        raise ConfigurationError(
            f"builtin groups need a modulus divisible by 4, got {m}")
    q, h = m // 4, m // 2

    def emb(diag, sp1):
        return embed_su6_sp1(UnitaryPairData(m, diag, sp1))

    minus_one = emb((0,) * 6, h)                     # (I6, -1)
    i3_i3_i = emb((q, q, q, 3 * q, 3 * q, 3 * q), q)  # (diag(i,i,i,-i,-i,-i), i)
    i5_i = emb((q, q, q, q, q, 3 * q), q)             # (diag(i,i,i,i,i,-i), i)
    m2_p4 = emb((h, h, 0, 0, 0, 0), 0)                # (diag(-1,-1,1,1,1,1), 1)
    m4_p2 = emb((h, h, h, h, 0, 0), 0)                # (diag(-1,-1,-1,-1,1,1), 1)
    m22 = emb((h, h, 0, h, h, 0), 0)                  # (diag(-1,-1,1,-1,-1,1), 1)

    groups = {
        "x1x2x4": generate_group(
            [("x1", minus_one), ("x2", i3_i3_i), ("x4", m22)], "x1x2x4"),
        "x1x4x5": generate_group(
            [("x1", minus_one), ("x4", minus_one * m2_p4), ("x5", m4_p2)], "x1x4x5"),
        "y1y3y4": generate_group(
            [("y1", i3_i3_i * i5_i), ("y3", minus_one * i3_i3_i * i5_i), ("y4", i5_i)],
            "y1y3y4"),
        "y3y4y5": generate_group(
            [("y3", i5_i), ("y4", minus_one * i5_i), ("y5", m4_p2)], "y3y4y5"),
    }
    for name, group in groups.items():
        if group.order != 8 or group.rank != 3:
            raise ValidationError(
                f"builtin group {name} closed to order {group.order}, expected 8")
    return groups


def sigma2_elements(group: CharacterGroup, sys: RootSystem) -> tuple[str, ...]:
    """Labels of the group elements in the Cartan-involution class."""
    return tuple(label for label, char in group.nonidentity()
                 if classify_involution(char, sys) is ConjClass.SIGMA2)


@dataclass(frozen=True)
class KleinSubgroup:
    labels: tuple[str, str, str]
    gen_pair: tuple[str, str]
    chars: frozenset[TorusCharacter]


def klein_four_subgroups(group: CharacterGroup) -> tuple[KleinSubgroup, ...]:
    """All order-4 subgroups (seven, for a rank-3 group), canonically labelled."""
    nonid = group.nonidentity()
    pos = {label: i for i, (label, _) in enumerate(nonid)}
    seen: dict[frozenset[TorusCharacter], tuple[str, ...]] = {}
    for i, (la, ca) in enumerate(nonid):
        for lb, cb in nonid[i + 1:]:
            prod = ca * cb
            key = frozenset((ca, cb, prod))
            if key not in seen:
                members = sorted((la, lb, group.canonical_label(prod)),
                                 key=pos.__getitem__)
                seen[key] = tuple(members)
    subs = [KleinSubgroup(labels=labels, gen_pair=labels[:2], chars=key)
            for key, labels in seen.items()]
    subs.sort(key=lambda s: tuple(pos[l] for l in s.labels))
    return tuple(subs)


@dataclass(frozen=True)
class K4Candidate:
    group_name: str
    theta_label: str
    gamma_labels: tuple[str, str]
    gamma: CharacterGroup
    compact_dual: ReductiveType
    real_form: RealFormType
    maximal_compact: ReductiveType


@dataclass(frozen=True)
class K4Report:
    candidates: tuple[K4Candidate, ...]
    distinct_pairs: tuple[str, ...]
    counts: dict[str, int]
    verified: bool
    missing: tuple[str, ...]
    unexpected: tuple[str, ...]


def enumerate_candidates(group: CharacterGroup, sys: RootSystem) -> tuple[K4Candidate, ...]:
    """All (theta, Gamma) pairs of the group passing the four requirements.

    theta runs over the Cartan-involution-class elements, Gamma over the
    Klein four subgroups not containing theta; commutation is automatic on
    a shared torus and the holomorphic-type condition is asserted for every
    element of Gamma rather than assumed.
    """
    if group.rank != 3:
        raise PreconditionError(f"group {group.name} has rank {group.rank}, expected 3")
    out = []
    subgroups = klein_four_subgroups(group)
    for theta_label in sigma2_elements(group, sys):
        theta = group.element(theta_label)
        for sub in subgroups:
            if theta in sub.chars:
                continue
            for sigma in sub.chars:
                if not holomorphic_type_check(sigma, theta, sys):
                    raise VerificationError(
                        f"({group.name}, {theta_label}) fails the holomorphic-type "
                        f"condition on {sub.labels}")
            gamma = generate_group(
                [(l, group.element(l)) for l in sub.gen_pair],
                name=f"{group.name}<{','.join(sub.gen_pair)}>")
            fixed_gamma = fixed_subalgebra(sub.chars, sys)
            fixed_all = fixed_subalgebra(set(sub.chars) | {theta}, sys)
            out.append(K4Candidate(
                group_name=group.name,
                theta_label=theta_label,
                gamma_labels=sub.gen_pair,
                gamma=gamma,
                compact_dual=fixed_gamma.rtype,
                real_form=identify_real_form(fixed_gamma, theta, sys),
                maximal_compact=fixed_all.rtype,
            ))
    return tuple(out)


def classify_all(sys: RootSystem | None = None,
                 modulus: int = DEFAULT_MODULUS) -> K4Report:
    """Run the whole classification and verify it against the golden list."""
    if sys is None:
        sys = build_root_system("E", 6)
    groups = builtin_groups(modulus)
    candidates: list[K4Candidate] = []
    counts: dict[str, int] = {}
    for name in GROUP_NAMES:
        found = enumerate_candidates(groups[name], sys)
        counts[name] = len(found)
        candidates.extend(found)
    distinct = tuple(sorted({c.real_form.render() for c in candidates}))
    golden = set(GOLDEN_PAIRS)
    missing = tuple(sorted(golden - set(distinct)))
    unexpected = tuple(sorted(set(distinct) - golden))
    return K4Report(candidates=tuple(candidates), distinct_pairs=distinct,
                    counts=counts, verified=not missing and not unexpected,
                    missing=missing, unexpected=unexpected)


@dataclass(frozen=True)
class SurveyResult:
    theta_group: str
    theta_label: str
    values: dict[str, dict[str, RealFormType]]


def resolve_theta(theta_label: str, groups: dict[str, CharacterGroup],
                  sys: RootSystem) -> tuple[str, str, TorusCharacter]:
    """Resolve "label" or "group:label" to a Cartan-involution element."""
    gname = None
    label = theta_label
    if ":" in theta_label:
        gname, label = theta_label.split(":", 1)
        if gname not in groups:
            raise PreconditionError(f"unknown builtin group {gname!r}")
    for name in ([gname] if gname else GROUP_NAMES):
        group = groups[name]
        if label in group.labels:
            char = group.element(label)
            if classify_involution(char, sys) is ConjClass.SIGMA2:
                return name, label, char
    raise PreconditionError(
        f"{theta_label!r} is not a sigma2-class element of a builtin group")


def symmetric_pair_survey(theta_label: str, sys: RootSystem | None = None,
                          modulus: int = DEFAULT_MODULUS) -> SurveyResult:
    """Real form of the fixed algebra of every builtin involution, under theta.

    Values outside the five admissible symmetric-pair forms are a
    verification failure, not data.
    """
    if sys is None:
        sys = build_root_system("E", 6)
    groups = builtin_groups(modulus)
    gname, label, theta = resolve_theta(theta_label, groups, sys)
    values: dict[str, dict[str, RealFormType]] = {}
    for name in GROUP_NAMES:
        group = groups[name]
        per: dict[str, RealFormType] = {}
        for slabel, schar in group.nonidentity():
            form = identify_real_form(fixed_subalgebra([schar], sys), theta, sys)
            rendered = form.render("survey")
            if rendered not in SURVEY_FORMS:
                raise VerificationError(
                    f"survey value {rendered} for ({name}, {slabel}) is outside "
                    f"the admissible list {list(SURVEY_FORMS)}")
            per[slabel] = form
        values[name] = per
    return SurveyResult(theta_group=gname, theta_label=label, values=values)


def report_to_dict(report: K4Report, sys: RootSystem | None = None,
                   modulus: int = DEFAULT_MODULUS) -> dict:
    """JSON-ready view of a report; key order is part of the output contract."""
    if sys is None:
        sys = build_root_system("E", 6)
    groups = builtin_groups(modulus)
    group_items = []
    for name in GROUP_NAMES:
        group = groups[name]
        fixed = fixed_subalgebra([c for _, c in group.nonidentity()], sys)
        group_items.append({
            "name": name,
            "order": group.order,
            "elements": [l for l, _ in group.element_order],
            "sigma2_elements": list(sigma2_elements(group, sys)),
            "fixed_subalgebra": fixed.rtype.render(),
            "fixed_dim": fixed.dim,
            "candidates": report.counts.get(name, 0),
        })
    return {
        "groups": group_items,
        "candidates": [
            {
                "group": c.group_name,
                "theta": c.theta_label,
                "gamma": list(c.gamma_labels),
                "compact_dual": c.compact_dual.render(),
                "real_form": c.real_form.render(),
                "maximal_compact": c.maximal_compact.render(),
            }
            for c in report.candidates
        ],
        "distinct_pairs": list(report.distinct_pairs),
        "verified_against_theorem24": report.verified,
    }


def report_to_markdown(report: K4Report) -> str:
    """Markdown table mirroring the eight-pair layout of the golden list."""
    by_form: dict[str, list[K4Candidate]] = {}
    for c in report.candidates:
        by_form.setdefault(c.real_form.render(), []).append(c)
    lines = [
        "# Klein four symmetric pairs of holomorphic type for e6(-14)",
        "",
        "| # | subalgebra | representative (group; theta; Gamma) | candidates |",
        "|---|------------|---------------------------------------|------------|",
    ]
    for idx, form in enumerate(GOLDEN_PAIRS, 1):
        cands = by_form.get(form, [])
        if cands:
            rep = cands[0]
            where = f"{rep.group_name}; {rep.theta_label}; <{','.join(rep.gamma_labels)}>"
        else:
            where = "MISSING"
        lines.append(f"| {idx} | {form} | {where} | {len(cands)} |")
    extra = sorted(set(by_form) - set(GOLDEN_PAIRS))
    for form in extra:
        lines.append(f"| ? | {form} | UNEXPECTED | {len(by_form[form])} |")
    lines.append("")
    lines.append(f"verified: {str(report.verified).lower()}")
    return "\n".join(lines) + "\n"
