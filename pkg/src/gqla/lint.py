"""Naming-convention checks.

Casing rules look at the first character only.  Each rule reports how many
names it applied to and how many violated it; a schema follows a rule
*consistently* when it applies and nothing violates it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import EmptyCorpus
from .sdl import EnumType, InputObjectType, InterfaceType, ObjectType, SchemaDocument

MUTATION_VERBS = ("create", "update", "delete", "upsert", "add")
DEFAULT_OFFENDER_CAP = 50

_ALL_CAPS = re.compile(r"^[A-Z0-9_]*[A-Z][A-Z0-9_]*$")

RULES = {
    "R1": "camelCase field names",
    "R2": "PascalCase type names",
    "R3": "PascalCase enum names",
    "R4": "ALL_CAPS enum values",
    "R5": "Input postfix",
    "R6": "Mutation field names",
    "R7": "snake_case field names",
}


def rule_status(applicable: int, violations: int) -> str:
    if applicable == 0:
        return "not_applicable"
    if violations == 0:
        return "consistent"
    if violations == applicable:
        return "none"
    return "partial"


@dataclass(frozen=True)
class RuleResult:
    rule: str
    applicable: int
    violations: int
    offenders: tuple[str, ...] = field(default=(), compare=False)

    @property
    def status(self) -> str:
        return rule_status(self.applicable, self.violations)

    def to_dict(self, cap: int = DEFAULT_OFFENDER_CAP) -> dict:
        return {
            "rule": self.rule,
            "name": RULES[self.rule],
            "applicable": self.applicable,
            "violations": self.violations,
            "status": self.status,
            "offenders": list(self.offenders[:cap]),
        }


@dataclass(frozen=True)
class LintReport:
    rules: dict[str, RuleResult]

    def __getitem__(self, rule: str) -> RuleResult:
        return self.rules[rule]

    def status(self, rule: str) -> str:
        return self.rules[rule].status

    def to_dict(self, cap: int = DEFAULT_OFFENDER_CAP) -> dict:
        return {rule: result.to_dict(cap) for rule, result in sorted(self.rules.items())}


def _first_lower(name: str) -> bool:
    return bool(name) and name[0].islower()


def _first_upper(name: str) -> bool:
    return bool(name) and name[0].isupper()


def _verb_boundary(name: str, end: int) -> bool:
    return end == len(name) or name[end].isupper() or name[end].isdigit()


def is_mutation_name(name: str, infix: bool = False) -> bool:
    """A verb followed by a camelCase boundary: ``createOffice`` yes, ``creates`` no.

    With ``infix`` a capitalized verb later in the name also counts
    (``bulkCreateUsers``).
    """
    for verb in MUTATION_VERBS:
        if name.startswith(verb) and _verb_boundary(name, len(verb)):
            return True
        if infix:
            for m in re.finditer(verb.capitalize(), name):
                if m.start() > 0 and _verb_boundary(name, m.end()):
                    return True
    return False


def _rule(rule: str, names: Iterable[str], ok: Callable[[str], bool]) -> RuleResult:
    names = list(names)
    bad = tuple(nm for nm in names if not ok(nm))
    return RuleResult(rule, len(names), len(bad), bad)


def lint(doc: SchemaDocument, infix_mutations: bool = False) -> LintReport:
    output_fields = [
        f"{t.name}.{f.name}" for t in doc.definitions if isinstance(t, (ObjectType, InterfaceType)) for f in t.fields
    ]

    def field_part(qualified: str) -> str:
        return qualified.split(".", 1)[1]

    types = [d for d in doc.type_definitions if not isinstance(d, EnumType)]
    enums = doc.of_kind(EnumType)
    enum_values = [f"{e.name}.{v.name}" for e in enums for v in e.values]
    inputs = doc.of_kind(InputObjectType)

    mutation_root = doc.root_type("mutation")
    mutation_fields = []
    if mutation_root is not None:
        for d in doc.definitions:
            if isinstance(d, ObjectType) and d.name == mutation_root:
                mutation_fields.extend(f"{d.name}.{f.name}" for f in d.fields)
                break

    rules = [
        _rule("R1", output_fields, lambda q: _first_lower(field_part(q))),
        _rule("R2", (d.name for d in types), _first_upper),
        _rule("R3", (e.name for e in enums), _first_upper),
        _rule("R4", enum_values, lambda q: bool(_ALL_CAPS.match(field_part(q)))),
        _rule("R5", (i.name for i in inputs), lambda nm: nm.endswith("Input")),
        _rule("R6", mutation_fields, lambda q: is_mutation_name(field_part(q), infix_mutations)),
        _rule("R7", output_fields, lambda q: "_" in field_part(q)),
    ]
    return LintReport({r.rule: r for r in rules})


def corpus_convention_summary(reports: Sequence[LintReport]) -> dict[str, dict]:
    """Per rule: share of schemas that follow it consistently, among those where it applies."""
    reports = list(reports)
    if not reports:
        raise EmptyCorpus("no lint reports")
    summary = {}
    for rule in RULES:
        applicable = [r for r in reports if r[rule].applicable > 0]
        consistent = sum(1 for r in applicable if r[rule].status == "consistent")
        summary[rule] = {
            "name": RULES[rule],
            "applicable_schemas": len(applicable),
            "consistent_schemas": consistent,
            "proportion": consistent / len(applicable) if applicable else "not_applicable",
        }
    return summary
