"""
Command reports: a status, an ordered set of sections and the human
summary lines. Machine output goes through DRF serializers and the JSON
renderer so that the schema stays stable across runs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from branchings.confluence import Confluent, NotConfluent
from presentations.cells import Rule, ThreeCell

OK = 'OK'
FAIL = 'FAIL'
PARTIAL = 'PARTIAL'


@dataclass
class Report:
    command: str
    status: str = OK
    sections: dict[str, Any] = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    machine: bool = False

    def add(self, key: str, value: Any) -> 'Report':
        self.sections[key] = value
        return self

    def say(self, line: str) -> 'Report':
        self.lines.append(line)
        return self


class RuleSerializer(serializers.Serializer):
    name = serializers.CharField()
    lhs = serializers.SerializerMethodField()
    rhs = serializers.SerializerMethodField()

    def get_lhs(self, rule: Rule) -> str:
        return str(rule.lhs)

    def get_rhs(self, rule: Rule) -> str:
        return str(rule.rhs)


class ThreeCellSerializer(serializers.Serializer):
    name = serializers.CharField()
    source = serializers.SerializerMethodField()
    target = serializers.SerializerMethodField()

    def get_source(self, cell: ThreeCell) -> str:
        return str(cell.source)

    def get_target(self, cell: ThreeCell) -> str:
        return str(cell.target)


class OutcomeSerializer(serializers.Serializer):
    """One resolved (or unresolved) critical branching."""
    branching = serializers.SerializerMethodField()
    source = serializers.SerializerMethodField()
    outcome = serializers.SerializerMethodField()
    join = serializers.SerializerMethodField()
    normal_forms = serializers.SerializerMethodField()
    left = serializers.SerializerMethodField()
    right = serializers.SerializerMethodField()

    def get_branching(self, o) -> str:
        return f'({o.branching.step1}, {o.branching.step2})'

    def get_source(self, o) -> str:
        return str(o.branching.source)

    def get_outcome(self, o) -> str:
        return type(o).__name__

    def get_join(self, o):
        return str(o.resolution.join) if isinstance(o, Confluent) else None

    def get_normal_forms(self, o):
        return [str(o.nf1), str(o.nf2)] if isinstance(o, NotConfluent) else None

    def get_left(self, o):
        return str(o.resolution.left) if isinstance(o, Confluent) else None

    def get_right(self, o):
        return str(o.resolution.right) if isinstance(o, Confluent) else None


class ReportSerializer(serializers.Serializer):
    command = serializers.CharField()
    status = serializers.ChoiceField(choices=[OK, FAIL, PARTIAL])
    sections = serializers.JSONField()


def format_report(r: Report, machine: bool = False) -> str:
    if machine:
        return JSONRenderer().render(ReportSerializer(r).data).decode('utf-8')
    lines = [f'{r.command}: {r.status}']
    if r.lines:
        lines.extend(r.lines)
    else:
        for key, value in r.sections.items():
            lines.append(f'{key}: {value}')
    return '\n'.join(lines)
