"""
Completeness, consistency and integrity checks over a DomainModel.

Findings are data: checking never raises, so a model read leniently can be
reported on in full.
"""

from collections import Counter
from dataclasses import dataclass

import structlog

from amcmpy.constants.project import SQL_RESERVED
from amcmpy.core.exceptions import ModelError
from amcmpy.model.formula import referenced_attributes, referenced_objects
from amcmpy.model.operations import comprehend
from amcmpy.translator.naming import column_owners, domain_table, table_owners

logger = structlog.get_logger(__name__)

ERROR = 'error'
WARNING = 'warning'


@dataclass(frozen=True, slots=True)
class Finding:
    severity: str
    code: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity} {self.code} {self.subject}: {self.message}"


@dataclass(frozen=True, slots=True)
class IntegrityReport:
    findings: tuple = ()

    @property
    def errors(self) -> list:
        return [f for f in self.findings if f.severity == ERROR]

    @property
    def warnings(self) -> list:
        return [f for f in self.findings if f.severity == WARNING]

    @property
    def verdict(self) -> str:
        return 'fail' if self.errors else 'pass'

    @property
    def passed(self) -> bool:
        return not self.errors

    def codes(self) -> list:
        return [f.code for f in self.findings]

    def summary(self) -> str:
        return f"{len(self.errors)} errors, {len(self.warnings)} warnings"

    def lines(self) -> list:
        return [str(f) for f in self.findings] + [self.summary()]


class IntegrityChecker:

    def __init__(self, model) -> None:
        self.model = model
        self.findings = []

    def add(self, severity: str, code: str, subject: str, message: str) -> None:
        self.findings.append(Finding(severity, code, subject, message))

    def run(self) -> IntegrityReport:
        self.check_concepts()
        self.check_domains()
        self.check_individuals()
        self.check_membership()
        self.check_objects()
        self.check_tables()
        self.check_columns()
        report = IntegrityReport(tuple(self.findings))
        logger.debug("integrity_checked", verdict=report.verdict,
                     errors=len(report.errors), warnings=len(report.warnings))
        return report

    # -- completeness --

    def check_concepts(self) -> None:
        for concept in self.model.concepts.values():
            if concept.domain_name not in self.model.domains:
                self.add(ERROR, 'completeness.unknown-domain', concept.name,
                         f"ranges over undeclared domain '{concept.domain_name}'")

    def check_domains(self) -> None:
        for name, domain in self.model.domains.items():
            if not self.model.individuals_of(name):
                self.add(WARNING, 'completeness.empty-domain', name, "no individuals are declared")
            if not domain.membership:
                self.add(WARNING, 'completeness.no-states', name, "membership is not given at any state")

    def check_individuals(self) -> None:
        for individual in self.model.individuals.values():
            present = dict(individual.attributes)
            for concept in self.model.concepts_over(individual.domain):
                for function in concept.function_names:
                    if (concept.name, function) not in present:
                        self.add(ERROR, 'completeness.missing-attribute',
                                 f"{individual.id}:{concept.name}.{function}", "attribute has no value")
            for (concept_name, function), literal in individual.attributes:
                subject = f"{individual.id}:{concept_name}.{function}"
                concept = self.model.concepts.get(concept_name)
                if concept is None or function not in concept.function_names:
                    self.add(ERROR, 'consistency.unknown-attribute', subject, "no such concept function")
                elif concept.domain_name != individual.domain:
                    self.add(ERROR, 'consistency.unknown-attribute', subject,
                             f"concept ranges over '{concept.domain_name}', not '{individual.domain}'")
                elif literal.tag != concept.value_type:
                    self.add(ERROR, 'consistency.type-conflict', subject,
                             f"expected {concept.value_type}, got {literal.tag}")

    # -- integrity --

    def check_membership(self) -> None:
        for name, domain in self.model.domains.items():
            for state, members in domain.membership:
                for ident in sorted(members):
                    individual = self.model.individuals.get(ident)
                    if individual is None or individual.domain != name:
                        self.add(ERROR, 'integrity.unknown-member', f"{name}@{state}:{ident}",
                                 "member is not an individual of the domain")

    # -- level objects --

    def level_of(self, name: str, seen=()) -> int | None:
        """Level recomputed from base chains alone; None when a base is unknown."""
        if name in self.model.domains:
            return 0
        obj = self.model.objects.get(name)
        if obj is None or name in seen:
            return None
        base = self.level_of(obj.base, seen + (name,))
        return None if base is None else base + 1

    def dangling(self, obj) -> list:
        missing = []
        if obj.base not in self.model.domains and obj.base not in self.model.objects:
            missing.append(obj.base)
        if obj.state not in self.model.states:
            missing.append(f"state {obj.state}")
        for concept, function in referenced_attributes(obj.defining_formula):
            concept_decl = self.model.concepts.get(concept)
            if concept_decl is None or function not in concept_decl.function_names:
                missing.append(f"{concept}.{function}")
        missing.extend(ref for ref in referenced_objects(obj.defining_formula) if ref not in self.model.objects)
        return missing

    def check_objects(self) -> None:
        for obj in self.model.objects.values():
            missing = self.dangling(obj)
            for reference in missing:
                self.add(ERROR, 'integrity.unknown-reference', obj.name, f"refers to undeclared {reference}")
            level = self.level_of(obj.name)
            if level is not None and level != obj.level:
                self.add(ERROR, 'consistency.level-index', obj.name,
                         f"declared at level {obj.level} but its base chain gives level {level}")
            if level is None:
                continue
            for ref in referenced_objects(obj.defining_formula):
                ref_level = self.level_of(ref)
                if ref_level is not None and ref_level >= level:
                    self.add(ERROR, 'consistency.stratification', obj.name,
                             f"level {level} definition references '{ref}' at level {ref_level}")
            if not missing:
                self.check_extension(obj)
            if obj.unique and len(obj.extension) != 1:
                self.add(ERROR, 'integrity.not-unique', obj.name,
                         f"{len(obj.extension)} elements satisfy a unique definition")

    def check_extension(self, obj) -> None:
        others = self.model.evolve(objects={k: v for k, v in self.model.objects.items() if k != obj.name})
        try:
            fresh = comprehend(others, obj.base, obj.defining_formula, obj.state, obj.name, stratified=False)
        except ModelError as e:
            self.add(ERROR, 'consistency.stale-extension', obj.name, f"extension cannot be recomputed: {e}")
            return
        if fresh.extension != obj.extension:
            self.add(ERROR, 'consistency.stale-extension', obj.name,
                     f"stored extension has {len(obj.extension)} elements, recomputed {len(fresh.extension)}")

    # -- relational image --

    def check_tables(self) -> None:
        owners = table_owners(self.model)
        counts = Counter(table for table, _ in owners)
        for table, count in counts.items():
            if count > 1:
                claimants = [owner for name, owner in owners if name == table]
                self.add(ERROR, 'consistency.table-collision', table,
                         f"claimed by {', '.join(claimants)}")
        for table, owner in owners:
            if table.lower() in SQL_RESERVED:
                self.add(ERROR, 'consistency.reserved-word', table,
                         f"table of {owner} is an SQL reserved word")

    def check_columns(self) -> None:
        for domain in self.model.domains:
            table = domain_table(domain)
            owners = column_owners(self.model, domain)
            counts = Counter(column for column, _ in owners)
            for column, count in counts.items():
                if count > 1:
                    claimants = [owner for name, owner in owners if name == column]
                    self.add(ERROR, 'consistency.column-collision', f"{table}.{column}",
                             f"claimed by {', '.join(claimants)}")
            for column in counts:
                if column.lower() in SQL_RESERVED:
                    self.add(ERROR, 'consistency.reserved-word', f"{table}.{column}",
                             "column is an SQL reserved word")


def check_integrity(model) -> IntegrityReport:
    return IntegrityChecker(model).run()
