"""Implicit completeness decisions with re-checkable certificates.

A system is implicitly complete exactly when, for each of the 54 classes, some
member of the system falls outside it.  Weak completeness (completeness after
adjoining the three constants) needs the same test only against the classes
that contain every constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classes import REGISTRY, ClassDescriptor, Violation, confirms, descriptor, evaluation_order, member
from .core import Function, System, check_arity_cap, constant

COMPLETE = "Complete"
INCOMPLETE = "Incomplete"


@dataclass(frozen=True)
class Escape:
    """A system member outside a class, with the reason."""

    function: Function
    violation: Violation


@dataclass(frozen=True)
class CompletenessVerdict:
    status: str
    witnesses: dict[str, Escape] = field(default_factory=dict)
    containing_classes: tuple[str, ...] = ()
    classes_checked: tuple[str, ...] = ()
    weak: bool = False

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def to_json(self, system: System | None = None) -> dict:
        out = {
            "status": self.status,
            "mode": "weak" if self.weak else "implicit",
            "classes_checked": len(self.classes_checked),
            "containing_classes": list(self.containing_classes),
            "witnesses": {
                cid: {"function": e.function.literal, "violation": e.violation.to_json()}
                for cid, e in self.witnesses.items()
            },
        }
        if system is not None:
            out["system"] = system.name
        return out


def _ordered(system: System) -> list[Function]:
    return sorted(system.functions, key=lambda f: (f.arity, f.table))


def _decide(system: System, classes: list[ClassDescriptor], weak: bool) -> CompletenessVerdict:
    for f in system:
        check_arity_cap(f.arity)
    funcs = _ordered(system)
    escapes: dict[str, Escape] = {}
    containing = []
    for d in classes:
        for f in funcs:
            v = d.violation(f)
            if v is not None:
                escapes[d.id] = Escape(f, v)
                break
        else:
            containing.append(d.id)
    rank = {d.id: i for i, d in enumerate(REGISTRY)}
    checked = tuple(sorted((d.id for d in classes), key=rank.__getitem__))
    if containing:
        return CompletenessVerdict(
            INCOMPLETE, {}, tuple(sorted(containing, key=rank.__getitem__)), checked, weak
        )
    ordered = {cid: escapes[cid] for cid in checked}
    return CompletenessVerdict(COMPLETE, ordered, (), checked, weak)


def check_implicit_completeness(system: System) -> CompletenessVerdict:
    return _decide(system, evaluation_order(), weak=False)


def weak_classes() -> list[ClassDescriptor]:
    return [d for d in evaluation_order() if d.contains_all_constants]


def check_weak_completeness(system: System) -> CompletenessVerdict:
    """Completeness of the system with the three constants adjoined."""
    return _decide(system, weak_classes(), weak=True)


def with_constants(system: System) -> System:
    return system.with_functions([constant(c) for c in (0, 1, 2)], name=f"{system.name}+constants")


def validate_verdict(system: System, verdict: CompletenessVerdict) -> bool:
    """Re-check every claim in a verdict without trusting how it was produced."""
    funcs = set(system.functions)
    if verdict.status == COMPLETE:
        if verdict.containing_classes or set(verdict.witnesses) != set(verdict.classes_checked):
            return False
        for cid, e in verdict.witnesses.items():
            if e.function not in funcs or member(e.function, cid) or not confirms(e.function, cid, e.violation):
                return False
        return True
    if verdict.status == INCOMPLETE:
        if not verdict.containing_classes:
            return False
        return all(
            cid in verdict.classes_checked and all(descriptor(cid).contains(f) for f in funcs)
            for cid in verdict.containing_classes
        )
    return False
