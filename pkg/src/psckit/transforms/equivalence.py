"""Behavioral equivalence harness for transformed snippets.

Both versions are executed in fresh namespaces and driven through the
same call specs; a call is equivalent when the two versions return equal
values or raise the same exception type.
"""

from __future__ import annotations

import inspect
from dataclasses import dataclass, field
from typing import Any, Sequence

from ..errors import HarnessError


@dataclass(frozen=True)
class CallSpec:
    function: str
    args: tuple = ()
    kwargs: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> "CallSpec":
        if "function" not in record:
            raise HarnessError("call spec missing 'function'")
        return cls(
            function=record["function"],
            args=tuple(record.get("args", ())),
            kwargs=dict(record.get("kwargs", {})),
        )


@dataclass(frozen=True)
class CallOutcome:
    spec: CallSpec
    equal: bool
    original: str
    transformed: str


@dataclass(frozen=True)
class EquivalenceReport:
    outcomes: tuple[CallOutcome, ...]

    @property
    def equivalent(self) -> bool:
        return all(o.equal for o in self.outcomes)

    def failures(self) -> list[CallOutcome]:
        return [o for o in self.outcomes if not o.equal]


def _load_namespace(snippet: str) -> dict[str, Any]:
    namespace: dict[str, Any] = {"__name__": "snippet"}
    exec(compile(snippet, "<snippet>", "exec"), namespace)  # noqa: S102 - bundled corpus code
    return namespace


def _invoke(namespace: dict[str, Any], spec: CallSpec) -> tuple[str, Any]:
    if spec.function not in namespace or not callable(namespace[spec.function]):
        raise HarnessError(f"snippet defines no callable {spec.function!r}")
    fn = namespace[spec.function]
    try:
        inspect.signature(fn).bind(*spec.args, **spec.kwargs)
    except TypeError as exc:
        raise HarnessError(f"call spec does not match {spec.function}(): {exc}") from exc
    try:
        return "value", fn(*spec.args, **spec.kwargs)
    except Exception as exc:  # noqa: BLE001 - exception type is the observable
        return "raise", type(exc).__name__


def check_equivalence(
    original: str,
    transformed: str,
    harness: Sequence[CallSpec | dict[str, Any]],
) -> EquivalenceReport:
    """Run every harness call against both versions and compare outcomes."""
    specs = [s if isinstance(s, CallSpec) else CallSpec.from_record(s) for s in harness]
    ns_original = _load_namespace(original)
    ns_transformed = _load_namespace(transformed)

    outcomes = []
    for spec in specs:
        kind_a, result_a = _invoke(ns_original, spec)
        kind_b, result_b = _invoke(ns_transformed, spec)
        if kind_a != kind_b:
            equal = False
        elif kind_a == "raise":
            equal = result_a == result_b
        else:
            equal = type(result_a) is type(result_b) and result_a == result_b
        outcomes.append(
            CallOutcome(
                spec=spec,
                equal=equal,
                original=f"{kind_a}:{result_a!r}",
                transformed=f"{kind_b}:{result_b!r}",
            )
        )
    return EquivalenceReport(outcomes=tuple(outcomes))
