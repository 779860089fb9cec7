from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check.

    ``witness`` is ``None`` on a pass; on a failure it holds the first
    counterexample found in the checker's documented scan order.
    """

    name: str
    witness: Optional[Any] = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.passed


def first_failure(verdicts):
    """The first failing verdict, or a passing ``Verdict("all")``."""
    for v in verdicts:
        if not v.passed:
            return v
    return Verdict("all")
