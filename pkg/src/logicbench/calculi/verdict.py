"""Step verdicts returned by every proof-state operation.

Accepted steps come with a new state; rejected steps return the old state
unchanged, a machine-readable reason code, a human message, and a locus
(node id, cell, or pair) for the UI to highlight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

# reason codes
UNKNOWN_NODE = "unknown_node"
UNKNOWN_BRANCH = "unknown_branch"
BRANCH_CLOSED = "branch_closed"
NOT_ON_BRANCH = "not_on_branch"
RULE_MISMATCH = "rule_mismatch"
DUPLICATE_APPLICATION = "duplicate_application"
NO_ACCESSIBLE_PREFIX = "no_accessible_prefix"
BOX_TARGET_REQUIRED = "box_target_required"
PREFIX_NOT_ACCESSIBLE = "prefix_not_accessible"
NOT_COMPLEMENTARY = "not_complementary"
PREFIX_MISMATCH = "prefix_mismatch"
TERMINAL_CLAIM_MADE = "terminal_claim_made"
WRONG_CONCLUSION = "wrong_conclusion"
ALREADY_MARKED = "already_marked"
PREMISE_UNMARKED = "premise_unmarked"
FIXPOINT_INCOMPLETE = "fixpoint_incomplete"
NO_FIRING_GOAL_CLAUSE = "no_firing_goal_clause"
UNKNOWN_CLAUSE = "unknown_clause"
UNKNOWN_PARENT = "unknown_parent"
PIVOT_ABSENT = "pivot_absent"
RESOLVENT_MISMATCH = "resolvent_mismatch"
PAIR_ABSENT = "pair_absent"
JUSTIFICATION_FAILS = "justification_fails"
PAIRS_REMAINING = "pairs_remaining"
CLAIM_MISMATCH = "claim_mismatch"
WRONG_CELL = "wrong_cell"
INVALID_CLAIM = "invalid_claim"


@dataclass(frozen=True)
class StepVerdict:
    accepted: bool
    reason: str | None = None
    message: str | None = None
    locus: Any = None
    details: Mapping[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "accepted" if self.accepted else "rejected"


def accepted(**details) -> StepVerdict:
    return StepVerdict(True, details=details)


def rejected(reason: str, message: str, locus=None, **details) -> StepVerdict:
    return StepVerdict(False, reason=reason, message=message, locus=locus, details=details)
