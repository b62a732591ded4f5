"""logicbench: an interactive logic-teaching engine.

Composable educational tasks for propositional, modal, and first-order
logic, step-verified reasoning calculi, and declaratively configured
multi-level feedback, exposed as a library, HTTP service, and CLI.
"""

__version__ = "0.1.0"

from . import calculi, exercises, feedback, formulas, reasoning, semantics

__all__ = ["calculi", "exercises", "feedback", "formulas", "reasoning", "semantics"]
