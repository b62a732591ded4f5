"""HTTP service, session persistence, and usage analytics."""

from .analytics import SESSION_GAP_SECONDS, compute_usage
from .app import create_app
from .store import AccessLog, SessionStore

__all__ = ["SESSION_GAP_SECONDS", "compute_usage", "create_app", "AccessLog", "SessionStore"]
