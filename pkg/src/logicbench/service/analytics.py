"""Usage analytics: sessions per day under the 30-minute inactivity rule.

A session is a maximal run of one client's accesses whose consecutive gaps
stay below 30 minutes; it counts towards the day of its first access.
"""

from __future__ import annotations

from collections import defaultdict
from datetime import datetime, timezone
from typing import Iterable

SESSION_GAP_SECONDS = 30 * 60


def compute_usage(log: Iterable[tuple[str, float]]) -> dict[str, int]:
    """Map ISO day -> number of sessions started that day.

    ``log`` holds (client id, unix timestamp) pairs in any order; the result
    is invariant under permutation of the input.
    """
    by_client: dict[str, list[float]] = defaultdict(list)
    for client, ts in log:
        by_client[client].append(float(ts))
    report: dict[str, int] = defaultdict(int)
    for timestamps in by_client.values():
        timestamps.sort()
        session_start = None
        previous = None
        for ts in timestamps:
            if previous is None or ts - previous >= SESSION_GAP_SECONDS:
                session_start = ts
                day = datetime.fromtimestamp(session_start, tz=timezone.utc).date()
                report[day.isoformat()] += 1
            previous = ts
    return dict(sorted(report.items()))
