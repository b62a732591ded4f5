"""File-backed session store: append-only event logs plus snapshots.

Every mutation appends the triggering event to ``events.jsonl`` and then
writes a full snapshot atomically (temp file + rename + fsync), so killing
the process between any two requests loses nothing; restart reloads the
snapshots byte-identically.  Submissions are serialized per session through
a lock (single-writer contract).
"""

from __future__ import annotations

import json
import os
import threading
import time
from pathlib import Path

from ..exercises.codec import decode_session, encode_session
from ..exercises.model import ExerciseSpec
from ..exercises.session import SessionState, new_session_id, start_session


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


class SessionStore:
    def __init__(self, data_dir, exercises: dict[str, ExerciseSpec]):
        self.root = Path(data_dir)
        self.sessions_dir = self.root / "sessions"
        self.sessions_dir.mkdir(parents=True, exist_ok=True)
        self.exercises = dict(exercises)
        self._sessions: dict[str, SessionState] = {}
        self._meta: dict[str, dict] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._global = threading.Lock()
        self._load_existing()

    # ---- loading ------------------------------------------------------------

    def _load_existing(self) -> None:
        for session_dir in sorted(self.sessions_dir.iterdir()) if self.sessions_dir.exists() else []:
            snapshot = session_dir / "snapshot.json"
            if not snapshot.is_file():
                continue
            doc = json.loads(snapshot.read_text(encoding="utf-8"))
            exercise = self.exercises.get(doc.get("exercise_id"))
            if exercise is None:
                continue  # exercise file no longer deployed
            session = decode_session(doc["session"], exercise)
            self._sessions[session.session_id] = session
            self._meta[session.session_id] = doc.get("meta", {})

    # ---- session lifecycle ----------------------------------------------------

    def lock_for(self, session_id: str) -> threading.Lock:
        with self._global:
            return self._locks.setdefault(session_id, threading.Lock())

    def create(self, exercise_id: str) -> SessionState:
        exercise = self.exercises.get(exercise_id)
        if exercise is None:
            raise KeyError(exercise_id)
        session = start_session(exercise, new_session_id())
        now = time.time()
        with self._global:
            self._sessions[session.session_id] = session
            self._meta[session.session_id] = {"created": now, "last_access": now}
        self._persist(session, {"type": "create", "exercise_id": exercise_id})
        return session

    def get(self, session_id: str) -> SessionState | None:
        session = self._sessions.get(session_id)
        if session is not None:
            self._meta[session_id]["last_access"] = time.time()
        return session

    def record_event(self, session: SessionState, event: dict) -> None:
        """Append ``event`` and snapshot the mutated session."""
        self._persist(session, event)

    def _persist(self, session: SessionState, event: dict) -> None:
        session_dir = self.sessions_dir / session.session_id
        session_dir.mkdir(parents=True, exist_ok=True)
        with open(session_dir / "events.jsonl", "a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, sort_keys=True) + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        doc = {
            "exercise_id": session.exercise.id,
            "session": encode_session(session),
            "meta": self._meta.get(session.session_id, {}),
        }
        _atomic_write(session_dir / "snapshot.json", json.dumps(doc, sort_keys=True))

    def events_path(self, session_id: str) -> Path:
        return self.sessions_dir / session_id / "events.jsonl"


class AccessLog:
    """Append-only (client id, timestamp) log for usage analytics."""

    def __init__(self, data_dir):
        self.path = Path(data_dir) / "access.jsonl"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def record(self, client_id: str, timestamp: float | None = None) -> None:
        entry = {"client": client_id, "ts": timestamp if timestamp is not None else time.time()}
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry, sort_keys=True) + "\n")

    def entries(self) -> list[tuple[str, float]]:
        if not self.path.is_file():
            return []
        out = []
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                doc = json.loads(line)
                out.append((str(doc["client"]), float(doc["ts"])))
        return out
