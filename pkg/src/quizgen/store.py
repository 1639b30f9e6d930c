"""Embedded file-backed record store with per-id revision history.

Each record lives at ``<root>/<kind>/<quoted id>/r<revision>.json`` as an
envelope of kind/id/revision/created_at plus the payload.  Writes are atomic
(temp file + rename) and serialized per record id; revisions only ever grow,
nothing is deleted, so review history stays auditable.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Optional
from urllib.parse import quote, unquote

KINDS = ("corpora", "drafts", "transcripts", "survey_responses")


class UnknownRecord(KeyError):
    def __init__(self, kind: str, record_id: str):
        super().__init__(f"{kind}/{record_id}")
        self.kind = kind
        self.record_id = record_id


@dataclass(frozen=True)
class StoreRecord:
    kind: str
    id: str
    revision: int
    created_at: str
    payload: dict


class Store:
    def __init__(self, root: str | Path, clock: Optional[Callable[[], float]] = None):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._clock = clock or time.time
        self._locks: dict[tuple[str, str], threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, kind: str, record_id: str) -> threading.Lock:
        key = (kind, record_id)
        with self._locks_guard:
            if key not in self._locks:
                self._locks[key] = threading.Lock()
            return self._locks[key]

    def _record_dir(self, kind: str, record_id: str) -> Path:
        if kind not in KINDS:
            raise ValueError(f"unknown record kind: {kind}")
        return self.root / kind / quote(record_id, safe="")

    @staticmethod
    def _revision_of(path: Path) -> int:
        return int(path.stem[1:])

    def put(self, kind: str, record_id: str, payload: dict) -> int:
        """Write a new revision; returns the revision number."""
        directory = self._record_dir(kind, record_id)
        with self._lock_for(kind, record_id):
            directory.mkdir(parents=True, exist_ok=True)
            existing = sorted(self._revision_of(p) for p in directory.glob("r*.json"))
            revision = (existing[-1] + 1) if existing else 1
            created_at = datetime.fromtimestamp(self._clock(), tz=timezone.utc).isoformat()
            envelope = {
                "kind": kind,
                "id": record_id,
                "revision": revision,
                "created_at": created_at,
                "payload": payload,
            }
            data = json.dumps(envelope, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
            fd, tmp_name = tempfile.mkstemp(dir=directory, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as handle:
                    handle.write(data)
                os.replace(tmp_name, directory / f"r{revision}.json")
            finally:
                if os.path.exists(tmp_name):
                    os.unlink(tmp_name)
            return revision

    def get(self, kind: str, record_id: str, revision: Optional[int] = None) -> StoreRecord:
        directory = self._record_dir(kind, record_id)
        if not directory.is_dir():
            raise UnknownRecord(kind, record_id)
        if revision is None:
            revisions = sorted(self._revision_of(p) for p in directory.glob("r*.json"))
            if not revisions:
                raise UnknownRecord(kind, record_id)
            revision = revisions[-1]
        path = directory / f"r{revision}.json"
        if not path.is_file():
            raise UnknownRecord(kind, f"{record_id}@r{revision}")
        envelope = json.loads(path.read_text(encoding="utf-8"))
        return StoreRecord(
            kind=envelope["kind"],
            id=envelope["id"],
            revision=envelope["revision"],
            created_at=envelope["created_at"],
            payload=envelope["payload"],
        )

    def record_bytes(self, kind: str, record_id: str, revision: Optional[int] = None) -> bytes:
        record = self.get(kind, record_id, revision)
        path = self._record_dir(kind, record_id) / f"r{record.revision}.json"
        return path.read_bytes()

    def payload_bytes(self, kind: str, record_id: str, revision: Optional[int] = None) -> bytes:
        """Canonical payload encoding, independent of envelope metadata."""
        record = self.get(kind, record_id, revision)
        return json.dumps(record.payload, indent=2, sort_keys=True, ensure_ascii=False).encode("utf-8")

    def exists(self, kind: str, record_id: str) -> bool:
        directory = self._record_dir(kind, record_id)
        return directory.is_dir() and any(directory.glob("r*.json"))

    def list_ids(self, kind: str) -> list[str]:
        base = self.root / kind
        if not base.is_dir():
            return []
        return sorted(unquote(p.name) for p in base.iterdir() if p.is_dir())

    def revisions(self, kind: str, record_id: str) -> list[int]:
        directory = self._record_dir(kind, record_id)
        if not directory.is_dir():
            return []
        return sorted(self._revision_of(p) for p in directory.glob("r*.json"))
