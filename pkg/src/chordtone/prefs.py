"""File-backed like/dislike counters keyed by shape fingerprint.

A single JSON file holds all counters; writes go to a temp file in the
same directory and are atomically renamed over the old one. Reads hand
out plain-dict snapshots, so an in-flight generation never sees a torn
update from concurrent feedback.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
import threading
from pathlib import Path

from .errors import PreferenceFileError

FORMAT_VERSION = 1
FINGERPRINT_RE = re.compile(r"^[0-9a-f]{16}$")
VERDICTS = ("like", "dislike")


def is_valid_fingerprint(text: str) -> bool:
    return bool(FINGERPRINT_RE.fullmatch(text))


class PreferenceStore:
    """Durable map of shape fingerprint -> (likes, dislikes)."""

    def __init__(self, path: str | Path):
        self._path = Path(path)
        self._lock = threading.Lock()
        self._entries: dict[str, tuple[int, int]] = {}
        if self._path.exists():
            try:
                raw = json.loads(self._path.read_text(encoding="utf-8"))
                for fingerprint, counts in raw.get("entries", {}).items():
                    self._entries[fingerprint] = (
                        int(counts.get("likes", 0)),
                        int(counts.get("dislikes", 0)),
                    )
            except (OSError, ValueError, AttributeError) as exc:
                raise PreferenceFileError(
                    f"cannot read preference file {self._path}: {exc}"
                ) from exc

    @property
    def path(self) -> Path:
        return self._path

    def snapshot(self) -> dict[str, tuple[int, int]]:
        """Immutable point-in-time copy of all counters."""
        with self._lock:
            return dict(self._entries)

    def counters(self, fingerprint: str) -> tuple[int, int]:
        with self._lock:
            return self._entries.get(fingerprint, (0, 0))

    def add(self, fingerprint: str, verdict: str) -> tuple[int, int]:
        """Apply one like/dislike and persist; returns the updated counters."""
        if verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}, got {verdict!r}")
        with self._lock:
            likes, dislikes = self._entries.get(fingerprint, (0, 0))
            if verdict == "like":
                likes += 1
            else:
                dislikes += 1
            self._entries[fingerprint] = (likes, dislikes)
            self._write_locked()
            return likes, dislikes

    def _write_locked(self) -> None:
        payload = {
            "formatVersion": FORMAT_VERSION,
            "entries": {
                fingerprint: {"likes": likes, "dislikes": dislikes}
                for fingerprint, (likes, dislikes) in sorted(self._entries.items())
            },
        }
        try:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp_name = tempfile.mkstemp(
                prefix=self._path.name, dir=self._path.parent
            )
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(payload, handle, indent=2)
            os.replace(tmp_name, self._path)
        except OSError as exc:
            raise PreferenceFileError(
                f"cannot write preference file {self._path}: {exc}"
            ) from exc
