"""Append-only JSON-lines result cache."""

from __future__ import annotations

import json
import os
import time
from pathlib import Path

# Bump whenever a formula changes so stale entries stop matching.
CODE_VERSION = "0.1.0+formulas.1"
CACHE_ENV = "QAOA_THRESHOLD_CACHE"


def _key(algorithm: str, D: int, params: dict) -> str:
    return json.dumps([algorithm, int(D), params, CODE_VERSION], sort_keys=True, separators=(",", ":"))


class ResultCache:
    """Entries are ``{"key": ..., "value": ..., "timestamp": ...}``, one per line.

    Only the owning process writes. Later lines win on duplicate keys. Floats are
    stored with ``repr`` precision, so hits are bit-identical to the original values.
    """

    def __init__(self, path):
        self.path = Path(path)
        self._entries: dict[str, dict] = {}
        if self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        entry = json.loads(line)
                    except json.JSONDecodeError:
                        continue  # torn trailing write
                    self._entries[entry["key"]] = entry["value"]

    @classmethod
    def from_env(cls, path=None):
        path = path or os.environ.get(CACHE_ENV)
        return cls(path) if path else None

    def get(self, algorithm: str, D: int, params: dict):
        return self._entries.get(_key(algorithm, D, params))

    def put(self, algorithm: str, D: int, params: dict, value) -> None:
        key = _key(algorithm, D, params)
        self._entries[key] = value
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps({"key": key, "value": value, "timestamp": time.time()}) + "\n")

    def __len__(self):
        return len(self._entries)
