"""Disk cache of parameter reports, keyed by family, params, and parameter.

A hit returns the original serialized record byte for byte; records written
by a different tool version are ignored.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from . import __version__

DEFAULT_CACHE_DIR = ".cube-symmetry-cache"


def cache_dir(override: str | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get("CUBE_SYM_CACHE")
    if env:
        return Path(env)
    return Path(DEFAULT_CACHE_DIR)


class ResultCache:
    def __init__(self, directory: str | Path | None = None, enabled: bool = True):
        self.directory = cache_dir(str(directory) if directory else None)
        self.enabled = enabled

    def _path(self, family: str, params: dict, parameter: str) -> Path:
        bits = [family] + [f"{k}{params[k]}" for k in sorted(params)] + [parameter]
        name = "-".join(str(b).replace("/", "_") for b in bits) + ".json"
        return self.directory / name

    def get(self, family: str, params: dict, parameter: str) -> str | None:
        """The stored serialized record, or None on miss/version mismatch."""
        if not self.enabled:
            return None
        path = self._path(family, params, parameter)
        if not path.exists():
            return None
        text = path.read_text(encoding="utf-8")
        try:
            record = json.loads(text)
        except json.JSONDecodeError:
            return None
        if record.get("tool_version") != __version__:
            return None
        return text

    def put(self, family: str, params: dict, parameter: str, record: dict) -> str:
        record = dict(record)
        record["tool_version"] = __version__
        text = json.dumps(record, sort_keys=True, indent=2)
        if self.enabled:
            self.directory.mkdir(parents=True, exist_ok=True)
            self._path(family, params, parameter).write_text(text, encoding="utf-8")
        return text
