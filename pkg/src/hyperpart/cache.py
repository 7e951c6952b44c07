"""Append-only JSON-lines result cache, one file per count family."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

from filelock import FileLock

from . import __version__

ENV_VAR = "HYPERPART_CACHE_DIR"


class CacheConflict(RuntimeError):
    pass


@dataclass(frozen=True)
class CacheRecord:
    kind: str
    d: int
    index: int | list[int]
    value: str
    engine_version: str
    created_at: str


def default_cache_dir() -> Path:
    if os.environ.get(ENV_VAR):
        return Path(os.environ[ENV_VAR])
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "hyperpart"


def _key(d: int, index) -> tuple:
    return (d, tuple(index) if isinstance(index, (list, tuple)) else index)


class ResultCache:
    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self._loaded: dict[str, dict[tuple, CacheRecord]] = {}

    def _path(self, kind: str) -> Path:
        return self.directory / f"{kind}.jsonl"

    def _records(self, kind: str) -> dict[tuple, CacheRecord]:
        if kind not in self._loaded:
            records = {}
            path = self._path(kind)
            if path.exists():
                for line in path.read_text().splitlines():
                    if line.strip():
                        rec = CacheRecord(**json.loads(line))
                        records[_key(rec.d, rec.index)] = rec
            self._loaded[kind] = records
        return self._loaded[kind]

    def get(self, kind: str, d: int, index) -> int | None:
        rec = self._records(kind).get(_key(d, index))
        return None if rec is None else int(rec.value)

    def put(self, kind: str, d: int, index, value: int) -> None:
        """Record a value; an existing record must agree exactly."""
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(kind)
        with FileLock(str(path) + ".lock"):
            self._loaded.pop(kind, None)
            existing = self._records(kind).get(_key(d, index))
            if existing is not None:
                if int(existing.value) != value:
                    raise CacheConflict(
                        f"{kind} d={d} index={index}: cached {existing.value}, computed {value}"
                    )
                return
            rec = CacheRecord(
                kind=kind,
                d=d,
                index=list(index) if isinstance(index, (list, tuple)) else index,
                value=str(value),
                engine_version=__version__,
                created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            )
            with path.open("a") as fh:
                fh.write(json.dumps(asdict(rec), sort_keys=True) + "\n")
            self._records(kind)[_key(d, index)] = rec
