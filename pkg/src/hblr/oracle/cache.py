"""Append-only response cache keyed by request digest."""

from __future__ import annotations

import hashlib
import threading
from pathlib import Path


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def _unescape(text: str) -> str:
    out: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            nxt = text[i + 1]
            if nxt == "n":
                out.append("\n")
            elif nxt == "t":
                out.append("\t")
            elif nxt == "\\":
                out.append("\\")
            else:
                out.append(nxt)
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


class ResponseCache:
    """In-memory cache with optional append-only file persistence.

    File records are `key<TAB>digest<TAB>body` with tabs/newlines escaped.
    """

    def __init__(self, path: str | Path | None = None):
        self._lock = threading.Lock()
        self._entries: dict[str, str] = {}
        self._path = Path(path) if path is not None else None
        if self._path is not None and self._path.exists():
            self._load()

    def _load(self) -> None:
        assert self._path is not None
        for line in self._path.read_text(encoding="utf-8").splitlines():
            if not line:
                continue
            parts = line.split("\t", 2)
            if len(parts) != 3:
                continue
            key, _digest, body = parts
            self._entries[key] = _unescape(body)

    def get(self, key: str) -> str | None:
        with self._lock:
            return self._entries.get(key)

    def put(self, key: str, raw: str) -> None:
        with self._lock:
            if key in self._entries:
                return
            self._entries[key] = raw
            if self._path is not None:
                digest = hashlib.sha256(raw.encode("utf-8")).hexdigest()
                record = f"{key}\t{digest}\t{_escape(raw)}\n"
                with self._path.open("a", encoding="utf-8") as fh:
                    fh.write(record)

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)
