"""Content-addressed disk cache for Hall numbers.

One JSONL file per (quiver content hash, q), one record per line:
{"quiver": <hash>, "q": q, "L": <canonical rep>, "M": ..., "N": ..., "g": g}
where the module fields hold the canonical representative in the
representation serialization format.  Writes go through a temp file
and an atomic rename; corrupt lines are discarded, never trusted.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile


def quiver_hash(quiver) -> str:
    return hashlib.sha256(quiver.content_key().encode()).hexdigest()[:16]


class HallCache:
    def __init__(self, directory: str, quiver, q: int):
        self.directory = directory
        self.qhash = quiver_hash(quiver)
        self.q = q
        self.path = os.path.join(directory, f"hall_{self.qhash}_q{q}.jsonl")
        self._data: dict[tuple[str, str, str], int] = {}
        self._reps: dict[str, str] = {}
        self._dirty = False
        self._load()

    def _load(self) -> None:
        if not os.path.exists(self.path):
            return
        try:
            with open(self.path) as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                        if rec.get("quiver") != self.qhash or rec.get("q") != self.q:
                            continue
                        key = (rec["L"], rec["M"], rec["N"])
                        self._data[key] = int(rec["g"])
                    except (ValueError, KeyError, TypeError):
                        continue  # corrupt record: recompute rather than trust
        except OSError:
            pass

    def get(self, L: str, M: str, N: str) -> int | None:
        return self._data.get((L, M, N))

    def put(self, L: str, M: str, N: str, g: int) -> None:
        key = (L, M, N)
        if self._data.get(key) == g:
            return
        self._data[key] = g
        self._dirty = True

    def flush(self) -> None:
        if not self._dirty:
            return
        os.makedirs(self.directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                for (L, M, N), g in sorted(self._data.items()):
                    rec = {"quiver": self.qhash, "q": self.q, "L": L, "M": M, "N": N, "g": g}
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")
            os.replace(tmp, self.path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
        self._dirty = False

    def __len__(self) -> int:
        return len(self._data)
