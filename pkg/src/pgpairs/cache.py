"""Disk cache for Schubert multiplication tables.

One versioned JSON file per (n, engine): entries are triples
(lam, mu, [(nu, coefficient), ...]).  Files are human-inspectable and
diff-friendly; a bump of ENGINE_VERSION invalidates them wholesale.
"""

from __future__ import annotations

import json
import os

from .schubert import ChowRing

CACHE_SCHEMA_VERSION = 1
ENGINE_VERSION = 1


def cache_path(directory: str, n: int, engine: str) -> str:
    return os.path.join(directory, f"schubert_table_n{n}_{engine}_v{ENGINE_VERSION}.json")


def save_table(ring: ChowRing, directory: str) -> str:
    os.makedirs(directory, exist_ok=True)
    payload = {
        "schema_version": CACHE_SCHEMA_VERSION,
        "engine_version": ENGINE_VERSION,
        "n": ring.n,
        "engine": ring.engine,
        "entries": ring.table_entries(),
    }
    path = cache_path(directory, ring.n, ring.engine)
    with open(path, "w") as fh:
        json.dump(payload, fh, separators=(",", ":"), sort_keys=True)
        fh.write("\n")
    return path


def load_table(ring: ChowRing, directory: str) -> bool:
    """Preload a ring's table from disk; stale or mismatched files are ignored."""
    path = cache_path(directory, ring.n, ring.engine)
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, ValueError):
        return False
    if (
        payload.get("schema_version") != CACHE_SCHEMA_VERSION
        or payload.get("engine_version") != ENGINE_VERSION
        or payload.get("n") != ring.n
        or payload.get("engine") != ring.engine
    ):
        return False
    ring.preload(payload["entries"])
    return True
