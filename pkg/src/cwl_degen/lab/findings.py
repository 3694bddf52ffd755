"""Append-only log of violations and open-question counterexamples."""

import os
import threading

FINDINGS_ENV = "CWL_DEGEN_FINDINGS"


class FindingsLog:
    """One record per line: kind | ring | generators | order | location."""

    def __init__(self, path):
        self.path = path
        self._lock = threading.Lock()

    def record(self, kind: str, ideal, where: str) -> str:
        ring = ideal.ring
        gens = ", ".join(str(g) for g in ideal.generators) or "0"
        line = " | ".join([kind, ring.header(), gens, str(ring.order), where])
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
        return line


def default_log():
    path = os.environ.get(FINDINGS_ENV)
    return FindingsLog(path) if path else None
