"""Structured pass/fail records for every lemma- and theorem-level check.

Reports serialize to JSON lines with the fixed schema
{"check", "params", "status", "witness", "millis"}; a FAIL always carries
a witness and a SKIPPED-CAP always names the violated cap.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field

from .config import CapExceeded

__all__ = ["VerificationReport", "run_check", "table_hash"]

PASS = "PASS"
FAIL = "FAIL"
SKIPPED_CAP = "SKIPPED-CAP"


@dataclass
class VerificationReport:
    check: str
    params: dict
    status: str
    witness: object = None
    millis: int = 0
    hashes: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError("FAIL report must carry a witness")
        if self.status == SKIPPED_CAP and not (
                isinstance(self.witness, dict) and "cap" in self.witness):
            raise ValueError("SKIPPED-CAP report must name the violated cap")

    @property
    def ok(self):
        return self.status == PASS

    def to_json(self):
        payload = {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "witness": _jsonable(self.witness),
            "millis": self.millis,
        }
        if self.hashes:
            payload["hashes"] = self.hashes
        return json.dumps(payload, sort_keys=True)

    def human(self):
        extra = "" if self.witness is None else f"  {_jsonable(self.witness)}"
        return f"[{self.status}] {self.check} {self.params} ({self.millis} ms){extra}"


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(x) for x in obj]
    return repr(obj)


def run_check(check_id, params, fn):
    """Run fn() -> (ok, witness) under timing, mapping caps to SKIPPED-CAP."""
    t0 = time.monotonic()
    try:
        ok, witness = fn()
        status = PASS if ok else FAIL
        if not ok and witness is None:
            witness = {"reason": "check returned false without detail"}
    except CapExceeded as exc:
        status = SKIPPED_CAP
        witness = {"cap": exc.cap_name, "cap_value": exc.cap_value,
                   "needed": exc.needed, "computation": exc.computation}
    millis = int((time.monotonic() - t0) * 1000)
    return VerificationReport(check=check_id, params=params, status=status,
                              witness=witness, millis=millis)


def table_hash(rows):
    """Stable hash of an iterable of stringable rows (for artifact hashes)."""
    h = hashlib.sha256()
    for r in rows:
        h.update(str(r).encode())
        h.update(b"\n")
    return h.hexdigest()[:16]
