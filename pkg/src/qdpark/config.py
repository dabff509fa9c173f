"""Resource caps and run configuration.

Every enumeration-bound computation takes its limits from a Caps value so
that cap violations surface as typed errors naming the computation that
hit them, never as silent truncation.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    closure_cap: int = 10_000_000      # max group order for element closure
    subgroup_order_cap: int = 512      # max |G| for full subgroup-lattice runs
    module_dim_cap: int = 512          # max dimension for definitional Brauer quotients
    tau_budget: int = 1_000_000        # max candidate top permutations in the wreath solver
    idempotent_scan_cap: int = 20      # max dim End for the exhaustive idempotent oracle


DEFAULT_CAPS = Caps()


class CapExceeded(RuntimeError):
    """An enumeration cap was exceeded; names the offending computation."""

    def __init__(self, computation: str, cap_name: str, cap_value: int, needed=None):
        self.computation = computation
        self.cap_name = cap_name
        self.cap_value = cap_value
        self.needed = needed
        msg = f"{computation}: {cap_name}={cap_value} exceeded"
        if needed is not None:
            msg += f" (needed {needed})"
        super().__init__(msg)
