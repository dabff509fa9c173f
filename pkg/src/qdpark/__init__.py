"""Computational algebra engine and verification harness for Scott-module
Brauer indecomposability over wreath products P wr S_n with P the Sylow
p-subgroup of the quadratic group Qd(p).

Submodules:
  linalg       exact GF(p) matrices and subspaces
  groups       generic finite groups, subgroup machinery, Sylow theory
  qd           Qd(p), its Sylow subgroup and the explicit coset table
  park         the wreath product P wr S_n and the embedding iota
  fusion       fusion systems by conjugation morphisms
  permrep      permutation modules, endomorphism algebras, Brauer quotients
  centralizer  structural centralizer solver in wreath products
  checks       lemma/theorem-level drivers and oracle crosschecks
  reports      JSON-line verification reports
  cli          the `verify` command
"""

from .config import Caps, CapExceeded, DEFAULT_CAPS
from .reports import VerificationReport, run_check

__all__ = ["Caps", "CapExceeded", "DEFAULT_CAPS", "VerificationReport",
           "run_check"]
__version__ = "0.1.0"
