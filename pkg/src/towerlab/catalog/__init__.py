"""Case catalog: parameterised families, instantiation, verification and scans."""

from .delta import DeltaData, DeltaError, cyclic_delta as delta_data, gorenstein_pq
from .families import BY_ID, ENTRIES, CaseEntry, families
from .instance import CaseInstance, InstanceError, Weight, instantiate, perturbations
from .scan import ScanResult, admissible, scan
from .verify import Check, VerificationReport, verify

__all__ = [
    "BY_ID",
    "ENTRIES",
    "CaseEntry",
    "CaseInstance",
    "Check",
    "DeltaData",
    "DeltaError",
    "InstanceError",
    "ScanResult",
    "VerificationReport",
    "Weight",
    "admissible",
    "delta_data",
    "families",
    "gorenstein_pq",
    "instantiate",
    "perturbations",
    "scan",
    "verify",
]
