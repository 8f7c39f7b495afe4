"""Exact 600-cell ray system: n-gon census, parity proofs and universality scans."""

from ._core import (
    __version__,
    bases,
    builtin_sets,
    census,
    count_ngons,
    parity_splits,
    rays,
    report,
    scan,
    verify_parity,
    violation_value,
)

__all__ = [
    "__version__",
    "bases",
    "builtin_sets",
    "census",
    "count_ngons",
    "parity_splits",
    "rays",
    "report",
    "scan",
    "verify_parity",
    "violation_value",
]
