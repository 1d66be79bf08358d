"""Rank-metric double circulant identification and signature schemes.

Thin wrapper around the native module; see the project README for the
parameter sets and file formats.
"""

from _rvdc import (  # noqa: F401
    RvdcError,
    gaussian_binomial,
    keygen,
    param_info,
    param_sets,
    rounds_for_security,
    security_report,
    selftest,
    sign,
    signature_scheme,
    size_model,
    verify,
)

__all__ = [
    "RvdcError",
    "gaussian_binomial",
    "keygen",
    "param_info",
    "param_sets",
    "rounds_for_security",
    "security_report",
    "selftest",
    "sign",
    "signature_scheme",
    "size_model",
    "verify",
]
