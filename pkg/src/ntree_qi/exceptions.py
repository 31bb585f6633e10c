"""
Custom Exceptions for ntree-qi.

This module defines the exception hierarchy used throughout the package.
"""

from enum import Enum
from typing import Any, Dict, List, Optional


class NTreeError(Exception):
    """Base exception for all ntree-qi errors."""
    pass


class ComplexFormatError(NTreeError):
    """Malformed simplicial complex input (JSON or structure)."""
    pass


class GraphFormatError(NTreeError):
    """Malformed colored graph input (JSON or structure)."""
    pass


class TnViolation(Enum):
    """Reasons a complex fails the T_n membership test."""
    DISCONNECTED = "DISCONNECTED"
    CYCLIC = "CYCLIC"
    UNCOLORABLE = "UNCOLORABLE"
    PINCHED = "PINCHED"


class NotInTnError(NTreeError):
    """A structurally valid complex that is not a member of T_n."""

    def __init__(
        self,
        kind: TnViolation,
        message: str,
        certificate: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(f"{kind.value}: {message}")
        self.kind = kind
        self.certificate = certificate or {}

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready rejection certificate."""
        return {
            "valid": False,
            "violation": self.kind.value,
            "message": str(self),
            "certificate": self.certificate,
        }


class InvalidGraphError(NTreeError):
    """A colored graph that violates the P/F class constraints."""

    def __init__(self, violations: List[Any]):
        self.violations = list(violations)
        summary = "; ".join(str(v) for v in self.violations) or "invalid graph"
        super().__init__(summary)


class WeakCoveringError(NTreeError):
    """A vertex map that cannot even be checked (not total, unknown targets)."""
    pass


class ClassificationError(NTreeError):
    """Error building Γ(K) or comparing quasi-isometry classes."""
    pass


class UnsatisfiableOptionsError(NTreeError):
    """Random generation options that no complex can meet."""
    pass


class StorageError(NTreeError):
    """Error related to writing census dumps."""
    pass
