"""
Ring package.

The Schubert-symbol ring of an ambient space:
- RingElement and the module-level ring operations
- SchubertRing: memoised structure constants and Pieri products
- verify_space: exhaustive identity checks returning a VerificationReport
"""

from .schubert_ring import (
    RingElement,
    SchubertRing,
    Violation,
    CheckResult,
    VerificationReport,
    basis_element,
    identity,
    get_ring,
    basis,
    structure_constant,
    multiply,
    pieri_multiply,
    pieri_identity_violations,
    verify_space,
    type_c_relation_violations,
    special_pieri_relation_violations,
)


__all__ = [
    # Elements
    "RingElement", "basis_element", "identity",
    # Ring
    "SchubertRing", "get_ring", "basis", "structure_constant", "multiply", "pieri_multiply",
    # Verification
    "Violation", "CheckResult", "VerificationReport", "verify_space",
    "pieri_identity_violations", "type_c_relation_violations", "special_pieri_relation_violations",
]
