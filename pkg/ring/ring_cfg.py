"""Ring verification configuration."""

# Checks run by verify_space, in report order
CHECKS = (
    "grading",
    "identity",
    "commutativity",
    "associativity",
    "pieri",
    "duality",        # type A only
    "generation",
    "pieri_identity",
)

# Violations kept in full in a report; the rest are only counted
MAX_VIOLATION_RECORDS = 50

# Progress line every N associativity triples
PROGRESS_EVERY = 2000

# Multiplier style in text output: "2*s(3,1)"
TERM_SYMBOL = "s"
