"""Command-line configuration."""

# Run log file inside each run folder
RUN_LOG_NAME = "run.json"

# Run folder timestamp: <MMDD-HHMMSS>-<subcommand>
RUN_DIR_FORMAT = "%m%d-%H%M%S"

# Shifted oracle checks only pairs with |λ|+|μ| up to this weight (P-polynomials
# in |λ|+|μ| variables grow fast)
ORACLE_MAX_WEIGHT_SHIFTED = 8

# Violations printed per space in text mode
MAX_PRINTED_VIOLATIONS = 10
