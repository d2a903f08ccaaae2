"""Configuration for the Schubert structure-constant engine"""

import os
from typing import Annotated, List, Literal, Optional

from annotated_types import Ge
from pydantic import BaseModel


ENV_PREFIX = "SCHUBERT_"


class EngineConfig(BaseModel):
    """Configuration for the engine and its command line."""

    # Run logs: logs/runs/<MMDD-HHMMSS>-<subcommand>/run.json (+ *.jsonl details)
    log_dir: str = "logs/runs"
    write_run_log: bool = True

    # Output: human text or one JSON object per line
    output_format: Literal["text", "jsonl"] = "text"

    # Default convention for `coeff` (paper: shape λ∨/μ; standard: shape ν/λ)
    convention: Literal["paper", "standard"] = "paper"

    # Spaces checked by `verify` when --space is not given
    verify_spaces: List[str] = ["A:k=3,m=3", "B:n=4", "C:n=4"]
    # Caps k, m and n of the default verify spaces (None = no cap)
    verify_max_size: Optional[Annotated[int, Ge(1)]] = None

    # Largest p in counting-identity sweeps (None = m for type A, n otherwise)
    pieri_identity_max_p: Optional[Annotated[int, Ge(0)]] = None

    # Coefficients are treated as signed 64-bit values
    max_coefficient: Annotated[int, Ge(1)] = 2**63 - 1

    # Variables used by the P-polynomial oracle (None = |λ|+|μ|)
    oracle_p_variables: Optional[Annotated[int, Ge(1)]] = None

    @classmethod
    def from_env(cls, base: Optional["EngineConfig"] = None) -> "EngineConfig":
        """Overlay SCHUBERT_<FIELD> environment variables on a base config.

        List fields are separated by ';' (space literals contain commas).
        Empty values reset optional fields to None.
        """
        data = (base or cls()).model_dump()
        for name, field in cls.model_fields.items():
            raw = os.environ.get(ENV_PREFIX + name.upper())
            if raw is None:
                continue
            if field.annotation == List[str]:
                data[name] = [item.strip() for item in raw.split(";") if item.strip()]
            elif raw == "" and field.default is None:
                data[name] = None
            else:
                data[name] = raw
        return cls.model_validate(data)


# Default configuration instance
default_config = EngineConfig()
