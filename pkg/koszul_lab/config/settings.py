"""
Configuration for the koszul_lab engine.

Environment Variables:
- KOSZUL_PRIME: Prime used for the F_p fast path (default: 2147483647).
                Must be ≡ 1 (mod 3) so that F_p contains a cube root of unity.
- KOSZUL_MAX_RULES: Runaway guard for completion (default: 1000)
- KOSZUL_CAP: Default completion degree cap (default: 8)
- KOSZUL_NMAX: Default top degree for dimension and Koszul checks (default: 5)
- KOSZUL_NMAX_LIMIT: Largest n_max the koszul command accepts (default: 7)
- KOSZUL_HILBERT_TERMS: Number of Hilbert coefficients to count (default: 12)
- KOSZUL_LOGS_DIR: Directory for run logs (default: "logs")
- KOSZUL_DATA_DIR: Base directory for relative input paths (default: unset)

Example:
    export KOSZUL_PRIME=1000003
    export KOSZUL_NMAX=4
    # koszul and verify-paper now stop at degree 4 unless --nmax is given
"""

from pathlib import Path
from dataclasses import dataclass
from typing import Optional

from sympy import isprime


MERSENNE_31 = 2147483647


@dataclass
class EngineConfig:
    """Configuration for the algebra engine and the CLI."""

    # Fields
    default_prime: int = MERSENNE_31

    # Completion
    max_rules: int = 1000  # Abort completion past this many rules
    default_cap: int = 8
    family_min_support: int = 3  # Consecutive exponents needed to conjecture a family

    # Dimensions and certificates
    default_nmax: int = 5
    nmax_limit: int = 7
    hilbert_terms: int = 12

    # Paths
    logs_dir: Path = Path("logs")
    data_dir: Optional[Path] = None

    def __post_init__(self):
        """Check the prime supports cyclotomic reduction."""
        if not isprime(self.default_prime) or self.default_prime % 3 != 1:
            raise ValueError(
                f"default_prime must be a prime ≡ 1 (mod 3), got {self.default_prime}"
            )
        if self.default_cap < 2:
            raise ValueError(f"default_cap must be at least 2, got {self.default_cap}")

    @classmethod
    def from_env(cls) -> 'EngineConfig':
        """Load config from environment variables."""
        import os

        data_dir = os.getenv('KOSZUL_DATA_DIR')
        return cls(
            default_prime=int(os.getenv('KOSZUL_PRIME', str(MERSENNE_31))),
            max_rules=int(os.getenv('KOSZUL_MAX_RULES', '1000')),
            default_cap=int(os.getenv('KOSZUL_CAP', '8')),
            default_nmax=int(os.getenv('KOSZUL_NMAX', '5')),
            nmax_limit=int(os.getenv('KOSZUL_NMAX_LIMIT', '7')),
            hilbert_terms=int(os.getenv('KOSZUL_HILBERT_TERMS', '12')),
            logs_dir=Path(os.getenv('KOSZUL_LOGS_DIR', 'logs')),
            data_dir=Path(data_dir) if data_dir else None,
        )


# Default configuration
DEFAULT_CONFIG = EngineConfig()
