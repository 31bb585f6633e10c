"""
Configuration Module
Loads and validates settings from environment variables.
"""

import os
from dataclasses import dataclass
from typing import List, Optional

from dotenv import load_dotenv


# Valid output formats for graph-producing subcommands
VALID_FORMATS = ["json", "dot"]


@dataclass
class Config:
    """Application configuration from environment variables."""

    # Census parallelism
    census_jobs: int = 1

    # Output format for gamma/minimize when --format is not given
    output_format: str = "json"

    # Verbose logging (also writes ntree-qi.log)
    debug: bool = False

    # Census dump directory (None = no dump)
    dump_dir: Optional[str] = None

    # Count the single-simplex class in census totals
    include_abelian: bool = True

    @classmethod
    def from_env(cls) -> "Config":
        """
        Load configuration from environment variables.

        Environment Variables:
            NTQ_JOBS: Optional. Census worker processes (default: 1).
            NTQ_FORMAT: Optional. Default output format, json or dot (default: json).
            NTQ_DEBUG: Optional. Enable debug logging (default: false).
            NTQ_DUMP_DIR: Optional. Directory for census representative dumps.
            NTQ_ABELIAN: Optional. Include the Abelian class in census totals (default: true).

        Returns:
            Config instance with loaded values.

        Raises:
            ValueError: If NTQ_JOBS is not an integer.
        """
        load_dotenv()

        def parse_bool(value: str, default: bool) -> bool:
            if not value:
                return default
            return value.lower() in ("true", "1", "yes")

        try:
            jobs = int(os.environ.get("NTQ_JOBS", "1"))
        except ValueError as e:
            raise ValueError(f"NTQ_JOBS must be an integer: {e}") from e

        return cls(
            census_jobs=jobs,
            output_format=os.environ.get("NTQ_FORMAT", "json").lower(),
            debug=parse_bool(os.environ.get("NTQ_DEBUG", ""), False),
            dump_dir=os.environ.get("NTQ_DUMP_DIR") or None,
            include_abelian=parse_bool(os.environ.get("NTQ_ABELIAN", "true"), True),
        )

    def validate(self) -> List[str]:
        """
        Validate configuration values.

        Returns:
            List of warning messages (empty if no warnings).

        Raises:
            ValueError: If configuration values are invalid.
        """
        warnings = []

        if self.census_jobs <= 0:
            raise ValueError("NTQ_JOBS must be positive")

        cpus = os.cpu_count() or 1
        if self.census_jobs > cpus:
            warnings.append(
                f"NTQ_JOBS={self.census_jobs} exceeds the {cpus} available CPUs"
            )

        if self.output_format not in VALID_FORMATS:
            raise ValueError(
                f"NTQ_FORMAT must be one of: {', '.join(VALID_FORMATS)}. "
                f"Got: {self.output_format}"
            )

        return warnings
