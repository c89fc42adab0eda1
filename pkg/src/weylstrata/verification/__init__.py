"""Cross-checks of every computed claim, with brute-force group models."""

from .checks import CheckReport, reports_json, run_all
from .oracle import OracleGroup, OracleSizeError, oracle_group

__all__ = ["CheckReport", "OracleGroup", "OracleSizeError", "oracle_group", "reports_json", "run_all"]
