import logging
import sys
import traceback
from pathlib import Path
from typing import Optional, Union

from termcolor import cprint

from icnoma.utils.exceptions import (
    DimensionMismatch,
    InvalidBitVector,
    InvalidChannel,
    LinearlyDependentCode,
    NonOptimalCode,
    QosInfeasible,
    ReproductionMismatch,
    ScenarioValidationError,
    SearchExhausted,
)


class ExceptionHandler:
    """Maps command failures to exit codes and reports them on stderr"""

    _LOG = logging.getLogger("ExceptionHandler")

    VALIDATION = 1
    SEARCH_EXHAUSTED = 2
    REPRODUCTION_MISMATCH = 3

    _EXIT_CODES = {
        SearchExhausted: SEARCH_EXHAUSTED,
        ReproductionMismatch: REPRODUCTION_MISMATCH,
        ScenarioValidationError: VALIDATION,
        DimensionMismatch: VALIDATION,
        InvalidBitVector: VALIDATION,
        InvalidChannel: VALIDATION,
        LinearlyDependentCode: VALIDATION,
        NonOptimalCode: VALIDATION,
        QosInfeasible: VALIDATION,
    }

    @classmethod
    def exit_code(cls, e: Exception) -> int:
        for exc_type, code in cls._EXIT_CODES.items():
            if isinstance(e, exc_type):
                return code
        return cls.VALIDATION

    @classmethod
    def handle(cls, e: Exception, log_path: Optional[Union[str, Path]] = None) -> int:
        """
        Prints `e` on stderr and, when `log_path` is given, writes its
        traceback there.

        Returns:
            code: process exit code for `e`
        """
        code = cls.exit_code(e)
        cprint(f"{type(e).__name__}: {e}", "red", file=sys.stderr)
        if log_path is not None:
            cls._handle_write(e, Path(log_path))
        return code

    @classmethod
    def _handle_write(cls, e: Exception, log_path: Path):
        try:
            cls._write_log(e, log_path)
            cls._LOG.info(f"Wrote log to {log_path}")
        except Exception as write_e:
            cls._LOG.warning(f"{type(write_e).__name__} encountered writing {log_path}")

    @staticmethod
    def _write_log(e: Exception, log_path: Path):
        with open(str(log_path), "w") as f:
            f.write("Traceback (most recent call last):\n")
            traceback.print_tb(e.__traceback__, file=f)
            f.write(f"\n{type(e).__name__}: {str(e)}\n")
