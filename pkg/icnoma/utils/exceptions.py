from typing import List, Optional, Sequence, Tuple


class DimensionMismatch(ValueError):
    def __init__(self, what: str, expected: int, got: int):
        self.what = what
        self.expected = expected
        self.got = got

    def __str__(self):
        return f"Dimension mismatch in {self.what}: expected width {self.expected}, got {self.got}"


class InvalidBitVector(ValueError):
    def __init__(self, bits, reason: str):
        self.bits = bits
        self.reason = reason

    def __str__(self):
        return f"Invalid bit vector {self.bits}: {self.reason}"


class LinearlyDependentCode(ValueError):
    def __init__(self, rows: Sequence, rank: int):
        self.rows = rows
        self.rank = rank

    def __str__(self):
        return (
            f"Code rows must be linearly independent: {len(self.rows)} rows span only rank {self.rank}. "
            f"Rows: {[str(r) for r in self.rows]}"
        )


class SearchExhausted(RuntimeError):
    def __init__(self, n: int, length: int, cap: Optional[int], max_messages: int, max_length: int):
        self.n = n
        self.length = length
        self.cap = cap
        self.max_messages = max_messages
        self.max_length = max_length

    def __str__(self):
        return (
            f"Search exhausted at n={self.n}, l={self.length} (cap={self.cap}); limits are "
            f"n <= {self.max_messages} and l <= {self.max_length}. Raise them with "
            f"`icnoma.update_config({{'search': {{...}}}})`"
        )


class InvalidChannel(ValueError):
    def __init__(self, field: str, value, requirement: str):
        self.field = field
        self.value = value
        self.requirement = requirement

    def __str__(self):
        return f"Invalid channel parameter `{self.field}`={self.value}: {self.requirement}"


class CaseError(ValueError):
    def __init__(self, case, operation: str):
        self.case = case
        self.operation = operation

    def __str__(self):
        return f"`{self.operation}` is not defined for scheme case {self.case}"


class QosInfeasible(ValueError):
    def __init__(self, rate: float, alpha: float, denominator: float):
        self.rate = rate
        self.alpha = alpha
        self.denominator = denominator

    def __str__(self):
        return (
            f"QoS infeasible at alpha={self.alpha}: far user cannot reach R={self.rate} under any power "
            f"(1 - alpha - alpha(2^R - 1) = {self.denominator:.6g} <= 0)"
        )


class ScheduleMismatch(ValueError):
    def __init__(self, reason: str):
        self.reason = reason

    def __str__(self):
        return f"Schedule does not match problem: {self.reason}"


class ScenarioValidationError(ValueError):
    def __init__(self, field: str, message: str, user: Optional[int] = None, value=None):
        self.field = field
        self.message = message
        self.user = user
        self.value = value

    def __str__(self):
        where = f"user {self.user}, field `{self.field}`" if self.user is not None else f"field `{self.field}`"
        value = f" (got {self.value!r})" if self.value is not None else ""
        return f"Invalid scenario at {where}: {self.message}{value}"


class ReproductionMismatch(Exception):
    def __init__(self, target: str, cells: List[Tuple[str, str, object, object]]):
        self.target = target
        self.cells = cells

    def __str__(self):
        str_ = f"Reproduction of `{self.target}` differs from bundled expectations in {len(self.cells)} cell(s)"
        for row, column, expected, got in self.cells:
            str_ += "\n" + f"  [{row}] {column}: expected {expected}, got {got}"
        return str_


class NonOptimalCode(ValueError):
    def __init__(self, code, expected_length: int, reason: str):
        self.code = code
        self.expected_length = expected_length
        self.reason = reason

    def __str__(self):
        return f"Code {self.code} is not an optimal code of length {self.expected_length}: {self.reason}"
