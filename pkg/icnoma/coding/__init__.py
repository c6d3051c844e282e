from icnoma.coding.Receiver import Receiver
from icnoma.coding.IndexCodingProblem import IndexCodingProblem
from icnoma.coding.LinearIndexCode import LinearIndexCode
from icnoma.coding.search import (
    is_valid_code,
    length_lower_bound,
    min_code_length,
    optimal_code,
    enumerate_optimal_codes,
)
from icnoma.coding.reduction import directly_satisfied_wants, reduce_problem
