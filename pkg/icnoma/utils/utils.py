from collections.abc import Mapping
from copy import deepcopy
from typing import List, Sequence, Union

import pandas as pd


def update_recursive(dict_: dict, other: Mapping, inplace: bool = False) -> dict:
    """

    Args:
        dict_: `dict` which is to updated by other
        other: `dict` which is to be merged into `dict_`
        inplace: whether to update `dict_` inplace or make a copy

    Returns:
        dict_: recursively updated dict_
    """
    if not inplace:
        dict_ = deepcopy(dict_)
    for k, v in other.items():
        if isinstance(v, Mapping):
            dict_[k] = update_recursive(dict_.get(k, {}), v, inplace)
        else:
            dict_[k] = v
    return dict_


def parse_float_list(text: Union[str, Sequence[float]]) -> List[float]:
    """Parse "0.2,0.3" or "0.2 0.3" into floats; sequences pass through"""
    if not isinstance(text, str):
        return [float(x) for x in text]
    tokens = text.replace(",", " ").split()
    return [float(tok) for tok in tokens]


def frame_to_csv(df: pd.DataFrame, path=None, significant_digits: int = 12) -> str:
    """
    Locale-independent CSV with a header row. Writes to `path` when given
    and always returns the text.
    """
    text = df.to_csv(index=False, float_format=f"%.{significant_digits}g")
    if path is not None:
        with open(str(path), "w", newline="") as f:
            f.write(text)
    return text
