from enum import Enum


class Case(Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    CASE_III = "CaseIII"
    DEGENERATE = "Degenerate"

    @classmethod
    def from_lengths(cls, l_f: int, l_n: int) -> "Case":
        if l_f == l_n:
            return cls.CASE_I
        return cls.CASE_II if l_f > l_n else cls.CASE_III

    def __str__(self):
        return self.value
