class _Report(dict):
    """Flat mapping of named quantities, readable as attributes"""

    FIELDS = ()

    def __init__(self, **kwargs):
        unknown = set(kwargs).difference(self.FIELDS)
        if unknown:
            raise KeyError(f"{self.__class__.__name__} has no fields {sorted(unknown)}")
        super().__init__({field: kwargs.get(field) for field in self.FIELDS})

    def __getattr__(self, item):
        try:
            return self[item]
        except KeyError:
            raise AttributeError(item)

    def __str__(self):
        items = ", ".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}" for k, v in self.items())
        return f"{self.__class__.__name__}<{items}>"


class RateReport(_Report):
    FIELDS = ("r_ic", "r_f_noma", "r_n_noma", "r_sum_noma", "r_ic_part", "r_avg")


class PowerReport(_Report):
    FIELDS = ("zeta", "zeta1", "p_a", "p_b2", "p_b3", "saving", "p_avg")


class QosReport(_Report):
    FIELDS = ("r_target", "p_ic", "p_cn", "p_cf", "p_c", "p_d2", "p_d3", "total_ic", "total_icnoma")


class AnalysisReport(_Report):
    """
    Keys:
        rate: RateReport
        power: PowerReport
        qos: QosReport, or None without a target rate
        qos_error: message when the target rate is infeasible at this alpha
    """

    FIELDS = ("rate", "power", "qos", "qos_error")
