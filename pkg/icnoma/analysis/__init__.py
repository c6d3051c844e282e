from icnoma.analysis.reports import RateReport, PowerReport, QosReport, AnalysisReport
from icnoma.analysis.rate import rate_ic, rate_noma, rate_noma_closed_form, rate_gain, rate_ic_part, avg_rate
from icnoma.analysis.power import (
    zeta,
    zeta1,
    matched_power,
    matched_power_near,
    power_saving,
    avg_power,
)
from icnoma.analysis.qos import qos_powers, conventional_qos_powers, qos_totals
from icnoma.analysis.analyze import analyze_scheme, sweep_table, SWEEP_COLUMNS
